//! Formal characters: finitely supported integer-valued functions on a
//! weight lattice, i.e. elements of the group ring `Z[X(T)]`.

use std::collections::BTreeMap;
use std::fmt;

use serde::de::{self, Deserializer};
use serde::ser::Serializer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::roots::Weight;

/// Coordinate system the weights of a character are written in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Basis {
    /// Simple-root coordinates of the given rank.
    SimpleRoot(usize),
    /// The single fundamental-weight coordinate of `SL_2`, so `X(T) = Z`.
    Sl2,
}

impl Basis {
    pub fn dim(self) -> usize {
        match self {
            Basis::SimpleRoot(n) => n,
            Basis::Sl2 => 1,
        }
    }

    fn tag(self) -> String {
        match self {
            Basis::SimpleRoot(n) => format!("simple_root:{n}"),
            Basis::Sl2 => "sl2".to_string(),
        }
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.tag())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Character {
    basis: Basis,
    terms: BTreeMap<Weight, i64>,
}

impl Character {
    pub fn zero(basis: Basis) -> Self {
        Character {
            basis,
            terms: BTreeMap::new(),
        }
    }

    /// The unit `1 = e^0`.
    pub fn one(basis: Basis) -> Self {
        Self::monomial(basis, Weight::zero(basis.dim()), 1).expect("zero weight fits basis")
    }

    pub fn monomial(basis: Basis, w: Weight, mult: i64) -> Result<Self> {
        Self::from_terms(basis, [(w, mult)])
    }

    /// Sum of `mult * e^w`, merging repeated weights and dropping zeros.
    pub fn from_terms(basis: Basis, terms: impl IntoIterator<Item = (Weight, i64)>) -> Result<Self> {
        let mut out = Character::zero(basis);
        for (w, m) in terms {
            if w.rank() != basis.dim() {
                return Err(Error::DimensionMismatch {
                    expected: basis.dim(),
                    found: w.rank(),
                });
            }
            out.add_term(w, m)?;
        }
        Ok(out)
    }

    /// `SL_2` character from `(weight, multiplicity)` pairs.
    pub fn sl2(terms: impl IntoIterator<Item = (i64, i64)>) -> Result<Self> {
        Self::from_terms(Basis::Sl2, terms.into_iter().map(|(w, m)| (Weight(vec![w]), m)))
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &BTreeMap<Weight, i64> {
        &self.terms
    }

    pub fn coefficient(&self, w: &Weight) -> i64 {
        self.terms.get(w).copied().unwrap_or(0)
    }

    /// Coefficient of `q^n` in an `SL_2` character.
    pub fn sl2_coefficient(&self, n: i64) -> i64 {
        self.coefficient(&Weight(vec![n]))
    }

    /// Support and multiplicities of an `SL_2` character, ascending.
    pub fn sl2_terms(&self) -> Result<Vec<(i64, i64)>> {
        self.require_sl2()?;
        Ok(self.terms.iter().map(|(w, &m)| (w[0], m)).collect())
    }

    fn require_sl2(&self) -> Result<()> {
        match self.basis {
            Basis::Sl2 => Ok(()),
            b => Err(Error::WrongBasis(b.tag())),
        }
    }

    fn add_term(&mut self, w: Weight, m: i64) -> Result<()> {
        if m == 0 {
            return Ok(());
        }
        let updated = self
            .coefficient(&w)
            .checked_add(m)
            .ok_or(Error::Overflow)?;
        if updated == 0 {
            self.terms.remove(&w);
        } else {
            self.terms.insert(w, updated);
        }
        Ok(())
    }

    fn check_same(&self, other: &Character) -> Result<()> {
        if self.basis != other.basis {
            return Err(Error::BasisMismatch(self.basis.tag(), other.basis.tag()));
        }
        Ok(())
    }

    pub fn add(&self, other: &Character) -> Result<Character> {
        char_add(self, other)
    }

    pub fn mul(&self, other: &Character) -> Result<Character> {
        char_mul(self, other)
    }

    pub fn scale(&self, c: i64) -> Result<Character> {
        let mut out = Character::zero(self.basis);
        for (w, &m) in &self.terms {
            out.add_term(w.clone(), m.checked_mul(c).ok_or(Error::Overflow)?)?;
        }
        Ok(out)
    }

    pub fn neg(&self) -> Result<Character> {
        self.scale(-1)
    }
}

pub fn char_add(a: &Character, b: &Character) -> Result<Character> {
    a.check_same(b)?;
    let mut out = a.clone();
    for (w, &m) in &b.terms {
        out.add_term(w.clone(), m)?;
    }
    Ok(out)
}

/// Convolution product.
pub fn char_mul(a: &Character, b: &Character) -> Result<Character> {
    a.check_same(b)?;
    let mut acc: BTreeMap<Weight, i64> = BTreeMap::new();
    for (u, &x) in &a.terms {
        for (v, &y) in &b.terms {
            let w = u.checked_add(v).ok_or(Error::Overflow)?;
            let prod = x.checked_mul(y).ok_or(Error::Overflow)?;
            let slot = acc.entry(w).or_insert(0);
            *slot = slot.checked_add(prod).ok_or(Error::Overflow)?;
        }
    }
    acc.retain(|_, m| *m != 0);
    Ok(Character {
        basis: a.basis,
        terms: acc,
    })
}

/// Character of the `r`-th Frobenius twist: every weight is scaled by
/// `p^r`, multiplicities are unchanged.
pub fn frobenius_twist(a: &Character, r: u32, p: u64) -> Result<Character> {
    let factor = i64::try_from(p)
        .ok()
        .and_then(|p| p.checked_pow(r))
        .ok_or(Error::Overflow)?;
    let mut terms = BTreeMap::new();
    for (w, &m) in &a.terms {
        let scaled = w
            .iter()
            .map(|c| c.checked_mul(factor))
            .collect::<Option<Vec<_>>>()
            .ok_or(Error::Overflow)?;
        terms.insert(Weight(scaled), m);
    }
    Ok(Character {
        basis: a.basis,
        terms,
    })
}

/// Evaluation at the identity: the sum of all multiplicities.
pub fn dim_of(a: &Character) -> Result<i64> {
    a.terms
        .values()
        .try_fold(0i64, |acc, &m| acc.checked_add(m))
        .ok_or(Error::Overflow)
}

/// Invariance under the nontrivial Weyl group element of `SL_2`.
pub fn is_rank1_symmetric(a: &Character) -> Result<bool> {
    a.require_sl2()?;
    Ok(a
        .terms
        .iter()
        .all(|(w, &m)| a.sl2_coefficient(-w[0]) == m))
}

impl fmt::Display for Character {
    /// Laurent-polynomial notation in `q` for `SL_2`, `e^(..)` otherwise.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (w, &m) in self.terms.iter().rev() {
            let sign = if m < 0 { "-" } else { "+" };
            if first {
                if m < 0 {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let abs = m.unsigned_abs();
            let is_unit = w.iter().all(|&c| c == 0);
            if abs != 1 || is_unit {
                write!(f, "{abs}")?;
            }
            if is_unit {
                continue;
            }
            match self.basis {
                Basis::Sl2 if w[0] == 1 => write!(f, "q")?,
                Basis::Sl2 => write!(f, "q^{}", w[0])?,
                Basis::SimpleRoot(_) => write!(f, "e^{w}")?,
            }
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct CharacterRepr {
    basis: String,
    terms: Vec<(serde_json::Value, i64)>,
}

impl Serialize for Character {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let terms = self
            .terms
            .iter()
            .map(|(w, &m)| {
                let key = match self.basis {
                    Basis::Sl2 => serde_json::Value::from(w[0]),
                    Basis::SimpleRoot(_) => serde_json::Value::from(w.0.clone()),
                };
                (key, m)
            })
            .collect();
        CharacterRepr {
            basis: self.basis.tag(),
            terms,
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Character {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let repr = CharacterRepr::deserialize(deserializer)?;
        let basis = if repr.basis == "sl2" {
            Basis::Sl2
        } else if let Some(n) = repr.basis.strip_prefix("simple_root:") {
            Basis::SimpleRoot(n.parse().map_err(de::Error::custom)?)
        } else {
            return Err(de::Error::custom(format!("unknown basis `{}`", repr.basis)));
        };
        let mut terms = Vec::with_capacity(repr.terms.len());
        for (key, m) in repr.terms {
            let w = match basis {
                Basis::Sl2 => vec![key
                    .as_i64()
                    .ok_or_else(|| de::Error::custom("sl2 weight must be an integer"))?],
                Basis::SimpleRoot(_) => {
                    serde_json::from_value::<Vec<i64>>(key).map_err(de::Error::custom)?
                }
            };
            terms.push((Weight(w), m));
        }
        Character::from_terms(basis, terms).map_err(de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(terms: &[(i64, i64)]) -> Character {
        Character::sl2(terms.iter().copied()).unwrap()
    }

    #[test]
    fn addition_examples() {
        let a = q(&[(1, 1), (-1, 1)]);
        assert!(char_add(&a, &a.neg().unwrap()).unwrap().is_zero());
        let x = q(&[(1, 1)]);
        assert_eq!(char_add(&x, &x).unwrap(), q(&[(1, 2)]));
        let b = q(&[(2, 1), (-2, 1)]);
        assert_eq!(
            char_add(&b, &q(&[(0, 2)])).unwrap(),
            q(&[(2, 1), (0, 2), (-2, 1)])
        );
    }

    #[test]
    fn multiplication_examples() {
        let l1 = q(&[(1, 1), (-1, 1)]);
        assert_eq!(char_mul(&l1, &l1).unwrap(), q(&[(2, 1), (0, 2), (-2, 1)]));
        assert_eq!(char_mul(&l1, &Character::one(Basis::Sl2)).unwrap(), l1);
        let l2 = q(&[(2, 1), (-2, 1)]);
        assert_eq!(
            char_mul(&l1, &l2).unwrap(),
            q(&[(3, 1), (1, 1), (-1, 1), (-3, 1)])
        );
    }

    #[test]
    fn twist_examples() {
        let l1 = q(&[(1, 1), (-1, 1)]);
        assert_eq!(frobenius_twist(&l1, 1, 2).unwrap(), q(&[(2, 1), (-2, 1)]));
        assert_eq!(frobenius_twist(&l1, 2, 2).unwrap(), q(&[(4, 1), (-4, 1)]));
        let one = Character::one(Basis::Sl2);
        assert_eq!(frobenius_twist(&one, 3, 5).unwrap(), one);
        assert_eq!(frobenius_twist(&l1, 70, 2), Err(Error::Overflow));
    }

    #[test]
    fn dim_and_symmetry_examples() {
        assert_eq!(dim_of(&q(&[(1, 1), (-1, 1)])).unwrap(), 2);
        assert_eq!(dim_of(&Character::zero(Basis::Sl2)).unwrap(), 0);
        assert_eq!(dim_of(&q(&[(2, 1), (0, 2), (-2, 1)])).unwrap(), 4);
        assert!(is_rank1_symmetric(&q(&[(1, 1), (-1, 1)])).unwrap());
        assert!(!is_rank1_symmetric(&q(&[(1, 1)])).unwrap());
        assert!(is_rank1_symmetric(&q(&[(3, 1), (1, 1), (-1, 1), (-3, 1)])).unwrap());
        let r = Character::one(Basis::SimpleRoot(2));
        assert!(matches!(is_rank1_symmetric(&r), Err(Error::WrongBasis(_))));
    }

    #[test]
    fn basis_mismatch_and_dimension() {
        let a = Character::one(Basis::Sl2);
        let b = Character::one(Basis::SimpleRoot(1));
        assert!(matches!(char_add(&a, &b), Err(Error::BasisMismatch(..))));
        assert!(matches!(char_mul(&a, &b), Err(Error::BasisMismatch(..))));
        assert!(matches!(
            Character::monomial(Basis::SimpleRoot(2), Weight(vec![1]), 1),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn overflow_is_reported() {
        let big = q(&[(0, i64::MAX)]);
        assert_eq!(char_add(&big, &big), Err(Error::Overflow));
        assert_eq!(char_mul(&big, &q(&[(0, 2)])), Err(Error::Overflow));
    }

    #[test]
    fn display() {
        assert_eq!(q(&[(1, 1), (-1, 1)]).to_string(), "q + q^-1");
        assert_eq!(q(&[(2, 1), (0, 2), (-2, -1)]).to_string(), "q^2 + 2 - q^-2");
        assert_eq!(Character::zero(Basis::Sl2).to_string(), "0");
    }

    #[test]
    fn json_shape() {
        let c = q(&[(1, 1), (-1, 1)]);
        let json = serde_json::to_string(&c).unwrap();
        assert_eq!(json, r#"{"basis":"sl2","terms":[[-1,1],[1,1]]}"#);
        let r = Character::from_terms(
            Basis::SimpleRoot(2),
            [(Weight(vec![1, 0]), 2), (Weight(vec![0, 1]), -1)],
        )
        .unwrap();
        let json = serde_json::to_string(&r).unwrap();
        assert_eq!(json, r#"{"basis":"simple_root:2","terms":[[[0,1],-1],[[1,0],2]]}"#);
        assert_eq!(serde_json::from_str::<Character>(&json).unwrap(), r);
        assert!(serde_json::from_str::<Character>(r#"{"basis":"x","terms":[]}"#).is_err());
    }

    fn arb_char() -> impl Strategy<Value = Character> {
        proptest::collection::vec((-6i64..=6, -4i64..=4), 0..6).prop_map(|t| q(&t))
    }

    fn arb_root_char() -> impl Strategy<Value = Character> {
        proptest::collection::vec((proptest::collection::vec(-3i64..=3, 2), -3i64..=3), 0..5)
            .prop_map(|t| {
                Character::from_terms(Basis::SimpleRoot(2), t.into_iter().map(|(w, m)| (Weight(w), m)))
                    .unwrap()
            })
    }

    proptest! {
        #[test]
        fn ring_axioms(a in arb_char(), b in arb_char(), c in arb_char()) {
            let ab = char_mul(&a, &b).unwrap();
            prop_assert_eq!(&ab, &char_mul(&b, &a).unwrap());
            prop_assert_eq!(
                char_mul(&ab, &c).unwrap(),
                char_mul(&a, &char_mul(&b, &c).unwrap()).unwrap()
            );
            prop_assert_eq!(
                char_mul(&a, &char_add(&b, &c).unwrap()).unwrap(),
                char_add(&ab, &char_mul(&a, &c).unwrap()).unwrap()
            );
            prop_assert_eq!(dim_of(&ab).unwrap(), dim_of(&a).unwrap() * dim_of(&b).unwrap());
            prop_assert!(ab.terms().values().all(|&m| m != 0));
        }

        #[test]
        fn twist_is_multiplicative(a in arb_char(), b in arb_char(), r in 1u32..4, p in prop::sample::select(vec![2u64, 3, 5])) {
            let lhs = frobenius_twist(&char_mul(&a, &b).unwrap(), r, p).unwrap();
            let rhs = char_mul(&frobenius_twist(&a, r, p).unwrap(), &frobenius_twist(&b, r, p).unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn rank2_ring_axioms(a in arb_root_char(), b in arb_root_char()) {
            let ab = char_mul(&a, &b).unwrap();
            prop_assert_eq!(&ab, &char_mul(&b, &a).unwrap());
            prop_assert_eq!(dim_of(&ab).unwrap(), dim_of(&a).unwrap() * dim_of(&b).unwrap());
            let back: Character = serde_json::from_str(&serde_json::to_string(&ab).unwrap()).unwrap();
            prop_assert_eq!(back, ab);
        }
    }
}
