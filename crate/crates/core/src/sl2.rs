//! Modular characters of `SL_2` over a field of characteristic `p`.
//!
//! Weights are written in the fundamental-weight coordinate, so `X(T) = Z`
//! and characters are Laurent polynomials in `q`. Simple characters come from
//! Steinberg's tensor product theorem: if `lambda = sum a_i p^i` with
//! `0 <= a_i < p`, then `ch L(lambda) = prod_i ch L(a_i)^{(i)}` and each
//! restricted `L(a)` has the Weyl character `q^a + q^{a-2} + ... + q^{-a}`.
//!
//! Two independent routes produce simple characters: [`simple_char`] goes
//! through the character ring (products of Frobenius twists), while the
//! decomposition machinery expands base-`p` digits directly.

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::character::{char_add, char_mul, frobenius_twist, is_rank1_symmetric, Basis, Character};
use crate::error::{Error, Result};
use crate::roots::Weight;

/// An `SL_2` weight; dominant weights are the nonnegative ones.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Sl2Weight(pub i64);

impl Sl2Weight {
    pub fn is_dominant(self) -> bool {
        self.0 >= 0
    }
}

impl fmt::Display for Sl2Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

pub(crate) fn require_prime(p: u64) -> Result<()> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(Error::NotPrime(p))
    }
}

fn to_i64(x: u64) -> Result<i64> {
    i64::try_from(x).map_err(|_| Error::Overflow)
}

/// Little-endian base-`p` digits, empty for zero.
pub fn base_p_digits(lam: u64, p: u64) -> Result<Vec<u64>> {
    require_prime(p)?;
    let mut digits = Vec::new();
    let mut rest = lam;
    while rest > 0 {
        digits.push(rest % p);
        rest /= p;
    }
    Ok(digits)
}

/// Character of the Weyl module `V(lam)`, equal to that of `H^0(lam)`.
pub fn weyl_char(lam: u64) -> Character {
    let top = lam as i64;
    Character::sl2((0..=top).map(|j| (top - 2 * j, 1))).expect("sl2 basis")
}

/// `ch L(lam)` as a product of twisted restricted characters.
pub fn simple_char(lam: u64, p: u64) -> Result<Character> {
    let mut acc = Character::one(Basis::Sl2);
    for (i, &a) in base_p_digits(lam, p)?.iter().enumerate() {
        if a == 0 {
            continue;
        }
        let factor = match i {
            0 => weyl_char(a),
            _ => frobenius_twist(&weyl_char(a), i as u32, p)?,
        };
        acc = char_mul(&acc, &factor)?;
    }
    Ok(acc)
}

/// `dim L(lam) = prod (a_i + 1)` over base-`p` digits.
pub fn simple_dim(lam: u64, p: u64) -> Result<u64> {
    base_p_digits(lam, p)?
        .iter()
        .try_fold(1u64, |acc, &a| acc.checked_mul(a + 1))
        .ok_or(Error::Overflow)
}

/// Weights of `L(lam)` listed with repetition, by direct digit expansion:
/// `sum_i p^i w_i` with `w_i` in `{a_i, a_i - 2, ..., -a_i}`.
fn simple_weights(lam: u64, p: u64) -> Result<Vec<i64>> {
    let digits = base_p_digits(lam, p)?;
    let mut weights = vec![0i64];
    let mut scale: i64 = 1;
    for (i, &a) in digits.iter().enumerate() {
        if i > 0 {
            scale = scale.checked_mul(to_i64(p)?).ok_or(Error::Overflow)?;
        }
        if a == 0 {
            continue;
        }
        let a = a as i64;
        let mut next = Vec::with_capacity(weights.len() * (a as usize + 1));
        for &w in &weights {
            for j in 0..=a {
                next.push(w + scale * (a - 2 * j));
            }
        }
        weights = next;
    }
    Ok(weights)
}

/// Expansion of a symmetric character in the basis of simple characters.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SimpleDecomposition {
    pub p: u64,
    /// `lambda -> [c : L(lambda)]`, zero coefficients omitted.
    pub multiplicities: BTreeMap<u64, i64>,
    /// Every coefficient is nonnegative.
    pub genuine: bool,
}

impl SimpleDecomposition {
    fn from_map(p: u64, multiplicities: BTreeMap<u64, i64>) -> Self {
        let genuine = multiplicities.values().all(|&m| m >= 0);
        SimpleDecomposition {
            p,
            multiplicities,
            genuine,
        }
    }

    pub fn multiplicity(&self, lam: u64) -> i64 {
        self.multiplicities.get(&lam).copied().unwrap_or(0)
    }

    pub fn is_empty(&self) -> bool {
        self.multiplicities.is_empty()
    }

    /// `sum_lambda c_lambda ch L(lambda)`.
    pub fn reconstruct(&self) -> Result<Character> {
        let mut acc = Character::zero(Basis::Sl2);
        for (&lam, &m) in &self.multiplicities {
            acc = char_add(&acc, &simple_char(lam, self.p)?.scale(m)?)?;
        }
        Ok(acc)
    }

    /// Dimension of the virtual module.
    pub fn dim(&self) -> Result<i64> {
        self.multiplicities.iter().try_fold(0i64, |acc, (&lam, &m)| {
            let d = to_i64(simple_dim(lam, self.p)?)?;
            m.checked_mul(d)
                .and_then(|x| acc.checked_add(x))
                .ok_or(Error::Overflow)
        })
    }
}

/// Peel simple characters off the nonnegative half of a symmetric character,
/// always at the highest remaining weight. The simple characters are
/// unitriangular with respect to highest weight, so this is exact.
fn peel(mut half: BTreeMap<i64, i64>, p: u64) -> Result<BTreeMap<u64, i64>> {
    half.retain(|_, m| *m != 0);
    let mut out = BTreeMap::new();
    while let Some((&top, &c)) = half.last_key_value() {
        out.insert(top as u64, c);
        for w in simple_weights(top as u64, p)? {
            if w < 0 {
                continue;
            }
            let slot = half.entry(w).or_insert(0);
            *slot = slot.checked_sub(c).ok_or(Error::Overflow)?;
            if *slot == 0 {
                half.remove(&w);
            }
        }
    }
    Ok(out)
}

pub fn decompose_into_simples(c: &Character, p: u64) -> Result<SimpleDecomposition> {
    require_prime(p)?;
    if !is_rank1_symmetric(c)? {
        return Err(Error::NotSymmetric);
    }
    let half: BTreeMap<i64, i64> = c
        .sl2_terms()?
        .into_iter()
        .filter(|&(w, _)| w >= 0)
        .collect();
    Ok(SimpleDecomposition::from_map(p, peel(half, p)?))
}

/// Composition factors of `L(mu) (x) L(nu)`.
pub fn tensor_decomposition(mu: u64, nu: u64, p: u64) -> Result<SimpleDecomposition> {
    require_prime(p)?;
    let left = simple_weights(mu, p)?;
    let right = simple_weights(nu, p)?;
    let mut half: BTreeMap<i64, i64> = BTreeMap::new();
    for &a in &left {
        for &b in &right {
            let w = a.checked_add(b).ok_or(Error::Overflow)?;
            if w >= 0 {
                *half.entry(w).or_insert(0) += 1;
            }
        }
    }
    Ok(SimpleDecomposition::from_map(p, peel(half, p)?))
}

/// `[L(mu) (x) L(nu) : L(lam)]`.
pub fn tensor_comp_mult(mu: u64, nu: u64, lam: u64, p: u64) -> Result<u64> {
    let m = tensor_decomposition(mu, nu, p)?.multiplicity(lam);
    debug_assert!(m >= 0);
    Ok(m as u64)
}

/// `[L(mu) (x) L(1) : L(0)]` for `SL_2` in characteristic 2.
pub fn trivial_factor_in_tensor_with_l1(mu: u64) -> Result<u64> {
    tensor_comp_mult(mu, 1, 0, 2)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RemarkHit {
    pub mu: u64,
    pub multiplicity: u64,
}

/// Every `mu <= max` with `[L(mu) (x) L(1) : L(0)] != 0` at `p = 2`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RemarkSweep {
    pub max: u64,
    pub hits: Vec<RemarkHit>,
}

impl RemarkSweep {
    pub fn mus(&self) -> Vec<u64> {
        self.hits.iter().map(|h| h.mu).collect()
    }

    /// Hits with `mu <= bound`.
    pub fn restricted(&self, bound: u64) -> Vec<u64> {
        self.hits.iter().map(|h| h.mu).filter(|&m| m <= bound).collect()
    }
}

/// Sweep `0..=max` on the current rayon pool; the result does not depend on
/// the pool size.
pub fn remark_sweep(max: u64) -> Result<RemarkSweep> {
    let mut hits: Vec<RemarkHit> = (0..=max)
        .into_par_iter()
        .map(|mu| {
            trivial_factor_in_tensor_with_l1(mu).map(|m| RemarkHit { mu, multiplicity: m })
        })
        .filter(|r| !matches!(r, Ok(h) if h.multiplicity == 0))
        .collect::<Result<Vec<_>>>()?;
    hits.sort_by_key(|h| h.mu);
    Ok(RemarkSweep { max, hits })
}

/// Multiplicity of the zero weight in `L(lam)`: one if every base-`p` digit
/// is even, zero otherwise.
pub fn zero_weight_mult(lam: u64, p: u64) -> Result<u64> {
    let digits = base_p_digits(lam, p)?;
    Ok(u64::from(digits.iter().all(|d| d % 2 == 0)))
}

/// How the zero-weight statement for `L(lam)` follows from earlier ones.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "case", rename_all = "snake_case")]
pub enum InductionCase {
    /// `lam = 0`: the trivial module, zero weight once.
    Trivial,
    /// Every weight of `L(lam)` is congruent to `lam` mod 2, hence odd.
    Odd,
    /// `L(lam) = L(lam/2)^{(1)}`, reducing to an earlier step.
    Halve { to: u64 },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SocleStep {
    pub lam: u64,
    #[serde(flatten)]
    pub case: InductionCase,
    /// Zero-weight multiplicity by the digit criterion.
    pub zero_weight_mult: u64,
    /// Coefficient of `q^0` in the full character.
    pub character_zero_weight: i64,
    /// Upper bound for `dim Hom_G(L(lam), ind_{WT}^G k)`, namely
    /// `dim Hom_T(L(lam), k)`; exact for `lam = 0`.
    pub hom_bound: u64,
    pub ok: bool,
}

/// Evidence that `soc_G ind_{WT}^G k = k` for `SL_2` in characteristic 2,
/// over `0 <= lam <= lam_max`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SocleCertificate {
    pub p: u64,
    pub lam_max: u64,
    pub steps: Vec<SocleStep>,
    /// Highest weights `lam` that can occur in the socle.
    pub socle: Vec<u64>,
    pub passed: bool,
}

pub fn socle_certificate_wt(lam_max: u64) -> Result<SocleCertificate> {
    const P: u64 = 2;
    if lam_max < 1 {
        return Err(Error::InvalidArgument("lam_max must be at least 1".into()));
    }
    let mut steps: Vec<SocleStep> = Vec::with_capacity(lam_max as usize + 1);
    let mut chars: Vec<Character> = Vec::with_capacity(lam_max as usize + 1);
    for lam in 0..=lam_max {
        let ch = simple_char(lam, P)?;
        let zero = zero_weight_mult(lam, P)?;
        let character_zero_weight = ch.sl2_coefficient(0);
        let (case, replay_ok) = if lam == 0 {
            (InductionCase::Trivial, zero == 1)
        } else if lam % 2 == 1 {
            let all_odd = ch.sl2_terms()?.iter().all(|(w, _)| w.rem_euclid(2) == 1);
            (InductionCase::Odd, all_odd && zero == 0)
        } else {
            let half = (lam / 2) as usize;
            let twisted = frobenius_twist(&chars[half], 1, P)?;
            let earlier = &steps[half];
            let inherits = half == 0 || (earlier.ok && earlier.zero_weight_mult == 0);
            (
                InductionCase::Halve { to: lam / 2 },
                twisted == ch && inherits && zero == 0,
            )
        };
        let expected = u64::from(lam == 0);
        let ok = replay_ok && zero == expected && character_zero_weight == expected as i64;
        steps.push(SocleStep {
            lam,
            case,
            zero_weight_mult: zero,
            character_zero_weight,
            hom_bound: zero,
            ok,
        });
        chars.push(ch);
    }
    let socle: Vec<u64> = steps.iter().filter(|s| s.hom_bound > 0).map(|s| s.lam).collect();
    let passed = steps.iter().all(|s| s.ok) && socle == [0];
    Ok(SocleCertificate {
        p: P,
        lam_max,
        steps,
        socle,
        passed,
    })
}

/// Contragredient character: `w -> -w`.
pub fn dual(m: &Character) -> Result<Character> {
    Character::from_terms(
        m.basis(),
        m.terms()
            .iter()
            .map(|(w, &c)| (Weight(w.iter().map(|x| -x).collect()), c)),
    )
}

/// `dim Hom_G(L(mu), I(lam) (x) M) = [L(mu) (x) M^* : L(lam)]`, for `M`
/// given by its character.
pub fn hom_dim_into_injective_tensor(mu: u64, lam: u64, m: &Character, p: u64) -> Result<u64> {
    let as_simples = decompose_into_simples(m, p)?;
    if let Some((&bad, _)) = as_simples.multiplicities.iter().find(|(_, &c)| c < 0) {
        return Err(Error::NotModuleCharacter(bad as i64));
    }
    let product = char_mul(&simple_char(mu, p)?, &dual(m)?)?;
    let mult = decompose_into_simples(&product, p)?.multiplicity(lam);
    debug_assert!(mult >= 0);
    Ok(mult as u64)
}
