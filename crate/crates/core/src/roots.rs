//! Root systems of finite type and the lattice arithmetic of parabolic
//! subsets.
//!
//! All coordinates are in the basis of simple roots. The Cartan matrix is
//! stored as `a[i][j] = <alpha_i^vee, alpha_j> = 2 (alpha_i, alpha_j) / (alpha_i, alpha_i)`,
//! so the simple reflection `s_i` sends `beta` to
//! `beta - (sum_j a[i][j] beta_j) alpha_i`. Simple roots are numbered as in
//! Bourbaki; in particular `G2` has `alpha_1` short and highest root
//! `3 alpha_1 + 2 alpha_2`.

use std::collections::{BTreeMap, BTreeSet, HashSet, VecDeque};
use std::fmt;
use std::ops::{Add, Deref};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub const MAX_RANK: usize = 8;

/// A weight in simple-root coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Weight(pub Vec<i64>);

impl Weight {
    pub fn zero(rank: usize) -> Self {
        Weight(vec![0; rank])
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }

    pub fn height(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn checked_sub(&self, other: &Weight) -> Option<Weight> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()
            .map(Weight)
    }

    pub fn checked_add(&self, other: &Weight) -> Option<Weight> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_add(*b))
            .collect::<Option<Vec<_>>>()
            .map(Weight)
    }
}

impl Deref for Weight {
    type Target = [i64];

    fn deref(&self) -> &[i64] {
        &self.0
    }
}

impl From<Vec<i64>> for Weight {
    fn from(v: Vec<i64>) -> Self {
        Weight(v)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// A root, stored by its simple-root coordinates. All coordinates of a root
/// share a sign.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Root(Weight);

impl Root {
    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn as_weight(&self) -> &Weight {
        &self.0
    }

    pub fn is_positive(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }
}

impl Deref for Root {
    type Target = [i64];

    fn deref(&self) -> &[i64] {
        &self.0
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum CartanType {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl CartanType {
    pub fn letter(self) -> char {
        match self {
            CartanType::A => 'A',
            CartanType::B => 'B',
            CartanType::C => 'C',
            CartanType::D => 'D',
            CartanType::E => 'E',
            CartanType::F => 'F',
            CartanType::G => 'G',
        }
    }

    fn from_letter(c: char) -> Option<Self> {
        Some(match c.to_ascii_uppercase() {
            'A' => CartanType::A,
            'B' => CartanType::B,
            'C' => CartanType::C,
            'D' => CartanType::D,
            'E' => CartanType::E,
            'F' => CartanType::F,
            'G' => CartanType::G,
            _ => return None,
        })
    }

    pub fn rank_is_valid(self, rank: usize) -> bool {
        if rank == 0 || rank > MAX_RANK {
            return false;
        }
        match self {
            CartanType::A => true,
            CartanType::B | CartanType::C => rank >= 2,
            CartanType::D => rank >= 3,
            CartanType::E => (6..=8).contains(&rank),
            CartanType::F => rank == 4,
            CartanType::G => rank == 2,
        }
    }

    /// Classical number of positive roots.
    pub fn positive_root_count(self, rank: usize) -> usize {
        let n = rank;
        match self {
            CartanType::A => n * (n + 1) / 2,
            CartanType::B | CartanType::C => n * n,
            CartanType::D => n * (n - 1),
            CartanType::E => match n {
                6 => 36,
                7 => 63,
                _ => 120,
            },
            CartanType::F => 24,
            CartanType::G => 6,
        }
    }

    /// Dynkin diagram: squared root lengths and edges (0-based).
    fn diagram(self, n: usize) -> (Vec<i64>, Vec<(usize, usize)>) {
        let chain: Vec<(usize, usize)> = (1..n).map(|i| (i - 1, i)).collect();
        match self {
            CartanType::A => (vec![2; n], chain),
            CartanType::B => {
                let mut len = vec![2; n];
                len[n - 1] = 1;
                (len, chain)
            }
            CartanType::C => {
                let mut len = vec![1; n];
                len[n - 1] = 2;
                (len, chain)
            }
            CartanType::D => {
                let mut edges: Vec<_> = (1..n - 1).map(|i| (i - 1, i)).collect();
                edges.push((n - 3, n - 1));
                (vec![2; n], edges)
            }
            CartanType::E => {
                let mut edges = vec![(0, 2), (1, 3)];
                edges.extend((3..n).map(|i| (i - 1, i)));
                (vec![2; n], edges)
            }
            CartanType::F => (vec![2, 2, 1, 1], chain),
            CartanType::G => (vec![1, 3], chain),
        }
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootSystem {
    cartan_type: CartanType,
    rank: usize,
    cartan_matrix: Vec<Vec<i64>>,
    positive_roots: Vec<Root>,
}

impl RootSystem {
    pub fn new(cartan_type: CartanType, rank: usize) -> Result<Self> {
        if !cartan_type.rank_is_valid(rank) {
            return Err(Error::InvalidRank {
                letter: cartan_type.letter(),
                rank,
            });
        }
        let (lengths, edges) = cartan_type.diagram(rank);
        let mut cartan_matrix = vec![vec![0i64; rank]; rank];
        for (i, row) in cartan_matrix.iter_mut().enumerate() {
            row[i] = 2;
        }
        for &(i, j) in &edges {
            let m = lengths[i].max(lengths[j]);
            cartan_matrix[i][j] = -m / lengths[i];
            cartan_matrix[j][i] = -m / lengths[j];
        }
        let positive_roots = generate_positive_roots(&cartan_matrix);
        Ok(RootSystem {
            cartan_type,
            rank,
            cartan_matrix,
            positive_roots,
        })
    }

    pub fn cartan_type(&self) -> CartanType {
        self.cartan_type
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// `"A2"`, `"G2"`, ...
    pub fn label(&self) -> String {
        format!("{}{}", self.cartan_type, self.rank)
    }

    pub fn cartan_matrix(&self) -> &[Vec<i64>] {
        &self.cartan_matrix
    }

    /// Positive roots ordered by height, ties broken so that `alpha_1`
    /// precedes `alpha_2` and so on.
    pub fn positive_roots(&self) -> &[Root] {
        &self.positive_roots
    }

    /// Simple root with 0-based index `i`.
    pub fn simple_root(&self, i: usize) -> Root {
        let mut v = vec![0; self.rank];
        v[i] = 1;
        Root(Weight(v))
    }

    pub fn highest_root(&self) -> &Root {
        self.positive_roots.last().expect("root systems are nonempty")
    }

    /// Apply the simple reflection with 0-based index `i`.
    pub fn reflect(&self, i: usize, coords: &[i64]) -> Vec<i64> {
        reflect(&self.cartan_matrix, i, coords)
    }

    pub fn contains_root(&self, coords: &[i64]) -> bool {
        let positive = coords.iter().all(|&c| c >= 0);
        let key: Vec<i64> = if positive {
            coords.to_vec()
        } else {
            coords.iter().map(|c| -c).collect()
        };
        self.positive_roots.iter().any(|r| r.coords() == key.as_slice())
    }
}

impl FromStr for RootSystem {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_cartan_type(s)
    }
}

impl fmt::Display for RootSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.label())
    }
}

/// Parse a type string such as `"A2"` or `"E8"`.
pub fn parse_cartan_type(input: &str) -> Result<RootSystem> {
    let s = input.trim();
    let mut chars = s.chars();
    let letter = chars
        .next()
        .ok_or_else(|| Error::MalformedCartanType(input.to_string()))?;
    let cartan_type =
        CartanType::from_letter(letter).ok_or_else(|| Error::MalformedCartanType(input.to_string()))?;
    let digits = chars.as_str();
    if digits.is_empty() || !digits.chars().all(|c| c.is_ascii_digit()) {
        return Err(Error::MalformedCartanType(input.to_string()));
    }
    let rank: usize = digits
        .parse()
        .map_err(|_| Error::MalformedCartanType(input.to_string()))?;
    RootSystem::new(cartan_type, rank)
}

fn reflect(cartan: &[Vec<i64>], i: usize, coords: &[i64]) -> Vec<i64> {
    let pairing: i64 = cartan[i].iter().zip(coords).map(|(a, c)| a * c).sum();
    let mut out = coords.to_vec();
    out[i] -= pairing;
    out
}

/// Orbit of the simple roots under the simple reflections, restricted to
/// the positive half.
fn generate_positive_roots(cartan: &[Vec<i64>]) -> Vec<Root> {
    let rank = cartan.len();
    let mut seen: HashSet<Vec<i64>> = HashSet::new();
    let mut queue: VecDeque<Vec<i64>> = VecDeque::new();
    for i in 0..rank {
        let mut v = vec![0; rank];
        v[i] = 1;
        seen.insert(v.clone());
        queue.push_back(v);
    }
    while let Some(beta) = queue.pop_front() {
        for i in 0..rank {
            let image = reflect(cartan, i, &beta);
            if seen.insert(image.clone()) {
                queue.push_back(image);
            }
        }
    }
    let mut positive: Vec<Vec<i64>> = seen
        .into_iter()
        .filter(|v| v.iter().all(|&c| c >= 0))
        .collect();
    positive.sort_by(|a, b| {
        let ha: i64 = a.iter().sum();
        let hb: i64 = b.iter().sum();
        ha.cmp(&hb).then_with(|| b.cmp(a))
    });
    positive.into_iter().map(|v| Root(Weight(v))).collect()
}

/// A parabolic subset `J` of the simple roots together with its complement
/// `I`. Indices are 1-based in the public API.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ParabolicDatum {
    rank: usize,
    j: BTreeSet<usize>,
}

impl ParabolicDatum {
    pub fn new(rank: usize, j: &[usize]) -> Result<Self> {
        let mut set = BTreeSet::new();
        for &idx in j {
            if idx == 0 || idx > rank {
                return Err(Error::InvalidParabolic(format!(
                    "index {idx} out of range 1..={rank}"
                )));
            }
            if !set.insert(idx) {
                return Err(Error::InvalidParabolic(format!("index {idx} repeated")));
            }
        }
        Ok(ParabolicDatum { rank, j: set })
    }

    pub fn empty(rank: usize) -> Self {
        ParabolicDatum {
            rank,
            j: BTreeSet::new(),
        }
    }

    pub fn full(rank: usize) -> Self {
        ParabolicDatum {
            rank,
            j: (1..=rank).collect(),
        }
    }

    /// Every subset `J` of `{1..rank}`, in binary-counter order.
    pub fn all_subsets(rank: usize) -> Vec<ParabolicDatum> {
        (0u32..(1 << rank))
            .map(|mask| ParabolicDatum {
                rank,
                j: (1..=rank).filter(|i| mask & (1 << (i - 1)) != 0).collect(),
            })
            .collect()
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn j(&self) -> Vec<usize> {
        self.j.iter().copied().collect()
    }

    pub fn i(&self) -> Vec<usize> {
        (1..=self.rank).filter(|x| !self.j.contains(x)).collect()
    }

    /// Whether the 0-based simple index lies in `J`.
    pub fn in_j(&self, idx0: usize) -> bool {
        self.j.contains(&(idx0 + 1))
    }

    fn check(&self, rank: usize) -> Result<()> {
        if self.rank != rank {
            return Err(Error::InvalidParabolic(format!(
                "datum has rank {}, root system has rank {rank}",
                self.rank
            )));
        }
        Ok(())
    }

    /// Whether the vector is supported on `J`.
    pub fn supported_on_j(&self, coords: &[i64]) -> bool {
        coords
            .iter()
            .enumerate()
            .all(|(k, &c)| c == 0 || self.in_j(k))
    }
}

impl fmt::Display for ParabolicDatum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<String> = self.j.iter().map(|x| x.to_string()).collect();
        write!(f, "{{{}}}", items.join(","))
    }
}

/// Positive roots supported on `J`.
pub fn levi_roots(rs: &RootSystem, pd: &ParabolicDatum) -> Result<Vec<Root>> {
    pd.check(rs.rank())?;
    Ok(rs
        .positive_roots()
        .iter()
        .filter(|r| pd.supported_on_j(r))
        .cloned()
        .collect())
}

/// Positive roots not supported on `J`; the weights of the polynomial
/// generators of the coordinate ring of the unipotent radical.
pub fn complement_roots(rs: &RootSystem, pd: &ParabolicDatum) -> Result<Vec<Root>> {
    pd.check(rs.rank())?;
    Ok(rs
        .positive_roots()
        .iter()
        .filter(|r| !pd.supported_on_j(r))
        .cloned()
        .collect())
}

fn check_nonnegative(w: &Weight, pd: &ParabolicDatum) -> Result<()> {
    if w.rank() != pd.rank() {
        return Err(Error::DimensionMismatch {
            expected: pd.rank(),
            found: w.rank(),
        });
    }
    if !w.is_nonnegative() {
        return Err(Error::NegativeCoordinate(w.0.clone()));
    }
    Ok(())
}

/// Sum of the `I`-coordinates of a nonnegative weight.
pub fn i_height(w: &Weight, pd: &ParabolicDatum) -> Result<u64> {
    check_nonnegative(w, pd)?;
    Ok(w.iter()
        .enumerate()
        .filter(|(k, _)| !pd.in_j(*k))
        .map(|(_, &c)| c as u64)
        .sum())
}

/// The class of a root-lattice weight modulo the `J`-span, represented by
/// its nonnegative `I`-coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CentralCharacter {
    /// 1-based `I`-index to coordinate; every `I`-index is present.
    values: BTreeMap<usize, u64>,
}

impl CentralCharacter {
    /// Build from `(index, value)` pairs; indices missing from the list are
    /// zero and every index must lie in `I`.
    pub fn new(pd: &ParabolicDatum, pairs: &[(usize, i64)]) -> Result<Self> {
        let mut values: BTreeMap<usize, u64> = pd.i().into_iter().map(|i| (i, 0)).collect();
        for &(idx, v) in pairs {
            let slot = values.get_mut(&idx).ok_or_else(|| {
                Error::InvalidParabolic(format!("index {idx} is not in I = {:?}", pd.i()))
            })?;
            if v < 0 {
                return Err(Error::NegativeCoordinate(vec![v]));
            }
            *slot = v as u64;
        }
        Ok(CentralCharacter { values })
    }

    pub fn zero(pd: &ParabolicDatum) -> Self {
        CentralCharacter {
            values: pd.i().into_iter().map(|i| (i, 0)).collect(),
        }
    }

    pub fn values(&self) -> &BTreeMap<usize, u64> {
        &self.values
    }

    pub fn get(&self, idx: usize) -> Option<u64> {
        self.values.get(&idx).copied()
    }

    pub fn is_zero(&self) -> bool {
        self.values.values().all(|&v| v == 0)
    }

    pub fn i_height(&self) -> u64 {
        self.values.values().sum()
    }

    /// The representative in the `I`-span, as a full weight.
    pub fn representative(&self, rank: usize) -> Weight {
        let mut v = vec![0i64; rank];
        for (&i, &c) in &self.values {
            v[i - 1] = c as i64;
        }
        Weight(v)
    }

    /// Every central character of `I`-height at most `max_height`.
    pub fn enumerate_up_to(pd: &ParabolicDatum, max_height: u64) -> Vec<CentralCharacter> {
        let indices = pd.i();
        let mut out = Vec::new();
        let mut current = vec![0u64; indices.len()];
        fn rec(
            k: usize,
            budget: u64,
            indices: &[usize],
            current: &mut Vec<u64>,
            out: &mut Vec<CentralCharacter>,
        ) {
            if k == indices.len() {
                out.push(CentralCharacter {
                    values: indices.iter().copied().zip(current.iter().copied()).collect(),
                });
                return;
            }
            for v in 0..=budget {
                current[k] = v;
                rec(k + 1, budget - v, indices, current, out);
            }
            current[k] = 0;
        }
        rec(0, max_height, &indices, &mut current, &mut out);
        out
    }
}

impl Add for &CentralCharacter {
    type Output = CentralCharacter;

    fn add(self, rhs: &CentralCharacter) -> CentralCharacter {
        let mut values = self.values.clone();
        for (k, v) in &rhs.values {
            *values.entry(*k).or_insert(0) += v;
        }
        CentralCharacter { values }
    }
}

impl fmt::Display for CentralCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<String> = self.values.iter().map(|(k, v)| format!("{k}={v}")).collect();
        write!(f, "{{{}}}", items.join(","))
    }
}

/// Project a nonnegative root-lattice weight onto its `I`-coordinates.
pub fn central_character_of(w: &Weight, pd: &ParabolicDatum) -> Result<CentralCharacter> {
    check_nonnegative(w, pd)?;
    Ok(CentralCharacter {
        values: pd.i().into_iter().map(|i| (i, w[i - 1] as u64)).collect(),
    })
}
