//! Weight spaces of the coordinate ring `k[U_J]` of the unipotent radical
//! of a standard parabolic.
//!
//! `k[U_J]` is the polynomial ring on generators `x_gamma` of weight `gamma`,
//! for `gamma` running over the positive roots not supported on `J`. A weight
//! space is spanned by monomials, so its dimension is a vector partition
//! count. Blocks for a central character `lambda + ZJ` are finite because
//! each generator has `I`-height at least one, which bounds the total degree
//! of every contributing monomial by `i_height(lambda)`.

use std::collections::{BTreeMap, HashMap};
use std::num::NonZeroUsize;
use std::sync::Mutex;

use lru::LruCache;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::roots::{complement_roots, CentralCharacter, ParabolicDatum, Root, RootSystem, Weight};

pub const DEFAULT_MEMO_CAPACITY: usize = 1 << 16;

/// Default coordinate limit of [`brute_force_partition_count`].
pub const DEFAULT_BRUTE_FORCE_LIMIT: i64 = 24;

/// Memoized vector partition function for the generator set
/// `Phi^+ \ Phi_J^+`.
#[derive(Debug)]
pub struct PartitionTable {
    label: String,
    pd: ParabolicDatum,
    generators: Vec<Root>,
    memo: Mutex<LruCache<Weight, u64>>,
}

impl PartitionTable {
    pub fn new(rs: &RootSystem, pd: &ParabolicDatum) -> Result<Self> {
        Self::with_capacity(rs, pd, DEFAULT_MEMO_CAPACITY)
    }

    pub fn with_capacity(rs: &RootSystem, pd: &ParabolicDatum, capacity: usize) -> Result<Self> {
        let generators = complement_roots(rs, pd)?;
        let cap = NonZeroUsize::new(capacity.max(1)).expect("capacity is at least one");
        Ok(PartitionTable {
            label: rs.label(),
            pd: pd.clone(),
            generators,
            memo: Mutex::new(LruCache::new(cap)),
        })
    }

    pub fn generators(&self) -> &[Root] {
        &self.generators
    }

    pub fn parabolic(&self) -> &ParabolicDatum {
        &self.pd
    }

    pub fn rank(&self) -> usize {
        self.pd.rank()
    }

    /// Cache key `"<type>|<J>"`, e.g. `"A2|1"` or `"B2|"`.
    pub fn cache_key(&self) -> String {
        let j: Vec<String> = self.pd.j().iter().map(|x| x.to_string()).collect();
        format!("{}|{}", self.label, j.join(","))
    }

    /// Number of exponent vectors `(n_gamma) >= 0` with
    /// `sum n_gamma gamma = w`; zero if `w` has a negative coordinate.
    pub fn partition_count(&self, w: &Weight) -> Result<u64> {
        if w.rank() != self.rank() {
            return Err(Error::DimensionMismatch {
                expected: self.rank(),
                found: w.rank(),
            });
        }
        if !w.is_nonnegative() {
            return Ok(0);
        }
        if let Some(&hit) = self.memo.lock().expect("memo lock").get(w) {
            return Ok(hit);
        }
        let mut scratch = HashMap::new();
        let count = count_with_prefix(&self.generators, self.generators.len(), w, &mut scratch)?;
        self.memo.lock().expect("memo lock").put(w.clone(), count);
        Ok(count)
    }

    /// Snapshot of the memo, sorted by weight.
    pub fn memo_entries(&self) -> Vec<(Weight, u64)> {
        let memo = self.memo.lock().expect("memo lock");
        let mut out: Vec<(Weight, u64)> = memo.iter().map(|(w, &c)| (w.clone(), c)).collect();
        out.sort();
        out
    }

    /// Seed the memo; entries of the wrong rank are skipped.
    pub fn seed(&self, entries: impl IntoIterator<Item = (Weight, u64)>) -> usize {
        let mut memo = self.memo.lock().expect("memo lock");
        let mut n = 0;
        for (w, c) in entries {
            if w.rank() == self.rank() && w.is_nonnegative() {
                memo.put(w, c);
                n += 1;
            }
        }
        n
    }

    /// All weights `lambda + mu`, `mu` in the `J`-span, whose weight space is
    /// nonzero, with their dimensions.
    pub fn fiber_support(&self, chi: &CentralCharacter) -> Result<FiberReport> {
        let i_indices = self.pd.i();
        if chi.values().keys().copied().collect::<Vec<_>>() != i_indices {
            return Err(Error::InvalidParabolic(format!(
                "central character {chi} is not indexed by I = {i_indices:?}"
            )));
        }
        for g in &self.generators {
            let h: i64 = g
                .iter()
                .enumerate()
                .filter(|(k, _)| !self.pd.in_j(*k))
                .map(|(_, &c)| c)
                .sum();
            assert!(h >= 1, "generator {g:?} has I-height {h}");
        }
        let rank = self.rank();
        let lambda = chi.representative(rank);
        let mut search = FiberSearch {
            generators: &self.generators,
            pd: &self.pd,
            remaining: lambda.0.clone(),
            acc: vec![0; rank],
            exponent_sum: 0,
            found: BTreeMap::new(),
            max_exponent_sum: 0,
        };
        search.run(0);
        let max_exponent_sum = search.max_exponent_sum;
        let mut entries = Vec::with_capacity(search.found.len());
        let mut total_dim: u64 = 0;
        for (w, vectors) in search.found {
            let dim = self.partition_count(&w)?;
            assert_eq!(dim, vectors, "exponent enumeration disagrees at {w}");
            total_dim = total_dim.checked_add(dim).ok_or(Error::Overflow)?;
            entries.push(FiberEntry { weight: w, dim });
        }
        debug_assert!(max_exponent_sum <= chi.i_height());
        Ok(FiberReport {
            chi: chi.clone(),
            entries,
            total_dim,
            max_exponent_sum,
        })
    }

    pub fn fiber_dimension(&self, chi: &CentralCharacter) -> Result<u64> {
        Ok(self.fiber_support(chi)?.total_dim)
    }
}

/// Partition count using only `generators[..k]`. The last generator in the
/// prefix is peeled off: `P_k(w) = P_{k-1}(w) + P_k(w - gamma_k)`.
fn count_with_prefix(
    generators: &[Root],
    k: usize,
    w: &Weight,
    scratch: &mut HashMap<(usize, Weight), u64>,
) -> Result<u64> {
    if k == 0 {
        return Ok(u64::from(w.iter().all(|&c| c == 0)));
    }
    if let Some(&hit) = scratch.get(&(k, w.clone())) {
        return Ok(hit);
    }
    let mut total = count_with_prefix(generators, k - 1, w, scratch)?;
    let rest = w
        .checked_sub(generators[k - 1].as_weight())
        .ok_or(Error::Overflow)?;
    if rest.is_nonnegative() {
        total = total
            .checked_add(count_with_prefix(generators, k, &rest, scratch)?)
            .ok_or(Error::Overflow)?;
    }
    scratch.insert((k, w.clone()), total);
    Ok(total)
}

struct FiberSearch<'a> {
    generators: &'a [Root],
    pd: &'a ParabolicDatum,
    /// `I`-coordinates still to be covered; `J`-slots are ignored.
    remaining: Vec<i64>,
    acc: Vec<i64>,
    exponent_sum: u64,
    found: BTreeMap<Weight, u64>,
    max_exponent_sum: u64,
}

impl FiberSearch<'_> {
    fn i_done(&self) -> bool {
        self.remaining
            .iter()
            .enumerate()
            .all(|(k, &c)| self.pd.in_j(k) || c == 0)
    }

    fn fits(&self, g: &Root) -> bool {
        g.iter()
            .enumerate()
            .all(|(k, &c)| self.pd.in_j(k) || c <= self.remaining[k])
    }

    fn run(&mut self, idx: usize) {
        if idx == self.generators.len() {
            if self.i_done() {
                *self.found.entry(Weight(self.acc.clone())).or_insert(0) += 1;
                self.max_exponent_sum = self.max_exponent_sum.max(self.exponent_sum);
            }
            return;
        }
        let g = &self.generators[idx];
        let mut taken = 0;
        loop {
            self.run(idx + 1);
            if !self.fits(g) {
                break;
            }
            for (k, &c) in g.iter().enumerate() {
                self.remaining[k] -= c;
                self.acc[k] += c;
            }
            self.exponent_sum += 1;
            taken += 1;
        }
        for (k, &c) in g.iter().enumerate() {
            self.remaining[k] += c * taken;
            self.acc[k] -= c * taken;
        }
        self.exponent_sum -= taken as u64;
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiberEntry {
    pub weight: Weight,
    pub dim: u64,
}

/// The block `k[U_J]_chi`, listed weight space by weight space.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiberReport {
    pub chi: CentralCharacter,
    pub entries: Vec<FiberEntry>,
    pub total_dim: u64,
    /// Largest total degree of a monomial in the block.
    pub max_exponent_sum: u64,
}

pub fn partition_count(rs: &RootSystem, pd: &ParabolicDatum, w: &Weight) -> Result<u64> {
    PartitionTable::new(rs, pd)?.partition_count(w)
}

pub fn fiber_support(rs: &RootSystem, pd: &ParabolicDatum, chi: &CentralCharacter) -> Result<FiberReport> {
    PartitionTable::new(rs, pd)?.fiber_support(chi)
}

pub fn fiber_dimension(rs: &RootSystem, pd: &ParabolicDatum, chi: &CentralCharacter) -> Result<u64> {
    PartitionTable::new(rs, pd)?.fiber_dimension(chi)
}

/// Exhaustive nested enumeration of exponent vectors, no memoization.
/// Every coordinate of `w` must be at most `limit`.
pub fn brute_force_partition_count(
    rs: &RootSystem,
    pd: &ParabolicDatum,
    w: &Weight,
    limit: i64,
) -> Result<u64> {
    if w.rank() != rs.rank() {
        return Err(Error::DimensionMismatch {
            expected: rs.rank(),
            found: w.rank(),
        });
    }
    if let Some(&coord) = w.iter().find(|&&c| c > limit) {
        return Err(Error::LimitExceeded { coord, limit });
    }
    if !w.is_nonnegative() {
        return Ok(0);
    }
    let generators = complement_roots(rs, pd)?;
    fn enumerate(generators: &[Root], idx: usize, sum: &mut Vec<i64>, target: &[i64]) -> u64 {
        if idx == generators.len() {
            return u64::from(sum.as_slice() == target);
        }
        let g = &generators[idx];
        let mut count = 0;
        let mut n = 0;
        loop {
            count += enumerate(generators, idx + 1, sum, target);
            if sum.iter().zip(g.iter()).zip(target).any(|((s, c), t)| s + c > *t) {
                break;
            }
            for (s, c) in sum.iter_mut().zip(g.iter()) {
                *s += c;
            }
            n += 1;
        }
        for (s, c) in sum.iter_mut().zip(g.iter()) {
            *s -= c * n;
        }
        count
    }
    let mut sum = vec![0; w.rank()];
    Ok(enumerate(&generators, 0, &mut sum, w))
}

/// On-disk form of partition memos, keyed by [`PartitionTable::cache_key`].
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartitionCache {
    pub version: u32,
    pub tables: BTreeMap<String, Vec<(Weight, u64)>>,
}

impl PartitionCache {
    pub const VERSION: u32 = 1;

    pub fn new() -> Self {
        PartitionCache {
            version: Self::VERSION,
            tables: BTreeMap::new(),
        }
    }

    pub fn from_json(s: &str) -> std::result::Result<Self, String> {
        let cache: PartitionCache = serde_json::from_str(s).map_err(|e| e.to_string())?;
        if cache.version != Self::VERSION {
            return Err(format!("unsupported cache version {}", cache.version));
        }
        Ok(cache)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("cache serializes")
    }

    /// Load any stored entries for the table's key into its memo.
    pub fn seed_table(&self, table: &PartitionTable) -> usize {
        self.tables
            .get(&table.cache_key())
            .map(|entries| table.seed(entries.iter().cloned()))
            .unwrap_or(0)
    }

    /// Merge the table's memo into the cache.
    pub fn absorb(&mut self, table: &PartitionTable) {
        let slot = self.tables.entry(table.cache_key()).or_default();
        let mut merged: BTreeMap<Weight, u64> = slot.drain(..).collect();
        merged.extend(table.memo_entries());
        *slot = merged.into_iter().collect();
    }
}
