//! End-to-end reproduction of every desk-checkable claim, as a pass/fail
//! table.

use std::collections::{BTreeMap, BTreeSet};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::character::{char_add, char_mul, dim_of, Character};
use crate::classify::{has_proper_mock_injectives, is_linearly_reductive, GroupDatum};
use crate::coord_ring::{brute_force_partition_count, PartitionTable};
use crate::error::{Error, Result};
use crate::roots::{central_character_of, parse_cartan_type, CentralCharacter, ParabolicDatum, Weight};
use crate::sl2::{
    decompose_into_simples, remark_sweep, simple_char, simple_dim, socle_certificate_wt,
    tensor_decomposition, zero_weight_mult,
};

/// Sweep sizes for [`reproduce`]. The defaults are the acceptance bounds.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReproduceLimits {
    pub zero_weight_max: u64,
    pub socle_max: u64,
    pub remark_max: u64,
    pub fiber_height: u64,
    pub partition_box: i64,
    pub random_characters: usize,
    pub tensor_max: u64,
    pub seed: u64,
}

impl Default for ReproduceLimits {
    fn default() -> Self {
        ReproduceLimits {
            zero_weight_max: 4096,
            socle_max: 1024,
            remark_max: 1 << 14,
            fiber_height: 4,
            partition_box: 5,
            random_characters: 500,
            tensor_max: 64,
            seed: 0x5eed,
        }
    }
}

impl ReproduceLimits {
    pub fn validate(&self) -> Result<()> {
        let bad = |what: &str| Err(Error::InvalidArgument(format!("{what} is out of range")));
        if self.zero_weight_max == 0 || self.zero_weight_max > 1 << 16 {
            return bad("zero_weight_max");
        }
        if self.socle_max == 0 || self.socle_max > 1 << 14 {
            return bad("socle_max");
        }
        if self.remark_max == 0 || self.remark_max > 1 << 18 {
            return bad("remark_max");
        }
        if self.fiber_height == 0 || self.fiber_height > 8 {
            return bad("fiber_height");
        }
        if self.partition_box <= 0 || self.partition_box > 12 {
            return bad("partition_box");
        }
        if self.random_characters == 0 || self.random_characters > 100_000 {
            return bad("random_characters");
        }
        if self.tensor_max == 0 || self.tensor_max > 256 {
            return bad("tensor_max");
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClaimResult {
    pub id: u32,
    pub name: String,
    pub statement: String,
    pub result: String,
    pub passed: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReproductionReport {
    pub limits: ReproduceLimits,
    pub claims: Vec<ClaimResult>,
    pub passed: bool,
}

struct Claim {
    id: u32,
    name: &'static str,
    statement: &'static str,
    run: fn(&ReproduceLimits) -> Result<(bool, String)>,
}

const CLAIMS: &[Claim] = &[
    Claim {
        id: 1,
        name: "simple-char-l1",
        statement: "ch L(1) = q + q^-1 for SL2 in characteristic 2",
        run: claim_simple_l1,
    },
    Claim {
        id: 2,
        name: "zero-weight-vanishing",
        statement: "L(lam) has no zero weight for lam > 0 at p = 2; digit criterion equals the character",
        run: claim_zero_weight,
    },
    Claim {
        id: 3,
        name: "socle-wt",
        statement: "soc_G ind_{WT}^G k = k for SL2 at p = 2",
        run: claim_socle,
    },
    Claim {
        id: 4,
        name: "remark-witness",
        statement: "[L(mu) (x) L(1) : L(0)] != 0 for infinitely many mu at p = 2",
        run: claim_remark,
    },
    Claim {
        id: 5,
        name: "fiber-finiteness",
        statement: "every central-character block of k[U_J] is finite dimensional",
        run: claim_fibers,
    },
    Claim {
        id: 6,
        name: "partition-oracle",
        statement: "memoized partition counts equal exhaustive enumeration",
        run: claim_partition_oracle,
    },
    Claim {
        id: 7,
        name: "mock-injective-dichotomy",
        statement: "proper mock injectives exist iff G is not linearly reductive",
        run: claim_dichotomy,
    },
    Claim {
        id: 8,
        name: "character-ring",
        statement: "ring axioms, Steinberg dimension formula, decomposition round trip",
        run: claim_character_ring,
    },
    Claim {
        id: 9,
        name: "tensor-dimension",
        statement: "sum_lam [L(mu) (x) L(nu) : L(lam)] dim L(lam) = dim L(mu) dim L(nu)",
        run: claim_tensor_dimension,
    },
];

/// Run every claim; a failing claim does not stop the others.
pub fn reproduce(limits: &ReproduceLimits) -> Result<ReproductionReport> {
    limits.validate()?;
    let claims: Vec<ClaimResult> = CLAIMS
        .iter()
        .map(|c| {
            let (passed, result) = match (c.run)(limits) {
                Ok(r) => r,
                Err(e) => (false, format!("error: {e}")),
            };
            ClaimResult {
                id: c.id,
                name: c.name.to_string(),
                statement: c.statement.to_string(),
                result,
                passed,
            }
        })
        .collect();
    let passed = claims.iter().all(|c| c.passed);
    Ok(ReproductionReport {
        limits: limits.clone(),
        claims,
        passed,
    })
}

fn claim_simple_l1(_: &ReproduceLimits) -> Result<(bool, String)> {
    let ch = simple_char(1, 2)?;
    let terms = ch.sl2_terms()?;
    Ok((terms == [(-1, 1), (1, 1)], format!("ch L(1) = {ch}")))
}

fn claim_zero_weight(limits: &ReproduceLimits) -> Result<(bool, String)> {
    let max = limits.zero_weight_max;
    let vanish = (1..=max)
        .into_par_iter()
        .map(|lam| zero_weight_mult(lam, 2))
        .collect::<Result<Vec<_>>>()?
        .iter()
        .all(|&m| m == 0);
    let mut mismatches = 0usize;
    for p in [2u64, 3, 5] {
        mismatches += (0..=max)
            .into_par_iter()
            .map(|lam| -> Result<bool> {
                let by_digits = zero_weight_mult(lam, p)? as i64;
                Ok(by_digits != simple_char(lam, p)?.sl2_coefficient(0))
            })
            .collect::<Result<Vec<_>>>()?
            .into_iter()
            .filter(|&bad| bad)
            .count();
    }
    Ok((
        vanish && mismatches == 0,
        format!("lam <= {max}: vanishing at p=2 {vanish}, criterion mismatches over p in {{2,3,5}}: {mismatches}"),
    ))
}

fn claim_socle(limits: &ReproduceLimits) -> Result<(bool, String)> {
    let cert = socle_certificate_wt(limits.socle_max)?;
    let failed = cert.steps.iter().filter(|s| !s.ok).count();
    Ok((
        cert.passed,
        format!(
            "lam <= {}: socle weights {:?}, failed steps {failed}",
            cert.lam_max, cert.socle
        ),
    ))
}

fn remark_checkpoints(max: u64) -> Vec<u64> {
    [1u64 << 8, 1 << 10, 1 << 14]
        .into_iter()
        .filter(|&b| b <= max)
        .collect()
}

fn claim_remark(limits: &ReproduceLimits) -> Result<(bool, String)> {
    let max = limits.remark_max;
    let sweep = remark_sweep(max)?;
    let expected: Vec<u64> = (1..64)
        .map(|k| (1u64 << k) - 1)
        .take_while(|&m| m <= max)
        .collect();
    let pattern = sweep.mus() == expected && sweep.hits.iter().all(|h| h.multiplicity == 2);
    let sizes: Vec<usize> = remark_checkpoints(max)
        .into_iter()
        .map(|b| sweep.restricted(b).len())
        .collect();
    let increasing = sizes.windows(2).all(|w| w[0] < w[1]);
    let nonempty = max < 1 || !sweep.hits.is_empty();
    Ok((
        pattern && increasing && nonempty,
        format!(
            "mu <= {max}: {} hits {:?}, checkpoint counts {sizes:?}",
            sweep.hits.len(),
            sweep.mus()
        ),
    ))
}

/// Brute-force block dimension: scan a box of `J`-coordinates large enough
/// to contain every contributing monomial, plus a margin.
fn oracle_fiber(
    rs: &crate::roots::RootSystem,
    pd: &ParabolicDatum,
    chi: &CentralCharacter,
) -> Result<BTreeMap<Weight, u64>> {
    let max_coef = *rs.highest_root().coords().iter().max().unwrap_or(&1);
    let bound = chi.i_height() as i64 * max_coef + 2;
    let lambda = chi.representative(rs.rank());
    let j: Vec<usize> = pd.j().into_iter().map(|x| x - 1).collect();
    let mut out = BTreeMap::new();
    let mut mu = vec![0i64; j.len()];
    loop {
        let mut w = lambda.clone();
        for (&k, &m) in j.iter().zip(&mu) {
            w.0[k] += m;
        }
        let c = brute_force_partition_count(rs, pd, &w, 64)?;
        if c > 0 {
            out.insert(w, c);
        }
        // odometer over [0, bound]^|J|
        let mut pos = 0;
        while pos < mu.len() && mu[pos] == bound {
            mu[pos] = 0;
            pos += 1;
        }
        if pos == mu.len() {
            break;
        }
        mu[pos] += 1;
    }
    Ok(out)
}

fn claim_fibers(limits: &ReproduceLimits) -> Result<(bool, String)> {
    let mut checked = 0usize;
    let mut failures = Vec::new();
    for t in ["A2", "A3", "B2", "G2"] {
        let rs = parse_cartan_type(t)?;
        for pd in ParabolicDatum::all_subsets(rs.rank()) {
            let table = PartitionTable::new(&rs, &pd)?;
            for chi in CentralCharacter::enumerate_up_to(&pd, limits.fiber_height) {
                let report = table.fiber_support(&chi)?;
                let oracle = oracle_fiber(&rs, &pd, &chi)?;
                let found: BTreeMap<Weight, u64> =
                    report.entries.iter().map(|e| (e.weight.clone(), e.dim)).collect();
                let lies_over = report
                    .entries
                    .iter()
                    .all(|e| central_character_of(&e.weight, &pd).as_ref() == Ok(&chi));
                let ok = report.max_exponent_sum <= chi.i_height()
                    && found == oracle
                    && report.total_dim == oracle.values().sum::<u64>()
                    && lies_over;
                if !ok {
                    failures.push(format!("{t} J={pd} chi={chi}"));
                }
                checked += 1;
            }
        }
    }
    Ok((
        failures.is_empty(),
        format!("{checked} blocks checked, failures: {failures:?}"),
    ))
}

fn claim_partition_oracle(limits: &ReproduceLimits) -> Result<(bool, String)> {
    let b = limits.partition_box;
    let mut checked = 0usize;
    let mut failures = Vec::new();
    for t in ["A2", "B2", "G2"] {
        let rs = parse_cartan_type(t)?;
        let n = rs.rank();
        let mut subsets = vec![ParabolicDatum::empty(n)];
        subsets.extend((1..=n).map(|i| ParabolicDatum::new(n, &[i]).expect("singleton")));
        for pd in subsets {
            let table = PartitionTable::new(&rs, &pd)?;
            for x in 0..=b {
                for y in 0..=b {
                    let w = Weight(vec![x, y]);
                    if table.partition_count(&w)? != brute_force_partition_count(&rs, &pd, &w, b)? {
                        failures.push(format!("{t} J={pd} {w}"));
                    }
                    checked += 1;
                }
            }
        }
    }
    Ok((
        failures.is_empty(),
        format!("{checked} weights checked, failures: {failures:?}"),
    ))
}

fn claim_dichotomy(_: &ReproduceLimits) -> Result<(bool, String)> {
    let mut cases = 0usize;
    let mut dichotomy = true;
    for p in [2u64, 3, 5, 7] {
        for order in 1..=12u64 {
            let mut groups: Vec<GroupDatum> = (0..=3)
                .map(|rank| GroupDatum::torus(rank, order))
                .collect::<Result<_>>()?;
            for t in ["A1", "A2", "B2"] {
                groups.push(GroupDatum::reductive(t, order)?);
            }
            for g in &groups {
                let proper = has_proper_mock_injectives(g, p)?;
                let reductive = is_linearly_reductive(g, p)?;
                let expected = !g.identity_component.is_torus() || order % p == 0;
                dichotomy &= proper != reductive && proper == expected;
                cases += 1;
            }
        }
    }
    let examples = is_linearly_reductive(&GroupDatum::torus(1, 3)?, 2)?
        && !is_linearly_reductive(&GroupDatum::reductive("A1", 1)?, 2)?
        && !is_linearly_reductive(&GroupDatum::torus(2, 2)?, 2)?
        && has_proper_mock_injectives(&GroupDatum::reductive("A1", 1)?, 2)?
        && !has_proper_mock_injectives(&GroupDatum::torus(1, 3)?, 2)?
        && has_proper_mock_injectives(&GroupDatum::torus(1, 2)?, 2)?;
    Ok((
        dichotomy && examples,
        format!("{cases} cases, dichotomy {dichotomy}, reference examples {examples}"),
    ))
}

fn random_sl2_char(rng: &mut ChaCha8Rng) -> Result<Character> {
    let terms: Vec<(i64, i64)> = (0..rng.gen_range(0..6))
        .map(|_| (rng.gen_range(-8..=8), rng.gen_range(-5..=5)))
        .collect();
    Character::sl2(terms)
}

fn claim_character_ring(limits: &ReproduceLimits) -> Result<(bool, String)> {
    let mut rng = ChaCha8Rng::seed_from_u64(limits.seed);
    let mut axioms = true;
    for _ in 0..200 {
        let (a, b, c) = (
            random_sl2_char(&mut rng)?,
            random_sl2_char(&mut rng)?,
            random_sl2_char(&mut rng)?,
        );
        let ab = char_mul(&a, &b)?;
        axioms &= ab == char_mul(&b, &a)?;
        axioms &= char_mul(&ab, &c)? == char_mul(&a, &char_mul(&b, &c)?)?;
        axioms &= char_mul(&a, &char_add(&b, &c)?)? == char_add(&ab, &char_mul(&a, &c)?)?;
        axioms &= dim_of(&ab)? == dim_of(&a)? * dim_of(&b)?;
    }

    let mut steinberg_failures = 0usize;
    for p in [2u64, 3, 5] {
        steinberg_failures += (0..=limits.zero_weight_max)
            .into_par_iter()
            .map(|lam| -> Result<bool> {
                let digits = crate::sl2::base_p_digits(lam, p)?;
                let formula: i64 = digits.iter().map(|&d| d as i64 + 1).product();
                Ok(dim_of(&simple_char(lam, p)?)? != formula)
            })
            .collect::<Result<Vec<_>>>()?
            .into_iter()
            .filter(|&bad| bad)
            .count();
    }

    let mut round_trip_failures = 0usize;
    for _ in 0..limits.random_characters {
        let p = [2u64, 3, 5][rng.gen_range(0..3)];
        let mut c = Character::zero(crate::character::Basis::Sl2);
        let mut expected: BTreeMap<u64, i64> = BTreeMap::new();
        for _ in 0..rng.gen_range(1..=5) {
            let lam = rng.gen_range(0..=100u64);
            let m = rng.gen_range(1..=3i64);
            c = char_add(&c, &simple_char(lam, p)?.scale(m)?)?;
            *expected.entry(lam).or_insert(0) += m;
        }
        let d = decompose_into_simples(&c, p)?;
        if !d.genuine || d.multiplicities != expected || d.reconstruct()? != c {
            round_trip_failures += 1;
        }
    }
    let ok = axioms && steinberg_failures == 0 && round_trip_failures == 0;
    Ok((
        ok,
        format!(
            "axioms {axioms}, Steinberg dimension failures {steinberg_failures}, \
             round-trip failures {round_trip_failures}/{}",
            limits.random_characters
        ),
    ))
}

fn claim_tensor_dimension(limits: &ReproduceLimits) -> Result<(bool, String)> {
    let max = limits.tensor_max;
    let mut failures = BTreeSet::new();
    for p in [2u64, 3, 5] {
        let bad: Vec<(u64, u64)> = (0..=max)
            .into_par_iter()
            .flat_map_iter(|mu| (0..=max).map(move |nu| (mu, nu)))
            .map(|(mu, nu)| -> Result<Option<(u64, u64)>> {
                let d = tensor_decomposition(mu, nu, p)?;
                let lhs = d.dim()?;
                let rhs = (simple_dim(mu, p)? * simple_dim(nu, p)?) as i64;
                Ok((lhs != rhs || !d.genuine).then_some((mu, nu)))
            })
            .collect::<Result<Vec<_>>>()?
            .into_iter()
            .flatten()
            .collect();
        for (mu, nu) in bad {
            failures.insert((p, mu, nu));
        }
    }
    Ok((
        failures.is_empty(),
        format!(
            "mu, nu <= {max}, p in {{2,3,5}}: {} failures",
            failures.len()
        ),
    ))
}
