//! Acceptance criteria, one pass/fail line each. Exact equality throughout.

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use mockinj::character::Basis;
use mockinj::sl2::simple_dim;
use mockinj::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = std::result::Result<(), String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn e(err: Error) -> String {
    err.to_string()
}

/// 1. ch L(1) = q + q^-1 at p = 2.
fn criterion_1() -> Outcome {
    let terms = simple_char(1, 2).map_err(e)?.sl2_terms().map_err(e)?;
    ensure(terms == [(-1, 1), (1, 1)], || format!("got {terms:?}"))
}

/// 2. Zero weight vanishes for 0 < lam <= 4096 at p = 2, and the digit
///    criterion matches the full character for p in {2,3,5}.
fn criterion_2() -> Outcome {
    for lam in 1..=4096 {
        let m = zero_weight_mult(lam, 2).map_err(e)?;
        ensure(m == 0, || format!("zero weight in L({lam})"))?;
    }
    for p in [2, 3, 5] {
        for lam in 0..=4096u64 {
            let digit = zero_weight_mult(lam, p).map_err(e)? as i64;
            let full = simple_char(lam, p).map_err(e)?.sl2_coefficient(0);
            ensure(digit == full, || format!("p={p} lam={lam}: {digit} vs {full}"))?;
        }
    }
    Ok(())
}

/// 3. Socle certificate over lam <= 1024.
fn criterion_3() -> Outcome {
    let cert = socle_certificate_wt(1024).map_err(e)?;
    ensure(cert.steps.len() == 1025, || "wrong step count".into())?;
    ensure(cert.socle == [0], || format!("socle {:?}", cert.socle))?;
    ensure(cert.passed, || {
        let bad: Vec<u64> = cert.steps.iter().filter(|s| !s.ok).map(|s| s.lam).collect();
        format!("failed steps {bad:?}")
    })
}

/// 4. {mu <= 2^14 : [L(mu) (x) L(1) : L(0)] != 0} = {2^k - 1 : 1 <= k <= 14},
///    multiplicity 2 each, growing strictly across the bounds 2^8, 2^10, 2^14.
fn criterion_4() -> Outcome {
    let sweep = remark_sweep(1 << 14).map_err(e)?;
    let expected: Vec<u64> = (1..=14).map(|k| (1u64 << k) - 1).collect();
    ensure(!sweep.hits.is_empty(), || "no hits".into())?;
    ensure(sweep.mus() == expected, || format!("hits {:?}", sweep.mus()))?;
    ensure(sweep.hits.iter().all(|h| h.multiplicity == 2), || {
        "multiplicity other than 2".into()
    })?;
    let sizes: Vec<usize> = [1u64 << 8, 1 << 10, 1 << 14]
        .iter()
        .map(|&b| sweep.restricted(b).len())
        .collect();
    ensure(sizes[0] < sizes[1] && sizes[1] < sizes[2], || format!("sizes {sizes:?}"))
}

/// Block dimension by exhaustive search over a J-coordinate box of side
/// `i_height * (largest highest-root coefficient) + 2`.
fn oracle_block(rs: &RootSystem, pd: &ParabolicDatum, chi: &CentralCharacter) -> mockinj::Result<BTreeMap<Weight, u64>> {
    let side = chi.i_height() as i64 * rs.highest_root().iter().max().copied().unwrap() + 2;
    let lambda = chi.representative(rs.rank());
    let j: Vec<usize> = pd.j().iter().map(|x| x - 1).collect();
    let mut out = BTreeMap::new();
    let total = (side + 1).pow(j.len() as u32);
    for code in 0..total {
        let mut w = lambda.clone();
        let mut rest = code;
        for &k in &j {
            w.0[k] += rest % (side + 1);
            rest /= side + 1;
        }
        let c = brute_force_partition_count(rs, pd, &w, 64)?;
        if c > 0 {
            out.insert(w, c);
        }
    }
    Ok(out)
}

/// 5. Block finiteness for A2, A3, B2, G2, every J, every chi with
///    i_height <= 4.
fn criterion_5() -> Outcome {
    for t in ["A2", "A3", "B2", "G2"] {
        let rs = parse_cartan_type(t).map_err(e)?;
        for pd in ParabolicDatum::all_subsets(rs.rank()) {
            let table = PartitionTable::new(&rs, &pd).map_err(e)?;
            for chi in CentralCharacter::enumerate_up_to(&pd, 4) {
                let tag = || format!("{t} J={pd} chi={chi}");
                let report = table.fiber_support(&chi).map_err(e)?;
                ensure(report.max_exponent_sum <= chi.i_height(), || format!("{} degree bound", tag()))?;
                let oracle = oracle_block(&rs, &pd, &chi).map_err(e)?;
                let found: BTreeMap<Weight, u64> =
                    report.entries.iter().map(|x| (x.weight.clone(), x.dim)).collect();
                ensure(found == oracle, || format!("{} support differs", tag()))?;
                let dim = table.fiber_dimension(&chi).map_err(e)?;
                ensure(dim == oracle.values().sum::<u64>(), || format!("{} dimension", tag()))?;
            }
        }
    }
    Ok(())
}

/// 6. Memoized and exhaustive partition counts agree on [0,5]^2 for A2, B2,
///    G2 with J empty and each singleton.
fn criterion_6() -> Outcome {
    for t in ["A2", "B2", "G2"] {
        let rs = parse_cartan_type(t).map_err(e)?;
        for j in [vec![], vec![1], vec![2]] {
            let pd = ParabolicDatum::new(2, &j).map_err(e)?;
            for x in 0..=5 {
                for y in 0..=5 {
                    let w = Weight(vec![x, y]);
                    let fast = partition_count(&rs, &pd, &w).map_err(e)?;
                    let slow = brute_force_partition_count(&rs, &pd, &w, 5).map_err(e)?;
                    ensure(fast == slow, || format!("{t} J={pd} {w}: {fast} vs {slow}"))?;
                }
            }
        }
    }
    Ok(())
}

/// 7. Dichotomy over the grid, plus the reference examples.
fn criterion_7() -> Outcome {
    for p in [2, 3, 5, 7] {
        for order in 1..=12 {
            let mut groups = Vec::new();
            for rank in 0..=3 {
                groups.push(GroupDatum::torus(rank, order).map_err(e)?);
            }
            for t in ["A1", "A2", "B2"] {
                groups.push(GroupDatum::reductive(t, order).map_err(e)?);
            }
            for g in groups {
                let proper = has_proper_mock_injectives(&g, p).map_err(e)?;
                let lr = is_linearly_reductive(&g, p).map_err(e)?;
                ensure(proper != lr, || format!("{g:?} p={p}"))?;
            }
        }
    }
    let lr = |g: GroupDatum| is_linearly_reductive(&g, 2).unwrap();
    let proper = |g: GroupDatum| has_proper_mock_injectives(&g, 2).unwrap();
    let t = |r, o| GroupDatum::torus(r, o).unwrap();
    let a1 = || GroupDatum::reductive("A1", 1).unwrap();
    ensure(lr(t(1, 3)), || "torus(1), order 3 should be linearly reductive".into())?;
    ensure(!lr(a1()), || "A1 should not be linearly reductive".into())?;
    ensure(!lr(t(2, 2)), || "torus(2), order 2 should not be linearly reductive".into())?;
    ensure(proper(a1()), || "A1 should have proper mock injectives".into())?;
    ensure(!proper(t(1, 3)), || "torus(1), order 3 has none".into())?;
    ensure(proper(t(1, 2)), || "torus(1), order 2 has some".into())
}

fn random_char(rng: &mut ChaCha8Rng) -> Character {
    let n = rng.gen_range(0..7);
    Character::sl2((0..n).map(|_| (rng.gen_range(-9..=9), rng.gen_range(-4..=4)))).unwrap()
}

/// 8. Ring axioms, dim multiplicativity, Steinberg dimension formula for
///    lam <= 4096, decomposition round trip on 500 module characters.
fn criterion_8() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(20_161_016);
    for _ in 0..300 {
        let (a, b, c) = (random_char(&mut rng), random_char(&mut rng), random_char(&mut rng));
        let ab = char_mul(&a, &b).map_err(e)?;
        ensure(ab == char_mul(&b, &a).map_err(e)?, || "commutativity".into())?;
        let lhs = char_mul(&ab, &c).map_err(e)?;
        let rhs = char_mul(&a, &char_mul(&b, &c).map_err(e)?).map_err(e)?;
        ensure(lhs == rhs, || "associativity".into())?;
        let lhs = char_mul(&a, &char_add(&b, &c).map_err(e)?).map_err(e)?;
        let rhs = char_add(&ab, &char_mul(&a, &c).map_err(e)?).map_err(e)?;
        ensure(lhs == rhs, || "distributivity".into())?;
        ensure(
            dim_of(&ab).map_err(e)? == dim_of(&a).map_err(e)? * dim_of(&b).map_err(e)?,
            || "dim multiplicativity".into(),
        )?;
    }
    for p in [2, 3, 5] {
        for lam in 0..=4096u64 {
            let formula: i64 = base_p_digits(lam, p).map_err(e)?.iter().map(|&d| d as i64 + 1).product();
            let dim = dim_of(&simple_char(lam, p).map_err(e)?).map_err(e)?;
            ensure(dim == formula, || format!("dim L({lam}) at p={p}: {dim} vs {formula}"))?;
        }
    }
    for i in 0..500 {
        let p = [2, 3, 5][i % 3];
        let mut c = Character::zero(Basis::Sl2);
        let mut expected = BTreeMap::new();
        for _ in 0..rng.gen_range(1..=5) {
            let lam: u64 = rng.gen_range(0..=120);
            let m: i64 = rng.gen_range(1..=4);
            c = char_add(&c, &simple_char(lam, p).map_err(e)?.scale(m).map_err(e)?).map_err(e)?;
            *expected.entry(lam).or_insert(0) += m;
        }
        let d = decompose_into_simples(&c, p).map_err(e)?;
        ensure(d.genuine && d.multiplicities == expected, || format!("sample {i}: {:?}", d.multiplicities))?;
        ensure(d.reconstruct().map_err(e)? == c, || format!("sample {i}: reconstruction"))?;
    }
    Ok(())
}

/// 9. Tensor dimension conservation for mu, nu <= 64, p in {2,3,5}.
fn criterion_9() -> Outcome {
    for p in [2, 3, 5] {
        for mu in 0..=64 {
            for nu in 0..=64 {
                let d = sl2::tensor_decomposition(mu, nu, p).map_err(e)?;
                let lhs: u64 = d
                    .multiplicities
                    .iter()
                    .map(|(&lam, &m)| m as u64 * simple_dim(lam, p).unwrap())
                    .sum();
                let rhs = simple_dim(mu, p).map_err(e)? * simple_dim(nu, p).map_err(e)?;
                ensure(d.genuine && lhs == rhs, || format!("p={p} mu={mu} nu={nu}: {lhs} vs {rhs}"))?;
                // cross-check against the character-ring route on a slice
                if mu <= 16 && nu <= 16 {
                    let via_ring = decompose_into_simples(
                        &char_mul(&simple_char(mu, p).map_err(e)?, &simple_char(nu, p).map_err(e)?).map_err(e)?,
                        p,
                    )
                    .map_err(e)?;
                    ensure(via_ring == d, || format!("p={p} mu={mu} nu={nu}: routes differ"))?;
                }
            }
        }
    }
    Ok(())
}

/// The bundled report runs the same nine claims at their default limits.
fn reproduce_report() -> Outcome {
    let report = reproduce(&ReproduceLimits::default()).map_err(e)?;
    ensure(report.claims.len() == 9, || "expected nine claims".into())?;
    let failed: Vec<&str> = report.claims.iter().filter(|c| !c.passed).map(|c| c.name.as_str()).collect();
    ensure(report.passed && failed.is_empty(), || format!("failed: {failed:?}"))
}

type Criterion = (&'static str, fn() -> Outcome, Option<Duration>);

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("1 ch L(1) = q + q^-1 at p = 2", criterion_1, None),
        ("2 zero-weight vanishing, digit criterion", criterion_2, Some(Duration::from_secs(10))),
        ("3 socle certificate lam <= 1024", criterion_3, None),
        ("4 remark witness mu <= 2^14", criterion_4, Some(Duration::from_secs(30))),
        ("5 block finiteness of k[U_J]", criterion_5, Some(Duration::from_secs(60))),
        ("6 partition oracle equivalence", criterion_6, None),
        ("7 linear-reductivity dichotomy", criterion_7, None),
        ("8 character-ring properties", criterion_8, None),
        ("9 tensor dimension conservation", criterion_9, None),
        ("- reproduce report, default limits", reproduce_report, None),
    ];
    let mut failures = 0;
    for (name, run, budget) in criteria {
        let start = Instant::now();
        let mut outcome = run();
        let elapsed = start.elapsed();
        if let (Ok(()), Some(limit)) = (&outcome, budget) {
            if elapsed > limit {
                outcome = Err(format!("took {elapsed:?}, budget {limit:?}"));
            }
        }
        match outcome {
            Ok(()) => println!("PASS  {name}  ({:.2}s)", elapsed.as_secs_f64()),
            Err(msg) => {
                failures += 1;
                println!("FAIL  {name}  ({:.2}s): {msg}", elapsed.as_secs_f64());
            }
        }
    }
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
