//! The ten acceptance criteria, each printed as one PASS/FAIL line.
//!
//! Runs without the libtest harness so the lines reach stdout:
//! `cargo test --test acceptance`.

use std::sync::atomic::{AtomicUsize, Ordering};
use std::time::{Duration, Instant};

use itertools::Itertools;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use colorfan::chow::{degree_power, degree_product, Basis, Divisor};
use colorfan::fan::{Fan, WeightedCycle};
use colorfan::fixtures;
use colorfan::geometry::{
    compare_normal_complex, ipc_volume, ipc_volume_via_transversals, normal_complex_equals_ipc, orthant_volumes,
};
use colorfan::ground::{ColoredSet, GroundSet};
use colorfan::multimatroid::{
    boolean_multimatroid, cubicality_of_values, enumerate_integer_multimatroids, quadratic_rank, random_r_multimatroid,
    sum_h_rank, Cubicality, RankFunction, SamplerMode,
};
use colorfan::{rat, Error, Rational};

type Outcome = Result<String, String>;
type Criterion = fn(&Stats) -> Outcome;

/// Balancing checks performed on intermediate cycles, and internal
/// consistency failures seen, across criteria 1 to 4.
#[derive(Default)]
struct Stats {
    cycles_checked: AtomicUsize,
    internal_failures: AtomicUsize,
}

impl Stats {
    fn record_error(&self, e: &Error) -> String {
        if matches!(e, Error::Internal(_)) {
            self.internal_failures.fetch_add(1, Ordering::Relaxed);
        }
        e.to_string()
    }

    fn check_cycle(&self, fan: &Fan, c: &WeightedCycle) -> Result<(), String> {
        if c.dim() == 0 {
            return Ok(());
        }
        self.cycles_checked.fetch_add(1, Ordering::Relaxed);
        let rep = fan.check_balancing(c);
        if rep.balanced {
            Ok(())
        } else {
            self.internal_failures.fetch_add(1, Ordering::Relaxed);
            Err(format!("unbalanced {}-cycle at {:?}", c.dim(), rep.violation))
        }
    }

    /// `∫ D_1 ⋯ D_n`, asserting balancing of every intermediate cycle.
    fn degree(&self, fan: &Fan, divisors: &[Divisor]) -> Result<Rational, String> {
        let xs: Vec<Divisor> = divisors.iter().map(|d| d.convert(Basis::X)).collect();
        let phis: Vec<&[Rational]> = xs.iter().map(Divisor::dense).collect();
        let cycles = fan.intersection_sequence(&phis).map_err(|e| self.record_error(&e))?;
        for c in &cycles {
            self.check_cycle(fan, c)?;
        }
        let d = fan
            .calibrated(cycles.last().expect("nonempty"))
            .map_err(|e| self.record_error(&e))?;
        let direct = degree_product(fan, divisors).map_err(|e| self.record_error(&e))?;
        ensure(d == direct, || format!("degree {d} vs degree_product {direct}"))?;
        Ok(d)
    }
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn e2s(e: Error) -> String {
    e.to_string()
}

fn within(start: Instant, limit: Duration, what: &str) -> Result<(), String> {
    let t = start.elapsed();
    ensure(t < limit, || format!("{what} took {t:?}, limit {limit:?}"))
}

fn criterion_1(stats: &Stats) -> Outcome {
    let start = Instant::now();
    let g = fixtures::b2();
    let fan = Fan::build(&g).map_err(e2s)?;
    let d = Divisor::sum_h(&g);
    let degree = stats.degree(&fan, &[d.clone(), d])?;
    let rk = sum_h_rank(&g);
    let vol = ipc_volume(&rk).map_err(e2s)?;
    let transversal: Rational = ipc_volume_via_transversals(&rk, 4)
        .map_err(e2s)?
        .into_iter()
        .map(|(_, v)| v)
        .sum();
    let expected = rat(68);
    ensure(degree == expected, || format!("degree(D²) = {degree}"))?;
    ensure(vol == expected, || format!("ipc_volume = {vol}"))?;
    ensure(transversal == expected, || {
        format!("transversal volume = {transversal}")
    })?;
    within(start, Duration::from_secs(1), "criterion 1")?;
    Ok(format!("degree = ipc = transversal = 68 in {:?}", start.elapsed()))
}

fn criterion_2(stats: &Stats) -> Outcome {
    let start = Instant::now();
    let rk = fixtures::example_5544();
    let fan = Fan::build(rk.ground()).map_err(e2s)?;
    let d = rk.divisor();
    let degree = stats.degree(&fan, &[d.clone(), d])?;
    let vol = ipc_volume(&rk).map_err(e2s)?;
    ensure(degree == rat(124), || format!("degree(D_M²) = {degree}"))?;
    ensure(vol == rat(124), || format!("ipc_volume = {vol}"))?;
    let tri = orthant_volumes(&rk).map_err(e2s)?;
    let tra = ipc_volume_via_transversals(&rk, 4).map_err(e2s)?;
    ensure(tri.len() == 4 && tra.len() == 4, || "expected four orthants".into())?;
    for ((t1, v1), (t2, v2)) in tri.iter().zip(&tra) {
        ensure(t1 == t2 && *v1 == rat(31) && *v2 == rat(31), || {
            format!(
                "orthant {}: triangulation {v1}, transversal {v2}",
                rk.ground().display(t1)
            )
        })?;
    }
    within(start, Duration::from_secs(1), "criterion 2")?;
    Ok(format!(
        "degree = ipc = 124, each orthant 31 by both oracles, in {:?}",
        start.elapsed()
    ))
}

fn h_phis(g: &GroundSet, sets: &[ColoredSet]) -> Vec<Vec<Rational>> {
    sets.iter()
        .map(|s| {
            Divisor::generator(g, Basis::H, s)
                .expect("owned")
                .convert(Basis::X)
                .dense()
                .to_vec()
        })
        .collect()
}

/// Every multiset of `n` nonempty colored sets, as nondecreasing index
/// sequences, sharing intersections along common prefixes.
struct ExhaustiveA<'a> {
    fan: &'a Fan,
    sets: Vec<ColoredSet>,
    phis: Vec<Vec<Rational>>,
    stats: &'a Stats,
}

impl ExhaustiveA<'_> {
    fn walk(&self, cycle: &WeightedCycle, chosen: &mut Vec<usize>) -> Result<usize, String> {
        let g = self.fan.ground();
        if chosen.len() == g.n() {
            let degree = self.fan.calibrated(cycle).map_err(|e| self.stats.record_error(&e))?;
            let monomial: Vec<ColoredSet> = chosen.iter().map(|&i| self.sets[i].clone()).collect();
            let count = g.transversal_count(&monomial).map_err(e2s)?;
            ensure(degree == rat(count as i128), || {
                let names = monomial.iter().map(|s| g.display(s)).join(" ");
                format!(
                    "ground {:?}, h-monomial {names}: degree {degree}, transversals {count}",
                    g.block_sizes()
                )
            })?;
            return Ok(1);
        }
        self.stats.check_cycle(self.fan, cycle)?;
        let from = chosen.last().copied().unwrap_or(0);
        let mut total = 0;
        for j in from..self.sets.len() {
            let next = self
                .fan
                .intersect(cycle, &self.phis[j])
                .map_err(|e| self.stats.record_error(&e))?;
            chosen.push(j);
            total += self.walk(&next, chosen)?;
            chosen.pop();
        }
        Ok(total)
    }
}

fn criterion_3(stats: &Stats) -> Outcome {
    let start = Instant::now();
    let mut grounds = Vec::new();
    for n in 1..=3 {
        for sizes in (0..n).map(|_| 2..=3usize).multi_cartesian_product() {
            grounds.push(sizes);
        }
    }
    let counts = grounds
        .iter()
        .map(|sizes| -> Result<usize, String> {
            let g = GroundSet::with_sizes(sizes).map_err(e2s)?;
            let fan = Fan::build(&g).map_err(e2s)?;
            let sets = g.nonempty_sets();
            let walker = ExhaustiveA {
                fan: &fan,
                phis: h_phis(&g, &sets),
                sets,
                stats,
            };
            let top = fan.top_cycle();
            stats.check_cycle(&fan, &top)?;
            (0..walker.sets.len())
                .into_par_iter()
                .map(|i| {
                    let first = fan
                        .intersect(&top, &walker.phis[i])
                        .map_err(|e| stats.record_error(&e))?;
                    walker.walk(&first, &mut vec![i])
                })
                .sum::<Result<usize, String>>()
        })
        .collect::<Result<Vec<_>, String>>()?;
    within(start, Duration::from_secs(600), "criterion 3")?;
    Ok(format!(
        "{} ground sets (n ≤ 3, block sizes 2..=3), {} h-monomials, all equal to transversal counts, in {:?}",
        grounds.len(),
        counts.iter().sum::<usize>(),
        start.elapsed()
    ))
}

fn criterion_4(stats: &Stats) -> Outcome {
    let start = Instant::now();
    let mut jobs = Vec::new();
    let mut seed = 4000u64;
    for n in 2..=4 {
        for r in 2..=3 {
            for k in 0..36 {
                let mode = if k % 3 == 2 {
                    SamplerMode::PseudoCubical
                } else {
                    SamplerMode::General
                };
                jobs.push((n, r, mode, seed));
                seed += 1;
            }
        }
    }
    let results = jobs
        .par_iter()
        .map(|&(n, r, mode, seed)| -> Result<Cubicality, String> {
            let g = GroundSet::uniform(n, r).map_err(e2s)?;
            let rk = random_r_multimatroid(&g, seed, mode).map_err(e2s)?;
            ensure(rk.is_r_multimatroid(), || {
                format!("seed {seed}: sample is not an ℝ-multimatroid")
            })?;
            let fan = Fan::build(&g).map_err(e2s)?;
            let d = rk.divisor();
            let lhs = stats.degree(&fan, &vec![d.clone(); n])?;
            let power = degree_power(&fan, &d).map_err(|e| stats.record_error(&e))?;
            let rhs = ipc_volume(&rk).map_err(|e| stats.record_error(&e))?;
            ensure(lhs == power && lhs == rhs, || {
                format!("n={n} r={r} {mode:?} seed {seed}: degree {lhs}, ipc volume {rhs}")
            })?;
            Ok(rk.cubicality_class())
        })
        .collect::<Result<Vec<_>, String>>()?;
    let non_pc = results.iter().filter(|c| **c == Cubicality::NotPseudoCubical).count();
    ensure(results.len() >= 200, || format!("only {} instances", results.len()))?;
    ensure(non_pc >= 50, || format!("only {non_pc} non-pseudo-cubical instances"))?;
    within(start, Duration::from_secs(900), "criterion 4")?;
    Ok(format!(
        "{} instances over n∈{{2,3,4}}, r∈{{2,3}} ({non_pc} not pseudo-cubical): degree = ipc volume, in {:?}",
        results.len(),
        start.elapsed()
    ))
}

fn criterion_5(_: &Stats) -> Outcome {
    let rep = fixtures::example_multimatroid().cubicality();
    ensure(rep.class == Cubicality::PseudoCubical, || {
        format!("example multimatroid: {}", rep.class)
    })?;
    ensure(rep.witness.as_deref() == Some("2·1 = 0+2"), || {
        format!("witness {:?}", rep.witness)
    })?;
    let c = fixtures::example_5544().cubicality_class();
    ensure(c == Cubicality::Cubical, || format!("5,5,4,4,6 example: {c}"))?;
    let c = sum_h_rank(&fixtures::abc12()).cubicality_class();
    ensure(c == Cubicality::PseudoCubical, || format!("sum_h on abc12: {c}"))?;
    let mut quadratic = 0;
    for n in 1..=6 {
        for r in 2..=3 {
            if n >= 5 && r == 3 {
                continue;
            }
            let g = GroundSet::uniform(n, r).map_err(e2s)?;
            let c = quadratic_rank(&g).cubicality_class();
            ensure(c == Cubicality::Cubical, || format!("quadratic rank n={n} r={r}: {c}"))?;
            quadratic += 1;
        }
    }
    let mut boolean = 0;
    for sizes in [
        vec![2],
        vec![2, 2],
        vec![3, 2],
        vec![2, 2, 2],
        vec![4, 3, 2],
        vec![2, 2, 2, 2],
    ] {
        let g = GroundSet::with_sizes(&sizes).map_err(e2s)?;
        let c = boolean_multimatroid(&g).cubicality_class();
        // a single block has no chain of length two, so nothing can be tight
        let want = if sizes.len() == 1 {
            Cubicality::Cubical
        } else {
            Cubicality::PseudoCubical
        };
        ensure(c == want, || format!("Boolean on {sizes:?}: {c}"))?;
        boolean += 1;
    }
    Ok(format!(
        "examples classified as stated; quadratic rank cubical on {quadratic} ground sets (n ≤ 6); Boolean pseudo-cubical on {boolean}"
    ))
}

fn criterion_6(_: &Stats) -> Outcome {
    let mut jobs = Vec::new();
    let mut seed = 6000u64;
    for (n, r, count) in [(2, 2, 30), (2, 3, 20), (3, 2, 25), (3, 3, 10), (4, 2, 15)] {
        for _ in 0..count {
            jobs.push((n, r, seed));
            seed += 1;
        }
    }
    let pieces = jobs
        .par_iter()
        .map(|&(n, r, seed)| -> Result<usize, String> {
            let g = GroundSet::uniform(n, r).map_err(e2s)?;
            let rk = random_r_multimatroid(&g, seed, SamplerMode::PseudoCubical).map_err(e2s)?;
            let rep = compare_normal_complex(&rk).map_err(e2s)?;
            let tag = format!("n={n} r={r} seed {seed}");
            ensure(rep.class >= Cubicality::PseudoCubical, || {
                format!("{tag}: sample is {}", rep.class)
            })?;
            ensure(rep.pieces_equal_global == rep.pieces_checked, || {
                format!(
                    "{tag}: piece differs from its global polytope: {:?}",
                    rep.first_piece_mismatch
                )
            })?;
            ensure(rep.equal, || {
                format!("{tag}: orthant mismatch {:?}", rep.first_orthant_mismatch)
            })?;
            ensure(normal_complex_equals_ipc(&rk).map_err(e2s)?, || {
                format!("{tag}: normal_complex_equals_ipc false")
            })?;
            Ok(rep.pieces_checked)
        })
        .collect::<Result<Vec<_>, String>>()?;
    ensure(pieces.len() >= 100, || format!("only {} instances", pieces.len()))?;

    let ce = fixtures::counterexample();
    let rep = compare_normal_complex(&ce).map_err(e2s)?;
    ensure(rep.pieces_equal_global < rep.pieces_checked && !rep.equal, || {
        "counterexample pieces all match their global polytopes".into()
    })?;
    ensure(
        matches!(normal_complex_equals_ipc(&ce), Err(Error::HypothesisViolated(_))),
        || "counterexample accepted by normal_complex_equals_ipc".into(),
    )?;
    Ok(format!(
        "{} pseudo-cubical instances, {} pieces, all equal their global polytopes; counterexample piece differs ({})",
        pieces.len(),
        pieces.iter().sum::<usize>(),
        rep.first_piece_mismatch.unwrap_or_default()
    ))
}

fn criterion_7(_: &Stats) -> Outcome {
    ensure(
        fixtures::example_multimatroid().check_multimatroid_axioms().passed(),
        || "example multimatroid fails BR1–BR4".into(),
    )?;
    let m = fixtures::example_5544();
    ensure(m.check_r_axioms().passed(), || "5,5,4,4,6 example fails R1–R3".into())?;
    let br2 = m.check_multimatroid_axioms();
    ensure(br2.check("BR2").is_some_and(|c| !c.passed), || {
        "5,5,4,4,6 example passes BR2".into()
    })?;

    // Every integer vector on B_2 with values in 0..=3 that is classified
    // pseudo-cubical must pass R1–R3.
    let g = fixtures::b2();
    let m_sets = g.num_colored_sets();
    let mut pc_vectors = 0;
    for digits in (1..m_sets).map(|_| 0..=3i128).multi_cartesian_product() {
        let values: Vec<Rational> = std::iter::once(rat(0)).chain(digits.into_iter().map(rat)).collect();
        if cubicality_of_values(&g, &values).class >= Cubicality::PseudoCubical {
            pc_vectors += 1;
            let rk = RankFunction::from_dense(&g, values).map_err(e2s)?;
            ensure(rk.is_r_multimatroid(), || {
                format!("pseudo-cubical but not ℝ-multimatroid: {:?}", rk.dense())
            })?;
        }
    }
    let mut samples = 0;
    for (n, r) in [(2, 2), (2, 3), (3, 2), (3, 3), (4, 2)] {
        let g = GroundSet::uniform(n, r).map_err(e2s)?;
        for seed in 0..20 {
            let rk = random_r_multimatroid(&g, 7000 + seed, SamplerMode::PseudoCubical).map_err(e2s)?;
            ensure(rk.check_r_axioms().passed(), || {
                format!("n={n} r={r} seed {seed}: fails R1–R3")
            })?;
            samples += 1;
        }
    }

    let g = GroundSet::uniform(3, 2).map_err(e2s)?;
    let all = enumerate_integer_multimatroids(&g, 3);
    ensure(!all.is_empty(), || "no multimatroids enumerated".into())?;
    let cubical = all
        .iter()
        .filter(|rk| rk.cubicality_class() == Cubicality::Cubical)
        .count();
    ensure(cubical == 0, || format!("{cubical} cubical multimatroids for n=3, r=2"))?;
    Ok(format!(
        "example axioms as stated; {pc_vectors} pseudo-cubical integer vectors on B_2 and {samples} samples pass R1–R3; \
         none of the {} integer multimatroids with n=3, r=2 is cubical",
        all.len()
    ))
}

fn random_divisor(rng: &mut ChaCha8Rng) -> Divisor {
    let n = rng.gen_range(1..=3);
    let sizes: Vec<usize> = (0..n).map(|_| rng.gen_range(2..=3)).collect();
    let g = GroundSet::with_sizes(&sizes).expect("valid sizes");
    let basis = [Basis::X, Basis::F, Basis::H][rng.gen_range(0..3)];
    let coeffs = (0..g.num_colored_sets())
        .map(|c| {
            if c == 0 {
                rat(0)
            } else {
                Rational::new(rng.gen_range(-20..=20), rng.gen_range(1..=6))
            }
        })
        .collect();
    Divisor::from_dense(&g, basis, coeffs).expect("valid coefficients")
}

fn criterion_8(_: &Stats) -> Outcome {
    let g = fixtures::b2();
    let order = [
        &["1"][..],
        &["1bar"],
        &["2"],
        &["2bar"],
        &["1", "2"],
        &["1bar", "2"],
        &["1", "2bar"],
        &["1bar", "2bar"],
    ];
    let read = |d: &Divisor| -> Vec<Rational> { order.iter().map(|l| d.get(&g.set_from_labels(l).unwrap())).collect() };
    let x = Divisor::sum_h(&g).convert(Basis::X);
    let want: Vec<Rational> = [3, 3, 3, 3, 5, 5, 5, 5].map(rat).to_vec();
    ensure(read(&x) == want, || format!("all-ones H in X: {:?}", read(&x)))?;
    let h = fixtures::example_5544().divisor().convert(Basis::H);
    let want: Vec<Rational> = [-1, -1, -2, -2, 3, 3, 3, 3].map(rat).to_vec();
    ensure(read(&h) == want, || format!("5,5,4,4,6 ranks in H: {:?}", read(&h)))?;

    let mut rng = ChaCha8Rng::seed_from_u64(8000);
    for i in 0..1000 {
        let d = random_divisor(&mut rng);
        for via in [Basis::X, Basis::F, Basis::H] {
            let back = d.convert(via).convert(d.basis());
            ensure(back == d, || {
                format!("divisor {i}: {:?} → {via:?} → back differs", d.basis())
            })?;
        }
        let chain = d
            .convert(Basis::X)
            .convert(Basis::F)
            .convert(Basis::H)
            .convert(Basis::X);
        ensure(chain == d.convert(Basis::X), || {
            format!("divisor {i}: X → F → H → X differs")
        })?;
    }
    Ok("fixture conversions exact; 1000 random divisors round-trip through X, F, H".into())
}

fn h(g: &GroundSet, s: &ColoredSet) -> Divisor {
    Divisor::generator(g, Basis::H, s).expect("owned")
}

fn criterion_9(stats: &Stats) -> Outcome {
    let mut strict = 0;
    let mut weak = 0;
    let mut vanishing = 0;
    for n in 1..=4 {
        let g = GroundSet::uniform(n, 2).map_err(e2s)?;
        let fan = Fan::build(&g).map_err(e2s)?;

        for chain in g.all_max_chains() {
            let ds: Vec<Divisor> = chain.sets().iter().map(|s| h(&g, s)).collect();
            let d = stats.degree(&fan, &ds)?;
            ensure(d == rat(1), || format!("chain {}: degree {d}", g.display_chain(&chain)))?;
            strict += 1;
        }

        // weakly nested families S_1 ⊆ ⋯ ⊆ S_n of nonempty sets
        let mut families: Vec<Vec<ColoredSet>> = g.nonempty_sets().into_iter().map(|s| vec![s]).collect();
        for _ in 1..n {
            let mut longer = Vec::new();
            for f in families {
                for c in g.superset_codes(f.last().expect("nonempty")) {
                    let mut next = f.clone();
                    next.push(g.set_at(c));
                    longer.push(next);
                }
            }
            families = longer;
        }
        let outcomes = families
            .par_iter()
            .map(|f| -> Result<(), String> {
                let ds: Vec<Divisor> = f.iter().map(|s| h(&g, s)).collect();
                let d = stats.degree(&fan, &ds)?;
                let big = f.iter().enumerate().all(|(i, s)| s.len() > i);
                let want = rat(if big { 1 } else { 0 });
                ensure(d == want, || {
                    format!("family {}: degree {d}", f.iter().map(|s| g.display(s)).join(" ⊆ "))
                })
            })
            .collect::<Result<Vec<_>, String>>()?;
        weak += outcomes.len();

        if n >= 2 {
            let nonempty = g.nonempty_sets();
            let mut jobs = Vec::new();
            let mut rng = ChaCha8Rng::seed_from_u64(9000 + n as u64);
            for b in 0..n {
                for j in 0..2 {
                    let single = g.empty_set().with(b, j);
                    for s in nonempty.iter().filter(|s| s.get(b).is_some()) {
                        for _ in 0..2 {
                            let rest: Vec<Divisor> = (0..n - 2)
                                .map(|_| {
                                    let t = &nonempty[rng.gen_range(0..nonempty.len())];
                                    let basis = [Basis::X, Basis::H][rng.gen_range(0..2)];
                                    Divisor::generator(&g, basis, t).expect("owned")
                                })
                                .collect();
                            jobs.push((single.clone(), s.clone(), rest));
                        }
                    }
                }
            }
            let count = jobs
                .par_iter()
                .map(|(single, s, rest)| -> Result<(), String> {
                    let mut ds = vec![h(&g, single), Divisor::generator(&g, Basis::X, s).expect("owned")];
                    ds.extend(rest.iter().cloned());
                    let d = stats.degree(&fan, &ds)?;
                    ensure(d == rat(0), || {
                        format!("h{}·x{}·…: degree {d}", g.display(single), g.display(s))
                    })
                })
                .collect::<Result<Vec<_>, String>>()?
                .len();
            vanishing += count;
        }
    }
    Ok(format!(
        "n ≤ 4, r = 2: {strict} strict chains give 1, {weak} weakly nested families match |S_i| ≥ i, \
         {vanishing} products with h_{{k^j}}·x_S (k ∈ S) vanish"
    ))
}

fn criterion_10(stats: &Stats) -> Outcome {
    let start = Instant::now();
    let mut grounds = Vec::new();
    for n in 1..=4 {
        for sizes in (0..n).map(|_| 2..=4usize).multi_cartesian_product() {
            grounds.push(sizes);
        }
    }
    let cones = grounds
        .par_iter()
        .map(|sizes| -> Result<usize, String> {
            let g = GroundSet::with_sizes(sizes).map_err(e2s)?;
            let fan = Fan::build(&g).map_err(e2s)?;
            let u = fan.check_unimodular();
            ensure(u.unimodular, || {
                format!("{sizes:?}: not unimodular at {:?}", u.failing_cone)
            })?;
            let b = fan.check_balancing(&fan.top_cycle());
            ensure(b.balanced, || {
                format!("{sizes:?}: top cycle unbalanced at {:?}", b.violation)
            })?;
            Ok(u.cones_checked)
        })
        .collect::<Result<Vec<_>, String>>()?;
    let internal = stats.internal_failures.load(Ordering::Relaxed);
    let checked = stats.cycles_checked.load(Ordering::Relaxed);
    ensure(internal == 0, || {
        format!("{internal} internal consistency failures in the degree computations")
    })?;
    ensure(checked > 0, || "no intermediate cycles were checked".into())?;
    Ok(format!(
        "{} ground sets (n ≤ 4, block sizes 2..=4), {} cones unimodular, top cycles balanced; \
         {checked} intermediate cycles from the degree suites balanced, in {:?}",
        grounds.len(),
        cones.iter().sum::<usize>(),
        start.elapsed()
    ))
}

fn main() {
    colorfan::init_thread_pool();
    let criteria: [(&str, Criterion); 10] = [
        ("value 68", criterion_1),
        ("value 124", criterion_2),
        ("h-monomial degrees, exhaustive", criterion_3),
        ("degree of D_M^n, randomized", criterion_4),
        ("cubicality fixtures", criterion_5),
        ("normal complex pieces", criterion_6),
        ("axiom fixtures", criterion_7),
        ("basis changes", criterion_8),
        ("nested-chain identities", criterion_9),
        ("structural certification", criterion_10),
    ];
    let stats = Stats::default();
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = f(&stats);
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {:>2} PASS [{secs:.2}s] {name}: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {:>2} FAIL [{secs:.2}s] {name}: {detail}", i + 1);
            }
        }
    }
    println!("{}/10 criteria passed", 10 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
