//! Verification of the two identities, one instance at a time or as a
//! seeded suite with a deterministic JSON summary.

use std::str::FromStr;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::chow::{degree_power, verify_theorem_a};
use crate::error::{Error, Result};
use crate::fan::Fan;
use crate::fixtures;
use crate::geometry::complex::DEFAULT_TRANSVERSAL_BUDGET_N;
use crate::geometry::{ipc_volume, ipc_volume_via_transversals};
use crate::ground::{ColoredSet, GroundSet};
use crate::io::ranks_to_json;
use crate::multimatroid::{
    boolean_multimatroid, random_r_multimatroid, sum_h_rank, Cubicality, RankFunction, SamplerMode,
};
use crate::rational::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum VolumeMethod {
    Triangulation,
    Transversal,
    Both,
}

impl FromStr for VolumeMethod {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "triangulation" => Ok(VolumeMethod::Triangulation),
            "transversal" => Ok(VolumeMethod::Transversal),
            "both" => Ok(VolumeMethod::Both),
            _ => Err(Error::InvalidInput(format!("unknown method {s:?}"))),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub instance: serde_json::Value,
    #[serde(with = "crate::rational::as_string")]
    pub lhs: Rational,
    #[serde(with = "crate::rational::as_string")]
    pub rhs: Rational,
    #[serde(with = "crate::rational::as_opt_string", skip_serializing_if = "Option::is_none")]
    pub third: Option<Rational>,
    pub equal: bool,
    pub elapsed_ms: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
}

fn ms(start: Instant) -> f64 {
    start.elapsed().as_secs_f64() * 1e3
}

/// `∫ h_{S_1} ⋯ h_{S_n}` against the transversal count.
pub fn verify_a(fan: &Fan, sets: &[ColoredSet]) -> Result<VerificationReport> {
    let start = Instant::now();
    let r = verify_theorem_a(fan, sets)?;
    let g = fan.ground();
    Ok(VerificationReport {
        instance: serde_json::json!({
            "ground_set": g.spec(),
            "sets": sets.iter().map(|s| g.labels_of(s)).collect::<Vec<_>>(),
        }),
        lhs: r.degree,
        rhs: Rational::from_integer(r.transversal_count as i128),
        third: None,
        equal: r.equal,
        elapsed_ms: ms(start),
        seed: None,
    })
}

/// Volumes by the requested method(s): the first is the triangulation
/// value whenever it is computed.
pub fn volumes(rk: &RankFunction, method: VolumeMethod, budget_n: usize) -> Result<(Rational, Option<Rational>)> {
    let transversal = || -> Result<Rational> {
        Ok(ipc_volume_via_transversals(rk, budget_n)?
            .into_iter()
            .map(|(_, v)| v)
            .sum())
    };
    match method {
        VolumeMethod::Triangulation => Ok((ipc_volume(rk)?, None)),
        VolumeMethod::Transversal => Ok((transversal()?, None)),
        VolumeMethod::Both => Ok((ipc_volume(rk)?, Some(transversal()?))),
    }
}

/// `∫ D_M^n` against `Vol(IPC(M))`.
pub fn verify_b(rk: &RankFunction, method: VolumeMethod, budget_n: usize) -> Result<VerificationReport> {
    let start = Instant::now();
    let fan = Fan::build(rk.ground())?;
    let lhs = degree_power(&fan, &rk.divisor())?;
    let (rhs, third) = volumes(rk, method, budget_n)?;
    Ok(VerificationReport {
        instance: serde_json::json!({
            "ground_set": rk.ground().spec(),
            "ranks": ranks_to_json(rk),
        }),
        lhs,
        rhs,
        third,
        equal: lhs == rhs && third.is_none_or(|t| t == lhs),
        elapsed_ms: ms(start),
        seed: None,
    })
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(default)]
pub struct SuiteConfig {
    pub seed: u64,
    pub fixtures: bool,
    pub corrupted_fan: bool,
    /// Block sizes of ground sets whose fan is certified.
    pub structural: Vec<Vec<usize>>,
    pub monomial_sizes: Vec<Vec<usize>>,
    pub monomial_samples: usize,
    pub volume_sizes: Vec<Vec<usize>>,
    pub volume_samples: usize,
    pub modes: Vec<SamplerMode>,
    pub method: VolumeMethod,
    pub budget_n: usize,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            seed: 2024,
            fixtures: true,
            corrupted_fan: true,
            structural: vec![vec![2, 2], vec![3, 2], vec![2, 2, 2], vec![3, 3, 2]],
            monomial_sizes: vec![vec![2, 2], vec![3, 2], vec![2, 2, 2]],
            monomial_samples: 20,
            volume_sizes: vec![vec![2, 2], vec![3, 2], vec![2, 2, 2]],
            volume_samples: 8,
            modes: vec![SamplerMode::General, SamplerMode::PseudoCubical],
            method: VolumeMethod::Both,
            budget_n: DEFAULT_TRANSVERSAL_BUDGET_N,
        }
    }
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct CaseResult {
    pub name: String,
    pub passed: bool,
    pub detail: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct SuiteSummary {
    pub seed: u64,
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    pub non_pseudo_cubical_instances: usize,
    pub failures: Vec<String>,
    pub cases: Vec<CaseResult>,
}

impl SuiteSummary {
    pub fn all_passed(&self) -> bool {
        self.failed == 0
    }
}

fn case(name: String, outcome: Result<(bool, String)>, seed: Option<u64>) -> CaseResult {
    match outcome {
        Ok((passed, detail)) => CaseResult {
            name,
            passed,
            detail,
            seed,
        },
        Err(e) => CaseResult {
            name,
            passed: false,
            detail: format!("error: {e}"),
            seed,
        },
    }
}

fn report_outcome(r: &VerificationReport) -> (bool, String) {
    let third = r.third.map(|t| format!(", oracle {t}")).unwrap_or_default();
    (r.equal, format!("lhs {}, rhs {}{third}", r.lhs, r.rhs))
}

fn sizes_label(sizes: &[usize]) -> String {
    sizes.iter().map(ToString::to_string).collect::<Vec<_>>().join("x")
}

/// Runs every configured check; individual failures are recorded and the
/// suite continues.
pub fn run_suite(config: &SuiteConfig) -> SuiteSummary {
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let mut cases: Vec<CaseResult> = Vec::new();
    let mut non_pc = 0;

    if config.fixtures {
        let g = fixtures::b2();
        let fixtures_b: Vec<(&str, RankFunction, i128)> = vec![
            ("sum_h_b2", sum_h_rank(&g), 68),
            ("example_5544", fixtures::example_5544(), 124),
            ("boolean_b2", boolean_multimatroid(&g), 8),
        ];
        for (name, rk, expected) in fixtures_b {
            let outcome = verify_b(&rk, config.method, config.budget_n).map(|r| {
                let (ok, detail) = report_outcome(&r);
                (
                    ok && r.lhs == Rational::from_integer(expected),
                    format!("{detail}, expected {expected}"),
                )
            });
            cases.push(case(format!("fixture/{name}"), outcome, None));
        }
        let fan = Fan::build(&g).expect("b2");
        let s = |l: &[&str]| g.set_from_labels(l).expect("labels");
        let a_cases = vec![
            ("crossing_pair", vec![s(&["1", "2"]), s(&["1bar", "2"])], 2),
            ("maximal_chain", vec![s(&["1"]), s(&["1", "2"])], 1),
            ("repeated_singleton", vec![s(&["1"]), s(&["1"])], 0),
        ];
        for (name, sets, expected) in a_cases {
            let outcome = verify_a(&fan, &sets).map(|r| {
                let (ok, detail) = report_outcome(&r);
                (ok && r.rhs == Rational::from_integer(expected), detail)
            });
            cases.push(case(format!("fixture/monomial/{name}"), outcome, None));
        }
    }

    if config.corrupted_fan {
        let rep = fixtures::corrupted_fan().check_unimodular();
        cases.push(CaseResult {
            name: "corrupted_fan/unimodularity_failure_reported".into(),
            passed: !rep.unimodular,
            detail: format!("failing cone {:?}", rep.failing_cone),
            seed: None,
        });
    }

    let structural: Vec<CaseResult> = config
        .structural
        .par_iter()
        .map(|sizes| {
            let outcome = GroundSet::with_sizes(sizes).and_then(|g| {
                let fan = Fan::build(&g)?;
                let u = fan.check_unimodular();
                let b = fan.check_balancing(&fan.top_cycle());
                Ok((
                    u.unimodular && b.balanced,
                    format!("unimodular {}, top cycle balanced {}", u.unimodular, b.balanced),
                ))
            });
            case(format!("structural/{}", sizes_label(sizes)), outcome, None)
        })
        .collect();
    cases.extend(structural);

    let mut a_jobs = Vec::new();
    for sizes in &config.monomial_sizes {
        for _ in 0..config.monomial_samples {
            a_jobs.push((sizes.clone(), rng.gen::<u64>()));
        }
    }
    let a_cases: Vec<CaseResult> = a_jobs
        .par_iter()
        .map(|(sizes, seed)| {
            let outcome = GroundSet::with_sizes(sizes).and_then(|g| {
                let fan = Fan::build(&g)?;
                let mut r = ChaCha8Rng::seed_from_u64(*seed);
                let nonempty = g.nonempty_sets();
                let sets: Vec<ColoredSet> = (0..g.n())
                    .map(|_| nonempty[r.gen_range(0..nonempty.len())].clone())
                    .collect();
                Ok(report_outcome(&verify_a(&fan, &sets)?))
            });
            case(format!("monomial/{}", sizes_label(sizes)), outcome, Some(*seed))
        })
        .collect();
    cases.extend(a_cases);

    let mut b_jobs = Vec::new();
    for mode in &config.modes {
        for sizes in &config.volume_sizes {
            for _ in 0..config.volume_samples {
                b_jobs.push((*mode, sizes.clone(), rng.gen::<u64>()));
            }
        }
    }
    let b_cases: Vec<(CaseResult, bool)> = b_jobs
        .par_iter()
        .map(|(mode, sizes, seed)| {
            let mut npc = false;
            let outcome = GroundSet::with_sizes(sizes).and_then(|g| {
                let rk = random_r_multimatroid(&g, *seed, *mode)?;
                npc = rk.cubicality_class() == Cubicality::NotPseudoCubical;
                let method = if g.n() > config.budget_n {
                    VolumeMethod::Triangulation
                } else {
                    config.method
                };
                Ok(report_outcome(&verify_b(&rk, method, config.budget_n)?))
            });
            let name = format!("volume/{mode:?}/{}", sizes_label(sizes)).to_lowercase();
            (case(name, outcome, Some(*seed)), npc)
        })
        .collect();
    for (c, npc) in b_cases {
        non_pc += npc as usize;
        cases.push(c);
    }

    let passed = cases.iter().filter(|c| c.passed).count();
    SuiteSummary {
        seed: config.seed,
        total: cases.len(),
        passed,
        failed: cases.len() - passed,
        non_pseudo_cubical_instances: non_pc,
        failures: cases
            .iter()
            .filter(|c| !c.passed)
            .map(|c| format!("{}: {}", c.name, c.detail))
            .collect(),
        cases,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    #[test]
    fn verify_b_fixtures() {
        let r = verify_b(&fixtures::example_5544(), VolumeMethod::Both, 4).unwrap();
        assert!(r.equal);
        assert_eq!((r.lhs, r.rhs, r.third), (rat(124), rat(124), Some(rat(124))));
        assert!(matches!(
            verify_b(&fixtures::counterexample(), VolumeMethod::Both, 4),
            Err(Error::DegenerateBlock { .. })
        ));
    }

    #[test]
    fn small_suite_is_green_and_replayable() {
        let config = SuiteConfig {
            structural: vec![vec![2, 2]],
            monomial_sizes: vec![vec![2, 2]],
            monomial_samples: 3,
            volume_sizes: vec![vec![2, 2]],
            volume_samples: 2,
            ..SuiteConfig::default()
        };
        let a = run_suite(&config);
        assert!(a.all_passed(), "{:?}", a.failures);
        let b = run_suite(&config);
        assert_eq!(serde_json::to_string(&a).unwrap(), serde_json::to_string(&b).unwrap());
    }
}
