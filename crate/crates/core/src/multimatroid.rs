//! Rank functions on colored sets.
//!
//! A [`RankFunction`] is any rational-valued map on `R_π` with `rk(∅) = 0`.
//! Nothing else is assumed: the ℝ-multimatroid axioms (R1–R3), Bouchet's
//! multimatroid axioms (BR1–BR4) and the cubicality inequalities are all
//! predicates evaluated on demand, so invalid candidates are representable.

use std::fmt;

use num_traits::{One, Signed, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::chow::{Basis, Divisor};
use crate::error::{Error, Result};
use crate::ground::{Chain, ColoredSet, GroundSet};
use crate::rational::{frac, is_integer, rat, Rational};

#[derive(Clone, Debug, PartialEq)]
pub struct RankFunction {
    ground: GroundSet,
    values: Vec<Rational>,
}

/// One axiom's verdict, with the first violation in canonical order.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct AxiomCheck {
    pub axiom: String,
    pub passed: bool,
    pub witness: Option<String>,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct AxiomReport {
    pub checks: Vec<AxiomCheck>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn check(&self, axiom: &str) -> Option<&AxiomCheck> {
        self.checks.iter().find(|c| c.axiom == axiom)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Cubicality {
    NotPseudoCubical,
    PseudoCubical,
    Cubical,
}

impl fmt::Display for Cubicality {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Cubicality::NotPseudoCubical => "not_pseudo_cubical",
            Cubicality::PseudoCubical => "pseudo_cubical",
            Cubicality::Cubical => "cubical",
        })
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CubicalityReport {
    pub class: Cubicality,
    /// A violating chain, a tight chain, or (for cubical input) the first
    /// chain, rendered with its inequality.
    pub witness_chain: Option<String>,
    pub witness: Option<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SamplerMode {
    PseudoCubical,
    General,
}

impl std::str::FromStr for SamplerMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().replace('-', "_").as_str() {
            "pseudo_cubical" => Ok(SamplerMode::PseudoCubical),
            "general" => Ok(SamplerMode::General),
            _ => Err(Error::InvalidInput(format!("unknown sampler mode {s:?}"))),
        }
    }
}

impl RankFunction {
    /// Values by set code; `values[0]` is `rk(∅)` and must be zero.
    pub fn from_dense(ground: &GroundSet, values: Vec<Rational>) -> Result<Self> {
        if values.len() != ground.num_colored_sets() {
            return Err(Error::WrongLength {
                expected: ground.num_colored_sets(),
                got: values.len(),
            });
        }
        if !values[0].is_zero() {
            return Err(Error::InvalidInput("rk(∅) must be 0".into()));
        }
        Ok(RankFunction {
            ground: ground.clone(),
            values,
        })
    }

    pub fn from_fn(ground: &GroundSet, f: impl Fn(&ColoredSet) -> Rational) -> Self {
        let values = ground
            .colored_sets()
            .iter()
            .map(|s| if s.is_empty() { Rational::zero() } else { f(s) })
            .collect();
        RankFunction {
            ground: ground.clone(),
            values,
        }
    }

    pub fn zero(ground: &GroundSet) -> Self {
        Self::from_fn(ground, |_| Rational::zero())
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    pub fn dense(&self) -> &[Rational] {
        &self.values
    }

    pub fn rank(&self, s: &ColoredSet) -> Rational {
        self.values[self.ground.code(s)]
    }

    fn display_set(&self, s: &ColoredSet) -> String {
        self.ground.display(s)
    }

    fn covering_pairs(&self) -> impl Iterator<Item = (ColoredSet, ColoredSet)> + '_ {
        self.ground.colored_sets().into_iter().flat_map(move |s| {
            let g = &self.ground;
            (0..g.n())
                .filter(|&b| s.get(b).is_none())
                .flat_map(|b| (0..g.blocks()[b].len()).map(move |i| (b, i)))
                .map(|(b, i)| (s.clone(), s.with(b, i)))
                .collect::<Vec<_>>()
        })
    }

    /// First pair `(S, T)` with `S ∪ T` colored violating submodularity.
    fn submodularity_witness(&self) -> Option<String> {
        let sets = self.ground.colored_sets();
        for s in &sets {
            for t in &sets {
                let Some(u) = s.union(t) else { continue };
                let i = s.intersection(t);
                let lhs = self.rank(&u) + self.rank(&i);
                let rhs = self.rank(s) + self.rank(t);
                if lhs > rhs {
                    return Some(format!(
                        "S={}, T={}: rk(S∪T)+rk(S∩T) = {lhs} > {rhs} = rk(S)+rk(T)",
                        self.display_set(s),
                        self.display_set(t)
                    ));
                }
            }
        }
        None
    }

    fn monotonicity_witness(&self) -> Option<String> {
        self.covering_pairs().find_map(|(s, t)| {
            (self.rank(&s) > self.rank(&t)).then(|| {
                format!(
                    "rk({}) = {} > {} = rk({})",
                    self.display_set(&s),
                    self.rank(&s),
                    self.rank(&t),
                    self.display_set(&t)
                )
            })
        })
    }

    fn empty_witness(&self) -> Option<String> {
        (!self.values[0].is_zero()).then(|| format!("rk(∅) = {}", self.values[0]))
    }

    /// R1 `rk(∅) = 0`, R2 monotonicity on covering pairs, R3 submodularity.
    pub fn check_r_axioms(&self) -> AxiomReport {
        let check = |axiom: &str, witness: Option<String>| AxiomCheck {
            axiom: axiom.into(),
            passed: witness.is_none(),
            witness,
        };
        AxiomReport {
            checks: vec![
                check("R1", self.empty_witness()),
                check("R2", self.monotonicity_witness()),
                check("R3", self.submodularity_witness()),
            ],
        }
    }

    pub fn is_r_multimatroid(&self) -> bool {
        self.empty_witness().is_none()
            && self.monotonicity_witness().is_none()
            && self.submodularity_witness().is_none()
    }

    /// Integrality plus BR1–BR4.
    pub fn check_multimatroid_axioms(&self) -> AxiomReport {
        let check = |axiom: &str, witness: Option<String>| AxiomCheck {
            axiom: axiom.into(),
            passed: witness.is_none(),
            witness,
        };
        let integrality = self
            .values
            .iter()
            .enumerate()
            .find(|(_, v)| !is_integer(v) || v.is_negative())
            .map(|(c, v)| {
                format!(
                    "rk({}) = {v} is not a natural number",
                    self.display_set(&self.ground.set_at(c))
                )
            });
        let br2 = self.covering_pairs().find_map(|(s, t)| {
            let (a, b) = (self.rank(&s), self.rank(&t));
            (b < a || b > a + Rational::one())
                .then(|| format!("rk({}) = {a}, rk({}) = {b}", self.display_set(&s), self.display_set(&t)))
        });
        let br4 = self.two_point_witness();
        AxiomReport {
            checks: vec![
                check("integrality", integrality),
                check("BR1", self.empty_witness()),
                check("BR2", br2),
                check("BR3", self.submodularity_witness()),
                check("BR4", br4),
            ],
        }
    }

    fn two_point_witness(&self) -> Option<String> {
        let g = &self.ground;
        for s in g.colored_sets() {
            let base = self.rank(&s);
            for b in (0..g.n()).filter(|&b| s.get(b).is_none()) {
                let size = g.blocks()[b].len();
                for x in 0..size {
                    for y in x + 1..size {
                        let dx = self.rank(&s.with(b, x)) - base;
                        let dy = self.rank(&s.with(b, y)) - base;
                        if !dx.is_one() && !dy.is_one() {
                            return Some(format!(
                                "S={}, x={}, y={}: increments {dx} and {dy}",
                                g.display(&s),
                                g.label(b, x),
                                g.label(b, y)
                            ));
                        }
                    }
                }
            }
        }
        None
    }

    /// Values on the subsets of `t`, indexed by block bitmask.
    pub fn restrict(&self, t: &ColoredSet) -> Result<BooleanRank> {
        self.ground.check_owns(t)?;
        let blocks: Vec<usize> = t.underlying().into_iter().collect();
        let values = (0..1usize << blocks.len())
            .map(|mask| {
                let mut s = self.ground.empty_set();
                for (k, &b) in blocks.iter().enumerate() {
                    if mask & (1 << k) != 0 {
                        s = s.with(b, t.get(b).expect("block of t"));
                    }
                }
                self.rank(&s)
            })
            .collect();
        Ok(BooleanRank { values })
    }

    /// `D_M = Σ rk(S) x_S`.
    pub fn divisor(&self) -> Divisor {
        Divisor::from_dense(&self.ground, Basis::X, self.values.clone()).expect("rk(∅) = 0 by construction")
    }

    /// Chain values `(0, c_1, ..., c_n)` along a maximal chain.
    fn chain_values(&self, chain: &Chain) -> Vec<Rational> {
        std::iter::once(Rational::zero())
            .chain(chain.sets().iter().map(|s| self.rank(s)))
            .collect()
    }

    pub fn cubicality(&self) -> CubicalityReport {
        cubicality_of_values(&self.ground, &self.values)
    }

    pub fn cubicality_class(&self) -> Cubicality {
        self.cubicality().class
    }
}

/// Cubicality of the divisor `Σ c_S x_S` given by coefficients on set codes.
pub fn cubicality_of_values(ground: &GroundSet, values: &[Rational]) -> CubicalityReport {
    let rk = RankFunction {
        ground: ground.clone(),
        values: values.to_vec(),
    };
    let mut first_tight: Option<(Chain, String)> = None;
    let chains = ground.all_max_chains();
    for chain in &chains {
        let c = rk.chain_values(chain);
        let n = c.len() - 1;
        for i in 1..n {
            let lhs = rat(2) * c[i];
            let rhs = c[i - 1] + c[i + 1];
            let shown = format!("2·{} vs {}+{}", c[i], c[i - 1], c[i + 1]);
            if lhs < rhs {
                return CubicalityReport {
                    class: Cubicality::NotPseudoCubical,
                    witness_chain: Some(ground.display_chain(chain)),
                    witness: Some(shown.replace(" vs ", " < ")),
                };
            }
            if lhs == rhs && first_tight.is_none() {
                first_tight = Some((chain.clone(), shown.replace(" vs ", " = ")));
            }
        }
        for j in 1..=n {
            let shown = format!("{} vs {}", c[j], c[j - 1]);
            if c[j] < c[j - 1] {
                return CubicalityReport {
                    class: Cubicality::NotPseudoCubical,
                    witness_chain: Some(ground.display_chain(chain)),
                    witness: Some(shown.replace(" vs ", " < ")),
                };
            }
            if c[j] == c[j - 1] && first_tight.is_none() {
                first_tight = Some((chain.clone(), shown.replace(" vs ", " = ")));
            }
        }
    }
    match first_tight {
        Some((chain, w)) => CubicalityReport {
            class: Cubicality::PseudoCubical,
            witness_chain: Some(ground.display_chain(&chain)),
            witness: Some(w),
        },
        None => {
            let chain = &chains[0];
            let c = rk.chain_values(chain);
            let w = if c.len() > 2 {
                format!("2·{} > {}+{}", c[1], c[0], c[2])
            } else {
                format!("{} > {}", c[1], c[0])
            };
            CubicalityReport {
                class: Cubicality::Cubical,
                witness_chain: Some(ground.display_chain(chain)),
                witness: Some(w),
            }
        }
    }
}

/// A rank function on the power set of a colored set, indexed by bitmask
/// over the set's blocks in increasing order.
#[derive(Clone, Debug, PartialEq)]
pub struct BooleanRank {
    pub values: Vec<Rational>,
}

impl BooleanRank {
    pub fn size(&self) -> usize {
        self.values.len().trailing_zeros() as usize
    }

    /// M1–M3: normalised, monotone, submodular.
    pub fn is_r_matroid(&self) -> bool {
        let v = &self.values;
        if !v[0].is_zero() {
            return false;
        }
        let full = v.len();
        (0..full).all(|x| {
            (0..self.size()).all(|i| v[x] <= v[x | (1 << i)]) && (0..full).all(|y| v[x | y] + v[x & y] <= v[x] + v[y])
        })
    }
}

pub fn boolean_multimatroid(ground: &GroundSet) -> RankFunction {
    RankFunction::from_fn(ground, |s| rat(s.len() as i128))
}

/// `rk(S) = C(n+1, 2) - C(n+1-|S|, 2)`.
pub fn quadratic_rank(ground: &GroundSet) -> RankFunction {
    let n = ground.n() as i128;
    let c2 = |m: i128| m * (m - 1) / 2;
    RankFunction::from_fn(ground, |s| rat(c2(n + 1) - c2(n + 1 - s.len() as i128)))
}

/// X-coefficients of `Σ_S h_S`, read as a rank function.
pub fn sum_h_rank(ground: &GroundSet) -> RankFunction {
    let x = Divisor::sum_h(ground).convert(Basis::X);
    RankFunction::from_dense(ground, x.dense().to_vec()).expect("x_∅ = 0")
}

/// Default number of rejected candidates allowed by [`random_r_multimatroid`].
pub const DEFAULT_REJECTION_BUDGET: usize = 10_000;

pub fn random_r_multimatroid(ground: &GroundSet, seed: u64, mode: SamplerMode) -> Result<RankFunction> {
    random_r_multimatroid_with_budget(ground, seed, mode, DEFAULT_REJECTION_BUDGET)
}

pub fn random_r_multimatroid_with_budget(
    ground: &GroundSet,
    seed: u64,
    mode: SamplerMode,
    budget: usize,
) -> Result<RankFunction> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..=budget {
        let candidate = match mode {
            SamplerMode::PseudoCubical => sample_pseudo_cubical(ground, &mut rng),
            SamplerMode::General => sample_general(ground, &mut rng),
        };
        let ok = match mode {
            SamplerMode::PseudoCubical => candidate.cubicality_class() >= Cubicality::PseudoCubical,
            SamplerMode::General => candidate.is_r_multimatroid(),
        };
        if ok {
            return Ok(candidate);
        }
    }
    Err(Error::BudgetExceeded(format!(
        "no valid {mode:?} sample after {} candidates (seed {seed})",
        budget + 1
    )))
}

/// `rk(S) = Σ_{k ≤ |S|} g(k) + ε(S)` with `g` weakly decreasing and positive.
/// When `g` is strictly decreasing a noise term smaller than a quarter of
/// the smallest gap keeps every chain strictly concave and increasing.
fn sample_pseudo_cubical(ground: &GroundSet, rng: &mut ChaCha8Rng) -> RankFunction {
    let n = ground.n();
    let mut g: Vec<i128> = (0..n).map(|_| rng.gen_range(1..=12)).collect();
    g.sort_unstable_by(|a, b| b.cmp(a));
    let strict = g.windows(2).all(|w| w[0] > w[1]);
    let min_gap = g
        .windows(2)
        .map(|w| w[0] - w[1])
        .chain(std::iter::once(g[n - 1]))
        .min()
        .expect("n ≥ 1");
    let noisy = strict && rng.gen_bool(0.75);
    // ε ∈ (-min_gap/4, min_gap/4) on a grid of denominator 8·denominator
    let den = 8 * rng.gen_range(1..=3) as i128;
    let bound = min_gap * den / 4;
    let prefix: Vec<i128> = std::iter::once(0)
        .chain(g.iter().scan(0, |acc, &x| {
            *acc += x;
            Some(*acc)
        }))
        .collect();
    let noise: Vec<Rational> = ground
        .colored_sets()
        .iter()
        .map(|s| {
            if noisy && !s.is_empty() && bound > 1 {
                frac(rng.gen_range(-(bound - 1)..bound), den)
            } else {
                Rational::zero()
            }
        })
        .collect();
    RankFunction::from_fn(ground, |s| rat(prefix[s.len()]) + noise[ground.code(s)])
}

/// Nonnegative combination of weighted modular, truncated modular and
/// coverage functions, sometimes with a small perturbation.
fn sample_general(ground: &GroundSet, rng: &mut ChaCha8Rng) -> RankFunction {
    let labels: Vec<(usize, usize)> = (0..ground.n())
        .flat_map(|b| (0..ground.blocks()[b].len()).map(move |i| (b, i)))
        .collect();
    let mut values = vec![Rational::zero(); ground.num_colored_sets()];
    let sets = ground.colored_sets();
    let terms = rng.gen_range(1..=3);
    for _ in 0..terms {
        let scale = rat(rng.gen_range(1..=3));
        match rng.gen_range(0..3) {
            0 => {
                let w: Vec<i128> = labels.iter().map(|_| rng.gen_range(0..=6)).collect();
                add_term(&mut values, &sets, scale, |s| modular(s, &labels, &w));
            }
            1 => {
                let w: Vec<i128> = labels.iter().map(|_| rng.gen_range(1..=5)).collect();
                let cap = rng.gen_range(2..=8);
                add_term(&mut values, &sets, scale, |s| modular(s, &labels, &w).min(cap));
            }
            _ => {
                let universe = rng.gen_range(2..=6);
                let item_w: Vec<i128> = (0..universe).map(|_| rng.gen_range(1..=4)).collect();
                let mut items: Vec<usize> = (0..universe).collect();
                let covers: Vec<Vec<usize>> = labels
                    .iter()
                    .map(|_| {
                        items.shuffle(rng);
                        let k = rng.gen_range(0..=universe);
                        items[..k].to_vec()
                    })
                    .collect();
                add_term(&mut values, &sets, scale, |s| {
                    let mut hit = vec![false; universe];
                    for (b, i) in s.elements() {
                        let pos = labels.iter().position(|&l| l == (b, i)).expect("label");
                        for &it in &covers[pos] {
                            hit[it] = true;
                        }
                    }
                    hit.iter().zip(&item_w).filter(|(h, _)| **h).map(|(_, w)| w).sum()
                });
            }
        }
    }
    if rng.gen_bool(0.3) {
        for v in values.iter_mut().skip(1) {
            *v += frac(rng.gen_range(-2..=2), 16);
        }
    }
    RankFunction {
        ground: ground.clone(),
        values,
    }
}

fn modular(s: &ColoredSet, labels: &[(usize, usize)], w: &[i128]) -> i128 {
    s.elements()
        .map(|e| w[labels.iter().position(|&l| l == e).expect("label")])
        .sum()
}

fn add_term(values: &mut [Rational], sets: &[ColoredSet], scale: Rational, f: impl Fn(&ColoredSet) -> i128) {
    for (v, s) in values.iter_mut().zip(sets) {
        *v += scale * rat(f(s));
    }
}

/// Every integer rank function with values in `0..=max_rank` that satisfies
/// BR1–BR4. Values are assigned in order of set size, so BR2 prunes early.
pub fn enumerate_integer_multimatroids(ground: &GroundSet, max_rank: i128) -> Vec<RankFunction> {
    let mut order: Vec<usize> = (1..ground.num_colored_sets()).collect();
    order.sort_by_key(|&c| (ground.size_of_code(c), c));
    // for each set, the codes of its colored subsets of size one less
    let lower: Vec<Vec<usize>> = (0..ground.num_colored_sets())
        .map(|c| {
            let s = ground.set_at(c);
            s.elements().map(|(b, _)| ground.code(&s.without(b))).collect()
        })
        .collect();
    let mut out = Vec::new();
    let mut values = vec![0i128; ground.num_colored_sets()];
    fn go(
        k: usize,
        order: &[usize],
        lower: &[Vec<usize>],
        values: &mut Vec<i128>,
        max_rank: i128,
        ground: &GroundSet,
        out: &mut Vec<RankFunction>,
    ) {
        if k == order.len() {
            let rk = RankFunction {
                ground: ground.clone(),
                values: values.iter().map(|&v| rat(v)).collect(),
            };
            if rk.check_multimatroid_axioms().passed() {
                out.push(rk);
            }
            return;
        }
        let c = order[k];
        for v in 0..=max_rank {
            if lower[c].iter().all(|&l| v == values[l] || v == values[l] + 1) {
                values[c] = v;
                go(k + 1, order, lower, values, max_rank, ground, out);
            }
        }
        values[c] = 0;
    }
    go(0, &order, &lower, &mut values, max_rank, ground, &mut out);
    out
}
