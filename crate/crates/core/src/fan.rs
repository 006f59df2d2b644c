//! The π-colored fan in integer coordinates.
//!
//! `N^π` is the product over blocks of `Z^{E_i} / Z·e_{E_i}`. We use the
//! basis obtained by dropping the last label of each block, so a block
//! `{1, 1bar}` contributes one coordinate with `ē_1 = 1` and `ē_1bar = -1`.
//!
//! Cones are indexed by chains of nonempty colored sets, stored as strictly
//! increasing vectors of set codes. All chains of a given length get a dense
//! id, which lets weighted cycles be plain vectors.

use std::collections::HashMap;
use std::sync::OnceLock;

use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::ground::{Chain, ColoredSet, GroundSet};
use crate::linalg::{elementary_divisors, Matrix};
use crate::rational::{rat, Rational};

pub type LatticePoint = Vec<i64>;

/// A cone `σ_C` with its chain and generator vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FanCone {
    pub chain: Vec<usize>,
    pub generators: Vec<LatticePoint>,
}

/// Per-length chain tables.
#[derive(Debug)]
pub(crate) struct ChainIndex {
    /// `chains[k]` lists chains of length `k` in lexicographic code order.
    pub chains: Vec<Vec<Vec<usize>>>,
    pub ids: Vec<HashMap<Vec<usize>, usize>>,
    /// `facets[k][id]` lists `(face id in length k-1, removed code)`.
    pub facets: Vec<Vec<Vec<(usize, usize)>>>,
}

/// Left inverses of the generator matrices of all non-maximal cones.
#[derive(Debug)]
struct Solvers {
    /// `left[k][id]` is a `k × d` matrix `L` with `L G = I`.
    left: Vec<Vec<Matrix>>,
}

#[derive(Debug)]
pub struct Fan {
    ground: GroundSet,
    dim: usize,
    offsets: Vec<usize>,
    /// Ray vector of every colored set, by code; the empty set maps to 0.
    rays: Vec<LatticePoint>,
    rays_q: Vec<Vec<Rational>>,
    index: ChainIndex,
    solvers: OnceLock<Solvers>,
    sign: OnceLock<Rational>,
    /// Replacement generators for corrupted-fixture cones, keyed by chain.
    overrides: HashMap<Vec<usize>, Vec<LatticePoint>>,
}

#[derive(Clone, Debug, Serialize)]
pub struct UnimodularityReport {
    pub unimodular: bool,
    pub cones_checked: usize,
    /// First cone, in canonical order, whose generators do not extend to a
    /// lattice basis.
    pub failing_cone: Option<String>,
    pub elementary_divisors: Option<Vec<i128>>,
}

#[derive(Clone, Debug, Serialize)]
pub struct BalancingReport {
    pub balanced: bool,
    pub faces_checked: usize,
    pub violation: Option<String>,
}

/// A Minkowski weight: rational weights on the cones of one dimension.
#[derive(Clone, Debug, PartialEq)]
pub struct WeightedCycle {
    dim: usize,
    weights: Vec<Rational>,
}

impl WeightedCycle {
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Weights indexed like [`Fan::cones_of_dim`].
    pub fn weights(&self) -> &[Rational] {
        &self.weights
    }

    pub fn set_weight(&mut self, cone: usize, w: Rational) {
        self.weights[cone] = w;
    }

    /// The weight at the origin of a 0-dimensional cycle.
    pub fn degree(&self) -> Option<Rational> {
        (self.dim == 0).then(|| self.weights[0])
    }
}

impl Fan {
    pub fn build(ground: &GroundSet) -> Result<Self> {
        if let Some(b) = ground.blocks().iter().position(|b| b.len() < 2) {
            return Err(Error::DegenerateBlock { block: b });
        }
        let mut offsets = Vec::with_capacity(ground.n());
        let mut dim = 0;
        for block in ground.blocks() {
            offsets.push(dim);
            dim += block.len() - 1;
        }
        let rays: Vec<LatticePoint> = ground
            .colored_sets()
            .iter()
            .map(|s| ray_in(ground, &offsets, dim, s))
            .collect();
        let rays_q = rays
            .iter()
            .map(|r| r.iter().map(|&x| rat(x as i128)).collect())
            .collect();
        let index = ChainIndex::build(ground);
        Ok(Fan {
            ground: ground.clone(),
            dim,
            offsets,
            rays,
            rays_q,
            index,
            solvers: OnceLock::new(),
            sign: OnceLock::new(),
            overrides: HashMap::new(),
        })
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    /// Rank of `N^π`, which is `Σ (|E_i| - 1)`.
    pub fn ambient_dim(&self) -> usize {
        self.dim
    }

    /// Dimension of the fan, which is `n`.
    pub fn dim(&self) -> usize {
        self.ground.n()
    }

    pub fn ray_vector(&self, s: &ColoredSet) -> Result<LatticePoint> {
        self.ground.check_owns(s)?;
        if s.is_empty() {
            return Err(Error::InvalidInput("the empty set has no ray".into()));
        }
        Ok(self.rays[self.ground.code(s)].clone())
    }

    /// Coordinates of block `b` start here.
    pub fn block_offset(&self, b: usize) -> usize {
        self.offsets[b]
    }

    pub fn num_rays(&self) -> usize {
        self.ground.num_colored_sets() - 1
    }

    /// Number of cones of each dimension `0..=n` (the zero cone included).
    pub fn cone_counts(&self) -> Vec<usize> {
        self.index.chains.iter().map(Vec::len).collect()
    }

    pub fn cones_of_dim(&self, k: usize) -> &[Vec<usize>] {
        &self.index.chains[k]
    }

    pub fn cone_id(&self, chain: &[usize]) -> Option<usize> {
        self.index.ids.get(chain.len())?.get(chain).copied()
    }

    pub fn chain_of(&self, codes: &[usize]) -> Chain {
        Chain::new(codes.iter().map(|&c| self.ground.set_at(c)).collect()).expect("indexed chains are strict")
    }

    pub fn cone(&self, codes: &[usize]) -> FanCone {
        let generators = self
            .overrides
            .get(codes)
            .cloned()
            .unwrap_or_else(|| codes.iter().map(|&c| self.rays[c].clone()).collect());
        FanCone {
            chain: codes.to_vec(),
            generators,
        }
    }

    pub fn maximal_cones(&self) -> Vec<FanCone> {
        self.index.chains[self.dim()].iter().map(|c| self.cone(c)).collect()
    }

    pub fn display_cone(&self, codes: &[usize]) -> String {
        if codes.is_empty() {
            return "{0}".into();
        }
        self.ground.display_chain(&self.chain_of(codes))
    }

    /// A copy of this fan in which one generator of one maximal cone is
    /// doubled. Used as a negative fixture for [`Fan::check_unimodular`].
    pub fn with_doubled_generator(&self, cone: usize, generator: usize) -> Fan {
        let codes = self.index.chains[self.dim()][cone].clone();
        let mut gens: Vec<LatticePoint> = codes.iter().map(|&c| self.rays[c].clone()).collect();
        for x in gens[generator].iter_mut() {
            *x *= 2;
        }
        let mut overrides = self.overrides.clone();
        overrides.insert(codes, gens);
        Fan {
            ground: self.ground.clone(),
            dim: self.dim,
            offsets: self.offsets.clone(),
            rays: self.rays.clone(),
            rays_q: self.rays_q.clone(),
            index: self.index.clone_tables(),
            solvers: OnceLock::new(),
            sign: OnceLock::new(),
            overrides,
        }
    }

    /// Every maximal cone is checked: its `d × n` generator matrix must have
    /// all elementary divisors equal to 1.
    pub fn check_unimodular(&self) -> UnimodularityReport {
        let cones = &self.index.chains[self.dim()];
        let failure = cones.par_iter().enumerate().find_map_first(|(i, codes)| {
            let gens = self.cone(codes).generators;
            let ed = elementary_divisors(&gens);
            let ok = ed.len() == gens.len() && ed.iter().all(|&e| e == 1);
            (!ok).then_some((i, ed))
        });
        UnimodularityReport {
            unimodular: failure.is_none(),
            cones_checked: cones.len(),
            failing_cone: failure.as_ref().map(|(i, _)| self.display_cone(&cones[*i])),
            elementary_divisors: failure.map(|(_, ed)| ed),
        }
    }

    /// The fundamental class: weight 1 on every maximal cone.
    pub fn top_cycle(&self) -> WeightedCycle {
        WeightedCycle {
            dim: self.dim(),
            weights: vec![Rational::one(); self.index.chains[self.dim()].len()],
        }
    }

    pub fn zero_cycle(&self, dim: usize) -> WeightedCycle {
        WeightedCycle {
            dim,
            weights: vec![Rational::zero(); self.index.chains[dim].len()],
        }
    }

    fn solvers(&self) -> &Solvers {
        self.solvers.get_or_init(|| Solvers {
            left: (0..self.dim())
                .map(|k| {
                    self.index.chains[k]
                        .par_iter()
                        .map(|codes| self.left_inverse(codes))
                        .collect()
                })
                .collect(),
        })
    }

    fn left_inverse(&self, codes: &[usize]) -> Matrix {
        let k = codes.len();
        let d = self.dim;
        // G has full column rank, so reducing [GᵀG | Gᵀ] yields [I | L].
        let g: Vec<&Vec<Rational>> = codes.iter().map(|&c| &self.rays_q[c]).collect();
        let mut gram: Matrix = (0..k)
            .map(|i| {
                let mut row: Vec<Rational> = (0..k).map(|j| crate::linalg::dot(g[i], g[j])).collect();
                row.extend(g[i].iter().copied());
                row
            })
            .collect();
        let pivots = crate::linalg::rref(&mut gram);
        assert_eq!(pivots.len(), k, "cone generators are linearly dependent");
        gram.into_iter().map(|row| row[k..k + d].to_vec()).collect()
    }

    /// Weighted coface sums at every codimension-one face of the support.
    fn face_sums(&self, cycle: &WeightedCycle, phi: Option<&[Rational]>) -> Vec<Option<(Rational, Vec<Rational>)>> {
        let k = cycle.dim;
        let mut acc: Vec<Option<(Rational, Vec<Rational>)>> = vec![None; self.index.chains[k - 1].len()];
        for (sigma, w) in cycle.weights.iter().enumerate() {
            if w.is_zero() {
                continue;
            }
            for &(face, removed) in &self.index.facets[k][sigma] {
                let entry = acc[face].get_or_insert_with(|| (Rational::zero(), vec![Rational::zero(); self.dim]));
                if let Some(phi) = phi {
                    entry.0 += w * phi[removed];
                }
                for (x, &u) in entry.1.iter_mut().zip(&self.rays[removed]) {
                    if u != 0 {
                        *x += w * rat(u as i128);
                    }
                }
            }
        }
        acc
    }

    /// Coefficients of `v` in the generators of face `tau`, if it lies in
    /// their span.
    fn coordinates_in(&self, k: usize, tau: usize, v: &[Rational]) -> Option<Vec<Rational>> {
        let codes = &self.index.chains[k][tau];
        let lambda: Vec<Rational> = self.solvers().left[k][tau]
            .iter()
            .map(|row| crate::linalg::dot(row, v))
            .collect();
        for (i, &vi) in v.iter().enumerate() {
            let mut s = Rational::zero();
            for (l, &c) in lambda.iter().zip(codes) {
                let g = self.rays[c][i];
                if g != 0 {
                    s += l * rat(g as i128);
                }
            }
            if s != vi {
                return None;
            }
        }
        Some(lambda)
    }

    /// For every codimension-one face τ, the weighted sum of the primitive
    /// generators of its cofaces must lie in `span(τ)`.
    pub fn check_balancing(&self, cycle: &WeightedCycle) -> BalancingReport {
        if cycle.dim == 0 {
            return BalancingReport {
                balanced: true,
                faces_checked: 0,
                violation: None,
            };
        }
        let k = cycle.dim - 1;
        let sums = self.face_sums(cycle, None);
        let mut checked = 0;
        for (tau, entry) in sums.iter().enumerate() {
            let Some((_, v)) = entry else { continue };
            checked += 1;
            if self.coordinates_in(k, tau, v).is_none() {
                return BalancingReport {
                    balanced: false,
                    faces_checked: checked,
                    violation: Some(self.display_cone(&self.index.chains[k][tau])),
                };
            }
        }
        BalancingReport {
            balanced: true,
            faces_checked: checked,
            violation: None,
        }
    }

    /// Intersect a cycle with the piecewise-linear function taking the value
    /// `phi[code]` on the ray of each colored set. The input cycle is checked
    /// for balancing along the way.
    pub fn intersect(&self, cycle: &WeightedCycle, phi: &[Rational]) -> Result<WeightedCycle> {
        if cycle.dim == 0 {
            return Err(Error::InvalidInput("cannot intersect a 0-dimensional cycle".into()));
        }
        if phi.len() != self.ground.num_colored_sets() {
            return Err(Error::GroundSetMismatch);
        }
        let k = cycle.dim - 1;
        let sums = self.face_sums(cycle, Some(phi));
        let mut out = self.zero_cycle(k);
        for (tau, entry) in sums.into_iter().enumerate() {
            let Some((value, v)) = entry else { continue };
            let lambda = self.coordinates_in(k, tau, &v).ok_or_else(|| {
                Error::Internal(format!(
                    "balancing fails at {}",
                    self.display_cone(&self.index.chains[k][tau])
                ))
            })?;
            let codes = &self.index.chains[k][tau];
            let correction = lambda
                .iter()
                .zip(codes)
                .fold(Rational::zero(), |acc, (l, &c)| acc + l * phi[c]);
            out.weights[tau] = value - correction;
        }
        Ok(out)
    }

    /// Successive intersections of the top cycle with each function.
    pub fn intersection_sequence(&self, phis: &[&[Rational]]) -> Result<Vec<WeightedCycle>> {
        let mut cycles = vec![self.top_cycle()];
        for phi in phis {
            let next = self.intersect(cycles.last().expect("nonempty"), phi)?;
            cycles.push(next);
        }
        Ok(cycles)
    }

    fn raw_degree(&self, phis: &[&[Rational]]) -> Result<Rational> {
        if phis.len() != self.dim() {
            return Err(Error::WrongLength {
                expected: self.dim(),
                got: phis.len(),
            });
        }
        let cycles = self.intersection_sequence(phis)?;
        Ok(cycles.last().and_then(WeightedCycle::degree).expect("0-cycle"))
    }

    /// `+1` or `-1`, chosen so that the square-free monomial of a maximal
    /// chain has degree 1.
    pub fn degree_sign(&self) -> Result<Rational> {
        if let Some(s) = self.sign.get() {
            return Ok(*s);
        }
        let chain = &self.index.chains[self.dim()][0];
        let phis: Vec<Vec<Rational>> = chain
            .iter()
            .map(|&c| {
                let mut v = vec![Rational::zero(); self.ground.num_colored_sets()];
                v[c] = Rational::one();
                v
            })
            .collect();
        let refs: Vec<&[Rational]> = phis.iter().map(Vec::as_slice).collect();
        let raw = self.raw_degree(&refs)?;
        if raw != Rational::one() && raw != -Rational::one() {
            return Err(Error::Internal(format!("chain monomial has degree {raw}, expected ±1")));
        }
        Ok(*self.sign.get_or_init(|| raw))
    }

    /// Degree of the product of `n` divisors given by their values on rays
    /// (that is, their X-basis coefficients, indexed by set code).
    pub fn degree_of_functions(&self, phis: &[&[Rational]]) -> Result<Rational> {
        let sign = self.degree_sign()?;
        Ok(sign * self.raw_degree(phis)?)
    }

    /// Degree of a 0-dimensional cycle obtained from [`Fan::intersect`].
    pub fn calibrated(&self, cycle: &WeightedCycle) -> Result<Rational> {
        let raw = cycle
            .degree()
            .ok_or_else(|| Error::InvalidInput("degree of a positive-dimensional cycle".into()))?;
        Ok(self.degree_sign()? * raw)
    }
}

fn ray_in(ground: &GroundSet, offsets: &[usize], dim: usize, s: &ColoredSet) -> LatticePoint {
    let mut v = vec![0; dim];
    for (b, i) in s.elements() {
        let last = ground.blocks()[b].len() - 1;
        if i < last {
            v[offsets[b] + i] += 1;
        } else {
            for x in &mut v[offsets[b]..offsets[b] + last] {
                *x -= 1;
            }
        }
    }
    v
}

impl ChainIndex {
    fn build(ground: &GroundSet) -> Self {
        let n = ground.n();
        let total = ground.num_colored_sets();
        // strict supersets of each code, in code order
        let supersets: Vec<Vec<usize>> = (0..total)
            .map(|c| {
                let s = ground.set_at(c);
                let mut v: Vec<usize> = ground.superset_codes(&s).into_iter().filter(|&x| x != c).collect();
                v.sort_unstable();
                v
            })
            .collect();
        let mut chains: Vec<Vec<Vec<usize>>> = vec![vec![vec![]]];
        chains.push((1..total).map(|c| vec![c]).collect());
        for k in 1..n {
            let next: Vec<Vec<usize>> = chains[k]
                .iter()
                .flat_map(|ch| {
                    let last = *ch.last().expect("nonempty");
                    supersets[last].iter().map(move |&s| {
                        let mut c = ch.clone();
                        c.push(s);
                        c
                    })
                })
                .collect();
            chains.push(next);
        }
        let ids: Vec<HashMap<Vec<usize>, usize>> = chains
            .iter()
            .map(|cs| cs.iter().enumerate().map(|(i, c)| (c.clone(), i)).collect())
            .collect();
        let mut facets = vec![vec![]];
        for k in 1..=n {
            let f = chains[k]
                .iter()
                .map(|ch| {
                    (0..k)
                        .map(|p| {
                            let mut face = ch.clone();
                            let removed = face.remove(p);
                            (ids[k - 1][&face], removed)
                        })
                        .collect()
                })
                .collect();
            facets.push(f);
        }
        ChainIndex { chains, ids, facets }
    }

    fn clone_tables(&self) -> Self {
        ChainIndex {
            chains: self.chains.clone(),
            ids: self.ids.clone(),
            facets: self.facets.clone(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b2() -> Fan {
        let g = GroundSet::from_labels(&[&["1", "1bar"], &["2", "2bar"]]).unwrap();
        Fan::build(&g).unwrap()
    }

    #[test]
    fn rays_of_b2() {
        let f = b2();
        let g = f.ground().clone();
        let ray = |l: &[&str]| f.ray_vector(&g.set_from_labels(l).unwrap()).unwrap();
        assert_eq!(ray(&["1bar"]), vec![-1, 0]);
        assert_eq!(ray(&["1bar", "2"]), vec![-1, 1]);
        assert_eq!(ray(&["1", "2"]), vec![1, 1]);
        assert!(f.ray_vector(&g.empty_set()).is_err());
    }

    #[test]
    fn cone_counts() {
        let f = b2();
        assert_eq!(f.num_rays(), 8);
        assert_eq!(f.cone_counts(), vec![1, 8, 8]);

        let g = GroundSet::from_labels(&[&["a", "b", "c"], &["1", "2"]]).unwrap();
        let f = Fan::build(&g).unwrap();
        assert_eq!(f.num_rays(), 11);
        assert_eq!(f.cone_counts()[2], 12);

        let g = GroundSet::with_sizes(&[3]).unwrap();
        let f = Fan::build(&g).unwrap();
        assert_eq!((f.num_rays(), f.cone_counts()[1], f.ambient_dim()), (3, 3, 2));
    }

    #[test]
    fn singleton_block_is_degenerate() {
        let g = GroundSet::from_labels(&[&["1"], &["2"]]).unwrap();
        assert!(matches!(Fan::build(&g), Err(Error::DegenerateBlock { block: 0 })));
    }

    #[test]
    fn unimodular_and_corrupted() {
        let f = b2();
        assert!(f.check_unimodular().unimodular);
        let bad = f.with_doubled_generator(3, 0);
        let rep = bad.check_unimodular();
        assert!(!rep.unimodular);
        assert_eq!(rep.elementary_divisors, Some(vec![1, 2]));
    }

    #[test]
    fn balancing_of_top_and_perturbed_cycles() {
        let f = b2();
        assert!(f.check_balancing(&f.top_cycle()).balanced);
        let g = f.ground();
        let chain = vec![
            g.code(&g.set_from_labels(&["1"]).unwrap()),
            g.code(&g.set_from_labels(&["1", "2"]).unwrap()),
        ];
        let mut c = f.top_cycle();
        c.set_weight(f.cone_id(&chain).unwrap(), rat(2));
        let rep = f.check_balancing(&c);
        assert!(!rep.balanced);
        assert_eq!(rep.violation.as_deref(), Some("{1}"));
        let mut origin = f.zero_cycle(0);
        origin.set_weight(0, rat(7));
        assert!(f.check_balancing(&origin).balanced);
    }

    #[test]
    fn quotient_relation() {
        let g = GroundSet::with_sizes(&[3, 4, 2]).unwrap();
        let f = Fan::build(&g).unwrap();
        for b in 0..g.n() {
            let mut sum = vec![0; f.ambient_dim()];
            for i in 0..g.blocks()[b].len() {
                let s = g.empty_set().with(b, i);
                for (x, y) in sum.iter_mut().zip(f.ray_vector(&s).unwrap()) {
                    *x += y;
                }
            }
            assert!(sum.iter().all(|&x| x == 0));
        }
    }
}
