//! Independence polytopal complexes and normal complexes, orthant by orthant.

use itertools::Itertools;
use num_traits::{Signed, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::chow::{restrict_to_boolean, Basis, Divisor};
use crate::error::{Error, Result};
use crate::ground::{Chain, ColoredSet};
use crate::multimatroid::{Cubicality, RankFunction};
use crate::rational::{rat, Rational};

use super::minkowski::has_sdr;
use super::polytope::{unit, ExactPolytope, Halfspace};
use super::volume::volume_of;

/// `IP(M(S)) = {x ≥ 0 : Σ_{i∈X} x_i ≤ rk(X) for all X ⊆ S}` in the
/// coordinates of the blocks of `S`.
pub fn independence_polytope(rk: &RankFunction, s: &ColoredSet) -> Result<ExactPolytope> {
    let restricted = rk.restrict(s)?;
    let m = s.len();
    let mut hrep: Vec<Halfspace> = (0..m).map(|i| Halfspace::new(unit(m, i, -1), rat(0))).collect();
    for mask in 1..(1usize << m) {
        let a = (0..m).map(|i| rat((mask >> i & 1) as i128)).collect();
        hrep.push(Halfspace::new(a, restricted.values[mask]));
    }
    Ok(ExactPolytope::from_hrep(m, hrep).in_orthant(s))
}

/// `Vol_T(IP(M(T)))` for every maximal `T`, in canonical order.
pub fn orthant_volumes(rk: &RankFunction) -> Result<Vec<(ColoredSet, Rational)>> {
    rk.ground()
        .maximal_sets()
        .into_par_iter()
        .map(|t| {
            let p = independence_polytope(rk, &t)?;
            let verts = p.vertices()?;
            let v = volume_of(&p, &verts, None);
            Ok((t, v))
        })
        .collect()
}

/// `Vol(IPC(M)) = Σ_T Vol_T(IP(M(T)))`.
pub fn ipc_volume(rk: &RankFunction) -> Result<Rational> {
    Ok(orthant_volumes(rk)?.into_iter().map(|(_, v)| v).sum())
}

pub const DEFAULT_TRANSVERSAL_BUDGET_N: usize = 4;

/// Per orthant, `Vol_T(Σ_S a^T_S Δ_S)` expanded over ordered `n`-sequences
/// of nonempty subsets of `T`, with the mixed volume of coordinate simplices
/// given by the existence of a system of distinct representatives.
pub fn ipc_volume_via_transversals(rk: &RankFunction, budget_n: usize) -> Result<Vec<(ColoredSet, Rational)>> {
    let g = rk.ground();
    let n = g.n();
    if n > budget_n {
        return Err(Error::BudgetExceeded(format!(
            "the transversal expansion has (2^{n}-1)^{n} terms per orthant, over the budget n <= {budget_n}; use the triangulation method"
        )));
    }
    let subsets = (1usize << n) - 1;
    let sequences: Vec<Vec<usize>> = (0..n)
        .map(|_| 1..=subsets)
        .multi_cartesian_product()
        .filter(|seq| has_sdr(n, seq))
        .collect();
    let d = rk.divisor();
    g.maximal_sets()
        .into_par_iter()
        .map(|t| {
            let a = restrict_to_boolean(&d, &t)?;
            let v: Rational = sequences
                .iter()
                .map(|seq| seq.iter().map(|&m| a.get(m)).product::<Rational>())
                .sum();
            Ok((t, v))
        })
        .collect()
}

/// `P_{σ_C}(D)` for a maximal chain `C` with top `T`: the cone
/// `x_{j_1} ≥ ... ≥ x_{j_n} ≥ 0` truncated by `Σ_{i∈S_k} x_i ≤ c(S_k)`.
pub fn normal_complex_piece(d: &Divisor, chain: &Chain) -> Result<ExactPolytope> {
    let g = d.ground();
    let x = d.convert(Basis::X);
    if let Some((s, c)) = x.support().into_iter().find(|(_, c)| c.is_negative()) {
        return Err(Error::InvalidInput(format!(
            "normal complex needs nonnegative coefficients, but c({}) = {c}",
            g.display(&s)
        )));
    }
    if !chain.is_maximal() || chain.sets()[0].arity() != g.n() {
        return Err(Error::InvalidInput("normal complex pieces need a maximal chain".into()));
    }
    let n = g.n();
    let order: Vec<usize> = chain
        .sets()
        .iter()
        .scan(g.empty_set(), |prev, s| {
            let b = (0..n)
                .find(|&b| s.get(b).is_some() && prev.get(b).is_none())
                .expect("strict");
            *prev = s.clone();
            Some(b)
        })
        .collect();
    let mut hrep = Vec::with_capacity(2 * n);
    for w in order.windows(2) {
        let mut a = vec![rat(0); n];
        a[w[1]] = rat(1);
        a[w[0]] = rat(-1);
        hrep.push(Halfspace::new(a, rat(0)));
    }
    hrep.push(Halfspace::new(unit(n, order[n - 1], -1), rat(0)));
    for s in chain.sets() {
        let a = (0..n).map(|b| rat(s.get(b).is_some() as i128)).collect();
        hrep.push(Halfspace::new(a, x.get(s)));
    }
    let top = chain.top().expect("maximal chain").clone();
    Ok(ExactPolytope::from_hrep(n, hrep).in_orthant(&top))
}

#[derive(Clone, Debug, Serialize)]
pub struct NormalComplexReport {
    pub class: Cubicality,
    pub pieces_checked: usize,
    /// Pieces that already satisfy every rank inequality of their orthant.
    pub pieces_equal_global: usize,
    pub first_piece_mismatch: Option<String>,
    pub orthants_checked: usize,
    pub orthants_equal: usize,
    pub first_orthant_mismatch: Option<String>,
    pub equal: bool,
}

struct OrthantOutcome {
    pieces: usize,
    pieces_ok: usize,
    piece_mismatch: Option<String>,
    union_ok: bool,
    detail: String,
}

/// Compares the normal complex of `D_M` with `IPC(M)` without checking the
/// pseudo-cubical hypothesis first.
pub fn compare_normal_complex(rk: &RankFunction) -> Result<NormalComplexReport> {
    let g = rk.ground();
    let d = rk.divisor();
    let class = rk.cubicality_class();
    let outcomes: Vec<OrthantOutcome> = g
        .maximal_sets()
        .into_par_iter()
        .map(|t| -> Result<OrthantOutcome> {
            let ip = independence_polytope(rk, &t)?;
            let ip_verts = ip.vertices()?;
            let ip_vol = volume_of(&ip, &ip_verts, None);
            let mut out = OrthantOutcome {
                pieces: 0,
                pieces_ok: 0,
                piece_mismatch: None,
                union_ok: true,
                detail: String::new(),
            };
            let mut union_verts = Vec::new();
            let mut vol = Rational::zero();
            for chain in g.enumerate_max_chains(&t)? {
                let piece = normal_complex_piece(&d, &chain)?;
                let verts = piece.vertices()?;
                vol += volume_of(&piece, &verts, None);
                out.pieces += 1;
                // piece ∩ {global rows} equals the piece iff its vertices satisfy them
                match verts.iter().find(|v| !ip.contains(v)) {
                    None => out.pieces_ok += 1,
                    Some(v) => {
                        if out.piece_mismatch.is_none() {
                            out.piece_mismatch = Some(format!(
                                "chain {}: vertex ({}) violates a rank inequality",
                                g.display_chain(&chain),
                                v.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")
                            ));
                        }
                    }
                }
                union_verts.extend(verts);
            }
            let covers = ip_verts.iter().all(|v| union_verts.contains(v));
            let inside = union_verts.iter().all(|v| ip.contains(v));
            out.union_ok = covers && inside && vol == ip_vol;
            if !out.union_ok {
                out.detail = format!(
                    "orthant {}: pieces have volume {vol}, IP has volume {ip_vol}",
                    g.display(&t)
                );
            }
            Ok(out)
        })
        .collect::<Result<_>>()?;
    let pieces_checked = outcomes.iter().map(|o| o.pieces).sum();
    let pieces_equal_global = outcomes.iter().map(|o| o.pieces_ok).sum();
    let orthants_equal = outcomes.iter().filter(|o| o.union_ok).count();
    Ok(NormalComplexReport {
        class,
        pieces_checked,
        pieces_equal_global,
        first_piece_mismatch: outcomes.iter().find_map(|o| o.piece_mismatch.clone()),
        orthants_checked: outcomes.len(),
        orthants_equal,
        first_orthant_mismatch: outcomes.iter().find(|o| !o.union_ok).map(|o| o.detail.clone()),
        equal: pieces_checked == pieces_equal_global && orthants_equal == outcomes.len(),
    })
}

/// Whether the normal complex of `D_M` is `IPC(M)`; requires `rk` to be
/// pseudo-cubical.
pub fn normal_complex_equals_ipc(rk: &RankFunction) -> Result<bool> {
    let rep = rk.cubicality();
    if rep.class == Cubicality::NotPseudoCubical {
        return Err(Error::HypothesisViolated(format!(
            "rank function is not pseudo-cubical: {} fails {}",
            rep.witness_chain.unwrap_or_default(),
            rep.witness.unwrap_or_default()
        )));
    }
    Ok(compare_normal_complex(rk)?.equal)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ground::GroundSet;
    use crate::multimatroid::{boolean_multimatroid, sum_h_rank};
    use crate::rational::frac;

    fn b2() -> GroundSet {
        GroundSet::from_labels(&[&["1", "1bar"], &["2", "2bar"]]).unwrap()
    }

    fn rk_5544(g: &GroundSet) -> RankFunction {
        RankFunction::from_fn(g, |s| match (s.len(), s.get(0).is_some()) {
            (1, true) => rat(5),
            (1, false) => rat(4),
            _ => rat(6),
        })
    }

    fn pts(v: &[(i128, i128)]) -> Vec<Vec<Rational>> {
        v.iter().map(|&(a, b)| vec![rat(a), rat(b)]).collect()
    }

    #[test]
    fn pentagon_of_5544() {
        let g = b2();
        let t = g.set_from_labels(&["1", "2"]).unwrap();
        let p = independence_polytope(&rk_5544(&g), &t).unwrap();
        assert_eq!(p.hrep.len(), 5);
        assert_eq!(p.vertices().unwrap(), pts(&[(0, 0), (0, 4), (2, 4), (5, 0), (5, 1)]));
    }

    #[test]
    fn ipc_volumes() {
        let g = b2();
        assert_eq!(ipc_volume(&boolean_multimatroid(&g)).unwrap(), rat(8));
        assert_eq!(ipc_volume(&rk_5544(&g)).unwrap(), rat(124));
        assert_eq!(ipc_volume(&sum_h_rank(&g)).unwrap(), rat(68));
        assert_eq!(ipc_volume(&RankFunction::zero(&g)).unwrap(), rat(0));
    }

    #[test]
    fn transversal_oracle() {
        let g = b2();
        let per = ipc_volume_via_transversals(&rk_5544(&g), 4).unwrap();
        assert!(per.iter().all(|(_, v)| *v == rat(31)));
        let total: Rational = ipc_volume_via_transversals(&boolean_multimatroid(&g), 4)
            .unwrap()
            .into_iter()
            .map(|(_, v)| v)
            .sum();
        assert_eq!(total, rat(8));
        assert!(matches!(
            ipc_volume_via_transversals(&rk_5544(&g), 1),
            Err(Error::BudgetExceeded(_))
        ));
    }

    #[test]
    fn piece_of_sum_h() {
        let g = b2();
        let t = g.set_from_labels(&["1", "2"]).unwrap();
        let chain = &g.enumerate_max_chains(&t).unwrap()[0];
        let p = normal_complex_piece(&Divisor::sum_h(&g), chain).unwrap();
        assert_eq!(
            p.vertices().unwrap(),
            vec![
                vec![rat(0), rat(0)],
                vec![frac(5, 2), frac(5, 2)],
                vec![rat(3), rat(0)],
                vec![rat(3), rat(2)],
            ]
        );
        let zero = normal_complex_piece(&Divisor::zero(&g, Basis::X), chain).unwrap();
        assert_eq!(zero.vertices().unwrap(), vec![vec![rat(0), rat(0)]]);
    }

    #[test]
    fn counterexample_pieces_differ() {
        let g = GroundSet::from_labels(&[&["1"], &["2"]]).unwrap();
        let rk = RankFunction::from_fn(&g, |s| {
            rat(match (s.get(0), s.get(1)) {
                (Some(_), None) => 2,
                (None, Some(_)) => 1,
                _ => 3,
            })
        });
        assert!(matches!(
            normal_complex_equals_ipc(&rk),
            Err(Error::HypothesisViolated(_))
        ));
        let rep = compare_normal_complex(&rk).unwrap();
        assert!(!rep.equal);
        assert!(rep.first_piece_mismatch.unwrap().contains("3/2, 3/2"));
    }

    #[test]
    fn pseudo_cubical_examples_match() {
        let g = b2();
        assert!(normal_complex_equals_ipc(&rk_5544(&g)).unwrap());
        assert!(normal_complex_equals_ipc(&sum_h_rank(&g)).unwrap());
        assert!(normal_complex_equals_ipc(&boolean_multimatroid(&g)).unwrap());
    }
}
