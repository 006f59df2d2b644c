//! Minkowski sums and mixed volumes of coordinate simplices.

use itertools::Itertools;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::ground::ColoredSet;
use crate::matching::has_left_perfect_matching;
use crate::rational::{rat, Rational};

use super::polytope::{convex_hull, ExactPolytope, Point};
use super::volume::normalized_volume;

/// `c · Δ_S = conv(0, c·e_i : i ∈ S)` in `dim` coordinates, `S` a bitmask.
pub fn scaled_simplex(dim: usize, mask: usize, c: Rational) -> ExactPolytope {
    let mut pts = vec![vec![Rational::zero(); dim]];
    for i in 0..dim {
        if mask & (1 << i) != 0 {
            let mut p = vec![Rational::zero(); dim];
            p[i] = c;
            pts.push(p);
        }
    }
    convex_hull(dim, &pts, None).expect("nonempty point set")
}

pub fn simplex(dim: usize, mask: usize) -> ExactPolytope {
    scaled_simplex(dim, mask, rat(1))
}

/// Minkowski sum of polytopes in the same coordinates. Summands are added
/// one at a time and reduced to their vertices after each step; facet
/// normals of the sum are orthogonal to edge directions of the summands.
pub fn minkowski_sum(polytopes: &[ExactPolytope]) -> Result<ExactPolytope> {
    let Some(first) = polytopes.first() else {
        return Err(Error::InvalidInput("empty Minkowski sum".into()));
    };
    let dim = first.dim;
    for p in polytopes {
        if p.dim != dim || p.ambient != first.ambient {
            return Err(Error::GroundSetMismatch);
        }
    }
    let mut directions: Vec<Point> = Vec::new();
    let mut acc: Vec<Point> = vec![vec![Rational::zero(); dim]];
    let mut hull = None;
    for p in polytopes {
        let verts = p.vertices()?;
        for (a, b) in verts.iter().tuple_combinations() {
            directions.push(a.iter().zip(b).map(|(x, y)| x - y).collect());
        }
        let sums: Vec<Point> = acc
            .iter()
            .cartesian_product(&verts)
            .map(|(a, b)| a.iter().zip(b).map(|(x, y)| x + y).collect())
            .collect();
        let h = convex_hull(dim, &sums, Some(&directions))?;
        acc = h.vertices()?;
        hull = Some(h);
    }
    let mut out = hull.expect("at least one summand");
    out.ambient = first.ambient.clone();
    Ok(out)
}

/// Whether the sets (bitmasks over `n` coordinates) have a system of
/// distinct representatives.
pub fn has_sdr(n: usize, masks: &[usize]) -> bool {
    let adj: Vec<Vec<usize>> = masks
        .iter()
        .map(|&m| (0..n).filter(|&i| m & (1 << i) != 0).collect())
        .collect();
    has_left_perfect_matching(&adj, n)
}

/// Normalized mixed volume `MV(Δ_{S_1}, ..., Δ_{S_n})` by inclusion-exclusion
/// over sub-sums, divided by `n!` so that `MV(Δ, ..., Δ) = 1`.
pub fn mixed_volume_by_inclusion_exclusion(n: usize, masks: &[usize]) -> Result<Rational> {
    let mut total = Rational::zero();
    for j in 1u32..(1 << masks.len()) {
        let parts: Vec<ExactPolytope> = (0..masks.len())
            .filter(|k| j & (1 << k) != 0)
            .map(|k| simplex(n, masks[k]))
            .collect();
        let v = normalized_volume(&minkowski_sum(&parts)?)?;
        if (masks.len() - j.count_ones() as usize).is_multiple_of(2) {
            total += v;
        } else {
            total -= v;
        }
    }
    let fact: i128 = (1..=n as i128).product();
    Ok(total / rat(fact))
}

/// Mixed volume of the simplices `Δ_{S_i}` for subsets `S_i` of a maximal
/// set `t`, computed by the matching criterion and by inclusion-exclusion.
/// The two must agree.
pub fn mixed_volume_simplices(t: &ColoredSet, sets: &[ColoredSet]) -> Result<Rational> {
    let n = t.arity();
    if sets.len() != n {
        return Err(Error::WrongLength {
            expected: n,
            got: sets.len(),
        });
    }
    let masks = sets
        .iter()
        .map(|s| {
            if s.is_empty() || !s.is_subset(t) {
                Err(Error::InvalidInput("sets must be nonempty subsets of T".into()))
            } else {
                Ok(s.underlying().iter().fold(0usize, |m, &b| m | (1 << b)))
            }
        })
        .collect::<Result<Vec<_>>>()?;
    mixed_volume_masks(n, &masks)
}

pub fn mixed_volume_masks(n: usize, masks: &[usize]) -> Result<Rational> {
    let by_matching = rat(has_sdr(n, masks) as i128);
    let by_volumes = mixed_volume_by_inclusion_exclusion(n, masks)?;
    if by_matching != by_volumes {
        return Err(Error::Internal(format!(
            "mixed volume of simplices {masks:?}: matching gives {by_matching}, volumes give {by_volumes}"
        )));
    }
    Ok(by_matching)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(xs: &[i128]) -> Point {
        xs.iter().map(|&x| rat(x)).collect()
    }

    #[test]
    fn pentagon_from_simplices() {
        let p = minkowski_sum(&[
            scaled_simplex(2, 0b01, rat(2)),
            scaled_simplex(2, 0b10, rat(1)),
            scaled_simplex(2, 0b11, rat(3)),
        ])
        .unwrap();
        assert_eq!(
            p.vertices().unwrap(),
            vec![pt(&[0, 0]), pt(&[0, 4]), pt(&[2, 4]), pt(&[5, 0]), pt(&[5, 1])]
        );
        assert_eq!(normalized_volume(&p).unwrap(), rat(31));
    }

    #[test]
    fn square_and_identity() {
        let sq = minkowski_sum(&[simplex(2, 0b01), simplex(2, 0b10)]).unwrap();
        assert_eq!(sq.vertices().unwrap(), ExactPolytope::unit_cube(2).vertices().unwrap());
        let origin = ExactPolytope::from_points(2, &[pt(&[0, 0])]).unwrap();
        let same = minkowski_sum(&[sq.clone(), origin]).unwrap();
        assert_eq!(same.vertices().unwrap(), sq.vertices().unwrap());
    }

    #[test]
    fn mixed_volumes() {
        assert_eq!(mixed_volume_masks(2, &[0b01, 0b10]).unwrap(), rat(1));
        assert_eq!(mixed_volume_masks(2, &[0b01, 0b01]).unwrap(), rat(0));
        assert_eq!(mixed_volume_masks(2, &[0b11, 0b11]).unwrap(), rat(1));
        assert_eq!(mixed_volume_masks(3, &[0b011, 0b011, 0b011]).unwrap(), rat(0));
        assert_eq!(mixed_volume_masks(3, &[0b011, 0b110, 0b101]).unwrap(), rat(1));
    }
}
