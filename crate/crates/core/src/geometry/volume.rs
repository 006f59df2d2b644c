//! Normalized volume by a pulling triangulation.
//!
//! `Vol_T` gives the standard simplex volume 1, so it is `dim!` times the
//! Euclidean volume and every lattice simplex contributes `|det|`.

use num_traits::{Signed, Zero};

use crate::error::Result;
use crate::linalg::{affine_dimension, determinant};
use crate::rational::Rational;

use super::polytope::{ExactPolytope, Point};

/// Normalized volume; 0 for lower-dimensional polytopes.
pub fn normalized_volume(p: &ExactPolytope) -> Result<Rational> {
    normalized_volume_with_order(p, None)
}

/// As [`normalized_volume`], pulling vertices in the given priority order
/// (indices into the sorted vertex list). Different orders give different
/// triangulations of the same polytope.
pub fn normalized_volume_with_order(p: &ExactPolytope, order: Option<&[usize]>) -> Result<Rational> {
    let verts = p.vertices()?;
    Ok(volume_of(p, &verts, order))
}

pub(crate) fn volume_of(p: &ExactPolytope, verts: &[Point], order: Option<&[usize]>) -> Rational {
    let dim = p.dim;
    if verts.is_empty() || affine_dimension(verts) != Some(dim) {
        return Rational::zero();
    }
    if dim == 0 {
        return Rational::from_integer(1);
    }
    let rank_of: Vec<usize> = match order {
        Some(o) => {
            let mut r = vec![usize::MAX; verts.len()];
            for (pos, &v) in o.iter().enumerate() {
                r[v] = pos;
            }
            r.iter()
                .enumerate()
                .map(|(i, &x)| if x == usize::MAX { o.len() + i } else { x })
                .collect()
        }
        None => (0..verts.len()).collect(),
    };
    let tight: Vec<Vec<usize>> = p
        .hrep
        .iter()
        .map(|h| (0..verts.len()).filter(|&i| h.is_tight(&verts[i])).collect())
        .collect();
    let all: Vec<usize> = (0..verts.len()).collect();
    let simplices = triangulate(verts, &tight, &rank_of, &all, dim);
    simplices
        .iter()
        .map(|s| {
            let base = &verts[s[0]];
            let m: Vec<Vec<Rational>> = s[1..]
                .iter()
                .map(|&i| verts[i].iter().zip(base).map(|(a, b)| a - b).collect())
                .collect();
            determinant(&m).abs()
        })
        .sum()
}

/// Simplices (as vertex index lists) triangulating a `k`-dimensional face.
fn triangulate(verts: &[Point], tight: &[Vec<usize>], rank_of: &[usize], face: &[usize], k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![face[0]]];
    }
    let apex = *face.iter().min_by_key(|&&v| rank_of[v]).expect("nonempty face");
    let mut facets: Vec<Vec<usize>> = Vec::new();
    for t in tight {
        let sub: Vec<usize> = face.iter().copied().filter(|v| t.contains(v)).collect();
        if sub.len() < k || sub.contains(&apex) || facets.contains(&sub) {
            continue;
        }
        let pts: Vec<Point> = sub.iter().map(|&i| verts[i].clone()).collect();
        if affine_dimension(&pts) == Some(k - 1) {
            facets.push(sub);
        }
    }
    let mut out = Vec::new();
    for f in facets {
        for mut s in triangulate(verts, tight, rank_of, &f, k - 1) {
            s.insert(0, apex);
            out.push(s);
        }
    }
    out
}
