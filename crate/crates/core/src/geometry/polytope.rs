//! Exact polytopes given by inequalities, by points, or both.

use itertools::Itertools;
use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::ground::ColoredSet;
use crate::linalg::{affine_dimension, dot, nullspace, rank, solve_square};
use crate::rational::{rat, Rational};

pub type Point = Vec<Rational>;

/// `a · x ≤ b`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Halfspace {
    pub a: Vec<Rational>,
    pub b: Rational,
}

impl Halfspace {
    pub fn new(a: Vec<Rational>, b: Rational) -> Self {
        Halfspace { a, b }
    }

    pub fn slack(&self, x: &[Rational]) -> Rational {
        self.b - dot(&self.a, x)
    }

    pub fn contains(&self, x: &[Rational]) -> bool {
        !self.slack(x).is_negative()
    }

    pub fn is_tight(&self, x: &[Rational]) -> bool {
        self.slack(x).is_zero()
    }

    /// Scaled so the first nonzero coefficient is ±1.
    fn normalized(&self) -> Halfspace {
        match self.a.iter().find(|c| !c.is_zero()) {
            Some(lead) => {
                let s = lead.abs();
                Halfspace {
                    a: self.a.iter().map(|c| c / s).collect(),
                    b: self.b / s,
                }
            }
            None => self.clone(),
        }
    }
}

/// A polytope in the coordinates of a colored set (or of `R^dim`).
#[derive(Clone, Debug)]
pub struct ExactPolytope {
    pub ambient: Option<ColoredSet>,
    pub dim: usize,
    pub hrep: Vec<Halfspace>,
    vrep: Option<Vec<Point>>,
}

#[derive(Clone, Debug, Serialize)]
pub struct PolytopeJson {
    pub dim: usize,
    pub inequalities: Vec<InequalityJson>,
    pub vertices: Vec<Vec<String>>,
}

#[derive(Clone, Debug, Serialize)]
pub struct InequalityJson {
    pub a: Vec<String>,
    pub b: String,
}

impl ExactPolytope {
    pub fn from_hrep(dim: usize, hrep: Vec<Halfspace>) -> Self {
        ExactPolytope {
            ambient: None,
            dim,
            hrep,
            vrep: None,
        }
    }

    pub fn in_orthant(mut self, t: &ColoredSet) -> Self {
        self.ambient = Some(t.clone());
        self
    }

    /// Convex hull of a finite point set.
    pub fn from_points(dim: usize, points: &[Point]) -> Result<Self> {
        convex_hull(dim, points, None)
    }

    /// `[0,1]^dim`.
    pub fn unit_cube(dim: usize) -> Self {
        let mut hrep = Vec::new();
        for i in 0..dim {
            hrep.push(Halfspace::new(unit(dim, i, -1), rat(0)));
            hrep.push(Halfspace::new(unit(dim, i, 1), rat(1)));
        }
        Self::from_hrep(dim, hrep)
    }

    /// `conv(0, e_1, ..., e_dim)`.
    pub fn standard_simplex(dim: usize) -> Self {
        let mut hrep: Vec<Halfspace> = (0..dim).map(|i| Halfspace::new(unit(dim, i, -1), rat(0))).collect();
        hrep.push(Halfspace::new(vec![rat(1); dim], rat(1)));
        Self::from_hrep(dim, hrep)
    }

    pub fn cached_vertices(&self) -> Option<&[Point]> {
        self.vrep.as_deref()
    }

    pub fn contains(&self, x: &[Rational]) -> bool {
        self.hrep.iter().all(|h| h.contains(x))
    }

    /// Exact vertex set, sorted. Computed by solving every `dim`-subset of
    /// the inequalities as equalities and keeping feasible solutions.
    pub fn vertices(&self) -> Result<Vec<Point>> {
        if let Some(v) = &self.vrep {
            return Ok(v.clone());
        }
        enumerate_vertices(self.dim, &self.hrep)
    }

    /// Compute and cache the vertex set.
    pub fn with_vertices(mut self) -> Result<Self> {
        if self.vrep.is_none() {
            self.vrep = Some(enumerate_vertices(self.dim, &self.hrep)?);
        }
        Ok(self)
    }

    /// Same polytope with extra inequalities; the vertex cache is dropped.
    pub fn intersect(&self, extra: &[Halfspace]) -> Self {
        let mut hrep = self.hrep.clone();
        hrep.extend_from_slice(extra);
        ExactPolytope {
            ambient: self.ambient.clone(),
            dim: self.dim,
            hrep,
            vrep: None,
        }
    }

    pub fn to_json(&self) -> Result<PolytopeJson> {
        let vertices = self.vertices()?;
        Ok(PolytopeJson {
            dim: self.dim,
            inequalities: self
                .hrep
                .iter()
                .map(|h| InequalityJson {
                    a: h.a.iter().map(ToString::to_string).collect(),
                    b: h.b.to_string(),
                })
                .collect(),
            vertices: vertices
                .iter()
                .map(|p| p.iter().map(ToString::to_string).collect())
                .collect(),
        })
    }
}

pub(crate) fn unit(dim: usize, i: usize, sign: i128) -> Vec<Rational> {
    let mut v = vec![rat(0); dim];
    v[i] = rat(sign);
    v
}

fn dedup_rows(rows: &[Halfspace]) -> Vec<Halfspace> {
    rows.iter()
        .filter(|h| h.a.iter().any(|c| !c.is_zero()))
        .map(Halfspace::normalized)
        .sorted()
        .dedup()
        .collect()
}

pub(crate) fn enumerate_vertices(dim: usize, hrep: &[Halfspace]) -> Result<Vec<Point>> {
    // rows with zero normal are either always true or make the set empty
    if hrep.iter().any(|h| h.a.iter().all(Zero::is_zero) && h.b.is_negative()) {
        return Ok(vec![]);
    }
    let rows = dedup_rows(hrep);
    if dim == 0 {
        return Ok(vec![vec![]]);
    }
    let a: Vec<Vec<Rational>> = rows.iter().map(|h| h.a.clone()).collect();
    if rank(&a) < dim {
        return Err(Error::Unbounded);
    }
    check_recession(dim, &rows)?;
    let mut out: Vec<Point> = Vec::new();
    for idx in (0..rows.len()).combinations(dim) {
        let m: Vec<Vec<Rational>> = idx.iter().map(|&i| rows[i].a.clone()).collect();
        let b: Vec<Rational> = idx.iter().map(|&i| rows[i].b).collect();
        let Some(x) = solve_square(&m, &b) else { continue };
        if rows.iter().all(|h| h.contains(&x)) {
            out.push(x);
        }
    }
    out.sort();
    out.dedup();
    Ok(out)
}

/// With `rank(A) = dim` the recession cone `{d : A d ≤ 0}` is pointed, so it
/// is nonzero iff one of its extreme rays (cut out by `dim - 1` rows) lies
/// in it.
fn check_recession(dim: usize, rows: &[Halfspace]) -> Result<()> {
    let feasible_dir = |d: &[Rational]| rows.iter().all(|h| !dot(&h.a, d).is_positive());
    for idx in (0..rows.len()).combinations(dim - 1) {
        let m: Vec<Vec<Rational>> = idx.iter().map(|&i| rows[i].a.clone()).collect();
        let ns = nullspace(&m, dim);
        if ns.len() != 1 {
            continue;
        }
        let d = &ns[0];
        let neg: Vec<Rational> = d.iter().map(|x| -x).collect();
        if feasible_dir(d) || feasible_dir(&neg) {
            return Err(Error::Unbounded);
        }
    }
    Ok(())
}

/// Convex hull with facet normals drawn from `(k-1)`-subsets of the given
/// edge directions, where `k` is the affine dimension of the points. When no
/// directions are given, all pairwise differences of the points are used.
pub fn convex_hull(dim: usize, points: &[Point], directions: Option<&[Point]>) -> Result<ExactPolytope> {
    let mut pts: Vec<Point> = points.to_vec();
    pts.sort();
    pts.dedup();
    let Some(p0) = pts.first().cloned() else {
        return Err(Error::InvalidInput("convex hull of no points".into()));
    };
    let diffs: Vec<Point> = pts[1..]
        .iter()
        .map(|p| p.iter().zip(&p0).map(|(a, b)| a - b).collect())
        .collect();
    let k = affine_dimension(&pts).expect("nonempty");
    let mut rows: Vec<Halfspace> = Vec::new();
    let normals_out = nullspace(&diffs, dim);
    for e in &normals_out {
        let c = dot(e, &p0);
        rows.push(Halfspace::new(e.clone(), c));
        rows.push(Halfspace::new(e.iter().map(|x| -x).collect(), -c));
    }
    if k > 0 {
        let dirs: Vec<Point> = directions
            .map(<[Point]>::to_vec)
            .unwrap_or_else(|| {
                pts.iter()
                    .tuple_combinations()
                    .map(|(a, b)| a.iter().zip(b).map(|(x, y)| x - y).collect())
                    .collect()
            })
            .into_iter()
            .filter(|d| d.iter().any(|x| !x.is_zero()))
            .map(|d| {
                let lead = d.iter().find(|x| !x.is_zero()).expect("nonzero").abs();
                d.iter().map(|x| x / lead).collect::<Point>()
            })
            .sorted()
            .dedup()
            .collect();
        let mut facets: Vec<Halfspace> = Vec::new();
        for idx in (0..dirs.len()).combinations(k - 1) {
            let mut m: Vec<Vec<Rational>> = idx.iter().map(|&i| dirs[i].clone()).collect();
            m.extend(normals_out.iter().cloned());
            let ns = nullspace(&m, dim);
            if ns.len() != 1 {
                continue;
            }
            for sign in [1, -1] {
                let u: Point = ns[0].iter().map(|x| x * rat(sign)).collect();
                let h = pts.iter().map(|p| dot(&u, p)).max().expect("nonempty");
                let row = Halfspace::new(u, h).normalized();
                let tight: Vec<Point> = pts.iter().filter(|p| row.is_tight(p)).cloned().collect();
                if affine_dimension(&tight) == Some(k - 1) {
                    facets.push(row);
                }
            }
        }
        facets.sort();
        facets.dedup();
        rows.extend(facets);
    }
    let verts: Vec<Point> = pts
        .iter()
        .filter(|p| {
            let tight: Vec<Vec<Rational>> = rows.iter().filter(|h| h.is_tight(p)).map(|h| h.a.clone()).collect();
            rank(&tight) == dim
        })
        .cloned()
        .collect();
    Ok(ExactPolytope {
        ambient: None,
        dim,
        hrep: rows,
        vrep: Some(verts),
    })
}

/// Whether two polytopes are equal: equal vertex sets, and each vertex set
/// satisfies the other's inequalities.
pub fn same_polytope(p: &ExactPolytope, q: &ExactPolytope) -> Result<bool> {
    let vp = p.vertices()?;
    let vq = q.vertices()?;
    Ok(vp == vq && vp.iter().all(|x| q.contains(x)) && vq.iter().all(|x| p.contains(x)))
}
