//! Exact linear algebra over the rationals and the integers.
//!
//! Everything here is dense Gaussian elimination on small matrices. Matrices
//! are row-major `Vec<Vec<_>>`.

use num_traits::{One, Zero};

use crate::rational::Rational;

pub type Matrix = Vec<Vec<Rational>>;

/// Reduced row echelon form in place; returns the pivot columns.
pub fn rref(m: &mut Matrix) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut().skip(c) {
            *x *= inv;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c];
                for j in c..cols {
                    let delta = f * m[r][j];
                    m[i][j] -= delta;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank(rows: &[Vec<Rational>]) -> usize {
    let mut m = rows.to_vec();
    rref(&mut m).len()
}

/// Coefficients `c` with `sum_i c[i] * generators[i] == target`, if the target
/// lies in the span. Free coefficients are set to zero.
pub fn solve_in_span(generators: &[Vec<Rational>], target: &[Rational]) -> Option<Vec<Rational>> {
    let k = generators.len();
    let d = target.len();
    let mut m: Matrix = (0..d)
        .map(|row| {
            let mut r: Vec<Rational> = generators.iter().map(|g| g[row]).collect();
            r.push(target[row]);
            r
        })
        .collect();
    let pivots = rref(&mut m);
    if pivots.last() == Some(&k) {
        return None;
    }
    let mut out = vec![Rational::zero(); k];
    for (r, &c) in pivots.iter().enumerate() {
        out[c] = m[r][k];
    }
    Some(out)
}

/// Unique solution of the square system `a x = b`, or `None` if singular.
pub fn solve_square(a: &[Vec<Rational>], b: &[Rational]) -> Option<Vec<Rational>> {
    let n = a.len();
    let mut m: Matrix = a
        .iter()
        .zip(b)
        .map(|(row, &bi)| {
            let mut r = row.clone();
            r.push(bi);
            r
        })
        .collect();
    let pivots = rref(&mut m);
    if pivots.len() != n || pivots.last() == Some(&n) {
        return None;
    }
    Some(m.into_iter().map(|r| r[n]).collect())
}

pub fn determinant(m: &[Vec<Rational>]) -> Rational {
    let n = m.len();
    let mut a = m.to_vec();
    let mut det = Rational::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !a[i][c].is_zero()) else {
            return Rational::zero();
        };
        if p != c {
            a.swap(p, c);
            det = -det;
        }
        let pivot = a[c][c];
        det *= pivot;
        for i in c + 1..n {
            if a[i][c].is_zero() {
                continue;
            }
            let f = a[i][c] / pivot;
            for j in c..n {
                let delta = f * a[c][j];
                a[i][j] -= delta;
            }
        }
    }
    det
}

/// A basis of `{x : rows * x = 0}` in `ncols` variables.
pub fn nullspace(rows: &[Vec<Rational>], ncols: usize) -> Vec<Vec<Rational>> {
    let mut m = rows.to_vec();
    let pivots = rref(&mut m);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Rational::zero(); ncols];
            v[f] = Rational::one();
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = -m[r][f];
            }
            v
        })
        .collect()
}

/// Dimension of the affine hull of a point set (`-1` encoded as `None` for
/// the empty set).
pub fn affine_dimension(points: &[Vec<Rational>]) -> Option<usize> {
    let (first, rest) = points.split_first()?;
    let diffs: Matrix = rest
        .iter()
        .map(|p| p.iter().zip(first).map(|(a, b)| a - b).collect())
        .collect();
    Some(rank(&diffs))
}

pub fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter().zip(b).fold(Rational::zero(), |acc, (x, y)| acc + x * y)
}

/// Diagonal of the Smith normal form of an integer matrix (nonzero entries
/// only, each positive).
pub fn elementary_divisors(m: &[Vec<i64>]) -> Vec<i128> {
    let mut a: Vec<Vec<i128>> = m.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut out = Vec::new();
    for t in 0..rows.min(cols) {
        // smallest nonzero entry of the trailing block becomes the pivot
        let mut best: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                if a[i][j] != 0 && best.is_none_or(|(bi, bj)| a[i][j].abs() < a[bi][bj].abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((bi, bj)) = best else {
            break;
        };
        a.swap(t, bi);
        for row in a.iter_mut() {
            row.swap(t, bj);
        }
        loop {
            let mut dirty = false;
            for i in t + 1..rows {
                let q = a[i][t].div_euclid(a[t][t]);
                if q != 0 {
                    for j in t..cols {
                        a[i][j] -= q * a[t][j];
                    }
                }
                if a[i][t] != 0 {
                    dirty = true;
                }
            }
            for j in t + 1..cols {
                let q = a[t][j].div_euclid(a[t][t]);
                if q != 0 {
                    for row in a.iter_mut() {
                        row[j] -= q * row[t];
                    }
                }
                if a[t][j] != 0 {
                    dirty = true;
                }
            }
            if !dirty {
                // pivot must divide the whole trailing block
                let bad = (t + 1..rows)
                    .flat_map(|i| (t + 1..cols).map(move |j| (i, j)))
                    .find(|&(i, j)| a[i][j] % a[t][t] != 0);
                match bad {
                    None => break,
                    Some((i, _)) => {
                        for j in t..cols {
                            a[t][j] += a[i][j];
                        }
                        continue;
                    }
                }
            }
            // move the smallest nonzero entry of row t / column t to the pivot
            let mut best = (t, t);
            for i in t..rows {
                if a[i][t] != 0 && a[i][t].abs() < a[best.0][best.1].abs() {
                    best = (i, t);
                }
            }
            for j in t..cols {
                if a[t][j] != 0 && a[t][j].abs() < a[best.0][best.1].abs() {
                    best = (t, j);
                }
            }
            if best.1 == t {
                a.swap(t, best.0);
            } else {
                for row in a.iter_mut() {
                    row.swap(t, best.1);
                }
            }
        }
        out.push(a[t][t].abs());
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, rat};

    fn m(rows: &[&[i128]]) -> Matrix {
        rows.iter().map(|r| r.iter().map(|&x| rat(x)).collect()).collect()
    }

    #[test]
    fn determinant_and_solve() {
        let a = m(&[&[2, 1], &[1, 3]]);
        assert_eq!(determinant(&a), rat(5));
        let x = solve_square(&a, &[rat(3), rat(5)]).unwrap();
        assert_eq!(x, vec![frac(4, 5), frac(7, 5)]);
        assert!(solve_square(&m(&[&[1, 2], &[2, 4]]), &[rat(1), rat(1)]).is_none());
    }

    #[test]
    fn span_membership() {
        let g = m(&[&[1, 0, 1], &[0, 1, 1]]);
        assert_eq!(solve_in_span(&g, &[rat(2), rat(3), rat(5)]), Some(vec![rat(2), rat(3)]));
        assert_eq!(solve_in_span(&g, &[rat(1), rat(1), rat(1)]), None);
        assert_eq!(solve_in_span(&[], &[rat(0), rat(0)]), Some(vec![]));
        assert_eq!(solve_in_span(&[], &[rat(1), rat(0)]), None);
    }

    #[test]
    fn nullspace_is_orthogonal() {
        let a = m(&[&[1, 1, 0], &[0, 1, 1]]);
        let ns = nullspace(&a, 3);
        assert_eq!(ns.len(), 1);
        for row in &a {
            assert!(dot(row, &ns[0]).is_zero());
        }
    }

    #[test]
    fn smith_diagonal() {
        assert_eq!(elementary_divisors(&[vec![1, 1], vec![1, -1]]), vec![1, 2]);
        assert_eq!(elementary_divisors(&[vec![2, 4], vec![6, 8]]), vec![2, 4]);
        assert_eq!(elementary_divisors(&[vec![1, 0], vec![0, 1], vec![-1, -1]]), vec![1, 1]);
        assert_eq!(elementary_divisors(&[vec![0, 0]]), Vec::<i128>::new());
    }
}
