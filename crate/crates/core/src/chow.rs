//! Divisors on `Σ^π` in the x, f and h bases, and degrees of top products.
//!
//! With `f_T = Σ_{Z ⊇ T} x_Z` and `h_S = Σ_{S' ∩ S ≠ ∅} x_{S'}`, a class
//! written as `Σ c_S x_S = Σ d_T f_T = Σ a_U h_U` has
//!
//! ```text
//! c_Z = Σ_{∅≠T⊆Z} d_T                    d_T = Σ_{∅≠S⊆T} (-1)^{|T|-|S|} c_S
//! d_T = (-1)^{|T|+1} Σ_{S⊇T} a_S          a_T = (-1)^{|T|+1} Σ_{S⊇T} d_S
//! ```
//!
//! The X coefficients are also the values on rays of the piecewise-linear
//! function that the degree engine intersects with.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fan::Fan;
use crate::ground::{ColoredSet, GroundSet};
use crate::rational::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Basis {
    X,
    F,
    H,
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Basis::X => "X",
            Basis::F => "F",
            Basis::H => "H",
        })
    }
}

impl FromStr for Basis {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "X" => Ok(Basis::X),
            "F" => Ok(Basis::F),
            "H" => Ok(Basis::H),
            _ => Err(Error::InvalidInput(format!("unknown basis {s:?}"))),
        }
    }
}

/// A degree-one class, stored as one coefficient per colored set code. The
/// entry for the empty set is always zero.
#[derive(Clone, Debug, PartialEq)]
pub struct Divisor {
    ground: GroundSet,
    basis: Basis,
    coeffs: Vec<Rational>,
}

impl Divisor {
    pub fn zero(ground: &GroundSet, basis: Basis) -> Self {
        Divisor {
            ground: ground.clone(),
            basis,
            coeffs: vec![Rational::zero(); ground.num_colored_sets()],
        }
    }

    /// The generator `x_S`, `f_S` or `h_S`.
    pub fn generator(ground: &GroundSet, basis: Basis, s: &ColoredSet) -> Result<Self> {
        let mut d = Self::zero(ground, basis);
        d.set(s, Rational::one())?;
        Ok(d)
    }

    /// `Σ_{S ≠ ∅} h_S`.
    pub fn sum_h(ground: &GroundSet) -> Self {
        let mut d = Self::zero(ground, Basis::H);
        for c in d.coeffs.iter_mut().skip(1) {
            *c = Rational::one();
        }
        d
    }

    pub fn from_pairs<I>(ground: &GroundSet, basis: Basis, pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (ColoredSet, Rational)>,
    {
        let mut d = Self::zero(ground, basis);
        for (s, c) in pairs {
            let old = d.get(&s);
            d.set(&s, old + c)?;
        }
        Ok(d)
    }

    /// Coefficients by set code; entry 0 (the empty set) must be zero.
    pub fn from_dense(ground: &GroundSet, basis: Basis, coeffs: Vec<Rational>) -> Result<Self> {
        if coeffs.len() != ground.num_colored_sets() {
            return Err(Error::WrongLength {
                expected: ground.num_colored_sets(),
                got: coeffs.len(),
            });
        }
        if !coeffs[0].is_zero() {
            return Err(Error::InvalidInput("the empty set carries no coefficient".into()));
        }
        Ok(Divisor {
            ground: ground.clone(),
            basis,
            coeffs,
        })
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn dense(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn get(&self, s: &ColoredSet) -> Rational {
        self.coeffs[self.ground.code(s)]
    }

    pub fn set(&mut self, s: &ColoredSet, c: Rational) -> Result<()> {
        self.ground.check_owns(s)?;
        if s.is_empty() {
            return Err(Error::InvalidInput("the empty set carries no coefficient".into()));
        }
        let code = self.ground.code(s);
        self.coeffs[code] = c;
        Ok(())
    }

    /// Nonzero coefficients in code order.
    pub fn support(&self) -> Vec<(ColoredSet, Rational)> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(code, c)| (self.ground.set_at(code), *c))
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn scaled(&self, k: Rational) -> Divisor {
        let mut d = self.clone();
        for c in &mut d.coeffs {
            *c *= k;
        }
        d
    }

    /// Sum of two divisors, expressed in the basis of `self`.
    pub fn add(&self, other: &Divisor) -> Result<Divisor> {
        if self.ground != other.ground {
            return Err(Error::GroundSetMismatch);
        }
        let other = other.convert(self.basis);
        let mut d = self.clone();
        for (a, b) in d.coeffs.iter_mut().zip(&other.coeffs) {
            *a += b;
        }
        Ok(d)
    }

    pub fn convert(&self, target: Basis) -> Divisor {
        if self.basis == target {
            return self.clone();
        }
        let g = &self.ground;
        let coeffs = match (self.basis, target) {
            (Basis::X, Basis::F) => x_to_f(g, &self.coeffs),
            (Basis::F, Basis::X) => f_to_x(g, &self.coeffs),
            (Basis::F, Basis::H) | (Basis::H, Basis::F) => f_h_swap(g, &self.coeffs),
            (Basis::X, Basis::H) => f_h_swap(g, &x_to_f(g, &self.coeffs)),
            (Basis::H, Basis::X) => f_to_x(g, &f_h_swap(g, &self.coeffs)),
            _ => unreachable!("same basis handled above"),
        };
        Divisor {
            ground: g.clone(),
            basis: target,
            coeffs,
        }
    }

    /// Human-readable linear combination, e.g. `3·x{1} + 5·x{1,2}`.
    pub fn display(&self) -> String {
        let sym = match self.basis {
            Basis::X => "x",
            Basis::F => "f",
            Basis::H => "h",
        };
        let mut out = String::new();
        for (s, c) in self.support() {
            let term = format!("{}·{sym}{}", c.abs(), self.ground.display(&s));
            match (out.is_empty(), c < Rational::zero()) {
                (true, false) => out = term,
                (true, true) => out = format!("-{term}"),
                (false, false) => out += &format!(" + {term}"),
                (false, true) => out += &format!(" - {term}"),
            }
        }
        if out.is_empty() {
            "0".into()
        } else {
            out
        }
    }
}

fn x_to_f(g: &GroundSet, c: &[Rational]) -> Vec<Rational> {
    let mut d = vec![Rational::zero(); c.len()];
    for (t, out) in d.iter_mut().enumerate().skip(1) {
        let tset = g.set_at(t);
        let tl = tset.len();
        for s in g.subset_codes(&tset) {
            let term = c[s];
            if (tl - g.size_of_code(s)).is_multiple_of(2) {
                *out += term;
            } else {
                *out -= term;
            }
        }
    }
    d
}

fn f_to_x(g: &GroundSet, d: &[Rational]) -> Vec<Rational> {
    let mut c = vec![Rational::zero(); d.len()];
    for (z, out) in c.iter_mut().enumerate().skip(1) {
        for t in g.subset_codes(&g.set_at(z)) {
            *out += d[t];
        }
    }
    c
}

/// Both `F → H` and `H → F` are `v_T ↦ (-1)^{|T|+1} Σ_{S⊇T} v_S`.
fn f_h_swap(g: &GroundSet, v: &[Rational]) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); v.len()];
    for (t, o) in out.iter_mut().enumerate().skip(1) {
        let tset = g.set_at(t);
        let s: Rational = g.superset_codes(&tset).into_iter().map(|c| v[c]).sum();
        *o = if tset.len() % 2 == 1 { s } else { -s };
    }
    out
}

/// The coefficients `a^T_S` of the Minkowski decomposition of the piece of
/// a divisor's complex over a maximal set `T`, indexed by the bitmask of the
/// blocks of `S ⊆ T` (entry 0 unused and zero).
#[derive(Clone, Debug, PartialEq)]
pub struct BooleanCoefficients {
    pub t: ColoredSet,
    pub by_mask: Vec<Rational>,
}

impl BooleanCoefficients {
    pub fn get(&self, mask: usize) -> Rational {
        self.by_mask[mask]
    }

    /// The subset of `T` with the given block mask.
    pub fn subset(&self, mask: usize) -> ColoredSet {
        let mut s = ColoredSet::empty(self.t.arity());
        for (b, i) in self.t.elements() {
            if mask & (1 << b) != 0 {
                s = s.with(b, i);
            }
        }
        s
    }
}

/// `a^T_S = Σ_{S' : S' ∩ T = S} a_{S'}` where `a` are the H-coefficients.
pub fn restrict_to_boolean(d: &Divisor, t: &ColoredSet) -> Result<BooleanCoefficients> {
    let g = d.ground();
    g.check_owns(t)?;
    if !t.is_maximal() {
        return Err(Error::NotMaximal(g.display(t)));
    }
    let h = d.convert(Basis::H);
    let n = g.n();
    let mut by_mask = vec![Rational::zero(); 1 << n];
    for (code, a) in h.coeffs.iter().enumerate().skip(1) {
        if a.is_zero() {
            continue;
        }
        let s = g.set_at(code);
        let mask = s
            .elements()
            .filter(|&(b, i)| t.get(b) == Some(i))
            .fold(0usize, |m, (b, _)| m | (1 << b));
        if mask != 0 {
            by_mask[mask] += a;
        }
    }
    Ok(BooleanCoefficients { t: t.clone(), by_mask })
}

/// `∫ D_1 ⋯ D_n` by iterated tropical intersection on the fan.
pub fn degree_product(fan: &Fan, divisors: &[Divisor]) -> Result<Rational> {
    if divisors.len() != fan.dim() {
        return Err(Error::WrongLength {
            expected: fan.dim(),
            got: divisors.len(),
        });
    }
    let xs = divisors
        .iter()
        .map(|d| {
            if d.ground() != fan.ground() {
                Err(Error::GroundSetMismatch)
            } else {
                Ok(d.convert(Basis::X))
            }
        })
        .collect::<Result<Vec<_>>>()?;
    let phis: Vec<&[Rational]> = xs.iter().map(Divisor::dense).collect();
    fan.degree_of_functions(&phis)
}

/// `∫ D^n`.
pub fn degree_power(fan: &Fan, d: &Divisor) -> Result<Rational> {
    degree_product(fan, &vec![d.clone(); fan.dim()])
}

#[derive(Clone, Debug, Serialize)]
pub struct TransversalCheck {
    #[serde(with = "crate::rational::as_string")]
    pub degree: Rational,
    pub transversal_count: u64,
    pub equal: bool,
}

/// Degree of `h_{S_1} ⋯ h_{S_n}` against the number of maximal sets with a
/// system of distinct representatives.
pub fn verify_theorem_a(fan: &Fan, sets: &[ColoredSet]) -> Result<TransversalCheck> {
    let g = fan.ground();
    let count = g.transversal_count(sets)?;
    let hs = sets
        .iter()
        .map(|s| Divisor::generator(g, Basis::H, s))
        .collect::<Result<Vec<_>>>()?;
    let degree = degree_product(fan, &hs)?;
    Ok(TransversalCheck {
        degree,
        transversal_count: count,
        equal: degree == Rational::from_integer(count as i128),
    })
}
