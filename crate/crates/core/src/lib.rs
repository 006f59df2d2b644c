//! Exact intersection theory on the π-colored fan of a partitioned set, and
//! volumes of independence polytopal complexes of ℝ-multimatroids.
//!
//! The crate is organised bottom-up:
//!
//! - [`ground`]: partitioned ground sets, colored sets, chains, transversals.
//! - [`fan`]: the fan `Σ^π`, unimodularity, balancing, tropical intersection.
//! - [`chow`]: divisors in the x/f/h bases and degrees of top products.
//! - [`multimatroid`]: rank functions, axioms, cubicality, samplers.
//! - [`geometry`]: exact polytopes, volumes, Minkowski sums, normal complexes.
//! - [`harness`], [`io`] and [`cli`]: verification reports, JSON formats and
//!   the `colorfan` command line.
//!
//! All arithmetic is exact; see [`rational::Rational`].

pub mod chow;
pub mod cli;
pub mod error;
pub mod fan;
pub mod fixtures;
pub mod geometry;
pub mod ground;
pub mod harness;
pub mod io;
pub mod linalg;
pub mod matching;
pub mod multimatroid;
pub mod rational;

pub use chow::{Basis, Divisor};
pub use error::{Error, Result};
pub use fan::{Fan, WeightedCycle};
pub use ground::{Chain, ColoredSet, GroundSet};
pub use multimatroid::{Cubicality, RankFunction};
pub use rational::{frac, rat, Rational};

/// Size the global rayon pool from `COLORFAN_THREADS`, if set. Calling this
/// more than once, or after the pool has started, has no effect.
pub fn init_thread_pool() {
    if let Some(n) = std::env::var("COLORFAN_THREADS")
        .ok()
        .and_then(|s| s.trim().parse::<usize>().ok())
        .filter(|&n| n > 0)
    {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
}
