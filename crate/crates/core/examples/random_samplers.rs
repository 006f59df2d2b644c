// Seeded random ℝ-multimatroids in both sampler modes.

use colorfan::multimatroid::{random_r_multimatroid, SamplerMode};
use colorfan::{GroundSet, Result};

pub fn run_example() -> Result<()> {
    let g = GroundSet::uniform(3, 2)?;
    for mode in [SamplerMode::PseudoCubical, SamplerMode::General] {
        for seed in 0..4 {
            let rk = random_r_multimatroid(&g, seed, mode)?;
            let again = random_r_multimatroid(&g, seed, mode)?;
            assert_eq!(rk, again);
            let full = g.maximal_sets()[0].clone();
            println!(
                "{mode:?} seed {seed}: rk{} = {}, {}",
                g.display(&full),
                rk.rank(&full),
                rk.cubicality_class()
            );
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
