// The volume of the independence polytopal complex, by triangulation and by
// mixed volumes, against the degree of D_M^n.

use colorfan::chow::degree_power;
use colorfan::geometry::{ipc_volume_via_transversals, orthant_volumes};
use colorfan::{fixtures, Fan, Result};

pub fn run_example() -> Result<()> {
    let rk = fixtures::example_5544();
    let g = rk.ground();
    let by_transversals = ipc_volume_via_transversals(&rk, 4)?;
    for ((t, v), (_, w)) in orthant_volumes(&rk)?.iter().zip(&by_transversals) {
        println!(
            "orthant {:<12} triangulation {v:>3}   mixed volumes {w:>3}",
            g.display(t)
        );
    }
    let total: colorfan::Rational = by_transversals.iter().map(|(_, v)| v).sum();
    let degree = degree_power(&Fan::build(g)?, &rk.divisor())?;
    println!("Vol(IPC) = {total}, ∫ D_M² = {degree}");
    assert_eq!(total, degree);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
