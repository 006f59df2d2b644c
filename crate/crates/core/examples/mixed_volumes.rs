// Minkowski sums of coordinate simplices and their mixed volumes.

use colorfan::geometry::{minkowski_sum, mixed_volume_simplices, normalized_volume, scaled_simplex};
use colorfan::{fixtures, rat, Result};

pub fn run_example() -> Result<()> {
    // 3Δ_{1} + 2Δ_{2} + Δ_{12}: the pentagon x_1 ≤ 4, x_2 ≤ 3, x_1 + x_2 ≤ 6
    let p = minkowski_sum(&[
        scaled_simplex(2, 0b01, rat(3)),
        scaled_simplex(2, 0b10, rat(2)),
        scaled_simplex(2, 0b11, rat(1)),
    ])?;
    println!(
        "vertices {:?}",
        p.vertices()?
            .iter()
            .map(|v| v.iter().map(ToString::to_string).collect::<Vec<_>>())
            .collect::<Vec<_>>()
    );
    println!("normalized volume {}", normalized_volume(&p)?);

    let g = fixtures::b2();
    let t = g.set_from_labels(&["1", "2"])?;
    let s1 = g.set_from_labels(&["1"])?;
    let s12 = t.clone();
    for pair in [[s1.clone(), s1.clone()], [s1.clone(), s12.clone()], [s12.clone(), s12]] {
        let mv = mixed_volume_simplices(&t, &pair)?;
        println!("MV(Δ{}, Δ{}) = {mv}", g.display(&pair[0]), g.display(&pair[1]));
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
