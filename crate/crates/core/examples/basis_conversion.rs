// One divisor in the x, f and h bases.

use colorfan::chow::{Basis, Divisor};
use colorfan::{fixtures, Result};

pub fn run_example() -> Result<()> {
    let g = fixtures::b2();
    let d = Divisor::sum_h(&g);
    println!("Σ h_S        = {}", d.display());
    println!("in the x basis {}", d.convert(Basis::X).display());
    println!("in the f basis {}", d.convert(Basis::F).display());

    let dm = fixtures::example_5544().divisor();
    println!("D_M          = {}", dm.display());
    println!("in the h basis {}", dm.convert(Basis::H).display());
    assert_eq!(dm.convert(Basis::H).convert(Basis::X), dm);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
