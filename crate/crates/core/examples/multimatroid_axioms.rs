// Axiom checks and cubicality classification of the shipped rank functions.

use colorfan::multimatroid::{boolean_multimatroid, quadratic_rank, sum_h_rank};
use colorfan::{fixtures, RankFunction, Result};

fn show(name: &str, rk: &RankFunction) {
    let real = rk.check_r_axioms();
    let multi = rk.check_multimatroid_axioms();
    let failed: Vec<&str> = multi
        .checks
        .iter()
        .filter(|c| !c.passed)
        .map(|c| c.axiom.as_str())
        .collect();
    let cub = rk.cubicality();
    println!(
        "{name:<22} ℝ-multimatroid {:<5} multimatroid {:<5} {:<18} {}",
        real.passed(),
        multi.passed(),
        cub.class,
        cub.witness.unwrap_or_default()
    );
    if !failed.is_empty() {
        println!("{:<22} fails {}", "", failed.join(", "));
    }
}

pub fn run_example() -> Result<()> {
    let b2 = fixtures::b2();
    show("example multimatroid", &fixtures::example_multimatroid());
    show("5,5,4,4,6 example", &fixtures::example_5544());
    show("Boolean", &boolean_multimatroid(&b2));
    show("quadratic", &quadratic_rank(&b2));
    show("Σ h_S on {a,b,c}⊔{1,2}", &sum_h_rank(&fixtures::abc12()));
    show("counterexample", &fixtures::counterexample());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
