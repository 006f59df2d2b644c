// A small seeded verification run and its JSON summary.

use colorfan::harness::{run_suite, SuiteConfig};
use colorfan::Result;

pub fn run_example() -> Result<()> {
    let config = SuiteConfig {
        seed: 11,
        structural: vec![vec![2, 2], vec![3, 2]],
        monomial_samples: 4,
        volume_sizes: vec![vec![2, 2], vec![2, 2, 2]],
        volume_samples: 3,
        ..SuiteConfig::default()
    };
    let summary = run_suite(&config);
    println!("{}/{} cases passed", summary.passed, summary.total);
    for c in summary.cases.iter().take(8) {
        println!("  {:<48} {}", c.name, c.detail);
    }
    assert!(summary.all_passed(), "{:?}", summary.failures);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
