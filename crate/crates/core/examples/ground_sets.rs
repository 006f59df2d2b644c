// Colored sets of a partitioned ground set, maximal chains and transversal
// counts.

use colorfan::fixtures;
use colorfan::Result;

pub fn run_example() -> Result<()> {
    let g = fixtures::b2();
    let all = g.enumerate_colored_sets();
    println!(
        "{} colored sets on {:?}, {} of them maximal",
        all.sets.len(),
        g.blocks(),
        all.maximal_count()
    );

    let t = g.set_from_labels(&["1bar", "2"])?;
    for chain in g.enumerate_max_chains(&t)? {
        println!("  chain {}", g.display_chain(&chain));
    }

    let sets = [g.set_from_labels(&["1", "2"])?, g.set_from_labels(&["1bar", "2"])?];
    let count = g.transversal_count(&sets)?;
    println!(
        "maximal sets with a transversal of {} and {}: {count}",
        g.display(&sets[0]),
        g.display(&sets[1])
    );
    assert_eq!(count, 2);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
