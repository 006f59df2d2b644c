// Build the fan of a ground set and certify it: unimodular cones and a
// balanced top cycle. A fan with one generator doubled is caught.

use colorfan::{fixtures, Fan, Result};

pub fn run_example() -> Result<()> {
    for g in [fixtures::b2(), fixtures::abc12()] {
        let fan = Fan::build(&g)?;
        let u = fan.check_unimodular();
        let b = fan.check_balancing(&fan.top_cycle());
        println!(
            "{:?}: {} rays, cones by dimension {:?}, unimodular {}, balanced {}",
            g.block_sizes(),
            fan.num_rays(),
            fan.cone_counts(),
            u.unimodular,
            b.balanced
        );
        assert!(u.unimodular && b.balanced);
    }

    let bad = fixtures::corrupted_fan().check_unimodular();
    println!(
        "corrupted fan: unimodular {}, failing cone {:?}, elementary divisors {:?}",
        bad.unimodular, bad.failing_cone, bad.elementary_divisors
    );
    assert!(!bad.unimodular);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
