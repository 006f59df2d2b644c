// Degrees of products of h-classes against transversal counts, for every
// pair of nonempty colored sets on B_2.

use colorfan::chow::verify_theorem_a;
use colorfan::{fixtures, Fan, Result};

pub fn run_example() -> Result<()> {
    let g = fixtures::b2();
    let fan = Fan::build(&g)?;
    let sets = g.nonempty_sets();
    let mut checked = 0;
    for (i, a) in sets.iter().enumerate() {
        for b in &sets[i..] {
            let r = verify_theorem_a(&fan, &[a.clone(), b.clone()])?;
            assert!(r.equal);
            if r.transversal_count > 0 && checked % 5 == 0 {
                println!("∫ h{} h{} = {} = #transversals", g.display(a), g.display(b), r.degree);
            }
            checked += 1;
        }
    }
    println!("{checked} monomials checked");
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
