// Pieces of the normal complex of D_M, compared with IPC(M), and an SVG of
// the n = 2 pictures written to the temp directory.

use colorfan::geometry::svg::normal_complex_svg;
use colorfan::geometry::{compare_normal_complex, normal_complex_piece};
use colorfan::ground::Chain;
use colorfan::{fixtures, Result};

pub fn run_example() -> Result<()> {
    for rk in [fixtures::example_multimatroid(), fixtures::counterexample()] {
        let g = rk.ground();
        let d = rk.divisor();
        let chain = Chain::new(vec![g.set_from_labels(&["1"])?, g.set_from_labels(&["1", "2"])?])?;
        let piece = normal_complex_piece(&d, &chain)?;
        let verts: Vec<String> = piece
            .vertices()?
            .iter()
            .map(|v| format!("({})", v.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")))
            .collect();
        println!("piece over {}: {}", g.display_chain(&chain), verts.join(" "));

        let rep = compare_normal_complex(&rk)?;
        println!(
            "  {}: {}/{} pieces inside IP, equal to IPC {}",
            rep.class, rep.pieces_equal_global, rep.pieces_checked, rep.equal
        );
    }

    let path = std::env::temp_dir().join("colorfan_normal_complex.svg");
    std::fs::write(&path, normal_complex_svg(&fixtures::example_5544().divisor())?)?;
    println!("wrote {}", path.display());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
