//! SVG plots of two-dimensional orthant pieces, one panel per orthant.

use std::fmt::Write as _;

use num_traits::ToPrimitive;

use crate::chow::Divisor;
use crate::error::{Error, Result};
use crate::multimatroid::RankFunction;

use super::complex::{independence_polytope, normal_complex_piece};
use super::polytope::Point;

pub struct Panel {
    pub title: String,
    pub axes: [String; 2],
    /// Convex polygons, as vertex sets in any order.
    pub polygons: Vec<Vec<Point>>,
}

const SIZE: f64 = 220.0;
const PAD: f64 = 30.0;
const FILLS: [&str; 4] = ["#8fb8de", "#f4b183", "#a9d18e", "#c9a0dc"];

fn to_f64(p: &Point) -> (f64, f64) {
    (p[0].to_f64().unwrap_or(0.0), p[1].to_f64().unwrap_or(0.0))
}

/// Counter-clockwise order around the centroid.
fn ordered(poly: &[Point]) -> Vec<(f64, f64)> {
    let pts: Vec<(f64, f64)> = poly.iter().map(to_f64).collect();
    let n = pts.len().max(1) as f64;
    let cx = pts.iter().map(|p| p.0).sum::<f64>() / n;
    let cy = pts.iter().map(|p| p.1).sum::<f64>() / n;
    let mut out = pts;
    out.sort_by(|a, b| {
        let ta = (a.1 - cy).atan2(a.0 - cx);
        let tb = (b.1 - cy).atan2(b.0 - cx);
        ta.total_cmp(&tb)
    });
    out
}

pub fn render(panels: &[Panel]) -> String {
    let extent = panels
        .iter()
        .flat_map(|p| p.polygons.iter().flatten())
        .map(to_f64)
        .fold(1.0f64, |m, (x, y)| m.max(x).max(y));
    let scale = (SIZE - 2.0 * PAD) / extent;
    let width = SIZE * panels.len() as f64;
    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{SIZE}" viewBox="0 0 {width} {SIZE}" font-family="sans-serif" font-size="11">"#
    );
    for (k, panel) in panels.iter().enumerate() {
        let ox = k as f64 * SIZE + PAD;
        let oy = SIZE - PAD;
        let _ = writeln!(s, r#"<g>"#);
        let _ = writeln!(s, r#"<text x="{}" y="16">{}</text>"#, ox, escape(&panel.title));
        let _ = writeln!(
            s,
            r#"<line x1="{ox}" y1="{oy}" x2="{}" y2="{oy}" stroke="black"/><line x1="{ox}" y1="{oy}" x2="{ox}" y2="{}" stroke="black"/>"#,
            ox + SIZE - 2.0 * PAD + 10.0,
            oy - (SIZE - 2.0 * PAD) - 10.0
        );
        let _ = writeln!(
            s,
            r#"<text x="{}" y="{}">{}</text><text x="{}" y="{}">{}</text>"#,
            ox + SIZE - 2.0 * PAD,
            oy + 14.0,
            escape(&panel.axes[0]),
            ox - 24.0,
            oy - (SIZE - 2.0 * PAD),
            escape(&panel.axes[1])
        );
        for (i, poly) in panel.polygons.iter().enumerate() {
            let pts: Vec<String> = ordered(poly)
                .iter()
                .map(|(x, y)| format!("{:.2},{:.2}", ox + x * scale, oy - y * scale))
                .collect();
            let _ = writeln!(
                s,
                r#"<polygon points="{}" fill="{}" fill-opacity="0.6" stroke="black" stroke-width="1"/>"#,
                pts.join(" "),
                FILLS[i % FILLS.len()]
            );
        }
        let _ = writeln!(s, "</g>");
    }
    s.push_str("</svg>\n");
    s
}

fn escape(t: &str) -> String {
    t.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

fn require_two(n: usize) -> Result<()> {
    if n == 2 {
        Ok(())
    } else {
        Err(Error::InvalidInput(format!("plots need n = 2, got n = {n}")))
    }
}

/// One panel per maximal set with its independence polytope.
pub fn ipc_svg(rk: &RankFunction) -> Result<String> {
    let g = rk.ground();
    require_two(g.n())?;
    let panels = g
        .maximal_sets()
        .iter()
        .map(|t| {
            let p = independence_polytope(rk, t)?;
            let labels = g.labels_of(t);
            Ok(Panel {
                title: format!("IP(M({}))", g.display(t)),
                axes: [labels[0].clone(), labels[1].clone()],
                polygons: vec![p.vertices()?],
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(render(&panels))
}

/// One panel per maximal set with the normal complex pieces of its chains.
pub fn normal_complex_svg(d: &Divisor) -> Result<String> {
    let g = d.ground();
    require_two(g.n())?;
    let panels = g
        .maximal_sets()
        .iter()
        .map(|t| {
            let polygons = g
                .enumerate_max_chains(t)?
                .iter()
                .map(|c| normal_complex_piece(d, c)?.vertices())
                .collect::<Result<Vec<_>>>()?;
            let labels = g.labels_of(t);
            Ok(Panel {
                title: format!("orthant {}", g.display(t)),
                axes: [labels[0].clone(), labels[1].clone()],
                polygons,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(render(&panels))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ground::GroundSet;
    use crate::multimatroid::sum_h_rank;

    #[test]
    fn b2_plots() {
        let g = GroundSet::from_labels(&[&["1", "1bar"], &["2", "2bar"]]).unwrap();
        let s = ipc_svg(&sum_h_rank(&g)).unwrap();
        assert_eq!(s.matches("<polygon").count(), 4);
        let s = normal_complex_svg(&Divisor::sum_h(&g)).unwrap();
        assert_eq!(s.matches("<polygon").count(), 8);
        let h = GroundSet::uniform(3, 2).unwrap();
        assert!(ipc_svg(&sum_h_rank(&h)).is_err());
    }
}
