//! SVG output for the arc diagram and the black drawing.
//!
//! Positions along a spine come from the thirds subdivision: the first
//! image of a vertex keeps its coordinate and the second moves a third of
//! the way toward its sibling. Only the order matters for crossings.

use std::fmt::Write as _;

use crate::arcdiagram::{upsilon, Side};
use crate::blacklayout::{layout_black, BlackLayout};
use crate::error::{Error, Result};
use crate::partition::{lift_spine, Part};

/// Largest step rendered for the arc diagram.
pub const MAX_SVG_M: u32 = 8;
/// Largest dimension rendered for the black drawing.
pub const MAX_SVG_N: u32 = 11;

/// Coordinates of the spine slots after `m` subdivisions of `base`.
pub fn spine_coordinates(base: [f64; 4], m: u32) -> Vec<f64> {
    let mut x = base.to_vec();
    for _ in 0..m {
        let mut next = vec![0.0; 2 * x.len()];
        for i in 0..x.len() {
            let sibling = if i % 2 == 0 { i + 1 } else { i - 1 };
            let moved = x[i] + (x[sibling] - x[i]) / 3.0;
            // the kept image sits away from the sibling
            let (first, second) = if i % 2 == 0 { (x[i], moved) } else { (moved, x[i]) };
            next[2 * i] = first;
            next[2 * i + 1] = second;
        }
        x = next;
    }
    x
}

fn header(out: &mut String, w: f64, h: f64) {
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w:.0}" height="{h:.0}" viewBox="0 0 {w:.0} {h:.0}">"#
    );
    let _ = writeln!(out, r#"<rect width="100%" height="100%" fill="white"/>"#);
}

/// The step-`m` arc diagram, labelled by the lifted `U1` seed.
pub fn upsilon_svg(m: u32) -> Result<String> {
    if m > MAX_SVG_M {
        return Err(Error::InvalidDimension { n: m, reason: "arc diagrams are rendered for m <= 8" });
    }
    let d = upsilon(m);
    let labels = lift_spine(&Part::U1.column_seed(), d.network_dim(), m)?;
    let len = d.spine_len() as usize;
    let coords = spine_coordinates([1.0, 2.0, 3.0, 4.0], m);
    let width = (len as f64 * 28.0).max(480.0);
    let margin = 40.0;
    let axis = width / 2.0 + margin;
    let px = |k: usize| margin + (coords[k - 1] - 1.0) / 3.0 * width;
    let font = (12.0 - m as f64).max(4.0);

    let mut out = String::new();
    header(&mut out, width + 2.0 * margin, width + 2.0 * margin);
    let _ = writeln!(
        out,
        r#"<line x1="{:.2}" y1="{axis:.2}" x2="{:.2}" y2="{axis:.2}" stroke="gray" stroke-width="0.5"/>"#,
        margin,
        margin + width
    );
    for a in d.arcs() {
        let (x1, x2) = (px(a.lo as usize), px(a.hi as usize));
        let r = (x2 - x1) / 2.0;
        let (sweep, colour) = match a.side {
            Side::Above => (1, "steelblue"),
            Side::Below => (0, "firebrick"),
        };
        let _ = writeln!(
            out,
            r#"<path d="M {x1:.2} {axis:.2} A {r:.2} {r:.2} 0 0 {sweep} {x2:.2} {axis:.2}" fill="none" stroke="{colour}" stroke-width="0.6" data-dim="{}"/>"#,
            a.dim
        );
    }
    for (k, label) in labels.iter().enumerate() {
        let x = px(k + 1);
        let _ = writeln!(out, r#"<circle cx="{x:.2}" cy="{axis:.2}" r="2" fill="black"/>"#);
        let _ = writeln!(
            out,
            r#"<text x="{x:.2}" y="{:.2}" font-size="{font:.1}" text-anchor="middle" transform="rotate(90 {x:.2} {:.2})">{label}</text>"#,
            axis + 6.0,
            axis + 6.0
        );
    }
    out.push_str("</svg>\n");
    Ok(out)
}

/// Vertical coordinate of every spine slot of `p`, with `|Y|` decreasing
/// along the names so paired vertices sit level.
fn column_heights(layout: &BlackLayout, p: Part) -> Vec<f64> {
    let sign = f64::from(p.y_anchors()[0].signum());
    let base = if layout.names().is_reversed(p) { [1.0, 2.0, 3.0, 4.0] } else { [4.0, 3.0, 2.0, 1.0] };
    spine_coordinates(base.map(|y| sign * y), layout.n() - 5)
}

/// The black drawing of AQ_n: eight columns and the straight edges.
pub fn black_svg(n: u32) -> Result<String> {
    if !(5..=MAX_SVG_N).contains(&n) {
        return Err(Error::InvalidDimension { n, reason: "black drawings are rendered for 5 <= n <= 11" });
    }
    let layout = layout_black(n)?;
    let gap = 220.0;
    let scale = 160.0;
    let (w, h) = (6.0 * gap, 10.0 * scale);
    let (cx, cy) = (w / 2.0, h / 2.0);
    let big = layout.names().len() as f64;
    let font = (10.0 - f64::from(n - 5)).max(3.0);

    let mut out = String::new();
    header(&mut out, w, h);
    let heights: Vec<Vec<f64>> = Part::ALL.iter().map(|&p| column_heights(&layout, p)).collect();
    let point = |p: Part, slot: usize| (cx + f64::from(p.x_position()) * gap, cy - heights[p as usize][slot - 1] * scale);

    for e in layout.straight_edges() {
        let (up, vp) = (Part::u(e.pair), Part::v(e.pair));
        let (x1, y1) = point(up, layout.names().slot_of(up, e.u_index));
        let (x2, y2) = point(vp, layout.names().slot_of(vp, e.v_index));
        let _ = writeln!(
            out,
            r#"<line x1="{x1:.2}" y1="{y1:.2}" x2="{x2:.2}" y2="{y2:.2}" stroke="black" stroke-width="0.4" data-dim="{}"/>"#,
            e.dim
        );
    }
    for col in layout.columns() {
        let p = col.part;
        let toward_partner = f64::from((p.partner().x_position() - p.x_position()).signum());
        for a in layout.diagram().arcs() {
            let (x, y1) = point(p, a.lo as usize);
            let (_, y2) = point(p, a.hi as usize);
            let (top, bottom) = if y1 < y2 { (y1, y2) } else { (y2, y1) };
            let dir = if a.side == col.facing { toward_partner } else { -toward_partner };
            let rx = 0.45 * gap * f64::from(a.hi - a.lo) / big;
            let ry = (bottom - top) / 2.0;
            let sweep = u8::from(dir > 0.0);
            let _ = writeln!(
                out,
                r#"<path d="M {x:.2} {top:.2} A {rx:.2} {ry:.2} 0 0 {sweep} {x:.2} {bottom:.2}" fill="none" stroke="dimgray" stroke-width="0.4" data-dim="{}"/>"#,
                a.dim
            );
        }
        for slot in 1..=layout.names().len() {
            let (x, y) = point(p, slot);
            let label = layout.names().spine(p)[slot - 1];
            let _ = writeln!(out, r#"<circle cx="{x:.2}" cy="{y:.2}" r="1.5" fill="black"/>"#);
            let _ = writeln!(
                out,
                r#"<text x="{:.2}" y="{:.2}" font-size="{font:.1}">{label}</text>"#,
                x + 3.0,
                y - 1.0
            );
        }
        let (x, _) = point(p, 1);
        let _ = writeln!(out, r#"<text x="{x:.2}" y="20" font-size="14" text-anchor="middle">{p}</text>"#);
    }
    out.push_str("</svg>\n");
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subdivision_keeps_order() {
        for m in 0..=8 {
            let c = spine_coordinates([1.0, 2.0, 3.0, 4.0], m);
            assert_eq!(c.len(), 4 << m);
            assert!(c.windows(2).all(|w| w[0] < w[1]), "m = {m}");
        }
        let c = spine_coordinates([1.0, 2.0, 3.0, 4.0], 1);
        assert!((c[1] - 4.0 / 3.0).abs() < 1e-12);
    }

    #[test]
    fn upsilon_svg_structure() {
        let svg = upsilon_svg(1).unwrap();
        assert_eq!(svg.matches("<circle").count(), 8);
        assert_eq!(svg.matches("<path").count(), 20);
        assert!(svg.contains("steelblue") && svg.contains("firebrick"));
        assert_eq!(svg, upsilon_svg(1).unwrap());
        assert!(upsilon_svg(9).is_err());
    }

    #[test]
    fn black_svg_structure() {
        let svg = black_svg(8).unwrap();
        assert_eq!(svg.matches("<line").count(), 4 * 2 * 32);
        assert_eq!(svg.matches("<circle").count(), 256);
        assert!(black_svg(12).is_err());
    }

    #[test]
    fn paired_heights_level() {
        let layout = layout_black(7).unwrap();
        for i in 1..=4 {
            let (up, vp) = (Part::u(i), Part::v(i));
            let (hu, hv) = (column_heights(&layout, up), column_heights(&layout, vp));
            for j in 1..=layout.names().len() {
                let a = hu[layout.names().slot_of(up, j) - 1];
                let b = hv[layout.names().slot_of(vp, j) - 1];
                assert!((a - b).abs() < 1e-9, "pair {i}, j = {j}");
            }
        }
    }
}
