//! Schematic SVG barcode figures on the geometric model: a disc with marked
//! boundary points for line quivers, an annulus for cycle quivers. Output is
//! byte-deterministic for a fixed input.

use std::fmt::Write;

use arcband_core::{Barcode, GeomObject, Quiver, QuiverKind, Tag, TubeKind};

const SIZE: f64 = 480.0;
const CENTER: f64 = SIZE / 2.0;
const OUTER_R: f64 = 200.0;
const INNER_R: f64 = 80.0;

fn pt(radius: f64, angle: f64) -> (f64, f64) {
    (
        CENTER + radius * angle.cos(),
        CENTER - radius * angle.sin(),
    )
}

fn fmt(v: f64) -> String {
    format!("{v:.2}")
}

pub fn render_svg(quiver: &Quiver, barcode: &Barcode) -> String {
    let mut svg = String::new();
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{s}" height="{s}" viewBox="0 0 {s} {s}">"#,
        s = SIZE as u64
    );
    let _ = writeln!(
        svg,
        r#"<rect width="{s}" height="{s}" fill="white"/>"#,
        s = SIZE as u64
    );
    match quiver.kind {
        QuiverKind::LineA => render_disc(&mut svg, quiver, barcode),
        QuiverKind::CycleAtilde => render_annulus(&mut svg, quiver, barcode),
    }
    svg.push_str("</svg>\n");
    svg
}

fn render_disc(svg: &mut String, quiver: &Quiver, barcode: &Barcode) {
    let n = quiver.n_vertices;
    let marked = n + 1;
    let _ = writeln!(
        svg,
        r#"<circle cx="{c}" cy="{c}" r="{r}" fill="none" stroke="black" stroke-width="2"/>"#,
        c = fmt(CENTER),
        r = fmt(OUTER_R)
    );
    let angles: Vec<f64> = (0..marked)
        .map(|i| std::f64::consts::FRAC_PI_2 - 2.0 * std::f64::consts::PI * i as f64 / marked as f64)
        .collect();
    for (i, a) in angles.iter().enumerate() {
        let (x, y) = pt(OUTER_R, *a);
        let (lx, ly) = pt(OUTER_R + 16.0, *a);
        let _ = writeln!(
            svg,
            r#"<circle cx="{}" cy="{}" r="4" fill="black"/><text x="{}" y="{}" font-size="14" text-anchor="middle">{}</text>"#,
            fmt(x),
            fmt(y),
            fmt(lx),
            fmt(ly),
            i + 1
        );
    }
    for (entry_idx, (g, mult)) in barcode.entries.iter().enumerate() {
        if let GeomObject::IntervalA { a, b } = g {
            let (x1, y1) = pt(OUTER_R, angles[a - 1]);
            let (x2, y2) = pt(OUTER_R, angles[b - 1]);
            let bend = 0.35 + 0.06 * entry_idx as f64;
            let (mx, my) = (
                CENTER + (x1 + x2 - 2.0 * CENTER) * bend / 2.0,
                CENTER + (y1 + y2 - 2.0 * CENTER) * bend / 2.0,
            );
            let _ = writeln!(
                svg,
                r#"<path d="M {} {} Q {} {} {} {}" fill="none" stroke="steelblue" stroke-width="2"/>"#,
                fmt(x1),
                fmt(y1),
                fmt(mx),
                fmt(my),
                fmt(x2),
                fmt(y2)
            );
            let _ = writeln!(
                svg,
                r#"<text x="{}" y="{}" font-size="12" fill="steelblue">[{a},{b}) x{mult}</text>"#,
                fmt(mx),
                fmt(my)
            );
        }
    }
}

fn render_annulus(svg: &mut String, quiver: &Quiver, barcode: &Barcode) {
    let p = quiver.p() as i64;
    let q = quiver.q() as i64;
    for (r, w) in [(OUTER_R, 2.0), (INNER_R, 2.0)] {
        let _ = writeln!(
            svg,
            r#"<circle cx="{c}" cy="{c}" r="{r}" fill="none" stroke="black" stroke-width="{w}"/>"#,
            c = fmt(CENTER),
            r = fmt(r),
        );
    }
    let outer_angle = |u: i64| -> f64 {
        std::f64::consts::FRAC_PI_2 + 2.0 * std::f64::consts::PI * (u.rem_euclid(p)) as f64 / p as f64
    };
    let inner_angle = |v: i64| -> f64 {
        std::f64::consts::FRAC_PI_2 - 2.0 * std::f64::consts::PI * (v.rem_euclid(q)) as f64 / q as f64
    };
    for u in 0..p {
        let (x, y) = pt(OUTER_R, outer_angle(u));
        let _ = writeln!(svg, r#"<circle cx="{}" cy="{}" r="4" fill="black"/>"#, fmt(x), fmt(y));
    }
    for v in 0..q {
        let (x, y) = pt(INNER_R, inner_angle(v));
        let _ = writeln!(svg, r#"<circle cx="{}" cy="{}" r="4" fill="black"/>"#, fmt(x), fmt(y));
    }
    let mut band_count = 0usize;
    for (g, mult) in &barcode.entries {
        match g {
            GeomObject::BridgeArc { tag, u, v } => {
                let color = match tag {
                    Tag::Preprojective => "steelblue",
                    Tag::Preinjective => "firebrick",
                };
                let (x1, y1) = pt(OUTER_R, outer_angle(*u));
                let (x2, y2) = pt(INNER_R, inner_angle(*v));
                let _ = writeln!(
                    svg,
                    r#"<line x1="{}" y1="{}" x2="{}" y2="{}" stroke="{color}" stroke-width="2"/>"#,
                    fmt(x1),
                    fmt(y1),
                    fmt(x2),
                    fmt(y2)
                );
                let _ = writeln!(
                    svg,
                    r#"<text x="{}" y="{}" font-size="12" fill="{color}">{g} x{mult}</text>"#,
                    fmt((x1 + x2) / 2.0 + 6.0),
                    fmt((y1 + y2) / 2.0)
                );
            }
            GeomObject::TubeArc { tube, a, b } => {
                // Boundary-hugging arc between two marked points of one circle.
                let (radius, a1, a2, bulge) = match tube {
                    TubeKind::RankP => (OUTER_R, outer_angle(*a), outer_angle(*b), -30.0),
                    TubeKind::RankQ => (INNER_R, inner_angle(*a), inner_angle(*b), 30.0),
                };
                let (x1, y1) = pt(radius, a1);
                let (x2, y2) = pt(radius, a2);
                let mid = (a1 + a2) / 2.0;
                let (mx, my) = pt(radius + bulge, mid);
                let _ = writeln!(
                    svg,
                    r#"<path d="M {} {} Q {} {} {} {}" fill="none" stroke="darkgreen" stroke-width="2"/>"#,
                    fmt(x1),
                    fmt(y1),
                    fmt(mx),
                    fmt(my),
                    fmt(x2),
                    fmt(y2)
                );
                let _ = writeln!(
                    svg,
                    r#"<text x="{}" y="{}" font-size="12" fill="darkgreen">{g} x{mult}</text>"#,
                    fmt(mx),
                    fmt(my)
                );
            }
            GeomObject::BandObj { .. } => {
                let r = (OUTER_R + INNER_R) / 2.0 + 14.0 * band_count as f64;
                band_count += 1;
                let _ = writeln!(
                    svg,
                    r#"<circle cx="{c}" cy="{c}" r="{r}" fill="none" stroke="darkorange" stroke-width="2" stroke-dasharray="6 3"/>"#,
                    c = fmt(CENTER),
                    r = fmt(r)
                );
                let _ = writeln!(
                    svg,
                    r#"<text x="{}" y="{}" font-size="12" fill="darkorange">{g} x{mult}</text>"#,
                    fmt(CENTER + 8.0),
                    fmt(CENTER - r - 4.0)
                );
            }
            GeomObject::IntervalA { .. } => {}
        }
    }
}
