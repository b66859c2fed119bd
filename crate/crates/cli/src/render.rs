//! SVG drawing of a web in a disk.

use std::f64::consts::PI;
use std::fmt::Write;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use webtab::strings::Color;
use webtab::web::Web;

#[derive(Debug, Clone, Copy)]
pub struct Layout {
    pub radius: f64,
    /// Preferred edge length for the relaxation.
    pub spacing: f64,
    pub seed: u64,
    pub iterations: usize,
}

impl Default for Layout {
    fn default() -> Self {
        Layout {
            radius: 200.0,
            spacing: 40.0,
            seed: 0,
            iterations: 400,
        }
    }
}

type Point = (f64, f64);

/// Boundary vertices sit on the circle clockwise from the top left; internal
/// vertices start at random points and relax under spring and repulsion forces.
pub fn positions(w: &Web, layout: &Layout) -> Vec<Point> {
    let r = layout.radius;
    let n = w.vertices().len();
    let mut pos = vec![(0.0, 0.0); n];
    let reading = w.reading_order();
    let m = reading.len().max(1) as f64;
    for (i, &v) in reading.iter().enumerate() {
        let theta = 0.75 * PI - 2.0 * PI * i as f64 / m;
        pos[v] = (r * theta.cos(), -r * theta.sin());
    }
    let mut rng = ChaCha8Rng::seed_from_u64(layout.seed);
    let internal: Vec<usize> = (0..n).filter(|&v| !w.vertex(v).boundary).collect();
    for &v in &internal {
        let a = rng.gen::<f64>() * 2.0 * PI;
        let d = rng.gen::<f64>().sqrt() * 0.5 * r;
        pos[v] = (d * a.cos(), d * a.sin());
    }
    let neighbours: Vec<Vec<usize>> = (0..n)
        .map(|v| w.rotation(v).iter().map(|&e| w.edge(e).other(v)).collect())
        .collect();
    // Barycentric placement first, so the drawing starts out planar.
    for _ in 0..layout.iterations {
        for &v in &internal {
            let k = neighbours[v].len() as f64;
            let (sx, sy) = neighbours[v]
                .iter()
                .fold((0.0, 0.0), |(x, y), &u| (x + pos[u].0, y + pos[u].1));
            pos[v] = (sx / k, sy / k);
        }
    }
    let ideal = layout.spacing;
    let mut temp = ideal * 0.5;
    for _ in 0..layout.iterations / 4 {
        let mut disp = vec![(0.0, 0.0); n];
        for &v in &internal {
            for u in 0..n {
                if u == v {
                    continue;
                }
                let (dx, dy) = (pos[v].0 - pos[u].0, pos[v].1 - pos[u].1);
                let d2 = (dx * dx + dy * dy).max(1e-6);
                if d2 < 4.0 * ideal * ideal {
                    let f = ideal * ideal / d2;
                    disp[v].0 += dx * f * 0.1;
                    disp[v].1 += dy * f * 0.1;
                }
            }
            for &u in &neighbours[v] {
                let (dx, dy) = (pos[u].0 - pos[v].0, pos[u].1 - pos[v].1);
                let d = (dx * dx + dy * dy).sqrt().max(1e-6);
                let f = (d - ideal) / d;
                disp[v].0 += dx * f * 0.5;
                disp[v].1 += dy * f * 0.5;
            }
        }
        for &v in &internal {
            let (dx, dy) = disp[v];
            let len = (dx * dx + dy * dy).sqrt();
            if len > 0.0 {
                let step = len.min(temp) / len;
                pos[v].0 += dx * step;
                pos[v].1 += dy * step;
            }
            let d = (pos[v].0 * pos[v].0 + pos[v].1 * pos[v].1).sqrt();
            if d > 0.92 * r {
                pos[v].0 *= 0.92 * r / d;
                pos[v].1 *= 0.92 * r / d;
            }
        }
        temp *= 0.97;
    }
    pos
}

fn fill(c: Color) -> &'static str {
    match c {
        Color::B => "black",
        Color::W => "white",
    }
}

pub fn to_svg(w: &Web, layout: &Layout) -> String {
    let pos = positions(w, layout);
    let r = layout.radius;
    let margin = 40.0;
    let size = 2.0 * (r + margin);
    let c = r + margin;
    let at = |p: Point| (p.0 + c, p.1 + c);
    let mut out = String::new();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{size:.0}" height="{size:.0}" viewBox="0 0 {size:.0} {size:.0}">"#
    )
    .unwrap();
    writeln!(
        out,
        r##"<circle cx="{c:.2}" cy="{c:.2}" r="{r:.2}" fill="none" stroke="#999" stroke-dasharray="4 4"/>"##
    )
    .unwrap();
    for (id, e) in w.edges().iter().enumerate() {
        let (x1, y1) = at(pos[e.a]);
        let (x2, y2) = at(pos[e.b]);
        writeln!(
            out,
            r#"<line class="edge" data-edge="{id}" x1="{x1:.2}" y1="{y1:.2}" x2="{x2:.2}" y2="{y2:.2}" stroke="black" stroke-width="1.5"/>"#
        )
        .unwrap();
        writeln!(
            out,
            r##"<text class="label" x="{:.2}" y="{:.2}" font-size="11" fill="#c00" text-anchor="middle">{}</text>"##,
            (x1 + x2) / 2.0 + 4.0,
            (y1 + y2) / 2.0 - 4.0,
            e.label.value()
        )
        .unwrap();
    }
    for (v, vert) in w.vertices().iter().enumerate() {
        let (x, y) = at(pos[v]);
        let class = if vert.boundary { "boundary" } else { "internal" };
        writeln!(
            out,
            r#"<circle class="{class}" data-vertex="{v}" cx="{x:.2}" cy="{y:.2}" r="5" fill="{}" stroke="black"/>"#,
            fill(vert.color)
        )
        .unwrap();
    }
    for (i, &v) in w.reading_order().iter().enumerate() {
        let (x, y) = pos[v];
        let (lx, ly) = at((x * (r + 18.0) / r, y * (r + 18.0) / r));
        writeln!(
            out,
            r#"<text class="position" x="{lx:.2}" y="{ly:.2}" font-size="12" text-anchor="middle" dominant-baseline="middle">{}</text>"#,
            i + 1
        )
        .unwrap();
    }
    out.push_str("</svg>\n");
    out
}
