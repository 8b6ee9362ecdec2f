//! SVG ternary plots on an 800×720 canvas.
//!
//! The unit-side triangle `V0 = (0,0)`, `V1 = (1,0)`, `V2 = (1/2, √3/2)` is
//! scaled by 720 and placed with `V0` at `(40, 680)`.

use std::fmt::Write;

use runoff_core::region::{RegionOutcome, TernaryCoverageGrid};
use runoff_core::{EliminationDistribution, Model, PlanarPoint, SupportVector};

use crate::numfmt::sig12;
use crate::tables::MapPoint;

pub const WIDTH: u32 = 800;
pub const HEIGHT: u32 = 720;
const SCALE: f64 = 720.0;
const ORIGIN_X: f64 = 40.0;
const ORIGIN_Y: f64 = 680.0;
const HALF_SQRT3: f64 = 0.866_025_403_784_438_6;

const TRANSITIVE_FILL: &str = "#7aa6d6";
const RELEVANT_FILL: &str = "#d62728";
const INTRANSITIVE_FILL: &str = "#f28e2b";

fn screen(p: PlanarPoint) -> (f64, f64) {
    (ORIGIN_X + SCALE * p.x, ORIGIN_Y - SCALE * p.y)
}

fn lattice(a: u32, b: u32, resolution: u32) -> PlanarPoint {
    let r = resolution as f64;
    let (q1, q2) = (a as f64 / r, b as f64 / r);
    PlanarPoint {
        x: q1 + 0.5 * q2,
        y: HALF_SQRT3 * q2,
    }
}

fn polygon(out: &mut String, pts: &[PlanarPoint], fill: &str) {
    out.push_str("<polygon points=\"");
    for (k, p) in pts.iter().enumerate() {
        let (x, y) = screen(*p);
        if k > 0 {
            out.push(' ');
        }
        let _ = write!(out, "{x:.3},{y:.3}");
    }
    let _ = writeln!(out, "\" fill=\"{fill}\"/>");
}

fn header(out: &mut String, title: &str) {
    let _ = writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}">"#
    );
    let _ = writeln!(out, r##"<rect width="{WIDTH}" height="{HEIGHT}" fill="#ffffff"/>"##);
    let _ = writeln!(
        out,
        r#"<text x="400" y="28" font-family="sans-serif" font-size="18" text-anchor="middle">{title}</text>"#
    );
}

fn outline_and_labels(out: &mut String) {
    let v = [lattice(0, 0, 1), lattice(1, 0, 1), lattice(0, 1, 1)];
    out.push_str("<polygon points=\"");
    for (k, p) in v.iter().enumerate() {
        let (x, y) = screen(*p);
        if k > 0 {
            out.push(' ');
        }
        let _ = write!(out, "{x:.3},{y:.3}");
    }
    let _ = writeln!(out, "\" fill=\"none\" stroke=\"#000000\" stroke-width=\"1.5\"/>");
    let labels = [("q0 = 1", v[0], -10.0, 20.0, "end"), ("q1 = 1", v[1], 10.0, 20.0, "start"), ("q2 = 1", v[2], 0.0, -10.0, "middle")];
    for (text, p, dx, dy, anchor) in labels {
        let (x, y) = screen(p);
        let _ = writeln!(
            out,
            r#"<text x="{:.3}" y="{:.3}" font-family="sans-serif" font-size="14" text-anchor="{anchor}">{text}</text>"#,
            x + dx,
            y + dy
        );
    }
}

fn legend(out: &mut String, entries: &[(&str, &str)]) {
    for (k, (fill, text)) in entries.iter().enumerate() {
        let y = 60 + 24 * k as u32;
        let _ = writeln!(out, r#"<rect x="40" y="{y}" width="16" height="16" fill="{fill}"/>"#);
        let _ = writeln!(
            out,
            r#"<text x="64" y="{}" font-family="sans-serif" font-size="14">{text}</text>"#,
            y + 13
        );
    }
}

fn title(model: Model, omega: &SupportVector) -> String {
    let [a, b, c] = omega.as_array().map(sig12);
    format!("{} model, ω = ({a}, {b}, {c})", model.name())
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Fill {
    Empty,
    Transitive,
    Relevant,
}

/// Row-wise runs of equally filled cells drawn as single quadrilaterals.
fn draw_cells(out: &mut String, grid: &TernaryCoverageGrid, fills: &[Fill]) {
    let r = grid.resolution();
    let mut index = 0;
    for j in 0..r {
        let row_len = (2 * (r - j) - 1) as usize;
        let row = &fills[index..index + row_len];
        let mut start = 0;
        while start < row_len {
            let fill = row[start];
            let mut end = start;
            while end + 1 < row_len && row[end + 1] == fill {
                end += 1;
            }
            let colour = match fill {
                Fill::Empty => None,
                Fill::Transitive => Some(TRANSITIVE_FILL),
                Fill::Relevant => Some(RELEVANT_FILL),
            };
            if let Some(colour) = colour {
                // even positions are upward cells, odd ones downward
                let (si, sd) = ((start / 2) as u32, start % 2 == 1);
                let (ei, ed) = ((end / 2) as u32, end % 2 == 1);
                let bottom_left = if sd { lattice(si + 1, j, r) } else { lattice(si, j, r) };
                let top_left = lattice(si, j + 1, r);
                let bottom_right = lattice(ei + 1, j, r);
                let top_right = if ed { lattice(ei + 1, j + 1, r) } else { lattice(ei, j + 1, r) };
                let mut pts = vec![bottom_left, bottom_right, top_right, top_left];
                pts.dedup();
                polygon(out, &pts, colour);
            }
            start = end + 1;
        }
        index += row_len;
    }
}

/// Coverage plot: transitive-reachable cells and relevant cells.
pub fn region_svg(outcome: &RegionOutcome) -> String {
    let grid = &outcome.grid;
    let relevant = outcome.confirmed.as_ref().unwrap_or(&outcome.raw.cells);
    let mut fills: Vec<Fill> = grid
        .cells()
        .iter()
        .map(|c| if c.transitive_side() > 0 { Fill::Transitive } else { Fill::Empty })
        .collect();
    for &c in relevant {
        fills[c] = Fill::Relevant;
    }
    let report = &outcome.report;
    let mut out = String::new();
    header(&mut out, &title(report.model, &report.omega));
    draw_cells(&mut out, grid, &fills);
    outline_and_labels(&mut out);
    let relevant_label = if outcome.confirmed.is_some() {
        "only intransitive strategies (confirmed)"
    } else {
        "only intransitive strategies"
    };
    legend(
        &mut out,
        &[(TRANSITIVE_FILL, "transitive strategy exists"), (RELEVANT_FILL, relevant_label)],
    );
    out.push_str("</svg>\n");
    out
}

/// Scatter of feasible sample images coloured by class.
pub fn map_svg(model: Model, omega: &SupportVector, points: &[MapPoint]) -> String {
    let mut out = String::new();
    header(&mut out, &title(model, omega));
    for (class_intransitive, fill) in [(false, TRANSITIVE_FILL), (true, INTRANSITIVE_FILL)] {
        let _ = writeln!(out, r#"<g fill="{fill}">"#);
        for p in points.iter().filter(|p| p.class.is_intransitive() == class_intransitive) {
            if let Some(pl) = p.planar {
                let (x, y) = screen(pl);
                let _ = writeln!(out, r#"<circle cx="{x:.3}" cy="{y:.3}" r="1.2"/>"#);
            }
        }
        out.push_str("</g>\n");
    }
    outline_and_labels(&mut out);
    legend(
        &mut out,
        &[(TRANSITIVE_FILL, "transitive strategy"), (INTRANSITIVE_FILL, "intransitive strategy")],
    );
    out.push_str("</svg>\n");
    out
}

/// Screen position of a distribution, for tests and annotations.
pub fn screen_position(q: &EliminationDistribution) -> (f64, f64) {
    screen(PlanarPoint {
        x: q.q1 + 0.5 * q.q2,
        y: HALF_SQRT3 * q.q2,
    })
}
