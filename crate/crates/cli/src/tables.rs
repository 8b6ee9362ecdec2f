//! CSV output of `map` and `sweep`.
//!
//! Columns are fixed, values use [`sig12`], records end with LF.

use std::io::Write;

use runoff_core::{
    classify_strategy, determinant, inverse_elimination, project_to_ternary, BlochPoint,
    Classification, Model, PlanarPoint, SampleStream, Strategy, SupportVector, SweepResult,
};

use crate::numfmt::sig12;

pub const MAP_HEADER_QUANTUM: [&str; 14] = [
    "x1", "x2", "x3", "p", "r", "s", "class", "d", "q0", "q1", "q2", "feasible", "u", "v",
];
pub const MAP_HEADER_CLASSICAL: [&str; 11] =
    ["p", "r", "s", "class", "d", "q0", "q1", "q2", "feasible", "u", "v"];
pub const SWEEP_HEADER: [&str; 3] = ["omega2", "raw_fraction", "confirmed_fraction"];

/// One sampled strategy pushed through the inverse map.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MapPoint {
    pub bloch: Option<BlochPoint>,
    pub strategy: Strategy,
    pub class: Classification,
    pub d: f64,
    /// `None` for singular strategies; raw values when infeasible.
    pub q: Option<[f64; 3]>,
    pub feasible: bool,
    pub planar: Option<PlanarPoint>,
}

pub fn map_points(model: Model, omega: &SupportVector, n: u64, seed: u64) -> Vec<MapPoint> {
    let stream = SampleStream::new(seed, model);
    stream
        .samples(0..n)
        .map(|sample| {
            let strategy = sample.strategy;
            let class = classify_strategy(&strategy);
            let d = determinant(&strategy);
            match inverse_elimination(&strategy, omega) {
                Ok(inv) => MapPoint {
                    bloch: sample.bloch,
                    strategy,
                    class,
                    d,
                    q: Some(inv.q.as_array()),
                    feasible: inv.feasible,
                    planar: inv.feasible.then(|| project_to_ternary(&inv.q).ok()).flatten(),
                },
                Err(_) => MapPoint {
                    bloch: sample.bloch,
                    strategy,
                    class,
                    d,
                    q: None,
                    feasible: false,
                    planar: None,
                },
            }
        })
        .collect()
}

fn writer<W: Write>(out: W) -> csv::Writer<W> {
    csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(out)
}

pub fn write_map<W: Write>(out: W, model: Model, points: &[MapPoint]) -> csv::Result<()> {
    let mut w = writer(out);
    match model {
        Model::Quantum => w.write_record(MAP_HEADER_QUANTUM)?,
        Model::Classical => w.write_record(MAP_HEADER_CLASSICAL)?,
    }
    let opt = |v: Option<f64>| v.map(sig12).unwrap_or_default();
    for pt in points {
        let mut rec: Vec<String> = Vec::with_capacity(14);
        if model == Model::Quantum {
            let b = pt.bloch.expect("quantum points carry a Bloch vector");
            rec.extend([b.x1, b.x2, b.x3].map(sig12));
        }
        rec.extend(pt.strategy.params().map(sig12));
        rec.push(pt.class.label().to_owned());
        rec.push(sig12(pt.d));
        match pt.q {
            Some(q) => rec.extend(q.map(sig12)),
            None => rec.extend([String::new(), String::new(), String::new()]),
        }
        rec.push(pt.feasible.to_string());
        rec.push(opt(pt.planar.map(|p| p.x)));
        rec.push(opt(pt.planar.map(|p| p.y)));
        w.write_record(&rec)?;
    }
    w.flush()?;
    Ok(())
}

pub fn write_sweep<W: Write>(out: W, result: &SweepResult) -> csv::Result<()> {
    let mut w = writer(out);
    w.write_record(SWEEP_HEADER)?;
    for p in &result.points {
        w.write_record([
            sig12(p.omega2),
            sig12(p.raw_fraction),
            p.confirmed_fraction.map(sig12).unwrap_or_default(),
        ])?;
    }
    w.flush()?;
    Ok(())
}
