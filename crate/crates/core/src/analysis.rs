//! Per-point analysis records, α² sweeps and their CSV/JSON forms.

use std::io::{Read, Write};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::cloner::{broadcast_pipeline, BroadcastOutputs, OutputPair};
use crate::error::{Error, Result};
use crate::measures::{concurrence, eof, linear_entropy};
use crate::separability::ppt_verdict;
use crate::states::{DensityMatrix, WParams};

/// Separability and entanglement figures of one two-qubit output.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct OutputAnalysis {
    pub w3: f64,
    pub w4: f64,
    pub min_pt_eigenvalue: f64,
    pub negativity: f64,
    pub separable: bool,
    pub concurrence: f64,
    pub eof: f64,
    pub linear_entropy: f64,
}

impl OutputAnalysis {
    pub fn of(rho: &DensityMatrix) -> Result<Self> {
        let v = ppt_verdict(rho)?;
        let c = concurrence(rho)?;
        Ok(Self {
            w3: v.w3,
            w4: v.w4,
            min_pt_eigenvalue: v.min_pt_eigenvalue,
            negativity: v.negativity,
            separable: v.separable,
            concurrence: c,
            eof: eof(c)?,
            linear_entropy: linear_entropy(rho)?,
        })
    }

    fn fields(&self) -> [f64; 8] {
        [
            self.w3,
            self.w4,
            self.min_pt_eigenvalue,
            self.negativity,
            if self.separable { 1.0 } else { 0.0 },
            self.concurrence,
            self.eof,
            self.linear_entropy,
        ]
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AnalysisRecord {
    pub alpha2: f64,
    pub rho_15: OutputAnalysis,
    pub rho_14: OutputAnalysis,
    pub rho_25: OutputAnalysis,
    pub rho_42: OutputAnalysis,
}

impl AnalysisRecord {
    pub fn get(&self, pair: OutputPair) -> &OutputAnalysis {
        match pair {
            OutputPair::Rho15 => &self.rho_15,
            OutputPair::Rho14 => &self.rho_14,
            OutputPair::Rho25 => &self.rho_25,
            OutputPair::Rho42 => &self.rho_42,
        }
    }

    pub fn from_outputs(alpha2: f64, out: &BroadcastOutputs) -> Result<Self> {
        Ok(Self {
            alpha2,
            rho_15: OutputAnalysis::of(&out.rho_15)?,
            rho_14: OutputAnalysis::of(&out.rho_14)?,
            rho_25: OutputAnalysis::of(&out.rho_25)?,
            rho_42: OutputAnalysis::of(&out.rho_42)?,
        })
    }
}

pub fn analyze(p: &WParams) -> Result<AnalysisRecord> {
    AnalysisRecord::from_outputs(p.alpha2, &broadcast_pipeline(p)?)
}

/// Parameters for a single point: β² defaults to the symmetric choice (1 − α²)/2.
pub fn point_params(alpha2: f64, beta2: Option<f64>) -> Result<WParams> {
    match beta2 {
        None => WParams::symmetric(alpha2),
        Some(b) => WParams::from_alpha_beta(alpha2, b),
    }
}

/// Evenly spaced α² values including both endpoints.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SweepGrid {
    pub from: f64,
    pub to: f64,
    pub steps: usize,
}

impl SweepGrid {
    pub fn new(from: f64, to: f64, steps: usize) -> Result<Self> {
        if steps < 2 {
            return Err(Error::InvalidArgument(format!(
                "sweep needs at least 2 steps, got {steps}"
            )));
        }
        if !(0.0 < from && from < to && to < 1.0) {
            return Err(Error::InvalidArgument(format!(
                "sweep range must satisfy 0 < from < to < 1 (from={from}, to={to})"
            )));
        }
        Ok(Self { from, to, steps })
    }

    pub fn points(&self) -> Vec<f64> {
        let last = (self.steps - 1) as f64;
        (0..self.steps)
            .map(|i| {
                if i == self.steps - 1 {
                    self.to
                } else {
                    self.from + (self.to - self.from) * (i as f64 / last)
                }
            })
            .collect()
    }
}

/// One record per grid point along the β = γ slice, in grid order.
pub fn sweep(grid: &SweepGrid, parallel: bool) -> Result<Vec<AnalysisRecord>> {
    let run = |a: f64| WParams::symmetric(a).and_then(|p| analyze(&p));
    let points = grid.points();
    if parallel {
        points.into_par_iter().map(run).collect()
    } else {
        points.into_iter().map(run).collect()
    }
}

const FIELD_NAMES: [&str; 8] = [
    "w3",
    "w4",
    "min_pt_eig",
    "negativity",
    "separable",
    "concurrence",
    "eof",
    "linear_entropy",
];

pub fn csv_header() -> Vec<String> {
    let mut cols = vec!["alpha2".to_string()];
    for pair in OutputPair::ALL {
        cols.extend(FIELD_NAMES.iter().map(|f| format!("{}_{f}", pair.name())));
    }
    cols
}

/// Shortest decimal that parses back to the same `f64`.
fn fmt_f64(x: f64) -> String {
    format!("{x:?}")
}

pub fn write_csv<W: Write>(records: &[AnalysisRecord], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(csv_header())?;
    for r in records {
        let mut row = vec![fmt_f64(r.alpha2)];
        for pair in OutputPair::ALL {
            let a = r.get(pair);
            for (k, v) in a.fields().iter().enumerate() {
                row.push(if k == 4 {
                    (if a.separable { "1" } else { "0" }).to_string()
                } else {
                    fmt_f64(*v)
                });
            }
        }
        w.write_record(&row)?;
    }
    w.flush().map_err(|e| Error::Csv(e.to_string()))?;
    Ok(())
}

pub fn to_csv_string(records: &[AnalysisRecord]) -> Result<String> {
    let mut buf = Vec::new();
    write_csv(records, &mut buf)?;
    String::from_utf8(buf).map_err(|e| Error::Csv(e.to_string()))
}

fn parse_output(cells: &[&str]) -> Result<OutputAnalysis> {
    let num = |i: usize| -> Result<f64> {
        cells[i]
            .parse::<f64>()
            .map_err(|e| Error::Csv(format!("bad number `{}`: {e}", cells[i])))
    };
    let separable = match cells[4] {
        "1" => true,
        "0" => false,
        other => return Err(Error::Csv(format!("bad separable flag `{other}`"))),
    };
    Ok(OutputAnalysis {
        w3: num(0)?,
        w4: num(1)?,
        min_pt_eigenvalue: num(2)?,
        negativity: num(3)?,
        separable,
        concurrence: num(5)?,
        eof: num(6)?,
        linear_entropy: num(7)?,
    })
}

pub fn read_csv<R: Read>(input: R) -> Result<Vec<AnalysisRecord>> {
    let mut rdr = csv::Reader::from_reader(input);
    let header: Vec<String> = rdr.headers()?.iter().map(str::to_string).collect();
    if header != csv_header() {
        return Err(Error::Csv("unexpected header".into()));
    }
    let mut out = Vec::new();
    for row in rdr.records() {
        let row = row?;
        let cells: Vec<&str> = row.iter().collect();
        let alpha2 = cells[0]
            .parse::<f64>()
            .map_err(|e| Error::Csv(format!("bad alpha2 `{}`: {e}", cells[0])))?;
        let block = |k: usize| parse_output(&cells[1 + 8 * k..9 + 8 * k]);
        out.push(AnalysisRecord {
            alpha2,
            rho_15: block(0)?,
            rho_14: block(1)?,
            rho_25: block(2)?,
            rho_42: block(3)?,
        });
    }
    Ok(out)
}

pub fn to_json_string(records: &[AnalysisRecord]) -> Result<String> {
    serde_json::to_string_pretty(records).map_err(|e| Error::InvalidArgument(e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_endpoints_are_exact() {
        let g = SweepGrid::new(0.01, 0.21, 21).unwrap();
        let p = g.points();
        assert_eq!(p.len(), 21);
        assert_eq!(p[0], 0.01);
        assert_eq!(p[20], 0.21);
        assert!((p[10] - 0.11).abs() < 1e-15);
    }

    #[test]
    fn grid_validation() {
        assert!(SweepGrid::new(0.1, 0.2, 1).is_err());
        assert!(SweepGrid::new(0.0, 0.2, 5).is_err());
        assert!(SweepGrid::new(0.3, 0.2, 5).is_err());
        assert!(SweepGrid::new(0.3, 1.0, 5).is_err());
    }

    #[test]
    fn w_point_record() {
        let r = analyze(&WParams::symmetric(1.0 / 3.0).unwrap()).unwrap();
        for pair in OutputPair::ALL {
            assert!(r.get(pair).separable);
            assert!(r.get(pair).concurrence < 1e-10);
        }
    }

    #[test]
    fn asymmetric_point_requires_valid_gamma() {
        assert!(point_params(0.1, Some(0.95)).is_err());
        let p = point_params(0.1, Some(0.3)).unwrap();
        assert!((p.gamma2 - 0.6).abs() < 1e-15);
    }

    #[test]
    fn header_layout() {
        let h = csv_header();
        assert_eq!(h.len(), 33);
        assert_eq!(h[0], "alpha2");
        assert_eq!(h[1], "rho_15_w3");
        assert_eq!(h[5], "rho_15_separable");
        assert_eq!(h[32], "rho_42_linear_entropy");
    }

    #[test]
    fn json_field_names() {
        let r = analyze(&WParams::symmetric(0.1).unwrap()).unwrap();
        let v: serde_json::Value = serde_json::from_str(&to_json_string(&[r]).unwrap()).unwrap();
        let first = &v[0];
        assert!(first["alpha2"].is_number());
        assert_eq!(first["rho_15"]["separable"], serde_json::Value::Bool(false));
        assert!(first["rho_14"]["min_pt_eigenvalue"].is_number());
    }

    #[test]
    fn csv_rejects_garbage() {
        assert!(read_csv("a,b\n1,2\n".as_bytes()).is_err());
    }
}
