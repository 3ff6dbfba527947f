//! Log-log least-squares fit of charged queries against `q` or `n`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::bench::BenchRow;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axis {
    Q,
    N,
}

impl Axis {
    fn name(self) -> &'static str {
        match self {
            Axis::Q => "q",
            Axis::N => "n",
        }
    }

    fn of(self, row: &BenchRow) -> usize {
        match self {
            Axis::Q => row.q,
            Axis::N => row.n,
        }
    }
}

impl FromStr for Axis {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "q" => Ok(Axis::Q),
            "n" => Ok(Axis::N),
            other => Err(format!("unknown axis {other:?}, expected `q` or `n`")),
        }
    }
}

impl fmt::Display for Axis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct FitReport {
    pub axis: Axis,
    pub slope: f64,
    pub intercept: f64,
    pub r_squared: f64,
    pub points: usize,
}

impl fmt::Display for FitReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "axis={} slope={:.4} intercept={:.4} r_squared={:.4} points={}",
            self.axis, self.slope, self.intercept, self.r_squared, self.points
        )
    }
}

/// Averages `quantum_queries` over seeds at each axis value, then fits
/// `ln Q = slope · ln x + intercept` by ordinary least squares.
pub fn fit(rows: &[BenchRow], axis: Axis) -> Result<FitReport> {
    let mut groups: BTreeMap<usize, (f64, usize)> = BTreeMap::new();
    for row in rows {
        let e = groups.entry(axis.of(row)).or_default();
        e.0 += row.quantum_queries as f64;
        e.1 += 1;
    }
    let points: Vec<(f64, f64)> = groups
        .into_iter()
        .filter(|&(x, (sum, _))| x > 0 && sum > 0.0)
        .map(|(x, (sum, count))| ((x as f64).ln(), (sum / count as f64).ln()))
        .collect();
    if points.len() < 4 {
        return Err(Error::InsufficientPoints {
            axis: axis.name(),
            found: points.len(),
        });
    }
    let (slope, intercept, r_squared) = least_squares(&points);
    Ok(FitReport {
        axis,
        slope,
        intercept,
        r_squared,
        points: points.len(),
    })
}

fn least_squares(points: &[(f64, f64)]) -> (f64, f64, f64) {
    let n = points.len() as f64;
    let mx = points.iter().map(|p| p.0).sum::<f64>() / n;
    let my = points.iter().map(|p| p.1).sum::<f64>() / n;
    let sxx: f64 = points.iter().map(|p| (p.0 - mx).powi(2)).sum();
    let sxy: f64 = points.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let syy: f64 = points.iter().map(|p| (p.1 - my).powi(2)).sum();
    let slope = sxy / sxx;
    let intercept = my - slope * mx;
    let ss_res: f64 = points.iter().map(|p| (p.1 - intercept - slope * p.0).powi(2)).sum();
    let r_squared = if syy == 0.0 { 1.0 } else { (1.0 - ss_res / syy).clamp(0.0, 1.0) };
    (slope, intercept, r_squared)
}
