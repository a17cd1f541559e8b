use serde::Serialize;

use super::TropPoint;
use crate::{Error, Result};

/// A sampled 𝕋-point, with decimal log₁₀ coordinates when requested.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SampledPoint {
    pub point: TropPoint,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub log10: Option<Vec<f64>>,
}

impl SampledPoint {
    pub fn new(point: TropPoint, log_coords: bool) -> Self {
        let log10 = log_coords.then(|| point.coords().iter().map(|c| c.to_f64().log10()).collect());
        SampledPoint { point, log10 }
    }
}

/// Exact `num/den` coordinates and a membership flag per grid point.
pub fn grid_to_csv(rows: &[(TropPoint, bool)]) -> Result<String> {
    let dim = rows.first().map_or(0, |(p, _)| p.dim());
    let mut w = csv::Writer::from_writer(Vec::new());
    let mut header: Vec<String> = (1..=dim).map(|i| format!("x{i}")).collect();
    header.push("member".into());
    w.write_record(&header).map_err(|e| Error::Format(e.to_string()))?;
    for (p, member) in rows {
        let mut rec: Vec<String> = p.coords().iter().map(|c| c.value().to_fraction_string()).collect();
        rec.push(member.to_string());
        w.write_record(&rec).map_err(|e| Error::Format(e.to_string()))?;
    }
    let bytes = w.into_inner().map_err(|e| Error::Format(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| Error::Format(e.to_string()))
}

pub fn members_to_json(points: &[SampledPoint]) -> Result<String> {
    #[derive(Serialize)]
    struct Cloud<'a> {
        count: usize,
        points: &'a [SampledPoint],
    }
    serde_json::to_string_pretty(&Cloud { count: points.len(), points }).map_err(|e| Error::Format(e.to_string()))
}

fn decimal(x: f64, precision: usize) -> String {
    if x.is_infinite() {
        if x < 0.0 {
            "-inf".into()
        } else {
            "inf".into()
        }
    } else {
        format!("{x:.precision$}")
    }
}

/// Whitespace-separated decimal columns, one point per line.
pub fn members_to_plot(points: &[SampledPoint], precision: usize, log_coords: bool) -> String {
    let mut out = String::new();
    let dim = points.first().map_or(0, |p| p.point.dim());
    let prefix = if log_coords { "log10_x" } else { "x" };
    let header: Vec<String> = (1..=dim).map(|i| format!("{prefix}{i}")).collect();
    out.push_str(&format!("# {}\n", header.join(" ")));
    for p in points {
        let cols: Vec<String> = match (&p.log10, log_coords) {
            (Some(logs), true) => logs.iter().map(|x| decimal(*x, precision)).collect(),
            _ if log_coords => p.point.coords().iter().map(|c| decimal(c.to_f64().log10(), precision)).collect(),
            _ => p.point.coords().iter().map(|c| decimal(c.to_f64(), precision)).collect(),
        };
        out.push_str(&cols.join(" "));
        out.push('\n');
    }
    out
}
