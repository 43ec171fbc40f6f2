use std::io::Write;
use std::str::FromStr;

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::analytic::{
    clustering_coefficient_closed, gamma_theory, metric_closed, ratio_to_f64, size_closed, transitivity_closed,
};
use crate::error::{HkError, Result};
use crate::params::Params;

pub const ERROR_MARKER: &str = "error";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SweepMetric {
    Clustering,
    Transitivity,
    Size,
    Diameter,
    GammaTheory,
}

impl SweepMetric {
    pub fn name(self) -> &'static str {
        match self {
            SweepMetric::Clustering => "clustering",
            SweepMetric::Transitivity => "transitivity",
            SweepMetric::Size => "size",
            SweepMetric::Diameter => "diameter",
            SweepMetric::GammaTheory => "gamma_theory",
        }
    }

    /// Cell text for one grid point, analytic evaluation only.
    pub fn evaluate(self, p: &Params) -> Result<String> {
        Ok(match self {
            SweepMetric::Clustering => format_significant(ratio_to_f64(&clustering_coefficient_closed::<BigInt>(p)?), 12),
            SweepMetric::Transitivity => format_significant(ratio_to_f64(&transitivity_closed::<BigInt>(p)?), 12),
            SweepMetric::Size => size_closed::<BigInt>(p)?.to_string(),
            SweepMetric::Diameter => metric_closed(p).diameter.to_string(),
            SweepMetric::GammaTheory => format_significant(gamma_theory::<f64>(p)?, 12),
        })
    }
}

impl FromStr for SweepMetric {
    type Err = HkError;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "clustering" => SweepMetric::Clustering,
            "transitivity" => SweepMetric::Transitivity,
            "size" => SweepMetric::Size,
            "diameter" => SweepMetric::Diameter,
            "gamma_theory" | "gamma" => SweepMetric::GammaTheory,
            other => return Err(HkError::Sweep(format!("unknown metric {other:?}"))),
        })
    }
}

/// Inclusive grid over n (with a step) and k.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepSpec {
    pub n_range: (u32, u32, u32),
    pub k_range: (u32, u32),
    pub metric: SweepMetric,
}

impl SweepSpec {
    pub fn new(n_range: (u32, u32, u32), k_range: (u32, u32), metric: SweepMetric) -> Result<Self> {
        let (n0, n1, step) = n_range;
        let (k0, k1) = k_range;
        if step == 0 {
            return Err(HkError::Sweep("n step must be positive".into()));
        }
        if n0 > n1 || k0 > k1 {
            return Err(HkError::Sweep("empty range".into()));
        }
        Params::new(n0, k0)?;
        Ok(SweepSpec { n_range, k_range, metric })
    }

    /// Parses `A:B:S` for n and `A:B` for k.
    pub fn parse(n_range: &str, k_range: &str, metric: &str) -> Result<Self> {
        let nums = |s: &str| -> Result<Vec<u32>> {
            s.split(':')
                .map(|t| t.trim().parse::<u32>().map_err(|_| HkError::Sweep(format!("bad range {s:?}"))))
                .collect()
        };
        let n = nums(n_range)?;
        let k = nums(k_range)?;
        let n_range = match n[..] {
            [a, b, s] => (a, b, s),
            [a, b] => (a, b, 1),
            _ => return Err(HkError::Sweep(format!("expected A:B:S, got {n_range:?}"))),
        };
        let k_range = match k[..] {
            [a, b] => (a, b),
            [a] => (a, a),
            _ => return Err(HkError::Sweep(format!("expected A:B, got {k_range:?}"))),
        };
        SweepSpec::new(n_range, k_range, metric.parse()?)
    }

    /// Grid points, n outer and k inner.
    pub fn grid(&self) -> Vec<Params> {
        let (n0, n1, step) = self.n_range;
        let (k0, k1) = self.k_range;
        (n0..=n1)
            .step_by(step as usize)
            .flat_map(|n| (k0..=k1).map(move |k| Params::new(n, k).expect("validated bounds")))
            .collect()
    }
}

/// Writes `n,k,<metric>` rows in grid order; returns the number of rows.
pub fn run_sweep<W: Write>(spec: &SweepSpec, sink: W) -> Result<usize> {
    let grid = spec.grid();
    let cells: Vec<String> = grid
        .par_iter()
        .map(|p| spec.metric.evaluate(p).unwrap_or_else(|_| ERROR_MARKER.to_string()))
        .collect();
    let mut out = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(sink);
    let csv_err = |e: csv::Error| HkError::Io(e.to_string());
    out.write_record(["n", "k", spec.metric.name()]).map_err(csv_err)?;
    for (p, cell) in grid.iter().zip(&cells) {
        out.write_record([p.n().to_string(), p.k().to_string(), cell.clone()])
            .map_err(csv_err)?;
    }
    out.flush()?;
    Ok(grid.len())
}

/// Plain decimal rendering rounded to `digits` significant digits, trailing
/// zeros trimmed.
pub fn format_significant(x: f64, digits: usize) -> String {
    if !x.is_finite() {
        return x.to_string();
    }
    if x == 0.0 {
        return "0".into();
    }
    let sci = format!("{:.*e}", digits.saturating_sub(1), x);
    let (mantissa, exp) = sci.split_once('e').expect("exponent form");
    let exp: i32 = exp.parse().expect("integer exponent");
    let (sign, mantissa) = match mantissa.strip_prefix('-') {
        Some(m) => ("-", m),
        None => ("", mantissa),
    };
    let sig: String = mantissa.chars().filter(char::is_ascii_digit).collect();
    let body = if exp < 0 {
        format!("0.{}{}", "0".repeat((-exp - 1) as usize), sig)
    } else if (exp as usize) + 1 >= sig.len() {
        format!("{}{}", sig, "0".repeat(exp as usize + 1 - sig.len()))
    } else {
        let (int, frac) = sig.split_at(exp as usize + 1);
        format!("{int}.{frac}")
    };
    let body = if body.contains('.') {
        body.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        body
    };
    format!("{sign}{body}")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rows(n: &str, k: &str, metric: &str) -> Vec<Vec<String>> {
        let spec = SweepSpec::parse(n, k, metric).unwrap();
        let mut buf = Vec::new();
        run_sweep(&spec, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert!(!text.contains('\r'));
        text.lines().map(|l| l.split(',').map(str::to_string).collect()).collect()
    }

    fn column(r: &[Vec<String>]) -> Vec<f64> {
        r[1..].iter().map(|row| row[2].parse().unwrap()).collect()
    }

    #[test]
    fn clustering_grid() {
        let r = rows("4:20:2", "1:6", "clustering");
        assert_eq!(r[0], ["n", "k", "clustering"]);
        assert_eq!(r.len(), 55);
        assert!(r[1..].iter().filter(|row| row[1] == "1").all(|row| row[2] == "1"));
    }

    #[test]
    fn transitivity_decreasing_in_k() {
        let r = rows("4:4:1", "1:5", "transitivity");
        assert_eq!(r.len(), 6);
        assert!(column(&r).windows(2).all(|w| w[0] > w[1]));
    }

    #[test]
    fn clustering_increasing_in_n() {
        let r = rows("4:20:2", "3:3", "clustering");
        assert!(column(&r).windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn gamma_marker_for_n2() {
        let r = rows("2:3:1", "1:1", "gamma_theory");
        assert_eq!(r[1][2], ERROR_MARKER);
        assert_eq!(r[2][2], "2.58496250072");
    }

    #[test]
    fn exact_columns() {
        let r = rows("3:4:1", "2:3", "size");
        assert_eq!(r[1], ["3", "2", "14"]);
        assert_eq!(r[4], ["4", "3", "174"]);
        let r = rows("3:3:1", "4:4", "diameter");
        assert_eq!(r[1][2], "7");
    }

    #[test]
    fn sweep_cell_equals_point_value() {
        let p = Params::new(6, 4).unwrap();
        let r = rows("6:6:1", "4:4", "clustering");
        let point = ratio_to_f64(&clustering_coefficient_closed::<BigInt>(&p).unwrap());
        assert_eq!(r[1][2], format_significant(point, 12));
    }

    #[test]
    fn bad_specs() {
        assert!(SweepSpec::parse("4:20", "1:6", "clustering").is_ok());
        assert!(SweepSpec::parse("4-20", "1:6", "clustering").is_err());
        assert!(SweepSpec::parse("4:20:0", "1:6", "clustering").is_err());
        assert!(SweepSpec::parse("20:4:1", "1:6", "clustering").is_err());
        assert!(SweepSpec::parse("1:4:1", "1:6", "clustering").is_err());
        assert!(SweepSpec::parse("4:20:2", "1:6", "girth").is_err());
    }

    #[test]
    fn significant_digits() {
        assert_eq!(format_significant(83.0 / 135.0, 12), "0.614814814815");
        assert_eq!(format_significant(1.0, 12), "1");
        assert_eq!(format_significant(0.0, 12), "0");
        assert_eq!(format_significant(-2.5e-5, 3), "-0.000025");
        assert_eq!(format_significant(123456789.0, 4), "123500000");
        assert_eq!(format_significant(5.4375, 12), "5.4375");
    }
}
