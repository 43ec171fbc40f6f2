//! Log-log least squares over the root-class degree spectrum.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use crate::analytic::class_census;
use crate::error::{HkError, Result};
use crate::params::Params;
use crate::scalar::{float_of, Real};

/// Unweighted OLS slope of ln y against ln x.
pub fn log_log_slope<F: Real>(points: &[(F, F)]) -> Result<F> {
    let mut xs: Vec<F> = Vec::with_capacity(points.len());
    let mut ys: Vec<F> = Vec::with_capacity(points.len());
    for &(x, y) in points {
        for v in [x, y] {
            // NaN fails this comparison too
            if v.partial_cmp(&F::zero()) != Some(std::cmp::Ordering::Greater) {
                return Err(HkError::NonPositive(format!("{v:?}")));
            }
        }
        xs.push(x.ln());
        ys.push(y.ln());
    }
    let mut distinct = xs.clone();
    distinct.sort_by(|a, b| a.partial_cmp(b).unwrap());
    distinct.dedup();
    if distinct.len() < 3 {
        return Err(HkError::TooFewPoints(distinct.len()));
    }
    let len = F::from_usize(xs.len()).unwrap();
    let mx = xs.iter().fold(F::zero(), |a, &b| a + b) / len;
    let my = ys.iter().fold(F::zero(), |a, &b| a + b) / len;
    let (mut sxy, mut sxx) = (F::zero(), F::zero());
    for (&x, &y) in xs.iter().zip(&ys) {
        sxy = sxy + (x - mx) * (y - my);
        sxx = sxx + (x - mx) * (x - mx);
    }
    Ok(sxy / sxx)
}

/// Exponent of P_cum(z) ∼ z^{1−γ} fitted to (degree, cumulative fraction)
/// points: γ = 1 − slope.
pub fn fit_gamma<F: Real>(points: &[(F, F)]) -> Result<F> {
    Ok(F::one() - log_log_slope(points)?)
}

/// Slope of ln c against ln z; −1 is the hierarchical signature c ∝ 1/z.
pub fn fit_clustering_exponent<F: Real>(points: &[(F, F)]) -> Result<F> {
    log_log_slope(points)
}

/// (degree, P_cum) at every root-class degree, where P_cum counts root-class
/// vertices of that degree or higher: the root plus the sub-roots at levels
/// below i give n^i of n^k vertices.
pub fn gamma_points(p: &Params) -> Result<Vec<(BigInt, BigRational)>> {
    if p.n() < 3 {
        return Err(HkError::GammaUndefined);
    }
    let rows: Vec<_> = class_census::<BigInt>(p)?
        .into_iter()
        .filter(|r| r.class.is_root())
        .collect();
    let order = BigInt::from(p.n()).pow(p.k());
    Ok(rows
        .iter()
        .map(|r| {
            let at_least: BigInt = rows
                .iter()
                .filter(|s| s.degree >= r.degree)
                .map(|s| s.count.clone())
                .sum();
            (r.degree.clone(), BigRational::new(at_least, order.clone()))
        })
        .collect())
}

/// (degree, clustering) for each root class.
pub fn clustering_points(p: &Params) -> Result<Vec<(BigInt, BigRational)>> {
    Ok(class_census::<BigInt>(p)?
        .into_iter()
        .filter(|r| r.class.is_root())
        .map(|r| (r.degree, r.clustering))
        .collect())
}

pub fn to_float_points<F: Real>(points: &[(BigInt, BigRational)]) -> Vec<(F, F)> {
    points
        .iter()
        .map(|(z, c)| {
            let z = z.to_f64().unwrap_or(f64::INFINITY);
            let c = c.to_f64().unwrap_or(0.0);
            (float_of(z), float_of(c))
        })
        .collect()
}

/// Fitted γ for `p` from the analytic census, no graph required.
pub fn gamma_fit<F: Real>(p: &Params) -> Result<F> {
    fit_gamma(&to_float_points::<F>(&gamma_points(p)?))
}

pub fn clustering_slope<F: Real>(p: &Params) -> Result<F> {
    let points = clustering_points(p)?;
    if points.iter().any(|(_, c)| c.is_zero()) {
        return Err(HkError::NonPositive("0 clustering".into()));
    }
    fit_clustering_exponent(&to_float_points::<F>(&points))
}
