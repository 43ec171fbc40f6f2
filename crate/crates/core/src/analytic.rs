//! Closed-form evaluation of the structural invariants of H(n,k).
//!
//! Everything here is a function of `Params` alone and generic over the exact
//! integer type: use `BigInt` for unbounded parameters, or a fixed-width type
//! when speed matters and overflow should surface as [`HkError::Overflow`].

use num_rational::Ratio;
use num_traits::ToPrimitive;

use crate::classify::VertexClass;
use crate::error::{HkError, Result};
use crate::label::{check_digits, Label};
use crate::params::Params;
use crate::scalar::{geometric_tail, Ck, ExactInt, Real};

/// One row of the degree/clustering table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassStat<T: ExactInt> {
    pub class: VertexClass,
    pub count: T,
    pub degree: T,
    /// Edges among the neighbors of a vertex of this class.
    pub neighbor_edges: T,
    pub clustering: Ratio<T>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Metrics {
    pub radius: u32,
    pub diameter: u32,
    pub root_eccentricity: u32,
}

#[derive(Debug, Clone, PartialEq)]
pub struct AnalyticReport<T: ExactInt> {
    pub params: Params,
    pub order: T,
    pub size: T,
    pub radius: u32,
    pub diameter: u32,
    pub root_eccentricity: u32,
    pub avg_degree: Ratio<T>,
    pub avg_degree_asymptotic: T,
    pub clustering_coefficient: Ratio<T>,
    pub triangles: T,
    pub triples: T,
    pub transitivity: Ratio<T>,
    /// `None` for n = 2, where the exponent is undefined.
    pub gamma_theory: Option<f64>,
    pub class_stats: Vec<ClassStat<T>>,
}

fn nk(p: &Params) -> (u64, u32) {
    (u64::from(p.n()), p.k())
}

pub fn order<T: ExactInt>(p: &Params) -> Result<T> {
    let (n, k) = nk(p);
    Ck::<T>::of(n).pow(k).get()
}

/// Number of edges, summed level by level so every term stays integral.
pub fn size_closed<T: ExactInt>(p: &Params) -> Result<T> {
    let (n, k) = nk(p);
    let cn = Ck::<T>::of(n);
    let cm = Ck::<T>::of(n - 1);
    let seed = cn.pow(k - 1) * cn.choose2();
    let stars: Ck<T> = (2..=k).map(|i| cn.pow(k - i) * cm.pow(i)).sum();
    let cliques: Ck<T> = (0..k.saturating_sub(1)).map(|i| cn.pow(i)).sum();
    let size = (seed + stars + cliques * cm.choose2()).get()?;
    debug_assert_eq!(size_polynomial::<T>(p).ok(), Some(size.clone()));
    Ok(size)
}

/// (3/2)n^{k+1} − (n−1)^{k+1} − 2n^k − n/2 + 1, scaled by 2 to stay integral.
pub fn size_polynomial<T: ExactInt>(p: &Params) -> Result<T> {
    let (n, k) = nk(p);
    let cn = Ck::<T>::of(n);
    let twice = Ck::of(3) * cn.pow(k + 1) - Ck::of(2) * Ck::of(n - 1).pow(k + 1) - Ck::of(4) * cn.pow(k)
        - cn.clone()
        + Ck::of(2);
    (twice / Ck::of(2)).get()
}

/// |E_k| = n|E_{k−1}| + (n−1)^k + C(n−1, 2), from |E_1| = C(n, 2).
pub fn size_recurrence<T: ExactInt>(p: &Params) -> Result<T> {
    let (n, k) = nk(p);
    let cn = Ck::<T>::of(n);
    let cm = Ck::<T>::of(n - 1);
    let mut e = cn.choose2();
    for level in 2..=k {
        e = cn.clone() * e + cm.pow(level) + cm.choose2();
    }
    e.get()
}

pub fn metric_closed(p: &Params) -> Metrics {
    let k = p.k();
    Metrics {
        radius: k,
        diameter: 2 * k - 1,
        root_eccentricity: k,
    }
}

pub fn class_stat<T: ExactInt>(class: VertexClass, p: &Params) -> Result<ClassStat<T>> {
    let (n, k) = nk(p);
    let cn = Ck::<T>::of(n);
    let cm = Ck::<T>::of(n - 1);
    let c2 = Ck::<T>::of(n - 2);
    let (count, degree, neighbor_edges) = match class {
        VertexClass::GlobalRoot => {
            // every neighbor sees n−2 others inside the neighborhood
            let d = geometric_tail::<T>(n - 1, k);
            (Ck::one(), d.clone(), c2 * d / Ck::of(2))
        }
        VertexClass::SubRoot(i) => {
            check_level(i, k)?;
            let inner = geometric_tail::<T>(n - 1, k - i);
            let degree = inner.clone() + c2.clone();
            let eps = c2.clone() * inner / Ck::of(2) + c2.choose2();
            (cm * cn.pow(i - 1), degree, eps)
        }
        VertexClass::GlobalPeripheral => {
            let d = Ck::of(n + u64::from(k) - 2);
            let eps = cm.choose2() + c2 * Ck::of(u64::from(k) - 1);
            (cm.pow(k), d, eps)
        }
        VertexClass::SubPeripheral(i) => {
            check_level(i, k)?;
            let d = Ck::of(n + u64::from(k - i) - 2);
            let eps = cm.choose2() + c2 * Ck::of(u64::from(k - i) - 1);
            (cm.pow(k - i) * cn.pow(i - 1), d, eps)
        }
    };
    let degree = degree.get()?;
    let neighbor_edges = neighbor_edges.get()?;
    let pairs = Ck::new(degree.clone()).choose2().get()?;
    let clustering = if pairs.is_zero() {
        Ratio::from_integer(T::zero())
    } else {
        Ratio::new(neighbor_edges.clone(), pairs)
    };
    Ok(ClassStat {
        class,
        count: count.get()?,
        degree,
        neighbor_edges,
        clustering,
    })
}

fn check_level(i: u32, k: u32) -> Result<()> {
    if i == 0 || i >= k {
        return Err(HkError::PrefixLength { len: i as usize, max: k - 1 });
    }
    Ok(())
}

/// Clustering as tabulated in closed form. Defined for n ≥ 3 only; for n = 2
/// both numerator and denominator vanish.
pub fn clustering_table_form<T: ExactInt>(class: VertexClass, p: &Params) -> Result<Option<Ratio<T>>> {
    let (n, k) = nk(p);
    if n < 3 {
        return Ok(None);
    }
    let cm = Ck::<T>::of(n - 1);
    let sq = Ck::<T>::of(n - 2).pow(2);
    let signed = |v: i64| Ck::<T>::new(T::from_i64(v).unwrap());
    let (num, den) = match class {
        VertexClass::GlobalRoot => (sq, cm.pow(k + 1) - Ck::of(2 * n) + Ck::of(3)),
        VertexClass::SubRoot(i) => {
            check_level(i, k)?;
            (sq, cm.pow(k - i + 1) + cm.pow(2) - Ck::of(3 * n) + Ck::of(4))
        }
        VertexClass::GlobalPeripheral | VertexClass::SubPeripheral(_) => {
            let i = i64::from(class.level());
            if let VertexClass::SubPeripheral(l) = class {
                check_level(l, k)?;
            }
            let (n, k) = (n as i64, i64::from(k));
            let num = cm.pow(2) + signed(2 * k - 2 * i - 3) * cm.clone() + signed(2 + 2 * i - 2 * k);
            (num, signed(n + k - i - 2) * signed(n + k - i - 3))
        }
    };
    Ok(Some(Ratio::new(num.get()?, den.get()?)))
}

/// Degree/clustering rows for every class, in [`VertexClass::all`] order.
pub fn class_census<T: ExactInt>(p: &Params) -> Result<Vec<ClassStat<T>>> {
    VertexClass::all(p.k()).into_iter().map(|c| class_stat(c, p)).collect()
}

/// Exact mean degree 2|E|/n^k and its large-k asymptote n + 2k − 2.
pub fn average_degree<T: ExactInt>(p: &Params) -> Result<(Ratio<T>, T)> {
    let twice = (Ck::of(2) * Ck::new(size_closed::<T>(p)?)).get()?;
    let asymptotic = Ck::of(u64::from(p.n()) + 2 * u64::from(p.k()) - 2).get()?;
    Ok((Ratio::new(twice, order::<T>(p)?), asymptotic))
}

/// Mean of the per-vertex clustering over all n^k vertices.
pub fn clustering_coefficient_closed<T: ExactInt>(p: &Params) -> Result<Ratio<T>> {
    let mut acc = (T::zero(), T::one());
    for row in class_census::<T>(p)? {
        let term = (Ck::new(row.count) * Ck::new(row.clustering.numer().clone())).get()?;
        acc = add_fraction(acc, (term, row.clustering.denom().clone()))?;
    }
    let den = (Ck::new(acc.1) * Ck::new(order::<T>(p)?)).get()?;
    Ok(Ratio::new(acc.0, den))
}

fn add_fraction<T: ExactInt>(a: (T, T), b: (T, T)) -> Result<(T, T)> {
    let g = a.1.gcd(&b.1);
    let bd = b.1.clone() / g.clone();
    let num = (Ck::new(a.0) * Ck::new(bd.clone()) + Ck::new(b.0) * Ck::new(a.1.clone() / g)).get()?;
    let den = (Ck::new(a.1) * Ck::new(bd)).get()?;
    let r = num.gcd(&den);
    if r.is_zero() {
        return Ok((num, den));
    }
    Ok((num / r.clone(), den / r))
}

/// ½(n−2)(1 − n/3 − (n−1)^{k+1} + ⅔n^k(2n−3)), scaled by 6 to stay integral.
pub fn triangles_closed<T: ExactInt>(p: &Params) -> Result<T> {
    let (n, k) = nk(p);
    let cn = Ck::<T>::of(n);
    let inner = Ck::of(3) + Ck::of(2) * cn.pow(k) * Ck::of(2 * n - 3)
        - cn.clone()
        - Ck::of(3) * Ck::of(n - 1).pow(k + 1);
    (Ck::of(n - 2) * inner / Ck::of(6)).get()
}

/// T_k = nT_{k−1} + (n−1)^{k−1}C(n−1, 2) + C(n−1, 3), from T_1 = C(n, 3).
pub fn triangles_recurrence<T: ExactInt>(p: &Params) -> Result<T> {
    let (n, k) = nk(p);
    let cn = Ck::<T>::of(n);
    let cm = Ck::<T>::of(n - 1);
    let mut t = cn.choose3();
    for level in 2..=k {
        t = cn.clone() * t + cm.pow(level - 1) * cm.choose2() + cm.choose3();
    }
    t.get()
}

/// Σ count · C(degree, 2) over the class census.
pub fn triples_closed<T: ExactInt>(p: &Params) -> Result<T> {
    class_census::<T>(p)?
        .into_iter()
        .map(|row| Ck::new(row.count) * Ck::new(row.degree).choose2())
        .sum::<Ck<T>>()
        .get()
}

/// 3T/τ; zero when there are no triples (H(2,1)).
pub fn transitivity_closed<T: ExactInt>(p: &Params) -> Result<Ratio<T>> {
    let tri = (Ck::of(3) * Ck::new(triangles_closed::<T>(p)?)).get()?;
    let triples = triples_closed::<T>(p)?;
    if triples.is_zero() {
        return Ok(Ratio::from_integer(T::zero()));
    }
    Ok(Ratio::new(tri, triples))
}

/// 1 + ln n / ln(n−1).
pub fn gamma_theory<F: Real>(p: &Params) -> Result<F> {
    if p.n() < 3 {
        return Err(HkError::GammaUndefined);
    }
    let n = F::from_u32(p.n()).unwrap();
    Ok(F::one() + n.ln() / (n - F::one()).ln())
}

/// Fraction of vertices whose degree is at least `z`.
pub fn cumulative_degree<T: ExactInt>(p: &Params, z: &T) -> Result<Ratio<T>> {
    let hits = class_census::<T>(p)?
        .into_iter()
        .filter(|row| row.degree >= *z)
        .map(|row| Ck::new(row.count))
        .sum::<Ck<T>>()
        .get()?;
    Ok(Ratio::new(hits, order::<T>(p)?))
}

/// 2(k − i) − 1 for labels sharing a prefix of length i; 0 when x = y.
pub fn distance_upper_bound(x: &Label, y: &Label, p: &Params) -> Result<u32> {
    check_digits(x.digits(), p)?;
    check_digits(y.digits(), p)?;
    let i = x.common_prefix_len(y) as u32;
    Ok((2 * (p.k() - i)).saturating_sub(1))
}

pub fn analytic_report<T: ExactInt>(p: &Params) -> Result<AnalyticReport<T>> {
    let metrics = metric_closed(p);
    let (avg_degree, avg_degree_asymptotic) = average_degree::<T>(p)?;
    Ok(AnalyticReport {
        params: *p,
        order: order(p)?,
        size: size_closed(p)?,
        radius: metrics.radius,
        diameter: metrics.diameter,
        root_eccentricity: metrics.root_eccentricity,
        avg_degree,
        avg_degree_asymptotic,
        clustering_coefficient: clustering_coefficient_closed(p)?,
        triangles: triangles_closed(p)?,
        triples: triples_closed(p)?,
        transitivity: transitivity_closed(p)?,
        gamma_theory: gamma_theory::<f64>(p).ok(),
        class_stats: class_census(p)?,
    })
}

/// Lossy conversion for reporting.
pub fn ratio_to_f64<T: ExactInt>(r: &Ratio<T>) -> f64 {
    match (r.numer().to_f64(), r.denom().to_f64()) {
        (Some(a), Some(b)) if a.is_finite() && b.is_finite() => a / b,
        _ => big_ratio_to_f64(r),
    }
}

fn big_ratio_to_f64<T: ExactInt>(r: &Ratio<T>) -> f64 {
    use num_bigint::BigInt;
    let num: BigInt = r.numer().to_string().parse().unwrap();
    let den: BigInt = r.denom().to_string().parse().unwrap();
    Ratio::new(num, den).to_f64().unwrap_or(f64::NAN)
}
