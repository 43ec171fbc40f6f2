use std::collections::BTreeMap;
use std::io::Write;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::ser::Serializer;
use serde::Serialize;
use serde_json::Number;

use crate::analytic::{ratio_to_f64, AnalyticReport};
use crate::classify::VertexClass;
use crate::empirical::{match_metrics, EmpiricalReport};
use crate::error::{HkError, Result};

#[derive(Serialize)]
struct Doc {
    params: ParamsDoc,
    order: Number,
    size: Number,
    radius: u32,
    diameter: u32,
    root_eccentricity: u32,
    avg_degree: AvgDoc,
    clustering: Exact,
    triangles: Number,
    triples: Number,
    transitivity: Exact,
    gamma_theory: Option<f64>,
    class_stats: Vec<ClassDoc>,
    #[serde(skip_serializing_if = "Option::is_none")]
    empirical: Option<EmpiricalDoc>,
    #[serde(rename = "match", skip_serializing_if = "Option::is_none")]
    matches: Option<Ordered>,
}

#[derive(Serialize)]
struct ParamsDoc {
    n: u32,
    k: u32,
}

#[derive(Serialize)]
struct AvgDoc {
    exact: String,
    float: f64,
    asymptotic: Number,
}

/// Exact rational as "p/q" plus its floating point value.
#[derive(Serialize)]
struct Exact {
    exact: String,
    float: f64,
}

#[derive(Serialize)]
struct ClassDoc {
    #[serde(flatten)]
    class: VertexClass,
    count: Number,
    degree: Number,
    clustering: Exact,
}

#[derive(Serialize)]
struct EmpiricalDoc {
    order: u64,
    size: u64,
    degree_histogram: BTreeMap<u64, u64>,
    radius: u32,
    diameter: u32,
    root_eccentricity: u32,
    clustering: Exact,
    triangles: u64,
    triples: u64,
    transitivity: Exact,
}

/// Map that serializes in insertion order.
struct Ordered(Vec<(&'static str, bool)>);

impl Serialize for Ordered {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_map(self.0.iter().map(|(k, v)| (*k, *v)))
    }
}

fn num(v: &BigInt) -> Number {
    Number::from_str(&v.to_string()).expect("decimal integer is a JSON number")
}

fn exact(r: &BigRational) -> Exact {
    Exact {
        exact: r.to_string(),
        float: ratio_to_f64(r),
    }
}

fn build(analytic: &AnalyticReport<BigInt>, empirical: Option<&EmpiricalReport>) -> Result<Doc> {
    let matches = empirical.map(|e| match_metrics(analytic, e)).transpose()?;
    Ok(Doc {
        params: ParamsDoc {
            n: analytic.params.n(),
            k: analytic.params.k(),
        },
        order: num(&analytic.order),
        size: num(&analytic.size),
        radius: analytic.radius,
        diameter: analytic.diameter,
        root_eccentricity: analytic.root_eccentricity,
        avg_degree: AvgDoc {
            exact: analytic.avg_degree.to_string(),
            float: ratio_to_f64(&analytic.avg_degree),
            asymptotic: num(&analytic.avg_degree_asymptotic),
        },
        clustering: exact(&analytic.clustering_coefficient),
        triangles: num(&analytic.triangles),
        triples: num(&analytic.triples),
        transitivity: exact(&analytic.transitivity),
        gamma_theory: analytic.gamma_theory,
        class_stats: analytic
            .class_stats
            .iter()
            .map(|r| ClassDoc {
                class: r.class,
                count: num(&r.count),
                degree: num(&r.degree),
                clustering: exact(&r.clustering),
            })
            .collect(),
        empirical: empirical.map(|e| EmpiricalDoc {
            order: e.order,
            size: e.size,
            degree_histogram: e.degree_histogram.clone(),
            radius: e.radius,
            diameter: e.diameter,
            root_eccentricity: e.root_eccentricity,
            clustering: exact(&e.clustering_coefficient),
            triangles: e.triangles,
            triples: e.triples,
            transitivity: exact(&e.transitivity),
        }),
        matches: matches.map(Ordered),
    })
}

/// Pretty-printed JSON document with a fixed key order.
pub fn write_report<W: Write>(
    analytic: &AnalyticReport<BigInt>,
    empirical: Option<&EmpiricalReport>,
    mut sink: W,
) -> Result<()> {
    let doc = build(analytic, empirical)?;
    serde_json::to_writer_pretty(&mut sink, &doc).map_err(|e| HkError::Io(e.to_string()))?;
    writeln!(sink)?;
    sink.flush()?;
    Ok(())
}

pub fn report_json(analytic: &AnalyticReport<BigInt>, empirical: Option<&EmpiricalReport>) -> Result<String> {
    let mut buf = Vec::new();
    write_report(analytic, empirical, &mut buf)?;
    Ok(String::from_utf8(buf).expect("serde_json emits UTF-8"))
}
