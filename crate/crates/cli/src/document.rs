//! The structured-text (TOML) form of results.
//!
//! Documents go through `toml::Value`, whose tables are ordered maps, so
//! keys always come out sorted.

use std::time::Duration;

use serde::{Deserialize, Serialize};

use betti_cone_core::cone::{EnumerationStats, IndexPair, Witness};
use betti_cone_core::{BettiDiagram, ConeReport, FieldSpec, Graph, Method};

use crate::error::AppError;
use crate::formats::{inline_edge_list, parse_edge_list, parse_recipe};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
struct ReportDoc {
    n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    h: Option<usize>,
    field: String,
    method: String,
    dimension: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    upper_bound: Option<usize>,
    certified: bool,
    status: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    stats: Option<StatsDoc>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    witnesses: Vec<WitnessDoc>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
struct StatsDoc {
    graphs_visited: u64,
    graphs_matched: u64,
    distinct_diagrams: u64,
    sandwich_violations: u64,
    stopped_early: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    elapsed_ns: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
struct WitnessDoc {
    i: usize,
    d: usize,
    recipe: String,
    graph: String,
    diagram: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
struct DiagramDoc {
    graph: String,
    n: usize,
    field: String,
    diagram: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    regularity: Option<usize>,
}

fn sorted<T: Serialize>(doc: &T) -> Result<String, AppError> {
    let value = toml::Value::try_from(doc).map_err(|e| AppError::Format(e.to_string()))?;
    toml::to_string(&value).map_err(|e| AppError::Format(e.to_string()))
}

pub fn parse_field(s: &str) -> Result<FieldSpec, AppError> {
    let s = s.trim();
    if s.eq_ignore_ascii_case("q") {
        return Ok(FieldSpec::Rationals);
    }
    let digits = s.strip_prefix('F').or_else(|| s.strip_prefix('f')).unwrap_or(s);
    let p: u32 = digits
        .parse()
        .map_err(|_| AppError::InvalidArgument(format!("field must be q or a prime, got {s:?}")))?;
    Ok(FieldSpec::prime(p)?)
}

fn method_from(s: &str) -> Result<Method, AppError> {
    [Method::Formula, Method::Witnesses, Method::Enumeration, Method::HkSubspace]
        .into_iter()
        .find(|m| m.as_str() == s)
        .ok_or_else(|| AppError::Format(format!("unknown method {s:?}")))
}

fn status(r: &ConeReport) -> &'static str {
    match r.upper_bound {
        Some(_) if r.certified => "certified",
        Some(_) => "partial",
        None => "closed_form",
    }
}

pub fn report_to_string(r: &ConeReport) -> Result<String, AppError> {
    let doc = ReportDoc {
        n: r.n,
        h: r.h,
        field: r.field.to_string(),
        method: r.method.as_str().to_string(),
        dimension: r.dimension,
        upper_bound: r.upper_bound,
        certified: r.certified,
        status: status(r).to_string(),
        stats: r.stats.as_ref().map(|s| StatsDoc {
            graphs_visited: s.graphs_visited,
            graphs_matched: s.graphs_matched,
            distinct_diagrams: s.distinct_diagrams,
            sandwich_violations: s.sandwich_violations,
            stopped_early: s.stopped_early,
            elapsed_ns: s.elapsed.map(|d| d.as_nanos() as u64),
        }),
        witnesses: r
            .witnesses
            .iter()
            .map(|w| WitnessDoc {
                i: w.position.i,
                d: w.position.d,
                recipe: w.recipe.to_string(),
                graph: inline_edge_list(&w.graph),
                diagram: w.diagram.canonical_string(),
            })
            .collect(),
    };
    sorted(&doc)
}

pub fn report_from_str(text: &str) -> Result<ConeReport, AppError> {
    let doc: ReportDoc = toml::from_str(text).map_err(|e| AppError::Format(e.to_string()))?;
    let witnesses = doc
        .witnesses
        .into_iter()
        .map(|w| -> Result<Witness, AppError> {
            let graph: Graph = parse_edge_list(&w.graph)?;
            Ok(Witness {
                position: IndexPair::new(w.i, w.d),
                recipe: parse_recipe(&w.recipe)?,
                diagram: BettiDiagram::parse_canonical(&w.diagram, graph.n())?,
                graph,
            })
        })
        .collect::<Result<_, _>>()?;
    Ok(ConeReport {
        n: doc.n,
        h: doc.h,
        field: parse_field(&doc.field)?,
        method: method_from(&doc.method)?,
        dimension: doc.dimension,
        upper_bound: doc.upper_bound,
        certified: doc.certified,
        witnesses,
        stats: doc.stats.map(|s| EnumerationStats {
            graphs_visited: s.graphs_visited,
            graphs_matched: s.graphs_matched,
            distinct_diagrams: s.distinct_diagrams,
            sandwich_violations: s.sandwich_violations,
            stopped_early: s.stopped_early,
            elapsed: s.elapsed_ns.map(Duration::from_nanos),
        }),
    })
}

pub fn diagram_to_string(g: &Graph, b: &BettiDiagram, field: FieldSpec) -> Result<String, AppError> {
    let doc = DiagramDoc {
        graph: inline_edge_list(g),
        n: g.n(),
        field: field.to_string(),
        diagram: b.canonical_string(),
        regularity: betti_cone_core::betti::regularity(b).ok(),
    };
    sorted(&doc)
}
