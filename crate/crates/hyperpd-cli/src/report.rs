//! Report types and printers shared by the subcommands.

use hyperpd::classify::Shape;
use hyperpd::hypergraph::Hypergraph;
use serde::Serialize;

/// One-line human description of a shape.
pub fn shape_summary(shape: &Shape) -> String {
    match shape {
        Shape::OpenString { mu } => format!("open string (μ={mu})"),
        Shape::OpenCycle { mu } => format!("open cycle (μ={mu})"),
        Shape::StringWithEdge(cfg) => format!(
            "open string with one extra edge (μ={}, positions {:?}, gaps {:?})",
            cfg.mu, cfg.positions, cfg.gaps
        ),
        Shape::CycleWithEdge(cfg) => format!(
            "open cycle with one extra edge (μ={}, positions {:?}, gaps {:?})",
            cfg.mu, cfg.positions, cfg.gaps
        ),
        Shape::DisjointOpenStrings { lengths } => {
            format!("disjoint open strings (lengths {lengths:?})")
        }
        Shape::Other => "no recognized shape".to_string(),
    }
}

pub fn print_shape(h: &Hypergraph, shape: &Shape, json: bool) -> anyhow::Result<()> {
    if json {
        let object = serde_json::json!({
            "mu": h.mu(),
            "edges": h.num_edges(),
            "separated": h.is_separated(),
            "shape": shape,
        });
        println!("{object}");
    } else {
        println!("μ {}", h.mu());
        println!("edges {}", h.num_edges());
        println!("separated {}", h.is_separated());
        println!("shape {}", shape_summary(shape));
    }
    Ok(())
}

/// Labels present in `original` but gone from `reduced`.
pub fn removed_labels(original: &Hypergraph, reduced: &Hypergraph) -> Vec<String> {
    let kept: Vec<&str> = reduced.edges().map(|(label, _, _)| label).collect();
    original
        .edges()
        .map(|(label, _, _)| label)
        .filter(|label| !kept.contains(label))
        .map(str::to_string)
        .collect()
}

/// A sweep instance whose formula value disagreed with the oracle.
#[derive(Debug, Clone, Serialize)]
pub struct Mismatch {
    pub instance: String,
    pub formula: String,
    pub oracle: String,
}

/// Outcome of one `verify` run.
#[derive(Debug, Serialize)]
pub struct VerifyOutcome {
    pub family: String,
    pub instances: usize,
    pub mismatches: Vec<Mismatch>,
}

impl VerifyOutcome {
    pub fn print(&self, json: bool) -> anyhow::Result<()> {
        if json {
            println!("{}", serde_json::to_string(self)?);
            return Ok(());
        }
        println!("family {}", self.family);
        println!("instances {}", self.instances);
        println!("mismatches {}", self.mismatches.len());
        for m in &self.mismatches {
            println!("mismatch {}: formula {} oracle {}", m.instance, m.formula, m.oracle);
        }
        Ok(())
    }
}

/// One cycle-with-extra-edges instance whose oracle pd left the plain cycle
/// value.
#[derive(Debug, Serialize)]
pub struct ConjectureHit {
    pub mu: usize,
    pub extra_edges: Vec<Vec<usize>>,
    pub formula_pd: u32,
    pub oracle_pd: u32,
    pub hypergraph: serde_json::Value,
}

/// Outcome of a `conjecture-search` run: evidence, not a verdict.
#[derive(Debug, Serialize)]
pub struct ConjectureReport {
    pub max_mu: usize,
    pub max_edges: usize,
    pub instances: usize,
    pub matching: usize,
    pub mismatching: Vec<ConjectureHit>,
}

impl ConjectureReport {
    pub fn print(&self, json: bool) -> anyhow::Result<()> {
        if json {
            println!("{}", serde_json::to_string(self)?);
            return Ok(());
        }
        println!("cycles up to μ={} with up to {} extra edges", self.max_mu, self.max_edges);
        println!("instances {}", self.instances);
        println!("matching {}", self.matching);
        println!("mismatching {}", self.mismatching.len());
        for hit in &self.mismatching {
            println!(
                "mismatch μ={} extra {:?}: formula {} oracle {}",
                hit.mu, hit.extra_edges, hit.formula_pd, hit.oracle_pd
            );
            println!("  {}", hit.hypergraph);
        }
        Ok(())
    }
}
