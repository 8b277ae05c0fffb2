//! Input loading: a path (or `-` for standard input) holding either ideal
//! text or hypergraph JSON, told apart by the leading character.

use std::fs;
use std::io::Read;

use anyhow::Context;
use hyperpd::hypergraph::Hypergraph;
use hyperpd::ideal::MonomialIdeal;

pub enum Input {
    Ideal(MonomialIdeal),
    Hypergraph(Hypergraph),
}

impl Input {
    pub fn load(source: &str) -> anyhow::Result<Input> {
        let text = if source == "-" {
            let mut buf = String::new();
            std::io::stdin()
                .read_to_string(&mut buf)
                .context("reading standard input")?;
            buf
        } else {
            fs::read_to_string(source).with_context(|| format!("reading `{source}`"))?
        };
        if text.trim_start().starts_with('{') {
            let h = Hypergraph::from_json(&text).context("parsing hypergraph JSON")?;
            return Ok(Input::Hypergraph(h));
        }
        let ideal = MonomialIdeal::parse(&text).context("parsing ideal text")?;
        let ideal = if ideal.is_minimal() {
            ideal
        } else {
            eprintln!("note: generating set is not minimal; redundant generators dropped");
            ideal.minimalize_stable()
        };
        Ok(Input::Ideal(ideal))
    }

    /// The dual hypergraph of the input (identity when the input already
    /// was one).
    pub fn hypergraph(&self) -> anyhow::Result<Hypergraph> {
        match self {
            Input::Ideal(ideal) => {
                Hypergraph::from_ideal(ideal).context("building the dual hypergraph")
            }
            Input::Hypergraph(h) => Ok(h.clone()),
        }
    }

    /// The ideal of the input (the realization when the input was a
    /// hypergraph; separatedness is not required for Betti computations).
    pub fn ideal(&self) -> anyhow::Result<MonomialIdeal> {
        match self {
            Input::Ideal(ideal) => Ok(ideal.clone()),
            Input::Hypergraph(h) => Ok(h.to_ideal_unchecked()),
        }
    }

    pub fn describe(&self) -> String {
        match self {
            Input::Ideal(ideal) => format!(
                "ideal with {} generators over {} variables",
                ideal.num_gens(),
                ideal.vars().len()
            ),
            Input::Hypergraph(h) => {
                format!("hypergraph with μ={} and {} edges", h.mu(), h.num_edges())
            }
        }
    }
}
