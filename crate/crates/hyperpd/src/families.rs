//! Ready-made hypergraphs for the recognized families.
//!
//! These builders exist so tests, sweeps and the command line can summon a
//! family member from a couple of integers instead of spelling out edges.
//! Vertices are numbered 1..μ along the string or around the cycle; edge
//! labels run a, b, c, … along the skeleton, and the extra edge (when
//! present) is always labelled `F`. The μ=3 instances reproduce the
//! canonical small examples: `to_ideal(open_string(3))` is (ab, bc, cd) and
//! `to_ideal(open_cycle(3))` is (ac, ab, bc).
//!
//! The one degenerate case is [`open_string`] with μ = 1: both end markers
//! land on the same vertex, so the singleton edge carries multiplicity two
//! and the realization is a single quadratic generator — which is what
//! makes the regularity formula ⌈μ/3⌉ hold uniformly down to μ = 1.

use thiserror::Error;

use crate::formulas::LemmaCase;
use crate::hypergraph::Hypergraph;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FamilyError {
    #[error("family needs at least {min} vertices, got {mu}")]
    MuTooSmall { mu: usize, min: usize },
    #[error("edge positions must be strictly increasing within 1..={mu}, got {positions:?}")]
    BadPositions { mu: usize, positions: Vec<usize> },
    #[error("the extra edge needs at least 2 vertices")]
    TooFewEdgeVertices,
}

/// Spreadsheet-style label: 0 → "a", 25 → "z", 26 → "aa", …
fn letter(mut n: usize) -> String {
    let mut out = Vec::new();
    loop {
        out.push(b'a' + (n % 26) as u8);
        n /= 26;
        if n == 0 {
            break;
        }
        n -= 1;
    }
    out.reverse();
    String::from_utf8(out).expect("ascii letters")
}

fn skeleton_pairs(mu: usize) -> Vec<(String, Vec<usize>)> {
    (1..mu).map(|i| (letter(i), vec![i, i + 1])).collect()
}

/// The open string on μ ≥ 1 vertices: a path of pair edges with a closed
/// vertex at each end.
pub fn open_string(mu: usize) -> Result<Hypergraph, FamilyError> {
    if mu == 0 {
        return Err(FamilyError::MuTooSmall { mu, min: 1 });
    }
    if mu == 1 {
        return Ok(Hypergraph::with_multiplicities(1, [("a", vec![1], 2)])
            .expect("one covered vertex"));
    }
    let mut edges = vec![("a".to_string(), vec![1])];
    edges.extend(skeleton_pairs(mu));
    edges.push((letter(mu), vec![mu]));
    Ok(Hypergraph::new(mu, edges).expect("consecutive pairs cover 1..=mu"))
}

/// The open cycle on μ ≥ 3 vertices: a cycle of pair edges, every vertex
/// open.
pub fn open_cycle(mu: usize) -> Result<Hypergraph, FamilyError> {
    if mu < 3 {
        return Err(FamilyError::MuTooSmall { mu, min: 3 });
    }
    let mut edges: Vec<(String, Vec<usize>)> = (1..mu)
        .map(|i| (letter(i - 1), vec![i, i + 1]))
        .collect();
    edges.push((letter(mu - 1), vec![mu, 1]));
    Ok(Hypergraph::new(mu, edges).expect("cycle pairs cover 1..=mu"))
}

fn check_positions(mu: usize, positions: &[usize]) -> Result<(), FamilyError> {
    if positions.len() < 2 {
        return Err(FamilyError::TooFewEdgeVertices);
    }
    let increasing = positions.windows(2).all(|w| w[0] < w[1]);
    if !increasing || positions[0] < 1 || *positions.last().unwrap() > mu {
        return Err(FamilyError::BadPositions {
            mu,
            positions: positions.to_vec(),
        });
    }
    Ok(())
}

/// Open string on μ vertices plus one extra edge `F` on the given
/// positions (k ≥ 2). An extra edge identical to a skeleton pair simply
/// doubles that pair's multiplicity.
pub fn string_with_edge(mu: usize, positions: &[usize]) -> Result<Hypergraph, FamilyError> {
    check_positions(mu, positions)?;
    let mut edges = vec![("a".to_string(), vec![1])];
    edges.extend(skeleton_pairs(mu));
    edges.push((letter(mu), vec![mu]));
    edges.push(("F".to_string(), positions.to_vec()));
    Ok(Hypergraph::new(mu.max(2), edges).expect("string edges cover 1..=mu"))
}

/// Open cycle on μ vertices plus one extra edge `F` on the given positions
/// (k ≥ 2).
pub fn cycle_with_edge(mu: usize, positions: &[usize]) -> Result<Hypergraph, FamilyError> {
    if mu < 3 {
        return Err(FamilyError::MuTooSmall { mu, min: 3 });
    }
    check_positions(mu, positions)?;
    let mut edges: Vec<(String, Vec<usize>)> = (1..mu)
        .map(|i| (letter(i - 1), vec![i, i + 1]))
        .collect();
    edges.push((letter(mu - 1), vec![mu, 1]));
    edges.push(("F".to_string(), positions.to_vec()));
    Ok(Hypergraph::new(mu, edges).expect("cycle edges cover 1..=mu"))
}

/// Edge positions determined by a gap vector: position i_j follows n_j
/// skipped vertices, so i_j = j + n_1 + … + n_j.
pub fn positions_from_gaps(gaps: &[usize]) -> Vec<usize> {
    let k = gaps.len() - 1;
    let mut prefix = 0;
    (1..=k)
        .map(|j| {
            prefix += gaps[j - 1];
            j + prefix
        })
        .collect()
}

/// Build the exact hypergraph a special-case formula speaks about. For the
/// "reduced" variant this includes removing the edge's second vertex.
pub fn lemma_instance(case: &LemmaCase) -> Hypergraph {
    let gaps = case.gaps();
    let mu = case.mu();
    let positions = positions_from_gaps(&gaps);
    let mut edges: Vec<(String, Vec<usize>)> = skeleton_pairs(mu);
    match case {
        LemmaCase::EdgeAtOpenEnd { .. } => {
            // closed left end, open right end swallowed by F (which is a
            // plain singleton when k = 1)
            edges.push(("a".to_string(), vec![1]));
            edges.push(("F".to_string(), positions));
            Hypergraph::new(mu, edges).expect("string edges cover 1..=mu")
        }
        LemmaCase::EdgeSpansEnds { .. } => {
            // both ends open, both inside F
            edges.push(("F".to_string(), positions));
            Hypergraph::new(mu, edges).expect("string edges cover 1..=mu")
        }
        LemmaCase::EdgeSpansEndsReduced { .. } => {
            edges.push(("F".to_string(), positions.clone()));
            let full = Hypergraph::new(mu, edges).expect("string edges cover 1..=mu");
            full.remove_vertex(positions[1])
                .expect("removing one vertex of a string keeps the rest")
        }
        LemmaCase::OuterResiduesOne { .. } => {
            // the ordinary closed-ends configuration
            edges.push(("a".to_string(), vec![1]));
            edges.push((letter(mu), vec![mu]));
            edges.push(("F".to_string(), positions));
            Hypergraph::new(mu, edges).expect("string edges cover 1..=mu")
        }
    }
}
