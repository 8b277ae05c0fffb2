//! Shape recognition and the automatic projective-dimension dispatcher.
//!
//! [`classify_shape`] inspects a hypergraph (after union-edge removal) and
//! reports which formula-backed family it belongs to — open string, open
//! cycle, either of those plus one extra edge, or a disjoint union of open
//! strings — extracting the numeric data (gaps between the extra edge's
//! vertices, their residues and quotients mod 3) the formulas consume.
//! Anything else is [`Shape::Other`].
//!
//! [`pd_auto`] strings the pieces together: remove union edges, split into
//! connected components, use a closed form where one applies, and fall back
//! to the exact Betti-number computation (within a size budget) otherwise.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;
use thiserror::Error;

use crate::formulas::{
    pd_cycle_with_edge, pd_disjoint_open_strings, pd_open_cycle, pd_open_string,
    pd_string_with_edge,
};
use crate::hypergraph::{Hypergraph, HypergraphError};
use crate::oracle::{self, OracleError, OracleOptions};

/// Default cap on the number of variables a component's ideal may use
/// before the oracle fallback refuses to run.
pub const DEFAULT_ORACLE_BUDGET: usize = 16;

#[derive(Debug, Error)]
pub enum ClassifyError {
    #[error(
        "no formula applies and the exact computation needs {needed} variables \
         (budget {budget})"
    )]
    BudgetExceeded { needed: usize, budget: usize },
    #[error(transparent)]
    Hypergraph(#[from] HypergraphError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
}

/// Numeric data of an open string with one extra edge: vertex positions of
/// the edge along the string (1-based), the gaps n_1..n_{k+1} before,
/// between and after them, and the end-closedness pattern.
///
/// Orientation convention: the string is read from the end with the
/// smaller original vertex number, so renumbering a string in reverse
/// reverses the gap vector.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StringEdgeConfig {
    pub mu: usize,
    /// i_1 < … < i_k: positions of the extra edge's vertices.
    pub positions: Vec<usize>,
    /// n_1..n_{k+1}: vertices before i_1, between consecutive positions,
    /// and after i_k.
    pub gaps: Vec<usize>,
    /// r_i = n_i mod 3.
    pub residues: Vec<usize>,
    /// l_i = (n_i − r_i) / 3.
    pub quotients: Vec<usize>,
    pub left_end_closed: bool,
    pub right_end_closed: bool,
}

impl StringEdgeConfig {
    pub fn new(
        mu: usize,
        positions: Vec<usize>,
        left_end_closed: bool,
        right_end_closed: bool,
    ) -> Self {
        assert!(
            positions.windows(2).all(|w| w[0] < w[1])
                && positions.first().is_some_and(|&p| p >= 1)
                && positions.last().is_some_and(|&p| p <= mu),
            "positions must be strictly increasing within 1..=mu"
        );
        let k = positions.len();
        let mut gaps = Vec::with_capacity(k + 1);
        gaps.push(positions[0] - 1);
        for w in positions.windows(2) {
            gaps.push(w[1] - w[0] - 1);
        }
        gaps.push(mu - positions[k - 1]);
        let residues: Vec<usize> = gaps.iter().map(|n| n % 3).collect();
        let quotients: Vec<usize> = gaps.iter().map(|n| n / 3).collect();
        StringEdgeConfig {
            mu,
            positions,
            gaps,
            residues,
            quotients,
            left_end_closed,
            right_end_closed,
        }
    }

    pub fn k(&self) -> usize {
        self.positions.len()
    }
}

/// Numeric data of an open cycle with one extra edge. Gaps use wraparound
/// indexing: n_1 counts the vertices between the last and first edge
/// positions going around, so μ = k + Σ n_i.
///
/// Orientation convention: the cycle is traversed starting from the vertex
/// with the smallest original number, towards its smaller-numbered
/// neighbor.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CycleEdgeConfig {
    pub mu: usize,
    /// i_1 < … < i_k: positions along the traversal.
    pub positions: Vec<usize>,
    /// n_1..n_k, with n_1 the wraparound gap before i_1.
    pub gaps: Vec<usize>,
    pub residues: Vec<usize>,
    pub quotients: Vec<usize>,
}

impl CycleEdgeConfig {
    pub fn new(mu: usize, positions: Vec<usize>) -> Self {
        assert!(
            positions.windows(2).all(|w| w[0] < w[1])
                && positions.first().is_some_and(|&p| p >= 1)
                && positions.last().is_some_and(|&p| p <= mu),
            "positions must be strictly increasing within 1..=mu"
        );
        let k = positions.len();
        let mut gaps = Vec::with_capacity(k);
        gaps.push(positions[0] + mu - positions[k - 1] - 1);
        for w in positions.windows(2) {
            gaps.push(w[1] - w[0] - 1);
        }
        let residues: Vec<usize> = gaps.iter().map(|n| n % 3).collect();
        let quotients: Vec<usize> = gaps.iter().map(|n| n / 3).collect();
        CycleEdgeConfig {
            mu,
            positions,
            gaps,
            residues,
            quotients,
        }
    }

    pub fn k(&self) -> usize {
        self.positions.len()
    }
}

/// Which formula-backed family a hypergraph belongs to, if any.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Shape {
    OpenString { mu: usize },
    OpenCycle { mu: usize },
    StringWithEdge(StringEdgeConfig),
    CycleWithEdge(CycleEdgeConfig),
    /// Lengths in component order (smallest original vertex first).
    DisjointOpenStrings { lengths: Vec<usize> },
    Other,
}

/// Recognize the family of a hypergraph, up to renumbering of its vertices.
///
/// Meant to run after [`Hypergraph::remove_union_edges`]; a union edge in
/// the input usually lands the hypergraph in [`Shape::Other`].
/// Multiplicities never influence the shape (they never influence the
/// projective dimension either).
pub fn classify_shape(h: &Hypergraph) -> Shape {
    let comps = h.connected_components();
    if comps.len() > 1 {
        let mut lengths = Vec::with_capacity(comps.len());
        for comp in &comps {
            match classify_connected(&comp.hypergraph) {
                Shape::OpenString { mu } => lengths.push(mu),
                _ => return Shape::Other,
            }
        }
        return Shape::DisjointOpenStrings { lengths };
    }
    classify_connected(h)
}

fn classify_connected(h: &Hypergraph) -> Shape {
    let mu = h.mu();
    let mut singles: BTreeSet<usize> = BTreeSet::new();
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    let mut higher: Vec<BTreeSet<usize>> = Vec::new();
    for (_, vertices, _) in h.edges() {
        match vertices.len() {
            1 => {
                singles.insert(*vertices.first().unwrap());
            }
            2 => {
                let mut it = vertices.iter().copied();
                pairs.push((it.next().unwrap(), it.next().unwrap()));
            }
            _ => higher.push(vertices.clone()),
        }
    }
    if higher.len() > 1 {
        return Shape::Other;
    }

    if let Some(f) = higher.pop() {
        if let Some(order) = hamiltonian_path(&pairs, mu) {
            return string_with_edge_shape(&order, &f, &singles);
        }
        if let Some(order) = hamiltonian_cycle(&pairs, mu) {
            if singles.is_empty() {
                return Shape::CycleWithEdge(cycle_edge_config(&order, &f));
            }
        }
        return Shape::Other;
    }

    // 1-dimensional throughout: plain string, plain cycle, or one of those
    // with a single chord pair playing the extra-edge role.
    if let Some(order) = hamiltonian_path(&pairs, mu) {
        let interior_open = order
            .iter()
            .skip(1)
            .take(mu.saturating_sub(2))
            .all(|v| !singles.contains(v));
        let ends_closed =
            singles.contains(&order[0]) && singles.contains(order.last().unwrap());
        if interior_open && ends_closed {
            return Shape::OpenString { mu };
        }
        return Shape::Other;
    }
    if hamiltonian_cycle(&pairs, mu).is_some() && singles.is_empty() {
        return Shape::OpenCycle { mu };
        // (a cycle with closed vertices might still be a string whose chord
        // joins the two ends — the chord search below covers that)
    }
    for idx in 0..pairs.len() {
        let mut rest = pairs.clone();
        let chord = rest.remove(idx);
        let f = BTreeSet::from([chord.0, chord.1]);
        if let Some(order) = hamiltonian_path(&rest, mu) {
            let shape = string_with_edge_shape(&order, &f, &singles);
            if shape != Shape::Other {
                return shape;
            }
        }
        if let Some(order) = hamiltonian_cycle(&rest, mu) {
            if singles.is_empty() {
                return Shape::CycleWithEdge(cycle_edge_config(&order, &f));
            }
        }
    }
    Shape::Other
}

/// If `pairs` form a simple path through all of 1..=μ, return the vertices
/// in path order, starting from the end with the smaller vertex number.
fn hamiltonian_path(pairs: &[(usize, usize)], mu: usize) -> Option<Vec<usize>> {
    if mu == 1 {
        return pairs.is_empty().then(|| vec![1]);
    }
    if pairs.len() != mu - 1 {
        return None;
    }
    let adjacency = adjacency(pairs, mu);
    let mut ends = (1..=mu).filter(|&v| adjacency[v].len() == 1);
    let start = ends.next()?;
    let other = ends.next()?;
    if ends.next().is_some() || adjacency.iter().any(|n| n.len() > 2) {
        return None;
    }
    let order = walk(&adjacency, start, mu)?;
    (*order.last().unwrap() == other).then_some(order)
}

/// If `pairs` form a single cycle through all of 1..=μ, return a traversal
/// starting at vertex 1, towards its smaller neighbor.
fn hamiltonian_cycle(pairs: &[(usize, usize)], mu: usize) -> Option<Vec<usize>> {
    if mu < 3 || pairs.len() != mu {
        return None;
    }
    let adjacency = adjacency(pairs, mu);
    if (1..=mu).any(|v| adjacency[v].len() != 2) {
        return None;
    }
    let order = walk(&adjacency, 1, mu)?;
    // a walk of length μ ending adjacent to the start closes the cycle
    adjacency[*order.last().unwrap()]
        .contains(&1)
        .then_some(order)
}

fn adjacency(pairs: &[(usize, usize)], mu: usize) -> Vec<BTreeSet<usize>> {
    let mut adjacency = vec![BTreeSet::new(); mu + 1];
    for &(a, b) in pairs {
        adjacency[a].insert(b);
        adjacency[b].insert(a);
    }
    adjacency
}

/// Greedy walk taking the unique unvisited neighbor each step (smallest
/// first at the start vertex); succeeds iff it visits every vertex.
fn walk(adjacency: &[BTreeSet<usize>], start: usize, mu: usize) -> Option<Vec<usize>> {
    let mut order = vec![start];
    let mut prev = 0usize;
    while order.len() < mu {
        let here = *order.last().unwrap();
        let mut next = adjacency[here].iter().copied().filter(|&u| u != prev);
        let step = next.next()?;
        if order.contains(&step) {
            return None;
        }
        prev = here;
        order.push(step);
    }
    Some(order)
}

fn string_with_edge_shape(
    order: &[usize],
    f: &BTreeSet<usize>,
    singles: &BTreeSet<usize>,
) -> Shape {
    let mu = order.len();
    // interior vertices must be open
    if order
        .iter()
        .skip(1)
        .take(mu.saturating_sub(2))
        .any(|v| singles.contains(v))
    {
        return Shape::Other;
    }
    // each end must be closed, or open but absorbed into the extra edge
    let (first, last) = (order[0], *order.last().unwrap());
    let left_end_closed = singles.contains(&first);
    let right_end_closed = singles.contains(&last);
    if (!left_end_closed && !f.contains(&first)) || (!right_end_closed && !f.contains(&last)) {
        return Shape::Other;
    }
    let coordinate: BTreeMap<usize, usize> = order
        .iter()
        .enumerate()
        .map(|(idx, &v)| (v, idx + 1))
        .collect();
    let positions: Vec<usize> = {
        let mut p: Vec<usize> = f.iter().map(|v| coordinate[v]).collect();
        p.sort_unstable();
        p
    };
    Shape::StringWithEdge(StringEdgeConfig::new(
        mu,
        positions,
        left_end_closed,
        right_end_closed,
    ))
}

fn cycle_edge_config(order: &[usize], f: &BTreeSet<usize>) -> CycleEdgeConfig {
    let coordinate: BTreeMap<usize, usize> = order
        .iter()
        .enumerate()
        .map(|(idx, &v)| (v, idx + 1))
        .collect();
    let mut positions: Vec<usize> = f.iter().map(|v| coordinate[v]).collect();
    positions.sort_unstable();
    CycleEdgeConfig::new(order.len(), positions)
}

/// Outcome of [`pd_auto`]: the projective dimension and how it was obtained
/// (`formula:<family>`, `oracle`, or `sum(… + …)` across components).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PdOutcome {
    pub pd: u32,
    pub method: String,
}

/// Compute the projective dimension of a hypergraph's ideal by the cheapest
/// correct route: remove union edges, split into connected components, add
/// up per-component values (closed formula where one applies, exact
/// computation otherwise). `budget` caps the number of variables a
/// component may use before the exact fallback refuses (default
/// [`DEFAULT_ORACLE_BUDGET`]).
pub fn pd_auto(h: &Hypergraph, budget: Option<usize>) -> Result<PdOutcome, ClassifyError> {
    let budget = budget.unwrap_or(DEFAULT_ORACLE_BUDGET);
    let reduced = h.remove_union_edges();
    let comps = reduced.connected_components();
    let mut pd = 0u32;
    let mut methods = Vec::with_capacity(comps.len());
    for comp in &comps {
        let (value, method) = component_pd(&comp.hypergraph, budget)?;
        pd += value;
        methods.push(method);
    }
    let method = if methods.len() == 1 {
        methods.pop().unwrap()
    } else {
        format!("sum({})", methods.join(" + "))
    };
    Ok(PdOutcome { pd, method })
}

fn component_pd(h: &Hypergraph, budget: usize) -> Result<(u32, String), ClassifyError> {
    match classify_shape(h) {
        Shape::OpenString { mu } => Ok((
            pd_open_string(mu).expect("component has vertices"),
            "formula:open-string".into(),
        )),
        Shape::OpenCycle { mu } => Ok((
            pd_open_cycle(mu).expect("cycles have at least 3 vertices"),
            "formula:open-cycle".into(),
        )),
        Shape::DisjointOpenStrings { lengths } => Ok((
            pd_disjoint_open_strings(&lengths),
            "formula:open-string".into(),
        )),
        Shape::StringWithEdge(cfg) => match pd_string_with_edge(&cfg) {
            // a non-jump edge contributes nothing: the value is the plain
            // string formula's
            Ok(res) if res.case == "jump" => Ok((res.pd, "formula:string-with-edge".into())),
            Ok(res) => Ok((res.pd, "formula:open-string".into())),
            Err(_) => oracle_pd(h, budget),
        },
        Shape::CycleWithEdge(cfg) => match pd_cycle_with_edge(&cfg) {
            Ok(res) => Ok((res.pd, "formula:open-cycle".into())),
            Err(_) => oracle_pd(h, budget),
        },
        Shape::Other => oracle_pd(h, budget),
    }
}

fn oracle_pd(h: &Hypergraph, budget: usize) -> Result<(u32, String), ClassifyError> {
    let needed: usize = h.edges().map(|(_, _, m)| m).sum();
    if needed > budget {
        return Err(ClassifyError::BudgetExceeded { needed, budget });
    }
    let ideal = h.to_ideal_unchecked();
    let options = OracleOptions {
        variable_limit: needed.max(1),
        ..OracleOptions::default()
    };
    let (pd, _) = oracle::pd_reg_with(&ideal, &options)?;
    Ok((pd, "oracle".into()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal::MonomialIdeal;

    fn dual(text: &str) -> Hypergraph {
        Hypergraph::from_ideal(&MonomialIdeal::parse(text).unwrap()).unwrap()
    }

    fn hg(mu: usize, edges: &[(&str, &[usize])]) -> Hypergraph {
        Hypergraph::new(mu, edges.iter().map(|(l, vs)| (*l, vs.to_vec()))).unwrap()
    }

    /// Open string on 1..=mu plus the given extra edge.
    fn string_plus(mu: usize, extra: &[usize]) -> Hypergraph {
        let mut edges: Vec<(String, Vec<usize>)> =
            vec![("s".into(), vec![1]), ("t".into(), vec![mu])];
        for i in 1..mu {
            edges.push((format!("e{i}"), vec![i, i + 1]));
        }
        edges.push(("F".into(), extra.to_vec()));
        Hypergraph::new(mu, edges).unwrap()
    }

    /// Open cycle on 1..=mu plus the given extra edge.
    fn cycle_plus(mu: usize, extra: &[usize]) -> Hypergraph {
        let mut edges: Vec<(String, Vec<usize>)> = (1..mu)
            .map(|i| (format!("e{i}"), vec![i, i + 1]))
            .collect();
        edges.push(("w".into(), vec![mu, 1]));
        edges.push(("F".into(), extra.to_vec()));
        Hypergraph::new(mu, edges).unwrap()
    }

    #[test]
    fn recognizes_plain_strings_and_cycles() {
        assert_eq!(classify_shape(&dual("ab, bc, cd")), Shape::OpenString { mu: 3 });
        assert_eq!(classify_shape(&dual("ac, ab, bc")), Shape::OpenCycle { mu: 3 });
        assert_eq!(classify_shape(&hg(1, &[("a", &[1])])), Shape::OpenString { mu: 1 });
        // multiplicities are invisible to the shape
        let doubled = Hypergraph::with_multiplicities(
            3,
            [
                ("a", vec![1], 2),
                ("b", vec![1, 2], 1),
                ("c", vec![2, 3], 5),
                ("d", vec![3], 1),
            ],
        )
        .unwrap();
        assert_eq!(classify_shape(&doubled), Shape::OpenString { mu: 3 });
    }

    #[test]
    fn recognition_survives_renumbering() {
        // same string, generators listed in scrambled order
        let scrambled = dual("cd, ab, bc");
        assert_eq!(classify_shape(&scrambled), Shape::OpenString { mu: 3 });
        let cycle = dual("de, ab, bc, cd, ae");
        assert_eq!(classify_shape(&cycle), Shape::OpenCycle { mu: 5 });
    }

    #[test]
    fn recognizes_string_with_edge() {
        let h = string_plus(9, &[3, 5, 8]);
        match classify_shape(&h) {
            Shape::StringWithEdge(cfg) => {
                assert_eq!(cfg.mu, 9);
                assert_eq!(cfg.k(), 3);
                assert_eq!(cfg.positions, vec![3, 5, 8]);
                assert_eq!(cfg.gaps, vec![2, 1, 2, 1]);
                assert_eq!(cfg.residues, vec![2, 1, 2, 1]);
                assert_eq!(cfg.quotients, vec![0, 0, 0, 0]);
                assert!(cfg.left_end_closed && cfg.right_end_closed);
            }
            other => panic!("expected string-with-edge, got {other:?}"),
        }
        // edge containing the closed right end
        let h = string_plus(11, &[2, 5, 8, 11]);
        match classify_shape(&h) {
            Shape::StringWithEdge(cfg) => {
                assert_eq!(cfg.gaps, vec![1, 2, 2, 2, 0]);
                assert!(cfg.right_end_closed);
            }
            other => panic!("expected string-with-edge, got {other:?}"),
        }
    }

    #[test]
    fn recognizes_string_with_open_ends_inside_edge() {
        // both ends open, absorbed by the edge
        let mut edges: Vec<(String, Vec<usize>)> = (1..10)
            .map(|i| (format!("e{i}"), vec![i, i + 1]))
            .collect();
        edges.push(("F".into(), vec![1, 4, 7, 10]));
        let h = Hypergraph::new(10, edges).unwrap();
        match classify_shape(&h) {
            Shape::StringWithEdge(cfg) => {
                assert_eq!(cfg.gaps, vec![0, 2, 2, 2, 0]);
                assert!(!cfg.left_end_closed && !cfg.right_end_closed);
            }
            other => panic!("expected string-with-edge, got {other:?}"),
        }
    }

    #[test]
    fn recognizes_cycle_with_edge() {
        let h = cycle_plus(10, &[3, 6, 9, 10]);
        match classify_shape(&h) {
            Shape::CycleWithEdge(cfg) => {
                assert_eq!(cfg.mu, 10);
                assert_eq!(cfg.positions, vec![3, 6, 9, 10]);
                assert_eq!(cfg.gaps, vec![2, 2, 2, 0]);
            }
            other => panic!("expected cycle-with-edge, got {other:?}"),
        }
        // chord case: k = 2 keeps the skeleton 1-dimensional
        let h = cycle_plus(4, &[1, 3]);
        match classify_shape(&h) {
            Shape::CycleWithEdge(cfg) => {
                assert_eq!(cfg.gaps, vec![1, 1]);
            }
            other => panic!("expected cycle-with-edge, got {other:?}"),
        }
    }

    #[test]
    fn recognizes_string_with_chord() {
        // path 1..5 with chord {2,4}
        let h = string_plus(5, &[2, 4]);
        match classify_shape(&h) {
            Shape::StringWithEdge(cfg) => {
                assert_eq!(cfg.positions, vec![2, 4]);
                assert_eq!(cfg.gaps, vec![1, 1, 1]);
            }
            other => panic!("expected string-with-edge, got {other:?}"),
        }
    }

    #[test]
    fn disjoint_strings_and_other() {
        let two = hg(
            5,
            &[
                ("a", &[1]),
                ("b", &[1, 2]),
                ("c", &[2]),
                ("d", &[3]),
                ("e", &[3, 4]),
                ("f", &[4, 5]),
                ("g", &[5]),
            ],
        );
        assert_eq!(
            classify_shape(&two),
            Shape::DisjointOpenStrings {
                lengths: vec![2, 3]
            }
        );
        // two higher edges → Other
        let h = hg(
            4,
            &[
                ("a", &[1]),
                ("b", &[1, 2]),
                ("c", &[2, 3]),
                ("d", &[3, 4]),
                ("e", &[4]),
                ("F", &[1, 2, 3]),
                ("G", &[2, 3, 4]),
            ],
        );
        assert_eq!(classify_shape(&h), Shape::Other);
        // a string missing one end's closure is no family member
        let h = hg(3, &[("b", &[1, 2]), ("c", &[2, 3]), ("d", &[3])]);
        assert_eq!(classify_shape(&h), Shape::Other);
    }

    #[test]
    fn all_open_triangle_is_a_cycle_not_a_chorded_string() {
        let h = dual("ab, bc, ca");
        assert_eq!(classify_shape(&h), Shape::OpenCycle { mu: 3 });
    }

    #[test]
    fn pd_auto_uses_formulas() {
        let out = pd_auto(&dual("ab, bc, cd"), None).unwrap();
        assert_eq!((out.pd, out.method.as_str()), (2, "formula:open-string"));

        let out = pd_auto(&dual("ac, ab, bc"), None).unwrap();
        assert_eq!((out.pd, out.method.as_str()), (2, "formula:open-cycle"));

        let out = pd_auto(&hg(1, &[("a", &[1])]), None).unwrap();
        assert_eq!((out.pd, out.method.as_str()), (1, "formula:open-string"));

        // jump configuration
        let out = pd_auto(&string_plus(9, &[3, 5, 8]), None).unwrap();
        assert_eq!(
            (out.pd, out.method.as_str()),
            (7, "formula:string-with-edge")
        );

        // non-jump: the edge changes nothing, so the tag names the string
        let out = pd_auto(&string_plus(9, &[3, 6, 9]), None).unwrap();
        assert_eq!((out.pd, out.method.as_str()), (6, "formula:open-string"));

        let out = pd_auto(&cycle_plus(6, &[1, 4]), None).unwrap();
        assert_eq!((out.pd, out.method.as_str()), (4, "formula:open-cycle"));
    }

    #[test]
    fn pd_auto_removes_union_edges_first() {
        // string plus an edge that is a union of string edges: reduction
        // leaves a plain string
        let h = string_plus(5, &[1, 2, 3]);
        let out = pd_auto(&h, None).unwrap();
        assert_eq!((out.pd, out.method.as_str()), (4, "formula:open-string"));
    }

    #[test]
    fn pd_auto_adds_components() {
        let two = hg(
            6,
            &[
                ("a", &[1]),
                ("b", &[1, 2]),
                ("c", &[2, 3]),
                ("d", &[3]),
                ("e", &[4]),
                ("f", &[4, 5]),
                ("g", &[5, 6]),
                ("h", &[6]),
            ],
        );
        let out = pd_auto(&two, None).unwrap();
        assert_eq!(out.pd, 2 + 2);
        assert_eq!(out.method, "sum(formula:open-string + formula:open-string)");
    }

    #[test]
    fn pd_auto_falls_back_to_the_oracle() {
        // two chords: no theorem covers this
        let h = hg(
            4,
            &[
                ("a", &[1]),
                ("b", &[1, 2]),
                ("c", &[2, 3]),
                ("d", &[3, 4]),
                ("e", &[4]),
                ("F", &[2, 4]),
                ("G", &[1, 3]),
            ],
        );
        let out = pd_auto(&h, None).unwrap();
        assert_eq!(out.method, "oracle");
        // and the budget is honored
        let err = pd_auto(&h, Some(3)).unwrap_err();
        assert!(matches!(err, ClassifyError::BudgetExceeded { .. }));
    }

    #[test]
    fn pd_auto_open_ended_edge_case_goes_to_the_oracle() {
        // both string ends open inside the edge: the closed-end theorem
        // does not apply, so the exact computation decides
        let mut edges: Vec<(String, Vec<usize>)> = (1..7)
            .map(|i| (format!("e{i}"), vec![i, i + 1]))
            .collect();
        edges.push(("F".into(), vec![1, 4, 7]));
        let h = Hypergraph::new(7, edges).unwrap();
        let out = pd_auto(&h, None).unwrap();
        assert_eq!(out.method, "oracle");
    }
}
