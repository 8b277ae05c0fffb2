//! Hypergraphs dual to square-free monomial ideals.
//!
//! An ideal with μ minimal generators m_1, ..., m_μ gives a hypergraph on
//! the vertex set {1, ..., μ}: each variable x contributes the edge
//! {j : x divides m_j}. Variables cutting out the same vertex set are merged
//! into one edge carrying a multiplicity. The construction runs backwards,
//! too — assign a fresh variable to every edge (repeated per multiplicity)
//! and let generator j be the product of the variables of the edges through
//! j — and the two directions are mutually inverse exactly on *separated*
//! hypergraphs, those whose vertices are pairwise distinguished by edges in
//! both directions.
//!
//! The ideal-theoretic moves used to peel hypergraphs apart — dropping a
//! generator, coloning out an edge variable or a generator, adjoining an
//! edge variable — all descend to vertex/edge surgery here, with surviving
//! vertices renumbered densely in their original order. The homological
//! invariants we care about can then be chased through [`colon_by_edge`],
//! [`remove_vertex`], [`add_edge_variable`], [`colon_vertex`], the union-edge
//! cleanup, and the degree-three branch rules.
//!
//! [`colon_by_edge`]: Hypergraph::colon_by_edge
//! [`remove_vertex`]: Hypergraph::remove_vertex
//! [`add_edge_variable`]: Hypergraph::add_edge_variable
//! [`colon_vertex`]: Hypergraph::colon_vertex

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::ideal::{IdealError, Monomial, MonomialIdeal};

#[derive(Debug, Error)]
pub enum HypergraphError {
    #[error("a hypergraph needs at least one vertex")]
    NoVertices,
    #[error("edge `{0}` has no vertices")]
    EmptyEdge(String),
    #[error("edge `{label}` contains {vertex}, outside 1..={mu}")]
    VertexOutOfRange {
        label: String,
        vertex: usize,
        mu: usize,
    },
    #[error("vertex {0} lies in no edge (its generator would be the unit monomial)")]
    UncoveredVertex(usize),
    #[error("edge `{0}` has multiplicity 0")]
    ZeroMultiplicity(String),
    #[error("multiplicity given for unknown edge `{0}`")]
    UnknownMultiplicityLabel(String),
    #[error("no edge labelled `{0}`")]
    UnknownEdge(String),
    #[error("vertex {vertex} outside 1..={mu}")]
    NoSuchVertex { vertex: usize, mu: usize },
    #[error("operation would leave a hypergraph with no vertices")]
    NoVerticesLeft,
    #[error("operation turns the generator of vertex {0} into a unit, so the ideal collapses")]
    UnitResult(usize),
    #[error("generators do not form a minimal system: {0} is redundant")]
    NotMinimal(String),
    #[error("generator {0} is the unit monomial")]
    UnitGenerator(usize),
    #[error("hypergraph is not separated: no edge distinguishes vertex {0} from vertex {1}")]
    NotSeparated(usize, usize),
    #[error("no vertex carries a reducible branch")]
    NoQualifyingBranch,
    #[error("invalid hypergraph JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Ideal(#[from] IdealError),
}

/// Whether the one-element edge {v} is present.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum VertexKind {
    Open,
    Closed,
}

#[derive(Debug, Clone)]
struct Edge {
    label: String,
    vertices: BTreeSet<usize>,
    multiplicity: usize,
}

/// A hypergraph on vertices 1..=μ with labelled, multiplicity-carrying edges.
///
/// Edges with identical vertex sets are merged on construction (their
/// multiplicities add, the first label survives). Equality ignores labels:
/// two hypergraphs are equal when they have the same μ and the same edge
/// sets with the same multiplicities.
#[derive(Debug, Clone)]
pub struct Hypergraph {
    mu: usize,
    /// Sorted by vertex set; one entry per distinct set.
    edges: Vec<Edge>,
}

impl PartialEq for Hypergraph {
    fn eq(&self, other: &Self) -> bool {
        self.mu == other.mu
            && self.edges.len() == other.edges.len()
            && self
                .edges
                .iter()
                .zip(&other.edges)
                .all(|(a, b)| a.vertices == b.vertices && a.multiplicity == b.multiplicity)
    }
}

impl Eq for Hypergraph {}

impl Hypergraph {
    /// Build from labelled edges, all with multiplicity one.
    pub fn new<L: Into<String>>(
        mu: usize,
        edges: impl IntoIterator<Item = (L, Vec<usize>)>,
    ) -> Result<Self, HypergraphError> {
        Self::with_multiplicities(mu, edges.into_iter().map(|(l, vs)| (l, vs, 1)))
    }

    /// Build from labelled edges with explicit multiplicities.
    pub fn with_multiplicities<L: Into<String>>(
        mu: usize,
        edges: impl IntoIterator<Item = (L, Vec<usize>, usize)>,
    ) -> Result<Self, HypergraphError> {
        if mu == 0 {
            return Err(HypergraphError::NoVertices);
        }
        let mut merged: BTreeMap<BTreeSet<usize>, Edge> = BTreeMap::new();
        for (label, vertices, multiplicity) in edges {
            let label = label.into();
            if vertices.is_empty() {
                return Err(HypergraphError::EmptyEdge(label));
            }
            if multiplicity == 0 {
                return Err(HypergraphError::ZeroMultiplicity(label));
            }
            if let Some(&bad) = vertices.iter().find(|&&v| v == 0 || v > mu) {
                return Err(HypergraphError::VertexOutOfRange {
                    label,
                    vertex: bad,
                    mu,
                });
            }
            let set: BTreeSet<usize> = vertices.into_iter().collect();
            merged
                .entry(set.clone())
                .and_modify(|e| e.multiplicity += multiplicity)
                .or_insert(Edge {
                    label,
                    vertices: set,
                    multiplicity,
                });
        }
        let edges: Vec<Edge> = merged.into_values().collect();
        for v in 1..=mu {
            if !edges.iter().any(|e| e.vertices.contains(&v)) {
                return Err(HypergraphError::UncoveredVertex(v));
            }
        }
        Ok(Hypergraph { mu, edges })
    }

    pub fn mu(&self) -> usize {
        self.mu
    }

    /// Number of distinct edge sets (multiplicities not counted).
    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    /// Distinct edges in canonical order: `(label, vertex set, multiplicity)`.
    pub fn edges(&self) -> impl Iterator<Item = (&str, &BTreeSet<usize>, usize)> {
        self.edges
            .iter()
            .map(|e| (e.label.as_str(), &e.vertices, e.multiplicity))
    }

    pub fn edge_vertices(&self, label: &str) -> Option<&BTreeSet<usize>> {
        self.edges
            .iter()
            .find(|e| e.label == label)
            .map(|e| &e.vertices)
    }

    /// Largest edge cardinality; the hypergraph is "1-dimensional" when this
    /// is at most 2.
    pub fn max_edge_size(&self) -> usize {
        self.edges.iter().map(|e| e.vertices.len()).max().unwrap_or(0)
    }

    pub fn vertex_kind(&self, v: usize) -> VertexKind {
        if self.is_closed(v) {
            VertexKind::Closed
        } else {
            VertexKind::Open
        }
    }

    pub fn is_closed(&self, v: usize) -> bool {
        self.edges
            .iter()
            .any(|e| e.vertices.len() == 1 && e.vertices.contains(&v))
    }

    /// Number of distinct edges through `v`.
    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|e| e.vertices.contains(&v)).count()
    }

    /// Vertices sharing an edge with `v` (not counting `v`).
    pub fn neighbors(&self, v: usize) -> BTreeSet<usize> {
        let mut out = BTreeSet::new();
        for e in self.edges.iter().filter(|e| e.vertices.contains(&v)) {
            out.extend(e.vertices.iter().copied().filter(|&u| u != v));
        }
        out
    }

    fn edge_index(&self, label: &str) -> Result<usize, HypergraphError> {
        self.edges
            .iter()
            .position(|e| e.label == label)
            .ok_or_else(|| HypergraphError::UnknownEdge(label.to_string()))
    }

    fn check_vertex(&self, v: usize) -> Result<(), HypergraphError> {
        if v == 0 || v > self.mu {
            return Err(HypergraphError::NoSuchVertex {
                vertex: v,
                mu: self.mu,
            });
        }
        Ok(())
    }

    /// Dual hypergraph of a minimal square-free ideal: vertex j is the j-th
    /// generator *in the ideal's given order*, and each variable contributes
    /// the edge of generators it divides.
    pub fn from_ideal(ideal: &MonomialIdeal) -> Result<Self, HypergraphError> {
        for (j, g) in ideal.gens().iter().enumerate() {
            if g.is_unit() {
                return Err(HypergraphError::UnitGenerator(j + 1));
            }
        }
        if !ideal.is_minimal() {
            let gens = ideal.gens();
            let culprit = gens
                .iter()
                .enumerate()
                .find(|(i, g)| {
                    gens.iter()
                        .enumerate()
                        .any(|(j, h)| *i != j && h.divides(g) && (!g.divides(h) || j < *i))
                })
                .map(|(_, g)| g.to_string())
                .unwrap_or_default();
            return Err(HypergraphError::NotMinimal(culprit));
        }
        let mu = ideal.num_gens();
        let edges = ideal.vars().iter().filter_map(|x| {
            let set: Vec<usize> = ideal
                .gens()
                .iter()
                .enumerate()
                .filter(|(_, g)| g.contains(x))
                .map(|(j, _)| j + 1)
                .collect();
            (!set.is_empty()).then(|| (x.clone(), set))
        });
        Hypergraph::new(mu, edges)
    }

    /// The ideal realization: one fresh variable per edge (repeated per
    /// multiplicity), generator j = product of the variables of the edges
    /// through j. Errors unless the hypergraph is separated, which is
    /// exactly the condition for the result to be minimally generated.
    pub fn to_ideal(&self) -> Result<MonomialIdeal, HypergraphError> {
        if let Some((a, b)) = self.separation_failure() {
            return Err(HypergraphError::NotSeparated(a, b));
        }
        Ok(self.to_ideal_unchecked())
    }

    /// [`to_ideal`](Self::to_ideal) without the separatedness check; the
    /// result generates the right ideal but may be a redundant system.
    pub fn to_ideal_unchecked(&self) -> MonomialIdeal {
        let mut used: HashSet<String> = HashSet::new();
        let mut vars: Vec<String> = Vec::new();
        // variable names per edge, copies listed per multiplicity
        let mut names: Vec<Vec<String>> = Vec::new();
        for e in &self.edges {
            let mut copies = Vec::new();
            for c in 1..=e.multiplicity {
                let mut candidate = if e.multiplicity == 1 {
                    e.label.clone()
                } else {
                    format!("{}_{}", e.label, c)
                };
                while !used.insert(candidate.clone()) {
                    candidate.push('_');
                }
                vars.push(candidate.clone());
                copies.push(candidate);
            }
            names.push(copies);
        }
        let gens: Vec<Monomial> = (1..=self.mu)
            .map(|j| {
                Monomial::from_names(
                    self.edges
                        .iter()
                        .zip(&names)
                        .filter(|(e, _)| e.vertices.contains(&j))
                        .flat_map(|(_, copies)| copies.iter().cloned()),
                )
            })
            .collect();
        MonomialIdeal::new(vars, gens).expect("edge cover guarantees a valid ideal")
    }

    /// First vertex pair not distinguished in both directions, if any.
    fn separation_failure(&self) -> Option<(usize, usize)> {
        for a in 1..=self.mu {
            for b in a + 1..=self.mu {
                let a_not_b = self
                    .edges
                    .iter()
                    .any(|e| e.vertices.contains(&a) && !e.vertices.contains(&b));
                let b_not_a = self
                    .edges
                    .iter()
                    .any(|e| e.vertices.contains(&b) && !e.vertices.contains(&a));
                if !(a_not_b && b_not_a) {
                    return Some((a, b));
                }
            }
        }
        None
    }

    /// True iff every vertex pair is distinguished by edges in both
    /// directions — equivalently, the ideal realization is minimal.
    pub fn is_separated(&self) -> bool {
        self.separation_failure().is_none()
    }

    /// Delete edges that are unions of other edges, repeatedly, until none
    /// is. Such deletions never change the projective dimension of the
    /// realization. Multiplicities play no role: an edge set goes or stays
    /// as a whole.
    pub fn remove_union_edges(&self) -> Hypergraph {
        let mut edges = self.edges.clone();
        loop {
            let redundant = (0..edges.len()).find(|&i| {
                let mut union: BTreeSet<usize> = BTreeSet::new();
                for (j, other) in edges.iter().enumerate() {
                    if j != i && other.vertices.is_subset(&edges[i].vertices) {
                        union.extend(other.vertices.iter().copied());
                    }
                }
                union == edges[i].vertices
            });
            match redundant {
                Some(i) => {
                    edges.remove(i);
                }
                None => break,
            }
        }
        Hypergraph {
            mu: self.mu,
            edges,
        }
    }

    /// Core cleanup after edge surgery: drop vertices whose generator is now
    /// divisible by another vertex's generator, restrict edges to the
    /// survivors, drop emptied edges, merge collided edge sets, and renumber
    /// densely in the original vertex order.
    ///
    /// Divisibility of the generators reads straight off the edge structure:
    /// m_a divides m_b iff every (distinct) edge through a also passes
    /// through b.
    fn reduce_in_order(mu: usize, edges: Vec<Edge>) -> Result<Hypergraph, HypergraphError> {
        let edge_sets: Vec<BTreeSet<usize>> = (1..=mu)
            .map(|v| {
                edges
                    .iter()
                    .enumerate()
                    .filter(|(_, e)| e.vertices.contains(&v))
                    .map(|(i, _)| i)
                    .collect()
            })
            .collect();
        if let Some(v) = edge_sets.iter().position(|s| s.is_empty()) {
            return Err(HypergraphError::UnitResult(v + 1));
        }
        let survives = |v: usize| {
            !(0..mu).any(|u| {
                u != v
                    && edge_sets[u].is_subset(&edge_sets[v])
                    && (edge_sets[u] != edge_sets[v] || u < v)
            })
        };
        let survivors: Vec<usize> = (0..mu).filter(|&v| survives(v)).collect();
        if survivors.is_empty() {
            return Err(HypergraphError::NoVerticesLeft);
        }
        let renumber: BTreeMap<usize, usize> = survivors
            .iter()
            .enumerate()
            .map(|(new, &old)| (old + 1, new + 1))
            .collect();
        Hypergraph::with_multiplicities(
            survivors.len(),
            edges.into_iter().filter_map(|e| {
                let kept: Vec<usize> = e
                    .vertices
                    .iter()
                    .filter_map(|v| renumber.get(v).copied())
                    .collect();
                (!kept.is_empty()).then_some((e.label, kept, e.multiplicity))
            }),
        )
    }

    /// Hypergraph of `I : x_F` for the variable of one copy of edge `F`:
    /// the copy disappears (multiplicity drops by one, the edge vanishes at
    /// multiplicity one) and newly redundant vertices are cleaned up.
    pub fn colon_by_edge(&self, label: &str) -> Result<Hypergraph, HypergraphError> {
        let idx = self.edge_index(label)?;
        let mut edges = self.edges.clone();
        if edges[idx].multiplicity > 1 {
            edges[idx].multiplicity -= 1;
        } else {
            edges.remove(idx);
        }
        Self::reduce_in_order(self.mu, edges)
    }

    /// Hypergraph of `(I, x_F)`: every generator through `F` becomes
    /// redundant, so the vertices of `F` disappear, and the new generator
    /// `x_F` arrives as an isolated closed vertex (numbered last).
    pub fn add_edge_variable(&self, label: &str) -> Result<Hypergraph, HypergraphError> {
        let idx = self.edge_index(label)?;
        let f = self.edges[idx].vertices.clone();
        let survivors: Vec<usize> = (1..=self.mu).filter(|v| !f.contains(v)).collect();
        let renumber: BTreeMap<usize, usize> = survivors
            .iter()
            .enumerate()
            .map(|(new, &old)| (old, new + 1))
            .collect();
        let new_mu = survivors.len() + 1;
        let mut edges: Vec<Edge> = self
            .edges
            .iter()
            .filter_map(|e| {
                let kept: BTreeSet<usize> = e
                    .vertices
                    .iter()
                    .filter_map(|v| renumber.get(v).copied())
                    .collect();
                (!kept.is_empty()).then(|| Edge {
                    label: e.label.clone(),
                    vertices: kept,
                    multiplicity: e.multiplicity,
                })
            })
            .collect();
        edges.push(Edge {
            label: self.edges[idx].label.clone(),
            vertices: BTreeSet::from([new_mu]),
            multiplicity: 1,
        });
        Self::reduce_in_order(new_mu, edges)
    }

    /// Hypergraph of the ideal with generator m_v dropped: the vertex
    /// disappears from every edge, emptied edges vanish, survivors are
    /// renumbered in order.
    pub fn remove_vertex(&self, v: usize) -> Result<Hypergraph, HypergraphError> {
        self.check_vertex(v)?;
        if self.mu == 1 {
            return Err(HypergraphError::NoVerticesLeft);
        }
        let renumber = |u: usize| if u > v { u - 1 } else { u };
        let edges: Vec<Edge> = self
            .edges
            .iter()
            .filter_map(|e| {
                let kept: BTreeSet<usize> = e
                    .vertices
                    .iter()
                    .filter(|&&u| u != v)
                    .map(|&u| renumber(u))
                    .collect();
                (!kept.is_empty()).then(|| Edge {
                    label: e.label.clone(),
                    vertices: kept,
                    multiplicity: e.multiplicity,
                })
            })
            .collect();
        Self::reduce_in_order(self.mu - 1, edges)
    }

    /// Hypergraph of `(I_v : m_v)` — drop the generator of `v`, then colon
    /// by it. Computed through the ideal layer: quotient every other
    /// generator by m_v, discard the non-minimal ones (keeping order), and
    /// dualize back.
    pub fn colon_vertex(&self, v: usize) -> Result<Hypergraph, HypergraphError> {
        self.check_vertex(v)?;
        if self.mu == 1 {
            return Err(HypergraphError::NoVerticesLeft);
        }
        let ideal = self.to_ideal_unchecked();
        let m_v = &ideal.gens()[v - 1];
        let quotients: Vec<Monomial> = ideal
            .gens()
            .iter()
            .enumerate()
            .filter(|(j, _)| j + 1 != v)
            .map(|(_, g)| g.quotient_by(m_v))
            .collect();
        if let Some(j) = quotients.iter().position(Monomial::is_unit) {
            let original = if j + 1 < v { j + 1 } else { j + 2 };
            return Err(HypergraphError::UnitResult(original));
        }
        let colon = MonomialIdeal::new(ideal.vars().to_vec(), quotients)
            .expect("quotients stay over the same variables")
            .minimalize_stable();
        Hypergraph::from_ideal(&colon)
    }

    /// Vertex sets of the connected components (sorted internally and by
    /// smallest member), optionally ignoring one vertex.
    fn component_vertex_sets(&self, skip: Option<usize>) -> Vec<Vec<usize>> {
        let mut seen: Vec<bool> = vec![false; self.mu + 1];
        if let Some(s) = skip {
            seen[s] = true;
        }
        let mut components = Vec::new();
        for start in 1..=self.mu {
            if seen[start] {
                continue;
            }
            let mut stack = vec![start];
            let mut comp = Vec::new();
            seen[start] = true;
            while let Some(v) = stack.pop() {
                comp.push(v);
                for e in self.edges.iter().filter(|e| e.vertices.contains(&v)) {
                    for &u in &e.vertices {
                        if !seen[u] && skip != Some(u) {
                            seen[u] = true;
                            stack.push(u);
                        }
                    }
                }
            }
            comp.sort_unstable();
            components.push(comp);
        }
        components
    }

    /// Split into connected components. Each component is renumbered
    /// densely (original order preserved); `vertices[new - 1]` recovers the
    /// original vertex number.
    pub fn connected_components(&self) -> Vec<Component> {
        self.component_vertex_sets(None)
            .into_iter()
            .map(|comp| {
                let renumber: BTreeMap<usize, usize> = comp
                    .iter()
                    .enumerate()
                    .map(|(new, &old)| (old, new + 1))
                    .collect();
                let edges = self.edges.iter().filter_map(|e| {
                    let kept: Vec<usize> = e
                        .vertices
                        .iter()
                        .filter_map(|v| renumber.get(v).copied())
                        .collect();
                    (!kept.is_empty()).then(|| (e.label.clone(), kept, e.multiplicity))
                });
                let hypergraph = Hypergraph::with_multiplicities(comp.len(), edges)
                    .expect("components inherit edge cover");
                Component {
                    hypergraph,
                    vertices: comp,
                }
            })
            .collect()
    }

    /// Find a branch at a junction vertex and apply the matching reduction.
    ///
    /// A junction is a vertex `w` lying on at least three edges of size ≥ 2.
    /// A branch is a connected component of the structural deletion of `w`
    /// that forms a pendant open string: a path v_1 – … – v_n whose only
    /// tie to the rest of the hypergraph is the single plain edge {w, v_1},
    /// with v_1..v_{n-1} open, v_n closed, and nothing but 1-dimensional
    /// edges touching it.
    ///
    /// With n ≡ 1 (mod 3) the branch is removed by coloning out {w, v_1};
    /// with n ≡ 2 (mod 3) by dropping the generator of `w`. Both keep the
    /// projective dimension. n ≡ 0 (mod 3) admits no rule: the hypergraph
    /// comes back unchanged with `rule = None`. No junction with a branch at
    /// all is an error.
    pub fn branch_reduce(&self) -> Result<BranchReduction, HypergraphError> {
        let mut fallback: Option<(usize, Vec<usize>)> = None;
        for w in 1..=self.mu {
            let links = self
                .edges
                .iter()
                .filter(|e| e.vertices.len() >= 2 && e.vertices.contains(&w))
                .count();
            if links < 3 {
                continue;
            }
            for comp in self.component_vertex_sets(Some(w)) {
                let Some(branch) = self.qualify_branch(w, &comp) else {
                    continue;
                };
                let n = branch.len();
                match n % 3 {
                    1 => {
                        let connector = self
                            .edges
                            .iter()
                            .find(|e| e.vertices == BTreeSet::from([w, branch[0]]))
                            .expect("qualified branch has its connector");
                        let label = connector.label.clone();
                        return Ok(BranchReduction {
                            hypergraph: self.colon_by_edge(&label)?,
                            rule: Some(BranchRule::ColonEdge),
                            junction: w,
                            branch,
                        });
                    }
                    2 => {
                        return Ok(BranchReduction {
                            hypergraph: self.remove_vertex(w)?,
                            rule: Some(BranchRule::RemoveVertex),
                            junction: w,
                            branch,
                        });
                    }
                    _ => {
                        if fallback.is_none() {
                            fallback = Some((w, branch));
                        }
                    }
                }
            }
        }
        if let Some((junction, branch)) = fallback {
            return Ok(BranchReduction {
                hypergraph: self.clone(),
                rule: None,
                junction,
                branch,
            });
        }
        Err(HypergraphError::NoQualifyingBranch)
    }

    /// Check one component of the structural deletion of `w` against the
    /// branch requirements; return its vertices ordered from the attachment
    /// point outwards if it qualifies.
    fn qualify_branch(&self, w: usize, comp: &[usize]) -> Option<Vec<usize>> {
        let in_comp: BTreeSet<usize> = comp.iter().copied().collect();
        let mut connectors = Vec::new();
        for e in &self.edges {
            if e.vertices.iter().all(|v| !in_comp.contains(v)) {
                continue;
            }
            // Edges meeting the branch must be plain: singletons or pairs
            // inside it, or the unique simple edge {w, v_1} tying it on.
            if e.vertices.len() > 2 {
                return None;
            }
            if e.vertices.contains(&w) {
                if e.vertices.len() != 2 || e.multiplicity != 1 {
                    return None;
                }
                connectors.push(*e.vertices.iter().find(|&&v| v != w).unwrap());
            } else if !e.vertices.iter().all(|v| in_comp.contains(v)) {
                return None;
            }
        }
        if connectors.len() != 1 {
            return None;
        }
        let v1 = connectors[0];

        // The branch itself must be a path starting at the attachment point.
        let pairs: Vec<(usize, usize)> = self
            .edges
            .iter()
            .filter(|e| e.vertices.len() == 2 && e.vertices.iter().all(|v| in_comp.contains(v)))
            .map(|e| {
                let mut it = e.vertices.iter().copied();
                (it.next().unwrap(), it.next().unwrap())
            })
            .collect();
        let mut order = vec![v1];
        let mut prev = None;
        while order.len() < comp.len() {
            let here = *order.last().unwrap();
            let mut next = pairs
                .iter()
                .filter(|&&(a, b)| (a == here) != (b == here))
                .map(|&(a, b)| if a == here { b } else { a })
                .filter(|&u| Some(u) != prev);
            let step = next.next()?;
            if next.next().is_some() {
                return None; // branching inside the branch
            }
            prev = Some(here);
            order.push(step);
        }
        if pairs.len() != comp.len() - 1 {
            return None; // extra pair: a chord or doubled step
        }
        // interior open, leaf closed
        let (leaf, interior) = order.split_last().unwrap();
        if interior.iter().any(|&v| self.is_closed(v)) || !self.is_closed(*leaf) {
            return None;
        }
        Some(order)
    }

    pub fn from_json(text: &str) -> Result<Self, HypergraphError> {
        let parsed: HypergraphJson = serde_json::from_str(text)?;
        let multiplicity = parsed.multiplicity.unwrap_or_default();
        for label in multiplicity.keys() {
            if !parsed.edges.contains_key(label) {
                return Err(HypergraphError::UnknownMultiplicityLabel(label.clone()));
            }
        }
        Hypergraph::with_multiplicities(
            parsed.mu,
            parsed.edges.into_iter().map(|(label, vertices)| {
                let m = multiplicity.get(&label).copied().unwrap_or(1);
                (label, vertices, m)
            }),
        )
    }

    pub fn to_json(&self) -> String {
        let edges: BTreeMap<String, Vec<usize>> = self
            .edges
            .iter()
            .map(|e| (e.label.clone(), e.vertices.iter().copied().collect()))
            .collect();
        let multiplicity: BTreeMap<String, usize> = self
            .edges
            .iter()
            .filter(|e| e.multiplicity > 1)
            .map(|e| (e.label.clone(), e.multiplicity))
            .collect();
        let value = HypergraphJson {
            mu: self.mu,
            edges,
            multiplicity: (!multiplicity.is_empty()).then_some(multiplicity),
        };
        serde_json::to_string_pretty(&value).expect("plain maps serialize")
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct HypergraphJson {
    mu: usize,
    edges: BTreeMap<String, Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    multiplicity: Option<BTreeMap<String, usize>>,
}

/// One connected component, renumbered densely, with the original vertex
/// numbers retained (`vertices[new - 1] = old`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Component {
    pub hypergraph: Hypergraph,
    pub vertices: Vec<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum BranchRule {
    /// n ≡ 1 (mod 3): colon out the connecting edge.
    ColonEdge,
    /// n ≡ 2 (mod 3): drop the junction's generator.
    RemoveVertex,
}

/// Result of [`Hypergraph::branch_reduce`]: the reduced hypergraph (or the
/// original when no rule applies), which rule fired, and where.
#[derive(Debug, Clone)]
pub struct BranchReduction {
    pub hypergraph: Hypergraph,
    /// `None` means a branch was found but its length is 0 mod 3, where no
    /// reduction rule exists.
    pub rule: Option<BranchRule>,
    pub junction: usize,
    /// Branch vertices in original numbering, attachment point first.
    pub branch: Vec<usize>,
}

impl fmt::Display for Hypergraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "μ={}; ", self.mu)?;
        let mut first = true;
        for e in &self.edges {
            if !first {
                write!(f, ", ")?;
            }
            first = false;
            let verts: Vec<String> = e.vertices.iter().map(|v| v.to_string()).collect();
            write!(f, "{}={{{}}}", e.label, verts.join(","))?;
            if e.multiplicity > 1 {
                write!(f, "×{}", e.multiplicity)?;
            }
        }
        Ok(())
    }
}
