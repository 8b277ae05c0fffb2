//! Projective dimension of square-free monomial ideals through the
//! hypergraph dual to their generators.
//!
//! A square-free monomial ideal with μ minimal generators determines a
//! hypergraph on μ vertices: one (multi-)edge per variable, containing the
//! generators that variable divides. Key homological invariants of the ideal
//! — projective dimension and Castelnuovo–Mumford regularity — only depend
//! on this hypergraph, and for several shapes (open strings, open cycles,
//! and either of those plus one higher-dimensional edge) they are given by
//! closed formulas in the vertex count and the gap pattern of the extra edge.
//!
//! The crate has three layers:
//!
//! * [`ideal`] and [`hypergraph`] — the two equivalent presentations and the
//!   translations and reductions between them;
//! * [`classify`] and [`formulas`] — shape recognition and the closed
//!   formulas, combined in [`classify::pd_auto`];
//! * [`oracle`] — exact Betti numbers of small ideals from first principles,
//!   used to cross-check every formula and reduction in the test suite and
//!   available as a fallback when no formula applies.

pub mod classify;
pub mod families;
pub mod formulas;
pub mod hypergraph;
pub mod ideal;
pub mod oracle;

#[cfg(doctest)]
mod book;
