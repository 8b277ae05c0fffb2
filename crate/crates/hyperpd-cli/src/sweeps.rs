//! The enumeration sweeps behind `hyperpd verify` and the cycle-conjecture
//! evidence collector behind `hyperpd conjecture-search`.
//!
//! Every sweep pits a closed formula (or a reduction's bookkeeping) against
//! the oracle on an exhaustively enumerated family. Instances are generated
//! in a deterministic order, evaluated in parallel, and reported in the
//! generation order, so identical invocations print identical reports.

use std::collections::BTreeSet;

use anyhow::{bail, Context};
use hyperpd::classify::{ClassifyError, CycleEdgeConfig, StringEdgeConfig, DEFAULT_ORACLE_BUDGET};
use hyperpd::families::{cycle_with_edge, lemma_instance, open_cycle, open_string, string_with_edge};
use hyperpd::formulas::{
    lemma_case_pd, pd_cycle_with_edge, pd_open_cycle, pd_open_string, pd_string_with_edge,
    reg_open_string, FormulaError, LemmaCase, RegBound,
};
use hyperpd::hypergraph::Hypergraph;
use hyperpd::oracle::{betti_table_with, check_betti_splitting, FieldChar, OracleOptions};
use rayon::prelude::*;

use crate::report::{ConjectureHit, ConjectureReport, Mismatch, VerifyOutcome};
use crate::LemmaFamilyArg;

pub enum Family {
    Strings,
    Cycles,
    StringEdge,
    CycleEdge,
    Lemmas { only: Option<LemmaFamilyArg> },
    Splitting,
    Reductions,
}

pub struct SweepBounds {
    pub max_mu: Option<usize>,
    pub field: FieldChar,
}

pub fn verify_family(family: Family, bounds: SweepBounds) -> anyhow::Result<VerifyOutcome> {
    let field = bounds.field;
    match family {
        Family::Strings => sweep_strings(bounds.max_mu.unwrap_or(12), field),
        Family::Cycles => sweep_cycles(bounds.max_mu.unwrap_or(12), field),
        Family::StringEdge => sweep_string_edge(bounds.max_mu.unwrap_or(8), field),
        Family::CycleEdge => sweep_cycle_edge(bounds.max_mu.unwrap_or(8), field),
        Family::Lemmas { only } => sweep_lemmas(bounds.max_mu.unwrap_or(10), field, only),
        Family::Splitting => sweep_splitting(bounds.max_mu.unwrap_or(10), field),
        Family::Reductions => sweep_reductions(bounds.max_mu.unwrap_or(7), field),
    }
}

/// Oracle pd and reg of a hypergraph's realization.
fn oracle_pd_reg(h: &Hypergraph, field: FieldChar) -> anyhow::Result<(u32, u32)> {
    let ideal = h.to_ideal_unchecked();
    let table = betti_table_with(&ideal, field, &OracleOptions::default())
        .with_context(|| format!("oracle run on {h}"))?;
    Ok((table.pd(), table.reg()))
}

fn outcome(family: &str, per_instance: Vec<Vec<Mismatch>>) -> VerifyOutcome {
    VerifyOutcome {
        family: family.to_string(),
        instances: per_instance.len(),
        mismatches: per_instance.into_iter().flatten().collect(),
    }
}

fn sweep_strings(max_mu: usize, field: FieldChar) -> anyhow::Result<VerifyOutcome> {
    let per_instance = (1..=max_mu)
        .collect::<Vec<_>>()
        .par_iter()
        .map(|&mu| -> anyhow::Result<Vec<Mismatch>> {
            let h = open_string(mu).expect("μ ≥ 1");
            let (pd, reg) = oracle_pd_reg(&h, field)?;
            let want_pd = pd_open_string(mu).expect("μ ≥ 1");
            let want_reg = reg_open_string(mu).expect("μ ≥ 1");
            let mut mismatches = Vec::new();
            if pd != want_pd || reg != want_reg {
                mismatches.push(Mismatch {
                    instance: format!("open-string μ={mu}"),
                    formula: format!("pd {want_pd} reg {want_reg}"),
                    oracle: format!("pd {pd} reg {reg}"),
                });
            }
            Ok(mismatches)
        })
        .collect::<anyhow::Result<Vec<_>>>()?;
    Ok(outcome("strings", per_instance))
}

fn sweep_cycles(max_mu: usize, field: FieldChar) -> anyhow::Result<VerifyOutcome> {
    if max_mu < 3 {
        bail!("cycles need --max-mu of at least 3");
    }
    let per_instance = (3..=max_mu)
        .collect::<Vec<_>>()
        .par_iter()
        .map(|&mu| -> anyhow::Result<Vec<Mismatch>> {
            let h = open_cycle(mu).expect("μ ≥ 3");
            let (pd, _) = oracle_pd_reg(&h, field)?;
            let want = pd_open_cycle(mu).expect("μ ≥ 3");
            let mut mismatches = Vec::new();
            if pd != want {
                mismatches.push(Mismatch {
                    instance: format!("open-cycle μ={mu}"),
                    formula: format!("pd {want}"),
                    oracle: format!("pd {pd}"),
                });
            }
            Ok(mismatches)
        })
        .collect::<anyhow::Result<Vec<_>>>()?;
    Ok(outcome("cycles", per_instance))
}

/// All (μ, F) with 2 ≤ |F|, F ⊆ {1..μ}, μ ≤ max_mu, skipping every F that
/// is a union of the string's edges (the theorem assumes those are already
/// reduced away).
fn string_edge_jobs(max_mu: usize) -> Vec<(usize, Vec<usize>)> {
    let mut jobs = Vec::new();
    for mu in 2..=max_mu {
        for mask in 0u32..1 << mu {
            if mask.count_ones() < 2 {
                continue;
            }
            let positions: Vec<usize> = (1..=mu).filter(|i| mask >> (i - 1) & 1 == 1).collect();
            jobs.push((mu, positions));
        }
    }
    jobs
}

fn sweep_string_edge(max_mu: usize, field: FieldChar) -> anyhow::Result<VerifyOutcome> {
    let evaluated = string_edge_jobs(max_mu)
        .par_iter()
        .map(|(mu, positions)| -> anyhow::Result<Option<Vec<Mismatch>>> {
            let cfg = StringEdgeConfig::new(*mu, positions.clone(), true, true);
            let want = match pd_string_with_edge(&cfg) {
                // F a union of string edges is outside the theorem
                Err(FormulaError::UnionEdge) => return Ok(None),
                other => other.context("closed-ends config must be in scope")?.pd,
            };
            let h = string_with_edge(*mu, positions).expect("positions validated");
            let (pd, _) = oracle_pd_reg(&h, field)?;
            let mut mismatches = Vec::new();
            if pd != want {
                mismatches.push(Mismatch {
                    instance: format!("string μ={mu} F={positions:?}"),
                    formula: format!("pd {want}"),
                    oracle: format!("pd {pd}"),
                });
            }
            Ok(Some(mismatches))
        })
        .collect::<anyhow::Result<Vec<_>>>()?;
    Ok(outcome(
        "string-edge",
        evaluated.into_iter().flatten().collect(),
    ))
}

/// Smallest dihedral image of a position set on the μ-cycle.
fn cycle_canonical(mu: usize, positions: &[usize]) -> Vec<usize> {
    let mut best: Option<Vec<usize>> = None;
    for flip in [false, true] {
        for shift in 0..mu {
            let mut image: Vec<usize> = positions
                .iter()
                .map(|&p| {
                    let q = if flip { mu + 1 - p } else { p };
                    (q - 1 + shift) % mu + 1
                })
                .collect();
            image.sort_unstable();
            if best.as_ref().is_none_or(|b| image < *b) {
                best = Some(image);
            }
        }
    }
    best.expect("non-empty position set")
}

fn sweep_cycle_edge(max_mu: usize, field: FieldChar) -> anyhow::Result<VerifyOutcome> {
    if max_mu < 3 {
        bail!("cycles need --max-mu of at least 3");
    }
    let mut jobs = Vec::new();
    for mu in 3..=max_mu {
        for mask in 0u32..1 << mu {
            if mask.count_ones() < 2 {
                continue;
            }
            let positions: Vec<usize> = (1..=mu).filter(|i| mask >> (i - 1) & 1 == 1).collect();
            // one representative per rotation/reflection class
            if cycle_canonical(mu, &positions) != positions {
                continue;
            }
            jobs.push((mu, positions));
        }
    }
    let evaluated = jobs
        .par_iter()
        .map(|(mu, positions)| -> anyhow::Result<Option<Vec<Mismatch>>> {
            let cfg = CycleEdgeConfig::new(*mu, positions.clone());
            let want = match pd_cycle_with_edge(&cfg) {
                // F a union of cycle edges is outside the theorem
                Err(FormulaError::UnionEdge) => return Ok(None),
                other => other.context("cycle config must be in scope")?.pd,
            };
            let h = cycle_with_edge(*mu, positions).expect("positions validated");
            let (pd, _) = oracle_pd_reg(&h, field)?;
            let mut mismatches = Vec::new();
            if pd != want {
                mismatches.push(Mismatch {
                    instance: format!("cycle μ={mu} F={positions:?}"),
                    formula: format!("pd {want}"),
                    oracle: format!("pd {pd}"),
                });
            }
            Ok(Some(mismatches))
        })
        .collect::<anyhow::Result<Vec<_>>>()?;
    Ok(outcome(
        "cycle-edge",
        evaluated.into_iter().flatten().collect(),
    ))
}

/// All non-negative integer vectors of the given length with sum ≤ max_sum.
fn quotient_vectors(len: usize, max_sum: usize) -> Vec<Vec<u32>> {
    if len == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for first in 0..=max_sum {
        for mut rest in quotient_vectors(len - 1, max_sum - first) {
            rest.insert(0, first as u32);
            out.push(rest);
        }
    }
    out
}

fn lemma_descriptor(case: &LemmaCase) -> String {
    match case {
        LemmaCase::EdgeAtOpenEnd { l } => format!("edge-at-open-end l={l:?}"),
        LemmaCase::EdgeSpansEnds { l } => format!("edge-spans-ends l={l:?}"),
        LemmaCase::EdgeSpansEndsReduced { l } => format!("edge-spans-ends-reduced l={l:?}"),
        LemmaCase::OuterResiduesOne { l } => format!("outer-residues-one l={l:?}"),
    }
}

/// Every lemma case whose configured string has at most `max_mu` vertices.
fn lemma_cases(max_mu: usize, only: Option<LemmaFamilyArg>) -> Vec<LemmaCase> {
    let wanted = |arg: LemmaFamilyArg| only.is_none() || only == Some(arg);
    let mut cases = Vec::new();
    if wanted(LemmaFamilyArg::EdgeAtOpenEnd) {
        // μ = 3k + 3Σl
        for k in 1..=max_mu / 3 {
            for l in quotient_vectors(k, (max_mu - 3 * k) / 3) {
                cases.push(LemmaCase::EdgeAtOpenEnd { l });
            }
        }
    }
    if wanted(LemmaFamilyArg::EdgeSpansEnds) {
        // μ = 3k − 2 + 3Σl, parameter vector has length k − 1
        for k in 2..=max_mu.div_ceil(3) {
            for l in quotient_vectors(k - 1, (max_mu + 2 - 3 * k) / 3) {
                cases.push(LemmaCase::EdgeSpansEnds { l });
            }
        }
    }
    if wanted(LemmaFamilyArg::EdgeSpansEndsReduced) {
        for k in 2..=max_mu.div_ceil(3) {
            for l in quotient_vectors(k - 1, (max_mu + 2 - 3 * k) / 3) {
                cases.push(LemmaCase::EdgeSpansEndsReduced { l });
            }
        }
    }
    if wanted(LemmaFamilyArg::OuterResiduesOne) {
        // μ = 3k + 3Σl, parameter vector has length k + 1
        for k in 2..=max_mu / 3 {
            for l in quotient_vectors(k + 1, (max_mu - 3 * k) / 3) {
                cases.push(LemmaCase::OuterResiduesOne { l });
            }
        }
    }
    cases
}

fn sweep_lemmas(
    max_mu: usize,
    field: FieldChar,
    only: Option<LemmaFamilyArg>,
) -> anyhow::Result<VerifyOutcome> {
    let per_instance = lemma_cases(max_mu, only)
        .par_iter()
        .map(|case| -> anyhow::Result<Vec<Mismatch>> {
            let want = lemma_case_pd(case).expect("enumerated cases are in range");
            let h = lemma_instance(case);
            let (pd, reg) = oracle_pd_reg(&h, field)?;
            let mut mismatches = Vec::new();
            if pd != want.pd {
                mismatches.push(Mismatch {
                    instance: lemma_descriptor(case),
                    formula: format!("pd {}", want.pd),
                    oracle: format!("pd {pd}"),
                });
            }
            if let Some(RegBound::AtMost(bound)) = want.reg {
                if reg > bound {
                    mismatches.push(Mismatch {
                        instance: format!("{} (reg bound)", lemma_descriptor(case)),
                        formula: format!("reg ≤ {bound}"),
                        oracle: format!("reg {reg}"),
                    });
                }
            }
            Ok(mismatches)
        })
        .collect::<anyhow::Result<Vec<_>>>()?;
    Ok(outcome("lemmas", per_instance))
}

fn sweep_splitting(max_mu: usize, field: FieldChar) -> anyhow::Result<VerifyOutcome> {
    let cases: Vec<LemmaCase> = lemma_cases(max_mu, Some(LemmaFamilyArg::EdgeSpansEnds));
    let per_instance = cases
        .par_iter()
        .map(|case| -> anyhow::Result<Vec<Mismatch>> {
            let h = lemma_instance(case);
            let ideal = h.to_ideal_unchecked();
            // split off the edge's second vertex, 2 + n_2
            let pivot = 2 + case.gaps()[1];
            let rest: Vec<usize> = (1..=h.mu()).filter(|&v| v != pivot).collect();
            let report = check_betti_splitting(&ideal, &[pivot], &rest)?;
            let mut mismatches = Vec::new();
            if report.hypotheses_hold {
                let (pd, _) = oracle_pd_reg(&h, field)?;
                if Some(pd) != report.predicted_pd {
                    mismatches.push(Mismatch {
                        instance: format!("splitting {}", lemma_descriptor(case)),
                        formula: format!("pd {:?}", report.predicted_pd),
                        oracle: format!("pd {pd}"),
                    });
                }
            }
            Ok(mismatches)
        })
        .collect::<anyhow::Result<Vec<_>>>()?;
    Ok(outcome("splitting", per_instance))
}

/// Two open strings side by side, vertices of the second shifted up.
fn disjoint_strings(a: usize, b: usize) -> Hypergraph {
    let left = open_string(a).expect("μ ≥ 1");
    let right = open_string(b).expect("μ ≥ 1");
    let mut edges: Vec<(String, Vec<usize>, usize)> = Vec::new();
    for (label, vertices, multiplicity) in left.edges() {
        edges.push((
            format!("p{label}"),
            vertices.iter().copied().collect(),
            multiplicity,
        ));
    }
    for (label, vertices, multiplicity) in right.edges() {
        edges.push((
            format!("q{label}"),
            vertices.iter().map(|v| v + a).collect(),
            multiplicity,
        ));
    }
    Hypergraph::with_multiplicities(a + b, edges).expect("both strings cover their vertices")
}

/// Three bookkeeping identities the reduction operations promise: deleting
/// union edges never moves the oracle pd, a qualifying branch reduction
/// never moves it, and disjoint pieces contribute additively.
fn sweep_reductions(max_mu: usize, field: FieldChar) -> anyhow::Result<VerifyOutcome> {
    enum Job {
        Union(usize, Vec<usize>),
        Branch(usize, Vec<usize>),
        Components(usize, usize),
    }
    let mut jobs = Vec::new();
    for (mu, positions) in string_edge_jobs(max_mu) {
        let h = string_with_edge(mu, &positions).expect("positions validated");
        if h.remove_union_edges() != h {
            jobs.push(Job::Union(mu, positions));
        } else if matches!(&h.branch_reduce(), Ok(red) if red.rule.is_some()) {
            jobs.push(Job::Branch(mu, positions));
        }
    }
    for a in 1..=max_mu {
        for b in a..=max_mu {
            if a + b <= max_mu {
                jobs.push(Job::Components(a, b));
            }
        }
    }
    let per_instance = jobs
        .par_iter()
        .map(|job| -> anyhow::Result<Vec<Mismatch>> {
            let mut mismatches = Vec::new();
            match job {
                Job::Union(mu, positions) => {
                    let h = string_with_edge(*mu, positions).expect("positions validated");
                    let (before, _) = oracle_pd_reg(&h, field)?;
                    let (after, _) = oracle_pd_reg(&h.remove_union_edges(), field)?;
                    if before != after {
                        mismatches.push(Mismatch {
                            instance: format!("union μ={mu} F={positions:?}"),
                            formula: format!("pd {after}"),
                            oracle: format!("pd {before}"),
                        });
                    }
                }
                Job::Branch(mu, positions) => {
                    let h = string_with_edge(*mu, positions).expect("positions validated");
                    let red = h.branch_reduce().expect("job pre-qualified");
                    let (before, _) = oracle_pd_reg(&h, field)?;
                    let (after, _) = oracle_pd_reg(&red.hypergraph, field)?;
                    if before != after {
                        mismatches.push(Mismatch {
                            instance: format!(
                                "branch μ={mu} F={positions:?} junction={}",
                                red.junction
                            ),
                            formula: format!("pd {after}"),
                            oracle: format!("pd {before}"),
                        });
                    }
                }
                Job::Components(a, b) => {
                    let (together, _) = oracle_pd_reg(&disjoint_strings(*a, *b), field)?;
                    let (left, _) = oracle_pd_reg(&open_string(*a).expect("μ ≥ 1"), field)?;
                    let (right, _) = oracle_pd_reg(&open_string(*b).expect("μ ≥ 1"), field)?;
                    if together != left + right {
                        mismatches.push(Mismatch {
                            instance: format!("components {a}+{b}"),
                            formula: format!("pd {}", left + right),
                            oracle: format!("pd {together}"),
                        });
                    }
                }
            }
            Ok(mismatches)
        })
        .collect::<anyhow::Result<Vec<_>>>()?;
    Ok(outcome("reductions", per_instance))
}

pub struct ConjectureArgs {
    pub max_mu: usize,
    pub max_edges: usize,
    pub field: FieldChar,
    pub budget: Option<usize>,
    pub dump: Option<std::path::PathBuf>,
}

/// Open cycles with several extra edges, none a union of the other edges,
/// one representative per rotation/reflection class, compared against the
/// plain open-cycle value.
pub fn conjecture_search(args: &ConjectureArgs) -> anyhow::Result<ConjectureReport> {
    if args.max_mu < 3 {
        bail!("--max-mu must be at least 3");
    }
    if args.max_edges < 2 {
        bail!("--max-edges must be at least 2");
    }
    let budget = args.budget.unwrap_or(DEFAULT_ORACLE_BUDGET);
    let worst = args.max_mu + args.max_edges;
    if worst > budget {
        return Err(ClassifyError::BudgetExceeded {
            needed: worst,
            budget,
        }
        .into());
    }

    let mut jobs: Vec<(usize, Vec<Vec<usize>>)> = Vec::new();
    for mu in 3..=args.max_mu {
        let pair_masks: Vec<u32> = (1..=mu)
            .map(|i| (1 << (i - 1)) | (1 << (i % mu)))
            .collect();
        let candidates: Vec<u32> = (0u32..1 << mu)
            .filter(|m| m.count_ones() >= 2 && !pair_masks.contains(m))
            .collect();
        for count in 2..=args.max_edges {
            each_combination(candidates.len(), count, &mut |picked| {
                let extras: Vec<u32> = picked.iter().map(|&i| candidates[i]).collect();
                if !union_free(&pair_masks, &extras) {
                    return;
                }
                let extra_sets: Vec<Vec<usize>> = extras
                    .iter()
                    .map(|&m| (1..=mu).filter(|i| m >> (i - 1) & 1 == 1).collect())
                    .collect();
                let mut sorted = extra_sets.clone();
                sorted.sort();
                if canonical_extras(mu, &extra_sets) != sorted {
                    return;
                }
                jobs.push((mu, sorted));
            });
        }
    }

    let options = OracleOptions {
        variable_limit: budget,
        ..OracleOptions::default()
    };
    let evaluated = jobs
        .par_iter()
        .map(|(mu, extras)| -> anyhow::Result<Option<ConjectureHit>> {
            let mut edges: Vec<(String, Vec<usize>)> = (1..*mu)
                .map(|i| (format!("e{i}"), vec![i, i + 1]))
                .collect();
            edges.push((format!("e{mu}"), vec![*mu, 1]));
            for (idx, set) in extras.iter().enumerate() {
                edges.push((format!("F{}", idx + 1), set.clone()));
            }
            let h = Hypergraph::new(*mu, edges).expect("cycle edges cover 1..=mu");
            let table = betti_table_with(&h.to_ideal_unchecked(), args.field, &options)?;
            let formula = pd_open_cycle(*mu).expect("μ ≥ 3");
            if table.pd() == formula {
                return Ok(None);
            }
            Ok(Some(ConjectureHit {
                mu: *mu,
                extra_edges: extras.clone(),
                formula_pd: formula,
                oracle_pd: table.pd(),
                hypergraph: serde_json::from_str(&h.to_json()).expect("well-formed JSON"),
            }))
        })
        .collect::<anyhow::Result<Vec<_>>>()?;

    let instances = evaluated.len();
    let mismatching: Vec<ConjectureHit> = evaluated.into_iter().flatten().collect();
    if let Some(dir) = &args.dump {
        std::fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
        for (idx, hit) in mismatching.iter().enumerate() {
            let path = dir.join(format!("cycle-mu{}-{:03}.json", hit.mu, idx));
            std::fs::write(&path, serde_json::to_string_pretty(&hit.hypergraph)?)
                .with_context(|| format!("writing {}", path.display()))?;
        }
    }
    Ok(ConjectureReport {
        max_mu: args.max_mu,
        max_edges: args.max_edges,
        instances,
        matching: instances - mismatching.len(),
        mismatching,
    })
}

/// Visit every `count`-element index combination of `0..n` in ascending
/// lexicographic order.
fn each_combination(n: usize, count: usize, visit: &mut impl FnMut(&[usize])) {
    if count > n {
        return;
    }
    let mut picked: Vec<usize> = (0..count).collect();
    loop {
        visit(&picked);
        // advance the rightmost index that still has room
        let mut slot = count;
        loop {
            if slot == 0 {
                return;
            }
            slot -= 1;
            if picked[slot] != n - count + slot {
                break;
            }
            if slot == 0 {
                return;
            }
        }
        picked[slot] += 1;
        for later in slot + 1..count {
            picked[later] = picked[later - 1] + 1;
        }
    }
}

/// No edge (pair or extra) may be the union of the other edges contained
/// in it.
fn union_free(pairs: &[u32], extras: &[u32]) -> bool {
    let all: Vec<u32> = pairs.iter().chain(extras).copied().collect();
    all.iter().enumerate().all(|(i, &edge)| {
        let cover = all
            .iter()
            .enumerate()
            .filter(|&(j, &other)| j != i && other & !edge == 0)
            .fold(0u32, |acc, (_, &other)| acc | other);
        cover != edge
    })
}

/// Smallest dihedral image of a family of position sets on the μ-cycle.
fn canonical_extras(mu: usize, extras: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let mut best: Option<Vec<Vec<usize>>> = None;
    for flip in [false, true] {
        for shift in 0..mu {
            let mut image: Vec<Vec<usize>> = extras
                .iter()
                .map(|set| {
                    let transformed: BTreeSet<usize> = set
                        .iter()
                        .map(|&p| {
                            let q = if flip { mu + 1 - p } else { p };
                            (q - 1 + shift) % mu + 1
                        })
                        .collect();
                    transformed.into_iter().collect()
                })
                .collect();
            image.sort();
            if best.as_ref().is_none_or(|b| image < *b) {
                best = Some(image);
            }
        }
    }
    best.expect("non-empty edge family")
}
