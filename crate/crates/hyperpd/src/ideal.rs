//! Square-free monomials and square-free monomial ideals.
//!
//! A square-free monomial is identified with its support, a finite set of
//! variable names. An ideal is a list of generators over an ordered variable
//! set; the variable order (first appearance in the input, or edge order when
//! the ideal is realized from a hypergraph) is what makes generator
//! canonicalization and the dual-hypergraph construction deterministic.
//!
//! Everything here is exact set combinatorics: `lcm` is union, `gcd` is
//! intersection, divisibility is containment, and the colon ideal
//! `I : m = ({ g / gcd(g, m) })` is componentwise set difference followed by
//! [`MonomialIdeal::minimalize`].

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use thiserror::Error;

/// Errors from parsing or combining ideals.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum IdealError {
    /// The input contained no generators at all.
    #[error("no generators found in input")]
    Empty,
    /// A generator token was malformed.
    #[error("malformed generator `{token}`: {reason}")]
    BadToken { token: String, reason: String },
    /// One variable occurred twice inside a single generator. Generators must
    /// be square-free.
    #[error("variable `{var}` repeats inside generator `{token}`; generators must be square-free")]
    RepeatedVariable { var: String, token: String },
    /// A monomial mentions a variable the ideal does not know about.
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    /// Binary operations require both ideals to live over the same ordered
    /// variable list.
    #[error("variable sets differ: left has {left:?}, right has {right:?}")]
    VariableMismatch { left: Vec<String>, right: Vec<String> },
    /// `scale_by_monomial` requires the scaling monomial to avoid every
    /// generator's support.
    #[error("scaling monomial shares variable `{0}` with a generator")]
    NotDisjoint(String),
}

/// A square-free monomial: a (possibly empty) set of variable names.
/// The empty support is the unit monomial 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Monomial {
    support: BTreeSet<String>,
}

impl Monomial {
    /// The unit monomial 1 (empty support).
    pub fn unit() -> Self {
        Monomial::default()
    }

    /// Build a monomial from variable names. Duplicate names collapse
    /// (the monomial is square-free by construction).
    pub fn from_names<I, S>(names: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        Monomial {
            support: names.into_iter().map(Into::into).collect(),
        }
    }

    pub fn is_unit(&self) -> bool {
        self.support.is_empty()
    }

    /// Total degree, i.e. the size of the support.
    pub fn degree(&self) -> usize {
        self.support.len()
    }

    pub fn support(&self) -> impl Iterator<Item = &str> {
        self.support.iter().map(String::as_str)
    }

    pub fn contains(&self, var: &str) -> bool {
        self.support.contains(var)
    }

    /// `self` divides `other` iff the support is contained in `other`'s.
    pub fn divides(&self, other: &Monomial) -> bool {
        self.support.is_subset(&other.support)
    }

    /// Least common multiple: union of supports.
    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial {
            support: self.support.union(&other.support).cloned().collect(),
        }
    }

    /// Greatest common divisor: intersection of supports.
    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial {
            support: self.support.intersection(&other.support).cloned().collect(),
        }
    }

    /// `self / gcd(self, other)`: remove `other`'s variables from the support.
    /// This is the generator-level step of the colon ideal.
    pub fn quotient_by(&self, other: &Monomial) -> Monomial {
        Monomial {
            support: self.support.difference(&other.support).cloned().collect(),
        }
    }

    /// Product of monomials with disjoint support stays square-free; callers
    /// that cannot guarantee disjointness should use [`Monomial::lcm`].
    pub fn times_disjoint(&self, other: &Monomial) -> Result<Monomial, IdealError> {
        if let Some(shared) = self.support.intersection(&other.support).next() {
            return Err(IdealError::NotDisjoint(shared.clone()));
        }
        Ok(self.lcm(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_unit() {
            return write!(f, "1");
        }
        // Juxtapose single-letter variables; otherwise join with '*' so the
        // rendering parses back.
        if self.support.iter().all(|v| v.len() == 1) {
            for v in &self.support {
                write!(f, "{v}")?;
            }
            Ok(())
        } else {
            let joined = self.support.iter().cloned().collect::<Vec<_>>().join("*");
            write!(f, "{joined}")
        }
    }
}

/// A square-free monomial ideal: an ordered variable list plus a generator
/// list. Generators are kept in the order they were produced; only
/// [`MonomialIdeal::minimalize`] re-sorts them (into the canonical order:
/// lexicographic on the sorted sequence of variable indices).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialIdeal {
    vars: Vec<String>,
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    /// Assemble an ideal from an explicit variable order and generators.
    /// Generators may mention only listed variables.
    pub fn new<S: Into<String>>(vars: Vec<S>, gens: Vec<Monomial>) -> Result<Self, IdealError> {
        let vars: Vec<String> = vars.into_iter().map(Into::into).collect();
        let known: BTreeSet<&str> = vars.iter().map(String::as_str).collect();
        for g in &gens {
            for v in g.support() {
                if !known.contains(v) {
                    return Err(IdealError::UnknownVariable(v.to_string()));
                }
            }
        }
        if gens.is_empty() {
            return Err(IdealError::Empty);
        }
        Ok(MonomialIdeal { vars, gens })
    }

    /// Parse the plain-text generator format: generators separated by commas
    /// and/or newlines, `#` starting a comment that runs to end of line.
    ///
    /// Two token styles are supported. If any `*` occurs in the input, every
    /// generator must be written as `*`-separated variable names (arbitrary
    /// alphanumeric tokens, underscores allowed, starting with a letter).
    /// Otherwise each generator is a juxtaposition of single-letter variables,
    /// e.g. `abk` for a*b*k.
    ///
    /// Variables are ordered by first appearance. Generators come back exactly
    /// as listed — call [`MonomialIdeal::minimalize`] to canonicalize.
    pub fn parse(text: &str) -> Result<Self, IdealError> {
        let mut tokens = Vec::new();
        for line in text.lines() {
            let line = match line.find('#') {
                Some(pos) => &line[..pos],
                None => line,
            };
            for tok in line.split(',') {
                let tok = tok.trim();
                if !tok.is_empty() {
                    tokens.push(tok.to_string());
                }
            }
        }
        if tokens.is_empty() {
            return Err(IdealError::Empty);
        }

        let starred = tokens.iter().any(|t| t.contains('*'));
        let mut vars: Vec<String> = Vec::new();
        let mut seen: BTreeMap<String, usize> = BTreeMap::new();
        let mut gens = Vec::new();
        for tok in &tokens {
            let names: Vec<String> = if starred {
                let mut names = Vec::new();
                for piece in tok.split('*') {
                    let piece = piece.trim();
                    if piece.is_empty() {
                        return Err(IdealError::BadToken {
                            token: tok.clone(),
                            reason: "empty factor between `*` separators".into(),
                        });
                    }
                    if !is_identifier(piece) {
                        return Err(IdealError::BadToken {
                            token: tok.clone(),
                            reason: format!("`{piece}` is not a variable name (letters, digits, `_`, starting with a letter)"),
                        });
                    }
                    names.push(piece.to_string());
                }
                names
            } else {
                let mut names = Vec::new();
                for ch in tok.chars() {
                    if !ch.is_ascii_alphabetic() {
                        return Err(IdealError::BadToken {
                            token: tok.clone(),
                            reason: format!(
                                "`{ch}` is not a single-letter variable; use `*`-separated names for multi-character variables"
                            ),
                        });
                    }
                    names.push(ch.to_string());
                }
                names
            };
            let mut support = BTreeSet::new();
            for name in names {
                if !support.insert(name.clone()) {
                    return Err(IdealError::RepeatedVariable {
                        var: name,
                        token: tok.clone(),
                    });
                }
                if !seen.contains_key(&name) {
                    seen.insert(name.clone(), vars.len());
                    vars.push(name);
                }
            }
            gens.push(Monomial { support });
        }
        Ok(MonomialIdeal { vars, gens })
    }

    /// The ordered variable list.
    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    /// Generators, in the ideal's current order.
    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn num_gens(&self) -> usize {
        self.gens.len()
    }

    /// The unit ideal is represented by the unit monomial as sole generator.
    pub fn is_unit(&self) -> bool {
        self.gens.iter().any(Monomial::is_unit)
    }

    /// Variables that actually divide some generator, in variable order.
    pub fn used_vars(&self) -> Vec<&str> {
        self.vars
            .iter()
            .map(String::as_str)
            .filter(|v| self.gens.iter().any(|g| g.contains(v)))
            .collect()
    }

    /// A generator's support as sorted variable indices — the canonical sort
    /// key for generators.
    pub(crate) fn support_indices(&self, g: &Monomial) -> Vec<usize> {
        let index: BTreeMap<&str, usize> = self
            .vars
            .iter()
            .enumerate()
            .map(|(i, v)| (v.as_str(), i))
            .collect();
        let mut idx: Vec<usize> = g.support().map(|v| index[v]).collect();
        idx.sort_unstable();
        idx
    }

    /// True iff no generator divides another (and there are no duplicates).
    /// This is minimality of the generating set; it does not depend on order.
    pub fn is_minimal(&self) -> bool {
        for (i, g) in self.gens.iter().enumerate() {
            for (j, h) in self.gens.iter().enumerate() {
                if i != j && g.divides(h) {
                    return false;
                }
            }
        }
        true
    }

    /// Remove every generator strictly divisible by another (and duplicates),
    /// then sort what is left into canonical order. Idempotent; the result
    /// compares structurally.
    pub fn minimalize(&self) -> MonomialIdeal {
        let mut kept: Vec<Monomial> = Vec::new();
        for g in &self.gens {
            if kept.contains(g) {
                continue;
            }
            if self.gens.iter().any(|h| h.divides(g) && !g.divides(h)) {
                continue;
            }
            kept.push(g.clone());
        }
        kept.sort_by_cached_key(|g| self.support_indices(g));
        MonomialIdeal {
            vars: self.vars.clone(),
            gens: kept,
        }
    }

    /// Like [`minimalize`](Self::minimalize), but the surviving generators
    /// keep their current relative order instead of being re-sorted. Used
    /// where generator positions carry meaning (hypergraph vertex numbering).
    pub fn minimalize_stable(&self) -> MonomialIdeal {
        let mut kept: Vec<Monomial> = Vec::new();
        for g in &self.gens {
            if kept.contains(g) {
                continue;
            }
            if self.gens.iter().any(|h| h.divides(g) && !g.divides(h)) {
                continue;
            }
            kept.push(g.clone());
        }
        MonomialIdeal {
            vars: self.vars.clone(),
            gens: kept,
        }
    }

    /// The colon ideal `I : m`, minimalized. `m` must only mention known
    /// variables. `I : 1` is just `minimalize(I)`; if some generator divides
    /// `m` the result is the unit ideal.
    pub fn colon_by_monomial(&self, m: &Monomial) -> Result<MonomialIdeal, IdealError> {
        for v in m.support() {
            if !self.vars.iter().any(|w| w == v) {
                return Err(IdealError::UnknownVariable(v.to_string()));
            }
        }
        let quotients: Vec<Monomial> = self.gens.iter().map(|g| g.quotient_by(m)).collect();
        Ok(MonomialIdeal {
            vars: self.vars.clone(),
            gens: quotients,
        }
        .minimalize())
    }

    /// Intersection `J ∩ K`: pairwise lcms, minimalized. Both ideals must
    /// live over the same ordered variable list.
    pub fn intersect(&self, other: &MonomialIdeal) -> Result<MonomialIdeal, IdealError> {
        if self.vars != other.vars {
            return Err(IdealError::VariableMismatch {
                left: self.vars.clone(),
                right: other.vars.clone(),
            });
        }
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for g in &self.gens {
            for h in &other.gens {
                gens.push(g.lcm(h));
            }
        }
        Ok(MonomialIdeal {
            vars: self.vars.clone(),
            gens,
        }
        .minimalize())
    }

    /// Multiply every generator by `m`, whose support must be disjoint from
    /// every generator's support. New variables are appended to the variable
    /// order; generator order is preserved (scaling a minimal set keeps it
    /// minimal, and the dual hypergraph keeps its vertex numbering).
    pub fn scale_by_monomial(&self, m: &Monomial) -> Result<MonomialIdeal, IdealError> {
        for g in &self.gens {
            if let Some(shared) = g.support().find(|v| m.contains(v)) {
                return Err(IdealError::NotDisjoint(shared.to_string()));
            }
        }
        let mut vars = self.vars.clone();
        for v in m.support() {
            if !vars.iter().any(|w| w == v) {
                vars.push(v.to_string());
            }
        }
        let gens = self.gens.iter().map(|g| g.lcm(m)).collect();
        Ok(MonomialIdeal { vars, gens })
    }

    /// Append one generator and minimalize: the ideal `(I, m)`.
    pub fn plus_generator(&self, m: &Monomial) -> Result<MonomialIdeal, IdealError> {
        let mut vars = self.vars.clone();
        for v in m.support() {
            if !vars.iter().any(|w| w == v) {
                vars.push(v.to_string());
            }
        }
        let mut gens = self.gens.clone();
        gens.push(m.clone());
        Ok(MonomialIdeal { vars, gens }.minimalize())
    }

    /// The sub-ideal generated by the listed generator positions (1-based),
    /// over the same variable list, preserving order.
    pub fn subideal(&self, positions: &BTreeSet<usize>) -> Result<MonomialIdeal, IdealError> {
        let mut gens = Vec::new();
        for &p in positions {
            if p == 0 || p > self.gens.len() {
                return Err(IdealError::BadToken {
                    token: p.to_string(),
                    reason: format!("generator index out of range 1..={}", self.gens.len()),
                });
            }
            gens.push(self.gens[p - 1].clone());
        }
        if gens.is_empty() {
            return Err(IdealError::Empty);
        }
        Ok(MonomialIdeal {
            vars: self.vars.clone(),
            gens,
        })
    }

    /// Divide every generator by the common monomial `m` (which must divide
    /// each generator). Inverse of [`MonomialIdeal::scale_by_monomial`].
    pub fn divide_by_monomial(&self, m: &Monomial) -> Result<MonomialIdeal, IdealError> {
        for g in &self.gens {
            if !m.divides(g) {
                return Err(IdealError::BadToken {
                    token: m.to_string(),
                    reason: format!("does not divide generator `{g}`"),
                });
            }
        }
        let gens = self.gens.iter().map(|g| g.quotient_by(m)).collect();
        Ok(MonomialIdeal {
            vars: self.vars.clone(),
            gens,
        })
    }
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rendered: Vec<String> = self.gens.iter().map(Monomial::to_string).collect();
        write!(f, "{}", rendered.join(", "))
    }
}
