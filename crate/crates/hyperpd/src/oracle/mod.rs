//! Exact multigraded Betti numbers of square-free monomial ideals.
//!
//! Two independent computations are provided. The primary route restricts
//! the Stanley–Reisner complex of the ideal to each square-free multidegree
//! and reads Betti numbers off reduced homology (Hochster's formula). The
//! cross-check route computes homology of order complexes of open intervals
//! in the lcm lattice. The two algorithms share nothing beyond the low-level
//! rank routine, and every table they produce is required by our test suite
//! to agree entry for entry.
//!
//! Everything here is exact: ranks are computed over arbitrary-precision
//! integers (characteristic zero) or a prime field, never floats.
//!
//! From a Betti table we read off the two invariants the rest of the crate
//! cares about: `pd` (the largest homological degree with a non-zero entry)
//! and `reg` (the largest gap between internal and homological degree).

mod homology;

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::ideal::MonomialIdeal;
use homology::{reduced_homology, Field};

/// Largest number of distinct variables the scan will accept by default.
///
/// Each multidegree costs up to `2^|σ|` face checks, so the total work grows
/// quickly with the variable count; sixteen keeps worst cases in the seconds.
pub const DEFAULT_VARIABLE_LIMIT: usize = 16;

const GENERATOR_LIMIT: usize = 24;

/// Coefficient field characteristic: 0 (exact rational arithmetic) or a prime.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FieldChar {
    Zero,
    Prime(u32),
}

impl FieldChar {
    /// The characteristic as a plain integer (0 for the rationals).
    pub fn characteristic(self) -> u32 {
        match self {
            FieldChar::Zero => 0,
            FieldChar::Prime(p) => p,
        }
    }

    fn validated(self) -> Result<Field, OracleError> {
        match self {
            FieldChar::Zero => Ok(Field::Rationals),
            FieldChar::Prime(p) => {
                if is_prime(p) {
                    Ok(Field::Fp(u64::from(p)))
                } else {
                    Err(OracleError::NotPrime(p))
                }
            }
        }
    }
}

impl fmt::Display for FieldChar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.characteristic())
    }
}

impl FromStr for FieldChar {
    type Err = OracleError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let value: u32 = s
            .trim()
            .parse()
            .map_err(|_| OracleError::BadFieldChar(s.to_string()))?;
        if value == 0 {
            return Ok(FieldChar::Zero);
        }
        if is_prime(value) {
            Ok(FieldChar::Prime(value))
        } else {
            Err(OracleError::NotPrime(value))
        }
    }
}

impl Serialize for FieldChar {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_u32(self.characteristic())
    }
}

fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u32;
    while (d as u64) * (d as u64) <= n as u64 {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

#[derive(Debug, Error)]
pub enum OracleError {
    #[error("the unit ideal has no minimal free resolution to tabulate")]
    UnitIdeal,
    #[error("ideal involves {used} variables, above the limit of {limit}")]
    TooManyVariables { used: usize, limit: usize },
    #[error("ideal has {count} minimal generators, above the limit of {limit}")]
    TooManyGenerators { count: usize, limit: usize },
    #[error("field characteristic must be 0 or a prime, got `{0}`")]
    BadFieldChar(String),
    #[error("{0} is not prime")]
    NotPrime(u32),
    #[error("lcm-lattice interval has {size} elements; the cross-check route handles at most 64")]
    IntervalTooLarge { size: usize },
    #[error("generator partition invalid: {0}")]
    BadPartition(String),
    #[error(transparent)]
    Ideal(#[from] crate::ideal::IdealError),
}

/// Tuning knobs for the Betti-number scan.
#[derive(Debug, Clone)]
pub struct OracleOptions {
    /// Refuse ideals using more distinct variables than this.
    pub variable_limit: usize,
    /// Scan every square-free multidegree instead of only the lcm lattice.
    ///
    /// Multidegrees outside the lattice of generator lcms contribute nothing;
    /// the full scan exists so tests can audit that claim, not for real use.
    pub scan_all_multidegrees: bool,
}

impl Default for OracleOptions {
    fn default() -> Self {
        OracleOptions {
            variable_limit: DEFAULT_VARIABLE_LIMIT,
            scan_all_multidegrees: false,
        }
    }
}

/// Multigraded Betti numbers of `R/I`, indexed by homological degree and
/// square-free multidegree (a set of variable names).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BettiTable {
    field: FieldChar,
    entries: BTreeMap<(u32, Vec<String>), u64>,
}

impl BettiTable {
    fn new(field: FieldChar) -> Self {
        BettiTable {
            field,
            entries: BTreeMap::new(),
        }
    }

    pub fn field_char(&self) -> FieldChar {
        self.field
    }

    /// All non-zero entries, ordered by homological degree, then multidegree.
    pub fn entries(&self) -> impl Iterator<Item = (u32, &[String], u64)> {
        self.entries
            .iter()
            .map(|((i, sigma), &rank)| (*i, sigma.as_slice(), rank))
    }

    /// β_{i,σ}; zero when absent.
    pub fn rank(&self, i: u32, sigma: &[&str]) -> u64 {
        let mut key: Vec<String> = sigma.iter().map(|s| s.to_string()).collect();
        key.sort();
        self.entries.get(&(i, key)).copied().unwrap_or(0)
    }

    /// Total Betti number β_i = Σ_σ β_{i,σ}.
    pub fn total(&self, i: u32) -> u64 {
        self.entries
            .iter()
            .filter(|((deg, _), _)| *deg == i)
            .map(|(_, &rank)| rank)
            .sum()
    }

    /// All total Betti numbers `[β_0, β_1, ..., β_pd]`.
    pub fn totals(&self) -> Vec<u64> {
        let mut out = vec![0u64; self.pd() as usize + 1];
        for ((i, _), &rank) in &self.entries {
            out[*i as usize] += rank;
        }
        out
    }

    /// Σ over multidegrees of size `j` of β_{i,σ} — the (i, j) graded Betti number.
    pub fn graded_total(&self, i: u32, j: usize) -> u64 {
        self.entries
            .iter()
            .filter(|((deg, sigma), _)| *deg == i && sigma.len() == j)
            .map(|(_, &rank)| rank)
            .sum()
    }

    /// Projective dimension of `R/I`: the largest homological degree present.
    pub fn pd(&self) -> u32 {
        self.entries.keys().map(|(i, _)| *i).max().unwrap_or(0)
    }

    /// Castelnuovo–Mumford regularity of `R/I`: max of |σ| − i over entries.
    pub fn reg(&self) -> u32 {
        self.entries
            .keys()
            .map(|(i, sigma)| sigma.len() as u32 - i)
            .max()
            .unwrap_or(0)
    }

    /// Σ_i (−1)^i β_i; zero for every honest table (the resolution is exact).
    pub fn alternating_sum(&self) -> i64 {
        self.entries
            .iter()
            .map(|((i, _), &rank)| {
                let signed = rank as i64;
                if i % 2 == 0 {
                    signed
                } else {
                    -signed
                }
            })
            .sum()
    }

    /// Tab-separated rows `i<TAB>sigma<TAB>rank` with σ comma-joined.
    pub fn to_tsv(&self) -> String {
        let mut out = String::new();
        for ((i, sigma), rank) in &self.entries {
            out.push_str(&format!("{}\t{}\t{}\n", i, sigma.join(","), rank));
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        let entries: Vec<serde_json::Value> = self
            .entries
            .iter()
            .map(|((i, sigma), rank)| {
                serde_json::json!({ "i": i, "sigma": sigma, "rank": rank })
            })
            .collect();
        serde_json::json!({
            "field_char": self.field.characteristic(),
            "entries": entries,
        })
    }

    fn insert(&mut self, i: u32, sigma: Vec<String>, rank: u64) {
        if rank > 0 {
            *self.entries.entry((i, sigma)).or_insert(0) += rank;
        }
    }
}

/// The ideal's variables restricted to those actually used, with generator
/// supports as bitmasks over that restricted list.
struct Scan {
    names: Vec<String>,
    gen_masks: Vec<u64>,
}

impl Scan {
    fn sigma_names(&self, sigma: u64) -> Vec<String> {
        let mut names: Vec<String> = (0..self.names.len())
            .filter(|&b| sigma >> b & 1 == 1)
            .map(|b| self.names[b].clone())
            .collect();
        names.sort();
        names
    }
}

fn prepare(ideal: &MonomialIdeal, limit: usize) -> Result<Scan, OracleError> {
    let reduced = ideal.minimalize();
    if reduced.is_unit() {
        return Err(OracleError::UnitIdeal);
    }
    if reduced.num_gens() > GENERATOR_LIMIT {
        return Err(OracleError::TooManyGenerators {
            count: reduced.num_gens(),
            limit: GENERATOR_LIMIT,
        });
    }
    let names: Vec<String> = reduced.used_vars().into_iter().map(String::from).collect();
    if names.len() > limit {
        return Err(OracleError::TooManyVariables {
            used: names.len(),
            limit,
        });
    }
    let bit: HashMap<&str, usize> = names
        .iter()
        .enumerate()
        .map(|(b, name)| (name.as_str(), b))
        .collect();
    let gen_masks = reduced
        .gens()
        .iter()
        .map(|g| g.support().fold(0u64, |mask, name| mask | 1 << bit[name]))
        .collect();
    Ok(Scan { names, gen_masks })
}

/// All lcms of generator subsets (including the empty one), as bitmasks.
fn lcm_closure(gen_masks: &[u64]) -> Vec<u64> {
    let mut seen: HashSet<u64> = HashSet::new();
    seen.insert(0);
    let mut stack = vec![0u64];
    while let Some(m) = stack.pop() {
        for &g in gen_masks {
            let joined = m | g;
            if seen.insert(joined) {
                stack.push(joined);
            }
        }
    }
    let mut lattice: Vec<u64> = seen.into_iter().collect();
    lattice.sort_unstable();
    lattice
}

/// Multigraded Betti numbers of `R/I` over the given field, by restricting
/// the Stanley–Reisner complex of `I` to each relevant multidegree.
pub fn betti_table(ideal: &MonomialIdeal, field: FieldChar) -> Result<BettiTable, OracleError> {
    betti_table_with(ideal, field, &OracleOptions::default())
}

pub fn betti_table_with(
    ideal: &MonomialIdeal,
    field: FieldChar,
    options: &OracleOptions,
) -> Result<BettiTable, OracleError> {
    let coeffs = field.validated()?;
    let scan = prepare(ideal, options.variable_limit)?;
    let sigmas: Vec<u64> = if options.scan_all_multidegrees {
        (0..1u64 << scan.names.len()).collect()
    } else {
        lcm_closure(&scan.gen_masks)
    };
    let per_sigma: Vec<Vec<(u32, u64, u64)>> = sigmas
        .par_iter()
        .map(|&sigma| {
            hochster_entries(sigma, &scan.gen_masks, coeffs)
                .into_iter()
                .map(|(i, rank)| (i, sigma, rank))
                .collect()
        })
        .collect();
    let mut table = BettiTable::new(field);
    for batch in per_sigma {
        for (i, sigma, rank) in batch {
            table.insert(i, scan.sigma_names(sigma), rank);
        }
    }
    Ok(table)
}

/// Betti contributions of one multidegree: β_{|σ|−1−d, σ} = dim H̃_d of the
/// restriction of the Stanley–Reisner complex to σ.
fn hochster_entries(sigma: u64, gen_masks: &[u64], coeffs: Field) -> Vec<(u32, u64)> {
    let mut faces = Vec::new();
    let mut tau = sigma;
    loop {
        if tau != 0 && gen_masks.iter().all(|&g| g & tau != g) {
            faces.push(tau);
        }
        if tau == 0 {
            break;
        }
        tau = (tau - 1) & sigma;
    }
    let size = sigma.count_ones();
    let homology = reduced_homology(&faces, coeffs);
    homology
        .iter()
        .enumerate()
        .filter(|(_, &rank)| rank > 0)
        .map(|(slot, &rank)| {
            // slot = d + 1, so the entry lands in degree |σ| − 1 − d = |σ| − slot.
            let i = size - slot as u32;
            (i, rank)
        })
        .collect()
}

/// Projective dimension and regularity of `R/I` (characteristic zero).
pub fn pd_reg(ideal: &MonomialIdeal) -> Result<(u32, u32), OracleError> {
    pd_reg_with(ideal, &OracleOptions::default())
}

pub fn pd_reg_with(
    ideal: &MonomialIdeal,
    options: &OracleOptions,
) -> Result<(u32, u32), OracleError> {
    let table = betti_table_with(ideal, FieldChar::Zero, options)?;
    Ok((table.pd(), table.reg()))
}

/// The same Betti numbers by a structurally different algorithm: reduced
/// homology of order complexes of open intervals in the lcm lattice, shifted
/// by two. Serves as an independent check on [`betti_table`].
pub fn lcm_lattice_betti(
    ideal: &MonomialIdeal,
    field: FieldChar,
) -> Result<BettiTable, OracleError> {
    lcm_lattice_betti_with(ideal, field, &OracleOptions::default())
}

/// Contributions of one lattice element: (homological index, multidegree
/// mask, rank) triples.
type IntervalEntries = Result<Vec<(u32, u64, u64)>, OracleError>;

pub fn lcm_lattice_betti_with(
    ideal: &MonomialIdeal,
    field: FieldChar,
    options: &OracleOptions,
) -> Result<BettiTable, OracleError> {
    let coeffs = field.validated()?;
    let scan = prepare(ideal, options.variable_limit)?;
    let lattice = lcm_closure(&scan.gen_masks);
    let per_element: Vec<IntervalEntries> = lattice
        .par_iter()
        .filter(|&&m| m != 0)
        .map(|&m| {
            let entries = interval_homology_entries(m, &lattice, coeffs)?
                .into_iter()
                .map(|(i, rank)| (i, m, rank))
                .collect();
            Ok(entries)
        })
        .collect();
    let mut table = BettiTable::new(field);
    table.insert(0, Vec::new(), 1);
    for batch in per_element {
        for (i, sigma, rank) in batch? {
            table.insert(i, scan.sigma_names(sigma), rank);
        }
    }
    Ok(table)
}

/// β contributions of the lattice element `m`: β_{d+2, m} = dim H̃_d of the
/// order complex of the open interval below `m`. An empty interval means `m`
/// is a minimal generator and contributes β_{1,m} = 1.
fn interval_homology_entries(
    m: u64,
    lattice: &[u64],
    coeffs: Field,
) -> Result<Vec<(u32, u64)>, OracleError> {
    let interval: Vec<u64> = lattice
        .iter()
        .copied()
        .filter(|&p| p != 0 && p != m && p & m == p)
        .collect();
    if interval.len() > 64 {
        return Err(OracleError::IntervalTooLarge {
            size: interval.len(),
        });
    }
    // Sorted so that strict divisibility only points forward; chains are then
    // exactly the increasing index sequences along divisibility.
    let mut ordered = interval;
    ordered.sort_unstable_by_key(|&p| (p.count_ones(), p));

    let mut faces: Vec<u64> = Vec::new();
    let mut frontier: Vec<(u64, usize)> = (0..ordered.len()).map(|i| (1u64 << i, i)).collect();
    while let Some((chain, last)) = frontier.pop() {
        faces.push(chain);
        for next in last + 1..ordered.len() {
            if ordered[last] & ordered[next] == ordered[last] {
                frontier.push((chain | 1 << next, next));
            }
        }
    }

    let homology = reduced_homology(&faces, coeffs);
    Ok(homology
        .iter()
        .enumerate()
        .filter(|(_, &rank)| rank > 0)
        .map(|(slot, &rank)| ((slot + 1) as u32, rank))
        .collect())
}

/// Outcome of testing a two-part generator split against the hypotheses of
/// the Betti-splitting pd formula.
#[derive(Debug, Clone, Serialize)]
pub struct SplitReport {
    /// pd of the second part — the candidate for pd(R/I) − 1.
    pub q: u32,
    /// reg of the intersection ideal.
    pub r: u32,
    pub pd_j: u32,
    pub pd_k: u32,
    pub pd_jk: u32,
    pub reg_k: u32,
    pub reg_jk: u32,
    /// β_{q, q+r}(R/(J ∩ K)), the corner rank whose non-vanishing drives the jump.
    pub beta_q_qr_jk: u64,
    pub hypotheses_hold: bool,
    /// q + 1, present exactly when the hypotheses hold.
    pub predicted_pd: Option<u32>,
}

/// Split the generators of `I` into the two subideals `J` (positions `v1`)
/// and `K` (positions `v2`, both 1-based), compute pd/reg data for `J`, `K`
/// and `J ∩ K`, and test the hypotheses under which pd(R/I) is forced to be
/// pd(R/K) + 1.
pub fn check_betti_splitting(
    ideal: &MonomialIdeal,
    v1: &[usize],
    v2: &[usize],
) -> Result<SplitReport, OracleError> {
    if v1.is_empty() || v2.is_empty() {
        return Err(OracleError::BadPartition(
            "both parts must be non-empty".to_string(),
        ));
    }
    let mut seen = vec![false; ideal.num_gens()];
    for &pos in v1.iter().chain(v2) {
        if pos == 0 || pos > ideal.num_gens() {
            return Err(OracleError::BadPartition(format!(
                "generator position {pos} out of range 1..={}",
                ideal.num_gens()
            )));
        }
        if seen[pos - 1] {
            return Err(OracleError::BadPartition(format!(
                "generator position {pos} appears twice"
            )));
        }
        seen[pos - 1] = true;
    }
    if seen.iter().any(|&s| !s) {
        return Err(OracleError::BadPartition(
            "every generator must land in one of the two parts".to_string(),
        ));
    }

    let j = ideal.subideal(&v1.iter().copied().collect())?;
    let k = ideal.subideal(&v2.iter().copied().collect())?;
    let jk = j.intersect(&k)?;
    let table_j = betti_table(&j, FieldChar::Zero)?;
    let table_k = betti_table(&k, FieldChar::Zero)?;
    let table_jk = betti_table(&jk, FieldChar::Zero)?;

    let q = table_k.pd();
    let r = table_jk.reg();
    let beta_q_qr_jk = table_jk.graded_total(q, (q + r) as usize);
    let hypotheses_hold = table_j.pd() < q
        && table_jk.pd() == q
        && table_k.reg() < r
        && beta_q_qr_jk != 0;
    Ok(SplitReport {
        q,
        r,
        pd_j: table_j.pd(),
        pd_k: q,
        pd_jk: table_jk.pd(),
        reg_k: table_k.reg(),
        reg_jk: r,
        beta_q_qr_jk,
        hypotheses_hold,
        predicted_pd: hypotheses_hold.then_some(q + 1),
    })
}

/// Numerator of the multigraded Hilbert series of `R/I`, by inclusion–
/// exclusion over generator subsets: the coefficient of t^σ is
/// Σ (−1)^|S| over subsets S of the minimal generators with lcm σ.
///
/// Independent of the resolution machinery, which is the point: the same
/// polynomial must come out of the Betti table via [`k_polynomial`].
pub fn hilbert_numerator(
    ideal: &MonomialIdeal,
) -> Result<BTreeMap<Vec<String>, i64>, OracleError> {
    let scan = prepare(ideal, 63)?;
    let g = scan.gen_masks.len();
    let mut coeff: HashMap<u64, i64> = HashMap::new();
    for subset in 0u64..1 << g {
        let lcm = (0..g)
            .filter(|&j| subset >> j & 1 == 1)
            .fold(0u64, |m, j| m | scan.gen_masks[j]);
        let sign = if subset.count_ones() % 2 == 0 { 1 } else { -1 };
        *coeff.entry(lcm).or_insert(0) += sign;
    }
    Ok(coeff
        .into_iter()
        .filter(|&(_, c)| c != 0)
        .map(|(mask, c)| (scan.sigma_names(mask), c))
        .collect())
}

/// The multigraded K-polynomial Σ_{i,σ} (−1)^i β_{i,σ} t^σ read off a table.
pub fn k_polynomial(table: &BettiTable) -> BTreeMap<Vec<String>, i64> {
    let mut poly: BTreeMap<Vec<String>, i64> = BTreeMap::new();
    for (i, sigma, rank) in table.entries() {
        let sign = if i % 2 == 0 { 1 } else { -1 };
        *poly.entry(sigma.to_vec()).or_insert(0) += sign * rank as i64;
    }
    poly.retain(|_, c| *c != 0);
    poly
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ideal(text: &str) -> MonomialIdeal {
        MonomialIdeal::parse(text).unwrap()
    }

    #[test]
    fn principal_ideal_is_koszul() {
        let table = betti_table(&ideal("x"), FieldChar::Zero).unwrap();
        assert_eq!(table.rank(0, &[]), 1);
        assert_eq!(table.rank(1, &["x"]), 1);
        assert_eq!(table.pd(), 1);
        assert_eq!(table.reg(), 0);
        assert_eq!(pd_reg(&ideal("x")).unwrap(), (1, 0));
    }

    #[test]
    fn two_variables_koszul() {
        let table = betti_table(&ideal("x, y"), FieldChar::Zero).unwrap();
        assert_eq!(table.total(1), 2);
        assert_eq!(table.total(2), 1);
        assert_eq!(table.rank(2, &["x", "y"]), 1);
        assert_eq!(table.pd(), 2);
        assert_eq!(table.reg(), 0);
    }

    #[test]
    fn three_term_path_ideal() {
        let table = betti_table(&ideal("ab, bc, cd"), FieldChar::Zero).unwrap();
        assert_eq!(table.total(1), 3);
        assert_eq!(table.total(2), 2);
        assert_eq!(table.rank(2, &["a", "b", "c"]), 1);
        assert_eq!(table.rank(2, &["b", "c", "d"]), 1);
        assert_eq!(table.pd(), 2);
        assert_eq!(table.reg(), 1);
    }

    #[test]
    fn triangle_ideal_with_scrambled_generator_order() {
        let table = betti_table(&ideal("ac, ab, bc"), FieldChar::Zero).unwrap();
        assert_eq!(table.total(1), 3);
        assert_eq!(table.total(2), 2);
        assert_eq!(table.pd(), 2);
    }

    #[test]
    fn unit_ideal_is_rejected() {
        let i = ideal("ab").colon_by_monomial(&crate::ideal::Monomial::from_names(["a", "b"]));
        assert!(matches!(
            betti_table(&i.unwrap(), FieldChar::Zero),
            Err(OracleError::UnitIdeal)
        ));
    }

    #[test]
    fn variable_limit_is_enforced() {
        let options = OracleOptions {
            variable_limit: 3,
            ..OracleOptions::default()
        };
        let err = betti_table_with(&ideal("ab, cd"), FieldChar::Zero, &options).unwrap_err();
        assert!(matches!(
            err,
            OracleError::TooManyVariables { used: 4, limit: 3 }
        ));
    }

    #[test]
    fn cross_route_agrees_on_small_examples() {
        for text in ["x", "x, y", "ab, bc, cd", "ac, ab, bc", "abc, cde, efa"] {
            for field in [FieldChar::Zero, FieldChar::Prime(2)] {
                let direct = betti_table(&ideal(text), field).unwrap();
                let lattice = lcm_lattice_betti(&ideal(text), field).unwrap();
                assert_eq!(direct, lattice, "routes disagree on {text} over {field}");
            }
        }
    }

    #[test]
    fn pruned_scan_matches_full_scan() {
        let options = OracleOptions {
            scan_all_multidegrees: true,
            ..OracleOptions::default()
        };
        for text in ["ab, bc, cd", "abc, bcd, ad"] {
            let pruned = betti_table(&ideal(text), FieldChar::Zero).unwrap();
            let full = betti_table_with(&ideal(text), FieldChar::Zero, &options).unwrap();
            assert_eq!(pruned, full, "lattice pruning dropped entries on {text}");
        }
    }

    #[test]
    fn alternating_sum_vanishes() {
        for text in ["x", "ab, bc, cd", "abc, bcd, ad", "ab, cd, ef"] {
            let table = betti_table(&ideal(text), FieldChar::Zero).unwrap();
            assert_eq!(table.alternating_sum(), 0, "non-exact table for {text}");
        }
    }

    #[test]
    fn k_polynomial_matches_inclusion_exclusion() {
        for text in ["ab, bc, cd", "abc, bcd, ad", "ab, cd, ef", "a, b, c"] {
            let i = ideal(text);
            let table = betti_table(&i, FieldChar::Zero).unwrap();
            assert_eq!(
                k_polynomial(&table),
                hilbert_numerator(&i).unwrap(),
                "K-polynomial mismatch for {text}"
            );
        }
    }

    #[test]
    fn betti_numbers_can_depend_on_the_field() {
        // Stanley–Reisner ideal of the 6-vertex projective plane: generators
        // are the minimal non-faces (every triple not spanning a triangle).
        let facets: [[usize; 3]; 10] = [
            [0, 1, 4],
            [0, 1, 5],
            [0, 2, 3],
            [0, 2, 5],
            [0, 3, 4],
            [1, 2, 3],
            [1, 2, 4],
            [1, 3, 5],
            [2, 4, 5],
            [3, 4, 5],
        ];
        let names = ["a", "b", "c", "d", "e", "f"];
        let mut gens = Vec::new();
        for x in 0..6 {
            for y in x + 1..6 {
                for z in y + 1..6 {
                    if !facets.contains(&[x, y, z]) {
                        gens.push(format!("{}*{}*{}", names[x], names[y], names[z]));
                    }
                }
            }
        }
        assert_eq!(gens.len(), 10);
        let i = ideal(&gens.join(", "));
        let rational = betti_table(&i, FieldChar::Zero).unwrap();
        let char_two = betti_table(&i, FieldChar::Prime(2)).unwrap();
        assert_eq!(rational.pd(), 3);
        assert_eq!(char_two.pd(), 4);
    }

    #[test]
    fn splitting_report_on_path_ideal_is_honest() {
        let report = check_betti_splitting(&ideal("ab, bc, cd"), &[1], &[2, 3]).unwrap();
        assert!(!report.hypotheses_hold);
        assert!(report.predicted_pd.is_none());
        assert_eq!(report.pd_k, 2);
    }

    #[test]
    fn splitting_partition_is_validated() {
        let i = ideal("ab, bc, cd");
        assert!(check_betti_splitting(&i, &[1, 2, 3], &[]).is_err());
        assert!(check_betti_splitting(&i, &[1, 2], &[2, 3]).is_err());
        assert!(check_betti_splitting(&i, &[1], &[2]).is_err());
        assert!(check_betti_splitting(&i, &[1], &[2, 4]).is_err());
    }

    #[test]
    fn field_char_parses() {
        assert_eq!("0".parse::<FieldChar>().unwrap(), FieldChar::Zero);
        assert_eq!("2".parse::<FieldChar>().unwrap(), FieldChar::Prime(2));
        assert_eq!("101".parse::<FieldChar>().unwrap(), FieldChar::Prime(101));
        assert!(matches!(
            "4".parse::<FieldChar>(),
            Err(OracleError::NotPrime(4))
        ));
        assert!("q".parse::<FieldChar>().is_err());
    }

    #[test]
    fn tsv_layout_is_stable() {
        let table = betti_table(&ideal("x, y"), FieldChar::Zero).unwrap();
        assert_eq!(table.to_tsv(), "0\t\t1\n1\tx\t1\n1\ty\t1\n2\tx,y\t1\n");
    }
}
