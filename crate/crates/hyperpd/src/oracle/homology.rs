//! Reduced simplicial homology ranks via exact boundary-matrix ranks.
//!
//! Complexes are handed over as the full list of their non-empty faces, each
//! face a bitmask over a ground set of at most 64 vertices. The empty face is
//! always implicit: every complex we build contains it (the void complex never
//! shows up — restrictions of a Stanley–Reisner complex of a proper ideal and
//! order complexes of posets all contain the empty chain), so the reduced
//! chain complex always has C_{-1} = k.
//!
//! Ranks are exact: fraction-free integer elimination (divisions by the
//! previous pivot are exact) with arbitrary-precision integers in
//! characteristic zero, and straightforward Gaussian elimination modulo p for
//! prime characteristic.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Coefficient field for homology computations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Field {
    Rationals,
    Fp(u64),
}

/// Reduced homology ranks of the complex whose non-empty faces are `faces`.
///
/// Returns `h` with `h[d + 1] = dim H̃_d`, for `d = -1 ..= top dimension`.
/// For the empty complex (no faces) this is `[1]`: rank one in degree -1.
pub(crate) fn reduced_homology(faces: &[u64], field: Field) -> Vec<u64> {
    let top = faces.iter().map(|f| f.count_ones()).max().unwrap_or(0) as usize;
    // by_card[c] lists the faces with c vertices, i.e. dimension c-1.
    let mut by_card: Vec<Vec<u64>> = vec![Vec::new(); top + 1];
    for &f in faces {
        debug_assert!(f != 0, "the empty face is implicit");
        by_card[f.count_ones() as usize].push(f);
    }
    for bucket in &mut by_card {
        bucket.sort_unstable();
        bucket.dedup();
    }

    // boundary_rank[c] = rank of ∂ from c-vertex faces down to (c-1)-vertex
    // faces; the augmentation ∂ from vertices to the empty face has rank 1
    // whenever there is a vertex at all.
    let mut boundary_rank = vec![0u64; top + 2];
    if top >= 1 && !by_card[1].is_empty() {
        boundary_rank[1] = 1;
    }
    for c in 2..=top {
        if by_card[c].is_empty() {
            continue;
        }
        boundary_rank[c] = boundary_matrix_rank(&by_card[c - 1], &by_card[c], field);
    }

    let mut h = vec![0u64; top + 1];
    // degree -1: C_{-1} has dimension 1.
    h[0] = 1 - boundary_rank[1].min(1);
    for c in 1..=top {
        let faces_c = by_card[c].len() as u64;
        h[c] = faces_c - boundary_rank[c] - boundary_rank[c + 1];
    }
    h
}

/// Rank of the simplicial boundary matrix from `cols` (c-vertex faces) to
/// `rows` ((c-1)-vertex faces), with the usual alternating signs induced by
/// sorted vertex order.
fn boundary_matrix_rank(rows: &[u64], cols: &[u64], field: Field) -> u64 {
    let row_index: HashMap<u64, usize> = rows.iter().enumerate().map(|(i, &f)| (f, i)).collect();
    let mut matrix = vec![vec![0i64; cols.len()]; rows.len()];
    for (j, &face) in cols.iter().enumerate() {
        let mut remaining = face;
        let mut position = 0u32;
        while remaining != 0 {
            let bit = remaining & remaining.wrapping_neg();
            let sub = face ^ bit;
            let sign = if position % 2 == 0 { 1 } else { -1 };
            let i = row_index[&sub];
            matrix[i][j] = sign;
            remaining ^= bit;
            position += 1;
        }
    }
    match field {
        Field::Rationals => rank_fraction_free(matrix) as u64,
        Field::Fp(p) => rank_mod_p(matrix, p) as u64,
    }
}

/// Exact rank over the rationals by fraction-free (Bareiss) elimination.
/// Every division is by the previous pivot and stays in the integers.
pub(crate) fn rank_fraction_free(matrix: Vec<Vec<i64>>) -> usize {
    let rows = matrix.len();
    if rows == 0 {
        return 0;
    }
    let cols = matrix[0].len();
    let mut m: Vec<Vec<BigInt>> = matrix
        .into_iter()
        .map(|row| row.into_iter().map(BigInt::from).collect())
        .collect();
    let mut prev = BigInt::one();
    let mut rank = 0;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(pivot_row) = (rank..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, pivot_row);
        for r in rank + 1..rows {
            for c in col + 1..cols {
                let value = &m[rank][col] * &m[r][c] - &m[r][col] * &m[rank][c];
                // Sylvester's identity makes this an exact division.
                m[r][c] = &value / &prev;
            }
            m[r][col] = BigInt::zero();
        }
        prev = m[rank][col].clone();
        rank += 1;
    }
    debug_assert!(prev.abs() >= BigInt::one());
    rank
}

/// Rank over the prime field F_p.
pub(crate) fn rank_mod_p(matrix: Vec<Vec<i64>>, p: u64) -> usize {
    let rows = matrix.len();
    if rows == 0 {
        return 0;
    }
    let cols = matrix[0].len();
    let mut m: Vec<Vec<u64>> = matrix
        .into_iter()
        .map(|row| row.into_iter().map(|x| x.rem_euclid(p as i64) as u64).collect())
        .collect();
    let mut rank = 0;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(pivot_row) = (rank..rows).find(|&r| m[r][col] % p != 0) else {
            continue;
        };
        m.swap(rank, pivot_row);
        let inv = mod_inverse(m[rank][col], p);
        for x in &mut m[rank][col..] {
            *x = *x * inv % p;
        }
        let pivot = m[rank].clone();
        for (r, row) in m.iter_mut().enumerate() {
            if r != rank && row[col] != 0 {
                let factor = row[col];
                for (x, &pv) in row[col..].iter_mut().zip(&pivot[col..]) {
                    *x = (*x + (p - factor) * pv) % p;
                }
            }
        }
        rank += 1;
    }
    rank
}

fn mod_inverse(a: u64, p: u64) -> u64 {
    // Fermat: a^(p-2) mod p, fine for the small primes we accept.
    let mut base = a % p;
    let mut exp = p - 2;
    let mut acc = 1u64;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}
