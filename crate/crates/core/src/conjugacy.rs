//! Bounded search for a base change `P ∈ GL(3, ℤ)` with `P·G1·P⁻¹ = G2`.
//!
//! For each assignment of the generators of G1 to elements of G2 of the
//! same order, the intertwining condition `P·g = g'·P` is linear in the
//! entries of P. Its kernel is computed exactly over ℚ and the free entries
//! are enumerated within the bound, so the candidates are exactly the
//! bounded integer solutions of the linear system.

use num_rational::Ratio;

use crate::group::{element_order, FinMatGroup};
use crate::matrix::IntMat3;

type Q = Ratio<i64>;

pub const DEFAULT_BOUND: i64 = 3;

/// Rows of the 9×9 system `P·g − g'·P = 0` in the entries of P (row-major).
fn intertwining_rows(g: &IntMat3, gp: &IntMat3) -> Vec<[i64; 9]> {
    let mut rows = Vec::with_capacity(9);
    for i in 0..3 {
        for j in 0..3 {
            let mut row = [0i64; 9];
            for k in 0..3 {
                row[3 * i + k] += g.0[k][j];
                row[3 * k + j] -= gp.0[i][k];
            }
            rows.push(row);
        }
    }
    rows
}

/// Reduced row echelon form; returns the pivot rows and pivot columns.
fn rref(rows: &[[i64; 9]]) -> (Vec<[Q; 9]>, Vec<usize>) {
    let mut m: Vec<[Q; 9]> = rows.iter().map(|r| r.map(Q::from_integer)).collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..9 {
        let Some(p) = (r..m.len()).find(|&i| m[i][c] != Q::from_integer(0)) else {
            continue;
        };
        m.swap(r, p);
        let lead = m[r][c];
        for x in m[r].iter_mut() {
            *x /= lead;
        }
        for i in 0..m.len() {
            if i != r && m[i][c] != Q::from_integer(0) {
                let f = m[i][c];
                let pivot_row = m[r];
                for (x, y) in m[i].iter_mut().zip(pivot_row.iter()) {
                    *x -= f * *y;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == m.len() {
            break;
        }
    }
    m.truncate(r);
    (m, pivots)
}

/// `0, 1, −1, 2, −2, …, bound, −bound`.
fn search_values(bound: i64) -> Vec<i64> {
    let mut v = vec![0];
    for k in 1..=bound {
        v.push(k);
        v.push(-k);
    }
    v
}

fn conjugates_onto(p: &IntMat3, g1: &FinMatGroup, g2: &FinMatGroup) -> bool {
    let Some(inv) = p.inverse() else {
        return false;
    };
    g1.order() == g2.order() && g1.generators().iter().all(|g| g2.contains(&(*p * *g * inv)))
}

fn solve_for_images(
    gens: &[IntMat3],
    images: &[IntMat3],
    g1: &FinMatGroup,
    g2: &FinMatGroup,
    values: &[i64],
) -> Option<IntMat3> {
    let rows: Vec<[i64; 9]> = gens
        .iter()
        .zip(images)
        .flat_map(|(g, gp)| intertwining_rows(g, gp))
        .collect();
    let (reduced, pivots) = rref(&rows);
    let free: Vec<usize> = (0..9).filter(|c| !pivots.contains(c)).collect();
    if free.is_empty() {
        return None;
    }
    let bound = *values.iter().max().expect("nonempty");
    let mut idx = vec![0usize; free.len()];
    loop {
        let mut entries = [Q::from_integer(0); 9];
        for (slot, &c) in free.iter().enumerate() {
            entries[c] = Q::from_integer(values[idx[slot]]);
        }
        for (row, &pc) in reduced.iter().zip(&pivots) {
            let s: Q = free.iter().map(|&c| row[c] * entries[c]).sum();
            entries[pc] = -s;
        }
        if entries
            .iter()
            .all(|x| x.is_integer() && x.to_integer().abs() <= bound)
        {
            let p = IntMat3::from_entries(entries.map(|x| x.to_integer()));
            if p.det().abs() == 1 && conjugates_onto(&p, g1, g2) {
                return Some(p);
            }
        }
        // odometer over the free coordinates, last one fastest
        let mut k = free.len();
        loop {
            if k == 0 {
                return None;
            }
            k -= 1;
            idx[k] += 1;
            if idx[k] < values.len() {
                break;
            }
            idx[k] = 0;
        }
    }
}

/// A matrix with entries in `[−bound, bound]`, `|det| = 1` and
/// `P·G1·P⁻¹ = G2`, or `None` when the bounded search is exhausted (which
/// does not prove the groups are not conjugate).
pub fn bounded_conjugacy_search(g1: &FinMatGroup, g2: &FinMatGroup, bound: i64) -> Option<IntMat3> {
    assert!(bound >= 1, "bound must be positive");
    if g1.order() != g2.order() {
        return None;
    }
    if g1.elements() == g2.elements() {
        return Some(IntMat3::IDENTITY);
    }
    let gens: Vec<IntMat3> = g1.generators().to_vec();
    let orders: Vec<usize> = gens
        .iter()
        .map(|g| element_order(g).expect("finite group element"))
        .collect();
    let candidates: Vec<Vec<IntMat3>> = orders
        .iter()
        .map(|&k| {
            g2.elements()
                .iter()
                .filter(|x| element_order(x).map(|o| o == k).unwrap_or(false))
                .copied()
                .collect()
        })
        .collect();
    if candidates.iter().any(|c| c.is_empty()) {
        return None;
    }
    let values = search_values(bound);
    let mut idx = vec![0usize; gens.len()];
    loop {
        let images: Vec<IntMat3> = idx.iter().zip(&candidates).map(|(&i, c)| c[i]).collect();
        if let Some(p) = solve_for_images(&gens, &images, g1, g2, &values) {
            return Some(p);
        }
        let mut k = gens.len();
        loop {
            if k == 0 {
                return None;
            }
            k -= 1;
            idx[k] += 1;
            if idx[k] < candidates[k].len() {
                break;
            }
            idx[k] = 0;
        }
    }
}
