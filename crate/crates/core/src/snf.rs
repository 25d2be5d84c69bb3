//! Smith normal form over ℤ for small dense matrices.
//!
//! The routine is written for arbitrary m×n shapes; the group code only ever
//! feeds it 3×3 blocks `h - I` or vertical stacks of them.

use crate::matrix::{IntMat3, Vec3};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = 1;
        }
        m
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        let mut m = Self::zeros(r, c);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), c, "ragged matrix");
            for (j, &x) in row.iter().enumerate() {
                m[(i, j)] = x;
            }
        }
        m
    }

    /// Vertical stack of 3×3 blocks.
    pub fn stack(blocks: &[IntMat3]) -> Self {
        let mut m = Self::zeros(3 * blocks.len(), 3);
        for (b, block) in blocks.iter().enumerate() {
            for i in 0..3 {
                for j in 0..3 {
                    m[(3 * b + i, j)] = block.0[i][j];
                }
            }
        }
        m
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[i64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<i64> {
        (0..self.rows).map(|i| self[(i, j)]).collect()
    }

    pub fn mul(&self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, rhs.rows, "shape mismatch");
        let mut out = IntMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a == 0 {
                    continue;
                }
                for j in 0..rhs.cols {
                    out[(i, j)] += a * rhs[(k, j)];
                }
            }
        }
        out
    }

    pub fn to_mat3(&self) -> Option<IntMat3> {
        if self.rows != 3 || self.cols != 3 {
            return None;
        }
        let mut m = [[0; 3]; 3];
        for (i, row) in m.iter_mut().enumerate() {
            for (j, x) in row.iter_mut().enumerate() {
                *x = self[(i, j)];
            }
        }
        Some(IntMat3(m))
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// row[dst] += k * row[src]
    fn add_row(&mut self, dst: usize, src: usize, k: i64) {
        for j in 0..self.cols {
            let v = self[(src, j)];
            self[(dst, j)] += k * v;
        }
    }

    /// col[dst] += k * col[src]
    fn add_col(&mut self, dst: usize, src: usize, k: i64) {
        for i in 0..self.rows {
            let v = self[(i, src)];
            self[(i, dst)] += k * v;
        }
    }

    fn negate_row(&mut self, r: usize) {
        for j in 0..self.cols {
            self[(r, j)] = -self[(r, j)];
        }
    }
}

impl From<IntMat3> for IntMatrix {
    fn from(m: IntMat3) -> Self {
        IntMatrix::from_rows(&m.0.iter().map(|r| r.to_vec()).collect::<Vec<_>>())
    }
}

impl std::ops::Index<(usize, usize)> for IntMatrix {
    type Output = i64;

    fn index(&self, (i, j): (usize, usize)) -> &i64 {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut i64 {
        &mut self.data[i * self.cols + j]
    }
}

/// `u · m · v = d` with `u`, `v` unimodular and `d` diagonal, nonnegative,
/// `d[0] | d[1] | ...`.
#[derive(Clone, Debug)]
pub struct SnfResult {
    pub u: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
}

impl SnfResult {
    pub fn invariants(&self) -> Vec<i64> {
        (0..self.d.rows.min(self.d.cols))
            .map(|i| self.d[(i, i)])
            .collect()
    }

    pub fn rank(&self) -> usize {
        self.invariants().iter().take_while(|&&x| x != 0).count()
    }

    /// The nonzero invariant factors.
    pub fn factors(&self) -> Vec<i64> {
        self.invariants().into_iter().filter(|&x| x != 0).collect()
    }
}

/// Smith normal form with deterministic pivoting: the pivot is the entry of
/// smallest nonzero absolute value in the remaining block, ties broken
/// row-major.
pub fn smith_normal_form(m: &IntMatrix) -> SnfResult {
    let (rows, cols) = (m.rows, m.cols);
    let mut d = m.clone();
    let mut u = IntMatrix::identity(rows);
    let mut v = IntMatrix::identity(cols);

    for t in 0..rows.min(cols) {
        while let Some((pi, pj)) = pick_pivot(&d, t) {
            d.swap_rows(t, pi);
            u.swap_rows(t, pi);
            d.swap_cols(t, pj);
            v.swap_cols(t, pj);

            let p = d[(t, t)];
            let mut dirty = false;
            for i in t + 1..rows {
                let q = d[(i, t)].div_euclid(p);
                if q != 0 {
                    d.add_row(i, t, -q);
                    u.add_row(i, t, -q);
                }
                dirty |= d[(i, t)] != 0;
            }
            for j in t + 1..cols {
                let q = d[(t, j)].div_euclid(p);
                if q != 0 {
                    d.add_col(j, t, -q);
                    v.add_col(j, t, -q);
                }
                dirty |= d[(t, j)] != 0;
            }
            if dirty {
                continue;
            }

            // Row and column are clear; enforce divisibility into the rest.
            let offender = (t + 1..rows)
                .flat_map(|i| (t + 1..cols).map(move |j| (i, j)))
                .find(|&(i, j)| d[(i, j)] % p != 0);
            match offender {
                Some((i, _)) => {
                    d.add_row(t, i, 1);
                    u.add_row(t, i, 1);
                }
                None => break,
            }
        }
        if d[(t, t)] < 0 {
            d.negate_row(t);
            u.negate_row(t);
        }
    }

    let result = SnfResult { u, d, v };
    debug_assert!(check_snf(m, &result));
    result
}

fn pick_pivot(d: &IntMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(i64, usize, usize)> = None;
    for i in t..d.rows {
        for j in t..d.cols {
            let a = d[(i, j)].abs();
            if a != 0 && best.is_none_or(|(b, _, _)| a < b) {
                best = Some((a, i, j));
            }
        }
    }
    best.map(|(_, i, j)| (i, j))
}

/// Recomputes `u · m · v` and checks shape, diagonality and the divisibility
/// chain.
pub fn check_snf(m: &IntMatrix, r: &SnfResult) -> bool {
    if r.u.mul(m).mul(&r.v) != r.d {
        return false;
    }
    for i in 0..r.d.rows {
        for j in 0..r.d.cols {
            if i != j && r.d[(i, j)] != 0 {
                return false;
            }
        }
    }
    let inv = r.invariants();
    if inv.iter().any(|&x| x < 0) {
        return false;
    }
    for w in inv.windows(2) {
        let (a, b) = (w[0], w[1]);
        if a == 0 {
            if b != 0 {
                return false;
            }
        } else if b % a != 0 {
            return false;
        }
    }
    true
}

/// SNF of a 3×3 matrix with the transforms returned as `IntMat3`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Snf3 {
    pub u: IntMat3,
    pub d: IntMat3,
    pub v: IntMat3,
}

impl Snf3 {
    pub fn diagonal(&self) -> Vec3 {
        [self.d.0[0][0], self.d.0[1][1], self.d.0[2][2]]
    }

    pub fn rank(&self) -> usize {
        self.diagonal().iter().filter(|&&x| x != 0).count()
    }
}

pub fn snf3(m: &IntMat3) -> Snf3 {
    let r = smith_normal_form(&IntMatrix::from(*m));
    let out = Snf3 {
        u: r.u.to_mat3().expect("3x3"),
        d: r.d.to_mat3().expect("3x3"),
        v: r.v.to_mat3().expect("3x3"),
    };
    assert_eq!(out.u * *m * out.v, out.d, "SNF identity failed for {m}");
    out
}

/// All `x ∈ (ℤ/n)^cols` with `m · x ≡ 0 (mod n)`, in lexicographic order.
///
/// Returns `Err(d)` with the first invariant factor `d` that does not divide
/// `n`: the torsion solutions of `m · x ∈ ℤ^rows` then have denominators the
/// level cannot represent.
pub fn solve_mod(m: &IntMatrix, n: i64) -> Result<Vec<Vec<i64>>, i64> {
    let snf = smith_normal_form(m);
    let cols = m.cols;
    let inv = snf.invariants();
    // step[j]: generator of the solution set for y_j in ℤ/n
    let mut steps = Vec::with_capacity(cols);
    for j in 0..cols {
        let dj = inv.get(j).copied().unwrap_or(0);
        if dj != 0 && n % dj != 0 {
            return Err(dj);
        }
        steps.push(if dj == 0 { 1 } else { n / dj });
    }
    let mut out = Vec::new();
    let counts: Vec<i64> = steps.iter().map(|s| n / s).collect();
    let total: i64 = counts.iter().product();
    for idx in 0..total {
        let mut rem = idx;
        let mut y = vec![0i64; cols];
        for j in (0..cols).rev() {
            y[j] = (rem % counts[j]) * steps[j];
            rem /= counts[j];
        }
        let x: Vec<i64> = (0..cols)
            .map(|i| (0..cols).map(|k| snf.v[(i, k)] * y[k]).sum::<i64>().rem_euclid(n))
            .collect();
        out.push(x);
    }
    out.sort();
    out.dedup();
    Ok(out)
}
