//! 3×3 integer matrices acting on ℤ³ (and, coordinatewise, on torsion of A³).

use std::fmt;
use std::ops::{Mul, Sub};

use serde::{Deserialize, Serialize};

/// A 3×3 integer matrix, row-major.
///
/// The derived ordering is lexicographic on the nine entries read row by
/// row, which is the canonical order used for group elements everywhere.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct IntMat3(pub [[i64; 3]; 3]);

pub type Vec3 = [i64; 3];

impl IntMat3 {
    pub const IDENTITY: IntMat3 = IntMat3([[1, 0, 0], [0, 1, 0], [0, 0, 1]]);
    pub const ZERO: IntMat3 = IntMat3([[0; 3]; 3]);

    pub fn new(rows: [[i64; 3]; 3]) -> Self {
        IntMat3(rows)
    }

    pub fn diag(a: i64, b: i64, c: i64) -> Self {
        IntMat3([[a, 0, 0], [0, b, 0], [0, 0, c]])
    }

    pub fn rows(&self) -> &[[i64; 3]; 3] {
        &self.0
    }

    pub fn entries(&self) -> [i64; 9] {
        let m = &self.0;
        [
            m[0][0], m[0][1], m[0][2], m[1][0], m[1][1], m[1][2], m[2][0], m[2][1], m[2][2],
        ]
    }

    pub fn from_entries(e: [i64; 9]) -> Self {
        IntMat3([[e[0], e[1], e[2]], [e[3], e[4], e[5]], [e[6], e[7], e[8]]])
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::IDENTITY
    }

    pub fn det(&self) -> i64 {
        let m = &self.0;
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    }

    pub fn trace(&self) -> i64 {
        self.0[0][0] + self.0[1][1] + self.0[2][2]
    }

    /// Sum of the principal 2×2 minors (second coefficient of the
    /// characteristic polynomial).
    pub fn principal_minor_sum(&self) -> i64 {
        let m = &self.0;
        (m[0][0] * m[1][1] - m[0][1] * m[1][0])
            + (m[0][0] * m[2][2] - m[0][2] * m[2][0])
            + (m[1][1] * m[2][2] - m[1][2] * m[2][1])
    }

    pub fn transpose(&self) -> Self {
        let m = &self.0;
        IntMat3([
            [m[0][0], m[1][0], m[2][0]],
            [m[0][1], m[1][1], m[2][1]],
            [m[0][2], m[1][2], m[2][2]],
        ])
    }

    pub fn adjugate(&self) -> Self {
        let m = &self.0;
        let c = |r0: usize, r1: usize, c0: usize, c1: usize| m[r0][c0] * m[r1][c1] - m[r0][c1] * m[r1][c0];
        IntMat3([
            [c(1, 2, 1, 2), -c(0, 2, 1, 2), c(0, 1, 1, 2)],
            [-c(1, 2, 0, 2), c(0, 2, 0, 2), -c(0, 1, 0, 2)],
            [c(1, 2, 0, 1), -c(0, 2, 0, 1), c(0, 1, 0, 1)],
        ])
    }

    /// Inverse of a unimodular matrix; `None` when |det| ≠ 1.
    pub fn inverse(&self) -> Option<Self> {
        match self.det() {
            1 => Some(self.adjugate()),
            -1 => Some(self.adjugate().scale(-1)),
            _ => None,
        }
    }

    pub fn scale(&self, k: i64) -> Self {
        let mut out = *self;
        for row in out.0.iter_mut() {
            for x in row.iter_mut() {
                *x *= k;
            }
        }
        out
    }

    pub fn apply(&self, v: &Vec3) -> Vec3 {
        let m = &self.0;
        [
            m[0][0] * v[0] + m[0][1] * v[1] + m[0][2] * v[2],
            m[1][0] * v[0] + m[1][1] * v[1] + m[1][2] * v[2],
            m[2][0] * v[0] + m[2][1] * v[1] + m[2][2] * v[2],
        ]
    }

    /// `self · v` reduced into `[0, n)` coordinatewise.
    pub fn apply_mod(&self, v: &Vec3, n: i64) -> Vec3 {
        let w = self.apply(v);
        [w[0].rem_euclid(n), w[1].rem_euclid(n), w[2].rem_euclid(n)]
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::IDENTITY;
        for _ in 0..k {
            acc = acc * *self;
        }
        acc
    }

    pub fn max_abs_entry(&self) -> i64 {
        self.entries().iter().map(|x| x.abs()).max().unwrap_or(0)
    }
}

impl Mul for IntMat3 {
    type Output = IntMat3;

    fn mul(self, rhs: IntMat3) -> IntMat3 {
        let a = &self.0;
        let b = &rhs.0;
        let mut out = [[0i64; 3]; 3];
        for (i, row) in out.iter_mut().enumerate() {
            for (j, x) in row.iter_mut().enumerate() {
                *x = a[i][0] * b[0][j] + a[i][1] * b[1][j] + a[i][2] * b[2][j];
            }
        }
        IntMat3(out)
    }
}

impl Sub for IntMat3 {
    type Output = IntMat3;

    fn sub(self, rhs: IntMat3) -> IntMat3 {
        let mut out = self.0;
        for (i, row) in out.iter_mut().enumerate() {
            for (j, x) in row.iter_mut().enumerate() {
                *x -= rhs.0[i][j];
            }
        }
        IntMat3(out)
    }
}

impl fmt::Display for IntMat3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let m = &self.0;
        write!(
            f,
            "[[{},{},{}],[{},{},{}],[{},{},{}]]",
            m[0][0], m[0][1], m[0][2], m[1][0], m[1][1], m[1][2], m[2][0], m[2][1], m[2][2]
        )
    }
}

impl fmt::Debug for IntMat3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

pub fn gcd(a: i64, b: i64) -> i64 {
    num_integer::gcd(a, b)
}

pub fn lcm(a: i64, b: i64) -> i64 {
    num_integer::lcm(a, b)
}

/// Divides out the gcd and fixes the sign so the first nonzero entry is
/// positive. The zero vector is returned unchanged.
pub fn primitive(v: Vec3) -> Vec3 {
    let g = v.iter().fold(0, |acc, &x| gcd(acc, x));
    if g == 0 {
        return v;
    }
    let mut w = [v[0] / g, v[1] / g, v[2] / g];
    if w.iter().find(|&&x| x != 0).copied().unwrap_or(0) < 0 {
        w = [-w[0], -w[1], -w[2]];
    }
    w
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_of_unimodular() {
        let m = IntMat3::new([[1, 1, 1], [0, -1, 0], [0, 0, -1]]);
        let inv = m.inverse().unwrap();
        assert_eq!(m * inv, IntMat3::IDENTITY);
        assert!(IntMat3::diag(2, 1, 1).inverse().is_none());
    }

    #[test]
    fn ordering_is_lexicographic_on_entries() {
        let a = IntMat3::from_entries([0, 0, 1, 0, 0, 0, 0, 0, 0]);
        let b = IntMat3::from_entries([0, 1, -5, 0, 0, 0, 0, 0, 0]);
        assert!(a < b);
        assert!(IntMat3::diag(-1, 1, 1) < IntMat3::IDENTITY);
    }

    #[test]
    fn primitive_vectors() {
        assert_eq!(primitive([0, -2, 4]), [0, 1, -2]);
        assert_eq!(primitive([3, 0, 0]), [1, 0, 0]);
        assert_eq!(primitive([0, 0, 0]), [0, 0, 0]);
    }
}
