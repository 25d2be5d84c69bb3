//! Integer and equivariant Poincaré polynomials.
//!
//! Weyl groups of curve components are elementary abelian 2-groups of rank
//! at most 2. An element is a bit mask over a chosen basis and character
//! `c` takes the value `(-1)^popcount(c & m)` on element `m`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{KummerError, Result};
use crate::group::{FinMatGroup, IsoType};
use crate::matrix::IntMat3;
use crate::strata::StrataAnalysis;

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntPoly {
    coeffs: Vec<i64>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<i64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn zero() -> Self {
        IntPoly::default()
    }

    pub fn constant(c: i64) -> Self {
        IntPoly::new(vec![c])
    }

    /// Lowest degree first.
    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> i64 {
        self.coeffs.get(k).copied().unwrap_or(0)
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn eval(&self, t: i64) -> i64 {
        self.coeffs.iter().rev().fold(0, |acc, c| acc * t + c)
    }

    pub fn scale(&self, k: i64) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    /// Exact division of every coefficient; `None` if some coefficient is
    /// not divisible.
    pub fn div_exact(&self, k: i64) -> Option<IntPoly> {
        if self.coeffs.iter().any(|c| c % k != 0) {
            return None;
        }
        Some(IntPoly::new(self.coeffs.iter().map(|c| c / k).collect()))
    }

    pub fn is_palindromic(&self, degree: usize) -> bool {
        (0..=degree).all(|i| self.coeff(i) == self.coeff(degree - i))
    }
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![0; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::new(out)
    }
}

impl Add for IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: IntPoly) -> IntPoly {
        &self + &rhs
    }
}

impl Sub for IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: IntPoly) -> IntPoly {
        &self - &rhs
    }
}

impl Neg for IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        self.scale(-1)
    }
}

impl std::iter::Sum for IntPoly {
    fn sum<I: Iterator<Item = IntPoly>>(iter: I) -> IntPoly {
        iter.fold(IntPoly::zero(), |a, b| a + b)
    }
}

/// Highest degree first, e.g. `t^6 + 3t^4 - 2t + 1`.
impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let sign = if c < 0 { "-" } else { "+" };
            if first {
                if c < 0 {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let a = c.abs();
            match k {
                0 => write!(f, "{a}")?,
                _ => {
                    if a != 1 {
                        write!(f, "{a}")?;
                    }
                    if k == 1 {
                        f.write_str("t")?;
                    } else {
                        write!(f, "t^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl FromStr for IntPoly {
    type Err = String;

    /// Parses sums of terms `c`, `ct`, `ct^k` with optional signs and
    /// whitespace, e.g. `"t^6+51t^4 + 8t^3-2t+1"`.
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if s == "0" {
            return Ok(IntPoly::zero());
        }
        let mut coeffs = vec![0i64; 1];
        let bytes = s.as_bytes();
        let mut i = 0;
        if bytes.is_empty() {
            return Err("empty polynomial".into());
        }
        while i < bytes.len() {
            let mut sign = 1;
            match bytes[i] {
                b'+' => i += 1,
                b'-' => {
                    sign = -1;
                    i += 1
                }
                _ if i != 0 => return Err(format!("expected sign at offset {i}")),
                _ => {}
            }
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            let c: i64 = if i > start {
                s[start..i].parse().map_err(|e| format!("{e}"))?
            } else {
                1
            };
            let mut deg = 0usize;
            if i < bytes.len() && bytes[i] == b't' {
                i += 1;
                deg = 1;
                if i < bytes.len() && bytes[i] == b'^' {
                    i += 1;
                    let start = i;
                    while i < bytes.len() && bytes[i].is_ascii_digit() {
                        i += 1;
                    }
                    deg = s[start..i]
                        .parse()
                        .map_err(|_| format!("bad exponent at offset {start}"))?;
                }
            } else if i == start {
                return Err(format!("empty term at offset {start}"));
            }
            if coeffs.len() <= deg {
                coeffs.resize(deg + 1, 0);
            }
            coeffs[deg] += sign * c;
        }
        Ok(IntPoly::new(coeffs))
    }
}

impl Serialize for IntPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.coeffs.serialize(s)
    }
}

fn popcount_sign(c: usize, m: usize) -> i64 {
    if (c & m).count_ones().is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// A genuine representation of (ℤ₂)^rank, as multiplicities indexed by
/// character.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct CharVector {
    rank: u32,
    mult: Vec<u64>,
}

impl CharVector {
    pub fn zero(rank: u32) -> Self {
        assert!(rank <= 2, "Weyl groups of curve components have rank <= 2");
        CharVector {
            rank,
            mult: vec![0; 1 << rank],
        }
    }

    pub fn trivial(rank: u32, n: u64) -> Self {
        let mut v = CharVector::zero(rank);
        v.mult[0] = n;
        v
    }

    pub fn character(rank: u32, c: usize, n: u64) -> Self {
        let mut v = CharVector::zero(rank);
        v.mult[c] = n;
        v
    }

    pub fn from_mults(rank: u32, mult: Vec<u64>) -> Self {
        assert_eq!(mult.len(), 1 << rank);
        CharVector { rank, mult }
    }

    /// Decomposes a class function given by its values on the elements
    /// `0..2^rank` (as masks).
    pub fn from_class_function(rank: u32, values: &[i64]) -> Result<Self> {
        let size = 1usize << rank;
        assert_eq!(values.len(), size);
        let mut mult = Vec::with_capacity(size);
        for c in 0..size {
            let s: i64 = (0..size).map(|m| popcount_sign(c, m) * values[m]).sum();
            if s < 0 || s % size as i64 != 0 {
                return Err(KummerError::NotARepresentation(format!("{values:?}")));
            }
            mult.push((s / size as i64) as u64);
        }
        Ok(CharVector { rank, mult })
    }

    pub fn rank(&self) -> u32 {
        self.rank
    }

    pub fn mults(&self) -> &[u64] {
        &self.mult
    }

    pub fn dim(&self) -> u64 {
        self.mult.iter().sum()
    }

    pub fn trivial_mult(&self) -> u64 {
        self.mult[0]
    }

    pub fn value(&self, m: usize) -> i64 {
        self.mult
            .iter()
            .enumerate()
            .map(|(c, &k)| popcount_sign(c, m) * k as i64)
            .sum()
    }

    pub fn tensor(&self, other: &CharVector) -> CharVector {
        assert_eq!(self.rank, other.rank);
        let mut out = CharVector::zero(self.rank);
        for (a, &x) in self.mult.iter().enumerate() {
            for (b, &y) in other.mult.iter().enumerate() {
                out.mult[a ^ b] += x * y;
            }
        }
        out
    }

    pub fn plus(&self, other: &CharVector) -> CharVector {
        assert_eq!(self.rank, other.rank);
        CharVector {
            rank: self.rank,
            mult: self.mult.iter().zip(&other.mult).map(|(a, b)| a + b).collect(),
        }
    }
}

/// Renders `2 + ε` style for rank 1, multiplicity lists otherwise.
impl fmt::Display for CharVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: &[&str] = match self.rank {
            0 => &["1"],
            1 => &["1", "e"],
            _ => &["1", "x1", "x2", "x3"],
        };
        let mut parts = Vec::new();
        for (c, &k) in self.mult.iter().enumerate() {
            if k == 0 {
                continue;
            }
            parts.push(match (c, k) {
                (0, k) => k.to_string(),
                (_, 1) => names[c].to_string(),
                (_, k) => format!("{k}{}", names[c]),
            });
        }
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join(" + "))
        }
    }
}

/// A formal difference of two representations in canonical form: no
/// character appears in both parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VirtualChar {
    pub plus: CharVector,
    pub minus: CharVector,
}

impl VirtualChar {
    pub fn new(plus: CharVector, minus: CharVector) -> Self {
        assert_eq!(plus.rank, minus.rank);
        let mut p = plus;
        let mut m = minus;
        for c in 0..p.mult.len() {
            let common = p.mult[c].min(m.mult[c]);
            p.mult[c] -= common;
            m.mult[c] -= common;
        }
        VirtualChar { plus: p, minus: m }
    }

    pub fn zero(rank: u32) -> Self {
        VirtualChar::new(CharVector::zero(rank), CharVector::zero(rank))
    }

    pub fn genuine(v: CharVector) -> Self {
        let r = v.rank;
        VirtualChar::new(v, CharVector::zero(r))
    }

    pub fn rank(&self) -> u32 {
        self.plus.rank
    }

    pub fn is_zero(&self) -> bool {
        self.plus.dim() == 0 && self.minus.dim() == 0
    }

    pub fn trivial_mult(&self) -> i64 {
        self.plus.trivial_mult() as i64 - self.minus.trivial_mult() as i64
    }

    pub fn dim(&self) -> i64 {
        self.plus.dim() as i64 - self.minus.dim() as i64
    }

    pub fn add(&self, o: &VirtualChar) -> VirtualChar {
        VirtualChar::new(self.plus.plus(&o.plus), self.minus.plus(&o.minus))
    }

    pub fn sub(&self, o: &VirtualChar) -> VirtualChar {
        VirtualChar::new(self.plus.plus(&o.minus), self.minus.plus(&o.plus))
    }

    pub fn tensor(&self, o: &VirtualChar) -> VirtualChar {
        let plus = self.plus.tensor(&o.plus).plus(&self.minus.tensor(&o.minus));
        let minus = self.plus.tensor(&o.minus).plus(&self.minus.tensor(&o.plus));
        VirtualChar::new(plus, minus)
    }
}

/// Polynomial in t with virtual-character coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquivPoly {
    rank: u32,
    coeffs: Vec<VirtualChar>,
}

impl EquivPoly {
    pub fn zero(rank: u32) -> Self {
        EquivPoly {
            rank,
            coeffs: Vec::new(),
        }
    }

    pub fn from_chars(rank: u32, coeffs: Vec<CharVector>) -> Self {
        EquivPoly::from_virtual(rank, coeffs.into_iter().map(VirtualChar::genuine).collect())
    }

    pub fn from_virtual(rank: u32, mut coeffs: Vec<VirtualChar>) -> Self {
        assert!(coeffs.iter().all(|c| c.rank() == rank));
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        EquivPoly { rank, coeffs }
    }

    /// A constant polynomial.
    pub fn constant(v: CharVector) -> Self {
        let r = v.rank;
        EquivPoly::from_chars(r, vec![v])
    }

    pub fn rank(&self) -> u32 {
        self.rank
    }

    pub fn coeffs(&self) -> &[VirtualChar] {
        &self.coeffs
    }

    fn coeff(&self, k: usize) -> VirtualChar {
        self.coeffs
            .get(k)
            .cloned()
            .unwrap_or_else(|| VirtualChar::zero(self.rank))
    }

    pub fn add(&self, o: &EquivPoly) -> EquivPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        EquivPoly::from_virtual(
            self.rank,
            (0..n).map(|k| self.coeff(k).add(&o.coeff(k))).collect(),
        )
    }

    pub fn sub(&self, o: &EquivPoly) -> EquivPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        EquivPoly::from_virtual(
            self.rank,
            (0..n).map(|k| self.coeff(k).sub(&o.coeff(k))).collect(),
        )
    }

    pub fn mul(&self, o: &EquivPoly) -> EquivPoly {
        assert_eq!(self.rank, o.rank);
        if self.coeffs.is_empty() || o.coeffs.is_empty() {
            return EquivPoly::zero(self.rank);
        }
        let mut out = vec![VirtualChar::zero(self.rank); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in o.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].add(&a.tensor(b));
            }
        }
        EquivPoly::from_virtual(self.rank, out)
    }

    /// Forgets the group action.
    pub fn dimensions(&self) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|c| c.dim()).collect())
    }
}

/// Per-degree multiplicity of the trivial character.
pub fn mu0(p: &EquivPoly) -> IntPoly {
    IntPoly::new(p.coeffs.iter().map(|c| c.trivial_mult()).collect())
}

/// How the Weyl group of a component acts on it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum WeylActionType {
    Trivial,
    Involution,
    TranslationInvolution,
}

/// Cohomology of a fixed curve `A_K` as a W_K-representation, given the
/// sign by which each element of W_K (indexed by mask) acts on the tangent
/// line.
pub fn curve_cohomology_from_signs(rank: u32, signs: &[i64]) -> Result<EquivPoly> {
    let h1: Vec<i64> = signs.iter().map(|s| 2 * s).collect();
    Ok(EquivPoly::from_chars(
        rank,
        vec![
            CharVector::trivial(rank, 1),
            CharVector::from_class_function(rank, &h1)?,
            CharVector::trivial(rank, 1),
        ],
    ))
}

/// Curve cohomology in the standard basis for each action type. For the
/// translation-involution case, basis element 1 is the translation and
/// basis element 2 an involution.
pub fn curve_cohomology(action: WeylActionType) -> EquivPoly {
    let signs: &[i64] = match action {
        WeylActionType::Trivial => &[1],
        WeylActionType::Involution => &[1, -1],
        WeylActionType::TranslationInvolution => &[1, 1, -1, -1],
    };
    let rank = signs.len().trailing_zeros();
    curve_cohomology_from_signs(rank, signs).expect("sign characters are genuine")
}

/// `1 + R·t²` where R is the permutation character of W_K on the nontrivial
/// elements of a cyclic H (which index the exceptional curves of the A_n
/// resolution). `conj` lists, per W_K mask, a normalizer element
/// representing it.
pub fn fiber_cohomology_concrete(h: &FinMatGroup, rank: u32, conj: &[IntMat3]) -> Result<EquivPoly> {
    let values: Vec<i64> = conj
        .iter()
        .map(|w| {
            let inv = w.inverse().expect("unimodular");
            h.elements()
                .iter()
                .filter(|x| !x.is_identity() && *w * **x * inv == **x)
                .count() as i64
        })
        .collect();
    let r = CharVector::from_class_function(rank, &values)?;
    Ok(EquivPoly::from_chars(
        rank,
        vec![CharVector::trivial(rank, 1), CharVector::zero(rank), r],
    ))
}

/// The fiber polynomial from the McKay table: Z2 → 1, Z3 → 1 + ε, Z4 → 2 + ε,
/// Z6 → 3 + 2ε as coefficient of t², with W_K acting by inversion. A trivial
/// W_K gets the trivial character of the same dimension.
pub fn fiber_cohomology(h_type: IsoType, rank: u32) -> Result<EquivPoly> {
    let (fixed, swapped) = match h_type {
        IsoType::Z2 => (1, 0),
        IsoType::Z3 => (0, 1),
        IsoType::Z4 => (1, 1),
        IsoType::Z6 => (1, 2),
        other => {
            return Err(KummerError::UnsupportedCombination(format!(
                "fiber of non-cyclic or trivial group {other}"
            )))
        }
    };
    let r = match rank {
        0 => CharVector::trivial(0, fixed + 2 * swapped),
        1 => CharVector::from_mults(1, vec![fixed + swapped, swapped]),
        2 if h_type == IsoType::Z2 => CharVector::trivial(2, 1),
        _ => {
            return Err(KummerError::UnsupportedCombination(format!(
                "{h_type} with Weyl group of rank {rank}"
            )))
        }
    };
    Ok(EquivPoly::from_chars(
        rank,
        vec![CharVector::trivial(rank, 1), CharVector::zero(rank), r],
    ))
}

/// `1 + (#conjugacy classes − 1)·t²` for the exceptional fiber over a
/// point with isotropy `g`.
pub fn point_fiber_poincare(g: &FinMatGroup) -> IntPoly {
    IntPoly::new(vec![1, 0, g.conjugacy_classes().len() as i64 - 1])
}

/// Table values of [`point_fiber_poincare`] by isomorphism type.
pub fn point_fiber_table(iso: IsoType) -> Option<IntPoly> {
    let k = match iso {
        IsoType::D4 => 3,
        IsoType::D6 => 2,
        IsoType::D8 => 4,
        IsoType::D12 => 5,
        IsoType::A4 => 3,
        IsoType::S4 => 4,
        _ => return None,
    };
    Some(IntPoly::new(vec![1, 0, k]))
}

/// `(1/|G|) Σ det(I + t·g)²`: the invariant part of Λ•(ℂ² ⊗ ℂ³).
pub fn quotient_poincare(g: &FinMatGroup) -> IntPoly {
    let total: IntPoly = g
        .elements()
        .iter()
        .map(|x| {
            let p = IntPoly::new(vec![1, x.trace(), x.principal_minor_sum(), x.det()]);
            &p * &p
        })
        .sum();
    total
        .div_exact(g.order() as i64)
        .expect("averaged character is integral")
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StrataPolynomials {
    pub p_y: IntPoly,
    pub p3: IntPoly,
    pub p2: IntPoly,
    pub p1: IntPoly,
    pub p_x: IntPoly,
}

/// Virtual Poincaré polynomials of the strata of Y and their resolved
/// counterparts in X.
pub fn assemble(a: &StrataAnalysis) -> Result<StrataPolynomials> {
    let p_y = quotient_poincare(&a.group);
    let mut p2 = IntPoly::zero();
    let mut curves_in_y = IntPoly::zero();
    for class in &a.curves {
        for orbit in &class.orbits {
            let frame = &orbit.frame;
            let signs: Vec<i64> = frame.maps.iter().map(|m| m.sign).collect();
            let curve = curve_cohomology_from_signs(frame.rank, &signs)?;
            let fiber = fiber_cohomology_concrete(&class.subgroup, frame.rank, &frame.elements)?;
            let special = orbit
                .special_points
                .iter()
                .fold(CharVector::zero(frame.rank), |acc, s| acc.plus(&s.wk_rep));
            let removed = EquivPoly::constant(special);
            p2 = p2 + mu0(&curve.sub(&removed).mul(&fiber));
            let wk_orbits: usize = orbit.special_points.iter().map(|s| s.wk_orbits).sum();
            curves_in_y = curves_in_y + (mu0(&curve) - IntPoly::constant(wk_orbits as i64));
        }
    }
    let reps = a.orbit_representatives();
    let p1: IntPoly = reps.iter().map(|p| point_fiber_poincare(&p.isotropy)).sum();
    let p3 = &(&p_y - &curves_in_y) - &IntPoly::constant(reps.len() as i64);
    let p_x = &(&p3 + &p2) + &p1;
    Ok(StrataPolynomials { p_y, p3, p2, p1, p_x })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::closure;

    fn p(s: &str) -> IntPoly {
        s.parse().unwrap()
    }

    #[test]
    fn poly_parse_and_print() {
        let q = p("t^6 + 51t^4 + 8t^3 + 51t^2 + 1");
        assert_eq!(q.coeffs(), &[1, 0, 51, 8, 51, 0, 1]);
        assert_eq!(q.to_string(), "t^6 + 51t^4 + 8t^3 + 51t^2 + 1");
        assert_eq!(p("-3-2t^2+t^4").to_string(), "t^4 - 2t^2 - 3");
        assert_eq!(p("-t").coeffs(), &[0, -1]);
        assert_eq!(p("0"), IntPoly::zero());
        assert!("t^".parse::<IntPoly>().is_err());
        assert!("3x".parse::<IntPoly>().is_err());
    }

    #[test]
    fn decomposition_rejects_non_characters() {
        assert!(CharVector::from_class_function(1, &[1, 0]).is_err());
        assert!(CharVector::from_class_function(1, &[1, 3]).is_err());
        let v = CharVector::from_class_function(1, &[12, 0]).unwrap();
        assert_eq!(v.mults(), &[6, 6]);
    }

    #[test]
    fn mu0_of_s4_2_z2xz2_curve() {
        // (1 + 2χt + t²)(1 + t²) minus four special points with trivial fiber
        let curve = curve_cohomology(WeylActionType::TranslationInvolution);
        let fiber = fiber_cohomology(IsoType::Z2, 2).unwrap();
        let points = EquivPoly::constant(CharVector::trivial(2, 4));
        let v = curve.mul(&fiber).sub(&points.mul(&fiber));
        assert_eq!(mu0(&v), p("t^4 - 2t^2 - 3"));
    }

    #[test]
    fn mu0_of_s4_2_z4_curve() {
        let curve = curve_cohomology(WeylActionType::Involution);
        let fiber = fiber_cohomology(IsoType::Z4, 1).unwrap();
        let points = EquivPoly::constant(CharVector::trivial(1, 4));
        let v = curve.mul(&fiber).sub(&points.mul(&fiber));
        assert_eq!(mu0(&v), p("2t^4 + 2t^3 - 5t^2 - 3"));
    }

    #[test]
    fn mu0_of_trivial_polynomial_is_identity() {
        let e = EquivPoly::from_chars(
            0,
            vec![
                CharVector::trivial(0, 3),
                CharVector::trivial(0, 0),
                CharVector::trivial(0, 5),
            ],
        );
        assert_eq!(mu0(&e), p("5t^2 + 3"));
        assert_eq!(e.dimensions(), mu0(&e));
    }

    #[test]
    fn curve_types() {
        assert_eq!(mu0(&curve_cohomology(WeylActionType::Trivial)), p("t^2 + 2t + 1"));
        assert_eq!(mu0(&curve_cohomology(WeylActionType::Involution)), p("t^2 + 1"));
        assert_eq!(
            mu0(&curve_cohomology(WeylActionType::TranslationInvolution)),
            p("t^2 + 1")
        );
    }

    #[test]
    fn fiber_table() {
        let f = fiber_cohomology(IsoType::Z6, 1).unwrap();
        assert_eq!(f.coeffs()[2].plus.mults(), &[3, 2]);
        assert_eq!(mu0(&fiber_cohomology(IsoType::Z2, 1).unwrap()), p("t^2 + 1"));
        assert_eq!(mu0(&fiber_cohomology(IsoType::Z3, 0).unwrap()), p("2t^2 + 1"));
        assert!(fiber_cohomology(IsoType::Z3, 2).is_err());
    }

    #[test]
    fn concrete_fiber_matches_table() {
        // Z6 generated by a hexagonal rotation, W_K generated by an element
        // inverting it
        let r = IntMat3::new([[0, 1, 0], [-1, 1, 0], [0, 0, 1]]);
        let s = IntMat3::new([[0, 1, 0], [1, 0, 0], [0, 0, -1]]);
        let h = closure(&[r]).unwrap();
        let f = fiber_cohomology_concrete(&h, 1, &[IntMat3::IDENTITY, s]).unwrap();
        assert_eq!(f, fiber_cohomology(IsoType::Z6, 1).unwrap());
    }

    #[test]
    fn point_fibers() {
        let s4 = closure(&[
            IntMat3::new([[0, 1, 0], [1, 0, 0], [0, 0, -1]]),
            IntMat3::new([[0, 0, 1], [1, 0, 0], [0, 1, 0]]),
        ])
        .unwrap();
        assert_eq!(point_fiber_poincare(&s4), p("4t^2 + 1"));
        assert_eq!(point_fiber_table(IsoType::D12), Some(p("5t^2 + 1")));
        assert_eq!(point_fiber_table(IsoType::Z2), None);
    }

    #[test]
    fn quotient_poincare_small_cases() {
        assert_eq!(
            quotient_poincare(&FinMatGroup::trivial()),
            p("t^6+6t^5+15t^4+20t^3+15t^2+6t+1")
        );
        let d4 = closure(&[IntMat3::diag(-1, -1, 1), IntMat3::diag(1, -1, -1)]).unwrap();
        assert_eq!(quotient_poincare(&d4), p("t^6 + 3t^4 + 8t^3 + 3t^2 + 1"));
    }

    #[test]
    fn virtual_canonical_form() {
        let a = VirtualChar::new(
            CharVector::from_mults(1, vec![3, 1]),
            CharVector::from_mults(1, vec![1, 2]),
        );
        assert_eq!(a.plus.mults(), &[2, 0]);
        assert_eq!(a.minus.mults(), &[0, 1]);
        assert_eq!(a.dim(), 1);
    }
}
