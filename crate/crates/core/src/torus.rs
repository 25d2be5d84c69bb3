//! Torsion model of A³ = ℤ³ ⊗ A.
//!
//! A[N] ≅ (ℤ/N)² and G acts through the ℤ³ factor, so an N-torsion point is
//! a pair of vectors in (ℤ/N)³ moved simultaneously by each matrix.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::error::{KummerError, Result};
use crate::group::{all_subgroups, iso_type, FinMatGroup, IsoType};
use crate::matrix::{lcm, primitive, IntMat3, Vec3};
use crate::snf::{snf3, solve_mod, IntMatrix};

pub const DEFAULT_LEVEL_FLOOR: i64 = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct TorsionLevel(pub i64);

impl TorsionLevel {
    pub fn get(self) -> i64 {
        self.0
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct TorsionPoint {
    pub level: i64,
    pub a: Vec3,
    pub b: Vec3,
}

fn reduce(v: Vec3, n: i64) -> Vec3 {
    [v[0].rem_euclid(n), v[1].rem_euclid(n), v[2].rem_euclid(n)]
}

impl TorsionPoint {
    pub fn new(level: TorsionLevel, a: Vec3, b: Vec3) -> Self {
        let n = level.0;
        TorsionPoint {
            level: n,
            a: reduce(a, n),
            b: reduce(b, n),
        }
    }

    pub fn origin(level: TorsionLevel) -> Self {
        TorsionPoint::new(level, [0; 3], [0; 3])
    }

    pub fn act(&self, g: &IntMat3) -> TorsionPoint {
        TorsionPoint {
            level: self.level,
            a: g.apply_mod(&self.a, self.level),
            b: g.apply_mod(&self.b, self.level),
        }
    }

    /// The same point viewed at a multiple of its level.
    pub fn rescale(&self, level: i64) -> TorsionPoint {
        assert_eq!(level % self.level, 0, "can only rescale to a multiple");
        let k = level / self.level;
        TorsionPoint {
            level,
            a: self.a.map(|x| x * k),
            b: self.b.map(|x| x * k),
        }
    }

    /// Equality as points of A³, comparing at the common level.
    pub fn same_point(&self, other: &TorsionPoint) -> bool {
        let l = lcm(self.level, other.level);
        self.rescale(l) == other.rescale(l)
    }
}

/// One component `offset + direction ⊗ A` of the fixed locus of a cyclic
/// group.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct FixedCurveComponent {
    pub direction: Vec3,
    /// Canonical offset: lexicographically minimal representative of the
    /// translation class in each copy.
    pub offset: TorsionPoint,
    /// Generator of the cyclic group whose fixed locus this belongs to.
    pub generator: IntMat3,
}

/// Lexicographically smallest `x + k·v (mod n)` over `k`.
pub fn canonical_offset(x: Vec3, v: Vec3, n: i64) -> Vec3 {
    (0..n)
        .map(|k| reduce([x[0] + k * v[0], x[1] + k * v[1], x[2] + k * v[2]], n))
        .min()
        .expect("n >= 1")
}

impl FixedCurveComponent {
    pub fn new(direction: Vec3, point: TorsionPoint, generator: IntMat3) -> Self {
        let direction = primitive(direction);
        let n = point.level;
        FixedCurveComponent {
            direction,
            offset: TorsionPoint {
                level: n,
                a: canonical_offset(point.a, direction, n),
                b: canonical_offset(point.b, direction, n),
            },
            generator,
        }
    }

    pub fn contains(&self, p: &TorsionPoint) -> bool {
        let n = self.offset.level;
        let p = if p.level == n { *p } else { p.rescale(n) };
        canonical_offset(p.a, self.direction, n) == self.offset.a
            && canonical_offset(p.b, self.direction, n) == self.offset.b
    }

    /// Image under `g`, as a component of the fixed locus of `g h g⁻¹`.
    pub fn act(&self, g: &IntMat3) -> FixedCurveComponent {
        let inv = g.inverse().expect("unimodular");
        FixedCurveComponent::new(
            g.apply(&self.direction),
            self.offset.act(g),
            *g * self.generator * inv,
        )
    }

    /// Same curve in A³, regardless of which generator it was computed for.
    pub fn same_curve(&self, other: &FixedCurveComponent) -> bool {
        self.direction == other.direction && self.offset == other.offset
    }

    /// Whether `g` fixes every point of the component.
    pub fn fixed_pointwise_by(&self, g: &IntMat3) -> bool {
        g.apply(&self.direction) == self.direction && self.offset.act(g) == self.offset
    }

    /// `c` with `x ≡ y + c·direction` in one copy of (ℤ/N)³, if any.
    fn shift_between(&self, x: Vec3, y: Vec3) -> Option<i64> {
        let n = self.offset.level;
        let v = self.direction;
        (0..n).find(|&c| reduce([y[0] + c * v[0], y[1] + c * v[1], y[2] + c * v[2]], n) == reduce(x, n))
    }

    /// The affine map induced on the curve by `g` (which must stabilize it
    /// as a set): `g` acts on the direction by a sign and moves the base
    /// point by a shift in each copy of A[N].
    pub fn affine_map(&self, g: &IntMat3) -> Option<AffineMap> {
        let gv = g.apply(&self.direction);
        let sign = if gv == self.direction {
            1
        } else if gv == self.direction.map(|x| -x) {
            -1
        } else {
            return None;
        };
        let moved = self.offset.act(g);
        let shift_a = self.shift_between(moved.a, self.offset.a)?;
        let shift_b = self.shift_between(moved.b, self.offset.b)?;
        Some(AffineMap {
            sign,
            shift: (shift_a, shift_b),
        })
    }
}

/// `z ↦ sign·z + shift` on the curve, shifts as elements of A[N] ≅ (ℤ/N)².
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct AffineMap {
    pub sign: i64,
    pub shift: (i64, i64),
}

impl AffineMap {
    pub fn is_translation(&self) -> bool {
        self.sign == 1 && self.shift != (0, 0)
    }
}

#[derive(Clone, Debug)]
pub struct IsotropyPoint {
    pub point: TorsionPoint,
    pub isotropy: FinMatGroup,
    pub iso: IsoType,
    pub orbit_id: usize,
}

/// Smith invariants `(d1, d2)` of `h − I`, failing unless the rank is 2.
pub fn curve_invariants(h: &IntMat3) -> Result<(i64, i64)> {
    let snf = snf3(&(*h - IntMat3::IDENTITY));
    let rank = snf.rank();
    if rank != 2 {
        return Err(KummerError::RankDegenerate { matrix: *h, rank });
    }
    let d = snf.diagonal();
    Ok((d[0], d[1]))
}

/// lcm of 12 and every `d1·d2` of `h − I` over the nonidentity elements.
pub fn working_level(g: &FinMatGroup) -> TorsionLevel {
    let mut n = DEFAULT_LEVEL_FLOOR;
    for h in g.elements() {
        if h.is_identity() {
            continue;
        }
        if let Ok((d1, d2)) = curve_invariants(h) {
            n = lcm(n, d1 * d2);
        }
    }
    TorsionLevel(n)
}

/// Components of the fixed locus of `h` at level `n`, sorted.
pub fn fixed_components(h: &IntMat3, n: TorsionLevel) -> Result<Vec<FixedCurveComponent>> {
    let m = *h - IntMat3::IDENTITY;
    let snf = snf3(&m);
    let rank = snf.rank();
    if rank != 2 {
        return Err(KummerError::RankDegenerate { matrix: *h, rank });
    }
    let [d1, d2, _] = snf.diagonal();
    let level = n.0;
    for d in [d1, d2] {
        if level % d != 0 {
            return Err(KummerError::LevelTooSmall { level, needed: d });
        }
    }
    let v = snf.v;
    let direction = primitive([v.0[0][2], v.0[1][2], v.0[2][2]]);
    debug_assert_eq!(m.apply(&direction), [0; 3]);

    let col = |j: usize| [v.0[0][j], v.0[1][j], v.0[2][j]];
    let (c1, c2) = (col(0), col(1));
    let mut offsets = Vec::new();
    for y1 in 0..d1 {
        for y2 in 0..d2 {
            let s1 = y1 * (level / d1);
            let s2 = y2 * (level / d2);
            offsets.push([
                s1 * c1[0] + s2 * c2[0],
                s1 * c1[1] + s2 * c2[1],
                s1 * c1[2] + s2 * c2[2],
            ]);
        }
    }
    let mut out: Vec<FixedCurveComponent> = offsets
        .iter()
        .flat_map(|a| {
            offsets
                .iter()
                .map(move |b| FixedCurveComponent::new(direction, TorsionPoint::new(n, *a, *b), *h))
        })
        .collect();
    out.sort();
    out.dedup();
    debug_assert_eq!(out.len() as i64, (d1 * d2) * (d1 * d2));
    Ok(out)
}

pub fn isotropy_group(g: &FinMatGroup, p: &TorsionPoint) -> FinMatGroup {
    FinMatGroup::from_elements(g.elements().iter().filter(|x| p.act(x) == *p).copied().collect())
}

/// All points of A³[N] whose isotropy is not cyclic, sorted, each tagged with
/// a G-orbit id. Orbit ids number the orbits in order of their smallest
/// point.
pub fn noncyclic_points(g: &FinMatGroup, n: TorsionLevel) -> Result<Vec<IsotropyPoint>> {
    let level = n.0;
    let mut candidates: BTreeSet<TorsionPoint> = BTreeSet::new();
    for rec in all_subgroups(g)? {
        if rec.cyclic {
            continue;
        }
        let blocks: Vec<IntMat3> = rec
            .subgroup
            .generators()
            .iter()
            .map(|h| *h - IntMat3::IDENTITY)
            .collect();
        let sols = solve_mod(&IntMatrix::stack(&blocks), level)
            .map_err(|needed| KummerError::LevelTooSmall { level, needed })?;
        let vecs: Vec<Vec3> = sols.iter().map(|s| [s[0], s[1], s[2]]).collect();
        for a in &vecs {
            for b in &vecs {
                candidates.insert(TorsionPoint::new(n, *a, *b));
            }
        }
    }

    let mut points = Vec::new();
    for p in candidates {
        let stab = isotropy_group(g, &p);
        if stab.is_cyclic() {
            continue;
        }
        let iso = iso_type(&stab)?;
        points.push((p, stab, iso));
    }

    let index: BTreeMap<TorsionPoint, usize> =
        points.iter().enumerate().map(|(i, (p, _, _))| (*p, i)).collect();
    let mut orbit_of = vec![usize::MAX; points.len()];
    let mut next = 0;
    for i in 0..points.len() {
        if orbit_of[i] != usize::MAX {
            continue;
        }
        for x in g.elements() {
            let j = index[&points[i].0.act(x)];
            orbit_of[j] = next;
        }
        next += 1;
    }

    Ok(points
        .into_iter()
        .zip(orbit_of)
        .map(|((point, isotropy, iso), orbit_id)| IsotropyPoint {
            point,
            isotropy,
            iso,
            orbit_id,
        })
        .collect())
}

pub fn incident_points<'a>(k: &FixedCurveComponent, pts: &'a [IsotropyPoint]) -> Vec<&'a IsotropyPoint> {
    pts.iter().filter(|p| k.contains(&p.point)).collect()
}

/// Number of orbits per isomorphism type of the isotropy group.
pub fn orbit_census(pts: &[IsotropyPoint]) -> BTreeMap<IsoType, usize> {
    let mut seen = BTreeSet::new();
    let mut census = BTreeMap::new();
    for p in pts {
        if seen.insert(p.orbit_id) {
            *census.entry(p.iso).or_insert(0) += 1;
        }
    }
    census
}
