//! Stratification of the singular locus of A³/G: curves fixed by cyclic
//! subgroups, the Weyl-group action on their components, and the points of
//! non-cyclic isotropy lying on them.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::cohomology::{CharVector, WeylActionType};
use crate::error::{KummerError, Result};
use crate::group::{all_subgroups, coset_representatives, quotient_iso_type, FinMatGroup, IsoType};
use crate::matrix::{IntMat3, Vec3};
use crate::snf::snf3;
use crate::torus::{
    fixed_components, incident_points, noncyclic_points, orbit_census, working_level, AffineMap,
    FixedCurveComponent, IsotropyPoint, TorsionLevel,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum QuotientType {
    EllipticCurve,
    ProjectiveLine,
}

impl QuotientType {
    pub fn label(self) -> &'static str {
        match self {
            QuotientType::EllipticCurve => "A",
            QuotientType::ProjectiveLine => "P1",
        }
    }
}

/// Transversal singularity type `A_n` along a curve with cyclic isotropy of
/// order `n + 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Singularity {
    A1,
    A2,
    A3,
    A5,
}

impl Singularity {
    pub fn of(iso: IsoType) -> Option<Singularity> {
        match iso {
            IsoType::Z2 => Some(Singularity::A1),
            IsoType::Z3 => Some(Singularity::A2),
            IsoType::Z4 => Some(Singularity::A3),
            IsoType::Z6 => Some(Singularity::A5),
            _ => None,
        }
    }
}

impl fmt::Display for Singularity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// The Weyl group of a component realized by normalizer elements, indexed
/// by bit mask over a fixed basis.
#[derive(Clone, Debug, Serialize)]
pub struct WeylFrame {
    pub rank: u32,
    pub elements: Vec<IntMat3>,
    pub maps: Vec<AffineMap>,
}

impl WeylFrame {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn label(&self) -> &'static str {
        match self.rank {
            0 => "0",
            1 => "Z2",
            _ => "Z2xZ2",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpecialPointOnCurve {
    pub iso: IsoType,
    pub count_on_curve: usize,
    /// Distinct points of Y they map to.
    pub image_count: usize,
    /// Orbits of W_K on the point set, i.e. points on the normalized image
    /// curve.
    pub wk_orbits: usize,
    /// Permutation character of W_K on the point set.
    pub wk_rep: CharVector,
    pub passes_twice: bool,
    /// G-orbit ids of the points, sorted and deduplicated.
    #[serde(skip)]
    pub orbit_ids: Vec<usize>,
}

/// One N(H)-orbit of components of Fix(H) with isotropy exactly H, i.e. one
/// curve of the 1-dimensional stratum of Y.
#[derive(Clone, Debug, Serialize)]
pub struct CurveOrbit {
    pub representative: FixedCurveComponent,
    pub orbit_size: usize,
    pub wk_order: usize,
    pub action: WeylActionType,
    pub quotient_type: QuotientType,
    /// Degree of `A_K → A_K/W_K`, certified as the number of distinct affine
    /// maps induced by W_K.
    pub cover_degree: usize,
    pub special_points: Vec<SpecialPointOnCurve>,
    #[serde(skip)]
    pub frame: WeylFrame,
}

#[derive(Clone, Debug, Serialize)]
pub struct CurveClassRecord {
    pub generator: IntMat3,
    pub iso: IsoType,
    pub singularity: Singularity,
    /// Nonzero rows of `U·(h − I)` from the Smith form: the fixed locus is
    /// cut out by `row · x = 0` in A³.
    pub equations: Vec<Vec3>,
    pub components: usize,
    pub weyl: IsoType,
    pub weyl_order: usize,
    pub orbits: Vec<CurveOrbit>,
    #[serde(skip)]
    pub subgroup: FinMatGroup,
    #[serde(skip)]
    pub normalizer: FinMatGroup,
}

impl CurveClassRecord {
    /// Orbit counts grouped as `(quotient, W_K label) → count`, in the order
    /// P1 before A and by W_K order.
    pub fn quotient_summary(&self) -> Vec<(usize, QuotientType, &'static str)> {
        let mut m: BTreeMap<(QuotientType, usize), (usize, &'static str)> = BTreeMap::new();
        for o in &self.orbits {
            let e = m
                .entry((o.quotient_type, o.wk_order))
                .or_insert((0, o.frame.label()));
            e.0 += 1;
        }
        let mut out: Vec<_> = m.into_iter().map(|((q, _), (n, l))| (n, q, l)).collect();
        out.sort_by_key(|&(_, q, l)| (q == QuotientType::EllipticCurve, l.len(), l));
        out
    }
}

/// Everything the cohomology assembly and the reports need for one group.
#[derive(Clone, Debug)]
pub struct StrataAnalysis {
    pub group: FinMatGroup,
    pub level: TorsionLevel,
    pub points: Vec<IsotropyPoint>,
    pub census: BTreeMap<IsoType, usize>,
    pub curves: Vec<CurveClassRecord>,
}

impl StrataAnalysis {
    pub fn zero_orbit_count(&self) -> usize {
        self.census.values().sum()
    }

    /// One representative point per G-orbit, ordered by orbit id.
    pub fn orbit_representatives(&self) -> Vec<&IsotropyPoint> {
        let mut seen = BTreeSet::new();
        self.points.iter().filter(|p| seen.insert(p.orbit_id)).collect()
    }
}

/// Stratification at the default working level.
pub fn analyze(g: &FinMatGroup) -> Result<StrataAnalysis> {
    analyze_at(g, working_level(g))
}

pub fn analyze_at(g: &FinMatGroup, level: TorsionLevel) -> Result<StrataAnalysis> {
    let points = noncyclic_points(g, level)?;
    let census = orbit_census(&points);
    let curves = curve_records(g, level, &points)?;
    Ok(StrataAnalysis {
        group: g.clone(),
        level,
        points,
        census,
        curves,
    })
}

/// One record per conjugacy class of nontrivial cyclic subgroups.
pub fn curve_strata(g: &FinMatGroup) -> Result<Vec<CurveClassRecord>> {
    Ok(analyze(g)?.curves)
}

fn curve_records(
    g: &FinMatGroup,
    level: TorsionLevel,
    points: &[IsotropyPoint],
) -> Result<Vec<CurveClassRecord>> {
    let subs = all_subgroups(g)?;
    // class id -> (canonical generator, subgroup record), keeping the member
    // with the smallest canonical generator
    let mut reps: BTreeMap<usize, (IntMat3, usize)> = BTreeMap::new();
    for (i, s) in subs.iter().enumerate() {
        if !s.cyclic || s.subgroup.order() == 1 {
            continue;
        }
        let gen = s.subgroup.canonical_generator().expect("cyclic");
        let e = reps.entry(s.conjugacy_class_id).or_insert((gen, i));
        if gen < e.0 {
            *e = (gen, i);
        }
    }
    let mut records = reps
        .into_values()
        .map(|(gen, i)| curve_record(g, gen, &subs[i].subgroup, &subs[i].normalizer, level, points))
        .collect::<Result<Vec<_>>>()?;
    records.sort_by_key(|a| (a.iso, a.generator));
    Ok(records)
}

fn curve_record(
    g: &FinMatGroup,
    h: IntMat3,
    sub: &FinMatGroup,
    normalizer: &FinMatGroup,
    level: TorsionLevel,
    points: &[IsotropyPoint],
) -> Result<CurveClassRecord> {
    let iso = crate::group::iso_type(sub)?;
    let comps = fixed_components(&h, level)?;
    let snf = snf3(&(h - IntMat3::IDENTITY));
    let eq_matrix = snf.u * (h - IntMat3::IDENTITY);
    let equations = eq_matrix.0.iter().filter(|r| **r != [0; 3]).copied().collect();

    // components on which the isotropy is exactly H
    let retained: Vec<FixedCurveComponent> = comps
        .iter()
        .filter(|k| g.elements().iter().filter(|x| k.fixed_pointwise_by(x)).count() == sub.order())
        .copied()
        .collect();

    let mut assigned = vec![false; retained.len()];
    let mut orbits = Vec::new();
    for i in 0..retained.len() {
        if assigned[i] {
            continue;
        }
        let k = retained[i];
        let mut stab = Vec::new();
        for x in normalizer.elements() {
            let img = k.act(x);
            if img.same_curve(&k) {
                stab.push(*x);
            }
            if let Some(j) = retained.iter().position(|c| c.same_curve(&img)) {
                assigned[j] = true;
            }
        }
        let stab = FinMatGroup::from_elements(stab);
        let orbit_size = normalizer.order() / stab.order();
        let frame = weyl_frame(&k, &stab, sub)?;
        let action = classify_weyl_action(&k, &frame.maps)?;
        let quotient_type = match action {
            WeylActionType::Trivial => QuotientType::EllipticCurve,
            _ => QuotientType::ProjectiveLine,
        };
        let special_points = special_point_analysis(&k, &frame, points);
        orbits.push(CurveOrbit {
            representative: k,
            orbit_size,
            wk_order: frame.order(),
            action,
            quotient_type,
            cover_degree: frame.maps.len(),
            special_points,
            frame,
        });
    }

    Ok(CurveClassRecord {
        generator: h,
        iso,
        singularity: Singularity::of(iso).ok_or(KummerError::UnclassifiableGroup { order: sub.order() })?,
        equations,
        components: comps.len(),
        weyl: quotient_iso_type(normalizer, sub)?,
        weyl_order: normalizer.order() / sub.order(),
        orbits,
        subgroup: sub.clone(),
        normalizer: normalizer.clone(),
    })
}

/// Realizes `stab / h` with a mask basis: for rank 2 the translation is basis
/// element 1 and the smallest involution basis element 2.
fn weyl_frame(k: &FixedCurveComponent, stab: &FinMatGroup, h: &FinMatGroup) -> Result<WeylFrame> {
    let reps = coset_representatives(stab, h);
    let maps: Vec<AffineMap> = reps
        .iter()
        .map(|w| {
            k.affine_map(w)
                .ok_or_else(|| KummerError::UnexpectedAction(format!("{w} does not stabilize the curve")))
        })
        .collect::<Result<_>>()?;
    let unexpected =
        || KummerError::UnexpectedAction(format!("Weyl group of order {} acting by {:?}", reps.len(), maps));
    match reps.len() {
        1 => Ok(WeylFrame {
            rank: 0,
            elements: reps,
            maps,
        }),
        2 => Ok(WeylFrame {
            rank: 1,
            elements: reps,
            maps,
        }),
        4 => {
            let translations: Vec<usize> = (1..4).filter(|&i| maps[i].is_translation()).collect();
            if translations.len() != 1 {
                return Err(unexpected());
            }
            let t = translations[0];
            let invs: Vec<usize> = (1..4).filter(|&i| i != t).collect();
            let order = [0, t, invs[0], invs[1]];
            Ok(WeylFrame {
                rank: 2,
                elements: order.iter().map(|&i| reps[i]).collect(),
                maps: order.iter().map(|&i| maps[i]).collect(),
            })
        }
        _ => Err(unexpected()),
    }
}

fn compose(level: i64, a: &AffineMap, b: &AffineMap) -> AffineMap {
    // a ∘ b : z ↦ sa (sb z + cb) + ca
    AffineMap {
        sign: a.sign * b.sign,
        shift: (
            (a.sign * b.shift.0 + a.shift.0).rem_euclid(level),
            (a.sign * b.shift.1 + a.shift.1).rem_euclid(level),
        ),
    }
}

/// Classifies the action of W_K on its component from the induced affine
/// maps (identity first).
pub fn classify_weyl_action(k: &FixedCurveComponent, wk: &[AffineMap]) -> Result<WeylActionType> {
    let level = k.offset.level;
    let id = AffineMap {
        sign: 1,
        shift: (0, 0),
    };
    let distinct: BTreeSet<&AffineMap> = wk.iter().collect();
    let unexpected = |why: &str| KummerError::UnexpectedAction(format!("{why}: {wk:?}"));
    if wk.first() != Some(&id) || distinct.len() != wk.len() {
        return Err(unexpected("Weyl group does not act faithfully"));
    }
    match wk.len() {
        1 => Ok(WeylActionType::Trivial),
        2 if wk[1].sign == -1 => Ok(WeylActionType::Involution),
        4 => {
            let involutive = wk.iter().all(|m| compose(level, m, m) == id);
            let translations = wk[1..].iter().filter(|m| m.sign == 1).count();
            if involutive && translations == 1 {
                Ok(WeylActionType::TranslationInvolution)
            } else {
                Err(unexpected(
                    "order-4 Weyl group is not generated by a translation and an involution",
                ))
            }
        }
        _ => Err(unexpected("unsupported Weyl group")),
    }
}

/// Points of non-cyclic isotropy on `k`, grouped by isotropy type.
pub fn special_point_analysis(
    k: &FixedCurveComponent,
    frame: &WeylFrame,
    points: &[IsotropyPoint],
) -> Vec<SpecialPointOnCurve> {
    let on = incident_points(k, points);
    let mut by_iso: BTreeMap<IsoType, Vec<&IsotropyPoint>> = BTreeMap::new();
    for p in on {
        by_iso.entry(p.iso).or_default().push(p);
    }
    by_iso
        .into_iter()
        .map(|(iso, pts)| {
            let values: Vec<i64> = frame
                .elements
                .iter()
                .map(|w| pts.iter().filter(|p| p.point.act(w) == p.point).count() as i64)
                .collect();
            let wk_rep = CharVector::from_class_function(frame.rank, &values)
                .expect("permutation characters are genuine");
            let mut orbit_sets: BTreeSet<Vec<_>> = BTreeSet::new();
            for p in &pts {
                let mut o: Vec<_> = frame.elements.iter().map(|w| p.point.act(w)).collect();
                o.sort();
                o.dedup();
                orbit_sets.insert(o);
            }
            let orbit_ids: BTreeSet<usize> = pts.iter().map(|p| p.orbit_id).collect();
            SpecialPointOnCurve {
                iso,
                count_on_curve: pts.len(),
                image_count: orbit_ids.len(),
                wk_orbits: orbit_sets.len(),
                wk_rep,
                passes_twice: orbit_sets.len() > orbit_ids.len(),
                orbit_ids: orbit_ids.into_iter().collect(),
            }
        })
        .collect()
}

/// A conjugation-invariant summary of the singular strata.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Fingerprint {
    pub census: BTreeMap<IsoType, usize>,
    pub classes: Vec<ClassSummary>,
    pub incidence_components: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct ClassSummary {
    pub iso: IsoType,
    pub components: usize,
    pub weyl: IsoType,
    pub orbits: Vec<OrbitSummary>,
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct OrbitSummary {
    pub orbit_size: usize,
    pub wk_order: usize,
    pub quotient_type: QuotientType,
    /// `(iso, count, image count, W_K orbits, character, passes twice)`.
    pub special: Vec<(IsoType, usize, usize, usize, Vec<u64>, bool)>,
}

/// Multiplicities listed independently of which involution was chosen as
/// a basis element: the two characters exchanged by that choice are sorted.
fn canonical_mults(v: &CharVector) -> Vec<u64> {
    let m = v.mults();
    if v.rank() == 2 {
        vec![m[0], m[2], m[1].min(m[3]), m[1].max(m[3])]
    } else {
        m.to_vec()
    }
}

impl Fingerprint {
    pub fn canonical_string(&self) -> String {
        serde_json::to_string(self).expect("fingerprint serializes")
    }

    pub fn digest(&self) -> String {
        let hash = Sha256::digest(self.canonical_string().as_bytes());
        hash.iter().map(|b| format!("{b:02x}")).collect()
    }
}

pub fn fingerprint(a: &StrataAnalysis) -> Fingerprint {
    let mut classes: Vec<ClassSummary> = a
        .curves
        .iter()
        .map(|c| {
            let mut orbits: Vec<OrbitSummary> = c
                .orbits
                .iter()
                .map(|o| OrbitSummary {
                    orbit_size: o.orbit_size,
                    wk_order: o.wk_order,
                    quotient_type: o.quotient_type,
                    special: o
                        .special_points
                        .iter()
                        .map(|s| {
                            (
                                s.iso,
                                s.count_on_curve,
                                s.image_count,
                                s.wk_orbits,
                                canonical_mults(&s.wk_rep),
                                s.passes_twice,
                            )
                        })
                        .collect(),
                })
                .collect();
            orbits.sort();
            ClassSummary {
                iso: c.iso,
                components: c.components,
                weyl: c.weyl,
                orbits,
            }
        })
        .collect();
    classes.sort();
    Fingerprint {
        census: a.census.clone(),
        classes,
        incidence_components: incidence_components(a),
    }
}

/// Connected components of the graph whose vertices are the curves and
/// points of the singular locus of Y, joined when a point lies on a curve.
pub fn incidence_components(a: &StrataAnalysis) -> usize {
    let n_points = a.census.values().sum::<usize>();
    let curves: Vec<&CurveOrbit> = a.curves.iter().flat_map(|c| &c.orbits).collect();
    let mut parent: Vec<usize> = (0..n_points + curves.len()).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        let mut y = x;
        while p[y] != r {
            let next = p[y];
            p[y] = r;
            y = next;
        }
        r
    }
    for (ci, c) in curves.iter().enumerate() {
        for s in &c.special_points {
            for &pid in &s.orbit_ids {
                let (x, y) = (find(&mut parent, n_points + ci), find(&mut parent, pid));
                parent[x] = y;
            }
        }
    }
    (0..parent.len()).filter(|&i| find(&mut parent, i) == i).count()
}
