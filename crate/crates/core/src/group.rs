//! Finite subgroups of SL(3, ℤ) given by explicit element sets.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{KummerError, Result};
use crate::matrix::IntMat3;

/// Order of GL(3, ℤ/3). Every finite subgroup of GL(3, ℤ) embeds into it,
/// so a closure that grows past this bound cannot be finite.
pub const MINKOWSKI_BOUND: usize = 11232;

/// Largest finite order of an element of GL(3, ℤ) is 6; anything not
/// returning to the identity by this power has infinite order.
const ORDER_CUTOFF: u32 = 12;

/// A finite matrix group stored as its sorted element list.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FinMatGroup {
    elements: Vec<IntMat3>,
    generators: Vec<IntMat3>,
}

impl FinMatGroup {
    pub fn trivial() -> Self {
        FinMatGroup {
            elements: vec![IntMat3::IDENTITY],
            generators: Vec::new(),
        }
    }

    /// Wraps an element set already known to be a group. The set is sorted
    /// and a small generating set is chosen greedily.
    pub fn from_elements(mut elements: Vec<IntMat3>) -> Self {
        elements.sort();
        elements.dedup();
        debug_assert!(elements.binary_search(&IntMat3::IDENTITY).is_ok());
        let generators = greedy_generators(&elements);
        FinMatGroup { elements, generators }
    }

    pub fn elements(&self) -> &[IntMat3] {
        &self.elements
    }

    pub fn generators(&self) -> &[IntMat3] {
        &self.generators
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, m: &IntMat3) -> bool {
        self.elements.binary_search(m).is_ok()
    }

    pub fn index_of(&self, m: &IntMat3) -> Option<usize> {
        self.elements.binary_search(m).ok()
    }

    pub fn is_subgroup_of(&self, other: &FinMatGroup) -> bool {
        self.elements.iter().all(|g| other.contains(g))
    }

    pub fn is_abelian(&self) -> bool {
        self.generators
            .iter()
            .all(|a| self.generators.iter().all(|b| *a * *b == *b * *a))
    }

    pub fn is_cyclic(&self) -> bool {
        let n = self.order();
        self.elements
            .iter()
            .any(|g| element_order(g).map(|k| k == n).unwrap_or(false))
    }

    /// `g H g⁻¹`.
    pub fn conjugate_by(&self, g: &IntMat3) -> FinMatGroup {
        let inv = g.inverse().expect("conjugating matrix must be unimodular");
        let elements = self.elements.iter().map(|h| *g * *h * inv).collect();
        let mut out = FinMatGroup::from_elements(elements);
        out.generators = self.generators.iter().map(|h| *g * *h * inv).collect();
        out
    }

    /// All matrices transposed.
    pub fn transpose(&self) -> FinMatGroup {
        let mut out = FinMatGroup::from_elements(self.elements.iter().map(|m| m.transpose()).collect());
        out.generators = self.generators.iter().map(|m| m.transpose()).collect();
        out
    }

    /// Normalizer of `sub` inside `self`.
    pub fn normalizer(&self, sub: &FinMatGroup) -> FinMatGroup {
        let elements = self
            .elements
            .iter()
            .filter(|g| {
                let inv = g.inverse().expect("group element is unimodular");
                sub.generators_or_elements()
                    .iter()
                    .all(|h| sub.contains(&(**g * *h * inv)))
            })
            .copied()
            .collect();
        FinMatGroup::from_elements(elements)
    }

    /// Centralizer of a single element inside `self`.
    pub fn centralizer(&self, x: &IntMat3) -> FinMatGroup {
        FinMatGroup::from_elements(
            self.elements
                .iter()
                .filter(|g| **g * *x == *x * **g)
                .copied()
                .collect(),
        )
    }

    fn generators_or_elements(&self) -> &[IntMat3] {
        if self.generators.is_empty() {
            &self.elements
        } else {
            &self.generators
        }
    }

    /// Conjugacy classes of elements, each sorted, classes ordered by their
    /// smallest element.
    pub fn conjugacy_classes(&self) -> Vec<Vec<IntMat3>> {
        let mut seen = BTreeSet::new();
        let mut classes = Vec::new();
        for x in &self.elements {
            if seen.contains(x) {
                continue;
            }
            let mut class: Vec<IntMat3> = self
                .elements
                .iter()
                .map(|g| *g * *x * g.inverse().expect("unimodular"))
                .collect();
            class.sort();
            class.dedup();
            seen.extend(class.iter().copied());
            classes.push(class);
        }
        classes
    }

    /// Lexicographically smallest element generating a cyclic group; `None`
    /// when the group is not cyclic.
    pub fn canonical_generator(&self) -> Option<IntMat3> {
        let n = self.order();
        self.elements
            .iter()
            .find(|g| element_order(g).map(|k| k == n).unwrap_or(false))
            .copied()
    }
}

fn greedy_generators(elements: &[IntMat3]) -> Vec<IntMat3> {
    let mut gens: Vec<IntMat3> = Vec::new();
    let mut span: BTreeSet<IntMat3> = BTreeSet::from([IntMat3::IDENTITY]);
    // prefer high-order elements so cyclic groups get a single generator
    let mut candidates: Vec<&IntMat3> = elements.iter().collect();
    candidates.sort_by_key(|g| std::cmp::Reverse(element_order(g).unwrap_or(0)));
    for g in candidates {
        if span.len() == elements.len() {
            break;
        }
        if span.contains(g) {
            continue;
        }
        gens.push(*g);
        span = closure_set(&gens, usize::MAX).expect("subset of a finite group");
    }
    gens
}

fn closure_set(generators: &[IntMat3], bound: usize) -> Result<BTreeSet<IntMat3>> {
    let mut set = BTreeSet::from([IntMat3::IDENTITY]);
    let mut queue = VecDeque::from([IntMat3::IDENTITY]);
    while let Some(x) = queue.pop_front() {
        for g in generators {
            let y = x * *g;
            if set.insert(y) {
                if set.len() > bound {
                    return Err(KummerError::OrderBoundExceeded { bound });
                }
                queue.push_back(y);
            }
        }
    }
    Ok(set)
}

/// Smallest group containing the generators.
pub fn closure(generators: &[IntMat3]) -> Result<FinMatGroup> {
    for g in generators {
        let det = g.det();
        if det != 1 {
            return Err(KummerError::NotSpecialLinear { matrix: *g, det });
        }
    }
    let set = closure_set(generators, MINKOWSKI_BOUND)?;
    Ok(FinMatGroup {
        elements: set.into_iter().collect(),
        generators: generators.to_vec(),
    })
}

/// Smallest `k ≥ 1` with `m^k = I`.
pub fn element_order(m: &IntMat3) -> Result<usize> {
    let mut acc = *m;
    for k in 1..=ORDER_CUTOFF {
        if acc.is_identity() {
            return Ok(k as usize);
        }
        acc = acc * *m;
    }
    Err(KummerError::InfiniteOrder(*m))
}

/// Isomorphism types of nontrivial finite subgroups of SL(3, ℤ), plus the
/// trivial group. `D4` is the Klein four-group ℤ₂ × ℤ₂.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum IsoType {
    Z1,
    Z2,
    Z3,
    Z4,
    Z6,
    D4,
    D6,
    D8,
    D12,
    A4,
    S4,
}

impl IsoType {
    pub const ALL: [IsoType; 11] = [
        IsoType::Z1,
        IsoType::Z2,
        IsoType::Z3,
        IsoType::Z4,
        IsoType::Z6,
        IsoType::D4,
        IsoType::D6,
        IsoType::D8,
        IsoType::D12,
        IsoType::A4,
        IsoType::S4,
    ];

    pub fn order(self) -> usize {
        match self {
            IsoType::Z1 => 1,
            IsoType::Z2 => 2,
            IsoType::Z3 => 3,
            IsoType::Z4 | IsoType::D4 => 4,
            IsoType::Z6 | IsoType::D6 => 6,
            IsoType::D8 => 8,
            IsoType::D12 | IsoType::A4 => 12,
            IsoType::S4 => 24,
        }
    }

    pub fn is_cyclic(self) -> bool {
        matches!(
            self,
            IsoType::Z1 | IsoType::Z2 | IsoType::Z3 | IsoType::Z4 | IsoType::Z6
        )
    }

    /// Element-order census `[#order 1, #order 2, #order 3, #order 4, #order 6]`.
    fn order_census(self) -> [usize; 5] {
        match self {
            IsoType::Z1 => [1, 0, 0, 0, 0],
            IsoType::Z2 => [1, 1, 0, 0, 0],
            IsoType::Z3 => [1, 0, 2, 0, 0],
            IsoType::Z4 => [1, 1, 0, 2, 0],
            IsoType::Z6 => [1, 1, 2, 0, 2],
            IsoType::D4 => [1, 3, 0, 0, 0],
            IsoType::D6 => [1, 3, 2, 0, 0],
            IsoType::D8 => [1, 5, 0, 2, 0],
            IsoType::D12 => [1, 7, 2, 0, 2],
            IsoType::A4 => [1, 3, 8, 0, 0],
            IsoType::S4 => [1, 9, 8, 6, 0],
        }
    }

    fn is_abelian(self) -> bool {
        self.is_cyclic() || self == IsoType::D4
    }

    /// Classifies from order, commutativity and the element-order census.
    pub fn classify(order: usize, abelian: bool, element_orders: &[usize]) -> Option<IsoType> {
        let mut census = [0usize; 5];
        for &k in element_orders {
            let slot = match k {
                1 => 0,
                2 => 1,
                3 => 2,
                4 => 3,
                6 => 4,
                _ => return None,
            };
            census[slot] += 1;
        }
        IsoType::ALL
            .into_iter()
            .find(|t| t.order() == order && t.is_abelian() == abelian && t.order_census() == census)
    }

    /// Label used in the Weyl-group columns: the trivial group prints as `0`
    /// and the Klein group as `Z2xZ2`.
    pub fn weyl_label(self) -> &'static str {
        match self {
            IsoType::Z1 => "0",
            IsoType::D4 => "Z2xZ2",
            other => other.name(),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            IsoType::Z1 => "Z1",
            IsoType::Z2 => "Z2",
            IsoType::Z3 => "Z3",
            IsoType::Z4 => "Z4",
            IsoType::Z6 => "Z6",
            IsoType::D4 => "D4",
            IsoType::D6 => "D6",
            IsoType::D8 => "D8",
            IsoType::D12 => "D12",
            IsoType::A4 => "A4",
            IsoType::S4 => "S4",
        }
    }

    pub fn from_weyl_label(s: &str) -> Option<IsoType> {
        match s {
            "0" => Some(IsoType::Z1),
            "Z2xZ2" => Some(IsoType::D4),
            _ => IsoType::ALL.into_iter().find(|t| t.name() == s),
        }
    }
}

impl fmt::Display for IsoType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

pub fn iso_type(h: &FinMatGroup) -> Result<IsoType> {
    let orders = h
        .elements()
        .iter()
        .map(element_order)
        .collect::<Result<Vec<_>>>()?;
    IsoType::classify(h.order(), h.is_abelian(), &orders)
        .ok_or(KummerError::UnclassifiableGroup { order: h.order() })
}

/// Isomorphism type of the quotient `n / h` (`h` normal in `n`).
pub fn quotient_iso_type(n: &FinMatGroup, h: &FinMatGroup) -> Result<IsoType> {
    let cosets = coset_representatives(n, h);
    let mut orders = Vec::with_capacity(cosets.len());
    for c in &cosets {
        let mut acc = *c;
        let mut k = 1;
        while !h.contains(&acc) {
            acc = acc * *c;
            k += 1;
            if k > ORDER_CUTOFF as usize {
                return Err(KummerError::InfiniteOrder(*c));
            }
        }
        orders.push(k);
    }
    let abelian = cosets.iter().all(|a| {
        cosets.iter().all(|b| {
            let comm = *a * *b * a.inverse().expect("unimodular") * b.inverse().expect("unimodular");
            h.contains(&comm)
        })
    });
    IsoType::classify(cosets.len(), abelian, &orders)
        .ok_or(KummerError::UnclassifiableGroup { order: cosets.len() })
}

/// Smallest element of each left coset `g h`, listed in increasing order
/// (the identity coset first).
pub fn coset_representatives(n: &FinMatGroup, h: &FinMatGroup) -> Vec<IntMat3> {
    let mut seen = BTreeSet::new();
    let mut reps = Vec::new();
    for g in n.elements() {
        if seen.contains(g) {
            continue;
        }
        let coset: BTreeSet<IntMat3> = h.elements().iter().map(|x| *g * *x).collect();
        reps.push(*coset.iter().next().expect("nonempty coset"));
        seen.extend(coset);
    }
    reps.sort();
    // identity coset is h itself, whose minimum may not be the identity
    if let Some(pos) = reps.iter().position(|r| h.contains(r)) {
        let r = reps.remove(pos);
        reps.insert(0, r);
    }
    reps
}

/// One subgroup of a parent group with its normalizer data and conjugacy
/// class membership.
#[derive(Clone, Debug)]
pub struct SubgroupRecord {
    pub subgroup: FinMatGroup,
    pub iso: IsoType,
    pub normalizer: FinMatGroup,
    pub weyl_order: usize,
    pub conjugacy_class_id: usize,
    /// `witness · representative · witness⁻¹ = subgroup`, where the
    /// representative is the first record of the same class.
    pub witness: IntMat3,
    pub cyclic: bool,
}

/// Every subgroup of `g`, once. Candidates are closures of all 1- and
/// 2-element subsets, which suffices because every admissible group is
/// 2-generated.
///
/// Records are sorted by (order, iso type, element list); conjugacy class
/// ids are assigned in that order.
pub fn all_subgroups(g: &FinMatGroup) -> Result<Vec<SubgroupRecord>> {
    let els = g.elements();
    let mut found: BTreeMap<Vec<IntMat3>, FinMatGroup> = BTreeMap::new();
    found.insert(vec![IntMat3::IDENTITY], FinMatGroup::trivial());
    for (i, a) in els.iter().enumerate() {
        let single = closure(&[*a])?;
        found
            .entry(single.elements().to_vec())
            .or_insert_with(|| FinMatGroup::from_elements(single.elements().to_vec()));
        for b in &els[i + 1..] {
            if single.contains(b) {
                continue;
            }
            let pair = closure(&[*a, *b])?;
            found
                .entry(pair.elements().to_vec())
                .or_insert_with(|| FinMatGroup::from_elements(pair.elements().to_vec()));
        }
    }

    let mut subs: Vec<(IsoType, FinMatGroup)> = found
        .into_values()
        .map(|s| Ok((iso_type(&s)?, s)))
        .collect::<Result<_>>()?;
    subs.sort_by(|(ia, a), (ib, b)| (a.order(), *ia, a.elements()).cmp(&(b.order(), *ib, b.elements())));

    let index: BTreeMap<Vec<IntMat3>, usize> = subs
        .iter()
        .enumerate()
        .map(|(i, (_, s))| (s.elements().to_vec(), i))
        .collect();

    let mut class_of: Vec<Option<(usize, IntMat3)>> = vec![None; subs.len()];
    let mut next_class = 0;
    for i in 0..subs.len() {
        if class_of[i].is_some() {
            continue;
        }
        class_of[i] = Some((next_class, IntMat3::IDENTITY));
        for x in els {
            let conj = subs[i].1.conjugate_by(x);
            let j = index[conj.elements()];
            if class_of[j].is_none() {
                class_of[j] = Some((next_class, *x));
            }
        }
        next_class += 1;
    }

    subs.into_iter()
        .zip(class_of)
        .map(|((iso, subgroup), class)| {
            let (conjugacy_class_id, witness) = class.expect("every subgroup classified");
            let normalizer = g.normalizer(&subgroup);
            let weyl_order = normalizer.order() / subgroup.order();
            Ok(SubgroupRecord {
                cyclic: iso.is_cyclic(),
                iso,
                weyl_order,
                normalizer,
                conjugacy_class_id,
                witness,
                subgroup,
            })
        })
        .collect()
}

/// Number of conjugacy classes of a group given as matrices.
pub fn class_count(g: &FinMatGroup) -> usize {
    g.conjugacy_classes().len()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d4_1() -> FinMatGroup {
        closure(&[IntMat3::diag(-1, -1, 1), IntMat3::diag(1, -1, -1)]).unwrap()
    }

    fn s4_2() -> FinMatGroup {
        closure(&[
            IntMat3::new([[-1, 0, 0], [0, -1, 0], [1, 1, 1]]),
            IntMat3::new([[0, 0, 1], [1, 0, 0], [0, 1, 0]]),
        ])
        .unwrap()
    }

    #[test]
    fn closure_orders() {
        assert_eq!(closure(&[]).unwrap().order(), 1);
        assert_eq!(d4_1().order(), 4);
        assert_eq!(s4_2().order(), 24);
    }

    #[test]
    fn closure_rejects_bad_generators() {
        let err = closure(&[IntMat3::diag(-1, 1, 1)]).unwrap_err();
        assert!(matches!(err, KummerError::NotSpecialLinear { det: -1, .. }));
        let shear = IntMat3::new([[1, 1, 0], [0, 1, 0], [0, 0, 1]]);
        let err = closure(&[shear]).unwrap_err();
        assert!(matches!(
            err,
            KummerError::OrderBoundExceeded {
                bound: MINKOWSKI_BOUND
            }
        ));
    }

    #[test]
    fn element_orders() {
        assert_eq!(element_order(&IntMat3::IDENTITY).unwrap(), 1);
        assert_eq!(element_order(&IntMat3::diag(-1, -1, 1)).unwrap(), 2);
        let p = IntMat3::new([[0, 0, 1], [1, 0, 0], [0, 1, 0]]);
        assert_eq!(element_order(&p).unwrap(), 3);
        let shear = IntMat3::new([[1, 1, 0], [0, 1, 0], [0, 0, 1]]);
        assert!(matches!(
            element_order(&shear),
            Err(KummerError::InfiniteOrder(_))
        ));
    }

    #[test]
    fn iso_types() {
        let p = IntMat3::new([[0, 0, 1], [1, 0, 0], [0, 1, 0]]);
        assert_eq!(iso_type(&closure(&[p]).unwrap()).unwrap(), IsoType::Z3);
        assert_eq!(iso_type(&d4_1()).unwrap(), IsoType::D4);
        assert_eq!(iso_type(&s4_2()).unwrap(), IsoType::S4);
        assert_eq!(iso_type(&FinMatGroup::trivial()).unwrap(), IsoType::Z1);
    }

    #[test]
    fn s4_census_by_brute_force() {
        // element orders of S4: 1^1 2^9 3^8 4^6
        let g = s4_2();
        let mut census = BTreeMap::new();
        for x in g.elements() {
            *census.entry(element_order(x).unwrap()).or_insert(0) += 1;
        }
        assert_eq!(census, BTreeMap::from([(1, 1), (2, 9), (3, 8), (4, 6)]));
    }

    #[test]
    fn subgroups_of_klein_group() {
        let subs = all_subgroups(&d4_1()).unwrap();
        assert_eq!(subs.len(), 5);
        let z2: Vec<_> = subs.iter().filter(|s| s.iso == IsoType::Z2).collect();
        assert_eq!(z2.len(), 3);
        for s in z2 {
            assert_eq!(s.normalizer.order(), 4);
            assert_eq!(s.weyl_order, 2);
        }
    }

    #[test]
    fn subgroups_of_trivial_group() {
        let subs = all_subgroups(&FinMatGroup::trivial()).unwrap();
        assert_eq!(subs.len(), 1);
        assert_eq!(subs[0].iso, IsoType::Z1);
    }

    #[test]
    fn s4_noncyclic_subgroup_census() {
        let subs = all_subgroups(&s4_2()).unwrap();
        let count = |t| subs.iter().filter(|s| s.iso == t).count();
        let classes = |t| {
            subs.iter()
                .filter(|s| s.iso == t)
                .map(|s| s.conjugacy_class_id)
                .collect::<BTreeSet<_>>()
                .len()
        };
        assert_eq!(count(IsoType::D4), 4);
        assert_eq!(classes(IsoType::D4), 2);
        assert_eq!(count(IsoType::D6), 4);
        assert_eq!(classes(IsoType::D6), 1);
        assert_eq!(count(IsoType::D8), 3);
        assert_eq!(count(IsoType::A4), 1);
        assert_eq!(count(IsoType::S4), 1);
        let normal_d4: Vec<_> = subs
            .iter()
            .filter(|s| s.iso == IsoType::D4 && s.normalizer.order() == 24)
            .collect();
        assert_eq!(normal_d4.len(), 1);
        assert_eq!(normal_d4[0].weyl_order, 6);
    }

    #[test]
    fn witnesses_conjugate_representatives() {
        let g = s4_2();
        let subs = all_subgroups(&g).unwrap();
        for s in &subs {
            let rep = subs
                .iter()
                .find(|r| r.conjugacy_class_id == s.conjugacy_class_id)
                .unwrap();
            assert_eq!(
                rep.subgroup.conjugate_by(&s.witness).elements(),
                s.subgroup.elements()
            );
            assert_eq!(g.order() % (s.subgroup.order() * s.weyl_order), 0);
        }
    }

    #[test]
    fn quotient_types() {
        let g = s4_2();
        let subs = all_subgroups(&g).unwrap();
        let normal_d4 = subs
            .iter()
            .find(|s| s.iso == IsoType::D4 && s.normalizer.order() == 24)
            .unwrap();
        assert_eq!(quotient_iso_type(&g, &normal_d4.subgroup).unwrap(), IsoType::D6);
    }
}
