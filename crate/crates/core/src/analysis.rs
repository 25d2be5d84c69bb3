//! Catalog-wide analyses: verification against the reference tables,
//! duality under transposition, and the inclusion diagram.

use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;
use serde::Serialize;

use crate::catalog::{catalog, CatalogEntry};
use crate::cohomology::IntPoly;
use crate::conjugacy::bounded_conjugacy_search;
use crate::error::Result;
use crate::golden::{GoldenCase, GoldenRow, CASES};
use crate::group::{all_subgroups, closure, element_order, FinMatGroup, IsoType};
use crate::matrix::IntMat3;
use crate::report::{run_pipeline, Pipeline};
use crate::strata::{CurveClassRecord, Fingerprint};

/// Pipeline results for one catalog entry.
#[derive(Clone, Debug)]
pub struct CatalogRun {
    pub entry: CatalogEntry,
    pub group: FinMatGroup,
    pub pipeline: Pipeline,
}

/// Runs all sixteen groups in parallel; results are in catalog order.
pub fn run_catalog() -> Result<Vec<CatalogRun>> {
    catalog()
        .into_par_iter()
        .map(|entry| {
            let group = entry.group()?;
            let pipeline = run_pipeline(&group, None)?;
            Ok(CatalogRun {
                entry,
                group,
                pipeline,
            })
        })
        .collect()
}

/// Fingerprint of an arbitrary non-cyclic group.
fn fingerprint_of(g: &FinMatGroup) -> Result<Fingerprint> {
    Ok(run_pipeline(g, None)?.fingerprint)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub group: String,
    pub item: String,
    pub expected: String,
    pub actual: String,
    pub pass: bool,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct Verification {
    pub checks: Vec<Check>,
}

impl Verification {
    fn push(&mut self, group: &str, item: impl Into<String>, expected: impl ToString, actual: impl ToString) {
        let (expected, actual) = (expected.to_string(), actual.to_string());
        self.checks.push(Check {
            group: group.to_string(),
            item: item.into(),
            pass: expected == actual,
            expected,
            actual,
        });
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> Vec<&Check> {
        self.checks.iter().filter(|c| !c.pass).collect()
    }

    pub fn count_for(&self, prefix: &str) -> (usize, usize) {
        let sel: Vec<_> = self
            .checks
            .iter()
            .filter(|c| c.item.starts_with(prefix))
            .collect();
        (sel.iter().filter(|c| c.pass).count(), sel.len())
    }
}

fn poly(s: &str) -> IntPoly {
    s.parse().expect("reference polynomials parse")
}

/// The computed record of the class containing the cyclic group generated
/// by `gen`, if `gen` lies in `g`.
pub fn record_for<'a>(
    g: &FinMatGroup,
    curves: &'a [CurveClassRecord],
    gen: &IntMat3,
) -> Option<&'a CurveClassRecord> {
    if !g.contains(gen) {
        return None;
    }
    let k = element_order(gen).ok()?;
    curves.iter().find(|c| {
        c.subgroup.order() == k
            && g.elements().iter().any(|x| {
                let inv = x.inverse().expect("unimodular");
                c.subgroup.contains(&(*x * *gen * inv))
            })
    })
}

fn render_row(r: &GoldenRow) -> String {
    let q: Vec<String> = r
        .quotient
        .iter()
        .map(|(n, q, wk)| format!("{n}x{} {wk}", q.label()))
        .collect();
    format!("{} comp={} W={} [{}]", r.iso, r.components, r.weyl, q.join(" + "))
}

fn render_record(c: &CurveClassRecord) -> String {
    let q: Vec<String> = c
        .quotient_summary()
        .iter()
        .map(|(n, q, wk)| format!("{n}x{} {wk}", q.label()))
        .collect();
    format!(
        "{} comp={} W={} [{}]",
        c.iso,
        c.components,
        c.weyl.weyl_label(),
        q.join(" + ")
    )
}

fn verify_case(v: &mut Verification, run: &CatalogRun, case: &GoldenCase) {
    let name = case.name;
    let p = &run.pipeline.polynomials;
    v.push(name, "P_Y", poly(case.p_y), &p.p_y);
    v.push(name, "P_3", poly(case.p3), &p.p3);
    v.push(name, "P_2", poly(case.p2), &p.p2);
    v.push(name, "P_1", poly(case.p1), &p.p1);
    v.push(name, "P_X", poly(case.p_x), &p.p_x);
    let expected: BTreeMap<IsoType, usize> = case.census.iter().copied().collect();
    v.push(
        name,
        "census",
        format!("{expected:?}"),
        format!("{:?}", run.pipeline.strata.census),
    );
    let curves = &run.pipeline.strata.curves;
    v.push(name, "curve classes", case.rows.len(), curves.len());
    for r in case.rows {
        let actual = match record_for(&run.group, curves, &r.generator) {
            Some(c) => render_record(c),
            None => format!("no class contains {}", r.generator),
        };
        v.push(name, format!("curve row {}", r.generator), render_row(r), actual);
    }
}

/// Compares every computed table entry with the reference data.
pub fn verify_tables() -> Result<Verification> {
    let runs = run_catalog()?;
    Ok(verify_runs(&runs))
}

pub fn verify_runs(runs: &[CatalogRun]) -> Verification {
    let mut v = Verification::default();
    for (run, case) in runs.iter().zip(CASES.iter()) {
        assert_eq!(run.entry.name, case.name, "catalog and reference order agree");
        verify_case(&mut v, run, case);
    }
    let digests: BTreeSet<String> = runs.iter().map(|r| r.pipeline.fingerprint.digest()).collect();
    v.push("catalog", "distinct fingerprints", runs.len(), digests.len());
    for (name, expected) in [("D4(3)", 1), ("D4(4)", 4)] {
        if let Some(r) = runs.iter().find(|r| r.entry.name == name) {
            v.push(
                name,
                "incidence components",
                expected,
                r.pipeline.fingerprint.incidence_components,
            );
        }
    }
    v
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DualityEntry {
    pub class: String,
    /// Catalog classes whose fingerprint equals that of the transposed group.
    pub candidates: Vec<String>,
    pub dual: Option<String>,
    /// `P` with `P·Gᵀ·P⁻¹ = dual`.
    pub witness: Option<IntMat3>,
}

impl DualityEntry {
    pub fn is_inconclusive(&self) -> bool {
        self.dual.is_none()
    }

    pub fn is_self_dual(&self) -> bool {
        self.dual.as_deref() == Some(self.class.as_str())
    }
}

pub fn duality_report(bound: i64) -> Result<Vec<DualityEntry>> {
    let runs = run_catalog()?;
    duality_from_runs(&runs, bound)
}

pub fn duality_from_runs(runs: &[CatalogRun], bound: i64) -> Result<Vec<DualityEntry>> {
    runs.par_iter()
        .map(|run| {
            let t = run.group.transpose();
            let fp = fingerprint_of(&t)?;
            let candidates: Vec<&CatalogRun> = runs
                .iter()
                .filter(|r| r.group.order() == t.order() && r.pipeline.fingerprint == fp)
                .collect();
            let mut found = None;
            for c in &candidates {
                if let Some(p) = bounded_conjugacy_search(&t, &c.group, bound) {
                    found = Some((c.entry.name.clone(), p));
                    break;
                }
            }
            Ok(DualityEntry {
                class: run.entry.name.clone(),
                candidates: candidates.iter().map(|c| c.entry.name.clone()).collect(),
                dual: found.as_ref().map(|(n, _)| n.clone()),
                witness: found.map(|(_, p)| p),
            })
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InclusionEdge {
    pub from: String,
    pub to: String,
    /// `P` with `P·from·P⁻¹` a subgroup of `to`.
    pub witness: IntMat3,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InconclusiveMatch {
    pub group: String,
    pub subgroup_iso: IsoType,
    pub subgroup_generators: Vec<IntMat3>,
    pub candidates: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InclusionDiagram {
    /// Covering relations only.
    pub edges: Vec<InclusionEdge>,
    /// Every matched inclusion before reduction.
    pub all_inclusions: Vec<(String, String)>,
    pub inconclusive: Vec<InconclusiveMatch>,
}

impl InclusionDiagram {
    pub fn has_edge(&self, from: &str, to: &str) -> bool {
        self.edges.iter().any(|e| e.from == from && e.to == to)
    }

    pub fn reachable(&self, from: &str, to: &str) -> bool {
        self.all_inclusions.iter().any(|(a, b)| a == from && b == to)
    }
}

pub fn inclusion_diagram(bound: i64) -> Result<InclusionDiagram> {
    let runs = run_catalog()?;
    inclusion_from_runs(&runs, bound)
}

pub fn inclusion_from_runs(runs: &[CatalogRun], bound: i64) -> Result<InclusionDiagram> {
    type Found = (Vec<(String, String, IntMat3)>, Vec<InconclusiveMatch>);
    let per_group: Vec<Found> = runs
        .par_iter()
        .map(|run| -> Result<Found> {
            let subs = all_subgroups(&run.group)?;
            let mut seen_class = BTreeSet::new();
            let mut found = Vec::new();
            let mut inconclusive = Vec::new();
            for s in subs {
                if s.cyclic
                    || s.subgroup.order() == run.group.order()
                    || !seen_class.insert(s.conjugacy_class_id)
                {
                    continue;
                }
                let h = closure(s.subgroup.generators())?;
                let fp = fingerprint_of(&h)?;
                let candidates: Vec<&CatalogRun> = runs
                    .iter()
                    .filter(|r| r.group.order() == h.order() && r.pipeline.fingerprint == fp)
                    .collect();
                let hit = candidates.iter().find_map(|c| {
                    bounded_conjugacy_search(&c.group, &h, bound).map(|p| (c.entry.name.clone(), p))
                });
                match hit {
                    Some((name, p)) => found.push((name, run.entry.name.clone(), p)),
                    None => inconclusive.push(InconclusiveMatch {
                        group: run.entry.name.clone(),
                        subgroup_iso: s.iso,
                        subgroup_generators: h.generators().to_vec(),
                        candidates: candidates.iter().map(|c| c.entry.name.clone()).collect(),
                    }),
                }
            }
            Ok((found, inconclusive))
        })
        .collect::<Result<_>>()?;

    let order: BTreeMap<String, usize> = runs
        .iter()
        .enumerate()
        .map(|(i, r)| (r.entry.name.clone(), i))
        .collect();
    let mut direct: BTreeMap<(usize, usize), IntMat3> = BTreeMap::new();
    let mut inconclusive = Vec::new();
    for (found, inc) in per_group {
        for (from, to, p) in found {
            direct.entry((order[&from], order[&to])).or_insert(p);
        }
        inconclusive.extend(inc);
    }

    let n = runs.len();
    let mut reach = vec![vec![false; n]; n];
    for &(a, b) in direct.keys() {
        reach[a][b] = true;
    }
    for k in 0..n {
        for i in 0..n {
            if reach[i][k] {
                let via = reach[k].clone();
                for (r, v) in reach[i].iter_mut().zip(via) {
                    *r |= v;
                }
            }
        }
    }
    let edges = direct
        .iter()
        .filter(|(&(a, b), _)| !(0..n).any(|k| k != a && k != b && reach[a][k] && reach[k][b]))
        .map(|(&(a, b), p)| InclusionEdge {
            from: runs[a].entry.name.clone(),
            to: runs[b].entry.name.clone(),
            witness: *p,
        })
        .collect();
    let mut all_inclusions = Vec::new();
    for (a, row) in reach.iter().enumerate() {
        for (b, &r) in row.iter().enumerate() {
            if r {
                all_inclusions.push((runs[a].entry.name.clone(), runs[b].entry.name.clone()));
            }
        }
    }
    Ok(InclusionDiagram {
        edges,
        all_inclusions,
        inconclusive,
    })
}
