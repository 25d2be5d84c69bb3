//! Per-group pipeline runs and their text/JSON rendering.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;

use crate::cohomology::{assemble, IntPoly, StrataPolynomials, WeylActionType};
use crate::error::{KummerError, Result};
use crate::group::{closure, iso_type, FinMatGroup, IsoType};
use crate::matrix::{IntMat3, Vec3};
use crate::strata::{analyze_at, fingerprint, CurveClassRecord, Fingerprint, StrataAnalysis};
use crate::torus::{working_level, TorsionLevel};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QuotientPart {
    pub count: usize,
    pub curve: &'static str,
    pub wk: &'static str,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpecialRow {
    pub iso: IsoType,
    pub count_on_curve: usize,
    pub image_count: usize,
    pub wk_orbits: usize,
    pub wk_rep: String,
    pub passes_twice: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrbitRow {
    pub orbit_size: usize,
    pub wk_order: usize,
    pub action: WeylActionType,
    pub quotient: &'static str,
    pub cover_degree: usize,
    pub special_points: Vec<SpecialRow>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CurveRow {
    pub group: IsoType,
    pub singularity: String,
    pub generator: IntMat3,
    pub equations: Vec<String>,
    pub components: usize,
    pub weyl: &'static str,
    pub quotient: Vec<QuotientPart>,
    pub orbits: Vec<OrbitRow>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Polynomials {
    pub p_y: IntPoly,
    pub p3: IntPoly,
    pub p2: IntPoly,
    pub p1: IntPoly,
    pub p_x: IntPoly,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KummerReport {
    pub schema_version: u32,
    pub name: String,
    pub order: usize,
    pub iso: IsoType,
    pub generators: Vec<IntMat3>,
    pub polynomials: Polynomials,
    pub curves: Vec<CurveRow>,
    pub census: BTreeMap<IsoType, usize>,
    pub incidence_components: usize,
    pub fingerprint: String,
}

/// Everything computed for one group.
#[derive(Clone, Debug)]
pub struct Pipeline {
    pub strata: StrataAnalysis,
    pub polynomials: StrataPolynomials,
    pub fingerprint: Fingerprint,
}

/// Runs the full pipeline. `level` must be a multiple of the group's
/// working level when given.
pub fn run_pipeline(g: &FinMatGroup, level: Option<TorsionLevel>) -> Result<Pipeline> {
    if g.is_cyclic() {
        return Err(KummerError::CyclicGroup { order: g.order() });
    }
    iso_type(g)?;
    let base = working_level(g);
    let level = level.unwrap_or(base);
    if level.0 <= 0 || level.0 % base.0 != 0 {
        return Err(KummerError::LevelTooSmall {
            level: level.0,
            needed: base.0,
        });
    }
    let strata = analyze_at(g, level)?;
    let polynomials = assemble(&strata)?;
    let fingerprint = fingerprint(&strata);
    Ok(Pipeline {
        strata,
        polynomials,
        fingerprint,
    })
}

pub fn build_report(name: &str, generators: &[IntMat3], level: Option<TorsionLevel>) -> Result<KummerReport> {
    let g = closure(generators)?;
    let p = run_pipeline(&g, level)?;
    Ok(report_from(name, generators, &p))
}

pub fn report_from(name: &str, generators: &[IntMat3], p: &Pipeline) -> KummerReport {
    let s = &p.strata;
    KummerReport {
        schema_version: SCHEMA_VERSION,
        name: name.to_string(),
        order: s.group.order(),
        iso: iso_type(&s.group).expect("classified before the run"),
        generators: generators.to_vec(),
        polynomials: Polynomials {
            p_y: p.polynomials.p_y.clone(),
            p3: p.polynomials.p3.clone(),
            p2: p.polynomials.p2.clone(),
            p1: p.polynomials.p1.clone(),
            p_x: p.polynomials.p_x.clone(),
        },
        curves: s.curves.iter().map(curve_row).collect(),
        census: s.census.clone(),
        incidence_components: p.fingerprint.incidence_components,
        fingerprint: p.fingerprint.digest(),
    }
}

fn curve_row(c: &CurveClassRecord) -> CurveRow {
    CurveRow {
        group: c.iso,
        singularity: c.singularity.to_string(),
        generator: c.generator,
        equations: c.equations.iter().map(render_equation).collect(),
        components: c.components,
        weyl: c.weyl.weyl_label(),
        quotient: c
            .quotient_summary()
            .into_iter()
            .map(|(count, q, wk)| QuotientPart {
                count,
                curve: q.label(),
                wk,
            })
            .collect(),
        orbits: c
            .orbits
            .iter()
            .map(|o| OrbitRow {
                orbit_size: o.orbit_size,
                wk_order: o.wk_order,
                action: o.action,
                quotient: o.quotient_type.label(),
                cover_degree: o.cover_degree,
                special_points: o
                    .special_points
                    .iter()
                    .map(|sp| SpecialRow {
                        iso: sp.iso,
                        count_on_curve: sp.count_on_curve,
                        image_count: sp.image_count,
                        wk_orbits: sp.wk_orbits,
                        wk_rep: sp.wk_rep.to_string(),
                        passes_twice: sp.passes_twice,
                    })
                    .collect(),
            })
            .collect(),
    }
}

/// `[2, 0, 0]` → `2e1 = 0`, `[1, -1, 0]` → `e1 - e2 = 0`.
pub fn render_equation(row: &Vec3) -> String {
    let mut s = String::new();
    for (i, &c) in row.iter().enumerate() {
        if c == 0 {
            continue;
        }
        let a = c.abs();
        if s.is_empty() {
            if c < 0 {
                s.push('-');
            }
        } else {
            s.push_str(if c < 0 { " - " } else { " + " });
        }
        if a != 1 {
            let _ = write!(s, "{a}");
        }
        let _ = write!(s, "e{}", i + 1);
    }
    s.push_str(" = 0");
    s
}

pub fn quotient_text(parts: &[QuotientPart]) -> String {
    parts
        .iter()
        .map(|p| format!("{}x{}", p.count, p.curve))
        .collect::<Vec<_>>()
        .join(" + ")
}

fn wk_text(parts: &[QuotientPart]) -> String {
    parts.iter().map(|p| p.wk).collect::<Vec<_>>().join(", ")
}

impl KummerReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{} ({}, order {})", self.name, self.iso, self.order);
        let _ = writeln!(out);
        let headers = [
            "group",
            "generator",
            "equations",
            "comp.",
            "W(g)",
            "quotient",
            "W_K",
        ];
        let rows: Vec<[String; 7]> = self
            .curves
            .iter()
            .map(|c| {
                [
                    format!("{} ({})", c.group, c.singularity),
                    c.generator.to_string(),
                    c.equations.join(", "),
                    c.components.to_string(),
                    c.weyl.to_string(),
                    quotient_text(&c.quotient),
                    wk_text(&c.quotient),
                ]
            })
            .collect();
        let mut widths = headers.map(str::len);
        for r in &rows {
            for (w, cell) in widths.iter_mut().zip(r) {
                *w = (*w).max(cell.chars().count());
            }
        }
        let line = |cells: &[String]| {
            cells
                .iter()
                .zip(widths)
                .map(|(c, w)| format!("{c:<w$}"))
                .collect::<Vec<_>>()
                .join("  ")
                .trim_end()
                .to_string()
        };
        let _ = writeln!(out, "{}", line(&headers.map(String::from)));
        for r in &rows {
            let _ = writeln!(out, "{}", line(r));
        }
        let _ = writeln!(out);
        let census: Vec<String> = self
            .census
            .iter()
            .map(|(iso, n)| format!("{n} x {iso}"))
            .collect();
        let _ = writeln!(out, "0-stratum: {}", census.join(", "));
        for c in &self.curves {
            for o in &c.orbits {
                let twice = o.special_points.iter().any(|s| s.passes_twice);
                if twice {
                    let _ = writeln!(
                        out,
                        "note: a {} curve of {} passes twice through a point of Y",
                        c.group, c.generator
                    );
                }
            }
        }
        let _ = writeln!(out);
        let p = &self.polynomials;
        let _ = writeln!(out, "P_Y = {}", p.p_y);
        let _ = writeln!(out, "P_3 = {}", p.p3);
        let _ = writeln!(out, "P_2 = {}", p.p2);
        let _ = writeln!(out, "P_1 = {}", p.p1);
        let _ = writeln!(out, "P_X = {}", p.p_x);
        let _ = writeln!(out);
        let _ = writeln!(out, "incidence components: {}", self.incidence_components);
        let _ = writeln!(out, "fingerprint: {}", self.fingerprint);
        out
    }
}
