//! Acceptance run: one PASS/FAIL line per criterion.

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::time::Instant;

use kummer_core::analysis::{duality_from_runs, run_catalog, verify_runs, CatalogRun};
use kummer_core::cohomology::IntPoly;
use kummer_core::golden;
use kummer_core::group::{FinMatGroup, IsoType};
use kummer_core::matrix::IntMat3;
use kummer_core::report::{build_report, report_from};
use kummer_core::snf::{smith_normal_form, IntMatrix};
use kummer_core::torus::{curve_invariants, fixed_components, working_level, TorsionLevel};
use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};

fn poly(s: &str) -> IntPoly {
    s.parse().unwrap()
}

struct Outcome {
    ok: bool,
    notes: Vec<String>,
}

impl Outcome {
    fn new() -> Self {
        Outcome {
            ok: true,
            notes: Vec::new(),
        }
    }

    fn check(&mut self, cond: bool, what: impl FnOnce() -> String) {
        if !cond {
            self.ok = false;
            self.notes.push(what());
        }
    }
}

fn run<'a>(runs: &'a [CatalogRun], name: &str) -> &'a CatalogRun {
    runs.iter().find(|r| r.entry.name == name).unwrap()
}

/// Σ_k tr Λ^k(g ⊕ g) t^k from power traces via Newton's identities.
fn exterior_series(g: &IntMat3) -> Vec<i64> {
    let p: Vec<i64> = (1..=6).map(|j| 2 * g.pow(j as u32).trace()).collect();
    let mut e = vec![1i64];
    for k in 1..=6 {
        let mut s = 0;
        for i in 1..=k {
            let sign = if i % 2 == 1 { 1 } else { -1 };
            s += sign * e[k - i] * p[i - 1];
        }
        assert_eq!(s % k as i64, 0);
        e.push(s / k as i64);
    }
    e
}

fn exterior_oracle(g: &FinMatGroup) -> IntPoly {
    let mut sum = [0i64; 7];
    for x in g.elements() {
        for (s, v) in sum.iter_mut().zip(exterior_series(x)) {
            *s += v;
        }
    }
    let n = g.order() as i64;
    IntPoly::new(
        sum.iter()
            .map(|s| {
                assert_eq!(s % n, 0);
                s / n
            })
            .collect(),
    )
}

/// Orbifold cohomology: P_Y plus t² times the Poincaré polynomial of
/// Fix(g)/C(g) for each nontrivial conjugacy class.
fn orbifold_oracle(g: &FinMatGroup) -> IntPoly {
    let level = working_level(g);
    let mut total = exterior_oracle(g);
    let elliptic = IntPoly::new(vec![0, 0, 1, 2, 1]);
    let rational = IntPoly::new(vec![0, 0, 1, 0, 1]);
    for class in g.conjugacy_classes() {
        let x = class[0];
        if x.is_identity() {
            continue;
        }
        let c = g.centralizer(&x);
        let mut comps = fixed_components(&x, level).unwrap();
        while let Some(k) = comps.pop() {
            let mut flips = false;
            for y in c.elements() {
                let img = k.act(y);
                if img.same_curve(&k) {
                    flips |= k.affine_map(y).unwrap().sign == -1;
                } else {
                    comps.retain(|o| !o.same_curve(&img));
                }
            }
            total = total + if flips { rational.clone() } else { elliptic.clone() };
        }
    }
    total
}

fn criterion_1(runs: &[CatalogRun], elapsed: f64) -> Outcome {
    let mut o = Outcome::new();
    for (r, case) in runs.iter().zip(golden::CASES.iter()) {
        let p_x = &r.pipeline.polynomials.p_x;
        o.check(*p_x == poly(case.p_x), || {
            format!("{}: P_X {p_x} vs {}", case.name, case.p_x)
        });
        let orb = orbifold_oracle(&r.group);
        o.check(*p_x == orb, || {
            format!("{}: P_X {p_x} vs orbifold {orb}", case.name)
        });
    }
    for (name, s) in [
        ("D4(1)", "t^6 + 51t^4 + 8t^3 + 51t^2 + 1"),
        ("S4(2)", "t^6 + 11t^4 + 8t^3 + 11t^2 + 1"),
        ("S4(3)", "t^6 + 11t^4 + 8t^3 + 11t^2 + 1"),
    ] {
        o.check(run(runs, name).pipeline.polynomials.p_x == poly(s), || {
            format!("{name}: P_X")
        });
    }
    o.check(elapsed < 5.0, || format!("catalog run took {elapsed:.2}s"));
    o
}

fn criterion_2(runs: &[CatalogRun]) -> Outcome {
    let mut o = Outcome::new();
    for r in runs {
        let expected = match &r.entry.name[..2] {
            "D4" => "t^6 + 3t^4 + 8t^3 + 3t^2 + 1",
            "A4" | "S4" => "t^6 + t^4 + 4t^3 + t^2 + 1",
            _ => "t^6 + 2t^4 + 6t^3 + 2t^2 + 1",
        };
        let p_y = &r.pipeline.polynomials.p_y;
        o.check(*p_y == poly(expected), || format!("{}: P_Y {p_y}", r.entry.name));
        let oracle = exterior_oracle(&r.group);
        o.check(*p_y == oracle, || format!("{}: oracle {oracle}", r.entry.name));
        let det_sum: i64 = r
            .group
            .elements()
            .iter()
            .map(|g| (IntMat3::IDENTITY - g.scale(-1)).det().pow(2))
            .sum();
        o.check(p_y.eval(1) * r.group.order() as i64 == det_sum, || {
            format!("{}: P_Y(1)·|G| vs Σ det(I+g)²", r.entry.name)
        });
    }
    o
}

fn criterion_3(runs: &[CatalogRun]) -> Outcome {
    let mut o = Outcome::new();
    for name in ["S4(2)", "S4(3)", "D12", "D6(1)"] {
        let case = golden::case(name).unwrap();
        let p = &run(runs, name).pipeline.polynomials;
        for (label, got, want) in [
            ("P_1", &p.p1, case.p1),
            ("P_2", &p.p2, case.p2),
            ("P_3", &p.p3, case.p3),
        ] {
            o.check(*got == poly(want), || format!("{name}: {label} {got} vs {want}"));
        }
    }
    let p = &run(runs, "S4(2)").pipeline.polynomials;
    o.check(p.p1 == poly("52t^2 + 16"), || "S4(2) P_1".into());
    o.check(p.p2 == poly("10t^4 + 4t^3 - 33t^2 - 33"), || "S4(2) P_2".into());
    o
}

fn criterion_4(runs: &[CatalogRun]) -> Outcome {
    let mut o = Outcome::new();
    let v = verify_runs(runs);
    for c in v.checks.iter().filter(|c| c.item.starts_with("curve")) {
        o.check(c.pass, || {
            format!("{} {}: {} vs {}", c.group, c.item, c.expected, c.actual)
        });
    }
    let rows: usize = golden::CASES.iter().map(|c| c.rows.len()).sum();
    o.check(v.count_for("curve row").1 == rows, || {
        "not every row was checked".into()
    });
    let d61 = run(runs, "D6(1)");
    let z3 = d61
        .pipeline
        .strata
        .curves
        .iter()
        .find(|c| c.iso == IsoType::Z3)
        .unwrap();
    o.check(z3.components == 9, || {
        format!("D6(1) Z3 components {}", z3.components)
    });
    let mut q: Vec<String> = z3
        .quotient_summary()
        .iter()
        .map(|(n, t, _)| format!("{n}x{}", t.label()))
        .collect();
    q.sort();
    o.check(q == ["1xP1", "4xA"], || format!("D6(1) Z3 quotient {q:?}"));
    o
}

fn criterion_5(runs: &[CatalogRun]) -> Outcome {
    let mut o = Outcome::new();
    for (r, case) in runs.iter().zip(golden::CASES.iter()) {
        let want: BTreeMap<IsoType, usize> = case.census.iter().copied().collect();
        o.check(r.pipeline.strata.census == want, || {
            format!("{}: {:?}", case.name, r.pipeline.strata.census)
        });
    }
    let census = |n: &str| run(runs, n).pipeline.strata.census.clone();
    o.check(
        census("S4(2)") == BTreeMap::from([(IsoType::D4, 6), (IsoType::A4, 6), (IsoType::S4, 4)]),
        || "S4(2) census".into(),
    );
    o.check(census("D4(1)") == BTreeMap::from([(IsoType::D4, 64)]), || {
        "D4(1) census".into()
    });
    o.check(
        census("D12") == BTreeMap::from([(IsoType::D4, 12), (IsoType::D6, 16), (IsoType::D12, 4)]),
        || "D12 census".into(),
    );
    o
}

fn criterion_6(runs: &[CatalogRun]) -> Outcome {
    let mut o = Outcome::new();
    for (i, a) in runs.iter().enumerate() {
        for b in &runs[i + 1..] {
            o.check(
                a.pipeline.fingerprint.digest() != b.pipeline.fingerprint.digest(),
                || format!("{} and {} share a fingerprint", a.entry.name, b.entry.name),
            );
        }
    }
    let inc = |n: &str| run(runs, n).pipeline.fingerprint.incidence_components;
    o.check(inc("D4(3)") == 1, || format!("D4(3) incidence {}", inc("D4(3)")));
    o.check(inc("D4(4)") == 4, || format!("D4(4) incidence {}", inc("D4(4)")));
    o
}

fn criterion_7(runs: &[CatalogRun]) -> Outcome {
    let mut o = Outcome::new();
    let expected: BTreeMap<&str, &str> = [
        ("D4(1)", "D4(1)"),
        ("D4(2)", "D4(2)"),
        ("D4(3)", "D4(4)"),
        ("D4(4)", "D4(3)"),
        ("D6(1)", "D6(2)"),
        ("D6(2)", "D6(1)"),
        ("D6(3)", "D6(3)"),
        ("D8(1)", "D8(1)"),
        ("D8(2)", "D8(2)"),
        ("D12", "D12"),
        ("A4(1)", "A4(1)"),
        ("A4(2)", "A4(3)"),
        ("A4(3)", "A4(2)"),
        ("S4(1)", "S4(1)"),
        ("S4(2)", "S4(3)"),
        ("S4(3)", "S4(2)"),
    ]
    .into();
    let report = duality_from_runs(runs, 3).unwrap();
    let self_dual = report.iter().filter(|e| e.is_self_dual()).count();
    o.check(self_dual == 8, || format!("{self_dual} self-dual classes"));
    for e in &report {
        let want = expected[e.class.as_str()];
        o.check(e.dual.as_deref() == Some(want), || {
            format!("{} dual {:?}", e.class, e.dual)
        });
        let (Some(dual), Some(w)) = (&e.dual, &e.witness) else {
            continue;
        };
        let t = run(runs, &e.class).group.transpose();
        let target = &run(runs, dual).group;
        o.check(w.max_abs_entry() <= 3 && w.det().abs() == 1, || {
            format!("{} witness {w}", e.class)
        });
        o.check(t.conjugate_by(w).elements() == target.elements(), || {
            format!("{} witness does not conjugate", e.class)
        });
        let (a, b) = (
            &run(runs, &e.class).pipeline.polynomials.p_x,
            &run(runs, dual).pipeline.polynomials.p_x,
        );
        o.check(a == b, || format!("{} and {dual}: P_X differ", e.class));
    }
    o
}

/// #{a ∈ (ℤ/N)³ : h·a ≡ a}.
fn brute_fixed_count(h: &IntMat3, n: i64) -> i64 {
    let mut count = 0;
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                if h.apply_mod(&[x, y, z], n) == [x, y, z] {
                    count += 1;
                }
            }
        }
    }
    count
}

fn criterion_8(runs: &[CatalogRun]) -> Outcome {
    let mut o = Outcome::new();
    let mut seen = std::collections::BTreeSet::new();
    for r in runs {
        for h in r.group.elements() {
            if h.is_identity() || !seen.insert(*h) {
                continue;
            }
            let (d1, d2) = curve_invariants(h).unwrap();
            let expected = (d1 * d2).pow(2) as usize;
            for n in [12, 24] {
                let comps = fixed_components(h, TorsionLevel(n)).unwrap().len();
                // A component meets the N-torsion in N² points when d1·d2 | N.
                let per_copy = brute_fixed_count(h, n);
                let brute = (per_copy / n).pow(2) as usize;
                o.check(per_copy % n == 0, || {
                    format!("{h}: {per_copy} fixed points at level {n}")
                });
                o.check(comps == expected && brute == expected, || {
                    format!("{h} level {n}: snf {expected}, components {comps}, brute force {brute}")
                });
            }
        }
    }

    let mut runner = TestRunner::new(Config {
        cases: 200,
        failure_persistence: None,
        ..Config::default()
    });
    let rows_cols = (1usize..=4, 1usize..=4);
    let strategy =
        rows_cols.prop_flat_map(|(r, c)| prop::collection::vec(prop::collection::vec(-9i64..=9, c), r));
    let result = runner.run(&strategy, |rows| {
        let m = IntMatrix::from_rows(&rows);
        let s = smith_normal_form(&m);
        let prod = s.u.mul(&m).mul(&s.v);
        prop_assert_eq!(&prod, &s.d);
        for i in 0..m.nrows() {
            for j in 0..m.ncols() {
                if i != j {
                    prop_assert_eq!(s.d[(i, j)], 0);
                }
            }
        }
        let diag: Vec<i64> = (0..m.nrows().min(m.ncols())).map(|i| s.d[(i, i)]).collect();
        prop_assert!(diag.iter().all(|&x| x >= 0));
        for w in diag.windows(2) {
            let divides = if w[0] == 0 { w[1] == 0 } else { w[1] % w[0] == 0 };
            prop_assert!(divides, "chain {:?}", diag);
        }
        prop_assert_eq!(integer_det(&s.u).abs(), 1);
        prop_assert_eq!(integer_det(&s.v).abs(), 1);
        Ok(())
    });
    o.check(result.is_ok(), || format!("snf property: {result:?}"));
    o
}

/// Bareiss fraction-free determinant.
fn integer_det(m: &IntMatrix) -> i64 {
    let n = m.nrows();
    let mut a: Vec<Vec<i128>> = (0..n)
        .map(|i| m.row(i).iter().map(|&x| x as i128).collect())
        .collect();
    let mut sign = 1;
    let mut prev = 1i128;
    for k in 0..n {
        if a[k][k] == 0 {
            let Some(p) = (k + 1..n).find(|&i| a[i][k] != 0) else {
                return 0;
            };
            a.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
        }
        prev = a[k][k];
    }
    if n == 0 {
        return 1;
    }
    (sign * a[n - 1][n - 1]) as i64
}

fn criterion_9(runs: &[CatalogRun]) -> Outcome {
    let mut o = Outcome::new();
    for r in runs {
        let name = &r.entry.name;
        let p = &r.pipeline.polynomials;
        o.check(p.p_x == &(&p.p1 + &p.p2) + &p.p3, || {
            format!("{name}: P_X ≠ P_1 + P_2 + P_3")
        });
        let b: Vec<i64> = (0..=6).map(|k| p.p_x.coeff(k)).collect();
        o.check(p.p_x.degree() == Some(6), || format!("{name}: degree"));
        o.check((0..=6).all(|i| b[i] == b[6 - i]), || {
            format!("{name}: not palindromic")
        });
        o.check(b[1] == 0 && b[5] == 0, || format!("{name}: b1/b5"));
        o.check(b[0] == 1 && b[6] == 1, || format!("{name}: b0/b6"));
        o.check(b[3] % 2 == 0, || format!("{name}: b3 odd"));
        let base = report_from(name, &r.entry.generators, &r.pipeline);
        let doubled = build_report(
            name,
            &r.entry.generators,
            Some(TorsionLevel(2 * working_level(&r.group).0)),
        );
        o.check(doubled.ok().as_ref() == Some(&base), || {
            format!("{name}: doubled level changes the report")
        });
        o.check(
            base.to_json() == report_from(name, &r.entry.generators, &r.pipeline).to_json(),
            || format!("{name}: report bytes unstable"),
        );
    }
    o
}

fn main() -> ExitCode {
    let start = Instant::now();
    let runs = run_catalog().expect("catalog runs");
    let elapsed = start.elapsed().as_secs_f64();
    let results = [
        (
            "1 Poincaré polynomials of the catalog",
            criterion_1(&runs, elapsed),
        ),
        ("2 P_Y families and exterior-power oracle", criterion_2(&runs)),
        ("3 strata polynomials P_1, P_2, P_3", criterion_3(&runs)),
        ("4 curve tables", criterion_4(&runs)),
        ("5 0-stratum censuses", criterion_5(&runs)),
        ("6 fingerprint separation", criterion_6(&runs)),
        ("7 duality with witnesses", criterion_7(&runs)),
        ("8 SNF and brute-force oracles", criterion_8(&runs)),
        ("9 structural properties", criterion_9(&runs)),
    ];
    let mut all = true;
    for (label, o) in &results {
        println!("criterion {label}: {}", if o.ok { "PASS" } else { "FAIL" });
        for n in &o.notes {
            println!("    {n}");
        }
        all &= o.ok;
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
