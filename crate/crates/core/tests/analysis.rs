use kummer_core::analysis::{duality_from_runs, inclusion_from_runs, run_catalog, verify_runs};

#[test]
fn catalog_verifies_cell_by_cell() {
    let runs = run_catalog().unwrap();
    let v = verify_runs(&runs);
    assert!(v.passed(), "{:#?}", v.failures());
    assert_eq!(v.count_for("P_X"), (16, 16));
    assert_eq!(v.count_for("curve row").0, v.count_for("curve row").1);
}

#[test]
fn inclusion_diagram_edges() {
    let runs = run_catalog().unwrap();
    let d = inclusion_from_runs(&runs, 3).unwrap();
    assert!(d.inconclusive.is_empty(), "{:?}", d.inconclusive);
    assert!(d.edges.iter().all(|e| e.from != e.to));
    for (a, b) in [("D4(2)", "D12"), ("D4(3)", "D8(2)"), ("D4(4)", "D8(2)")] {
        assert!(d.has_edge(a, b), "{a} -> {b}");
    }
    assert!(["D4(1)", "D4(2)", "D4(3)", "D4(4)"]
        .iter()
        .any(|a| d.reachable(a, "S4(2)")));
    assert!(!d.reachable("D4(3)", "D4(4)") && !d.reachable("D4(4)", "D4(3)"));
    // covering relations only
    for e in &d.edges {
        assert!(!runs.iter().any(|m| {
            let m = m.entry.name.as_str();
            m != e.from && m != e.to && d.reachable(&e.from, m) && d.reachable(m, &e.to)
        }));
    }
    for e in &d.edges {
        let from = &runs.iter().find(|r| r.entry.name == e.from).unwrap().group;
        let to = &runs.iter().find(|r| r.entry.name == e.to).unwrap().group;
        assert!(
            from.conjugate_by(&e.witness).is_subgroup_of(to),
            "{} -> {}",
            e.from,
            e.to
        );
    }
}

#[test]
fn duality_is_an_involution() {
    let runs = run_catalog().unwrap();
    let d = duality_from_runs(&runs, 3).unwrap();
    for e in &d {
        let dual = e.dual.as_deref().unwrap();
        let back = d.iter().find(|x| x.class == dual).unwrap();
        assert_eq!(back.dual.as_deref(), Some(e.class.as_str()));
    }
    let d41 = d.iter().find(|e| e.class == "D4(1)").unwrap();
    assert_eq!(d41.witness, Some(kummer_core::IntMat3::IDENTITY));
}

#[test]
fn results_are_independent_of_thread_count() {
    let pool = rayon::ThreadPoolBuilder::new().num_threads(1).build().unwrap();
    let single = pool.install(|| run_catalog().unwrap());
    let multi = run_catalog().unwrap();
    for (a, b) in single.iter().zip(&multi) {
        let ra = kummer_core::report::report_from(&a.entry.name, &a.entry.generators, &a.pipeline);
        let rb = kummer_core::report::report_from(&b.entry.name, &b.entry.generators, &b.pipeline);
        assert_eq!(ra.to_json(), rb.to_json());
    }
}
