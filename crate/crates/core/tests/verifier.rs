use std::collections::BTreeSet;

use ecc_spectra::verify::{sweep, DEFAULT_MAX_ORDER};
use ecc_spectra::*;

fn opts(jobs: usize) -> CheckOptions {
    CheckOptions {
        jobs: Some(jobs),
        ..CheckOptions::default()
    }
}

#[test]
fn every_check_holds_on_the_default_range() {
    let reports = check_all(4, DEFAULT_MAX_ORDER, CheckOptions::default()).unwrap();
    assert_eq!(reports.len(), TheoremId::ALL.len());
    for r in &reports {
        assert_eq!(r.verdict, Verdict::Holds, "{}: {:?}", r.id, r.counterexamples);
        assert!(r.counterexamples.is_empty());
    }
}

#[test]
fn large_orders_hold() {
    for r in check_all(11, 12, CheckOptions::default()).unwrap() {
        assert!(r.holds(), "{}", r.id);
    }
}

#[test]
fn verdict_tracks_counterexamples() {
    for r in check_all(4, 8, CheckOptions::default()).unwrap() {
        assert_eq!(r.verdict == Verdict::Fails, !r.counterexamples.is_empty());
    }
}

#[test]
fn energy_claims_are_informational_at_five_and_six() {
    let r = check(TheoremId::EnergyMin, 5, 6, CheckOptions::default()).unwrap();
    assert_eq!(r.verdict, Verdict::Informational);
    assert_eq!(r.informational.len(), 2);
    let p5 = CanonicalCode::of(&path(5).unwrap());
    let t4 = CanonicalCode::of(&build_dnd(6, 4, 0, 1).unwrap());
    assert_eq!(r.informational[0].code, p5);
    assert!((r.informational[0].observed - 10.928_203_230_275_509).abs() < 1e-9);
    assert_eq!(r.informational[1].code, t4);
    assert!((r.informational[1].observed - 12.310_734_148_701_014).abs() < 1e-9);

    // the chair beats P5 for the maximum at n = 5
    let r = check(TheoremId::EnergyMax, 5, 5, CheckOptions::default()).unwrap();
    assert_eq!(r.verdict, Verdict::Informational);
    assert_eq!(r.informational[0].code, CanonicalCode::of(&build_t3(5, 0, 1).unwrap()));

    // asserted at n = 4 and 7
    let r = check(TheoremId::EnergyMin, 4, 7, CheckOptions::default()).unwrap();
    assert_eq!(r.verdict, Verdict::Holds);
}

#[test]
fn witnesses_are_reproducible() {
    for id in [TheoremId::Xi1Min, TheoremId::Xi1Max, TheoremId::Xi2Min, TheoremId::XinMin, TheoremId::EnergyMax] {
        let r = check(id, 7, 9, CheckOptions::default()).unwrap();
        let stat = match id {
            TheoremId::Xi1Min | TheoremId::Xi1Max => ExtremalStatistic::Xi1Complement,
            TheoremId::Xi2Min => ExtremalStatistic::Xi2Complement,
            TheoremId::XinMin => ExtremalStatistic::XinComplement,
            _ => ExtremalStatistic::EnergyComplement,
        };
        for w in &r.witnesses {
            let t = Tree::from_edges(w.n, w.edges.iter().copied()).unwrap();
            assert_eq!(CanonicalCode::of(&t), w.code);
            assert!((stat.evaluate(&t).unwrap() - w.value).abs() < 1e-10);
        }
    }
}

#[test]
fn attainers_reproduce_extremal_values() {
    for n in 5..=10 {
        let p = path(n).unwrap();
        let t = build_t3(n, 0, n - 4).unwrap();
        let x = ExtremalStatistic::Xi1Complement;
        assert!((x.evaluate(&p).unwrap() - xi1_path_complement(n).unwrap()).abs() < 1e-8);
        assert!((x.evaluate(&t).unwrap() - bounds_diam3(n).unwrap().xi1_max.value).abs() < 1e-8);
        let e = ExtremalStatistic::EnergyComplement;
        assert!((e.evaluate(&p).unwrap() - path_complement_energy(n).unwrap()).abs() < 1e-8);
        let tree_min = tree_ecc_minima(n).unwrap();
        let ng = nordhaus_gaddum_bounds(n).unwrap();
        assert!((ExtremalStatistic::Xi2Tree.evaluate(&t).unwrap() - tree_min[0].value).abs() < 1e-8);
        assert!((ExtremalStatistic::EnergyTree.evaluate(&t).unwrap() - tree_min[1].value).abs() < 1e-8);
        assert!((ExtremalStatistic::NgXi2.evaluate(&t).unwrap() - ng.0.value).abs() < 1e-8);
        assert!((ExtremalStatistic::NgEnergy.evaluate(&t).unwrap() - ng.1.value).abs() < 1e-8);
    }
}

#[test]
fn tree_minima_hold_over_all_trees() {
    for n in 5..=10 {
        let bound = tree_ecc_minima(n).unwrap();
        for r in sweep(n).unwrap() {
            assert!(ExtremalStatistic::Xi2Tree.of(&r) >= bound[0].value - 1e-8);
            assert!(ExtremalStatistic::EnergyTree.of(&r) >= bound[1].value - 1e-8);
        }
    }
}

#[test]
fn adjacency_bounds_hold_over_all_trees() {
    for n in 4..=10 {
        let b = adjacency_tree_bounds(n, None).unwrap();
        let skew = CanonicalCode::of(&build_t3(n, 0, n - 4).unwrap());
        for (code, t) in enumerate_with_connected_complement(n).unwrap() {
            let s = eigenvalues(&adjacency_matrix(&t)).unwrap();
            assert!(s.spectral_radius() >= b[0].value - 1e-9);
            assert!(s.spectral_radius() <= b[1].value + 1e-9);
            if code != skew {
                assert!(s.second_largest() >= 1.0 - 1e-9, "n = {n}, {code}");
            }
        }
    }
}

#[test]
fn reports_do_not_depend_on_worker_count() {
    let strip = |v: Vec<TheoremReport>| -> Vec<TheoremReport> { v.into_iter().map(TheoremReport::without_timing).collect() };
    let one = strip(check_all(4, 9, opts(1)).unwrap());
    let four = strip(check_all(4, 9, opts(4)).unwrap());
    assert_eq!(one, four);
    assert_eq!(
        serde_json::to_string(&one).unwrap(),
        serde_json::to_string(&four).unwrap()
    );
}

#[test]
fn report_json_shape() {
    let r = check(TheoremId::Xi1Min, 5, 6, CheckOptions::default()).unwrap().without_timing();
    let v = serde_json::to_value(&r).unwrap();
    for key in ["id", "n_range", "verdict", "tolerance", "witnesses", "counterexamples", "informational", "notes"] {
        assert!(v.get(key).is_some(), "missing {key}");
    }
    assert!(v.get("wall_time_s").is_none());
    assert_eq!(v["id"], "XI1_MIN");
    assert_eq!(v["verdict"], "holds");
    assert_eq!(v["n_range"], serde_json::json!([5, 6]));
    let w = &v["witnesses"][0];
    assert_eq!(w["code"], CanonicalCode::of(&path(5).unwrap()).as_str());
    assert!(w["edges"].is_array() && w["value"].is_f64());
}

#[test]
fn extremal_tables() {
    let t = extremal_table(ExtremalStatistic::Xi1Complement, 5, CheckOptions::default()).unwrap();
    assert_eq!(t.len(), 2);
    assert_eq!(t[0].code, CanonicalCode::of(&build_t3(5, 0, 1).unwrap()));
    assert!((t[0].value - 4.398_397_777_199_905).abs() < 1e-9);
    assert!((t[1].value - 2.0 * 3f64.sqrt()).abs() < 1e-9);

    let t = extremal_table(ExtremalStatistic::EnergyComplement, 6, CheckOptions::default()).unwrap();
    assert_eq!(t[0].code, CanonicalCode::of(&path(6).unwrap()));
    assert!((t[0].value - 13.975_836_829_739_736).abs() < 1e-9);

    let t = extremal_table(ExtremalStatistic::Xi2Complement, 7, CheckOptions::default()).unwrap();
    let last = t.last().unwrap();
    assert_eq!(last.code, CanonicalCode::of(&build_t3(7, 0, 3).unwrap()));
    assert!((last.value - bounds_diam3(7).unwrap().xi2_min.value).abs() < 1e-9);
    let codes: BTreeSet<_> = t.iter().map(|r| r.code.clone()).collect();
    assert_eq!(codes.len(), 10);

    assert!(extremal_table(ExtremalStatistic::NgXi2, 13, CheckOptions::default()).is_err());
}

#[test]
fn appendix_rows_are_fixed() {
    let r = appendix_table_crosscheck().unwrap();
    let table = r.table.unwrap();
    let labels: Vec<_> = table.iter().map(|row| row.label.as_str()).collect();
    assert_eq!(labels, ["T1", "T2", "T3", "T4", "T5", "T6", "T7"]);
    assert!(table.iter().all(|row| row.code.order() == 5 || row.code.order() == 6));
    let distinct: BTreeSet<_> = table.iter().map(|row| row.code.clone()).collect();
    assert_eq!(distinct.len(), 7);
}
