mod common;

use common::fig;
use gemkit_core::catalog;
use gemkit_core::constructions::{crystallize_double, interval_product, sphere_connector_sum};
use gemkit_core::invariants::ManifoldMeta;
use gemkit_core::verify::{verify_bounds, verify_identities, Relation};
use gemkit_core::{parse_gem, Crystallization, Ratio};

/// fig2_s3xI with two color-0 partners swapped: `1-10 2-4` becomes `1-4 2-10`.
fn corrupted_fig2() -> gemkit_core::ColoredGraph {
    let text = catalog::builtin_text("fig2_s3xI").unwrap();
    let line = text.lines().find(|l| l.starts_with("color 0:")).unwrap();
    assert!(line.contains("1-10 2-4"));
    parse_gem(&text.replace(line, &line.replace("1-10 2-4", "1-4 2-10"))).unwrap()
}

#[test]
fn every_catalog_entry_passes() {
    for e in catalog::builtins() {
        let meta = e.manifold_meta().unwrap();
        let report = verify_identities(&e.graph, &meta).unwrap();
        let failed: Vec<_> = report.failures().map(|c| c.name.clone()).collect();
        assert!(report.pass, "{}: {failed:?}", e.name);
        assert!(!report.checks.is_empty(), "{}", e.name);
        let bounds = verify_bounds(&e.graph, &meta).unwrap();
        assert!(bounds.pass, "{}", e.name);
    }
}

#[test]
fn fig2_runs_all_boundary_families() {
    let e = catalog::builtin("fig2_s3xI").unwrap();
    let report = verify_identities(&e.graph, &e.manifold_meta().unwrap()).unwrap();
    assert!(report.pass);
    assert_eq!(report.families().len(), 9);
}

#[test]
fn fig3_last_color_triples_are_tight() {
    let e = catalog::builtin("fig3_d3xs1").unwrap();
    let report = verify_identities(&e.graph, &e.manifold_meta().unwrap()).unwrap();
    assert!(report.pass);
    let rows: Vec<_> = report
        .checks
        .iter()
        .filter(|c| c.family == "regular_last_color_triples")
        .collect();
    assert!(!rows.is_empty());
    for c in rows {
        assert_eq!(c.relation, Relation::Ge);
        assert_eq!((c.left, c.right), (Ratio::from_integer(0), Ratio::from_integer(0)));
    }
}

#[test]
fn closed_sphere_runs_closed_subset() {
    let g = fig("s4_order2");
    let report = verify_identities(&g, &ManifoldMeta::derive(&g).unwrap()).unwrap();
    assert!(report.pass);
    assert_eq!(report.crystallization, Crystallization::Closed);
    assert!(report.family_passes("closed_triple_relation"));
    assert!(report.family_passes("closed_embedding_reduction"));
    assert!(report.skipped.iter().any(|s| s.family == "boundary_split"));
}

#[test]
fn bounds_are_sharp_on_figures() {
    let e = catalog::builtin("fig2_s3xI").unwrap();
    let b = verify_bounds(&e.graph, &e.manifold_meta().unwrap()).unwrap();
    assert!(b.pass);
    let sharp = |name: &str| b.checks.iter().any(|c| c.name == name && c.sharp == Some(true));
    assert!(sharp("2p") && sharp("2p + 2p̄"));

    let e = catalog::builtin("fig4_boundary16").unwrap();
    let b = verify_bounds(&e.graph, &e.manifold_meta().unwrap()).unwrap();
    for name in ["2p", "2p + 2p̄", "2p - 2p̄"] {
        let c = b.checks.iter().find(|c| c.name == name).unwrap();
        assert_eq!(c.sharp, Some(true), "{name}");
    }
    let values: Vec<_> = ["2p", "2p + 2p̄", "2p - 2p̄"]
        .iter()
        .map(|n| b.checks.iter().find(|c| c.name == *n).unwrap().right)
        .collect();
    assert_eq!(values, vec![Ratio::from_integer(16), Ratio::from_integer(24), Ratio::from_integer(8)]);
}

#[test]
fn connector_sum_is_sharp_for_complexity() {
    let f3 = fig("fig3_d3xs1");
    let sum = sphere_connector_sum(&f3, 0, &f3, 0).unwrap();
    let meta = ManifoldMeta::new(2, -2).with_rank(2);
    let b = verify_bounds(&sum, &meta).unwrap();
    assert!(b.pass);
    let k = b.checks.iter().find(|c| c.name.starts_with("k >= 3χ")).unwrap();
    assert_eq!(k.left, Ratio::from_integer(12));
    assert_eq!(k.sharp, Some(true));
}

#[test]
fn construction_outputs_pass() {
    let f2 = fig("fig2_s3xI");
    let f3 = fig("fig3_d3xs1");
    let outputs = vec![
        sphere_connector_sum(&f3, 0, &f3, 0).unwrap(),
        sphere_connector_sum(&f2, 3, &f3, 0).unwrap(),
        interval_product(&fig("s2xs1_8")).unwrap(),
        interval_product(&fig("rp3_8")).unwrap(),
        interval_product(&fig("s3_order2")).unwrap(),
        crystallize_double(&f3).unwrap().graph,
        crystallize_double(&fig("fig4_boundary16")).unwrap().graph,
    ];
    for g in outputs {
        let report = verify_identities(&g, &ManifoldMeta::derive(&g).unwrap()).unwrap();
        let failed: Vec<_> = report.failures().map(|c| c.name.clone()).collect();
        assert!(report.pass, "{} vertices: {failed:?}", g.vertex_count());
    }
}

#[test]
fn corrupted_fig2_is_rejected() {
    let g = corrupted_fig2();
    let report = verify_identities(&g, &ManifoldMeta::derive(&g).unwrap()).unwrap();
    assert!(!report.pass);
    assert!(report.failures().any(|c| c.family == "vertex_census"));
    assert!(report.failures().any(|c| c.family == "genus_formulas"));
}

#[test]
fn mismatched_meta_fails_consistency() {
    let e = catalog::builtin("fig3_d3xs1").unwrap();
    let meta = ManifoldMeta::new(2, 0).with_rank(1);
    let b = verify_bounds(&e.graph, &meta).unwrap();
    assert!(!b.pass);
    assert!(!b.family_passes("meta_consistency"));
}
