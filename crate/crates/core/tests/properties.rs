mod common;

use common::{all_color_sets, arb_gem, arb_gem_of_dim, boundary_count, boundary_g, faces, fig, g_of, regular_of, two_colorable};
use gemkit_core::catalog;
use gemkit_core::constructions::{connected_sum, double};
use gemkit_core::invariants::{all_orderings, enumerate_schemes, regular_genus, rho_epsilon_from_census};
use gemkit_core::{census, face_vector, is_bipartite, parse_gem, write_gem, ColorSet, ResidueCensus};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn census_agrees_with_bfs(g in arb_gem(4, 7, false)) {
        let c = census(&g).unwrap();
        for set in all_color_sets(g.dim()) {
            let cs = ColorSet::from(set.as_slice());
            prop_assert_eq!(c.g(cs), g_of(&g, &set));
            prop_assert_eq!(c.regular(cs), regular_of(&g, &set));
            if !g.is_closed() && !set.contains(&g.dim()) {
                prop_assert_eq!(c.boundary_g(cs), boundary_g(&g, &set));
            }
        }
        prop_assert_eq!(c.boundary_components(), boundary_count(&g));
        prop_assert_eq!(face_vector(&g).f, faces(&g));
        prop_assert_eq!(is_bipartite(&g), two_colorable(&g));
    }

    #[test]
    fn regular_counts_never_exceed_counts(g in arb_gem(4, 7, false)) {
        let c = ResidueCensus::local(&g);
        for set in all_color_sets(g.dim()) {
            let cs = ColorSet::from(set.as_slice());
            prop_assert!(c.regular(cs) <= c.g(cs));
            if !set.contains(&g.dim()) {
                prop_assert_eq!(c.regular(cs), c.g(cs));
            }
        }
    }

    #[test]
    fn text_round_trip(g in arb_gem(5, 6, false)) {
        let text = write_gem(&g);
        let back = parse_gem(&text).unwrap();
        prop_assert_eq!(write_gem(&back), text);
        prop_assert_eq!(back, g);
    }

    #[test]
    fn census_ignores_vertex_numbering(
        (g, order) in arb_gem(4, 6, false).prop_flat_map(|g| {
            let n = g.vertex_count();
            (Just(g), Just((0..n).collect::<Vec<_>>()).prop_shuffle())
        })
    ) {
        let h = g.permute_vertices(&order).unwrap();
        prop_assert_eq!(census(&h).unwrap().boundary_components(), census(&g).unwrap().boundary_components());
        let (a, b) = (ResidueCensus::local(&g), ResidueCensus::local(&h));
        for set in all_color_sets(g.dim()) {
            let cs = ColorSet::from(set.as_slice());
            prop_assert_eq!(a.g(cs), b.g(cs));
            prop_assert_eq!(a.regular(cs), b.regular(cs));
        }
    }

    #[test]
    fn reversed_schemes_agree(g in arb_gem(4, 6, false)) {
        let c = census(&g).unwrap();
        for s in all_orderings(g.dim()) {
            let a = rho_epsilon_from_census(&c, &s).unwrap();
            let b = rho_epsilon_from_census(&c, &s.reversed()).unwrap();
            prop_assert_eq!((a.chi, a.lambda, a.rho), (b.chi, b.lambda, b.rho));
            let canon = rho_epsilon_from_census(&c, &s.canonical()).unwrap();
            prop_assert_eq!(a.rho, canon.rho);
        }
    }

    #[test]
    fn double_residues(g in arb_gem(4, 6, false)) {
        prop_assume!(!g.is_closed());
        let d = g.dim();
        let (dg, prov) = double(&g).unwrap();
        prop_assert!(dg.is_closed());
        prop_assert_eq!(dg.vertex_count(), 2 * g.vertex_count());
        prop_assert_eq!(prov.origin.len(), dg.vertex_count());
        for set in all_color_sets(d) {
            let expected = if set.contains(&d) {
                g_of(&g, &set) + regular_of(&g, &set)
            } else {
                2 * g_of(&g, &set)
            };
            prop_assert_eq!(g_of(&dg, &set), expected);
        }
    }

    #[test]
    fn sums_of_bipartite_graphs_are_bipartite(
        (a, b) in (2usize..=4).prop_flat_map(|d| (arb_gem_of_dim(d, 5, true), arb_gem_of_dim(d, 5, true))),
        i in any::<prop::sample::Index>(),
        j in any::<prop::sample::Index>(),
    ) {
        let internal = |g: &gemkit_core::ColoredGraph| -> Vec<usize> {
            (0..g.vertex_count()).filter(|&v| !g.is_boundary(v)).collect()
        };
        let (ia, ib) = (internal(&a), internal(&b));
        prop_assume!(!ia.is_empty() && !ib.is_empty());
        let (u, v) = (ia[i.index(ia.len())], ib[j.index(ib.len())]);
        prop_assert!(two_colorable(&a) && two_colorable(&b));
        let s = connected_sum(&a, u, &b, v).unwrap();
        prop_assert_eq!(s.vertex_count(), a.vertex_count() + b.vertex_count() - 2);
        prop_assert!(two_colorable(&s));
        prop_assert_eq!(s.boundary_vertices().len(), a.boundary_vertices().len() + b.boundary_vertices().len());
    }
}

#[test]
fn every_raw_ordering_matches_its_canonical_scheme_on_catalog() {
    for e in catalog::builtins() {
        let c = census(&e.graph).unwrap();
        let orderings = all_orderings(e.graph.dim());
        let expected = (1..=e.graph.dim()).product::<usize>();
        assert_eq!(orderings.len(), expected, "{}", e.name);
        for s in orderings {
            let a = rho_epsilon_from_census(&c, &s).unwrap().rho;
            assert_eq!(a, rho_epsilon_from_census(&c, &s.reversed()).unwrap().rho, "{} {s}", e.name);
            assert_eq!(a, rho_epsilon_from_census(&c, &s.canonical()).unwrap().rho, "{} {s}", e.name);
        }
    }
}

#[test]
fn scheme_counts() {
    assert_eq!(enumerate_schemes(4).len(), 12);
    assert_eq!(enumerate_schemes(3).len(), 3);
    assert_eq!(enumerate_schemes(2).len(), 1);
    assert_eq!(all_orderings(4).len(), 24);
}

#[test]
fn genus_is_minimum_over_schemes() {
    let p = regular_genus(&fig("fig4_boundary16")).unwrap();
    assert!(p.schemes.iter().all(|e| e.genus.rho >= p.rho));
    assert_eq!(p.entry(&p.argmin).unwrap().genus.rho, p.rho);
}
