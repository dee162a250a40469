use extremal::counting::{count_cliques, count_triangles, count_triangles_oracle, list_cliques};
use extremal::covering::{tau_triangle, tau_triangle_oracle};
use extremal::families::{
    complete_bipartite, k_minus, k_st, k_t, turan, turan_edge_count, turan_minus, turan_sqsubset,
    FamilySpec,
};
use extremal::iso::are_isomorphic;
use extremal::VertexSet;

#[test]
fn worked_values() {
    let g = complete_bipartite(3, 4).unwrap();
    assert_eq!((g.edge_count(), count_triangles(&g)), (12, 0));
    assert_eq!(complete_bipartite(0, 5).unwrap().edge_count(), 0);

    let g = k_minus(3, 3).unwrap();
    assert_eq!((g.edge_count(), count_triangles(&g)), (10, 3));
    assert_eq!(count_triangles(&k_minus(3, 4).unwrap()), 4);
    assert_eq!(count_triangles(&k_minus(2, 1).unwrap()), 1);

    let g = k_t(4, 3).unwrap();
    assert_eq!((g.edge_count(), count_triangles_oracle(&g)), (13, 4));
    assert_eq!(count_triangles_oracle(&k_t(3, 1).unwrap()), 0);
    assert_eq!(count_triangles_oracle(&k_t(5, 4).unwrap()), 6);

    assert_eq!(turan_edge_count(8, 3).unwrap(), 21);
    assert_eq!(count_cliques(&turan(9, 3).unwrap(), 4), 0);
    assert_eq!(count_cliques(&turan_minus(9, 4).unwrap(), 4), 9);
    assert_eq!(count_triangles_oracle(&turan_minus(6, 3).unwrap()), 3);
    assert_eq!(count_cliques(&turan_sqsubset(9, 4).unwrap(), 4), 12);
    assert_eq!(count_triangles_oracle(&turan_sqsubset(6, 3).unwrap()), 4);

    let g = k_st(10, 2, 1).unwrap();
    assert_eq!((g.edge_count(), count_triangles(&g)), (26, 8));
    assert_eq!(tau_triangle_oracle(&g), 2);
    assert_eq!(count_triangles(&k_st(14, 3, 2).unwrap()), 19);
    assert!(k_st(10, 2, 2).is_err());
}

#[test]
fn predictions_without_building() {
    let p = FamilySpec::KMinus { i: 4, m: 4 }.predict().unwrap();
    assert_eq!(p.triangles, Some(4));
    assert_eq!(
        FamilySpec::KSt { n: 10, s: 2, t: 1 }
            .predict()
            .unwrap()
            .edges,
        26
    );
    assert_eq!(
        FamilySpec::Turan { n: 8, r: 3 }.predict().unwrap().edges,
        21
    );
}

#[test]
fn structural_identities() {
    for n in 2..=16 {
        assert!(are_isomorphic(
            &turan(n, 2).unwrap(),
            &complete_bipartite(n.div_ceil(2), n / 2).unwrap()
        ));
    }
    for i in 3..8 {
        for m in 1..8 {
            assert_eq!(
                k_minus(i, m).unwrap().edge_count(),
                k_t(i, m).unwrap().edge_count()
            );
        }
    }
    for n in (6..=20).step_by(2) {
        let g = k_st(n, 2, 1).unwrap();
        assert_eq!(count_triangles(&g), n as u64 - 2);
        assert_eq!(tau_triangle(&g).tau, 2);
    }
}

fn common_vertices(g: &extremal::Graph, k: usize) -> VertexSet {
    list_cliques(g, k)
        .into_iter()
        .fold(g.vertices(), |acc, c| acc.intersection(c))
}

#[test]
fn clique_intersections() {
    for (n, k) in [(9, 4), (10, 5), (8, 3)] {
        let minus = turan_minus(n, k).unwrap();
        assert_eq!(common_vertices(&minus, k), [0, 1].into_iter().collect());
        let sq = turan_sqsubset(n, k).unwrap();
        assert!(common_vertices(&sq, k).is_empty());
    }
}

#[test]
fn tau_claims_on_valid_sizes() {
    let mut checked = 0;
    for spec in FamilySpec::all_up_to(20) {
        let Some(claim) = spec.predict().unwrap().tau_expected else {
            continue;
        };
        if !claim.valid {
            continue;
        }
        let g = spec.build().unwrap();
        assert_eq!(tau_triangle(&g).tau, claim.tau, "{spec}");
        checked += 1;
    }
    assert!(checked > 50);
}

#[test]
fn spec_strings_round_trip() {
    for spec in FamilySpec::all_up_to(12) {
        let text = spec.to_string();
        assert_eq!(text.parse::<FamilySpec>().unwrap(), spec, "{text}");
    }
    assert!("kminus:3".parse::<FamilySpec>().is_err());
    assert!("petersen:10".parse::<FamilySpec>().is_err());
}
