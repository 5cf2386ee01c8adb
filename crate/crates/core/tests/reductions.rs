use diam_core::generators::{complete, path};
use diam_core::metrics::diameter_value;
use diam_core::oracle::{min_deletion, min_deletion_from_pool, OracleBudget, Target};
use diam_core::reductions::*;
use diam_core::Graph;

fn k2(c: usize) -> VcInstance {
    VcInstance::new(complete(2), c)
}

#[test]
fn restricted_pool_matches_full_search_on_one_edge() {
    for art in [reduce_vc_meda5_diam3(&k2(1)).unwrap(), reduce_vc_meda5_diam4(&k2(1)).unwrap()] {
        let target = Target::DiameterExactly(art.target_d);
        let capped = OracleBudget::default().with_max_edges(500).with_max_subset_size(art.k);
        let full = min_deletion(&art.graph, target, &capped).unwrap().map(|f| f.len());
        let pool = min_deletion_from_pool(&art.graph, &art.restricted_pool(), target, &capped)
            .unwrap()
            .map(|f| f.len());
        assert_eq!(full, Some(3));
        assert_eq!(pool, full, "{}", art.source);
    }
}

#[test]
fn copies_multiply_the_minimum() {
    let single = reduce_vc_meda5_diam4(&k2(1)).unwrap();
    let double = amplify_copies(&k2(1), 1).unwrap();
    let min = |art: &ReductionArtifact| {
        min_deletion_from_pool(
            &art.graph,
            &art.restricted_pool(),
            Target::DiameterExactly(5),
            &OracleBudget::default().with_max_subset_size(art.k),
        )
        .unwrap()
        .map(|f| f.len())
    };
    assert_eq!(min(&single), Some(3));
    assert_eq!(min(&double), Some(6));
}

#[test]
fn role_map_is_total_and_consistent() {
    let art = reduce_vc_meda5_diam4(&VcInstance::new(path(3), 1)).unwrap();
    assert_eq!(art.roles.len(), art.graph.n());
    let k1 = art.vertices_where(|r| matches!(r, Role::Clique { which: 1, .. }));
    let k3 = art.vertices_where(|r| matches!(r, Role::Clique { which: 3, .. }));
    let k4 = art.vertices_where(|r| matches!(r, Role::Clique { which: 4, .. }));
    let hang = art.vertices_where(|r| {
        matches!(r, Role::Path { index: 1 | 2, .. } | Role::EdgeVertex { index: 1, .. })
    });
    assert_eq!(k1.len(), art.k + 1);
    for &a in &k1 {
        assert!(hang.iter().all(|&b| art.graph.has_edge(a, b)));
    }
    for &a in &k3 {
        assert!(k1.iter().chain(&k4).all(|&b| art.graph.has_edge(a, b)));
    }
    assert_eq!(art.roles[art.s], Role::S);
    assert_eq!(art.roles[art.t], Role::T);
}

#[test]
fn spec_vertex_count() {
    let art = reduce_vc_meda5_diam3(&k2(1)).unwrap();
    assert_eq!((art.graph.n(), art.k, diameter_value(&art.graph)), (20, 3, 3.into()));
}

#[test]
fn triangle_edges_can_all_go() {
    let art = triangle_chain(&reduce_vc_meda5_diam4(&k2(1)).unwrap(), 3).unwrap();
    for e in &art.chain_edges {
        let r = art
            .vertices_where(|r| matches!(r, Role::R(_)))
            .into_iter()
            .find(|&r| art.graph.has_edge(r, e.u()) && art.graph.has_edge(r, e.v()));
        assert!(r.is_some(), "no triangle on {e}");
    }
}

#[test]
fn cover_instance_needs_an_edge() {
    let err = reduce_vc_meda5_diam4(&VcInstance::new(Graph::empty(3), 0)).unwrap_err();
    assert!(err.to_string().contains("at least one edge"));
}
