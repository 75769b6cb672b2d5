mod common;

use proptest::prelude::*;
use reebforge::complex::{product_map, validate_complex};
use reebforge::fixtures::{disk_collapse, random_function, random_map, torus_height};
use reebforge::{
    b1_inequality_check, betti, fiber_components_at, reeb_graph, reeb_space, verify_quotient,
    PlFunction, Simplex, SimplicialMap,
};

use common::{complex_from_choices, fiber_vertex_components};

fn vertex_strata_match(f: &SimplicialMap) {
    for w in 0..f.codomain().vertex_count() {
        let classes = fiber_components_at(f, &Simplex::new([w])).unwrap();
        let mut lib: Vec<Vec<usize>> = classes
            .iter()
            .map(|class| {
                let mut vs: Vec<usize> =
                    class.iter().map(|&id| f.domain().simplex(id)).filter(|s| s.len() == 1).map(|s| s.vertices()[0]).collect();
                vs.sort_unstable();
                vs
            })
            .collect();
        lib.sort();
        let mut oracle = fiber_vertex_components(f, w);
        oracle.sort();
        assert_eq!(lib, oracle, "codomain vertex {w}");
    }
}

#[test]
fn disk_examples() {
    let f = disk_collapse(2).unwrap();
    let r = reeb_space(&f).unwrap();
    assert_eq!(betti(f.domain()).b, vec![1]);
    assert_eq!(betti(r.realization()).b, vec![1, 0, 1]);
    assert_eq!(betti(reeb_space(&disk_collapse(1).unwrap()).unwrap().realization()).b, vec![1]);
    let rep = b1_inequality_check(&f).unwrap();
    assert!(rep.holds);
    assert_eq!((rep.components[0].b1_domain, rep.components[0].b1_reeb), (0, 0));
    assert!(verify_quotient(&f).unwrap().passed);
}

#[test]
fn disk_boundary_maps_to_one_vertex() {
    let f = disk_collapse(2).unwrap();
    let k = f.domain();
    // boundary edges lie in exactly one triangle
    let mut boundary_vertices = Vec::new();
    for e in k.simplices_of_dim(1) {
        let cofaces = k.simplices_of_dim(2).iter().filter(|t| e.is_face_of(t)).count();
        if cofaces == 1 {
            boundary_vertices.extend_from_slice(e.vertices());
        }
    }
    assert_eq!(boundary_vertices.len(), 12);
    assert!(boundary_vertices.iter().all(|&v| f.vertex_images()[v] == 0));
}

#[test]
fn torus_height_graph_has_one_cycle() {
    let (g, map) = torus_height();
    assert_eq!(betti(g.complex()).b, vec![1, 2, 1]);
    let graph = reeb_graph(&g).unwrap();
    assert_eq!(graph.betti().b, vec![1, 1]);
    assert_eq!(betti(reeb_space(&map).unwrap().realization()).b, vec![1, 1]);
    for (v, &node) in graph.vertex_nodes.iter().enumerate() {
        assert_eq!(graph.nodes[node].value, g.values()[v]);
    }
    let rep = b1_inequality_check(&map).unwrap();
    assert!(rep.holds);
    assert_eq!((rep.components[0].b1_reeb, rep.components[0].b1_domain), (1, 2));
}

#[test]
fn identity_reeb_space_is_the_domain() {
    let k = complex_from_choices(6, &[(0, 1), (1, 2), (2, 0), (3, 4)], &[(2, 3, 5)]);
    let f = SimplicialMap::identity(k.clone());
    let r = reeb_space(&f).unwrap();
    assert_eq!(r.strata().len(), k.len());
    assert_eq!(betti(r.realization()), betti(&k));
    assert!(verify_quotient(&f).unwrap().passed);
}

#[test]
fn reeb_graph_is_deterministic() {
    let g = random_function(7, 10);
    let a = reeb_graph(&g).unwrap();
    let b = reeb_graph(&g).unwrap();
    assert_eq!(a.to_dot(|v| v.to_string()), b.to_dot(|v| v.to_string()));
}

#[test]
fn random_maps_pass_quotient_b1_and_strata_checks() {
    for seed in 0..40 {
        let f = random_map(seed, 8);
        let q = verify_quotient(&f).unwrap();
        assert!(q.passed, "seed {seed}: {:?}", q.failures);
        assert!(b1_inequality_check(&f).unwrap().holds, "seed {seed}");
        vertex_strata_match(&f);
        // idempotence
        let r = reeb_space(&f).unwrap();
        let again = reeb_space(r.quotient_map()).unwrap();
        assert_eq!(betti(again.realization()), betti(r.realization()), "seed {seed}");
    }
}

#[test]
fn fixtures_strata_match_full_subcomplex_components() {
    vertex_strata_match(&disk_collapse(1).unwrap());
    vertex_strata_match(&disk_collapse(2).unwrap());
    vertex_strata_match(&torus_height().1);
}

#[test]
fn product_law_on_small_maps() {
    let f = disk_collapse(1).unwrap();
    let path = validate_complex(3, vec![vec![0, 1], vec![1, 2]], true).unwrap();
    let edge = validate_complex(2, vec![vec![0, 1]], true).unwrap();
    let fold = reebforge::check_simplicial(path, edge, vec![0, 1, 0]).unwrap();
    for (a, b) in [(&f, &f), (&f, &fold), (&fold, &fold)] {
        let p = product_map(a, b).unwrap();
        let ra = betti(reeb_space(a).unwrap().realization());
        let rb = betti(reeb_space(b).unwrap().realization());
        assert_eq!(betti(reeb_space(&p).unwrap().realization()), ra.kunneth(&rb));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn graph_and_space_agree_for_distinct_values(seed in 0u64..10_000, budget in 3usize..10) {
        let g = random_function(seed, budget);
        let graph = reeb_graph(&g).unwrap();
        let sliced = g.level_subdivision();
        let space = reeb_space(&sliced.map).unwrap();
        prop_assert_eq!(graph.betti(), betti(space.realization()));
        prop_assert_eq!(betti(sliced.function.complex()), betti(g.complex()));
    }

    #[test]
    fn graph_and_space_agree_with_repeated_values(
        n in 3usize..8,
        edges in prop::collection::vec((0usize..8, 0usize..8), 1..12),
        triangles in prop::collection::vec((0usize..8, 0usize..8, 0usize..8), 0..6),
        values in prop::collection::vec(0i64..3, 8),
    ) {
        let k = complex_from_choices(n, &edges, &triangles);
        let g = PlFunction::new(k, values[..n].to_vec()).unwrap();
        let graph = reeb_graph(&g).unwrap();
        let space = reeb_space(&g.level_subdivision().map).unwrap();
        prop_assert_eq!(graph.betti(), betti(space.realization()));
        prop_assert!(graph.betti().get(1) <= betti(g.complex()).get(1));
    }

    #[test]
    fn quotient_checks_on_random_complexes(seed in 0u64..10_000) {
        let f = random_map(seed, 9);
        prop_assert!(verify_quotient(&f).unwrap().passed);
        prop_assert!(b1_inequality_check(&f).unwrap().holds);
    }
}
