mod common;

use pontryagin::{sw_duals, PontryaginError};
use simplicial_core::Complex;
use test_oracles::fixtures;
use test_oracles::linalg::is_boundary_gf2;

fn complex(f: Vec<Vec<u32>>) -> Complex {
    Complex::from_facets(f).unwrap()
}

fn as_lists(c: &pontryagin::Mod2Chain) -> Vec<Vec<u32>> {
    c.simplices.iter().map(|s| s.vertices().to_vec()).collect()
}

fn sub_facets(d: &pontryagin::SwDuals) -> Vec<Vec<u32>> {
    d.subdivision.facets().iter().map(|s| s.vertices().to_vec()).collect()
}

#[test]
fn tetrahedron_boundary() {
    let d = sw_duals(&complex(fixtures::simplex_boundary(3)), 1000).unwrap();
    assert_eq!(d.chains.len(), 3);
    assert_eq!(d.chains[2].len(), 24);
    assert_eq!(d.chains[1].len(), 36);
    assert!(d.chains.iter().all(|c| c.is_cycle()));
    assert!(test_oracles::linalg::boundary_gf2(&as_lists(&d.chains[1])).is_empty());
    assert!(is_boundary_gf2(&sub_facets(&d), &as_lists(&d.chains[1])));
}

#[test]
fn projective_plane_has_nonzero_w1() {
    let d = sw_duals(&complex(fixtures::rp2_6()), 1000).unwrap();
    let w1 = as_lists(&d.chains[1]);
    assert!(test_oracles::linalg::boundary_gf2(&w1).is_empty());
    assert!(!is_boundary_gf2(&sub_facets(&d), &w1));
}

#[test]
fn every_chain_is_a_cycle() {
    for f in [fixtures::simplex_boundary(4), fixtures::octahedron(), fixtures::rp2_6(), fixtures::cross_polytope(3)] {
        let d = sw_duals(&complex(f), 1000).unwrap();
        for c in &d.chains {
            assert!(test_oracles::linalg::boundary_gf2(&as_lists(c)).is_empty() || c.degree == 0);
        }
    }
}

#[test]
fn non_manifolds_are_rejected() {
    let disk = complex(vec![vec![0, 1, 2], vec![0, 2, 3]]);
    assert!(matches!(sw_duals(&disk, 1000), Err(PontryaginError::NotClosedManifold(_))));
    // two tetrahedron boundaries glued at a vertex
    let mut f = fixtures::simplex_boundary(3);
    f.extend(fixtures::simplex_boundary(3).into_iter().map(|t| t.into_iter().map(|v| if v == 0 { 0 } else { v + 3 }).collect()));
    assert!(matches!(sw_duals(&complex(f), 1000), Err(PontryaginError::NotClosedManifold(_))));
}

#[test]
fn boundary_test_matches_oracle() {
    for f in [fixtures::simplex_boundary(3), fixtures::octahedron(), fixtures::rp2_6(), fixtures::simplex_boundary(4)] {
        let d = sw_duals(&complex(f), 1000).unwrap();
        let sub = sub_facets(&d);
        for c in &d.chains {
            assert_eq!(
                pontryagin::is_mod2_boundary(&d.subdivision, c),
                is_boundary_gf2(&sub, &as_lists(c)),
                "degree {}",
                c.degree
            );
        }
    }
}

#[test]
fn single_simplex_boundary_bounds() {
    let d = sw_duals(&complex(fixtures::rp2_6()), 1000).unwrap();
    let tri = d.subdivision.facets()[0].clone();
    let edges = pontryagin::Mod2Chain { degree: 1, simplices: tri.boundary_faces().collect() };
    assert!(pontryagin::is_mod2_boundary(&d.subdivision, &edges));
    let one = pontryagin::Mod2Chain { degree: 1, simplices: tri.boundary_faces().take(1).collect() };
    assert!(!pontryagin::is_mod2_boundary(&d.subdivision, &one));
}
