mod common;

use std::collections::BTreeSet;

use common::*;
use pachner_engine::moves::check_move;
use pachner_engine::{apply_move, enumerate_moves, induced_vertex_moves, BistellarMove};
use simplicial_core::recognition::low_dim_sphere;
use simplicial_core::{oriented_key, OrientedComplex};
use test_oracles::fixtures;
use test_oracles::spheres::enumerate_2spheres;

/// Moves straight from the definition: sigma a face, tau a non-face on the
/// remaining vertices (or one new vertex) with link sigma equal to the boundary of tau.
fn brute_moves(f: &[Vec<u32>]) -> BTreeSet<(Vec<u32>, Vec<u32>)> {
    let faces: BTreeSet<Vec<u32>> = test_oracles::all_faces(f).into_iter().collect();
    let verts = test_oracles::vertex_set(f);
    let n = f[0].len() - 1;
    let fresh = (0..).find(|v| !verts.contains(v)).unwrap();
    let mut out = BTreeSet::new();
    for sigma in &faces {
        let size = n + 2 - sigma.len();
        let pool: Vec<u32> = verts.iter().copied().filter(|v| !sigma.contains(v)).collect();
        let taus: Vec<Vec<u32>> = if size == 1 {
            vec![vec![fresh]]
        } else {
            subsets(&pool, size)
        };
        for tau in taus {
            if faces.contains(&tau) {
                continue;
            }
            let link: BTreeSet<Vec<u32>> = f
                .iter()
                .filter(|g| sigma.iter().all(|v| g.contains(v)))
                .map(|g| g.iter().copied().filter(|v| !sigma.contains(v)).collect())
                .collect();
            let boundary: BTreeSet<Vec<u32>> = if size == 1 {
                [vec![]].into_iter().collect()
            } else {
                subsets(&tau, size - 1).into_iter().collect()
            };
            if link == boundary {
                out.insert((sigma.clone(), tau));
            }
        }
    }
    out
}

fn subsets(pool: &[u32], size: usize) -> Vec<Vec<u32>> {
    if size == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for (i, &v) in pool.iter().enumerate() {
        for mut rest in subsets(&pool[i + 1..], size - 1) {
            rest.insert(0, v);
            out.push(rest);
        }
    }
    out
}

fn mine(k: &OrientedComplex) -> BTreeSet<(Vec<u32>, Vec<u32>)> {
    enumerate_moves(k)
        .into_iter()
        .map(|m| (m.sigma.vertices().to_vec(), m.tau.vertices().to_vec()))
        .collect()
}

fn test_spheres() -> Vec<OrientedComplex> {
    let mut out = Vec::new();
    for n in 4..=7 {
        out.extend(enumerate_2spheres(n).iter().map(|f| oc(f)));
    }
    out.push(oc(&fixtures::octahedron()));
    out.push(oc(&fixtures::icosahedron()));
    out
}

#[test]
fn move_counts() {
    let t = oc(&fixtures::simplex_boundary(3));
    let ms = enumerate_moves(&t);
    assert_eq!(ms.len(), 4);
    assert!(ms.iter().all(|m| m.is_insertion()));

    let o = oc(&fixtures::octahedron());
    let ms = enumerate_moves(&o);
    assert_eq!(ms.iter().filter(|m| m.sigma.len() == 2).count(), 12);
    assert_eq!(ms.iter().filter(|m| m.is_insertion()).count(), 8);
    assert_eq!(ms.iter().filter(|m| m.is_removal()).count(), 0);
    assert_eq!(ms.len(), 20);

    let t4 = oc(&fixtures::simplex_boundary(4));
    let ms = enumerate_moves(&t4);
    assert_eq!(ms.len(), 5);
    assert!(ms.iter().all(|m| m.is_insertion()));
}

#[test]
fn enumeration_matches_definition() {
    let mut all = test_spheres();
    all.push(oc(&fixtures::cross_polytope(4)));
    all.push(oc(&fixtures::simplex_boundary(5)));
    all.push(oc(&fixtures::polygon(7)));
    for k in &all {
        assert_eq!(mine(k), brute_moves(&facets_of(k)));
    }
}

#[test]
fn apply_examples() {
    let t = oc(&fixtures::simplex_boundary(3));
    let m = BistellarMove::new(s(&[0, 1, 2]), s(&[4]));
    let r = apply_move(&t, &m).unwrap();
    assert_eq!(r.complex().f_vector(), vec![5, 9, 6]);

    let o = oc(&fixtures::octahedron());
    let flip = BistellarMove::new(s(&[0, 2]), s(&[4, 5]));
    let r = apply_move(&o, &flip).unwrap();
    assert_eq!(r.num_vertices(), 6);
    let degs: Vec<usize> = r.vertices().iter().map(|&v| r.complex().degree(v)).collect();
    assert!(degs.contains(&3));

    assert!(apply_move(&o, &BistellarMove::new(s(&[0, 1]), s(&[2, 4]))).is_err());
    assert!(apply_move(&o, &BistellarMove::new(s(&[0, 2]), s(&[1, 3]))).is_err());
    assert!(check_move(&t, &BistellarMove::new(s(&[0]), s(&[1, 2, 3]))).is_err());
}

#[test]
fn results_are_coherent_spheres_and_inverses_undo() {
    for k in test_spheres() {
        let key = oriented_key(&k);
        for m in enumerate_moves(&k) {
            let r = apply_move(&k, &m).unwrap();
            assert!(OrientedComplex::new(r.complex().clone(), r.signs().to_vec()).is_ok());
            assert!(low_dim_sphere(r.complex()).unwrap().is_yes());
            // facets away from the move keep their signs
            for (f, e) in k.signed_facets() {
                if !m.sigma.is_face_of(f) {
                    assert_eq!(r.sign_of(f), Some(e));
                }
            }
            let back = apply_move(&r, &m.inverse()).unwrap();
            assert_eq!(back, k);
            assert_eq!(oriented_key(&back), key);
        }
    }
}

#[test]
fn three_dimensional_moves_preserve_coherence() {
    let mut k = oc(&fixtures::cross_polytope(4));
    // walk a few moves deterministically
    for step in 0..12 {
        let ms = enumerate_moves(&k);
        let m = ms[(step * 7) % ms.len()].clone();
        let r = apply_move(&k, &m).unwrap();
        assert!(OrientedComplex::new(r.complex().clone(), r.signs().to_vec()).is_ok());
        for &v in r.vertices() {
            let l = r.complex().link(&simplicial_core::Simplex::vertex(v)).unwrap();
            assert!(low_dim_sphere(&l).unwrap().is_yes());
        }
        assert_eq!(r.complex().euler_characteristic(), 0);
        k = r;
    }
}

#[test]
fn induced_moves_examples() {
    let t = oc(&fixtures::simplex_boundary(3));
    let m = BistellarMove::new(s(&[0, 1, 2]), s(&[4]));
    let ind = induced_vertex_moves(&t, &m);
    assert_eq!(ind.iter().map(|i| i.vertex).collect::<Vec<_>>(), vec![0, 1, 2]);
    for i in &ind {
        assert_eq!(i.mv.sigma.len(), 2);
        assert!(i.mv.is_insertion());
        assert_eq!(i.link.dim(), 1);
    }

    let o = oc(&fixtures::octahedron());
    let flip = BistellarMove::new(s(&[0, 2]), s(&[4, 5]));
    let ind = induced_vertex_moves(&o, &flip);
    assert_eq!(ind.len(), 4);
    for i in &ind {
        if [0, 2].contains(&i.vertex) {
            assert!(i.mv.is_removal());
        } else {
            assert!(i.mv.is_insertion());
        }
    }

    let t4 = oc(&fixtures::simplex_boundary(4));
    let m = BistellarMove::new(s(&[0, 1, 2, 3]), s(&[5]));
    let ind = induced_vertex_moves(&t4, &m);
    assert_eq!(ind.len(), 4);
    assert!(ind.iter().all(|i| i.link.dim() == 2 && i.mv.is_insertion()));
}

/// The induced move carries the oriented link before the move to the oriented link after it.
#[test]
fn induced_moves_commute_with_links() {
    let mut hosts = test_spheres();
    hosts.push(oc(&fixtures::cross_polytope(4)));
    hosts.push(oc(&fixtures::simplex_boundary(4)));
    for k in hosts {
        for m in enumerate_moves(&k) {
            let r = apply_move(&k, &m).unwrap();
            let u: BTreeSet<u32> = m.persistent_vertices().into_iter().collect();
            for i in induced_vertex_moves(&k, &m) {
                let after = r.link(&simplicial_core::Simplex::vertex(i.vertex)).unwrap();
                assert_eq!(apply_move(&i.link, &i.mv).unwrap(), after);
            }
            // vertices outside U(β) that survive have unchanged links
            for &v in k.vertices() {
                if u.contains(&v) || m.sigma.vertices() == [v] {
                    continue;
                }
                let sv = simplicial_core::Simplex::vertex(v);
                assert_eq!(k.link(&sv).unwrap(), r.link(&sv).unwrap());
            }
        }
    }
}

#[test]
fn one_dimensional_moves() {
    let p = oc(&fixtures::polygon(5));
    let ms = enumerate_moves(&p);
    assert_eq!(ms.iter().filter(|m| m.is_removal()).count(), 5);
    assert_eq!(ms.iter().filter(|m| m.is_insertion()).count(), 5);
    let tri = oc(&fixtures::polygon(3));
    assert!(enumerate_moves(&tri).iter().all(|m| m.is_insertion()));
}
