use std::collections::{BTreeSet, VecDeque};

use hvector::homology::{boundary_matrix, hochster_beta_top, reduced_homology};
use hvector::{CountVector, Face, Role, SimplicialComplex};
use itertools::Itertools;
use proptest::prelude::*;

fn from_masks(masks: &[u32]) -> SimplicialComplex {
    SimplicialComplex::generated_by(
        masks
            .iter()
            .filter(|&&m| m != 0)
            .map(|&m| Face::from_iter_unsorted((0..16).filter(|b| m >> b & 1 == 1).map(|b| b + 1))),
    )
}

fn complex_strategy(max_n: u32, max_facets: usize) -> impl Strategy<Value = SimplicialComplex> {
    (3..=max_n).prop_flat_map(move |n| {
        prop::collection::vec(1u32..(1 << n), 1..=max_facets).prop_map(|m| from_masks(&m))
    })
}

fn pure_strategy(max_n: u32) -> impl Strategy<Value = SimplicialComplex> {
    (4..=max_n, 2usize..=4).prop_flat_map(|(n, k)| {
        let subsets: Vec<Face> = (1..=n)
            .combinations(k)
            .map(|v| Face::new(v).unwrap())
            .collect();
        prop::sample::subsequence(subsets.clone(), 1..=subsets.len().min(10))
            .prop_map(|fs| SimplicialComplex::from_facets(fs).unwrap())
    })
}

fn all_subsets(vertices: &[u32]) -> impl Iterator<Item = Face> + '_ {
    vertices
        .iter()
        .copied()
        .powerset()
        .map(|s| Face::new(s).unwrap())
}

/// h_3 with the f-vector padded to a fixed d.
fn h3_at(c: &SimplicialComplex, d: usize) -> i64 {
    let mut f = c.f_vector().entries;
    f.resize(d + 1, 0);
    CountVector::f(&f).convert(Role::H).unwrap().entries[3]
}

proptest! {
    #[test]
    fn h_f_round_trip(tail in prop::collection::vec(-50i64..=50, 0..8)) {
        let mut h = vec![1];
        h.extend(tail);
        let v = CountVector::h(&h);
        let back = v.convert(Role::F).unwrap().convert(Role::H).unwrap();
        prop_assert_eq!(back, v.clone());
        let f = v.convert(Role::F).unwrap();
        prop_assert_eq!(f.convert(Role::H).unwrap().convert(Role::F).unwrap(), f);
    }

    #[test]
    fn cone_preserves_h(c in complex_strategy(7, 5), k in 1usize..=3) {
        let h = c.h_vector().entries;
        let hc = c.cone(k).h_vector().entries;
        prop_assert_eq!(hc.len(), h.len() + k);
        prop_assert_eq!(&hc[..h.len()], &h[..]);
        prop_assert!(hc[h.len()..].iter().all(|&x| x == 0));
    }

    #[test]
    fn induced_and_link_match_brute_force(c in complex_strategy(8, 6), pick in any::<u32>()) {
        let vertices = c.vertices();
        let w: Vec<u32> = vertices.iter().copied().enumerate()
            .filter(|(i, _)| pick >> i & 1 == 1).map(|(_, v)| v).collect();
        let induced = c.induced(&w);
        let expected: BTreeSet<Face> = all_subsets(&w).filter(|f| c.contains_face(f)).collect();
        let got: BTreeSet<Face> = induced.faces_by_dimension().into_iter().flatten().collect();
        if w.is_empty() {
            prop_assert!(got.len() <= 1);
        } else {
            prop_assert_eq!(got, expected);
        }
        for f in c.faces_of_dim(0).iter().chain(c.faces_of_dim(1)).take(6) {
            let link = c.link(f).unwrap();
            let want: BTreeSet<Face> = all_subsets(&vertices)
                .filter(|g| g.is_disjoint(f) && c.contains_face(&g.union(f)))
                .collect();
            let have: BTreeSet<Face> = link.faces_by_dimension().into_iter().flatten().collect();
            prop_assert_eq!(have, want);
        }
    }

    #[test]
    fn boundary_squares_to_zero(c in complex_strategy(7, 5)) {
        for i in 1..=(c.dim().max(0) as usize) {
            let prod = boundary_matrix(&c, i).mul(&boundary_matrix(&c, i + 1));
            prop_assert!(prod.is_zero(), "degree {}", i);
        }
    }

    #[test]
    fn cones_are_acyclic(c in complex_strategy(8, 5)) {
        prop_assert!(reduced_homology(&c.cone(1)).is_acyclic());
    }

    #[test]
    fn hochster_detects_disconnecting_ridges(c in pure_strategy(12)) {
        let d = c.d();
        let vertices = c.vertices();
        let edges: Vec<(u32, u32)> = c.faces_of_dim(1).iter().map(|e| (e.vertices()[0], e.vertices()[1])).collect();
        let disconnects = c.faces_of_dim(d as isize - 2).iter().any(|r| {
            let alive: Vec<u32> = vertices.iter().copied().filter(|v| !r.contains(*v)).collect();
            let Some(&start) = alive.first() else { return false };
            let mut seen = BTreeSet::from([start]);
            let mut queue = VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                for &(a, b) in &edges {
                    for (x, y) in [(a, b), (b, a)] {
                        if x == v && !r.contains(y) && seen.insert(y) {
                            queue.push_back(y);
                        }
                    }
                }
            }
            seen.len() < alive.len()
        });
        let beta = hochster_beta_top(&c);
        prop_assert_eq!(beta > 0, disconnects);
    }

    #[test]
    fn triangles_alone_move_h3(c in complex_strategy(8, 6)) {
        let d = 6;
        prop_assume!(c.dim() < d as isize);
        let skeleton = SimplicialComplex::generated_by(
            c.faces_by_dimension().into_iter().take(4).flatten(),
        );
        prop_assert_eq!(h3_at(&c, d), h3_at(&skeleton, d));
        let triangles = c.faces_of_dim(2);
        if let Some(t) = triangles.first() {
            let fewer = SimplicialComplex::generated_by(
                skeleton.faces_by_dimension().into_iter().take(4).flatten().filter(|f| f != t),
            );
            prop_assert_eq!(h3_at(&fewer, d), h3_at(&skeleton, d) - 1);
        }
    }
}
