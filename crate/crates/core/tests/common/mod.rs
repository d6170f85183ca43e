#![allow(dead_code)]

use std::collections::{BTreeSet, VecDeque};

use hvector::construction::construction_conditions;
use hvector::SimplicialComplex;
use itertools::Itertools;

/// Every (1, h_1, ..., h_{d-1}, 0) with 2 ≤ d ≤ max_d and entries ≤ max_entry
/// that meets the construction hypotheses.
pub fn constructible_vectors(max_d: usize, max_entry: i64) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    for d in 2..=max_d {
        for tail in (1..d).map(|_| 0..=max_entry).multi_cartesian_product() {
            let mut h = vec![1];
            h.extend(tail);
            h.push(0);
            if construction_conditions(&h).is_ok() {
                out.push(h);
            }
        }
    }
    out
}

/// Whether deleting the vertices of some ridge disconnects the vertex graph.
pub fn has_disconnecting_ridge(c: &SimplicialComplex) -> bool {
    let d = c.d();
    if d < 2 {
        return false;
    }
    let vertices = c.vertices();
    let edges: Vec<(u32, u32)> = c
        .faces_of_dim(1)
        .iter()
        .map(|e| (e.vertices()[0], e.vertices()[1]))
        .collect();
    c.faces_of_dim(d as isize - 2).iter().any(|r| {
        let alive: BTreeSet<u32> = vertices
            .iter()
            .copied()
            .filter(|v| !r.contains(*v))
            .collect();
        let Some(&start) = alive.iter().next() else {
            return false;
        };
        let mut seen = BTreeSet::from([start]);
        let mut queue = VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            for &(a, b) in &edges {
                let other = if a == v {
                    b
                } else if b == v {
                    a
                } else {
                    continue;
                };
                if alive.contains(&other) && seen.insert(other) {
                    queue.push_back(other);
                }
            }
        }
        seen.len() < alive.len()
    })
}
