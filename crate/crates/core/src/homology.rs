//! Reduced integer homology, homology-manifold classification, and the top
//! corner Betti number of the face ring via Hochster's formula.

use std::collections::BTreeMap;

use itertools::Itertools;
use num_bigint::BigInt;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::complex::{Face, SimplicialComplex};
use crate::matrix::{smith_normal_form, Matrix};
use crate::scalar::ExactInt;

/// Boundary map ∂_i from i-faces to (i-1)-faces, rows and columns indexed by
/// the sorted face lists. ∂_0 is the augmentation onto the empty face.
pub fn boundary_matrix_over<T: ExactInt>(c: &SimplicialComplex, i: usize) -> Matrix<T> {
    let rows = c.faces_of_dim(i as isize - 1);
    let cols = c.faces_of_dim(i as isize);
    let index: BTreeMap<&Face, usize> = rows.iter().enumerate().map(|(k, f)| (f, k)).collect();
    let mut m = Matrix::zeros(rows.len(), cols.len());
    for (j, f) in cols.iter().enumerate() {
        for (k, r) in f.facets_of_boundary().enumerate() {
            let sign = if k % 2 == 0 { T::one() } else { -T::one() };
            m[(index[&r], j)] = sign;
        }
    }
    m
}

/// [`boundary_matrix_over`] with arbitrary-precision entries.
pub fn boundary_matrix(c: &SimplicialComplex, i: usize) -> crate::IntMatrix {
    boundary_matrix_over(c, i)
}

/// Homology in one degree: free rank plus torsion coefficients (each > 1).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeHomology<T> {
    pub degree: isize,
    pub rank: usize,
    pub torsion: Vec<T>,
}

/// Reduced homology in degrees -1 through the dimension.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomologyProfile<T> {
    pub degrees: Vec<DegreeHomology<T>>,
}

impl<T: ExactInt> HomologyProfile<T> {
    pub fn get(&self, degree: isize) -> Option<&DegreeHomology<T>> {
        self.degrees.iter().find(|h| h.degree == degree)
    }

    pub fn rank(&self, degree: isize) -> usize {
        self.get(degree).map_or(0, |h| h.rank)
    }

    /// Every group vanishes.
    pub fn is_acyclic(&self) -> bool {
        self.degrees
            .iter()
            .all(|h| h.rank == 0 && h.torsion.is_empty())
    }

    /// Z in degree `k`, zero elsewhere.
    pub fn is_sphere_of_dim(&self, k: isize) -> bool {
        self.degrees
            .iter()
            .all(|h| h.torsion.is_empty() && h.rank == usize::from(h.degree == k))
            && self.get(k).is_some()
    }

    /// Σ (-1)^i rank H̃_i.
    pub fn euler_characteristic(&self) -> i64 {
        self.degrees
            .iter()
            .map(|h| {
                if h.degree.rem_euclid(2) == 0 {
                    h.rank as i64
                } else {
                    -(h.rank as i64)
                }
            })
            .sum()
    }
}

/// Reduced homology over Z with a chosen scalar type for the elimination.
pub fn reduced_homology_over<T: ExactInt>(c: &SimplicialComplex) -> HomologyProfile<T> {
    let top = c.dim();
    if top < -1 {
        return HomologyProfile {
            degrees: Vec::new(),
        };
    }
    // forms[i] = SNF of ∂_i for i = 0..=top+1
    let forms: Vec<_> = (0..=(top + 1) as usize)
        .map(|i| smith_normal_form(&boundary_matrix_over::<T>(c, i)))
        .collect();
    let rank_of = |i: isize| -> usize {
        if i < 0 {
            0
        } else {
            forms[i as usize].rank()
        }
    };
    let degrees: Vec<DegreeHomology<T>> = (-1..=top)
        .map(|k| {
            let chains = c.faces_of_dim(k).len();
            DegreeHomology {
                degree: k,
                rank: chains - rank_of(k) - rank_of(k + 1),
                torsion: forms[(k + 1) as usize].torsion(),
            }
        })
        .collect();
    let profile = HomologyProfile { degrees };
    debug_assert_eq!(
        profile.euler_characteristic(),
        (-1..=top)
            .map(|k| {
                let n = c.faces_of_dim(k).len() as i64;
                if k.rem_euclid(2) == 0 {
                    n
                } else {
                    -n
                }
            })
            .sum::<i64>()
    );
    profile
}

/// Reduced homology with arbitrary-precision torsion.
pub fn reduced_homology(c: &SimplicialComplex) -> HomologyProfile<BigInt> {
    reduced_homology_over(c)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TopologyTag {
    HomologyBall,
    HomologySphere,
    /// Every link is a homology sphere or ball, but the complex is neither.
    HomologyManifoldWithBoundary,
    Other,
}

/// Classification result together with the evidence that produced it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TopologicalClass {
    pub tag: TopologyTag,
    /// Faces whose link has vanishing top homology, when the complex is a manifold.
    pub boundary: Option<SimplicialComplex>,
    pub links_checked: usize,
    pub reason: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum LinkKind {
    Sphere,
    Ball,
    Neither,
}

fn link_kind(c: &SimplicialComplex, f: &Face, d: usize) -> LinkKind {
    let link = c.link(f).expect("face taken from the complex");
    let k = d as isize - 1 - f.len() as isize;
    if link.dim() != k {
        return LinkKind::Neither;
    }
    let h = reduced_homology(&link);
    if h.is_sphere_of_dim(k) {
        LinkKind::Sphere
    } else if h.is_acyclic() {
        LinkKind::Ball
    } else {
        LinkKind::Neither
    }
}

/// Checks the link of every nonempty face and assembles a verdict.
pub fn classify(c: &SimplicialComplex) -> TopologicalClass {
    let other = |reason: String, links_checked| TopologicalClass {
        tag: TopologyTag::Other,
        boundary: None,
        links_checked,
        reason: Some(reason),
    };
    if c.is_void() || !c.is_pure() || c.d() == 0 {
        return other("void, impure, or only the empty face".into(), 0);
    }
    let d = c.d();
    let faces: Vec<&Face> = c.faces_by_size().iter().skip(1).flatten().collect();
    let kinds: Vec<LinkKind> = faces.par_iter().map(|f| link_kind(c, f, d)).collect();
    if let Some(pos) = kinds.iter().position(|k| *k == LinkKind::Neither) {
        return other(
            format!("link of {} is neither a sphere nor a ball", faces[pos]),
            faces.len(),
        );
    }
    let boundary_faces: Vec<Face> = faces
        .iter()
        .zip(&kinds)
        .filter(|(_, k)| **k == LinkKind::Ball)
        .map(|(f, _)| (*f).clone())
        .collect();
    let global = reduced_homology(c);
    let top = d as isize - 1;
    if boundary_faces.is_empty() {
        let tag = if global.is_sphere_of_dim(top) {
            TopologyTag::HomologySphere
        } else {
            TopologyTag::HomologyManifoldWithBoundary
        };
        return TopologicalClass {
            tag,
            boundary: None,
            links_checked: faces.len(),
            reason: None,
        };
    }
    let boundary = SimplicialComplex::generated_by(boundary_faces);
    let mut reason = None;
    if !global.is_acyclic() {
        reason = Some("nonempty boundary but the complex is not acyclic".to_string());
    } else if boundary != c.ridge_boundary() {
        reason = Some("link boundary differs from the ridge boundary".to_string());
    } else {
        let b = classify(&boundary);
        if b.tag != TopologyTag::HomologySphere || boundary.d() + 1 != d {
            reason = Some("boundary is not a homology sphere".to_string());
        }
    }
    let tag = if reason.is_none() {
        TopologyTag::HomologyBall
    } else {
        TopologyTag::HomologyManifoldWithBoundary
    };
    TopologicalClass {
        tag,
        boundary: Some(boundary),
        links_checked: faces.len(),
        reason,
    }
}

/// β_{n-d, n-d+1} of the face ring: sum over ridges R of
/// (components of the subcomplex induced on the complement of R) - 1.
pub fn hochster_beta_top(c: &SimplicialComplex) -> u64 {
    let d = c.d();
    if d < 1 {
        return 0;
    }
    let vertices = c.vertices();
    c.faces_of_dim(d as isize - 2)
        .par_iter()
        .map(|r| {
            let w: Vec<u32> = vertices
                .iter()
                .copied()
                .filter(|v| !r.contains(*v))
                .collect();
            if w.is_empty() {
                return 0;
            }
            c.induced(&w).component_count().saturating_sub(1) as u64
        })
        .sum()
}

/// The unrestricted Hochster sum over every vertex set of size n-d+1, using
/// reduced homology of each induced subcomplex. Exponential; for checking
/// [`hochster_beta_top`] on small inputs.
pub fn hochster_beta_top_full_sum(c: &SimplicialComplex) -> u64 {
    let d = c.d();
    let vertices = c.vertices();
    let n = vertices.len();
    if d < 1 || n + 1 < d {
        return 0;
    }
    vertices
        .iter()
        .copied()
        .combinations(n + 1 - d)
        .map(|w| reduced_homology(&c.induced(&w)).rank(0) as u64)
        .sum()
}
