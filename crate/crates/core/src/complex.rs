//! Pure simplicial complexes, face enumeration, and the f/h/g-vector calculus.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::sync::OnceLock;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::binomial;

/// A face: a strictly increasing list of vertex labels.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Face(Vec<u32>);

impl Face {
    /// Builds a face, rejecting anything that is not strictly increasing.
    pub fn new(vertices: Vec<u32>) -> Result<Self> {
        if vertices.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::UnsortedFace(vertices));
        }
        Ok(Face(vertices))
    }

    /// Sorts and deduplicates.
    pub fn from_iter_unsorted<I: IntoIterator<Item = u32>>(it: I) -> Self {
        let mut v: Vec<u32> = it.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        Face(v)
    }

    pub fn empty() -> Self {
        Face(Vec::new())
    }

    pub fn vertices(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Cardinality minus one; the empty face has dimension -1.
    pub fn dim(&self) -> isize {
        self.0.len() as isize - 1
    }

    pub fn contains(&self, v: u32) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn is_subset(&self, other: &Face) -> bool {
        let mut it = other.0.iter();
        self.0.iter().all(|v| it.any(|w| w == v))
    }

    pub fn without(&self, v: u32) -> Face {
        Face(self.0.iter().copied().filter(|&w| w != v).collect())
    }

    pub fn with(&self, v: u32) -> Face {
        Face::from_iter_unsorted(self.0.iter().copied().chain(std::iter::once(v)))
    }

    pub fn union(&self, other: &Face) -> Face {
        Face::from_iter_unsorted(self.0.iter().chain(other.0.iter()).copied())
    }

    pub fn difference(&self, other: &Face) -> Face {
        Face(
            self.0
                .iter()
                .copied()
                .filter(|v| !other.contains(*v))
                .collect(),
        )
    }

    pub fn is_disjoint(&self, other: &Face) -> bool {
        self.0.iter().all(|v| !other.contains(*v))
    }

    /// All faces obtained by deleting one vertex, in vertex order.
    pub fn facets_of_boundary(&self) -> impl Iterator<Item = Face> + '_ {
        (0..self.0.len()).map(move |k| {
            let mut v = self.0.clone();
            v.remove(k);
            Face(v)
        })
    }

    /// All subsets of the face, of every size.
    pub fn subfaces(&self) -> impl Iterator<Item = Face> + '_ {
        (0..=self.0.len()).flat_map(move |k| self.0.iter().copied().combinations(k).map(Face))
    }
}

impl TryFrom<Vec<u32>> for Face {
    type Error = Error;
    fn try_from(v: Vec<u32>) -> Result<Self> {
        Face::new(v)
    }
}

impl From<Face> for Vec<u32> {
    fn from(f: Face) -> Self {
        f.0
    }
}

impl fmt::Debug for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.0.iter().join(","))
    }
}

impl fmt::Display for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Shorthand for building a face from a literal list; panics on bad input.
pub fn face(v: &[u32]) -> Face {
    Face::new(v.to_vec()).expect("face literal must be strictly increasing")
}

/// A simplicial complex stored as its facet antichain.
///
/// The facet list is kept sorted. A complex with no facets is the void
/// complex; the complex whose only face is the empty face has a single empty
/// facet.
#[derive(Clone, Default)]
pub struct SimplicialComplex {
    facets: Vec<Face>,
    closure: OnceLock<Vec<Vec<Face>>>,
}

impl PartialEq for SimplicialComplex {
    fn eq(&self, other: &Self) -> bool {
        self.facets == other.facets
    }
}

impl Eq for SimplicialComplex {}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SimplicialComplex")
            .field("facets", &self.facets)
            .finish()
    }
}

impl SimplicialComplex {
    /// Builds a complex from a facet list. Duplicates are merged, and a
    /// facet strictly contained in another is an error.
    pub fn from_facets<I: IntoIterator<Item = Face>>(facets: I) -> Result<Self> {
        let facets: Vec<Face> = facets
            .into_iter()
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        for (a, b) in facets.iter().tuple_combinations() {
            if a.len() != b.len() {
                let (small, big) = if a.len() < b.len() { (a, b) } else { (b, a) };
                if small.is_subset(big) {
                    return Err(Error::NotAnAntichain(big.clone(), small.clone()));
                }
            }
        }
        Ok(Self::from_sorted_antichain(facets))
    }

    /// Builds a complex generated by arbitrary faces, keeping the maximal ones.
    pub fn generated_by<I: IntoIterator<Item = Face>>(faces: I) -> Self {
        let mut all: Vec<Face> = faces
            .into_iter()
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        all.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
        let mut kept: Vec<Face> = Vec::new();
        for f in all {
            if !kept.iter().any(|k| k.len() > f.len() && f.is_subset(k)) {
                kept.push(f);
            }
        }
        kept.sort();
        Self::from_sorted_antichain(kept)
    }

    fn from_sorted_antichain(facets: Vec<Face>) -> Self {
        SimplicialComplex {
            facets,
            closure: OnceLock::new(),
        }
    }

    /// Like [`from_facets`](Self::from_facets) but additionally requires purity.
    pub fn pure_from_facets<I: IntoIterator<Item = Face>>(facets: I) -> Result<Self> {
        let c = Self::from_facets(facets)?;
        if !c.is_pure() {
            return Err(Error::NotPure);
        }
        Ok(c)
    }

    pub fn facets(&self) -> &[Face] {
        &self.facets
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    pub fn is_pure(&self) -> bool {
        self.facets.iter().map(Face::len).all_equal()
    }

    /// Dimension d-1; the void complex reports -2 by convention.
    pub fn dim(&self) -> isize {
        self.facets.iter().map(|f| f.dim()).max().unwrap_or(-2)
    }

    /// The parameter d (facet cardinality of a pure complex).
    pub fn d(&self) -> usize {
        self.facets.iter().map(Face::len).max().unwrap_or(0)
    }

    pub fn vertices(&self) -> Vec<u32> {
        self.facets
            .iter()
            .flat_map(|f| f.vertices().iter().copied())
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect()
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices().len()
    }

    /// Every face grouped by cardinality (index 0 holds the empty face).
    pub fn faces_by_size(&self) -> &[Vec<Face>] {
        self.closure.get_or_init(|| {
            if self.facets.is_empty() {
                return Vec::new();
            }
            let top = self.d();
            let mut sets: Vec<BTreeSet<Face>> = vec![BTreeSet::new(); top + 1];
            for f in &self.facets {
                for s in f.subfaces() {
                    sets[s.len()].insert(s);
                }
            }
            sets.into_iter().map(|s| s.into_iter().collect()).collect()
        })
    }

    /// Faces of dimension `dim` (so `dim = -1` is the empty face).
    pub fn faces_of_dim(&self, dim: isize) -> &[Face] {
        let size = dim + 1;
        if size < 0 {
            return &[];
        }
        self.faces_by_size()
            .get(size as usize)
            .map(Vec::as_slice)
            .unwrap_or(&[])
    }

    /// Faces grouped by dimension, starting at dimension -1.
    pub fn faces_by_dimension(&self) -> Vec<Vec<Face>> {
        self.faces_by_size().to_vec()
    }

    pub fn contains_face(&self, f: &Face) -> bool {
        self.faces_by_size()
            .get(f.len())
            .is_some_and(|fs| fs.binary_search(f).is_ok())
    }

    /// f-vector (f_{-1}, ..., f_{d-1}).
    pub fn f_vector(&self) -> CountVector {
        let counts = self
            .faces_by_size()
            .iter()
            .map(|fs| fs.len() as i64)
            .collect::<Vec<_>>();
        let d = counts.len().saturating_sub(1);
        CountVector {
            role: Role::F,
            d,
            entries: counts,
        }
    }

    /// h-vector computed from the f-vector.
    pub fn h_vector(&self) -> CountVector {
        self.f_vector()
            .convert(Role::H)
            .expect("f-vectors of complexes convert")
    }

    /// Link of a face: {G : G ∪ F ∈ Δ, G ∩ F = ∅}.
    pub fn link(&self, f: &Face) -> Result<SimplicialComplex> {
        if !self.contains_face(f) {
            return Err(Error::FaceNotInComplex(f.clone()));
        }
        let faces = self
            .facets
            .iter()
            .filter(|g| f.is_subset(g))
            .map(|g| g.difference(f));
        Ok(SimplicialComplex::generated_by(faces))
    }

    /// Induced subcomplex on a vertex set.
    pub fn induced(&self, w: &[u32]) -> SimplicialComplex {
        let w: BTreeSet<u32> = w.iter().copied().collect();
        if self.facets.is_empty() {
            return SimplicialComplex::default();
        }
        let faces = self.facets.iter().map(|g| {
            Face(
                g.vertices()
                    .iter()
                    .copied()
                    .filter(|v| w.contains(v))
                    .collect(),
            )
        });
        SimplicialComplex::generated_by(faces)
    }

    /// Ridges contained in exactly one facet.
    pub fn boundary_ridges(&self) -> Vec<Face> {
        let mut count: BTreeMap<Face, usize> = BTreeMap::new();
        for f in &self.facets {
            for r in f.facets_of_boundary() {
                *count.entry(r).or_default() += 1;
            }
        }
        count
            .into_iter()
            .filter(|(_, c)| *c == 1)
            .map(|(r, _)| r)
            .collect()
    }

    /// Complex generated by the ridges lying in exactly one facet.
    pub fn ridge_boundary(&self) -> SimplicialComplex {
        SimplicialComplex::from_sorted_antichain(self.boundary_ridges())
    }

    /// Cone taken `k` times, using fresh labels above every existing one.
    pub fn cone(&self, k: usize) -> SimplicialComplex {
        let start = self.vertices().last().map_or(1, |m| m + 1);
        let apex: Vec<u32> = (start..start + k as u32).collect();
        let facets = self
            .facets
            .iter()
            .map(|f| Face::from_iter_unsorted(f.vertices().iter().chain(apex.iter()).copied()))
            .collect();
        SimplicialComplex::from_sorted_antichain(facets)
    }

    /// Relabels vertices through `map`, which must be injective on the vertices.
    pub fn relabel<F: Fn(u32) -> u32>(&self, map: F) -> SimplicialComplex {
        let facets = self
            .facets
            .iter()
            .map(|f| Face::from_iter_unsorted(f.vertices().iter().map(|&v| map(v))))
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        SimplicialComplex::from_sorted_antichain(facets)
    }

    /// Vertex graph connectivity: number of connected components among vertices.
    pub fn component_count(&self) -> usize {
        let verts = self.vertices();
        let index: BTreeMap<u32, usize> = verts.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let mut uf = UnionFind::new(verts.len());
        for f in &self.facets {
            for w in f.vertices().windows(2) {
                uf.union(index[&w[0]], index[&w[1]]);
            }
        }
        uf.count()
    }
}

/// Minimal union-find over `0..n`.
#[derive(Debug, Clone)]
pub struct UnionFind {
    parent: Vec<usize>,
    components: usize,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
            components: n,
        }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra.max(rb)] = ra.min(rb);
        self.components -= 1;
        true
    }

    pub fn count(&self) -> usize {
        self.components
    }
}

/// Which numbers a [`CountVector`] carries.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Role {
    F,
    H,
    G,
}

impl Role {
    pub fn name(self) -> &'static str {
        match self {
            Role::F => "f",
            Role::H => "h",
            Role::G => "g",
        }
    }
}

/// An integer vector tagged with its role and the parameter d.
///
/// f-vectors are stored as (f_{-1}, ..., f_{d-1}); h-vectors as (h_0, ..., h_d).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CountVector {
    pub role: Role,
    pub d: usize,
    pub entries: Vec<i64>,
}

impl CountVector {
    /// An h-vector with d inferred from the length.
    pub fn h(entries: &[i64]) -> Self {
        assert!(!entries.is_empty(), "h-vector needs h_0");
        CountVector {
            role: Role::H,
            d: entries.len() - 1,
            entries: entries.to_vec(),
        }
    }

    /// An f-vector (f_{-1}, ..., f_{d-1}).
    pub fn f(entries: &[i64]) -> Self {
        assert!(!entries.is_empty(), "f-vector needs f_-1");
        CountVector {
            role: Role::F,
            d: entries.len() - 1,
            entries: entries.to_vec(),
        }
    }

    /// Entry `i`, with zero outside the stored range.
    pub fn get(&self, i: isize) -> i64 {
        if i < 0 {
            return 0;
        }
        self.entries.get(i as usize).copied().unwrap_or(0)
    }

    fn require(&self, role: Role) -> Result<()> {
        if self.role != role {
            return Err(Error::WrongRole {
                expected: role.name(),
                found: self.role.name(),
            });
        }
        Ok(())
    }

    /// Converts between f and h by expanding
    /// Σ h_i x^i = Σ f_{i-1} x^i (1-x)^{d-i} over the integers.
    pub fn convert(&self, target: Role) -> Result<CountVector> {
        if self.role == target {
            return Ok(self.clone());
        }
        let d = self.d;
        if self.entries.len() != d + 1 {
            return Err(Error::BadLength {
                len: self.entries.len(),
                expected: d + 1,
            });
        }
        match (self.role, target) {
            (Role::F, Role::H) => {
                if self.entries[0] != 1 {
                    return Err(Error::BadEmptyFaceCount(self.entries[0]));
                }
                let mut h = vec![0i64; d + 1];
                for (i, &fi) in self.entries.iter().enumerate() {
                    // f_{i-1} x^i (1-x)^{d-i}
                    for k in 0..=(d - i) {
                        let sign = if k % 2 == 0 { 1 } else { -1 };
                        h[i + k] += sign * fi * binomial((d - i) as i64, k as i64);
                    }
                }
                Ok(CountVector {
                    role: Role::H,
                    d,
                    entries: h,
                })
            }
            (Role::H, Role::F) => {
                // f_{k-1} = Σ_{i<=k} C(d-i, k-i) h_i, from substituting x = y/(1+y).
                let f = (0..=d)
                    .map(|k| {
                        (0..=k)
                            .map(|i| binomial((d - i) as i64, (k - i) as i64) * self.entries[i])
                            .sum()
                    })
                    .collect();
                Ok(CountVector {
                    role: Role::F,
                    d,
                    entries: f,
                })
            }
            (from, to) => Err(Error::WrongRole {
                expected: to.name(),
                found: from.name(),
            }),
        }
    }

    /// g_0 = 1, g_i = h_i - h_{i-1}.
    pub fn g_of_h(&self) -> Result<CountVector> {
        self.require(Role::H)?;
        let mut g = Vec::with_capacity(self.entries.len());
        for i in 0..self.entries.len() {
            g.push(if i == 0 {
                self.entries[0]
            } else {
                self.entries[i] - self.entries[i - 1]
            });
        }
        Ok(CountVector {
            role: Role::G,
            d: self.d,
            entries: g,
        })
    }

    /// Serialized as `role:e0,e1,...`.
    pub fn to_text(&self) -> String {
        format!("{}:{}", self.role.name(), self.entries.iter().join(","))
    }
}

impl fmt::Display for CountVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// A shelling order together with its restriction faces.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShellingCertificate {
    pub ordered_facets: Vec<Face>,
    pub restrictions: Vec<Face>,
}

impl ShellingCertificate {
    /// h_i = number of facets whose restriction face has i vertices.
    pub fn h_vector(&self) -> CountVector {
        let d = self.ordered_facets.first().map_or(0, Face::len);
        let mut h = vec![0i64; d + 1];
        for r in &self.restrictions {
            h[r.len()] += 1;
        }
        CountVector {
            role: Role::H,
            d,
            entries: h,
        }
    }

    pub fn complex(&self) -> Result<SimplicialComplex> {
        SimplicialComplex::from_facets(self.ordered_facets.iter().cloned())
    }
}

/// Same as [`ShellingCertificate::h_vector`].
pub fn h_from_certificate(s: &ShellingCertificate) -> CountVector {
    s.h_vector()
}

/// Checks a facet order for being a shelling and returns its certificate.
///
/// Step j is valid when the new faces form the interval [r(F_j), F_j], where
/// r(F_j) is the set of vertices whose deletion lands in an earlier facet.
/// That holds exactly when r(F_j) itself is not in the earlier complex.
pub fn verify_shelling(order: &[Face]) -> Result<ShellingCertificate> {
    let Some(first) = order.first() else {
        return Ok(ShellingCertificate {
            ordered_facets: vec![],
            restrictions: vec![],
        });
    };
    let d = first.len();
    let mut seen: BTreeSet<&Face> = BTreeSet::new();
    let mut restrictions = Vec::with_capacity(order.len());
    for (j, f) in order.iter().enumerate() {
        let step = j + 1;
        if f.len() != d {
            return Err(Error::NotAShelling {
                step,
                reason: "facet sizes differ".into(),
            });
        }
        if !seen.insert(f) {
            return Err(Error::NotAShelling {
                step,
                reason: format!("facet {f} repeated"),
            });
        }
        let earlier = &order[..j];
        let r: Vec<u32> = f
            .vertices()
            .iter()
            .copied()
            .filter(|&v| {
                let ridge = f.without(v);
                earlier.iter().any(|g| ridge.is_subset(g))
            })
            .collect();
        let r = Face(r);
        if j > 0 && earlier.iter().any(|g| r.is_subset(g)) {
            return Err(Error::NotAShelling {
                step,
                reason: format!("restriction {r} of {f} already present"),
            });
        }
        restrictions.push(r);
    }
    Ok(ShellingCertificate {
        ordered_facets: order.to_vec(),
        restrictions,
    })
}

/// One identified pair of boundary ridges with its vertex bijection
/// (`(vertex of left face, vertex of right face)`).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GluePair {
    pub left: Face,
    pub right: Face,
    pub bijection: Vec<(u32, u32)>,
}

impl GluePair {
    /// Pairs the vertices of the two faces in increasing order.
    pub fn in_order(left: Face, right: Face) -> Self {
        let bijection = left
            .vertices()
            .iter()
            .copied()
            .zip(right.vertices().iter().copied())
            .collect();
        GluePair {
            left,
            right,
            bijection,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct GlueMap {
    pub pairs: Vec<GluePair>,
}

/// The second operand of [`glue`].
#[derive(Debug, Clone, Copy)]
pub enum GlueTarget<'a> {
    Other(&'a SimplicialComplex),
    SelfGlue,
}

/// Identifies boundary ridges of `a` with boundary ridges of `b` (or of `a`
/// itself) and returns the quotient complex with vertices relabeled `1..=n`.
///
/// In a two-complex gluing, the left face of each pair lives in `a` and the
/// right face in `b`. For self-gluing both faces live in `a`.
pub fn glue(
    a: &SimplicialComplex,
    target: GlueTarget<'_>,
    map: &GlueMap,
) -> Result<SimplicialComplex> {
    if !a.is_pure() {
        return Err(Error::NotPure);
    }
    let d = a.d();
    let (b, offset) = match target {
        GlueTarget::Other(b) => {
            if !b.is_pure() || b.d() != d {
                return Err(Error::Glue(
                    "summands must be pure of equal dimension".into(),
                ));
            }
            (b, a.vertices().last().map_or(0, |m| m + 1))
        }
        GlueTarget::SelfGlue => (a, 0),
    };
    let ridges_a: BTreeSet<Face> = a.boundary_ridges().into_iter().collect();
    let ridges_b: BTreeSet<Face> = b.boundary_ridges().into_iter().collect();
    let mut labels: BTreeSet<u32> = a.vertices().into_iter().collect();
    if offset > 0 {
        labels.extend(b.vertices().into_iter().map(|v| v + offset));
    }
    let labels: Vec<u32> = labels.into_iter().collect();
    let index: BTreeMap<u32, usize> = labels.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let mut uf = UnionFind::new(labels.len());
    for p in &map.pairs {
        if p.left.len() + 1 != d || p.right.len() + 1 != d {
            return Err(Error::Glue(format!(
                "{} and {} are not ridges",
                p.left, p.right
            )));
        }
        if !ridges_a.contains(&p.left) {
            return Err(Error::Glue(format!("{} is not a boundary ridge", p.left)));
        }
        if !ridges_b.contains(&p.right) {
            return Err(Error::Glue(format!("{} is not a boundary ridge", p.right)));
        }
        let lefts: BTreeSet<u32> = p.bijection.iter().map(|x| x.0).collect();
        let rights: BTreeSet<u32> = p.bijection.iter().map(|x| x.1).collect();
        if lefts.len() != p.left.len()
            || rights.len() != p.right.len()
            || !lefts.iter().all(|&v| p.left.contains(v))
            || !rights.iter().all(|&v| p.right.contains(v))
        {
            return Err(Error::Glue(
                "bijection does not match the paired faces".into(),
            ));
        }
        for &(u, v) in &p.bijection {
            uf.union(index[&u], index[&(v + offset)]);
        }
    }
    let mut roots: BTreeMap<usize, u32> = BTreeMap::new();
    for i in 0..labels.len() {
        let r = uf.find(i);
        let next = roots.len() as u32 + 1;
        roots.entry(r).or_insert(next);
    }
    let mut image = |v: u32| -> u32 {
        let r = uf.find(index[&v]);
        roots[&r]
    };
    let mut facets: Vec<Face> = Vec::new();
    let summands: Vec<(&SimplicialComplex, u32)> = match target {
        GlueTarget::Other(_) => vec![(a, 0), (b, offset)],
        GlueTarget::SelfGlue => vec![(a, 0)],
    };
    for (c, off) in summands {
        for f in c.facets() {
            let img = Face::from_iter_unsorted(f.vertices().iter().map(|&v| image(v + off)));
            if img.len() != f.len() {
                return Err(Error::Glue(format!(
                    "facet {f} collapses under the identification"
                )));
            }
            facets.push(img);
        }
    }
    let n_facets = facets.len();
    let result = SimplicialComplex::from_facets(facets).map_err(|e| Error::Glue(e.to_string()))?;
    if result.facets().len() != n_facets {
        return Err(Error::Glue("two facets were identified".into()));
    }
    Ok(result)
}
