//! Shellable balls with prescribed h-vectors.
//!
//! The ball B(I) of an order ideal I has one facet per monomial, built from
//! adjacent vertex pairs displaced by the monomial's extended representation.
//! The target ball is the closure of ∂B(I) minus a shellable sub-ball picked
//! by a type-one/type-two selection, and an explicit shelling of it is
//! produced by the left-endset/block comparator followed by the A_k facets.

use std::cmp::Ordering;
use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::complex::{
    verify_shelling, CountVector, Face, Role, ShellingCertificate, SimplicialComplex,
};
use crate::error::{Error, Result};
use crate::homology::{classify, TopologicalClass, TopologyTag};
use crate::monomial::{
    check_partial_initial_segment, compressed_ideal, graded_revlex_cmp, is_m_vector, revlex_cmp,
    Monomial, OrderIdeal,
};

/// Which displacement formula a facet/monomial correspondence uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BlMode {
    /// Pairs start at e_j + 2j - 1; facets of B(I).
    Alpha,
    /// A fixed vertex 1 then pairs starting at e_j + 2j; facets of ∂B(I).
    AlphaPrime,
}

/// Parity-dependent shape of the facets for a target h-vector of length d+1.
/// Even d adds the vertex 0 to every facet.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Layout {
    pub d: usize,
}

impl Layout {
    pub fn even(&self) -> bool {
        self.d.is_multiple_of(2)
    }

    pub fn pairs(&self, mode: BlMode) -> usize {
        match mode {
            BlMode::Alpha => self.d.div_ceil(2),
            BlMode::AlphaPrime => (self.d - 1) / 2,
        }
    }

    fn base(&self, mode: BlMode) -> Vec<u32> {
        match (mode, self.even()) {
            (BlMode::Alpha, false) => vec![],
            (BlMode::Alpha, true) => vec![0],
            (BlMode::AlphaPrime, false) => vec![1],
            (BlMode::AlphaPrime, true) => vec![0, 1],
        }
    }

    fn offset(mode: BlMode) -> u32 {
        match mode {
            BlMode::Alpha => 1,
            BlMode::AlphaPrime => 0,
        }
    }
}

/// The facet attached to a monomial. `n`, when given, bounds every label.
pub fn facet_of_monomial(m: &Monomial, mode: BlMode, d: usize, n: Option<u32>) -> Result<Face> {
    if d < 1 || (mode == BlMode::AlphaPrime && d < 2) {
        return Err(Error::Parameter(format!("d = {d} too small for {mode:?}")));
    }
    let layout = Layout { d };
    let c = layout.pairs(mode);
    if m.degree() as usize > c {
        return Err(Error::Parameter(format!("{m} has degree above {c}")));
    }
    let mut v = layout.base(mode);
    for (j, &e) in m.extended(c).iter().enumerate() {
        let i = e + 2 * (j as u32 + 1) - Layout::offset(mode);
        v.push(i);
        v.push(i + 1);
    }
    let f = Face::from_iter_unsorted(v);
    if let (Some(n), Some(&top)) = (n, f.vertices().last()) {
        if top > n {
            return Err(Error::IndexOverflow {
                index: top,
                budget: n,
            });
        }
    }
    Ok(f)
}

/// Inverse of [`facet_of_monomial`].
pub fn monomial_of_facet(f: &Face, mode: BlMode, d: usize) -> Result<Monomial> {
    let layout = Layout { d };
    let base = layout.base(mode);
    let c = layout.pairs(mode);
    let bad = || Error::Parameter(format!("{f} is not a facet of the {mode:?} family"));
    let v = f.vertices();
    if v.len() != base.len() + 2 * c || v[..base.len()] != base[..] {
        return Err(bad());
    }
    let rest = &v[base.len()..];
    let mut e = Vec::with_capacity(c);
    for j in 0..c {
        let (a, b) = (rest[2 * j], rest[2 * j + 1]);
        let shift = 2 * (j as u32 + 1) - Layout::offset(mode);
        if b != a + 1 || a < shift {
            return Err(bad());
        }
        e.push(a - shift);
    }
    if e.windows(2).any(|w| w[0] > w[1]) {
        return Err(bad());
    }
    Ok(Monomial::from_extended(&e))
}

/// B(I) together with its shelling along the fixed linearization.
#[derive(Debug, Clone)]
pub struct BlBall {
    pub d: usize,
    pub order: Vec<Monomial>,
    pub complex: SimplicialComplex,
    pub certificate: ShellingCertificate,
}

/// Restriction face predicted for the facet of `m` in B(I): the upper vertex
/// of every pair that is not in its leftmost position.
pub fn predicted_bl_restriction(m: &Monomial, d: usize) -> Face {
    let c = Layout { d }.pairs(BlMode::Alpha);
    let e = m.extended(c);
    Face::from_iter_unsorted(
        e.iter()
            .enumerate()
            .filter(|(_, &ej)| ej > 0)
            .map(|(j, &ej)| ej + 2 * (j as u32 + 1)),
    )
}

/// Builds B(I) for an order ideal that is an initial segment of the partial
/// order, shelled in degree-then-reverse-lex order of the monomials.
pub fn build_bl_ball(ideal: &OrderIdeal, d: usize, n: Option<u32>) -> Result<BlBall> {
    let c = Layout { d }.pairs(BlMode::Alpha);
    if ideal.max_degree() > c {
        return Err(Error::Parameter(format!("ideal has degree above {c}")));
    }
    check_partial_initial_segment(ideal.monomials(), c)
        .map_err(|m| Error::NotInitialSegment(m.to_string()))?;
    let mut order: Vec<Monomial> = ideal.monomials().cloned().collect();
    order.sort_by(graded_revlex_cmp);
    let facets = order
        .iter()
        .map(|m| facet_of_monomial(m, BlMode::Alpha, d, n))
        .collect::<Result<Vec<_>>>()?;
    let certificate = verify_shelling(&facets)?;
    for (m, r) in order.iter().zip(&certificate.restrictions) {
        if r.len() != m.degree() as usize {
            return Err(Error::Internal(format!(
                "restriction of {m} has size {}",
                r.len()
            )));
        }
    }
    let complex = SimplicialComplex::from_facets(facets)?;
    Ok(BlBall {
        d,
        order,
        complex,
        certificate,
    })
}

/// Whether the α′ facet of `m` lies on ∂B(I): lower every entry of the
/// extended representation by one (not below zero) and test membership.
pub fn boundary_facet_test(m: &Monomial, ideal: &OrderIdeal, d: usize) -> bool {
    let c = Layout { d }.pairs(BlMode::AlphaPrime);
    if m.degree() as usize > c {
        return false;
    }
    let shifted: Vec<u32> = m.extended(c).iter().map(|&e| e.saturating_sub(1)).collect();
    ideal.contains(&Monomial::from_extended(&shifted))
}

/// (1, 0, ..., 0): the simplex, handled outside the general construction.
pub fn is_simplex_vector(h: &[i64]) -> bool {
    h.first() == Some(&1) && h[1..].iter().all(|&x| x == 0)
}

/// The hypotheses of the construction, with t = ⌊d/2⌋ and p = ⌊(d-1)/2⌋:
/// h_0 = 1 and h_d = 0; (1, h_1-1, h_2-h_1, ..., h_{t-1}-h_{t-2},
/// max(h_t-h_{t-1}, 0)) is an M-vector; (1, h_1-h_{d-1}, ..., h_p-h_{d-p})
/// is an M-vector; h_{p+1} ≥ h_{p+2} ≥ ... ≥ h_{d-1}.
pub fn construction_conditions(h: &[i64]) -> std::result::Result<(), String> {
    if h.len() < 3 {
        return Err("need d >= 2".into());
    }
    let d = h.len() - 1;
    if h[0] != 1 {
        return Err("h_0 != 1".into());
    }
    if h[d] != 0 {
        return Err("h_d != 0".into());
    }
    let first = growth_vector(h);
    if let Some(i) = is_m_vector(&first).first_failure {
        return Err(format!("growth vector {first:?} fails at index {i}"));
    }
    let second = boundary_vector(h);
    if let Some(i) = is_m_vector(&second).first_failure {
        return Err(format!("boundary vector {second:?} fails at index {i}"));
    }
    let p = (d - 1) / 2;
    if let Some(i) = (p + 1..d - 1).find(|&i| h[i] < h[i + 1]) {
        return Err(format!("h_{i} < h_{}", i + 1));
    }
    Ok(())
}

fn growth_vector(h: &[i64]) -> Vec<i64> {
    let d = h.len() - 1;
    let t = d / 2;
    let mut g = vec![1];
    g.extend((1..t).map(|i| h[i] - h[i - 1]));
    if t >= 1 {
        g.push((h[t] - h[t - 1]).max(0));
    }
    g
}

fn boundary_vector(h: &[i64]) -> Vec<i64> {
    let d = h.len() - 1;
    let p = (d - 1) / 2;
    let mut v = vec![1];
    v.extend((1..=p).map(|i| h[i] - h[d - i]));
    v
}

/// Whether [`construct_verified`] accepts `h`.
pub fn is_constructible_input(h: &[i64]) -> bool {
    (h.len() >= 2 && is_simplex_vector(h)) || construction_conditions(h).is_ok()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SelectionType {
    /// Y1 times an earlier selected monomial.
    One,
    /// A monomial of I with every index raised by one.
    Two,
}

/// The per-degree selections M_k, their candidate pools, and the γ set.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SelectionState {
    pub d: usize,
    /// Degree sequence of the source ideal.
    pub g: Vec<i64>,
    pub ideal: OrderIdeal,
    /// Target sizes G_0..G_p.
    pub targets: Vec<i64>,
    /// Candidate pools S_1..S_p in reverse-lex order (index 0 is {1}).
    pub pools: Vec<Vec<(Monomial, SelectionType)>>,
    /// M_0..M_p.
    pub chosen: Vec<Vec<(Monomial, SelectionType)>>,
    /// Whether h_t < h_{t-1}.
    pub negative: bool,
    /// The set E whose γ-facets close the sub-ball in the negative case.
    pub gamma: Vec<Monomial>,
}

impl SelectionState {
    pub fn selected(&self) -> impl Iterator<Item = &Monomial> {
        self.chosen.iter().flatten().map(|(m, _)| m)
    }
}

/// Runs the type-one/type-two selection for an h-vector meeting
/// [`construction_conditions`].
pub fn select_type_sets(h: &[i64]) -> Result<SelectionState> {
    construction_conditions(h).map_err(Error::ConditionsViolated)?;
    let d = h.len() - 1;
    let t = d / 2;
    let p = (d - 1) / 2;
    let negative = h[t] - h[t - 1] < 0;
    let mut g = growth_vector(h);
    while g.len() > 1 && g.last() == Some(&0) {
        g.pop();
    }
    let ideal = compressed_ideal(&g)?;
    let (mut targets, gamma_count) = if !negative {
        (boundary_vector(h), 0)
    } else {
        let mut v = vec![1];
        v.extend((1..t).map(|i| h[i] - h[d - i]));
        if d % 2 == 1 {
            v.push(h[t - 1] - h[t + 1]);
        }
        (v, h[t - 1] - h[t])
    };
    targets.resize(p + 1, 0);

    let mut pools = vec![vec![(Monomial::one(), SelectionType::One)]];
    let mut chosen = vec![vec![(Monomial::one(), SelectionType::One)]];
    for k in 0..p {
        let y1 = Monomial::var(1);
        let mut pool: Vec<(Monomial, SelectionType)> = chosen[k]
            .iter()
            .map(|(m, _)| (y1.mul(m), SelectionType::One))
            .collect();
        pool.extend(
            ideal
                .degree(k + 1)
                .iter()
                .map(|m| (m.shift(1), SelectionType::Two)),
        );
        pool.sort_by(|a, b| revlex_cmp(&a.0, &b.0));
        let want = targets[k + 1];
        if want < 0 || pool.len() < want as usize {
            return Err(Error::Internal(format!(
                "pool of degree {} has {} elements, {want} required",
                k + 1,
                pool.len()
            )));
        }
        chosen.push(pool[..want as usize].to_vec());
        pools.push(pool);
    }
    let selected: Vec<&Monomial> = chosen.iter().flatten().map(|(m, _)| m).collect();
    check_partial_initial_segment(selected.iter().copied(), p)
        .map_err(|m| Error::Internal(format!("selection is not an initial segment at {m}")))?;

    let mut top: Vec<Monomial> = chosen[p].iter().map(|(m, _)| m.clone()).collect();
    top.sort_by(revlex_cmp);
    if (top.len() as i64) < gamma_count {
        return Err(Error::Internal(
            "too few top-degree selections for the γ patch".into(),
        ));
    }
    let gamma = top[..gamma_count as usize].to_vec();
    Ok(SelectionState {
        d,
        g,
        ideal,
        targets,
        pools,
        chosen,
        negative,
        gamma,
    })
}

/// The α′ facet of `m` with vertex 2 added and the parity's base vertex
/// removed (1 for odd d, 0 for even d).
pub fn gamma_facet(m: &Monomial, d: usize) -> Result<Face> {
    let f = facet_of_monomial(m, BlMode::AlphaPrime, d, None)?;
    let drop = if d.is_multiple_of(2) { 0 } else { 1 };
    Ok(f.without(drop).with(2))
}

/// Every intermediate object of the complement construction.
#[derive(Debug, Clone)]
pub struct ComplementConstruction {
    pub selection: SelectionState,
    pub bl: BlBall,
    /// ∂B(I) as the ridges of B(I) lying in one facet.
    pub sphere: SimplicialComplex,
    /// Shelling order of the removed sub-ball.
    pub sub_ball: Vec<Face>,
    pub sub_ball_certificate: ShellingCertificate,
    pub complex: SimplicialComplex,
}

/// Builds the ball with h-vector `h` and keeps the intermediate data.
pub fn complement_construction(h: &[i64]) -> Result<ComplementConstruction> {
    let selection = select_type_sets(h)?;
    let d = selection.d;
    let bl = build_bl_ball(&selection.ideal, d, None)?;
    let ridges: BTreeSet<Face> = bl.complex.boundary_ridges().into_iter().collect();
    let mut sub_ball = Vec::new();
    for level in &selection.chosen {
        let mut ms: Vec<&Monomial> = level.iter().map(|(m, _)| m).collect();
        ms.sort_by(|a, b| revlex_cmp(a, b));
        for m in ms {
            sub_ball.push(facet_of_monomial(m, BlMode::AlphaPrime, d, None)?);
        }
    }
    for m in &selection.gamma {
        sub_ball.push(gamma_facet(m, d)?);
    }
    if let Some(f) = sub_ball.iter().find(|f| !ridges.contains(f)) {
        return Err(Error::Internal(format!(
            "sub-ball facet {f} is not on the boundary sphere"
        )));
    }
    let sub_ball_certificate = verify_shelling(&sub_ball)?;
    let removed: BTreeSet<&Face> = sub_ball.iter().collect();
    let complex =
        SimplicialComplex::from_facets(ridges.iter().filter(|f| !removed.contains(f)).cloned())?;
    let got = complex.h_vector();
    if got.entries != h {
        return Err(Error::Internal(format!(
            "complement has h-vector {got}, expected {h:?}"
        )));
    }
    Ok(ComplementConstruction {
        selection,
        sphere: SimplicialComplex::from_facets(ridges)?,
        bl,
        sub_ball,
        sub_ball_certificate,
        complex,
    })
}

fn simplex(d: usize) -> SimplicialComplex {
    SimplicialComplex::from_facets([Face::from_iter_unsorted(1..=d as u32)]).expect("one facet")
}

/// The ball with h-vector `h` as the complement of a sub-ball in ∂B(I).
pub fn complement_ball(h: &[i64]) -> Result<SimplicialComplex> {
    if h.len() >= 2 && is_simplex_vector(h) && construction_conditions(h).is_err() {
        return Ok(simplex(h.len() - 1));
    }
    Ok(complement_construction(h)?.complex)
}

/// Left endset and contiguous blocks of a facet, relative to the first label.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AppendixOrderKey {
    pub left_endset: usize,
    pub blocks: Vec<Vec<u32>>,
}

impl AppendixOrderKey {
    pub fn of(f: &Face, base: u32) -> Self {
        let v = f.vertices();
        let l = v
            .iter()
            .enumerate()
            .take_while(|(k, &x)| x == base + *k as u32)
            .count();
        let mut blocks: Vec<Vec<u32>> = Vec::new();
        for &x in &v[l..] {
            match blocks.last_mut() {
                Some(b) if *b.last().unwrap() + 1 == x => b.push(x),
                _ => blocks.push(vec![x]),
            }
        }
        AppendixOrderKey {
            left_endset: l,
            blocks,
        }
    }
}

/// Every second vertex after the left endset: positions l+2, l+4, ... (1-based).
pub fn appendix_restriction(f: &Face, base: u32) -> Face {
    let l = AppendixOrderKey::of(f, base).left_endset;
    let v = f.vertices();
    Face::from_iter_unsorted((l + 2..=v.len()).step_by(2).map(|k| v[k - 1]))
}

/// The first-half comparator: larger left endset first; then block by block,
/// earlier start first, odd length before even, shorter odd blocks first
/// (equal odd blocks broken by which facet holds the largest vertex of the
/// symmetric difference), longer even blocks first.
pub fn appendix_cmp(f: &Face, g: &Face, base: u32) -> Ordering {
    let (kf, kg) = (AppendixOrderKey::of(f, base), AppendixOrderKey::of(g, base));
    if kf.left_endset != kg.left_endset {
        return kg.left_endset.cmp(&kf.left_endset);
    }
    for (a, b) in kf.blocks.iter().zip(&kg.blocks) {
        if a[0] != b[0] {
            return a[0].cmp(&b[0]);
        }
        let (oa, ob) = (a.len() % 2 == 1, b.len() % 2 == 1);
        if oa != ob {
            return if oa {
                Ordering::Less
            } else {
                Ordering::Greater
            };
        }
        if oa {
            if a.len() != b.len() {
                return a.len().cmp(&b.len());
            }
            let top = f
                .difference(g)
                .union(&g.difference(f))
                .vertices()
                .last()
                .copied();
            return match top {
                Some(v) if f.contains(v) => Ordering::Less,
                Some(_) => Ordering::Greater,
                None => Ordering::Equal,
            };
        }
        if a.len() != b.len() {
            return b.len().cmp(&a.len());
        }
    }
    f.cmp(g)
}

/// An explicit shelling of the complement ball with predicted restriction
/// faces. The result is checked against [`verify_shelling`] facet by facet.
pub fn appendix_shelling(h: &[i64]) -> Result<ShellingCertificate> {
    if h.len() >= 2 && is_simplex_vector(h) && construction_conditions(h).is_err() {
        return verify_shelling(simplex(h.len() - 1).facets());
    }
    let cc = complement_construction(h)?;
    let (certificate, predicted) = appendix_order(h, &cc)?;
    if certificate.restrictions != predicted {
        let step = certificate
            .restrictions
            .iter()
            .zip(&predicted)
            .position(|(a, b)| a != b)
            .unwrap_or(0);
        return Err(Error::Internal(format!(
            "restriction mismatch at step {}",
            step + 1
        )));
    }
    let ours: BTreeSet<&Face> = certificate.ordered_facets.iter().collect();
    let theirs: BTreeSet<&Face> = cc.complex.facets().iter().collect();
    if ours != theirs {
        return Err(Error::Internal(
            "appendix facets differ from the complement".into(),
        ));
    }
    Ok(certificate)
}

fn appendix_order(
    h: &[i64],
    cc: &ComplementConstruction,
) -> Result<(ShellingCertificate, Vec<Face>)> {
    let d = h.len() - 1;
    let even = d.is_multiple_of(2);
    let base: u32 = if even { 0 } else { 1 };
    let t = d / 2;
    let p = (d - 1) / 2;
    let nb = Layout { d }.pairs(BlMode::Alpha);
    let negative = cc.selection.negative;
    let ridges: BTreeSet<Face> = cc.sphere.facets().iter().cloned().collect();

    // first half: drop the lower vertex of one pair
    let mut first: BTreeSet<Face> = BTreeSet::new();
    for m in cc.bl.order.iter() {
        let f = facet_of_monomial(m, BlMode::Alpha, d, None)?;
        for (j, &e) in m.extended(nb).iter().enumerate() {
            let r = f.without(e + 2 * j as u32 + 1);
            if ridges.contains(&r) {
                first.insert(r);
            }
        }
    }
    let mut first: Vec<Face> = first
        .into_iter()
        .filter(|f| !(even || negative) || AppendixOrderKey::of(f, base).left_endset > 0)
        .collect();
    first.sort_by(|a, b| appendix_cmp(a, b, base));
    let mut predicted: Vec<Face> = first
        .iter()
        .map(|f| appendix_restriction(f, base))
        .collect();

    // second half: drop an even vertex k, grouped by monomial
    let mut desc: Vec<&Monomial> = cc.bl.order.iter().collect();
    desc.sort_by(|a, b| revlex_cmp(b, a));
    let hh = |i: usize| if i <= d { h[i] } else { 0 };
    let ks: Vec<u32> = if even {
        (0..=d as u32).step_by(2).collect()
    } else {
        let mut v = if negative { vec![1] } else { vec![] };
        v.extend((2..=d as u32 + 1).step_by(2));
        v
    };
    let count = |k: u32| -> usize {
        let c = if even {
            hh(t + k as usize / 2)
        } else if k == 1 {
            hh(p)
        } else {
            hh((d + k as usize - 1) / 2)
        };
        c.max(0) as usize
    };
    let eligible = |m: &Monomial, k: u32| -> bool {
        let s = m.degree() as usize;
        if even {
            k as usize + 2 * s <= d
        } else {
            k as usize + 2 * s <= d + 1
        }
    };
    let selected: Vec<BTreeSet<&Monomial>> = ks
        .iter()
        .map(|&k| {
            desc.iter()
                .copied()
                .filter(|m| eligible(m, k))
                .take(count(k))
                .collect()
        })
        .collect();
    let mut order = first;
    for m in &desc {
        let s = m.degree() as usize;
        let f = facet_of_monomial(m, BlMode::Alpha, d, None)?;
        let e = m.extended(nb);
        let shifted: Vec<u32> = (nb - s + 1..=nb)
            .map(|j| e[j - 1] + 2 * j as u32 - 1)
            .collect();
        let mut items: Vec<(Face, Face)> = Vec::new();
        for (idx, &k) in ks.iter().enumerate() {
            if !selected[idx].contains(m) {
                continue;
            }
            let r = f.without(k);
            if !ridges.contains(&r) {
                return Err(Error::Internal(format!("{r} is not a boundary ridge")));
            }
            let mut rv: Vec<u32> = shifted.clone();
            if even {
                rv.extend(0..k);
                rv.extend((k as usize / 2 + 1..=t.saturating_sub(s)).map(|i| 2 * i as u32 - 1));
            } else if k == 1 {
                rv.extend((1..=p.saturating_sub(s)).map(|i| 2 * i as u32 + 1));
            } else {
                rv.extend(1..k);
                rv.extend(
                    (k as usize / 2..=((d - 1) / 2).saturating_sub(s)).map(|i| 2 * i as u32 + 1),
                );
            }
            items.push((r, Face::from_iter_unsorted(rv)));
        }
        items.sort_by_key(|(_, r)| r.len());
        for (f, r) in items {
            order.push(f);
            predicted.push(r);
        }
    }
    let certificate = verify_shelling(&order)?;
    Ok((certificate, predicted))
}

/// A constructed ball with its shelling and topological certification.
#[derive(Debug, Clone)]
pub struct VerifiedBall {
    pub complex: SimplicialComplex,
    pub certificate: ShellingCertificate,
    pub class: TopologicalClass,
}

/// Builds, shells, and certifies the ball with h-vector `h`.
pub fn construct_verified(h: &[i64]) -> Result<VerifiedBall> {
    if !is_constructible_input(h) {
        let why = construction_conditions(h).err().unwrap_or_default();
        return Err(Error::ConditionsViolated(why));
    }
    let complex = complement_ball(h)?;
    let certificate = appendix_shelling(h)?;
    let ours: BTreeSet<&Face> = certificate.ordered_facets.iter().collect();
    let theirs: BTreeSet<&Face> = complex.facets().iter().collect();
    if ours != theirs {
        return Err(Error::Internal("certificate and complex disagree".into()));
    }
    let from_cert = certificate.h_vector();
    let from_faces = complex.f_vector().convert(Role::H)?;
    if from_cert.entries != h || from_faces.entries != h {
        return Err(Error::Internal(format!(
            "h mismatch: certificate {from_cert}, faces {from_faces}"
        )));
    }
    let class = classify(&complex);
    if class.tag != TopologyTag::HomologyBall {
        return Err(Error::Internal(format!(
            "classified as {:?}: {:?}",
            class.tag, class.reason
        )));
    }
    Ok(VerifiedBall {
        complex,
        certificate,
        class,
    })
}

/// h-vector of a B(I) ball: the degree sequence of I padded to length d+1.
pub fn bl_h_vector(ideal: &OrderIdeal, d: usize) -> CountVector {
    let mut e = ideal.degree_sequence();
    e.resize(d + 2, 0);
    CountVector {
        role: Role::H,
        d: d + 1,
        entries: e,
    }
}
