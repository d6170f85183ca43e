//! Necessary conditions and impossibility engines for h-vectors of balls.
//!
//! Three layers: the cone-condition battery (with the subset that is known
//! to hold for every homology ball), an algebraic engine combining Betti
//! number bounds with a search for splittings along a disconnecting ridge,
//! and a combinatorial engine that counts triangles over all possible
//! one-skeleta. [`verdict`] chains them and falls back to construction.

use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::complex::{CountVector, Role};
use crate::construction::{construct_verified, is_constructible_input, VerifiedBall};
use crate::error::{Error, Result};
use crate::graph::{enumerate_graphs_cached, Graph};
use crate::homology::TopologyTag;
use crate::monomial::{ek_graded_betti, is_m_vector, lex_ideal_from_hilbert, pseudo_power};
use crate::scalar::binomial;

/// Default cap on the number of absent edges the skeleton engine enumerates.
pub const DEFAULT_SKELETON_CAP: usize = 7;
/// Largest x for which the family certificate enumerates graphs directly.
pub const FAMILY_ENUMERATION_MAX_X: u32 = 8;

fn entry(h: &[i64], i: i64) -> i64 {
    if i < 0 {
        0
    } else {
        h.get(i as usize).copied().unwrap_or(0)
    }
}

/// g_i = h_i - h_{d-i} for 0 ≤ i ≤ ⌊d/2⌋: the g-vector of the boundary sphere.
pub fn boundary_g(h: &CountVector) -> Result<CountVector> {
    if h.role != Role::H {
        return Err(Error::WrongRole {
            expected: Role::H.name(),
            found: h.role.name(),
        });
    }
    let d = h.entries.len() - 1;
    if h.entries[d] != 0 {
        return Err(Error::NonzeroTop {
            d,
            value: h.entries[d],
        });
    }
    let entries = (0..=d / 2)
        .map(|i| h.entries[i] - h.entries[d - i])
        .collect();
    Ok(CountVector {
        role: Role::G,
        d: h.d,
        entries,
    })
}

/// One cone condition: (h_0 - h_{d+k}, ..., h_m - h_{d+k-m}), m = ⌊(d+k-1)/2⌋.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConeCondition {
    pub k: usize,
    pub m: usize,
    pub vector: Vec<i64>,
    pub is_m_vector: bool,
    pub first_failure: Option<usize>,
    pub prefix_is_m_vector: bool,
}

/// The subset of conditions proven necessary for every homology ball.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifiedConditions {
    pub ok: bool,
    pub h_is_m_vector: bool,
    pub top_vanishes: bool,
    pub tail_non_increasing: bool,
    pub prefixes_are_m_vectors: bool,
    pub boundary_prefix_is_m_vector: bool,
    pub full_conditions_required: bool,
    pub full_conditions_pass: bool,
    pub reasons: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConditionReport {
    pub h: Vec<i64>,
    pub conditions: Vec<ConeCondition>,
    pub all_pass: bool,
    pub verified: VerifiedConditions,
}

impl ConditionReport {
    pub fn failures(&self) -> impl Iterator<Item = &ConeCondition> {
        self.conditions.iter().filter(|c| !c.is_m_vector)
    }
}

fn cone_conditions(h: &[i64]) -> Vec<ConeCondition> {
    let d = h.len() as i64 - 1;
    (0..=d + 1)
        .map(|k| {
            let m = (d + k - 1).div_euclid(2).max(0);
            let vector: Vec<i64> = (0..=m).map(|i| entry(h, i) - entry(h, d + k - i)).collect();
            let check = is_m_vector(&vector);
            let prefix = &vector[..vector.len().min(3)];
            ConeCondition {
                k: k as usize,
                m: m as usize,
                prefix_is_m_vector: is_m_vector(prefix).ok,
                is_m_vector: check.ok,
                first_failure: check.first_failure,
                vector,
            }
        })
        .collect()
}

fn verified_from(h: &[i64], cones: &[ConeCondition]) -> VerifiedConditions {
    let d = h.len() - 1;
    let mut reasons = Vec::new();
    let hm = is_m_vector(h);
    if let Some(i) = hm.first_failure {
        reasons.push(format!("h is not an M-vector (index {i})"));
    }
    let top_vanishes = h[d] == 0;
    if !top_vanishes {
        reasons.push(format!("h_{d} = {} is nonzero", h[d]));
    }
    // a 1-ball has h_0 = 1 and any h_1, so the inequality starts at d = 3
    let tail_non_increasing = d < 3 || h[d - 2] >= h[d - 1];
    if !tail_non_increasing {
        reasons.push(format!(
            "h_{} = {} < h_{} = {}",
            d - 2,
            h[d - 2],
            d - 1,
            h[d - 1]
        ));
    }
    let mut prefixes_are_m_vectors = true;
    for c in cones.iter().filter(|c| !c.prefix_is_m_vector) {
        prefixes_are_m_vectors = false;
        let shown = &c.vector[..c.vector.len().min(3)];
        reasons.push(format!("k = {}: prefix {shown:?} is not an M-vector", c.k));
    }
    let boundary_prefix_is_m_vector = if top_vanishes {
        let g = boundary_g(&CountVector::h(h))
            .map(|g| g.entries)
            .unwrap_or_default();
        let ok = is_m_vector(&g[..g.len().min(3)]).ok;
        if !ok {
            reasons.push(format!(
                "boundary g-vector prefix {:?} is not an M-vector",
                &g[..g.len().min(3)]
            ));
        }
        ok
    } else {
        false
    };
    let full_conditions_required = d <= 5;
    let full_conditions_pass = cones.iter().all(|c| c.is_m_vector);
    if full_conditions_required {
        for c in cones.iter().filter(|c| !c.is_m_vector) {
            reasons.push(format!("k = {}: {:?} is not an M-vector", c.k, c.vector));
        }
    }
    let ok = hm.ok
        && top_vanishes
        && tail_non_increasing
        && prefixes_are_m_vectors
        && boundary_prefix_is_m_vector
        && (!full_conditions_required || full_conditions_pass);
    VerifiedConditions {
        ok,
        h_is_m_vector: hm.ok,
        top_vanishes,
        tail_non_increasing,
        prefixes_are_m_vectors,
        boundary_prefix_is_m_vector,
        full_conditions_required,
        full_conditions_pass,
        reasons,
    }
}

/// All cone conditions for k = 0..=d+1 together with the verified subset.
pub fn gconditions(h: &[i64]) -> ConditionReport {
    let cones = cone_conditions(h);
    let verified = verified_from(h, &cones);
    ConditionReport {
        h: h.to_vec(),
        all_pass: cones.iter().all(|c| c.is_m_vector),
        conditions: cones,
        verified,
    }
}

/// The provably necessary conditions only.
pub fn verified_conditions(h: &[i64]) -> VerifiedConditions {
    verified_from(h, &cone_conditions(h))
}

/// Bounds on β_{n,n+1} of the face ring from the lex ideal with Hilbert
/// function h in n = h_1 variables.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct PeevaBounds {
    pub nvars: u32,
    pub lower: u64,
    pub upper: u64,
    pub beta_top: u64,
    pub beta_previous: u64,
}

pub fn peeva_bounds(h: &[i64]) -> Result<PeevaBounds> {
    let n = h.get(1).copied().unwrap_or(0);
    if n < 0 {
        return Err(Error::NotAnMVector { index: 1 });
    }
    let n = n as u32;
    let lex = lex_ideal_from_hilbert(h, n)?;
    let beta_top = ek_graded_betti(&lex, n, n + 1);
    let beta_previous = if n >= 1 {
        ek_graded_betti(&lex, n - 1, n + 1)
    } else {
        0
    };
    Ok(PeevaBounds {
        nvars: n,
        lower: beta_top.saturating_sub(beta_previous),
        upper: beta_top,
        beta_top,
        beta_previous,
    })
}

/// Two h-vectors whose balls, glued along a ridge, would give h.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SplitCandidate {
    pub left: Vec<i64>,
    pub right: Vec<i64>,
}

fn split_component_ok(v: &[i64]) -> bool {
    verified_conditions(v).ok
}

/// All unordered splittings (left ≥ right lexicographically) whose components
/// pass the verified conditions. With `recursive`, a candidate is dropped
/// when one of its components is itself ruled out by the splitting engine.
pub fn enumerate_splits(h: &[i64], recursive: bool) -> Vec<SplitCandidate> {
    let d = h.len() - 1;
    if h.len() < 2 || h[0] != 1 || h[1] < 1 {
        return Vec::new();
    }
    let mut sums = h.to_vec();
    sums[1] -= 1;
    if sums.iter().any(|&s| s < 0) {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut a = vec![1i64; d + 1];
    let mut b = vec![1i64; d + 1];
    split_dfs(&sums, 1, &mut a, &mut b, &mut out);
    out.sort();
    if recursive {
        out.retain(|c| {
            !split_engine_rules_out(&c.left, true) && !split_engine_rules_out(&c.right, true)
        });
    }
    out
}

fn split_dfs(
    sums: &[i64],
    i: usize,
    a: &mut Vec<i64>,
    b: &mut Vec<i64>,
    out: &mut Vec<SplitCandidate>,
) {
    if i == sums.len() {
        if a >= b && split_component_ok(a) && split_component_ok(b) {
            out.push(SplitCandidate {
                left: a.clone(),
                right: b.clone(),
            });
        }
        return;
    }
    let fits = |v: &[i64], x: i64| i < 2 || x <= pseudo_power(v[i - 1], i as i64 - 1);
    for x in 0..=sums[i] {
        let y = sums[i] - x;
        if !fits(a, x) || !fits(b, y) {
            continue;
        }
        a[i] = x;
        b[i] = y;
        split_dfs(sums, i + 1, a, b, out);
    }
}

fn split_engine_rules_out(h: &[i64], recursive: bool) -> bool {
    if !verified_conditions(h).ok {
        return true;
    }
    match peeva_bounds(h) {
        Ok(p) if p.lower > 0 => enumerate_splits(h, recursive).is_empty(),
        _ => false,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    BlConditionsFail,
    ImpossibleBettiSplit,
    ImpossibleSkeleton,
    ImpossibleFamilyCertificate,
    Constructible,
    Unknown,
}

impl Verdict {
    pub fn is_impossible(self) -> bool {
        !matches!(self, Verdict::Constructible | Verdict::Unknown)
    }

    /// 0 constructible, 2 impossible, 3 unknown.
    pub fn exit_code(self) -> i32 {
        match self {
            Verdict::Constructible => 0,
            Verdict::Unknown => 3,
            _ => 2,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Stage {
    VerifiedConditions,
    Gconditions,
    BettiSplit,
    Skeleton,
    FamilyCertificate,
    Construction,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Outcome {
    Pass,
    Decisive,
    Inconclusive,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiSplitCertificate {
    pub bounds: PeevaBounds,
    /// `None` when the lower bound is zero and no search was needed.
    pub splits: Option<Vec<SplitCandidate>>,
    pub recursive: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Disposition {
    TooFewTriangles,
    VertexInNoFacet,
    FacetDeletion,
    Unobstructed,
}

/// One absent-edge graph and what its flag complex allows.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphRecord {
    pub absent_edges: Vec<(usize, usize)>,
    pub max_triangles: i64,
    pub h3_prime: i64,
    pub min_degree: i64,
    pub disposition: Disposition,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SkeletonOutcome {
    Impossible,
    Unobstructed,
    CapExceeded,
    NotApplicable,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecrementedCheck {
    pub h: Vec<i64>,
    pub verified: VerifiedConditions,
    pub nested: Option<SkeletonCertificate>,
    pub ruled_out: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SkeletonCertificate {
    pub h: Vec<i64>,
    pub outcome: SkeletonOutcome,
    pub note: String,
    pub vertices: i64,
    pub edges: i64,
    pub triangles: i64,
    pub absent_edges: i64,
    pub cap: usize,
    pub graphs: Vec<GraphRecord>,
    pub decremented: Option<Box<DecrementedCheck>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyParams {
    pub x: u32,
    pub y: u32,
    pub d: usize,
}

impl FamilyParams {
    pub fn new(x: u32, y: u32, d: usize) -> Result<Self> {
        if x <= 4 {
            return Err(Error::Parameter(format!("x = {x} must exceed 4")));
        }
        if y <= 1 || y >= x {
            return Err(Error::Parameter(format!("y = {y} must satisfy 1 < y < x")));
        }
        if d < 6 {
            return Err(Error::Parameter(format!("d = {d} must be at least 6")));
        }
        Ok(FamilyParams { x, y, d })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyEnumeration {
    pub graphs: usize,
    pub min_absent_triangles: i64,
    pub realizes_bound: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyCertificate {
    pub params: FamilyParams,
    pub h: Vec<i64>,
    pub gconditions_pass: bool,
    pub vertices: i64,
    pub absent_edges: i64,
    pub budget: i64,
    pub matching_bound: i64,
    /// (k, bound) for 2 ≤ k < x.
    pub star_bounds: Vec<(i64, i64)>,
    pub bound: i64,
    pub excess: i64,
    pub decremented_boundary: Vec<i64>,
    pub decremented_fails: bool,
    pub enumeration: Option<FamilyEnumeration>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstructionSummary {
    pub facets: usize,
    pub vertices: usize,
    pub f_vector: Vec<i64>,
    pub shelling_length: usize,
    pub topology: TopologyTag,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Certificate {
    Conditions(ConditionReport),
    BettiSplit(BettiSplitCertificate),
    Skeleton(SkeletonCertificate),
    Family(FamilyCertificate),
    Construction(ConstructionSummary),
    Message { text: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StageRecord {
    pub stage: Stage,
    pub outcome: Outcome,
    pub summary: String,
    pub certificate: Certificate,
}

/// Stage-by-stage verdict; the certificate of the decisive stage replays it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ObstructionReport {
    pub h: Vec<i64>,
    pub verdict: Verdict,
    pub decisive_stage: Option<Stage>,
    pub stages: Vec<StageRecord>,
}

impl ObstructionReport {
    fn single(h: &[i64], verdict: Verdict, record: StageRecord) -> Self {
        ObstructionReport {
            h: h.to_vec(),
            verdict,
            decisive_stage: (record.outcome == Outcome::Decisive).then_some(record.stage),
            stages: vec![record],
        }
    }

    pub fn stage(&self, stage: Stage) -> Option<&StageRecord> {
        self.stages.iter().find(|r| r.stage == stage)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EngineOptions {
    pub recursive_splits: bool,
    pub skeleton_cap: usize,
}

impl Default for EngineOptions {
    fn default() -> Self {
        EngineOptions {
            recursive_splits: false,
            skeleton_cap: DEFAULT_SKELETON_CAP,
        }
    }
}

/// Impossible when the Betti lower bound forces a disconnecting ridge and
/// no admissible splitting exists.
pub fn betti_split_verdict(h: &[i64], opts: &EngineOptions) -> ObstructionReport {
    let record = |outcome, summary: String, certificate| StageRecord {
        stage: Stage::BettiSplit,
        outcome,
        summary,
        certificate,
    };
    let bounds = match peeva_bounds(h) {
        Ok(b) => b,
        Err(e) => {
            return ObstructionReport::single(
                h,
                Verdict::Unknown,
                record(
                    Outcome::Inconclusive,
                    format!("bounds unavailable: {e}"),
                    Certificate::Message {
                        text: e.to_string(),
                    },
                ),
            )
        }
    };
    if bounds.lower == 0 {
        let cert = BettiSplitCertificate {
            bounds,
            splits: None,
            recursive: opts.recursive_splits,
        };
        return ObstructionReport::single(
            h,
            Verdict::Unknown,
            record(
                Outcome::Inconclusive,
                format!("lower bound 0 (upper {})", bounds.upper),
                Certificate::BettiSplit(cert),
            ),
        );
    }
    let splits = enumerate_splits(h, opts.recursive_splits);
    let impossible = splits.is_empty();
    let summary = if impossible {
        format!(
            "beta_(n,n+1) >= {} forces a disconnecting ridge but no splitting exists",
            bounds.lower
        )
    } else {
        format!("{} admissible splittings", splits.len())
    };
    let cert = BettiSplitCertificate {
        bounds,
        splits: Some(splits),
        recursive: opts.recursive_splits,
    };
    let (verdict, outcome) = if impossible {
        (Verdict::ImpossibleBettiSplit, Outcome::Decisive)
    } else {
        (Verdict::Unknown, Outcome::Inconclusive)
    };
    ObstructionReport::single(
        h,
        verdict,
        record(outcome, summary, Certificate::BettiSplit(cert)),
    )
}

fn choose(n: i64, k: i64) -> i64 {
    binomial(n, k)
}

/// Triangle-count search over all one-skeleta with the right edge count.
pub fn skeleton_certificate(h: &[i64], cap: usize) -> SkeletonCertificate {
    let d = h.len() - 1;
    let mut cert = SkeletonCertificate {
        h: h.to_vec(),
        outcome: SkeletonOutcome::NotApplicable,
        note: String::new(),
        vertices: 0,
        edges: 0,
        triangles: 0,
        absent_edges: 0,
        cap,
        graphs: Vec::new(),
        decremented: None,
    };
    if d < 3 {
        cert.note = "needs d >= 3".into();
        return cert;
    }
    if h.iter().sum::<i64>() <= 1 {
        cert.note = "at most one facet".into();
        return cert;
    }
    let f = match CountVector::h(h).convert(Role::F) {
        Ok(f) => f.entries,
        Err(e) => {
            cert.note = e.to_string();
            return cert;
        }
    };
    let (n, f1, f2) = (f[1], f[2], f[3]);
    cert.vertices = n;
    cert.edges = f1;
    cert.triangles = f2;
    let a = choose(n, 2) - f1;
    cert.absent_edges = a;
    if a < 0 {
        cert.outcome = SkeletonOutcome::Impossible;
        cert.note = format!("{f1} edges on {n} vertices");
        return cert;
    }
    if a as usize > cap {
        cert.outcome = SkeletonOutcome::CapExceeded;
        cert.note = format!("{a} absent edges exceed the cap {cap}");
        return cert;
    }
    let a = a as usize;
    let graphs: Vec<Graph> = if a == 0 {
        vec![Graph::new(0, [])]
    } else {
        enumerate_graphs_cached(a, (2 * a).min(n as usize)).to_vec()
    };
    let h3 = h[3];
    cert.graphs = graphs
        .par_iter()
        .map(|g| {
            let deg = g.degrees();
            let absent_triangles = a as i64 * (n - 2)
                - deg.iter().map(|&k| choose(k as i64, 2)).sum::<i64>()
                + g.triangle_count() as i64;
            let max_triangles = choose(n, 3) - absent_triangles;
            let min_degree = n - 1 - g.max_degree() as i64;
            let disposition = if max_triangles < f2 {
                Disposition::TooFewTriangles
            } else if min_degree < d as i64 - 1 {
                Disposition::VertexInNoFacet
            } else if min_degree == d as i64 - 1 {
                Disposition::FacetDeletion
            } else {
                Disposition::Unobstructed
            };
            GraphRecord {
                absent_edges: g.edges.clone(),
                max_triangles,
                h3_prime: h3 + max_triangles - f2,
                min_degree,
                disposition,
            }
        })
        .collect();
    if cert
        .graphs
        .iter()
        .any(|g| g.disposition == Disposition::Unobstructed)
    {
        cert.outcome = SkeletonOutcome::Unobstructed;
        cert.note = "some skeleton allows every vertex degree >= d".into();
        return cert;
    }
    if cert
        .graphs
        .iter()
        .any(|g| g.disposition == Disposition::FacetDeletion)
    {
        let mut smaller = h.to_vec();
        smaller[1] -= 1;
        let verified = verified_conditions(&smaller);
        let (nested, ruled_out) = if verified.ok {
            let nested = skeleton_certificate(&smaller, cap);
            let out = nested.outcome == SkeletonOutcome::Impossible;
            (Some(nested), out)
        } else {
            (None, true)
        };
        cert.decremented = Some(Box::new(DecrementedCheck {
            h: smaller,
            verified,
            nested,
            ruled_out,
        }));
        if !ruled_out {
            cert.outcome = SkeletonOutcome::Unobstructed;
            cert.note = "deleting the facet at a degree d-1 vertex is not ruled out".into();
            return cert;
        }
    }
    cert.outcome = SkeletonOutcome::Impossible;
    cert.note = "every admissible skeleton has a vertex of degree <= d-1".into();
    cert
}

pub fn skeleton_search(h: &[i64], opts: &EngineOptions) -> ObstructionReport {
    let cert = skeleton_certificate(h, opts.skeleton_cap);
    let (verdict, outcome) = if cert.outcome == SkeletonOutcome::Impossible {
        (Verdict::ImpossibleSkeleton, Outcome::Decisive)
    } else {
        (Verdict::Unknown, Outcome::Inconclusive)
    };
    let summary = cert.note.clone();
    ObstructionReport::single(
        h,
        verdict,
        StageRecord {
            stage: Stage::Skeleton,
            outcome,
            summary,
            certificate: Certificate::Skeleton(cert),
        },
    )
}

/// (1, x, C(x,2), C(x+1,3)-2, ..., C(x+1,3)-2, C(x,2)-C(y,2)-1, x-y, 0).
pub fn family_hvector(p: &FamilyParams) -> CountVector {
    let (x, y, d) = (p.x as i64, p.y as i64, p.d);
    let mut h = vec![1, x, choose(x, 2)];
    h.extend(std::iter::repeat_n(choose(x + 1, 3) - 2, d - 5));
    h.extend([choose(x, 2) - choose(y, 2) - 1, x - y, 0]);
    CountVector::h(&h)
}

/// Absent triangles forced by an absent-edge graph on n vertices.
fn absent_triangles(g: &Graph, n: i64) -> i64 {
    let m = g.edges.len() as i64;
    m * (n - 2)
        - g.degrees()
            .iter()
            .map(|&k| choose(k as i64, 2))
            .sum::<i64>()
        + g.triangle_count() as i64
}

pub fn family_certificate(p: &FamilyParams) -> ObstructionReport {
    let h = family_hvector(p).entries;
    let (x, d) = (p.x as i64, p.d as i64);
    let gconditions_pass = gconditions(&h).all_pass;
    let f = CountVector::h(&h)
        .convert(Role::F)
        .expect("h converts")
        .entries;
    let vertices = f[1];
    let absent_edges = choose(vertices, 2) - f[2];
    let budget = choose(vertices, 3) - f[3];
    let base = (x * x + (2 * d - 3) * x) / 2;
    let matching_bound = x * (x + d - 2);
    let star_bounds: Vec<(i64, i64)> = (2..x).map(|k| (k, base + (k - 1) * (x - k))).collect();
    let bound = star_bounds
        .iter()
        .map(|&(_, b)| b)
        .chain([matching_bound])
        .min()
        .expect("x > 2");
    let mut decremented = h.clone();
    decremented[1] -= 1;
    let decremented_boundary = boundary_g(&CountVector::h(&decremented))
        .map(|g| g.entries)
        .unwrap_or_default();
    let decremented_fails = !verified_conditions(&decremented).ok;
    let enumeration = (p.x <= FAMILY_ENUMERATION_MAX_X).then(|| {
        let graphs = enumerate_graphs_cached(x as usize, 2 * x as usize);
        let counts: Vec<i64> = graphs
            .iter()
            .filter(|g| g.max_degree() < x as usize)
            .map(|g| absent_triangles(g, vertices))
            .collect();
        let min = counts.iter().copied().min().unwrap_or(i64::MAX);
        FamilyEnumeration {
            graphs: counts.len(),
            min_absent_triangles: min,
            realizes_bound: min >= bound,
        }
    });
    let consistent = enumeration.as_ref().is_none_or(|e| e.realizes_bound);
    let impossible =
        gconditions_pass && absent_edges == x && decremented_fails && bound > budget && consistent;
    let cert = FamilyCertificate {
        params: *p,
        h: h.clone(),
        gconditions_pass,
        vertices,
        absent_edges,
        budget,
        matching_bound,
        star_bounds,
        bound,
        excess: bound - budget,
        decremented_boundary,
        decremented_fails,
        enumeration,
    };
    let (verdict, outcome, summary) = if impossible {
        (
            Verdict::ImpossibleFamilyCertificate,
            Outcome::Decisive,
            format!("at least {bound} absent triangles, only {budget} allowed"),
        )
    } else {
        (
            Verdict::Unknown,
            Outcome::Inconclusive,
            "certificate incomplete".to_string(),
        )
    };
    ObstructionReport::single(
        &h,
        verdict,
        StageRecord {
            stage: Stage::FamilyCertificate,
            outcome,
            summary,
            certificate: Certificate::Family(cert),
        },
    )
}

/// Whether (1, h_1 - m, h_2, ..., h_5, 0) meets the construction hypotheses
/// for some m; the smallest such m is returned.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtensionPredicate {
    pub holds: bool,
    pub witness: Option<i64>,
    pub tried: Vec<(i64, bool)>,
}

pub fn extension_predicate(h: &[i64], positive_m_only: bool) -> Result<ExtensionPredicate> {
    if h.len() != 7 {
        return Err(Error::BadLength {
            len: h.len(),
            expected: 7,
        });
    }
    let start = i64::from(positive_m_only);
    let tried: Vec<(i64, bool)> = (start..=h[1].max(start))
        .filter(|&m| m <= h[1])
        .map(|m| {
            let mut v = h.to_vec();
            v[1] -= m;
            (m, is_constructible_input(&v))
        })
        .collect();
    let witness = tried.iter().find(|(_, ok)| *ok).map(|&(m, _)| m);
    Ok(ExtensionPredicate {
        holds: witness.is_some(),
        witness,
        tried,
    })
}

/// Result of [`verdict`]: the report plus the ball when one was built.
#[derive(Debug, Clone)]
pub struct Decision {
    pub report: ObstructionReport,
    pub ball: Option<VerifiedBall>,
}

/// Runs verified conditions, the cone conditions, the splitting engine, the
/// skeleton engine and finally the construction; the first decisive stage
/// wins.
pub fn verdict(h: &[i64], opts: &EngineOptions) -> Result<Decision> {
    if h.len() < 3 {
        return Err(Error::Parameter("need d >= 2".into()));
    }
    let mut stages = Vec::new();
    let finish = |stages: Vec<StageRecord>, verdict, ball| {
        let decisive_stage = stages
            .iter()
            .find(|r: &&StageRecord| r.outcome == Outcome::Decisive)
            .map(|r| r.stage);
        Ok(Decision {
            report: ObstructionReport {
                h: h.to_vec(),
                verdict,
                decisive_stage,
                stages,
            },
            ball,
        })
    };

    let conditions = gconditions(h);
    if !conditions.verified.ok {
        stages.push(StageRecord {
            stage: Stage::VerifiedConditions,
            outcome: Outcome::Decisive,
            summary: conditions.verified.reasons.join("; "),
            certificate: Certificate::Conditions(conditions),
        });
        return finish(stages, Verdict::BlConditionsFail, None);
    }
    stages.push(StageRecord {
        stage: Stage::VerifiedConditions,
        outcome: Outcome::Pass,
        summary: "verified conditions hold".into(),
        certificate: Certificate::Message {
            text: "h is an M-vector, h_d = 0, h_{d-2} >= h_{d-1}, prefixes are M-vectors".into(),
        },
    });
    if !conditions.all_pass {
        let failed: Vec<usize> = conditions.failures().map(|c| c.k).collect();
        stages.push(StageRecord {
            stage: Stage::Gconditions,
            outcome: Outcome::Decisive,
            summary: format!("cone conditions fail for k in {failed:?}"),
            certificate: Certificate::Conditions(conditions),
        });
        return finish(stages, Verdict::BlConditionsFail, None);
    }
    stages.push(StageRecord {
        stage: Stage::Gconditions,
        outcome: Outcome::Pass,
        summary: "all cone conditions hold".into(),
        certificate: Certificate::Conditions(conditions),
    });

    for engine in [betti_split_verdict, skeleton_search] {
        let report = engine(h, opts);
        let v = report.verdict;
        stages.extend(report.stages);
        if v.is_impossible() {
            return finish(stages, v, None);
        }
    }

    if is_constructible_input(h) {
        match construct_verified(h) {
            Ok(ball) => {
                let summary = ConstructionSummary {
                    facets: ball.complex.facets().len(),
                    vertices: ball.complex.vertex_count(),
                    f_vector: ball.complex.f_vector().entries,
                    shelling_length: ball.certificate.ordered_facets.len(),
                    topology: ball.class.tag,
                };
                stages.push(StageRecord {
                    stage: Stage::Construction,
                    outcome: Outcome::Decisive,
                    summary: "shellable ball built and certified".into(),
                    certificate: Certificate::Construction(summary),
                });
                return finish(stages, Verdict::Constructible, Some(ball));
            }
            Err(e) => stages.push(StageRecord {
                stage: Stage::Construction,
                outcome: Outcome::Inconclusive,
                summary: format!("construction failed: {e}"),
                certificate: Certificate::Message {
                    text: e.to_string(),
                },
            }),
        }
    } else {
        let why = crate::construction::construction_conditions(h)
            .err()
            .unwrap_or_default();
        stages.push(StageRecord {
            stage: Stage::Construction,
            outcome: Outcome::Inconclusive,
            summary: format!("construction hypotheses fail: {why}"),
            certificate: Certificate::Message { text: why },
        });
    }
    finish(stages, Verdict::Unknown, None)
}

/// Deduplicated list of the h-vectors appearing in a split list.
pub fn split_components(splits: &[SplitCandidate]) -> BTreeSet<Vec<i64>> {
    splits
        .iter()
        .flat_map(|s| [s.left.clone(), s.right.clone()])
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    const EXAMPLE: [i64; 7] = [1, 4, 5, 7, 3, 2, 0];

    #[test]
    fn boundary_g_examples() {
        assert_eq!(
            boundary_g(&CountVector::h(&[1, 0, 0, 0])).unwrap().entries,
            vec![1, 0]
        );
        assert_eq!(
            boundary_g(&CountVector::h(&EXAMPLE)).unwrap().entries,
            vec![1, 2, 2, 0]
        );
        let g = boundary_g(&CountVector::h(&[1, 3, 5, 7, 3, 2, 0])).unwrap();
        assert_eq!(g.entries, vec![1, 1, 2, 0]);
        assert_eq!(is_m_vector(&g.entries).first_failure, Some(2));
        assert!(boundary_g(&CountVector::h(&[1, 2, 0, 1])).is_err());
    }

    #[test]
    fn cone_conditions_examples() {
        assert!(gconditions(&EXAMPLE).all_pass);
        let r = gconditions(&[1, 3, 5, 7, 3, 2, 0]);
        let first = r.failures().next().unwrap();
        assert_eq!((first.k, first.vector.clone()), (0, vec![1, 1, 2]));
        assert!(gconditions(&[1, 0, 0, 0, 0]).all_pass);
        let last = r.conditions.last().unwrap();
        assert_eq!(last.vector, vec![1, 3, 5, 7, 3, 2, 0]);
    }

    #[test]
    fn verified_examples() {
        assert!(!verified_conditions(&[1, 2, 0, 1]).ok);
        assert!(!verified_conditions(&[1, 1, 0, 2, 0, 0]).ok);
        // h_1 < h_2 for a 2-ball
        assert!(!verified_conditions(&[1, 2, 3, 0]).ok);
        assert!(verified_conditions(&[1, 2, 1, 0]).ok);
        assert!(verified_conditions(&EXAMPLE).ok);
    }

    #[test]
    fn peeva_examples() {
        let p = peeva_bounds(&EXAMPLE).unwrap();
        assert_eq!((p.lower, p.upper), (1, 1));
        assert_eq!(p.beta_previous, 0);
        let p = peeva_bounds(&[1, 0, 0, 0, 0]).unwrap();
        assert_eq!((p.lower, p.upper), (0, 0));
        assert!(peeva_bounds(&[1, 4, 6, 9, 4, 2, 0]).unwrap().lower >= 1);
    }

    #[test]
    fn split_examples() {
        assert!(enumerate_splits(&EXAMPLE, false).is_empty());
        let s = enumerate_splits(&[1, 2, 0, 0], false);
        assert!(s.contains(&SplitCandidate {
            left: vec![1, 1, 0, 0],
            right: vec![1, 0, 0, 0]
        }));
        let s = enumerate_splits(&[1, 1, 0, 0], false);
        assert_eq!(
            s,
            vec![SplitCandidate {
                left: vec![1, 0, 0, 0],
                right: vec![1, 0, 0, 0]
            }]
        );
    }

    #[test]
    fn betti_split_examples() {
        let o = EngineOptions::default();
        for h in [&EXAMPLE[..], &[1, 4, 6, 9, 4, 2, 0], &[1, 5, 6, 8, 4, 3, 0]] {
            assert_eq!(
                betti_split_verdict(h, &o).verdict,
                Verdict::ImpossibleBettiSplit,
                "{h:?}"
            );
        }
        assert_eq!(
            betti_split_verdict(&[1, 1, 0, 0], &o).verdict,
            Verdict::Unknown
        );
    }

    #[test]
    fn skeleton_examples() {
        let o = EngineOptions::default();
        let r = skeleton_certificate(&EXAMPLE, o.skeleton_cap);
        assert_eq!(r.outcome, SkeletonOutcome::Impossible);
        assert_eq!(r.absent_edges, 5);
        for g in r.graphs.iter().filter(|g| g.h3_prime >= 7) {
            assert!(g.min_degree <= 5);
        }
        let dec = r.decremented.unwrap();
        assert_eq!(dec.h, vec![1, 3, 5, 7, 3, 2, 0]);
        assert!(dec.verified.reasons.iter().any(|s| s.contains("[1, 1, 2]")));
        assert_eq!(
            skeleton_search(&[1, 0, 0, 0, 0], &o).verdict,
            Verdict::Unknown
        );
    }

    #[test]
    fn family_examples() {
        let h = |x, y, d| family_hvector(&FamilyParams::new(x, y, d).unwrap()).entries;
        assert_eq!(h(5, 2, 6), vec![1, 5, 10, 18, 8, 3, 0]);
        assert_eq!(h(5, 4, 6), vec![1, 5, 10, 18, 3, 1, 0]);
        assert_eq!(h(6, 2, 7), vec![1, 6, 15, 33, 33, 13, 4, 0]);
        let r = family_certificate(&FamilyParams::new(5, 2, 6).unwrap());
        assert_eq!(r.verdict, Verdict::ImpossibleFamilyCertificate);
        let Certificate::Family(c) = &r.stages[0].certificate else {
            panic!()
        };
        assert_eq!((c.budget, c.bound), (37, 38));
        assert!(FamilyParams::new(4, 2, 6).is_err());
    }

    #[test]
    fn extension_predicate_examples() {
        let r = extension_predicate(&[1, 1, 0, 0, 0, 0, 0], false).unwrap();
        assert!(r.holds);
        assert!(!extension_predicate(&EXAMPLE, false).unwrap().holds);
    }

    #[test]
    fn verdict_examples() {
        let o = EngineOptions::default();
        let v = |h: &[i64]| verdict(h, &o).unwrap().report.verdict;
        assert_eq!(v(&EXAMPLE), Verdict::ImpossibleBettiSplit);
        let d = verdict(&[1, 2, 2, 1, 0], &o).unwrap();
        assert_eq!(d.report.verdict, Verdict::Constructible);
        assert!(d.ball.is_some());
        assert_eq!(v(&[1, 2, 0, 1]), Verdict::BlConditionsFail);
    }
}
