//! Monomials, the three monomial orders, Macaulay pseudo-powers, compressed
//! and lex ideals, and Eliahou–Kervaire Betti numbers.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::binomial;

/// A monomial as a sparse map from variable index (≥ 1) to positive exponent.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
pub struct Monomial(BTreeMap<u32, u32>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(BTreeMap::new())
    }

    pub fn var(i: u32) -> Self {
        Self::from_indices(&[i])
    }

    /// Product of the listed variables, with repetition.
    pub fn from_indices(indices: &[u32]) -> Self {
        let mut m = BTreeMap::new();
        for &i in indices {
            assert!(i >= 1, "variable indices start at 1");
            *m.entry(i).or_insert(0) += 1;
        }
        Monomial(m)
    }

    /// From a dense exponent vector; entry k is the exponent of variable k+1.
    pub fn from_exponents(exps: &[u32]) -> Self {
        Monomial(
            exps.iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(k, &e)| (k as u32 + 1, e))
                .collect(),
        )
    }

    pub fn degree(&self) -> u32 {
        self.0.values().sum()
    }

    pub fn exponent(&self, i: u32) -> u32 {
        self.0.get(&i).copied().unwrap_or(0)
    }

    /// Largest variable index present (0 for the monomial 1).
    pub fn max_index(&self) -> u32 {
        self.0.keys().next_back().copied().unwrap_or(0)
    }

    /// Variable indices with repetition in increasing order.
    pub fn indices(&self) -> Vec<u32> {
        self.0
            .iter()
            .flat_map(|(&i, &e)| std::iter::repeat_n(i, e as usize))
            .collect()
    }

    /// Extended representation of length `c`: indices padded on the left with 0.
    pub fn extended(&self, c: usize) -> Vec<u32> {
        let idx = self.indices();
        assert!(idx.len() <= c, "degree exceeds the extended length");
        let mut e = vec![0; c - idx.len()];
        e.extend(idx);
        e
    }

    /// Inverse of [`extended`](Self::extended); zeros stand for the empty variable.
    pub fn from_extended(e: &[u32]) -> Self {
        Self::from_indices(&e.iter().copied().filter(|&x| x > 0).collect::<Vec<_>>())
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut m = self.0.clone();
        for (&i, &e) in &other.0 {
            *m.entry(i).or_insert(0) += e;
        }
        Monomial(m)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().all(|(i, &e)| other.exponent(*i) >= e)
    }

    /// Monomials obtained by dividing out one variable.
    pub fn divisors_by_variable(&self) -> Vec<Monomial> {
        self.0
            .keys()
            .map(|&i| {
                let mut m = self.0.clone();
                let e = m.get_mut(&i).unwrap();
                *e -= 1;
                if *e == 0 {
                    m.remove(&i);
                }
                Monomial(m)
            })
            .collect()
    }

    /// Every index raised by `k`.
    pub fn shift(&self, k: u32) -> Monomial {
        Monomial(self.0.iter().map(|(&i, &e)| (i + k, e)).collect())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|(i, e)| {
                if *e == 1 {
                    format!("Y{i}")
                } else {
                    format!("Y{i}^{e}")
                }
            })
            .collect();
        f.write_str(&parts.join("*"))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Reverse-lexicographic comparison on exponent vectors: at the largest
/// index where the exponents differ, the monomial with the smaller exponent
/// is smaller. Defined for all pairs regardless of degree.
pub fn revlex_cmp(a: &Monomial, b: &Monomial) -> Ordering {
    let top = a.max_index().max(b.max_index());
    for k in (1..=top).rev() {
        match a.exponent(k).cmp(&b.exponent(k)) {
            Ordering::Equal => continue,
            o => return o,
        }
    }
    Ordering::Equal
}

/// Lexicographic comparison: at the first index where the exponents differ,
/// the monomial with the larger exponent is smaller (so X1^2 < X1 X2).
pub fn lex_cmp(a: &Monomial, b: &Monomial) -> Ordering {
    let top = a.max_index().max(b.max_index());
    for k in 1..=top {
        match a.exponent(k).cmp(&b.exponent(k)) {
            Ordering::Equal => continue,
            o => return o.reverse(),
        }
    }
    Ordering::Equal
}

/// Degree-then-reverse-lexicographic order, the fixed linearization of the
/// partial order used throughout the construction.
pub fn graded_revlex_cmp(a: &Monomial, b: &Monomial) -> Ordering {
    a.degree().cmp(&b.degree()).then_with(|| revlex_cmp(a, b))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MonomialOrder {
    Lex,
    Revlex,
    /// Componentwise comparison of extended representations of length `c`.
    Partial {
        c: usize,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Comparison {
    Lt,
    Gt,
    Eq,
    Incomparable,
}

impl From<Ordering> for Comparison {
    fn from(o: Ordering) -> Self {
        match o {
            Ordering::Less => Comparison::Lt,
            Ordering::Greater => Comparison::Gt,
            Ordering::Equal => Comparison::Eq,
        }
    }
}

pub fn compare(a: &Monomial, b: &Monomial, order: MonomialOrder) -> Result<Comparison> {
    match order {
        MonomialOrder::Lex | MonomialOrder::Revlex => {
            if a.degree() != b.degree() {
                return Err(Error::DegreeMismatch(a.degree(), b.degree()));
            }
            Ok(if order == MonomialOrder::Lex {
                lex_cmp(a, b)
            } else {
                revlex_cmp(a, b)
            }
            .into())
        }
        MonomialOrder::Partial { c } => {
            if a.degree() as usize > c || b.degree() as usize > c {
                return Err(Error::Parameter(format!("degree exceeds c = {c}")));
            }
            Ok(partial_cmp_extended(&a.extended(c), &b.extended(c)))
        }
    }
}

fn partial_cmp_extended(a: &[u32], b: &[u32]) -> Comparison {
    let le = a.iter().zip(b).all(|(x, y)| x <= y);
    let ge = a.iter().zip(b).all(|(x, y)| x >= y);
    match (le, ge) {
        (true, true) => Comparison::Eq,
        (true, false) => Comparison::Lt,
        (false, true) => Comparison::Gt,
        (false, false) => Comparison::Incomparable,
    }
}

/// Immediate predecessors of `m` in the partial order on extended
/// representations of length `c`: lower one entry by one, keeping the
/// sequence nondecreasing.
pub fn partial_predecessors(m: &Monomial, c: usize) -> Vec<Monomial> {
    let e = m.extended(c);
    (0..c)
        .filter(|&k| e[k] > 0 && (k == 0 || e[k] > e[k - 1]))
        .map(|k| {
            let mut f = e.clone();
            f[k] -= 1;
            Monomial::from_extended(&f)
        })
        .collect()
}

/// Whether a finite monomial set is closed downward in the partial order
/// with extended length `c`. Returns the first offending monomial.
pub fn check_partial_initial_segment<'a, I>(set: I, c: usize) -> std::result::Result<(), Monomial>
where
    I: IntoIterator<Item = &'a Monomial>,
{
    let all: BTreeSet<&Monomial> = set.into_iter().collect();
    for m in &all {
        for p in partial_predecessors(m, c) {
            if !all.contains(&p) {
                return Err((*m).clone());
            }
        }
    }
    Ok(())
}

/// The i-canonical representation l = C(n_i, i) + C(n_{i-1}, i-1) + ...,
/// returned as (n_k, k) pairs with decreasing k.
pub fn canonical_rep(l: i64, i: i64) -> Vec<(i64, i64)> {
    let mut rep = Vec::new();
    let (mut l, mut i) = (l, i);
    while l > 0 && i > 0 {
        let mut n = i;
        while binomial(n + 1, i) <= l {
            n += 1;
        }
        rep.push((n, i));
        l -= binomial(n, i);
        i -= 1;
    }
    rep
}

/// l^{<i>}: shift every binomial of the canonical representation up by one.
pub fn pseudo_power(l: i64, i: i64) -> i64 {
    if l <= 0 {
        return 0;
    }
    canonical_rep(l, i)
        .into_iter()
        .map(|(n, k)| binomial(n + 1, k + 1))
        .sum()
}

/// Result of the M-vector test.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct MVectorCheck {
    pub ok: bool,
    pub first_failure: Option<usize>,
}

impl MVectorCheck {
    fn fail(index: usize) -> Self {
        MVectorCheck {
            ok: false,
            first_failure: Some(index),
        }
    }
}

/// v_0 = 1, v_i ≥ 0, and v_{i+1} ≤ v_i^{<i>}.
pub fn is_m_vector(v: &[i64]) -> MVectorCheck {
    if v.first() != Some(&1) {
        return MVectorCheck::fail(0);
    }
    for (i, &x) in v.iter().enumerate().skip(1) {
        if x < 0 {
            return MVectorCheck::fail(i);
        }
        // v_1 may be any nonnegative number; later entries are bounded
        if i >= 2 && x > pseudo_power(v[i - 1], i as i64 - 1) {
            return MVectorCheck::fail(i);
        }
    }
    MVectorCheck {
        ok: true,
        first_failure: None,
    }
}

/// Degree-`deg` monomials in variables 1..=n in increasing reverse-lex order,
/// stopping after `limit` of them.
pub fn revlex_first(n: u32, deg: u32, limit: usize) -> Vec<Monomial> {
    fn rec(n: u32, deg: u32, limit: usize, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if out.len() >= limit {
            return;
        }
        if n == 0 {
            if deg == 0 {
                out.push(prefix.clone());
            }
            return;
        }
        if n == 1 {
            prefix.push(deg);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        // the exponent of the top variable is compared first
        for a in 0..=deg {
            prefix.push(a);
            rec(n - 1, deg - a, limit, prefix, out);
            prefix.pop();
            if out.len() >= limit {
                return;
            }
        }
    }
    let mut out = Vec::new();
    rec(n, deg, limit, &mut Vec::new(), &mut out);
    out.into_iter()
        .map(|rev| {
            let exps: Vec<u32> = rev.into_iter().rev().collect();
            Monomial::from_exponents(&exps)
        })
        .collect()
}

/// Degree-`deg` monomials in variables 1..=n in lex order (X1^deg first),
/// stopping after `limit` of them.
pub fn lex_first(n: u32, deg: u32, limit: usize) -> Vec<Monomial> {
    fn rec(
        var: u32,
        n: u32,
        deg: u32,
        limit: usize,
        prefix: &mut Vec<u32>,
        out: &mut Vec<Vec<u32>>,
    ) {
        if out.len() >= limit {
            return;
        }
        if var == n {
            prefix.push(deg);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for a in (0..=deg).rev() {
            prefix.push(a);
            rec(var + 1, n, deg - a, limit, prefix, out);
            prefix.pop();
            if out.len() >= limit {
                return;
            }
        }
    }
    if n == 0 {
        return if deg == 0 && limit > 0 {
            vec![Monomial::one()]
        } else {
            Vec::new()
        };
    }
    let mut out = Vec::new();
    rec(1, n, deg, limit, &mut Vec::new(), &mut out);
    out.into_iter()
        .map(|e| Monomial::from_exponents(&e))
        .collect()
}

/// A divisor-closed monomial set, stored per degree in graded reverse-lex order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrderIdeal {
    by_degree: Vec<Vec<Monomial>>,
}

impl OrderIdeal {
    /// Builds and validates an order ideal.
    pub fn new<I: IntoIterator<Item = Monomial>>(monomials: I) -> Result<Self> {
        let set: BTreeSet<Monomial> = monomials.into_iter().collect();
        if !set.contains(&Monomial::one()) {
            return Err(Error::Parameter("order ideal must contain 1".into()));
        }
        for m in &set {
            if let Some(p) = m
                .divisors_by_variable()
                .into_iter()
                .find(|p| !set.contains(p))
            {
                return Err(Error::Parameter(format!(
                    "{m} is present but its divisor {p} is not"
                )));
            }
        }
        let top = set.iter().map(Monomial::degree).max().unwrap_or(0) as usize;
        let mut by_degree = vec![Vec::new(); top + 1];
        for m in set {
            by_degree[m.degree() as usize].push(m);
        }
        for level in &mut by_degree {
            level.sort_by(revlex_cmp);
        }
        Ok(OrderIdeal { by_degree })
    }

    pub fn degree_sequence(&self) -> Vec<i64> {
        self.by_degree.iter().map(|l| l.len() as i64).collect()
    }

    pub fn degree(&self, j: usize) -> &[Monomial] {
        self.by_degree.get(j).map(Vec::as_slice).unwrap_or(&[])
    }

    /// All monomials, degree by degree, reverse-lex within a degree.
    pub fn monomials(&self) -> impl Iterator<Item = &Monomial> {
        self.by_degree.iter().flatten()
    }

    pub fn len(&self) -> usize {
        self.by_degree.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.degree(m.degree() as usize)
            .binary_search_by(|x| revlex_cmp(x, m))
            .is_ok()
    }

    pub fn max_degree(&self) -> usize {
        self.by_degree.len() - 1
    }
}

/// The compressed order ideal: in each degree j the first seq_j monomials of
/// degree j in reverse-lex order over seq_1 variables.
pub fn compressed_ideal(seq: &[i64]) -> Result<OrderIdeal> {
    let check = is_m_vector(seq);
    if !check.ok {
        return Err(Error::NotAnMVector {
            index: check.first_failure.unwrap_or(0),
        });
    }
    let n = seq.get(1).copied().unwrap_or(0) as u32;
    let mut all = vec![Monomial::one()];
    for (j, &count) in seq.iter().enumerate().skip(1) {
        let level = revlex_first(n, j as u32, count as usize);
        if level.len() != count as usize {
            return Err(Error::NotAnMVector { index: j });
        }
        all.extend(level);
    }
    OrderIdeal::new(all)
}

/// A monomial ideal given by minimal generators over `nvars` variables.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LexIdealBasis {
    pub nvars: u32,
    pub generators: Vec<Monomial>,
}

impl LexIdealBasis {
    pub fn generators_of_degree(&self, j: u32) -> impl Iterator<Item = &Monomial> {
        self.generators.iter().filter(move |g| g.degree() == j)
    }
}

/// The lex ideal L in `n` variables whose quotient has Hilbert function `h`
/// in degrees 0..len(h). Degree i of L is the lex-first dim - h_i monomials.
pub fn lex_ideal_from_hilbert(h: &[i64], n: u32) -> Result<LexIdealBasis> {
    let check = is_m_vector(h);
    if !check.ok {
        return Err(Error::NotAnMVector {
            index: check.first_failure.unwrap_or(0),
        });
    }
    if h.len() > 1 && h[1] > n as i64 {
        return Err(Error::Parameter(format!(
            "h_1 = {} exceeds {n} variables",
            h[1]
        )));
    }
    let mut generators = Vec::new();
    let mut previous: BTreeSet<Monomial> = BTreeSet::new();
    for (i, &hi) in h.iter().enumerate().skip(1) {
        let dim = binomial(n as i64 + i as i64 - 1, i as i64);
        if hi > dim {
            return Err(Error::NotRealizable { degree: i });
        }
        let span: BTreeSet<Monomial> = lex_first(n, i as u32, (dim - hi) as usize)
            .into_iter()
            .collect();
        let multiples: BTreeSet<Monomial> = previous
            .iter()
            .flat_map(|m| (1..=n).map(move |v| m.mul(&Monomial::var(v))))
            .collect();
        if !multiples.is_subset(&span) {
            return Err(Error::NotRealizable { degree: i });
        }
        let mut fresh: Vec<Monomial> = span.difference(&multiples).cloned().collect();
        fresh.sort_by(lex_cmp);
        generators.extend(fresh);
        previous = span;
    }
    Ok(LexIdealBasis {
        nvars: n,
        generators,
    })
}

/// Graded Betti number β_{i,j} of R/L for a lex (hence stable) ideal L:
/// β_{0,0} = 1 and β_{i,j} = Σ C(m(u) - 1, i - 1) over generators u of
/// degree j - i + 1.
pub fn ek_graded_betti(l: &LexIdealBasis, i: u32, j: u32) -> u64 {
    if i == 0 {
        return u64::from(j == 0);
    }
    if j + 1 < i {
        return 0;
    }
    let deg = j + 1 - i;
    l.generators_of_degree(deg)
        .map(|u| binomial(u.max_index() as i64 - 1, i as i64 - 1) as u64)
        .sum()
}
