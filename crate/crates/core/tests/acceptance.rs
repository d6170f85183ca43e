//! Acceptance criteria, one PASS/FAIL line each. Runs without the libtest
//! harness so the lines always reach stdout.

mod common;

use std::collections::{BTreeMap, BTreeSet};
use std::io::Write;
use std::time::{Duration, Instant};

use hvector::construction::{
    bl_h_vector, build_bl_ball, construct_verified, construction_conditions,
    predicted_bl_restriction, VerifiedBall,
};
use hvector::homology::{classify, hochster_beta_top, TopologyTag};
use hvector::monomial::{compressed_ideal, is_m_vector, pseudo_power, revlex_first, Monomial};
use hvector::obstruction::{
    enumerate_splits, family_certificate, gconditions, peeva_bounds, skeleton_certificate, verdict,
    Certificate, Disposition, EngineOptions, FamilyParams, SkeletonOutcome, Stage, Verdict,
};
use hvector::{glue, h_from_certificate, verify_shelling, GlueMap, GluePair, GlueTarget, Role};
use itertools::Itertools;
use rayon::prelude::*;

type Check = Result<String, String>;

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn within(elapsed: Duration, limit: Duration, what: &str) -> Result<(), String> {
    ensure(
        elapsed < limit,
        format!("{what} took {elapsed:.2?}, limit {limit:?}"),
    )
}

const EXAMPLE: [i64; 7] = [1, 4, 5, 7, 3, 2, 0];

fn criterion_1() -> Check {
    let start = Instant::now();
    let report = gconditions(&EXAMPLE);
    ensure(report.all_pass, "cone conditions fail")?;
    let p = peeva_bounds(&EXAMPLE).map_err(|e| e.to_string())?;
    ensure(
        (p.lower, p.upper, p.beta_top, p.beta_previous) == (1, 1, 1, 0),
        format!("peeva bounds {p:?}"),
    )?;
    let splits = enumerate_splits(&EXAMPLE, false);
    ensure(splits.is_empty(), format!("{} splits", splits.len()))?;
    let v = verdict(&EXAMPLE, &EngineOptions::default()).map_err(|e| e.to_string())?;
    ensure(
        v.report.verdict == Verdict::ImpossibleBettiSplit,
        format!("verdict {:?}", v.report.verdict),
    )?;
    within(start.elapsed(), Duration::from_secs(1), "criterion")?;
    Ok(format!(
        "bounds ({}, {}), beta_(n,n+1)={} beta_(n-1,n+1)={}, no splits",
        p.lower, p.upper, p.beta_top, p.beta_previous
    ))
}

fn criterion_2() -> Check {
    let mut notes = Vec::new();
    for h in [[1, 4, 6, 9, 4, 2, 0], [1, 5, 6, 8, 4, 3, 0]] {
        let start = Instant::now();
        let v = verdict(&h, &EngineOptions::default()).map_err(|e| e.to_string())?;
        let elapsed = start.elapsed();
        ensure(
            v.report.verdict == Verdict::ImpossibleBettiSplit
                && v.report.decisive_stage == Some(Stage::BettiSplit),
            format!("{h:?}: verdict {:?}", v.report.verdict),
        )?;
        within(elapsed, Duration::from_secs(1), &format!("{h:?}"))?;
        let p = peeva_bounds(&h).map_err(|e| e.to_string())?;
        notes.push(format!("{h:?} bounds ({}, {})", p.lower, p.upper));
    }
    Ok(notes.join("; "))
}

fn criterion_3() -> Check {
    let start = Instant::now();
    let cert = skeleton_certificate(&EXAMPLE, 7);
    ensure(
        cert.absent_edges == 5,
        format!("{} absent edges", cert.absent_edges),
    )?;
    ensure(
        cert.graphs.len() == 26,
        format!("{} graphs enumerated, expected 26", cert.graphs.len()),
    )?;
    let reaching: Vec<_> = cert
        .graphs
        .iter()
        .filter(|g| g.h3_prime >= EXAMPLE[3])
        .collect();
    ensure(!reaching.is_empty(), "no graph reaches h_3")?;
    ensure(
        reaching.iter().all(|g| g.min_degree <= 5),
        "a graph reaching h_3 has minimum degree above 5",
    )?;
    ensure(
        cert.graphs
            .iter()
            .all(|g| g.disposition != Disposition::Unobstructed),
        "unobstructed graph present",
    )?;
    let dec = cert.decremented.as_ref().ok_or("no facet-deletion step")?;
    ensure(
        dec.h == vec![1, 3, 5, 7, 3, 2, 0],
        format!("decremented {:?}", dec.h),
    )?;
    ensure(
        !dec.verified.ok && dec.verified.reasons.iter().any(|r| r.contains("[1, 1, 2]")),
        format!("decremented reasons {:?}", dec.verified.reasons),
    )?;
    ensure(
        cert.outcome == SkeletonOutcome::Impossible,
        "outcome not impossible",
    )?;
    within(start.elapsed(), Duration::from_secs(10), "criterion")?;
    Ok(format!(
        "26 graphs, {} reach h_3' >= 7, all with a vertex of degree <= 5; (1,3,5,7,3,2,0) fails via (1,1,2)",
        reaching.len()
    ))
}

fn criterion_4() -> Check {
    let start = Instant::now();
    let mut tuples = 0;
    let mut min_excess = i64::MAX;
    for x in 5..=8u32 {
        for y in 2..x {
            for d in [6usize, 7] {
                let p = FamilyParams::new(x, y, d).map_err(|e| e.to_string())?;
                let r = family_certificate(&p);
                let Certificate::Family(c) = &r.stages[0].certificate else {
                    return Err("missing family certificate".into());
                };
                let xi = x as i64;
                let min_term = (2..xi).map(|k| (k - 1) * (xi - k)).min().unwrap();
                let expected_budget = (xi * xi + (2 * d as i64 - 3) * xi) / 2 + 2;
                ensure(c.gconditions_pass, format!("{p:?}: cone conditions fail"))?;
                ensure(
                    c.budget == expected_budget,
                    format!("{p:?}: budget {}", c.budget),
                )?;
                ensure(
                    min_term >= 3 && c.excess >= 1,
                    format!("{p:?}: excess {}", c.excess),
                )?;
                ensure(
                    r.verdict == Verdict::ImpossibleFamilyCertificate,
                    format!("{p:?}: verdict {:?}", r.verdict),
                )?;
                min_excess = min_excess.min(c.excess);
                tuples += 1;
            }
        }
    }
    within(start.elapsed(), Duration::from_secs(5), "criterion")?;
    Ok(format!(
        "{tuples} tuples impossible, minimum excess {min_excess}"
    ))
}

fn check_ball(h: &[i64], ball: &VerifiedBall) -> Result<(), String> {
    let replay = verify_shelling(&ball.certificate.ordered_facets).map_err(|e| e.to_string())?;
    ensure(
        replay.restrictions == ball.certificate.restrictions,
        format!("{h:?}: predicted restrictions differ from the checker"),
    )?;
    let from_cert = h_from_certificate(&replay).entries;
    let from_f = ball
        .complex
        .f_vector()
        .convert(Role::H)
        .map_err(|e| e.to_string())?
        .entries;
    ensure(
        from_cert == h && from_f == h,
        format!("{h:?}: certificate {from_cert:?}, faces {from_f:?}"),
    )?;
    let class = &ball.class;
    ensure(
        class.tag == TopologyTag::HomologyBall,
        format!("{h:?}: {:?}", class.tag),
    )?;
    let boundary = class
        .boundary
        .as_ref()
        .ok_or(format!("{h:?}: no boundary"))?;
    let btag = classify(boundary).tag;
    ensure(
        btag == TopologyTag::HomologySphere,
        format!("{h:?}: boundary {btag:?}"),
    )?;
    Ok(())
}

fn criterion_5(balls: &[(Vec<i64>, VerifiedBall)], vectors: usize, elapsed: Duration) -> Check {
    ensure(
        balls.len() == vectors,
        format!("{} of {vectors} built", balls.len()),
    )?;
    let failures: Vec<String> = balls
        .par_iter()
        .filter_map(|(h, b)| check_ball(h, b).err())
        .collect();
    ensure(failures.is_empty(), failures.iter().take(3).join("; "))?;
    within(elapsed, Duration::from_secs(300), "sweep")?;
    let both = balls
        .iter()
        .map(|(h, _)| h.len() % 2)
        .collect::<BTreeSet<_>>()
        .len()
        == 2;
    ensure(both, "sweep covers only one parity")?;
    Ok(format!(
        "{} vectors with d <= 7, entries <= 4, all certified",
        balls.len()
    ))
}

fn criterion_6() -> Check {
    let mut seqs = Vec::new();
    for r in 1..=4usize {
        for tail in (0..r).map(|_| 1..=12i64).multi_cartesian_product() {
            let mut v = vec![1];
            v.extend(tail);
            if v.iter().sum::<i64>() <= 60 && is_m_vector(&v).ok {
                seqs.push(v);
            }
        }
    }
    seqs.sort();
    let step = seqs.len() / 50;
    let picked: Vec<&Vec<i64>> = seqs.iter().step_by(step).take(50).collect();
    ensure(picked.len() == 50, "fewer than 50 ideals")?;
    for (k, seq) in picked.iter().enumerate() {
        let ideal = compressed_ideal(seq).map_err(|e| e.to_string())?;
        let top = ideal.max_degree().max(1);
        let d = if k % 2 == 0 { 2 * top } else { 2 * top - 1 };
        let bl = build_bl_ball(&ideal, d, None).map_err(|e| format!("{seq:?}: {e}"))?;
        for (m, r) in bl.order.iter().zip(&bl.certificate.restrictions) {
            ensure(
                r.len() == m.degree() as usize && *r == predicted_bl_restriction(m, d),
                format!("{seq:?}: restriction {r} for {m}"),
            )?;
        }
        let h = bl.complex.h_vector().entries;
        ensure(
            h == bl_h_vector(&ideal, d).entries,
            format!("{seq:?}: h(B(I)) = {h:?}"),
        )?;
    }
    Ok(
        "50 compressed ideals: restriction sizes equal degrees, h(B(I)) equals degree sequence"
            .into(),
    )
}

fn criterion_7(balls: &[(Vec<i64>, VerifiedBall)]) -> Check {
    let results: Vec<Result<bool, String>> = balls
        .par_iter()
        .map(|(h, b)| {
            let beta = hochster_beta_top(&b.complex);
            let p = peeva_bounds(h).map_err(|e| format!("{h:?}: {e}"))?;
            ensure(
                p.lower <= beta && beta <= p.upper,
                format!("{h:?}: beta {beta} outside [{}, {}]", p.lower, p.upper),
            )?;
            let split = common::has_disconnecting_ridge(&b.complex);
            ensure(
                (beta > 0) == split,
                format!("{h:?}: beta {beta} but disconnecting ridge {split}"),
            )?;
            Ok(beta > 0)
        })
        .collect();
    let mut positive = 0;
    for r in results {
        if r? {
            positive += 1;
        }
    }
    Ok(format!(
        "{} balls within bounds, {positive} with a disconnecting ridge",
        balls.len()
    ))
}

fn criterion_8(balls: &[(Vec<i64>, VerifiedBall)]) -> Check {
    let mut by_d: BTreeMap<usize, Vec<&(Vec<i64>, VerifiedBall)>> = BTreeMap::new();
    for entry in balls {
        by_d.entry(entry.0.len()).or_default().push(entry);
    }
    let mut pairs = Vec::new();
    'outer: for k in 0.. {
        let mut progressed = false;
        for group in by_d.values().filter(|g| g.len() >= 2) {
            if 2 * k + 1 < group.len() {
                progressed = true;
                let a = group[(7 * k) % group.len()];
                let b = group[(7 * k + 3) % group.len()];
                pairs.push((a, b));
                if pairs.len() == 20 {
                    break 'outer;
                }
            }
        }
        if !progressed {
            break;
        }
    }
    ensure(pairs.len() == 20, format!("only {} pairs", pairs.len()))?;
    for ((ha, a), (hb, b)) in pairs.iter().map(|(a, b)| ((&a.0, &a.1), (&b.0, &b.1))) {
        let left = a.complex.boundary_ridges()[0].clone();
        let right = b.complex.boundary_ridges()[0].clone();
        let map = GlueMap {
            pairs: vec![GluePair::in_order(left, right)],
        };
        let glued = glue(&a.complex, GlueTarget::Other(&b.complex), &map)
            .map_err(|e| format!("{ha:?} + {hb:?}: {e}"))?;
        let mut want: Vec<i64> = ha.iter().zip(hb.iter()).map(|(x, y)| x + y).collect();
        want[0] = 1;
        want[1] += 1;
        let got = glued.h_vector().entries;
        ensure(
            got == want,
            format!("{ha:?} + {hb:?}: got {got:?}, want {want:?}"),
        )?;
        ensure(
            classify(&glued).tag == TopologyTag::HomologyBall,
            format!("{ha:?} + {hb:?}: glued complex is not a ball"),
        )?;
    }
    let stretch = match construction_conditions(&[1, 3, 6, 10, 5, 3, 0]) {
        Ok(()) => "stretch component (1,3,6,10,5,3,0) accepted".to_string(),
        Err(why) => format!("stretch skipped: (1,3,6,10,5,3,0) rejected ({why})"),
    };
    Ok(format!(
        "20 glued pairs with h = h(a)+h(b), h_0 = 1, h_1 + 1; {stretch}"
    ))
}

fn criterion_9() -> Check {
    let start = Instant::now();
    let mut candidates = Vec::new();
    for d in [4usize, 5] {
        for tail in (0..d).map(|_| 0..=5i64).multi_cartesian_product() {
            let mut h = vec![1];
            h.extend(tail);
            if gconditions(&h).all_pass {
                candidates.push(h);
            }
        }
    }
    let failures: Vec<String> = candidates
        .par_iter()
        .filter_map(|h| {
            if let Err(why) = construction_conditions(h) {
                let simplex = h[1..].iter().all(|&x| x == 0);
                if !simplex {
                    return Some(format!("{h:?}: {why}"));
                }
            }
            construct_verified(h).err().map(|e| format!("{h:?}: {e}"))
        })
        .collect();
    ensure(
        failures.is_empty(),
        format!(
            "{} failures: {}",
            failures.len(),
            failures.iter().take(3).join("; ")
        ),
    )?;
    within(start.elapsed(), Duration::from_secs(300), "criterion")?;
    Ok(format!(
        "{} vectors pass the cone conditions; all meet the hypotheses (simplex special-cased) and build",
        candidates.len()
    ))
}

fn growth(set: &BTreeSet<Monomial>, i: u32) -> i64 {
    let vars = set.iter().map(Monomial::max_index).max().unwrap_or(0);
    revlex_first(vars, i + 1, usize::MAX)
        .into_iter()
        .filter(|m| m.divisors_by_variable().iter().all(|p| set.contains(p)))
        .count() as i64
}

fn criterion_10() -> Check {
    for l in 1..=30i64 {
        for i in 1..=5u32 {
            let set: BTreeSet<Monomial> =
                revlex_first(l as u32, i, l as usize).into_iter().collect();
            let g = growth(&set, i);
            ensure(
                g == pseudo_power(l, i as i64),
                format!(
                    "l={l} i={i}: oracle {g}, pseudo-power {}",
                    pseudo_power(l, i as i64)
                ),
            )?;
        }
    }
    let mut m_vectors = 0;
    for r in 1..=5usize {
        for tail in (0..r).map(|_| 0..=6i64).multi_cartesian_product() {
            let mut v = vec![1];
            v.extend(tail);
            if !is_m_vector(&v).ok {
                continue;
            }
            m_vectors += 1;
            let b: Vec<i64> = v
                .iter()
                .scan(0, |s, &x| {
                    *s += x;
                    Some(*s)
                })
                .collect();
            for k in 1..r {
                ensure(
                    pseudo_power(b[k], k as i64) >= b[k + 1],
                    format!("{v:?}: partial sums fail at k={k}"),
                )?;
            }
        }
    }
    Ok(format!(
        "150 pseudo-powers match; partial-sum bound holds on {m_vectors} M-vectors"
    ))
}

fn main() {
    let mut out = std::io::stdout().lock();
    let mut failed = 0;
    let mut report = |n: usize, elapsed: Duration, result: Check| {
        let line = match result {
            Ok(detail) => format!("criterion {n:>2}: PASS ({elapsed:.2?}) {detail}"),
            Err(why) => {
                failed += 1;
                format!("criterion {n:>2}: FAIL ({elapsed:.2?}) {why}")
            }
        };
        writeln!(out, "{line}").unwrap();
        out.flush().unwrap();
    };

    for (n, f) in [
        (1, criterion_1 as fn() -> Check),
        (2, criterion_2),
        (3, criterion_3),
        (4, criterion_4),
    ] {
        let t = Instant::now();
        let r = f();
        report(n, t.elapsed(), r);
    }

    let t = Instant::now();
    let vectors = common::constructible_vectors(7, 4);
    let balls: Vec<(Vec<i64>, VerifiedBall)> = vectors
        .par_iter()
        .filter_map(|h| construct_verified(h).ok().map(|b| (h.clone(), b)))
        .collect();
    let build_time = t.elapsed();
    let r = criterion_5(&balls, vectors.len(), build_time);
    report(5, t.elapsed(), r);

    let t = Instant::now();
    let r = criterion_6();
    report(6, t.elapsed(), r);
    let t = Instant::now();
    let r = criterion_7(&balls);
    report(7, t.elapsed(), r);
    let t = Instant::now();
    let r = criterion_8(&balls);
    report(8, t.elapsed(), r);
    let t = Instant::now();
    let r = criterion_9();
    report(9, t.elapsed(), r);
    let t = Instant::now();
    let r = criterion_10();
    report(10, t.elapsed(), r);

    let summary = if failed == 0 {
        "acceptance: all 10 criteria pass".to_string()
    } else {
        format!("acceptance: {failed} of 10 criteria fail")
    };
    println!("{summary}");
    if failed > 0 {
        std::process::exit(1);
    }
}
