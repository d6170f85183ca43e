mod common;

use std::cmp::Ordering;

use hvector::construction::{
    appendix_shelling, build_bl_ball, complement_construction, construct_verified,
    facet_of_monomial, monomial_of_facet, predicted_bl_restriction, select_type_sets, BlMode,
};
use hvector::homology::{hochster_beta_top, hochster_beta_top_full_sum};
use hvector::monomial::{
    check_partial_initial_segment, compare, compressed_ideal, graded_revlex_cmp, is_m_vector,
    revlex_cmp, revlex_first, Comparison, Monomial, MonomialOrder,
};
use hvector::obstruction::boundary_g;
use hvector::{verify_shelling, CountVector, Role};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn facet_correspondence_round_trips(
        d in 2usize..=9,
        prime in any::<bool>(),
        raw in prop::collection::vec(1u32..=8, 0..=5),
    ) {
        let mode = if prime { BlMode::AlphaPrime } else { BlMode::Alpha };
        let c = if prime { (d - 1) / 2 } else { d.div_ceil(2) };
        let m = Monomial::from_indices(&raw[..raw.len().min(c)]);
        let f = facet_of_monomial(&m, mode, d, None).unwrap();
        let size = if prime { d } else { d + 1 };
        prop_assert_eq!(f.len(), size);
        prop_assert_eq!(monomial_of_facet(&f, mode, d).unwrap(), m);
    }
}

#[test]
fn partial_order_refines_revlex() {
    let all: Vec<Monomial> = (0..=3)
        .flat_map(|j| revlex_first(12, j, usize::MAX))
        .collect();
    let order = MonomialOrder::Partial { c: 3 };
    let mut relations = 0;
    for a in &all {
        for b in &all {
            if compare(a, b, order).unwrap() == Comparison::Lt {
                relations += 1;
                assert_eq!(graded_revlex_cmp(a, b), Ordering::Less, "{a} < {b}");
                assert_eq!(revlex_cmp(a, b), Ordering::Less, "{a} < {b}");
            }
        }
    }
    assert!(relations > 1000);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn bl_restrictions_follow_the_monomials(raw in prop::collection::vec(0i64..6, 1..4), extra in 0usize..3) {
        let mut seq = vec![1];
        seq.extend(raw);
        prop_assume!(is_m_vector(&seq).ok);
        let ideal = compressed_ideal(&seq).unwrap();
        let d = 2 * ideal.max_degree().max(1) + extra;
        let ball = build_bl_ball(&ideal, d, None).unwrap();
        for (m, r) in ball.order.iter().zip(&ball.certificate.restrictions) {
            prop_assert_eq!(r, &predicted_bl_restriction(m, d), "{}", m);
            prop_assert_eq!(r.len(), m.degree() as usize);
        }
        let mut want = seq.clone();
        want.resize(d + 2, 0);
        prop_assert_eq!(ball.complex.h_vector().entries, want);
    }

}

fn h_of(c: &hvector::SimplicialComplex, d: usize) -> Vec<i64> {
    let mut f = c.f_vector().entries;
    f.resize(d + 1, 0);
    CountVector::f(&f).convert(Role::H).unwrap().entries
}

#[test]
fn complement_obeys_sub_ball_law() {
    for h in common::constructible_vectors(7, 3) {
        let d = h.len() - 1;
        let cc = complement_construction(&h).unwrap();
        let sphere = h_of(&cc.sphere, d);
        let sub = cc.sub_ball_certificate.h_vector().entries;
        for i in 0..=d {
            assert_eq!(h[i], sphere[i] - sub[d - i], "{h:?} at {i}");
        }
    }
}

#[test]
fn bl_sphere_h_is_partial_sums_of_degree_sequence() {
    for h in common::constructible_vectors(7, 3) {
        let d = h.len() - 1;
        let cc = complement_construction(&h).unwrap();
        let mut g = cc.selection.ideal.degree_sequence();
        g.resize(d + 1, 0);
        let sphere = h_of(&cc.sphere, d);
        for (i, &s) in sphere.iter().enumerate() {
            let want: i64 = g[..=i.min(d - i)].iter().sum();
            assert_eq!(s, want, "{h:?} at {i}");
        }
    }
}

#[test]
fn selections_are_initial_segments_of_the_right_size() {
    for h in common::constructible_vectors(8, 3) {
        let s = select_type_sets(&h).unwrap();
        let p = (s.d - 1) / 2;
        assert!(
            check_partial_initial_segment(s.selected(), p).is_ok(),
            "{h:?}"
        );
        for (level, &want) in s.chosen.iter().zip(&s.targets) {
            assert_eq!(level.len() as i64, want, "{h:?}");
        }
        for pool in &s.pools {
            assert!(pool
                .windows(2)
                .all(|w| revlex_cmp(&w[0].0, &w[1].0) != Ordering::Greater));
        }
    }
}

#[test]
fn appendix_restrictions_agree_with_checker() {
    for h in common::constructible_vectors(7, 3) {
        let cert = appendix_shelling(&h).unwrap();
        let replay = verify_shelling(&cert.ordered_facets).unwrap();
        assert_eq!(replay.restrictions, cert.restrictions, "{h:?}");
        assert_eq!(replay.h_vector().entries, h);
    }
}

#[test]
fn constructed_balls_have_the_predicted_boundary() {
    for h in common::constructible_vectors(6, 3) {
        let d = h.len() - 1;
        let ball = construct_verified(&h).unwrap();
        let boundary = ball.complex.ridge_boundary();
        let bh = CountVector::h(&h_of(&boundary, d - 1));
        let g = bh.g_of_h().unwrap().entries;
        let want = boundary_g(&CountVector::h(&h)).unwrap().entries;
        let k = (d - 1) / 2;
        assert_eq!(&g[..=k], &want[..=k], "{h:?}");
        assert!(want[k + 1..].iter().all(|&x| x == 0), "{h:?}");
        assert_eq!(
            hochster_beta_top(&ball.complex),
            hochster_beta_top_full_sum(&ball.complex),
            "{h:?}"
        );
    }
}
