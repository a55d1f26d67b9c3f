mod common;

use std::collections::HashSet;

use hecke_covers::affine_weyl::{enumerate_ball, graded_counts, AffineElement, AffineWeylGroup, LengthKind};
use hecke_covers::cover_datum::CoverDatum;
use hecke_covers::root_datum::{enumerate_weyl_group, DEFAULT_WEYL_CAP};
use proptest::prelude::*;

fn group(l: char, r: usize, n: u64) -> AffineWeylGroup {
    AffineWeylGroup::new(CoverDatum::from_type(l, r, n).unwrap()).unwrap()
}

fn key(w: &AffineElement) -> common::Elem {
    (w.translation().to_vec(), w.finite_part().matrix().to_vec())
}

#[test]
fn both_lengths_are_word_lengths() {
    let cases = [('A', 2, 1), ('B', 2, 1), ('B', 3, 1), ('C', 3, 3), ('G', 2, 1), ('A', 1, 3), ('G', 2, 5), ('A', 3, 3)];
    for (l, r, n) in cases {
        let g = group(l, r, n);
        let cartan = g.datum().cartan().to_vec();
        let max = 7;
        let rescaled = common::bfs_depths(&common::oracle_group(&cartan, n as i64), max);
        let ambient = common::bfs_depths(&common::oracle_group(&cartan, 1), max);
        let ball = enumerate_ball(&g, max, LengthKind::GQn);
        assert_eq!(ball.len(), rescaled.len(), "{l}{r} n={n}");
        for e in &ball {
            assert_eq!(e.length_gqn, e.depth);
            assert_eq!(rescaled.get(&key(&e.element)), Some(&e.length_gqn), "{l}{r} n={n}");
            if e.length_g <= max {
                assert_eq!(ambient.get(&key(&e.element)), Some(&e.length_g));
            }
        }
        // every ambient element of length <= max inside W~_ex is in the l_G ball
        let gball: HashSet<common::Elem> =
            enumerate_ball(&g, max, LengthKind::G).iter().map(|e| key(&e.element)).collect();
        for w in ambient.keys() {
            let inside = g.cover().y_qn().contains_i64(&w.0);
            assert_eq!(inside, gball.contains(w), "{l}{r} n={n}");
        }
    }
}

#[test]
fn lengths_are_inverse_invariant_and_transfer_holds() {
    for (l, r, n) in [('A', 1, 3), ('A', 2, 2), ('B', 2, 3), ('G', 2, 5), ('A', 1, 2)] {
        let g = group(l, r, n);
        for e in enumerate_ball(&g, 8, LengthKind::GQn) {
            let w = &e.element;
            let inv = g.inverse(w);
            assert_eq!(g.length_g(&inv), e.length_g);
            assert_eq!(g.length(&inv), e.length_gqn);
            for i in 1..g.num_generators() {
                let sw = g.left_mul_generator(i, w);
                let up_g = g.length_g(&sw) == e.length_g + 1;
                let up_gqn = g.length(&sw) == e.length_gqn + 1;
                assert_eq!(up_g, up_gqn, "{l}{r} n={n} {w} gen {i}");
            }
        }
    }
}

#[test]
fn affine_g2_counts_by_formula_evaluation() {
    // Evaluate l_G on every (y, s) in a box and count, independently of BFS.
    let g = group('G', 2, 1);
    let max = 12u64;
    let bound = 3 * max as i64;
    let w = enumerate_weyl_group(g.datum(), DEFAULT_WEYL_CAP).unwrap();
    let mut counts = vec![0u64; max as usize + 1];
    for a in -bound..=bound {
        for b in -bound..=bound {
            for s in &w {
                let e = AffineElement::new(vec![a, b], s.clone());
                let l = g.length_g(&e);
                if l <= max {
                    assert!(a.abs() < bound && b.abs() < bound, "box too small");
                    counts[l as usize] += 1;
                }
            }
        }
    }
    let ball = enumerate_ball(&g, max, LengthKind::GQn);
    assert_eq!(graded_counts(&ball, LengthKind::GQn, max), counts);
    assert_eq!(counts, common::bott_series(&[1, 5], max as usize));
}

#[test]
fn oasitic_covers_have_the_base_poincare_series() {
    for (l, r, n) in [('A', 1, 3), ('A', 2, 2), ('B', 2, 3), ('G', 2, 5), ('C', 3, 3)] {
        let g = group(l, r, n);
        let max = 8;
        let ball = enumerate_ball(&g, max, LengthKind::GQn);
        let expected = common::bott_series(g.datum().exponents(), max as usize);
        assert_eq!(graded_counts(&ball, LengthKind::GQn, max), expected, "{l}{r} n={n}");
    }
}

#[test]
fn ball_is_duplicate_free_and_parents_are_consistent() {
    let g = group('A', 1, 2);
    for kind in [LengthKind::G, LengthKind::GQn] {
        let ball = enumerate_ball(&g, 9, kind);
        let set: HashSet<&AffineElement> = ball.iter().map(|e| &e.element).collect();
        assert_eq!(set.len(), ball.len());
        for e in &ball {
            if let Some((p, gen)) = e.parent {
                assert_eq!(g.left_mul_generator(gen, &ball[p].element), e.element);
            }
        }
    }
    // Omega doubles every level
    let ball = enumerate_ball(&g, 4, LengthKind::GQn);
    assert_eq!(graded_counts(&ball, LengthKind::GQn, 4), vec![2, 4, 4, 4, 4]);
}

#[test]
fn decomposition_reconstructs_elements() {
    let g = group('A', 2, 2);
    for e in enumerate_ball(&g, 6, LengthKind::GQn) {
        let (word, o) = g.decompose(&e.element);
        assert_eq!(word.len() as u64, e.length_gqn);
        assert_eq!(g.from_word(&word, o), e.element);
    }
}

proptest! {
    #[test]
    fn group_law_is_associative(
        w1 in proptest::collection::vec(0usize..3, 0..8),
        w2 in proptest::collection::vec(0usize..3, 0..8),
        w3 in proptest::collection::vec(0usize..3, 0..8),
    ) {
        let g = group('B', 2, 3);
        let a = g.from_word(&w1, 0);
        let b = g.from_word(&w2, 0);
        let c = g.from_word(&w3, 0);
        prop_assert_eq!(g.multiply(&g.multiply(&a, &b), &c), g.multiply(&a, &g.multiply(&b, &c)));
        prop_assert!(g.multiply(&a, &g.inverse(&a)).is_identity());
        prop_assert!(g.length(&a) <= w1.len() as u64);
    }
}
