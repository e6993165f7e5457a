//! Library polynomials against independent constructions: Seifert matrices of
//! plumbing trees, the closed form for torus links, and the Burau representation.

mod common;

use common::*;
use num_bigint::BigInt;
use num_integer::Integer;
use seifert_core::alexander;
use seifert_core::link::{SeifertLink, Sign};

/// ADE links as Seifert links, written out directly.
fn ade(family: char, m: i64) -> SeifertLink {
    use Sign::Plus;
    match (family, m) {
        ('A', m) if m % 2 == 1 => SeifertLink::zero_core(1, (m + 1) / 2, 2, 2),
        ('A', m) => SeifertLink::zero_core(2, m + 1, 1, 1),
        ('D', m) if m % 2 == 0 => SeifertLink::one_core(1, (m - 2) / 2, 2, 2, Plus),
        ('D', m) => SeifertLink::one_core(2, m - 2, 1, 1, Plus),
        ('E', 6) => SeifertLink::zero_core(3, 4, 1, 1),
        ('E', 7) => SeifertLink::one_core(3, 2, 1, 1, Plus),
        ('E', 8) => SeifertLink::zero_core(3, 5, 1, 1),
        _ => unreachable!(),
    }
    .unwrap()
}

fn ade_cases() -> Vec<(char, i64)> {
    let mut out: Vec<(char, i64)> = (1..=12).map(|m| ('A', m)).collect();
    out.extend((4..=12).map(|m| ('D', m)));
    out.extend([('E', 6), ('E', 7), ('E', 8)]);
    out
}

#[test]
fn plumbing_trees_match_ade_links() {
    for (family, m) in ade_cases() {
        let v = plumbing_seifert_matrix(m as usize, &dynkin_edges(family, m as usize));
        let l = ade(family, m);
        assert_eq!(library_delta(&l), unit_normal(&seifert_alexander(&v)), "{family}{m}: {l}");
        assert_eq!(alexander::determinant(&l), seifert_determinant(&v), "{family}{m}: {l}");
    }
}

#[test]
fn d_odd_determinant_is_four() {
    for m in [5usize, 7, 9, 11] {
        let v = plumbing_seifert_matrix(m, &dynkin_edges('D', m));
        assert_eq!(seifert_determinant(&v), BigInt::from(4));
    }
}

#[test]
fn plumbing_orientation_is_irrelevant() {
    // reversing every edge of a tree gives the same polynomial
    for (family, m) in ade_cases() {
        let edges = dynkin_edges(family, m as usize);
        let flipped: Vec<(usize, usize)> = edges.iter().map(|&(i, j)| (j, i)).collect();
        let a = seifert_alexander(&plumbing_seifert_matrix(m as usize, &edges));
        let b = seifert_alexander(&plumbing_seifert_matrix(m as usize, &flipped));
        assert_eq!(unit_normal(&a), unit_normal(&b));
    }
}

#[test]
fn torus_links_match_closed_form() {
    for a in 2..=9usize {
        for b in a..=9usize {
            let d = a.gcd(&b);
            let (p, q) = ((a / d) as i64, (b / d) as i64);
            let l = SeifertLink::zero_core(p, q, d as i64, d as i64).unwrap();
            assert_eq!(library_delta(&l), unit_normal(&torus_link_delta(a, b)), "T({a},{b}) = {l}");
        }
    }
}

#[test]
fn burau_matches_closed_form() {
    for a in 2..=5usize {
        for b in 2..=7usize {
            let burau = burau_alexander(a, &torus_braid(a, b));
            assert_eq!(burau, unit_normal(&torus_link_delta(a, b)), "T({a},{b})");
        }
    }
}

#[test]
fn burau_matches_torus_knots() {
    for p in 2..=5i64 {
        for q in (p + 1)..=8 {
            if p.gcd(&q) != 1 {
                continue;
            }
            let lib = alexander::torus_knot_delta(p, q).unwrap();
            let l = SeifertLink::zero_core(p, q, 1, 1).unwrap();
            assert_eq!(seifert_core::alexander::delta(&l), lib.normalize_units());
            assert_eq!(library_delta(&l), burau_alexander(p as usize, &torus_braid(p as usize, q as usize)));
        }
    }
}

#[test]
fn burau_matches_hopf_sums() {
    for plus in 0..=3u32 {
        for minus in 0..=3u32 {
            if plus + minus == 0 {
                continue;
            }
            // a chain of unknots, each consecutive pair clasped by σ_i^{±2}
            let word: Vec<i64> = (1..=(plus + minus) as i64)
                .flat_map(|i| if i <= plus as i64 { [i, i] } else { [-i, -i] })
                .collect();
            let l = SeifertLink::hopf_sum(plus, minus).unwrap();
            let burau = burau_alexander((plus + minus + 1) as usize, &word);
            assert_eq!(library_delta(&l), burau, "{l}");
        }
    }
}

#[test]
fn trefoil_sanity() {
    assert_eq!(burau_alexander(2, &[1, 1, 1]), from_i64(&[1, -1, 1]));
    assert_eq!(unit_normal(&seifert_alexander(&plumbing_seifert_matrix(2, &[(0, 1)]))), from_i64(&[1, -1, 1]));
}
