//! Grid generation and independent oracles shared by the integration tests.
//!
//! The oracles use their own dense polynomial arithmetic over exact rationals and
//! never touch `seifert_core::laurent`.

#![allow(dead_code)]

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use seifert_core::link::{RawSeifertLink, SeifertLink, Sign};

const SIGNS: [Sign; 2] = [Sign::Plus, Sign::Minus];

/// Every normalizable raw tuple with `p, q ≤ max_pq`, `k ≤ max_k`, all legal `w` and signs.
pub fn raw_grid(max_pq: i64, max_k: i64) -> Vec<RawSeifertLink> {
    let mut out = Vec::new();
    for p in 1..=max_pq {
        for q in 1..=max_pq {
            if p.gcd(&q) != 1 {
                continue;
            }
            for k in 1..=max_k {
                for w in (-k..=k).step_by(2) {
                    out.push(RawSeifertLink::ZeroCore { p, q, k, w });
                    for eps in SIGNS {
                        out.push(RawSeifertLink::OneCore { p, q, k, w, eps });
                        for eps2 in SIGNS {
                            out.push(RawSeifertLink::TwoCore { p, q, k, w, eps1: eps, eps2 });
                        }
                    }
                }
            }
        }
    }
    out
}

/// Distinct prime links of the default grid (`p, q ≤ 7`, `k ≤ 6`).
pub fn prime_grid() -> Vec<SeifertLink> {
    let set: BTreeSet<SeifertLink> = raw_grid(7, 6).into_iter().filter_map(|r| r.normalize().ok()).collect();
    set.into_iter().collect()
}

/// Hopf sums with at most `max` summands.
pub fn hopf_sums(max: u32) -> Vec<SeifertLink> {
    let mut out = Vec::new();
    for plus in 0..=max {
        for minus in 0..=max - plus {
            if let Ok(l) = SeifertLink::hopf_sum(plus, minus) {
                out.push(l);
            }
        }
    }
    out.sort();
    out.dedup();
    out
}

pub fn full_grid() -> Vec<SeifertLink> {
    let mut out = prime_grid();
    out.extend(hopf_sums(4));
    out.sort();
    out.dedup();
    out
}

// ---------------------------------------------------------------------------
// Dense polynomials

/// Coefficients from the constant term upwards.
pub type Dense = Vec<BigInt>;

fn trim(mut p: Dense) -> Dense {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

pub fn mul(a: &[BigInt], b: &[BigInt]) -> Dense {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

/// `1 - t^e`.
pub fn one_minus(e: usize) -> Dense {
    let mut out = vec![BigInt::zero(); e + 1];
    out[0] += 1;
    out[e] -= 1;
    trim(out)
}

/// Exact division; panics on a non-zero remainder.
pub fn div(a: &[BigInt], b: &[BigInt]) -> Dense {
    let b = trim(b.to_vec());
    let mut rem = trim(a.to_vec());
    let lead = b.last().expect("non-zero divisor").clone();
    if rem.len() < b.len() {
        assert!(rem.is_empty(), "not divisible");
        return vec![];
    }
    let mut quot = vec![BigInt::zero(); rem.len() - b.len() + 1];
    while rem.len() >= b.len() {
        let shift = rem.len() - b.len();
        let (c, r) = rem.last().unwrap().div_rem(&lead);
        assert!(r.is_zero(), "not divisible");
        for (i, x) in b.iter().enumerate() {
            rem[shift + i] -= &c * x;
        }
        quot[shift] = c;
        rem = trim(rem);
    }
    assert!(rem.is_empty(), "not divisible");
    trim(quot)
}

/// Representative up to `±t^k`: no leading zero terms, positive lowest coefficient.
pub fn unit_normal(p: &[BigInt]) -> Dense {
    let p = trim(p.to_vec());
    let start = p.iter().position(|c| !c.is_zero()).unwrap_or(p.len());
    let mut out: Dense = p[start..].to_vec();
    if out.first().is_some_and(Signed::is_negative) {
        out.iter_mut().for_each(|c| *c = -c.clone());
    }
    out
}

/// The library's Alexander polynomial in the same normal form.
pub fn library_delta(l: &SeifertLink) -> Dense {
    let d = seifert_core::alexander::delta(l);
    if d.is_zero() {
        return vec![];
    }
    let (lo, hi) = (d.min_exp().unwrap(), d.max_exp().unwrap());
    let mut out = vec![BigInt::zero(); (hi - lo + 1) as usize];
    for (e, c) in d.terms() {
        out[(e - lo) as usize] = c.clone();
    }
    unit_normal(&out)
}

pub fn from_i64(c: &[i64]) -> Dense {
    c.iter().map(|&x| BigInt::from(x)).collect()
}

pub fn eval(p: &[BigInt], t: i64) -> BigInt {
    p.iter().rev().fold(BigInt::zero(), |acc, c| acc * t + c)
}

// ---------------------------------------------------------------------------
// Exact linear algebra and interpolation

pub type Matrix = Vec<Vec<BigRational>>;

fn q(x: i64) -> BigRational {
    BigRational::from_integer(x.into())
}

pub fn det(mut m: Matrix) -> BigRational {
    let n = m.len();
    let mut d = BigRational::one();
    for col in 0..n {
        let Some(piv) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return BigRational::zero();
        };
        if piv != col {
            m.swap(piv, col);
            d = -d;
        }
        let p = m[col][col].clone();
        d *= &p;
        for r in col + 1..n {
            let f = &m[r][col] / &p;
            if f.is_zero() {
                continue;
            }
            let (top, bottom) = m.split_at_mut(r);
            for (x, y) in bottom[0][col..].iter_mut().zip(&top[col][col..]) {
                *x -= &f * y;
            }
        }
    }
    d
}

fn mat_mul(a: &Matrix, b: &Matrix) -> Matrix {
    let n = a.len();
    (0..n)
        .map(|i| (0..n).map(|j| (0..n).fold(BigRational::zero(), |acc, k| acc + &a[i][k] * &b[k][j])).collect())
        .collect()
}

fn identity(n: usize) -> Matrix {
    (0..n).map(|i| (0..n).map(|j| q((i == j) as i64)).collect()).collect()
}

/// Newton interpolation through `(x_i, y_i)`; the result must have integer coefficients.
pub fn interpolate(points: &[(i64, BigRational)]) -> Dense {
    let n = points.len();
    let xs: Vec<BigRational> = points.iter().map(|(x, _)| q(*x)).collect();
    let mut coef: Vec<BigRational> = points.iter().map(|(_, y)| y.clone()).collect();
    for j in 1..n {
        for i in (j..n).rev() {
            coef[i] = (&coef[i] - &coef[i - 1]) / (&xs[i] - &xs[i - j]);
        }
    }
    // expand the Newton form into monomials
    let mut poly: Vec<BigRational> = vec![BigRational::zero(); n];
    for i in (0..n).rev() {
        // poly = poly * (t - x_i) + coef[i]
        let mut next = vec![BigRational::zero(); n];
        for d in 0..n {
            if poly[d].is_zero() {
                continue;
            }
            if d + 1 < n {
                next[d + 1] += &poly[d];
            }
            next[d] -= &poly[d] * &xs[i];
        }
        next[0] += &coef[i];
        poly = next;
    }
    let ints = poly
        .into_iter()
        .map(|c| {
            assert!(c.is_integer(), "interpolant has a fractional coefficient {c}");
            c.to_integer()
        })
        .collect();
    trim(ints)
}

// ---------------------------------------------------------------------------
// Seifert matrix of a tree plumbing of positive Hopf bands

/// `V = -I + N`, where `N` has a 1 in position `(i, j)` for each edge `i → j`.
pub fn plumbing_seifert_matrix(vertices: usize, edges: &[(usize, usize)]) -> Vec<Vec<i64>> {
    let mut v = vec![vec![0i64; vertices]; vertices];
    for (i, row) in v.iter_mut().enumerate() {
        row[i] = -1;
    }
    for &(i, j) in edges {
        v[i][j] = 1;
    }
    v
}

/// `det(V - t V^T)` by evaluation and interpolation.
pub fn seifert_alexander(v: &[Vec<i64>]) -> Dense {
    let n = v.len();
    let points: Vec<(i64, BigRational)> = (0..=n as i64)
        .map(|t| {
            let m: Matrix = (0..n).map(|i| (0..n).map(|j| q(v[i][j] - t * v[j][i])).collect()).collect();
            (t, det(m))
        })
        .collect();
    interpolate(&points)
}

/// `|det(V + V^T)|`.
pub fn seifert_determinant(v: &[Vec<i64>]) -> BigInt {
    let n = v.len();
    let m: Matrix = (0..n).map(|i| (0..n).map(|j| q(v[i][j] + v[j][i])).collect()).collect();
    det(m).to_integer().abs()
}

/// Tree of the Dynkin diagram: `A_m` is a path, `D_m` a path with a fork at one end,
/// `E_m` a path of length `m - 1` with a leg of length one at the third vertex.
pub fn dynkin_edges(family: char, m: usize) -> Vec<(usize, usize)> {
    let mut edges: Vec<(usize, usize)> = Vec::new();
    match family {
        'A' => edges.extend((0..m - 1).map(|i| (i, i + 1))),
        'D' => {
            edges.extend((0..m - 2).map(|i| (i, i + 1)));
            edges.push((m - 3, m - 1));
        }
        'E' => {
            edges.extend((0..m - 2).map(|i| (i, i + 1)));
            edges.push((2, m - 1));
        }
        _ => panic!("unknown family {family}"),
    }
    edges
}

// ---------------------------------------------------------------------------
// Closed-form torus links and the reduced Burau representation

/// `(1-t)(1-t^{ab/d})^d / ((1-t^a)(1-t^b))` with `d = gcd(a, b)`, all strands parallel.
pub fn torus_link_delta(a: usize, b: usize) -> Dense {
    let d = a.gcd(&b);
    let mut num = one_minus(1);
    for _ in 0..d {
        num = mul(&num, &one_minus(a * b / d));
    }
    div(&div(&num, &one_minus(a)), &one_minus(b))
}

/// Reduced Burau matrix of `σ_i^{±1}` on `strands` strands, evaluated at `t`.
fn burau_generator(strands: usize, i: usize, inverse: bool, t: &BigRational) -> Matrix {
    let mut m = identity(strands - 1);
    let i = i - 1;
    if inverse {
        m[i][i] = -t.recip();
        if i > 0 {
            m[i - 1][i] = q(1);
        }
        if i + 1 < strands - 1 {
            m[i + 1][i] = t.recip();
        }
    } else {
        m[i][i] = -t.clone();
        if i > 0 {
            m[i - 1][i] = t.clone();
        }
        if i + 1 < strands - 1 {
            m[i + 1][i] = q(1);
        }
    }
    m
}

/// Alexander polynomial of a closed braid. Letters are `±i` for `σ_i^{±1}`.
pub fn burau_alexander(strands: usize, word: &[i64]) -> Dense {
    // after clearing denominators the value is a polynomial of degree at most this
    let bound = word.len() * (strands - 1) + 2;
    let neg = word.iter().filter(|&&g| g < 0).count() * (strands - 1);
    let points: Vec<(i64, BigRational)> = (2..2 + bound as i64)
        .map(|t| {
            let tq = q(t);
            let b = word.iter().fold(identity(strands - 1), |acc, &g| {
                mat_mul(&acc, &burau_generator(strands, g.unsigned_abs() as usize, g < 0, &tq))
            });
            let n = strands - 1;
            let i_minus_b: Matrix = (0..n).map(|r| (0..n).map(|c| q((r == c) as i64) - &b[r][c]).collect()).collect();
            let tn = (0..strands).fold(q(1), |acc, _| acc * &tq);
            let v = det(i_minus_b) * (q(1) - &tq) / (q(1) - tn);
            let scale = (0..neg).fold(q(1), |acc, _| acc * &tq);
            (t, v * scale)
        })
        .collect();
    unit_normal(&interpolate(&points))
}

/// `(σ_1 ⋯ σ_{a-1})^b`.
pub fn torus_braid(a: usize, b: usize) -> Vec<i64> {
    (0..b).flat_map(|_| 1..a as i64).collect()
}
