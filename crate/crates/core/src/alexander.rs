//! One-variable Alexander polynomials of Seifert links.
//!
//! The polynomials come from closed splice formulas. Writing `Δ_{p,q}` for
//! the torus knot polynomial,
//!
//! ```text
//! 0-core  (1-t)(1-t^{wpq})^{k-2} (1 + t^w + … + t^{w(pq-1)}) Δ_{p,q}(t^w)
//! 1-core  (1-t)(1-t^{ep})^{k-1} (1 + t^e + … + t^{e(p-1)}),   e = wq + ε
//! 2-core  (1-t)(1-t^{e})^{k},                              e = wpq + ε₁p + ε₂q
//! ```
//!
//! For a 0-core link with `w = 0` the first formula degenerates and is read
//! as `pq(1-t)` when `k = 2` and `0` when `k ≥ 4`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Signed;

use crate::error::{Error, Result};
use crate::laurent::{cyclotomic, LaurentPoly};
use crate::link::{SeifertLink, Shape};

/// `Δ_{T(p,q)}(t) = (t^{pq} - 1)(t - 1) / ((t^p - 1)(t^q - 1))`.
pub fn torus_knot_delta(p: i64, q: i64) -> Result<LaurentPoly> {
    if p < 1 || q < 1 {
        return Err(Error::InvalidParameters(format!("torus knot parameters must be positive ({p}, {q})")));
    }
    if p.gcd(&q) != 1 {
        return Err(Error::NotCoprime { p, q });
    }
    if p == 1 || q == 1 {
        return Ok(LaurentPoly::one());
    }
    let num = &LaurentPoly::one_minus_t_pow(p * q) * &LaurentPoly::one_minus_t_pow(1);
    let den = &LaurentPoly::one_minus_t_pow(p) * &LaurentPoly::one_minus_t_pow(q);
    num.div_exact(&den)
}

/// Unit-normalized Alexander polynomial `Δ_L(t)`.
pub fn delta(link: &SeifertLink) -> LaurentPoly {
    let one_minus_t = LaurentPoly::one_minus_t_pow(1);
    let raw = match *link.shape() {
        Shape::HopfSum { plus, minus } => one_minus_t.pow(plus + minus),
        Shape::ZeroCore { p, q, k, w } => zero_core_delta(p, q, k, w),
        Shape::OneCore { p, q, k, w, eps } => {
            let e = w * q + eps.as_i64();
            let power = LaurentPoly::one_minus_t_pow(e * p).pow((k - 1) as u32);
            &(&one_minus_t * &power) * &LaurentPoly::geometric(e, p)
        }
        Shape::TwoCore { p, q, k, w, eps1, eps2 } => {
            let e = w * p * q + eps1.as_i64() * p + eps2.as_i64() * q;
            &one_minus_t * &LaurentPoly::one_minus_t_pow(e).pow(k as u32)
        }
    };
    raw.normalize_units()
}

fn zero_core_delta(p: i64, q: i64, k: i64, w: i64) -> LaurentPoly {
    let one_minus_t = LaurentPoly::one_minus_t_pow(1);
    if w == 0 {
        return if k == 2 { &LaurentPoly::monomial(p * q, 0) * &one_minus_t } else { LaurentPoly::zero() };
    }
    let torus = torus_knot_delta(p, q).expect("normalized links have coprime p, q");
    let tail = &LaurentPoly::geometric(w, p * q) * &torus.substitute_power(w);
    if k >= 2 {
        let power = LaurentPoly::one_minus_t_pow(w * p * q).pow((k - 2) as u32);
        &(&one_minus_t * &power) * &tail
    } else {
        // the factor (1 - t^{wpq})^{-1} cancels exactly
        (&one_minus_t * &tail)
            .div_exact(&LaurentPoly::one_minus_t_pow(w * p * q))
            .expect("the k = 1 splice formula divides exactly")
    }
}

/// Breadth of `Δ_L` from the closed degree formulas.
pub fn delta_degree(link: &SeifertLink) -> Result<i64> {
    match *link.shape() {
        Shape::HopfSum { plus, minus } => Ok(i64::from(plus + minus)),
        Shape::ZeroCore { k, w: 0, .. } => {
            if k == 2 {
                Ok(1)
            } else {
                Err(Error::ZeroPolynomial)
            }
        }
        Shape::ZeroCore { p, q, k, w } => Ok(1 + w * (k * p * q - p - q)),
        Shape::OneCore { p, q, k, w, eps } => Ok(1 + (k * p - 1) * (w * q + eps.as_i64()).abs()),
        Shape::TwoCore { p, q, k, w, eps1, eps2 } => {
            Ok(1 + k * (w * p * q + eps1.as_i64() * p + eps2.as_i64() * q).abs())
        }
    }
}

/// `|Δ_L(-1)|`. Zero means the double branched cover has infinite `H₁`.
pub fn determinant(link: &SeifertLink) -> BigInt {
    delta(link).eval_at_minus_one().abs()
}

/// Whether `Φₙ` divides `Δ_L`, i.e. `Δ_L(e^{2πi/n}) = 0`. True for `Δ_L = 0`.
pub fn cyclotomic_divides(n: u64, link: &SeifertLink) -> bool {
    let d = delta(link);
    d.is_zero() || d.is_divisible_by(&cyclotomic(n))
}

/// Seifert genus. For fibred links `breadth Δ_L = 2g + |L| - 1`; the
/// non-fibred 0-core links `L(p,q;k,0)` bound unions of annuli.
pub fn genus(link: &SeifertLink) -> i64 {
    match *link.shape() {
        Shape::HopfSum { .. } | Shape::ZeroCore { w: 0, .. } => 0,
        _ => {
            let breadth = delta(link).breadth().expect("fibred Seifert links have nonzero Δ");
            (breadth - link.components() as i64 + 1) / 2
        }
    }
}
