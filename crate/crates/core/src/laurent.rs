//! Integer Laurent polynomials in one variable `t`.
//!
//! Coefficients are arbitrary precision. Values are kept sparse: a map from
//! exponent to a nonzero coefficient, the zero polynomial being the empty
//! map. Alexander polynomials are only defined up to multiplication by units
//! `±tʲ`; [`LaurentPoly::normalize_units`] picks the representative with
//! lowest exponent 0 and positive constant term.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn one() -> Self {
        LaurentPoly::monomial(1, 0)
    }

    /// `c · tᵉ`.
    pub fn monomial(c: impl Into<BigInt>, e: i64) -> Self {
        let mut p = LaurentPoly::zero();
        p.add_term(e, c.into());
        p
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs; repeated
    /// exponents are summed.
    pub fn from_terms<C: Into<BigInt>>(terms: impl IntoIterator<Item = (i64, C)>) -> Self {
        let mut p = LaurentPoly::zero();
        for (e, c) in terms {
            p.add_term(e, c.into());
        }
        p
    }

    /// `c₀ + c₁t + c₂t² + …`
    pub fn from_coeffs(coeffs: &[i64]) -> Self {
        LaurentPoly::from_terms(coeffs.iter().enumerate().map(|(i, &c)| (i as i64, c)))
    }

    /// `1 - tᵐ`
    pub fn one_minus_t_pow(m: i64) -> Self {
        LaurentPoly::from_terms([(0, 1), (m, -1)])
    }

    /// `1 + tᵉ + t²ᵉ + … + t⁽ᶜ⁻¹⁾ᵉ` (`c` terms).
    pub fn geometric(e: i64, count: i64) -> Self {
        LaurentPoly::from_terms((0..count).map(|i| (i * e, 1)))
    }

    fn add_term(&mut self, e: i64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(e).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn coeff(&self, e: i64) -> BigInt {
        self.terms.get(&e).cloned().unwrap_or_default()
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Difference between highest and lowest exponent; `None` for zero.
    pub fn breadth(&self) -> Option<i64> {
        Some(self.max_exp()? - self.min_exp()?)
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = LaurentPoly::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// `f(t) ↦ f(tᵐ)`.
    pub fn substitute_power(&self, m: i64) -> Self {
        LaurentPoly::from_terms(self.terms.iter().map(|(&e, c)| (e * m, c.clone())))
    }

    /// `f(t) ↦ f(t⁻¹)`.
    pub fn invert_variable(&self) -> Self {
        self.substitute_power(-1)
    }

    /// Multiplication by `tˢ`.
    pub fn shift(&self, s: i64) -> Self {
        LaurentPoly { terms: self.terms.iter().map(|(&e, c)| (e + s, c.clone())).collect() }
    }

    pub fn eval_i64(&self, t: i64) -> Option<BigInt> {
        if t == 0 && self.min_exp().is_some_and(|e| e < 0) {
            return None;
        }
        let base = BigInt::from(t);
        let mut total = BigInt::zero();
        for (&e, c) in &self.terms {
            if e < 0 {
                // only ±1 have integral inverses
                if t.abs() != 1 {
                    return None;
                }
                total += c * num_traits::pow(base.clone(), (-e) as usize);
            } else {
                total += c * num_traits::pow(base.clone(), e as usize);
            }
        }
        Some(total)
    }

    /// Exact value at `t = -1`, computed on the unit-normalized form.
    pub fn eval_at_minus_one(&self) -> BigInt {
        self.normalize_units().eval_i64(-1).expect("evaluation at -1 is always defined")
    }

    /// Multiplies by the unit `±tʲ` that makes the lowest exponent 0 and the
    /// constant term positive.
    pub fn normalize_units(&self) -> Self {
        let Some(lo) = self.min_exp() else {
            return LaurentPoly::zero();
        };
        let shifted = self.shift(-lo);
        if shifted.coeff(0).is_negative() {
            -shifted
        } else {
            shifted
        }
    }

    /// Equality up to units `±tʲ`.
    pub fn eq_up_to_units(&self, other: &LaurentPoly) -> bool {
        self.normalize_units() == other.normalize_units()
    }

    /// Quotient of an exact division `self / divisor`.
    pub fn div_exact(&self, divisor: &LaurentPoly) -> Result<LaurentPoly> {
        let (q, r) = self.div_rem(divisor)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::NotDivisible)
        }
    }

    /// Whether `divisor` divides `self` in `ℤ[t, t⁻¹]`.
    pub fn is_divisible_by(&self, divisor: &LaurentPoly) -> bool {
        !divisor.is_zero() && self.div_exact(divisor).is_ok()
    }

    /// Long division from the top, treating both operands as polynomials
    /// after shifting. Fails with [`Error::NotDivisible`] as soon as a leading
    /// coefficient is not divisible by the divisor's leading coefficient.
    fn div_rem(&self, divisor: &LaurentPoly) -> Result<(LaurentPoly, LaurentPoly)> {
        let (Some(dlo), Some(dhi)) = (divisor.min_exp(), divisor.max_exp()) else {
            return Err(Error::NotDivisible);
        };
        let lead = divisor.coeff(dhi);
        let mut rem = self.clone();
        let mut quot = LaurentPoly::zero();
        while let (Some(rlo), Some(rhi)) = (rem.min_exp(), rem.max_exp()) {
            if rhi - rlo < dhi - dlo {
                break;
            }
            let c = rem.coeff(rhi);
            let (f, m) = c.div_mod_floor(&lead);
            if !m.is_zero() {
                return Err(Error::NotDivisible);
            }
            let shift = rhi - dhi;
            for (&e, dc) in &divisor.terms {
                rem.add_term(e + shift, -(&f * dc));
            }
            quot.add_term(shift, f);
        }
        Ok((quot, rem))
    }
}

/// The `n`-th cyclotomic polynomial, by exact division of `tⁿ - 1` by the
/// cyclotomic polynomials of the proper divisors of `n`.
pub fn cyclotomic(n: u64) -> LaurentPoly {
    assert!(n >= 1, "cyclotomic polynomials are indexed from 1");
    let mut p = LaurentPoly::from_terms([(n as i64, 1), (0, -1)]);
    for d in (1..n).filter(|d| n.is_multiple_of(*d)) {
        p = p.div_exact(&cyclotomic(d)).expect("cyclotomic factor divides tⁿ - 1");
    }
    p
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.add_term(e, c.clone());
        }
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self + &(-rhs)
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly { terms: self.terms.iter().map(|(&e, c)| (e, -c)).collect() }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (&e1, c1) in &self.terms {
            for (&e2, c2) in &rhs.terms {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl fmt::Display for LaurentPoly {
    /// Sparse rendering in increasing degree, e.g. `1 - t^3 + 2t^7`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (&e, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let unit = mag.is_one();
            match e {
                0 => write!(f, "{mag}")?,
                1 if unit => f.write_str("t")?,
                1 => write!(f, "{mag}t")?,
                _ if unit => write!(f, "t^{e}")?,
                _ => write!(f, "{mag}t^{e}")?,
            }
        }
        Ok(())
    }
}

#[derive(Serialize)]
struct Term<'a> {
    exp: i64,
    #[serde(serialize_with = "serialize_bigint")]
    coef: &'a BigInt,
}

fn serialize_bigint<S: Serializer>(v: &&BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
    use num_traits::ToPrimitive;
    match v.to_i64() {
        Some(x) => s.serialize_i64(x),
        None => s.serialize_str(&v.to_string()),
    }
}

impl Serialize for LaurentPoly {
    /// A sparse `[{"exp": e, "coef": c}]` array. Coefficients beyond the
    /// `i64` range are written as decimal strings.
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.terms.iter().map(|(&exp, coef)| Term { exp, coef }))
    }
}
