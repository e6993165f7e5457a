//! Base orbifolds of cyclic branched covers.
//!
//! The exterior of a prime Seifert link fibres over a punctured sphere with
//! at most two cone points. Capping the punctures with orbidisks of order
//! `n·mᵢ` (`mᵢ = 1` for a copy of `C_{p,q}`, `q` for `C₁`, `p` for `C₂`)
//! gives the 2-orbifold `B̄ₙ(L)`. The base orbifold `Oₙ(L)` of `Σₙ(L)` covers
//! it with degree `n/r`, where `r` is the order of the fibre class `s` in
//! `ℤ/n`, and `π₁(Σₙ(L))` is finite exactly when `χ(B̄ₙ(L)) > 0`.

use std::fmt;

use num_integer::Integer;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::classify::{self, DynkinFamily};
use crate::error::{Error, Result};
pub use crate::exact::Rational;
use crate::link::{SeifertLink, Shape};

/// A 2-sphere with cone points of the given orders (all ≥ 2).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct ConeOrbifold {
    cone_orders: Vec<i64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Geometry {
    Spherical,
    Euclidean,
    Hyperbolic,
}

impl ConeOrbifold {
    /// Orders equal to 1 are dropped; the rest are sorted.
    pub fn new(orders: impl IntoIterator<Item = i64>) -> Self {
        let mut cone_orders: Vec<i64> = orders.into_iter().filter(|&a| a != 1).collect();
        assert!(cone_orders.iter().all(|&a| a >= 2), "cone orders must be positive");
        cone_orders.sort_unstable();
        ConeOrbifold { cone_orders }
    }

    pub fn cone_orders(&self) -> &[i64] {
        &self.cone_orders
    }

    pub fn cone_count(&self) -> usize {
        self.cone_orders.len()
    }

    pub fn chi(&self) -> Rational {
        chi(self)
    }

    pub fn geometry(&self) -> Geometry {
        let c = self.chi();
        if c > Rational::zero() {
            Geometry::Spherical
        } else if c.is_zero() {
            Geometry::Euclidean
        } else {
            Geometry::Hyperbolic
        }
    }
}

impl fmt::Display for ConeOrbifold {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let orders: Vec<String> = self.cone_orders.iter().map(i64::to_string).collect();
        write!(f, "S^2({})", orders.join(","))
    }
}

/// `χ = 2 - Σ (1 - 1/aⱼ)`.
pub fn chi(o: &ConeOrbifold) -> Rational {
    o.cone_orders
        .iter()
        .fold(Rational::from_integer(2), |acc, &a| acc - (Rational::one() - Rational::new(1, a)))
}

fn check_degree(n: i64) -> Result<()> {
    if n < 2 {
        Err(Error::InvalidDegree(n))
    } else {
        Ok(())
    }
}

/// `B̄ₙ(L)`. The Hopf link is treated through its model `L(1,1;2,2)`.
pub fn b_bar(link: &SeifertLink, n: i64) -> Result<ConeOrbifold> {
    check_degree(n)?;
    let c = link.prime_core()?;
    let copies = std::iter::repeat_n(n, c.k as usize);
    let extra = match (c.eps1, c.eps2) {
        (None, _) => [c.q, c.p],
        (Some(_), None) => [n * c.q, c.p],
        (Some(_), Some(_)) => [n * c.q, n * c.p],
    };
    Ok(ConeOrbifold::new(copies.chain(extra)))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct FibreCoverData {
    /// Image of the regular fibre class under the canonical homomorphism, unreduced.
    pub s: i64,
    /// Order of `s` in `ℤ/n`.
    pub r: i64,
    /// Degree `n/r` of `Oₙ(L) → B̄ₙ(L)`.
    pub cover_degree: i64,
}

/// Fibre image `s`, its order `r` modulo `n` and the cover degree `n/r`.
pub fn fibre_data(link: &SeifertLink, n: i64) -> Result<FibreCoverData> {
    check_degree(n)?;
    let c = link.prime_core()?;
    let mut s = c.w * c.p * c.q;
    if let Some(e) = c.eps1 {
        s += e.as_i64() * c.p;
    }
    if let Some(e) = c.eps2 {
        s += e.as_i64() * c.q;
    }
    let r = n / n.gcd(&s.rem_euclid(n));
    Ok(FibreCoverData { s, r, cover_degree: n / r })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BaseOrbifold {
    #[serde(serialize_with = "crate::exact::serialize_rational")]
    pub chi: Rational,
    /// Cone data of `Oₙ(L)`, known when the cover `Oₙ(L) → B̄ₙ(L)` is trivial.
    pub cone: Option<ConeOrbifold>,
}

/// Euler characteristic, and when available the cone data, of `Oₙ(L)`.
pub fn base_orbifold_sigma_n(link: &SeifertLink, n: i64) -> Result<BaseOrbifold> {
    let b = b_bar(link, n)?;
    let f = fibre_data(link, n)?;
    Ok(BaseOrbifold {
        chi: b.chi() * f.cover_degree,
        cone: (f.r == n).then_some(b),
    })
}

pub fn pi1_sigma_n_finite(link: &SeifertLink, n: i64) -> Result<bool> {
    Ok(b_bar(link, n)?.chi() > Rational::zero())
}

/// Finite fundamental groups of branched covers.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case", tag = "kind", content = "value")]
pub enum FiniteGroupTag {
    /// Cyclic group of order `r`.
    Cyclic(i64),
    /// Binary dihedral group `D*_r` of order `4r`.
    BinaryDihedral(i64),
    BinaryTetrahedral,
    BinaryOctahedral,
    BinaryIcosahedral,
    /// Finite, but the group is not identified; carries `B̄ₙ(L)`.
    FiniteUnidentified(ConeOrbifold),
}

impl FiniteGroupTag {
    /// Order of the abelianization, where the group is identified.
    pub fn h1_order(&self) -> Option<i64> {
        match self {
            FiniteGroupTag::Cyclic(r) => Some(*r),
            FiniteGroupTag::BinaryDihedral(_) => Some(4),
            FiniteGroupTag::BinaryTetrahedral => Some(3),
            FiniteGroupTag::BinaryOctahedral => Some(2),
            FiniteGroupTag::BinaryIcosahedral => Some(1),
            FiniteGroupTag::FiniteUnidentified(_) => None,
        }
    }
}

impl fmt::Display for FiniteGroupTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FiniteGroupTag::Cyclic(r) => write!(f, "C{r}"),
            FiniteGroupTag::BinaryDihedral(r) => write!(f, "D*{r}"),
            FiniteGroupTag::BinaryTetrahedral => f.write_str("T*"),
            FiniteGroupTag::BinaryOctahedral => f.write_str("O*"),
            FiniteGroupTag::BinaryIcosahedral => f.write_str("I*"),
            FiniteGroupTag::FiniteUnidentified(o) => write!(f, "finite (unidentified, base {o})"),
        }
    }
}

/// `π₁(Σₙ(L))` when it is finite.
///
/// For `n = 2` the cover does not depend on the orientation, and the group is
/// read off the ADE type of the positively oriented link. For `n ≥ 3` only
/// the classical cases are identified: lens spaces from the Hopf link and the
/// covers of `T(2,3)`, `T(2,4)` and `T(2,5)` with finite group.
pub fn finite_group(link: &SeifertLink, n: i64) -> Result<Option<FiniteGroupTag>> {
    let b = b_bar(link, n)?;
    if b.chi() <= Rational::zero() {
        return Ok(None);
    }
    if n == 2 {
        let positive = link.positive_braid_orientation();
        let tag = match classify::is_ade(&positive) {
            Some(t) => {
                let m = i64::from(t.index);
                match (t.family, m) {
                    (DynkinFamily::A, _) => FiniteGroupTag::Cyclic(m + 1),
                    (DynkinFamily::D, _) => FiniteGroupTag::BinaryDihedral(m - 2),
                    (DynkinFamily::E, 6) => FiniteGroupTag::BinaryTetrahedral,
                    (DynkinFamily::E, 7) => FiniteGroupTag::BinaryOctahedral,
                    _ => FiniteGroupTag::BinaryIcosahedral,
                }
            }
            None => FiniteGroupTag::FiniteUnidentified(b),
        };
        return Ok(Some(tag));
    }
    let tag = match (*link.shape(), n) {
        (Shape::HopfSum { .. }, _) => FiniteGroupTag::Cyclic(n),
        (Shape::ZeroCore { p: 2, q: 3, k: 1, w: 1 }, 3) => FiniteGroupTag::BinaryDihedral(2),
        (Shape::ZeroCore { p: 2, q: 3, k: 1, w: 1 }, 4) => FiniteGroupTag::BinaryTetrahedral,
        (Shape::ZeroCore { p: 2, q: 3, k: 1, w: 1 }, 5) => FiniteGroupTag::BinaryIcosahedral,
        (Shape::ZeroCore { p: 1, q: 2, k: 2, w: 2 }, 3) => FiniteGroupTag::BinaryTetrahedral,
        (Shape::ZeroCore { p: 2, q: 5, k: 1, w: 1 }, 3) => FiniteGroupTag::BinaryIcosahedral,
        _ => FiniteGroupTag::FiniteUnidentified(b),
    };
    Ok(Some(tag))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::link::Sign::*;

    fn orb(v: &[i64]) -> ConeOrbifold {
        ConeOrbifold::new(v.iter().copied())
    }

    #[test]
    fn cone_data() {
        assert_eq!(b_bar(&SeifertLink::zero_core(3, 5, 1, 1).unwrap(), 2).unwrap(), orb(&[2, 3, 5]));
        for n in 2..8 {
            for q in 2..6 {
                let l = SeifertLink::one_core(1, q, 2, 0, Plus).unwrap();
                assert_eq!(b_bar(&l, n).unwrap(), orb(&[n, n, n * q]));
            }
        }
        for w in [0, 2, 4] {
            let l = SeifertLink::zero_core(1, 1, 4, w).unwrap();
            assert_eq!(b_bar(&l, 2).unwrap(), orb(&[2, 2, 2, 2]));
        }
        assert_eq!(b_bar(&SeifertLink::hopf_sum(2, 0).unwrap(), 2), Err(Error::NotPrime));
        assert_eq!(b_bar(&SeifertLink::hopf(), 1), Err(Error::InvalidDegree(1)));
    }

    #[test]
    fn euler_characteristics() {
        assert_eq!(chi(&orb(&[2, 3, 5])), Rational::new(1, 30));
        assert_eq!(chi(&orb(&[2, 3, 6])), Rational::zero());
        assert_eq!(chi(&orb(&[3, 3, 3, 3])), Rational::new(-2, 3));
        assert_eq!(orb(&[2, 3, 7]).geometry(), Geometry::Hyperbolic);
        assert_eq!(orb(&[]).chi(), Rational::from_integer(2));
        assert_eq!(orb(&[1, 4, 1]).cone_orders(), &[4]);
    }

    #[test]
    fn fibre_images() {
        let l = SeifertLink::zero_core(1, 1, 3, 1).unwrap();
        for n in 2..10 {
            assert_eq!(fibre_data(&l, n).unwrap(), FibreCoverData { s: 1, r: n, cover_degree: 1 });
        }
        let trefoil = SeifertLink::zero_core(2, 3, 1, 1).unwrap();
        assert_eq!(fibre_data(&trefoil, 6).unwrap(), FibreCoverData { s: 6, r: 1, cover_degree: 6 });
        for q in 2..6 {
            let l = SeifertLink::one_core(1, q, 2, 0, Plus).unwrap();
            let f = fibre_data(&l, 7).unwrap();
            assert_eq!((f.s, f.r), (1, 7));
        }
    }

    #[test]
    fn base_orbifolds() {
        let l = SeifertLink::zero_core(1, 1, 3, 1).unwrap();
        let b = base_orbifold_sigma_n(&l, 4).unwrap();
        assert_eq!(b.cone, Some(orb(&[4, 4, 4])));
        assert_eq!(b.chi, chi(&orb(&[4, 4, 4])));
        let l = SeifertLink::one_core(2, 3, 1, 1, Minus).unwrap();
        let b = base_orbifold_sigma_n(&l, 3).unwrap();
        assert_eq!(b.cone, Some(orb(&[2, 3, 9])));
        let trefoil = SeifertLink::zero_core(2, 3, 1, 1).unwrap();
        let b = base_orbifold_sigma_n(&trefoil, 6).unwrap();
        assert_eq!((b.chi, b.cone), (Rational::zero(), None));
    }

    #[test]
    fn finiteness() {
        let trefoil = SeifertLink::zero_core(2, 3, 1, 1).unwrap();
        assert!(pi1_sigma_n_finite(&trefoil, 5).unwrap());
        assert!(!pi1_sigma_n_finite(&trefoil, 6).unwrap());
        assert!(pi1_sigma_n_finite(&SeifertLink::zero_core(2, 5, 1, 1).unwrap(), 3).unwrap());
    }

    #[test]
    fn groups() {
        let l = SeifertLink::zero_core(2, 5, 1, 1).unwrap();
        assert_eq!(finite_group(&l, 2).unwrap(), Some(FiniteGroupTag::Cyclic(5)));
        let trefoil = SeifertLink::zero_core(2, 3, 1, 1).unwrap();
        assert_eq!(finite_group(&trefoil, 5).unwrap(), Some(FiniteGroupTag::BinaryIcosahedral));
        assert_eq!(finite_group(&trefoil, 6).unwrap(), None);
        let l = SeifertLink::zero_core(1, 2, 2, 0).unwrap();
        assert_eq!(
            finite_group(&l, 3).unwrap(),
            Some(FiniteGroupTag::FiniteUnidentified(orb(&[2, 3, 3])))
        );
        // reorienting does not change the double branched cover
        let l = SeifertLink::one_core(3, 2, 1, 1, Minus).unwrap();
        assert_eq!(finite_group(&l, 2).unwrap(), Some(FiniteGroupTag::BinaryOctahedral));
        assert_eq!(finite_group(&SeifertLink::hopf(), 7).unwrap(), Some(FiniteGroupTag::Cyclic(7)));
    }
}
