//! Classical classification predicates for Seifert links.
//!
//! Most predicates are decided by the shape of the normalized parameters.
//! The set `𝒫` of braid positive Seifert links consists of the positive Hopf
//! sums and the links `L(p,q;k,k)`, `L(p,q;k,k;+)`, `L(p,q;k,k;+,+)`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::alexander;
use crate::error::{Error, Result};
use crate::link::{SeifertLink, Shape, Sign};
use crate::orbifold;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum DynkinFamily {
    A,
    D,
    E,
}

/// A simply laced Dynkin diagram `A_m` (m ≥ 1), `D_m` (m ≥ 4) or `E_6`, `E_7`, `E_8`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DynkinType {
    pub family: DynkinFamily,
    pub index: u32,
}

impl DynkinType {
    pub fn a(m: u32) -> Self {
        assert!(m >= 1);
        DynkinType { family: DynkinFamily::A, index: m }
    }

    pub fn d(m: u32) -> Self {
        assert!(m >= 4);
        DynkinType { family: DynkinFamily::D, index: m }
    }

    pub fn e(m: u32) -> Self {
        assert!((6..=8).contains(&m));
        DynkinType { family: DynkinFamily::E, index: m }
    }
}

impl fmt::Display for DynkinType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}{}", self.family, self.index)
    }
}

/// What is known about the 4-ball genus.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "kind", content = "value")]
pub enum G4 {
    Known(i64),
    /// `g₄(L) < g(L)`, with the exact value undetermined.
    StrictlyLessThanGenus,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassificationReport {
    pub is_prime: bool,
    pub is_fibred: bool,
    pub in_p: bool,
    pub is_braid_positive: bool,
    pub is_sqp: bool,
    pub is_genus_zero: bool,
    pub genus: i64,
    pub g4_equals_g: bool,
    pub g4: G4,
    pub is_definite: bool,
    pub dynkin: Option<DynkinType>,
    /// `None` for composite links, where the notion is not defined.
    pub ade_up_to_orientation: Option<bool>,
}

pub fn classify(link: &SeifertLink) -> ClassificationReport {
    let (g4_equals_g, g4) = g4_status(link);
    ClassificationReport {
        is_prime: is_prime(link),
        is_fibred: is_fibred(link),
        in_p: in_p(link),
        is_braid_positive: is_braid_positive(link),
        is_sqp: is_sqp(link),
        is_genus_zero: is_genus_zero(link),
        genus: alexander::genus(link),
        g4_equals_g,
        g4,
        is_definite: is_definite(link),
        dynkin: is_ade(link),
        ade_up_to_orientation: is_ade_up_to_orientation(link).ok(),
    }
}

/// False exactly for connected sums of two or more Hopf links.
pub fn is_prime(link: &SeifertLink) -> bool {
    !matches!(*link.shape(), Shape::HopfSum { plus, minus } if plus + minus >= 2)
}

/// False exactly for the links `L(p,q;k,0)`.
pub fn is_fibred(link: &SeifertLink) -> bool {
    !matches!(link.shape(), Shape::ZeroCore { w: 0, .. })
}

pub fn in_p(link: &SeifertLink) -> bool {
    use Sign::Plus;
    match *link.shape() {
        Shape::HopfSum { minus, .. } => minus == 0,
        Shape::ZeroCore { k, w, .. } => w == k,
        Shape::OneCore { k, w, eps, .. } => w == k && eps == Plus,
        Shape::TwoCore { k, w, eps1, eps2, .. } => w == k && eps1 == Plus && eps2 == Plus,
    }
}

pub fn is_braid_positive(link: &SeifertLink) -> bool {
    in_p(link)
}

/// Strong quasipositivity: the links in `𝒫` and the links `L(p,q;k,0)`.
pub fn is_sqp(link: &SeifertLink) -> bool {
    in_p(link) || matches!(link.shape(), Shape::ZeroCore { w: 0, .. })
}

/// The catalog of genus zero Seifert links.
pub fn is_genus_zero(link: &SeifertLink) -> bool {
    use Sign::*;
    match *link.shape() {
        Shape::HopfSum { .. } => true,
        Shape::ZeroCore { w: 0, .. } => true,
        Shape::ZeroCore { p: 1, q: 1, w: 1, .. } => true,
        Shape::OneCore { p: 1, q, w: 0, .. } => q > 1,
        Shape::OneCore { p: 1, q: 2, w: 1, eps: Minus, .. } => true,
        Shape::TwoCore { p, q, w: 0, eps1, eps2, .. } => eps1 != eps2 && (p - q).abs() == 1,
        Shape::TwoCore { p: 2, q: 3, w: 1, eps1: Minus, eps2: Minus, .. } => true,
        _ => false,
    }
}

/// Whether `g₄ = g`, together with what is known about `g₄`.
pub fn g4_status(link: &SeifertLink) -> (bool, G4) {
    let genus = alexander::genus(link);
    if in_p(link) || genus == 0 {
        return (true, G4::Known(genus));
    }
    match link.core() {
        Some(c) if c.w == 0 => (false, G4::Known(0)),
        _ => (false, G4::StrictlyLessThanGenus),
    }
}

pub fn is_definite(link: &SeifertLink) -> bool {
    use Sign::Minus;
    match *link.shape() {
        Shape::HopfSum { minus: 0, .. } => true,
        Shape::ZeroCore { k: 2, w: 0, .. } => true,
        Shape::TwoCore { p: 2, q: 3, k: 1, w: 1, eps1: Minus, eps2: Minus } => true,
        _ => is_ade(link).is_some(),
    }
}

/// Dynkin type of an ADE link, matched on the normalized oriented link.
pub fn is_ade(link: &SeifertLink) -> Option<DynkinType> {
    use Sign::Plus;
    let t = match *link.shape() {
        Shape::HopfSum { plus: 1, minus: 0 } => DynkinType::a(1),
        Shape::ZeroCore { p: 2, q, k: 1, w: 1 } if q % 2 == 1 => DynkinType::a((q - 1) as u32),
        Shape::ZeroCore { p: 1, q, k: 2, w: 2 } if q >= 2 => DynkinType::a((2 * q - 1) as u32),
        Shape::ZeroCore { p: 3, q: 4, k: 1, w: 1 } => DynkinType::e(6),
        Shape::ZeroCore { p: 3, q: 5, k: 1, w: 1 } => DynkinType::e(8),
        Shape::ZeroCore { p: 1, q: 1, k: 3, w: 3 } => DynkinType::d(4),
        Shape::OneCore { p: 2, q, k: 1, w: 1, eps: Plus } if q % 2 == 1 && q >= 3 => {
            DynkinType::d((q + 2) as u32)
        }
        Shape::OneCore { p: 1, q, k: 2, w: 2, eps: Plus } if q >= 2 => DynkinType::d((2 * q + 2) as u32),
        Shape::OneCore { p: 3, q: 2, k: 1, w: 1, eps: Plus } => DynkinType::e(7),
        _ => return None,
    };
    Some(t)
}

/// Whether some reorientation of `L` is an ADE link, decided by the sign of
/// `χ(B̄₂(L))`.
pub fn is_ade_up_to_orientation(link: &SeifertLink) -> Result<bool> {
    if !is_prime(link) {
        return Err(Error::NotPrime);
    }
    orbifold::pi1_sigma_n_finite(link, 2)
}

/// The ADE link with the given Dynkin type.
pub fn ade_link(t: DynkinType) -> Result<SeifertLink> {
    use Sign::Plus;
    let m = i64::from(t.index);
    match (t.family, t.index) {
        (DynkinFamily::A, 1) => Ok(SeifertLink::hopf()),
        (DynkinFamily::A, _) if m % 2 == 0 => SeifertLink::zero_core(2, m + 1, 1, 1),
        (DynkinFamily::A, _) => SeifertLink::zero_core(1, (m + 1) / 2, 2, 2),
        (DynkinFamily::D, 4) => SeifertLink::zero_core(1, 1, 3, 3),
        (DynkinFamily::D, _) if m % 2 == 1 => SeifertLink::one_core(2, m - 2, 1, 1, Plus),
        (DynkinFamily::D, _) => SeifertLink::one_core(1, (m - 2) / 2, 2, 2, Plus),
        (DynkinFamily::E, 6) => SeifertLink::zero_core(3, 4, 1, 1),
        (DynkinFamily::E, 7) => SeifertLink::one_core(3, 2, 1, 1, Plus),
        (DynkinFamily::E, 8) => SeifertLink::zero_core(3, 5, 1, 1),
        _ => Err(Error::InvalidParameters(format!("no Dynkin diagram {t}"))),
    }
}
