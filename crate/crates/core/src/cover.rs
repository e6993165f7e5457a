//! Left-orderability of cyclic branched covers.
//!
//! A cover `Σ_ψ(L)` is given by `n` and a weight `aᵢ ∈ {1, …, n-1}` per
//! component, measured against the positive braid orientation of `L`; the
//! canonical cover `Σₙ(L)` of an oriented link has weight 1 on components
//! oriented as in `𝒫` and `n - 1` on reversed ones. A cover is `⋆` when its
//! fundamental group is left-orderable, it is not an L-space and it carries a
//! co-orientable taut foliation.
//!
//! Left-orderability is certified in three ways: a positive first Betti
//! number (a cyclotomic root of `Δ_L`), an action on the line coming from a
//! representation to the universal cover of `PSL₂(ℝ)` (the Jankins-Neumann
//! rotation-number window), or a cataloged result. Failure of `⋆` comes from
//! a finite fundamental group, from the Seifert invariants of the cover, or
//! from the catalog.

use std::fmt;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::alexander;
use crate::classify;
use crate::error::{Error, Result};
use crate::exact::{self, Rational};
use crate::link::{CoreParams, RawSeifertLink, SeifertLink, Shape, Sign};
use crate::orbifold::{self, FiniteGroupTag};

/// Catalog keys attached to evidence.
pub mod citation {
    pub const HYPERBOLIC_BASE_ALL_COVERS: &str = "nonpositive-double-cover-base-implies-all-covers-lo";
    pub const FINITE_PI1: &str = "finite-pi1-iff-positive-orbifold-euler-characteristic";
    pub const ADE_DOUBLE_COVER_GROUPS: &str = "ade-double-branched-cover-groups";
    pub const HIGHER_FINITE_COVERS: &str = "finite-higher-cyclic-covers-of-torus-links";
    pub const POSITIVE_BETTI: &str = "cyclotomic-root-gives-positive-betti-number";
    pub const JANKINS_NEUMANN: &str = "jankins-neumann-rotation-number-window";
    pub const NAIMI_NO_TAUT_FOLIATION: &str = "seifert-invariants-without-taut-foliation";
    pub const REORIENTED_TORUS_LINK: &str = "reoriented-t22q-covers-not-lo";
    pub const CANONICAL_CLASSIFICATION: &str = "canonical-cyclic-cover-classification";
}

/// Branching data: `n` and one weight per component in the order
/// copies of `C_{p,q}`, then `C₁`, then `C₂`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoverSpec {
    pub n: i64,
    pub weights: Vec<i64>,
}

impl CoverSpec {
    /// The canonical cover of the oriented link.
    pub fn canonical(link: &SeifertLink, n: i64) -> Result<CoverSpec> {
        if n < 2 {
            return Err(Error::InvalidDegree(n));
        }
        let c = link.prime_core()?;
        let weight = |s: Sign| if s == Sign::Plus { 1 } else { n - 1 };
        let mut weights = vec![1; c.k_plus() as usize];
        weights.extend(std::iter::repeat_n(n - 1, c.k_minus() as usize));
        weights.extend(c.eps1.map(weight));
        weights.extend(c.eps2.map(weight));
        Ok(CoverSpec { n, weights })
    }

    /// `ψ ↦ -ψ`, which gives the same cover.
    pub fn reflected(&self) -> CoverSpec {
        CoverSpec { n: self.n, weights: self.weights.iter().map(|a| self.n - a).collect() }
    }

    fn validate(&self, link: &SeifertLink) -> Result<CoreParams> {
        if self.n < 2 {
            return Err(Error::InvalidDegree(self.n));
        }
        let c = link.prime_core()?;
        let expected = c.k as usize + usize::from(c.eps1.is_some()) + usize::from(c.eps2.is_some());
        if self.weights.len() != expected {
            return Err(Error::WeightMismatch { expected, got: self.weights.len() });
        }
        if let Some(&bad) = self.weights.iter().find(|&&a| a < 1 || a >= self.n) {
            return Err(Error::InvalidWeight { weight: bad, n: self.n });
        }
        Ok(c)
    }
}

/// Rotation numbers `θᵢ` of the cone points of `B̄ₙ(L)` and their sum.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct JNData {
    #[serde(serialize_with = "exact::serialize_rationals")]
    pub thetas: Vec<Rational>,
    #[serde(serialize_with = "exact::serialize_rational")]
    pub sigma: Rational,
    /// Number of cone points.
    pub r: usize,
}

pub fn jn_data(link: &SeifertLink, spec: &CoverSpec) -> Result<JNData> {
    let c = spec.validate(link)?;
    let n = spec.n;
    let k = c.k as usize;
    let mut thetas: Vec<Rational> = spec.weights[..k].iter().map(|&a| Rational::new(a, n)).collect();
    let mut next = k;
    if c.eps1.is_some() {
        thetas.push(Rational::new(spec.weights[next], n * c.q));
        next += 1;
    } else if c.q > 1 {
        thetas.push(Rational::new(1, c.q));
    }
    if c.eps2.is_some() {
        thetas.push(Rational::new(spec.weights[next], n * c.p));
    } else if c.p > 1 {
        thetas.push(Rational::new(1, c.p));
    }
    let sigma = thetas.iter().fold(Rational::zero(), |acc, t| acc + t);
    let r = thetas.len();
    Ok(JNData { thetas, sigma, r })
}

/// The Jankins-Neumann window: a non-cyclic representation to
/// `\widetilde{PSL}₂(ℝ)` exists when this holds.
pub fn jn_lo_sufficient(d: &JNData) -> bool {
    let one = Rational::one();
    let two = Rational::from_integer(2);
    match d.r {
        3 => d.sigma < one || d.sigma > two,
        4 => d.sigma != two,
        r => r >= 5,
    }
}

/// Seifert invariants `(e₀; β₁/α₁, …)` in Jankins-Neumann form.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SeifertInvariants {
    pub e0: i64,
    #[serde(serialize_with = "exact::serialize_rationals")]
    pub coefficients: Vec<Rational>,
}

impl SeifertInvariants {
    pub fn new(e0: i64, coefficients: Vec<Rational>) -> Self {
        SeifertInvariants { e0, coefficients }
    }

    /// `e₀ - Σ βᵢ/αᵢ`, unchanged by the moves `(e₀; …, c, …) ≡ (e₀ + 1; …, c + 1, …)`.
    pub fn euler_number(&self) -> Rational {
        self.coefficients.iter().fold(Rational::from_integer(self.e0), |acc, c| acc - c)
    }

    /// The equivalent form with every coefficient in `[0, 1)`, sorted.
    pub fn normalized(&self) -> SeifertInvariants {
        let mut e0 = self.e0;
        let mut coefficients: Vec<Rational> = self
            .coefficients
            .iter()
            .map(|c| {
                let m = c.floor();
                e0 -= m.to_integer();
                c - m
            })
            .filter(|c| !c.is_zero())
            .collect();
        coefficients.sort();
        SeifertInvariants { e0, coefficients }
    }

    /// Invariants of the same manifold with the opposite orientation.
    pub fn reversed(&self) -> SeifertInvariants {
        SeifertInvariants { e0: -self.e0, coefficients: self.coefficients.iter().map(|c| -c).collect() }
    }

    /// Equivalence under the normalization moves.
    pub fn equivalent(&self, other: &SeifertInvariants) -> bool {
        self.normalized() == other.normalized()
    }

    pub fn equivalent_up_to_orientation(&self, other: &SeifertInvariants) -> bool {
        self.equivalent(other) || self.equivalent(&other.reversed())
    }
}

impl fmt::Display for SeifertInvariants {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cs: Vec<String> = self.coefficients.iter().map(exact::display).collect();
        write!(f, "({}; {})", self.e0, cs.join(", "))
    }
}

/// Seifert invariants of `Σₙ(L)` for the three cataloged families of
/// non-left-orderable canonical covers with infinite fundamental group.
pub fn nlo_seifert_invariants(link: &SeifertLink, n: i64) -> Result<SeifertInvariants> {
    let r = Rational::new;
    match *link.shape() {
        Shape::ZeroCore { p: 1, q: 1, k: 3, w: 1 } if n >= 3 => {
            Ok(SeifertInvariants::new(0, vec![r(1, n), r(1, n), r(-1, n)]))
        }
        Shape::OneCore { p: 1, q, k: 2, w: 0, eps: Sign::Plus } if q >= 2 && n >= 3 => {
            Ok(SeifertInvariants::new(0, vec![r(-1, n), r(1, n), r(-1, n * q)]))
        }
        Shape::OneCore { p: 2, q: 3, k: 1, w: 1, eps: Sign::Minus } if n == 3 => {
            Ok(SeifertInvariants::new(0, vec![r(1, 3), r(2, 9), r(-3, 2)]))
        }
        _ => Err(Error::NotInCatalog),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    /// Left-orderable, not an L-space, carries a co-orientable taut foliation.
    Star,
    NotStar,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Star => "*",
            Verdict::NotStar => "not *",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum Evidence {
    FinitePi1 { group: FiniteGroupTag },
    NoCtfSeifertObstruction { invariants: SeifertInvariants },
    /// `Φₙ` divides `Δ_L`, so `b₁(Σₙ(L)) > 0`.
    PositiveBetti { n: i64 },
    Psl2rRep { jn: JNData },
    Catalog,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StarStatus {
    pub verdict: Verdict,
    pub evidence: Evidence,
    pub citation: &'static str,
}

impl StarStatus {
    fn new(verdict: Verdict, evidence: Evidence, citation: &'static str) -> StarStatus {
        let status = StarStatus { verdict, evidence, citation };
        debug_assert!(status.is_consistent(), "{status:?}");
        status
    }

    /// Whether the evidence can support the verdict.
    pub fn is_consistent(&self) -> bool {
        match self.verdict {
            Verdict::NotStar => matches!(
                self.evidence,
                Evidence::FinitePi1 { .. } | Evidence::NoCtfSeifertObstruction { .. } | Evidence::Catalog
            ),
            Verdict::Star => matches!(
                self.evidence,
                Evidence::PositiveBetti { .. } | Evidence::Psl2rRep { .. } | Evidence::Catalog
            ),
        }
    }
}

/// The largest `N` with `Σₙ(L)` not `⋆` exactly for `2 ≤ n ≤ N`, for prime
/// links that are ADE up to orientation and not in the always-non-`⋆`
/// families. `None` when the link is not of this kind.
pub fn threshold(link: &SeifertLink) -> Option<i64> {
    use Sign::Minus;
    if always_not_star(link) {
        return None;
    }
    match *link.shape() {
        Shape::ZeroCore { p: 2, q: 3, k: 1, w: 1 } => Some(5),
        Shape::ZeroCore { p: 1, q: 2, k: 2, w: 2 } => Some(3),
        Shape::ZeroCore { p: 2, q: 5, k: 1, w: 1 } => Some(3),
        Shape::OneCore { p: 2, q: 3, k: 1, w: 1, eps: Minus } => Some(3),
        Shape::OneCore { p: 3, q: 2, k: 1, w: 1, eps: Minus } => Some(2),
        Shape::OneCore { p: 1, q, k: 2, w: 2, eps: Minus } if q >= 2 => Some(2),
        Shape::OneCore { p: 2, q, k: 1, w: 1, eps: Minus } if q >= 5 && q % 2 == 1 => Some(2),
        _ if classify::is_ade(link).is_some() => Some(2),
        _ => None,
    }
}

/// The families whose canonical covers are never `⋆`: the Hopf link,
/// `T(2,2q)'`, `P(-2,2,2q)'` and `L(1,1;3,1)`.
pub fn always_not_star(link: &SeifertLink) -> bool {
    matches!(
        *link.shape(),
        Shape::HopfSum { plus: 1, minus: 0 }
            | Shape::ZeroCore { p: 1, k: 2, w: 0, .. }
            | Shape::ZeroCore { p: 1, q: 1, k: 3, w: 1 }
            | Shape::OneCore { p: 1, k: 2, w: 0, eps: Sign::Plus, .. }
    )
}

/// Evidence that `Σ_ψ(L)` has left-orderable fundamental group, from the
/// Betti number test (for the canonical cover) or the rotation-number window
/// applied to `ψ` and `-ψ`.
fn lo_evidence(
    link: &SeifertLink,
    spec: &CoverSpec,
    oriented: Option<&SeifertLink>,
) -> Result<Option<(Evidence, &'static str)>> {
    if let Some(oriented) = oriented {
        if spec.n >= 2 && alexander::cyclotomic_divides(spec.n as u64, oriented) {
            return Ok(Some((Evidence::PositiveBetti { n: spec.n }, citation::POSITIVE_BETTI)));
        }
    }
    for s in [spec.clone(), spec.reflected()] {
        let d = jn_data(link, &s)?;
        if jn_lo_sufficient(&d) {
            return Ok(Some((Evidence::Psl2rRep { jn: d }, citation::JANKINS_NEUMANN)));
        }
    }
    Ok(None)
}

/// Classification of the canonical `n`-fold cyclic branched cover.
pub fn canonical_star_status(link: &SeifertLink, n: i64) -> Result<StarStatus> {
    if !classify::is_prime(link) {
        return Err(Error::NotPrime);
    }
    if n < 2 {
        return Err(Error::InvalidDegree(n));
    }
    let spec = CoverSpec::canonical(link, n)?;
    let finite = orbifold::finite_group(link, n)?;
    let finite_status = |group: FiniteGroupTag| {
        let cite = match (&group, n) {
            (_, 2) => citation::ADE_DOUBLE_COVER_GROUPS,
            (FiniteGroupTag::FiniteUnidentified(_), _) => citation::FINITE_PI1,
            _ => citation::HIGHER_FINITE_COVERS,
        };
        StarStatus::new(Verdict::NotStar, Evidence::FinitePi1 { group }, cite)
    };
    let star = |evidence: Option<(Evidence, &'static str)>, fallback: &'static str| match evidence {
        Some((e, cite)) => StarStatus::new(Verdict::Star, e, cite),
        None => StarStatus::new(Verdict::Star, Evidence::Catalog, fallback),
    };

    if !orbifold::pi1_sigma_n_finite(link, 2)? {
        let ev = lo_evidence(link, &spec, Some(link))?;
        return Ok(star(ev, citation::HYPERBOLIC_BASE_ALL_COVERS));
    }

    if always_not_star(link) {
        if let Some(group) = finite {
            return Ok(finite_status(group));
        }
        return Ok(match nlo_seifert_invariants(link, n) {
            Ok(invariants) => StarStatus::new(
                Verdict::NotStar,
                Evidence::NoCtfSeifertObstruction { invariants },
                citation::NAIMI_NO_TAUT_FOLIATION,
            ),
            Err(_) => StarStatus::new(Verdict::NotStar, Evidence::Catalog, citation::REORIENTED_TORUS_LINK),
        });
    }

    let bound = threshold(link);
    if bound.is_some_and(|big_n| n <= big_n) || (bound.is_none() && finite.is_some()) {
        if let Some(group) = finite {
            return Ok(finite_status(group));
        }
        if let Ok(invariants) = nlo_seifert_invariants(link, n) {
            return Ok(StarStatus::new(
                Verdict::NotStar,
                Evidence::NoCtfSeifertObstruction { invariants },
                citation::NAIMI_NO_TAUT_FOLIATION,
            ));
        }
        return Ok(StarStatus::new(Verdict::NotStar, Evidence::Catalog, citation::CANONICAL_CLASSIFICATION));
    }
    let ev = lo_evidence(link, &spec, Some(link))?;
    Ok(star(ev, citation::CANONICAL_CLASSIFICATION))
}

/// Outcome of [`general_psi_lo`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "outcome")]
pub enum PsiOutcome {
    Lo { evidence: Evidence, citation: &'static str },
    Inconclusive,
}

/// Left-orderability of `π₁(Σ_ψ(L))` for arbitrary branching weights,
/// measured against the positive braid orientation of `L`. Neither the
/// orbifold nor the rotation numbers depend on the orientation of `L`.
pub fn general_psi_lo(link: &SeifertLink, spec: &CoverSpec) -> Result<PsiOutcome> {
    spec.validate(link)?;
    if !orbifold::pi1_sigma_n_finite(link, 2)? {
        return Ok(PsiOutcome::Lo { evidence: Evidence::Catalog, citation: citation::HYPERBOLIC_BASE_ALL_COVERS });
    }
    let oriented = reorient(link, spec)?;
    match lo_evidence(link, spec, oriented.as_ref())? {
        Some((evidence, citation)) => Ok(PsiOutcome::Lo { evidence, citation }),
        None => Ok(PsiOutcome::Inconclusive),
    }
}

/// When every weight is `±1 mod n`, `Σ_ψ` is the canonical cover of a
/// reorientation of `L`; returns that oriented link.
fn reorient(link: &SeifertLink, spec: &CoverSpec) -> Result<Option<SeifertLink>> {
    let n = spec.n;
    if !spec.weights.iter().all(|&a| a == 1 || a == n - 1) {
        return Ok(None);
    }
    if link.is_hopf_sum() {
        return Ok(Some(*link));
    }
    let c = link.prime_core()?;
    let k = c.k as usize;
    let sign = |a: i64| if a == 1 { Sign::Plus } else { Sign::Minus };
    let w = spec.weights[..k].iter().map(|&a| if a == 1 { 1 } else { -1 }).sum();
    let raw = match (c.eps1, c.eps2) {
        (None, _) => RawSeifertLink::ZeroCore { p: c.p, q: c.q, k: c.k, w },
        (Some(_), None) => RawSeifertLink::OneCore { p: c.p, q: c.q, k: c.k, w, eps: sign(spec.weights[k]) },
        (Some(_), Some(_)) => RawSeifertLink::TwoCore {
            p: c.p,
            q: c.q,
            k: c.k,
            w,
            eps1: sign(spec.weights[k]),
            eps2: sign(spec.weights[k + 1]),
        },
    };
    raw.normalize().map(Some)
}
