//! Parametric Seifert links and their canonical form.
//!
//! Every Seifert link is, up to reversal and mirror image, either a connected
//! sum of Hopf links or a union of `k` parallel `(p, q)` torus curves on the
//! Heegaard torus, optionally together with one or both core circles `C₁`,
//! `C₂` of the two solid tori. The notation is
//!
//! * `L(p,q;k,w)`  0-core: `k` copies of `C_{p,q}`,
//! * `L(p,q;k,w;ε)`  1-core: the copies together with `C₁`,
//! * `L(p,q;k,w;ε₁,ε₂)`  2-core: the copies together with `C₁` and `C₂`,
//!
//! where `w = k₊ - k₋` counts the orientations of the copies and the signs
//! record the linking of the cores with a positively oriented copy
//! (`ε₁ p` with `C₁`, `ε₂ q` with `C₂`).
//!
//! The notation has redundancies. [`normalize`] rewrites any admissible tuple
//! into a unique representative by running a small confluent rewrite system
//! to a fixed point.

use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sign {
    #[serde(rename = "+")]
    Plus,
    #[serde(rename = "-")]
    Minus,
}

impl Sign {
    pub fn as_i64(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        })
    }
}

/// A parameter tuple as written by a user, before any convention is applied.
///
/// `w` may be negative, `p > q` is allowed, 1-core links may have `q = 1`
/// and Hopf sums may list more negative than positive summands.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RawSeifertLink {
    HopfSum { plus: u32, minus: u32 },
    ZeroCore { p: i64, q: i64, k: i64, w: i64 },
    OneCore { p: i64, q: i64, k: i64, w: i64, eps: Sign },
    TwoCore { p: i64, q: i64, k: i64, w: i64, eps1: Sign, eps2: Sign },
}

impl RawSeifertLink {
    pub fn normalize(self) -> Result<SeifertLink> {
        normalize(self)
    }
}

/// Canonical shape of a normalized Seifert link.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Shape {
    /// `#plus H₊ # minus H₋`, with `plus ≥ minus`. The single Hopf link is `{1, 0}`.
    HopfSum { plus: u32, minus: u32 },
    ZeroCore { p: i64, q: i64, k: i64, w: i64 },
    OneCore { p: i64, q: i64, k: i64, w: i64, eps: Sign },
    TwoCore { p: i64, q: i64, k: i64, w: i64, eps1: Sign, eps2: Sign },
}

/// A Seifert link in canonical form. Only [`normalize`] constructs these.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SeifertLink(Shape);

/// Core parameters shared by the 0-, 1- and 2-core variants.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CoreParams {
    pub p: i64,
    pub q: i64,
    pub k: i64,
    pub w: i64,
    /// Sign of `C₁`, present for 1- and 2-core links.
    pub eps1: Option<Sign>,
    /// Sign of `C₂`, present for 2-core links.
    pub eps2: Option<Sign>,
}

impl CoreParams {
    /// Number of positively oriented copies of `C_{p,q}`.
    pub fn k_plus(&self) -> i64 {
        (self.k + self.w) / 2
    }

    pub fn k_minus(&self) -> i64 {
        (self.k - self.w) / 2
    }
}

impl SeifertLink {
    pub fn shape(&self) -> &Shape {
        &self.0
    }

    /// The positive Hopf link `T(2,2)`.
    pub fn hopf() -> SeifertLink {
        SeifertLink(Shape::HopfSum { plus: 1, minus: 0 })
    }

    pub fn zero_core(p: i64, q: i64, k: i64, w: i64) -> Result<SeifertLink> {
        normalize(RawSeifertLink::ZeroCore { p, q, k, w })
    }

    pub fn one_core(p: i64, q: i64, k: i64, w: i64, eps: Sign) -> Result<SeifertLink> {
        normalize(RawSeifertLink::OneCore { p, q, k, w, eps })
    }

    pub fn two_core(p: i64, q: i64, k: i64, w: i64, eps1: Sign, eps2: Sign) -> Result<SeifertLink> {
        normalize(RawSeifertLink::TwoCore { p, q, k, w, eps1, eps2 })
    }

    pub fn hopf_sum(plus: u32, minus: u32) -> Result<SeifertLink> {
        normalize(RawSeifertLink::HopfSum { plus, minus })
    }

    pub fn is_hopf_sum(&self) -> bool {
        matches!(self.0, Shape::HopfSum { .. })
    }

    /// Core parameters, or `None` for Hopf sums.
    pub fn core(&self) -> Option<CoreParams> {
        match self.0 {
            Shape::HopfSum { .. } => None,
            Shape::ZeroCore { p, q, k, w } => Some(CoreParams { p, q, k, w, eps1: None, eps2: None }),
            Shape::OneCore { p, q, k, w, eps } => {
                Some(CoreParams { p, q, k, w, eps1: Some(eps), eps2: None })
            }
            Shape::TwoCore { p, q, k, w, eps1, eps2 } => {
                Some(CoreParams { p, q, k, w, eps1: Some(eps1), eps2: Some(eps2) })
            }
        }
    }

    /// Core parameters for the prime links, where the single Hopf link is
    /// modelled by the 0-core tuple `(1,1;2,2)`.
    pub fn prime_core(&self) -> Result<CoreParams> {
        match self.0 {
            Shape::HopfSum { plus: 1, minus: 0 } => {
                Ok(CoreParams { p: 1, q: 1, k: 2, w: 2, eps1: None, eps2: None })
            }
            Shape::HopfSum { .. } => Err(Error::NotPrime),
            _ => Ok(self.core().expect("core variant")),
        }
    }

    /// Number of components `|L|`.
    pub fn components(&self) -> usize {
        components(self)
    }

    pub fn to_raw(&self) -> RawSeifertLink {
        match self.0 {
            Shape::HopfSum { plus, minus } => RawSeifertLink::HopfSum { plus, minus },
            Shape::ZeroCore { p, q, k, w } => RawSeifertLink::ZeroCore { p, q, k, w },
            Shape::OneCore { p, q, k, w, eps } => RawSeifertLink::OneCore { p, q, k, w, eps },
            Shape::TwoCore { p, q, k, w, eps1, eps2 } => {
                RawSeifertLink::TwoCore { p, q, k, w, eps1, eps2 }
            }
        }
    }

    /// The link reoriented as a positive braid link (all copies positive, all
    /// core signs `+`).
    pub fn positive_braid_orientation(&self) -> SeifertLink {
        match self.0 {
            Shape::HopfSum { plus, minus } => SeifertLink(Shape::HopfSum { plus: plus + minus, minus: 0 }),
            Shape::ZeroCore { p, q, k, .. } => SeifertLink(Shape::ZeroCore { p, q, k, w: k }),
            Shape::OneCore { p, q, k, .. } => {
                SeifertLink(Shape::OneCore { p, q, k, w: k, eps: Sign::Plus })
            }
            Shape::TwoCore { p, q, k, .. } => normalize(RawSeifertLink::TwoCore {
                p,
                q,
                k,
                w: k,
                eps1: Sign::Plus,
                eps2: Sign::Plus,
            })
            .expect("reorientation of a valid 2-core link"),
        }
    }
}

impl fmt::Display for SeifertLink {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.0 {
            Shape::HopfSum { plus, minus: 0 } => write!(f, "#{plus} H+"),
            Shape::HopfSum { plus, minus } => write!(f, "#{plus} H+ # {minus} H-"),
            Shape::ZeroCore { p, q, k, w } => write!(f, "L({p},{q};{k},{w})"),
            Shape::OneCore { p, q, k, w, eps } => write!(f, "L({p},{q};{k},{w};{eps})"),
            Shape::TwoCore { p, q, k, w, eps1, eps2 } => {
                write!(f, "L({p},{q};{k},{w};{eps1},{eps2})")
            }
        }
    }
}

pub fn components(link: &SeifertLink) -> usize {
    match link.0 {
        Shape::HopfSum { plus, minus } => (plus + minus + 1) as usize,
        Shape::ZeroCore { k, .. } => k as usize,
        Shape::OneCore { k, .. } => k as usize + 1,
        Shape::TwoCore { k, .. } => k as usize + 2,
    }
}

// ---------------------------------------------------------------------------
// Normalization

/// The rewrite rules, each a partial function on raw tuples. A rule returns
/// `None` when its pattern does not match.
pub(crate) type Rule = fn(&RawSeifertLink) -> Option<RawSeifertLink>;

pub(crate) const RULES: [Rule; 6] = [
    rule_reverse_all,
    rule_absorb_trivial_core,
    rule_sort_pq,
    rule_mixed_sign_order,
    rule_zero_writhe_sign,
    rule_hopf,
];

/// Reversing every component sends `(w, ε₁, ε₂)` to `(-w, -ε₁, -ε₂)`.
fn rule_reverse_all(raw: &RawSeifertLink) -> Option<RawSeifertLink> {
    use RawSeifertLink::*;
    match *raw {
        ZeroCore { p, q, k, w } if w < 0 => Some(ZeroCore { p, q, k, w: -w }),
        OneCore { p, q, k, w, eps } if w < 0 => Some(OneCore { p, q, k, w: -w, eps: eps.flip() }),
        TwoCore { p, q, k, w, eps1, eps2 } if w < 0 => Some(TwoCore {
            p,
            q,
            k,
            w: -w,
            eps1: eps1.flip(),
            eps2: eps2.flip(),
        }),
        _ => None,
    }
}

/// `L(p,1;k,w;ε) = L(p,1;k+1,w+ε)`: a core of the solid torus met once is
/// itself a parallel copy.
fn rule_absorb_trivial_core(raw: &RawSeifertLink) -> Option<RawSeifertLink> {
    match *raw {
        RawSeifertLink::OneCore { p, q: 1, k, w, eps } => {
            Some(RawSeifertLink::ZeroCore { p, q: 1, k: k + 1, w: w + eps.as_i64() })
        }
        _ => None,
    }
}

/// 0-core links, and 2-core links whose exchange of the cores is an
/// isotopy, are symmetric in `p` and `q`.
fn rule_sort_pq(raw: &RawSeifertLink) -> Option<RawSeifertLink> {
    use RawSeifertLink::*;
    match *raw {
        ZeroCore { p, q, k, w } if p > q => Some(ZeroCore { p: q, q: p, k, w }),
        TwoCore { p, q, k, w, eps1, eps2 } if p > q && eps1 == eps2 => {
            Some(TwoCore { p: q, q: p, k, w, eps1, eps2 })
        }
        // with w = 0, swapping the cores and reversing everything are both
        // available, so the whole orbit of a mixed-sign tuple is reachable
        TwoCore { p, q, k, w: 0, eps1, eps2 } if p > q && eps1 != eps2 => {
            Some(TwoCore { p: q, q: p, k, w: 0, eps1: Sign::Plus, eps2: Sign::Minus })
        }
        _ => None,
    }
}

/// `L(p,q;k,w;-,+) = L(q,p;k,w;+,-)`.
fn rule_mixed_sign_order(raw: &RawSeifertLink) -> Option<RawSeifertLink> {
    match *raw {
        RawSeifertLink::TwoCore { p, q, k, w, eps1: Sign::Minus, eps2: Sign::Plus } => {
            Some(RawSeifertLink::TwoCore { p: q, q: p, k, w, eps1: Sign::Plus, eps2: Sign::Minus })
        }
        _ => None,
    }
}

/// With `w = 0` reversal only flips the core signs, so the first sign can be
/// taken positive.
fn rule_zero_writhe_sign(raw: &RawSeifertLink) -> Option<RawSeifertLink> {
    use RawSeifertLink::*;
    match *raw {
        OneCore { p, q, k, w: 0, eps: Sign::Minus } => Some(OneCore { p, q, k, w: 0, eps: Sign::Plus }),
        TwoCore { p, q, k, w: 0, eps1: Sign::Minus, eps2 } => Some(TwoCore {
            p,
            q,
            k,
            w: 0,
            eps1: Sign::Plus,
            eps2: eps2.flip(),
        }),
        _ => None,
    }
}

/// Hopf links in core notation, single Hopf summands and mirror images of
/// Hopf sums.
fn rule_hopf(raw: &RawSeifertLink) -> Option<RawSeifertLink> {
    use RawSeifertLink::*;
    match *raw {
        ZeroCore { p: 1, q: 1, k: 2, .. } => Some(HopfSum { plus: 1, minus: 0 }),
        OneCore { p: 1, k: 1, q, .. } if q >= 2 => Some(HopfSum { plus: 1, minus: 0 }),
        HopfSum { plus, minus } if plus + minus == 1 && plus != 1 => Some(HopfSum { plus: 1, minus: 0 }),
        HopfSum { plus, minus } if minus > plus => Some(HopfSum { plus: minus, minus: plus }),
        _ => None,
    }
}

fn validate(raw: &RawSeifertLink) -> Result<()> {
    let check_core = |p: i64, q: i64, k: i64, w: i64| -> Result<()> {
        if p < 1 || q < 1 {
            return Err(Error::InvalidParameters(format!("p and q must be positive (p = {p}, q = {q})")));
        }
        if k < 1 {
            return Err(Error::InvalidParameters(format!("k must be at least 1 (k = {k})")));
        }
        if p.gcd(&q) != 1 {
            return Err(Error::NotCoprime { p, q });
        }
        if w.abs() > k {
            return Err(Error::InvalidParameters(format!("|w| = {} exceeds k = {k}", w.abs())));
        }
        if (k - w).rem_euclid(2) != 0 {
            return Err(Error::InvalidParameters(format!("w = {w} and k = {k} have different parity")));
        }
        Ok(())
    };
    match *raw {
        RawSeifertLink::HopfSum { plus, minus } => {
            if plus + minus == 0 {
                return Err(Error::InvalidParameters("a Hopf sum needs at least one summand".into()));
            }
            Ok(())
        }
        RawSeifertLink::ZeroCore { p, q, k, w } => check_core(p, q, k, w),
        RawSeifertLink::OneCore { p, q, k, w, .. } => check_core(p, q, k, w),
        RawSeifertLink::TwoCore { p, q, k, w, .. } => {
            check_core(p, q, k, w)?;
            if p.min(q) == 1 {
                return Err(Error::InvalidParameters(
                    "2-core links require p, q > 1".into(),
                ));
            }
            Ok(())
        }
    }
}

fn finish(raw: RawSeifertLink) -> Result<SeifertLink> {
    let shape = match raw {
        RawSeifertLink::HopfSum { plus, minus } => Shape::HopfSum { plus, minus },
        RawSeifertLink::ZeroCore { p, q, k, w } => {
            if k == 1 && p.min(q) == 1 {
                return Err(Error::UnknotInput);
            }
            Shape::ZeroCore { p, q, k, w }
        }
        RawSeifertLink::OneCore { p, q, k, w, eps } => Shape::OneCore { p, q, k, w, eps },
        RawSeifertLink::TwoCore { p, q, k, w, eps1, eps2 } => Shape::TwoCore { p, q, k, w, eps1, eps2 },
    };
    Ok(SeifertLink(shape))
}

/// Runs the rewrite system to its fixed point, choosing among the applicable
/// rules with `pick`. `pick` receives the number of applicable rules and
/// returns the index of the one to fire.
pub(crate) fn normalize_with(raw: RawSeifertLink, mut pick: impl FnMut(usize) -> usize) -> Result<SeifertLink> {
    validate(&raw)?;
    let mut current = raw;
    // every rule strictly decreases (number of negative signs, w < 0, p > q,
    // q = 1 cores, non-canonical Hopf data), so this terminates quickly
    for _ in 0..64 {
        let applicable: Vec<RawSeifertLink> = RULES.iter().filter_map(|rule| rule(&current)).collect();
        if applicable.is_empty() {
            return finish(current);
        }
        current = applicable[pick(applicable.len())];
    }
    unreachable!("normalization did not terminate for {raw:?}")
}

/// Canonical form of a raw parameter tuple.
pub fn normalize(raw: RawSeifertLink) -> Result<SeifertLink> {
    normalize_with(raw, |_| 0)
}

// ---------------------------------------------------------------------------
// Aliases

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum AliasFamily {
    Torus,
    TorusReoriented,
    Pretzel,
    PretzelReoriented1,
    PretzelReoriented2,
}

/// A classical name for a Seifert link, such as `T(2,6)'` or `P(-2,3,4)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LinkAlias {
    pub name: String,
    pub family: AliasFamily,
    pub parameters: Vec<i64>,
}

impl LinkAlias {
    fn new(family: AliasFamily, parameters: Vec<i64>) -> LinkAlias {
        let body = parameters.iter().map(i64::to_string).collect::<Vec<_>>().join(",");
        let name = match family {
            AliasFamily::Torus => format!("T({body})"),
            AliasFamily::TorusReoriented => format!("T({body})'"),
            AliasFamily::Pretzel => format!("P({body})"),
            AliasFamily::PretzelReoriented1 => format!("P({body})'"),
            AliasFamily::PretzelReoriented2 => format!("P({body})''"),
        };
        LinkAlias { name, family, parameters }
    }

    /// Resolves the alias back to its Seifert link.
    pub fn to_link(&self) -> Result<SeifertLink> {
        resolve_alias(self.family, &self.parameters)
    }
}

impl fmt::Display for LinkAlias {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name)
    }
}

/// The torus/pretzel name of a cataloged link, if it has one.
pub fn alias(link: &SeifertLink) -> Option<LinkAlias> {
    use AliasFamily::*;
    use Sign::*;
    let alias = match *link.shape() {
        Shape::HopfSum { plus: 1, minus: 0 } => LinkAlias::new(Torus, vec![2, 2]),
        Shape::HopfSum { .. } => return None,
        Shape::ZeroCore { p, q, k, w } if w == k => LinkAlias::new(Torus, vec![k * p, k * q]),
        Shape::ZeroCore { p: 1, q, k: 2, w: 0 } => LinkAlias::new(TorusReoriented, vec![2, 2 * q]),
        Shape::ZeroCore { p: 1, q: 1, k: 3, w: 1 } => LinkAlias::new(PretzelReoriented1, vec![-2, 2, 2]),
        Shape::OneCore { p: 1, q, k: 2, w: 2, eps: Plus } => LinkAlias::new(Pretzel, vec![-2, 2, 2 * q]),
        Shape::OneCore { p: 1, q, k: 2, w: 0, eps: Plus } => {
            LinkAlias::new(PretzelReoriented1, vec![-2, 2, 2 * q])
        }
        Shape::OneCore { p: 1, q, k: 2, w: 2, eps: Minus } => {
            LinkAlias::new(PretzelReoriented2, vec![-2, 2, 2 * q])
        }
        Shape::OneCore { p: 2, q, k: 1, w: 1, eps: Plus } => LinkAlias::new(Pretzel, vec![-2, 2, q]),
        Shape::OneCore { p: 2, q, k: 1, w: 1, eps: Minus } => {
            LinkAlias::new(PretzelReoriented1, vec![-2, 2, q])
        }
        Shape::OneCore { p: 3, q: 2, k: 1, w: 1, eps: Plus } => LinkAlias::new(Pretzel, vec![-2, 3, 4]),
        Shape::OneCore { p: 3, q: 2, k: 1, w: 1, eps: Minus } => {
            LinkAlias::new(PretzelReoriented1, vec![-2, 3, 4])
        }
        _ => return None,
    };
    Some(alias)
}

/// Maps an alias family and its parameters to the Seifert link it names.
pub fn resolve_alias(family: AliasFamily, params: &[i64]) -> Result<SeifertLink> {
    use AliasFamily::*;
    use Sign::*;
    let unknown = || Error::UnknownAlias(LinkAlias::new(family, params.to_vec()).name);
    match (family, params) {
        (Torus, &[a, b]) => {
            if a < 1 || b < 1 {
                return Err(unknown());
            }
            let d = a.gcd(&b);
            normalize(RawSeifertLink::ZeroCore { p: a / d, q: b / d, k: d, w: d })
        }
        (TorusReoriented, &[a, b]) => {
            let (two, even) = if a == 2 { (a, b) } else { (b, a) };
            if two != 2 || even < 2 || even % 2 != 0 {
                return Err(unknown());
            }
            normalize(RawSeifertLink::ZeroCore { p: 1, q: even / 2, k: 2, w: 0 })
        }
        (_, &[-2, 3, 4]) => match family {
            Pretzel => normalize(RawSeifertLink::OneCore { p: 3, q: 2, k: 1, w: 1, eps: Plus }),
            PretzelReoriented1 => normalize(RawSeifertLink::OneCore { p: 3, q: 2, k: 1, w: 1, eps: Minus }),
            _ => Err(unknown()),
        },
        (Pretzel, &[-2, 3, 3]) => normalize(RawSeifertLink::ZeroCore { p: 3, q: 4, k: 1, w: 1 }),
        (Pretzel, &[-2, 3, 5]) => normalize(RawSeifertLink::ZeroCore { p: 3, q: 5, k: 1, w: 1 }),
        (_, &[-2, 2, x]) if x >= 2 && x % 2 == 0 => {
            let q = x / 2;
            match family {
                Pretzel => normalize(RawSeifertLink::OneCore { p: 1, q, k: 2, w: 2, eps: Plus }),
                PretzelReoriented1 => normalize(RawSeifertLink::OneCore { p: 1, q, k: 2, w: 0, eps: Plus }),
                PretzelReoriented2 => normalize(RawSeifertLink::OneCore { p: 1, q, k: 2, w: 2, eps: Minus }),
                _ => Err(unknown()),
            }
        }
        (_, &[-2, 2, x]) if x >= 3 && x % 2 == 1 => match family {
            Pretzel => normalize(RawSeifertLink::OneCore { p: 2, q: x, k: 1, w: 1, eps: Plus }),
            PretzelReoriented1 => normalize(RawSeifertLink::OneCore { p: 2, q: x, k: 1, w: 1, eps: Minus }),
            _ => Err(unknown()),
        },
        _ => Err(unknown()),
    }
}
