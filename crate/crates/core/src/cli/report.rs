//! Classification and cover reports, as JSON values and as text.

use serde::Serialize;
use serde_json::{json, Value};

use crate::alexander;
use crate::classify::{self, ClassificationReport, G4};
use crate::cover::{self, citation, CoverSpec, Evidence, JNData, PsiOutcome, SeifertInvariants, StarStatus};
use crate::error::Result;
use crate::exact::{self, RationalJson};
use crate::laurent::LaurentPoly;
use crate::link::{self, SeifertLink};
use crate::orbifold::{self, BaseOrbifold, ConeOrbifold, FibreCoverData, FiniteGroupTag};

/// Citation keys backing the fields of a classification report.
pub const CLASSIFY_CITATIONS: &[&str] = &[
    "seifert-link-notation-and-normal-form",
    "alexander-polynomial-splice-formulas",
    "alexander-degree-formula",
    "prime-and-fibred-seifert-links",
    "braid-positive-iff-in-p",
    "sqp-seifert-links",
    "genus-zero-seifert-links",
    "four-genus-equals-genus",
    "definite-seifert-links",
    "ade-links-as-seifert-links",
];

#[derive(Debug, Clone, Serialize)]
pub struct ClassifyOutput {
    pub link: String,
    pub normalized: String,
    pub alias: Option<String>,
    pub components: usize,
    pub alexander: LaurentPoly,
    pub alexander_text: String,
    /// `|Δ_L(-1)|` as a decimal string, since it may exceed 64 bits.
    pub determinant: String,
    pub classification: ClassificationReport,
    pub citations: Vec<&'static str>,
}

pub fn classify_report(input: &str, link: &SeifertLink) -> ClassifyOutput {
    let delta = alexander::delta(link);
    ClassifyOutput {
        link: input.to_string(),
        normalized: link.to_string(),
        alias: link::alias(link).map(|a| a.name),
        components: link.components(),
        alexander_text: delta.to_string(),
        alexander: delta,
        determinant: alexander::determinant(link).to_string(),
        classification: classify::classify(link),
        citations: CLASSIFY_CITATIONS.to_vec(),
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

pub fn classify_text(r: &ClassifyOutput) -> String {
    let c = &r.classification;
    let mut lines = vec![
        format!("link:               {}", r.link),
        format!("normalized:         {}", r.normalized),
        format!("alias:              {}", r.alias.as_deref().unwrap_or("-")),
        format!("components:         {}", r.components),
        format!("alexander:          {}", r.alexander_text),
        format!("determinant:        {}", r.determinant),
        format!("genus:              {}", c.genus),
        format!(
            "g4:                 {}",
            match c.g4 {
                G4::Known(g) => g.to_string(),
                G4::StrictlyLessThanGenus => "< genus".to_string(),
            }
        ),
        format!("prime:              {}", yes_no(c.is_prime)),
        format!("fibred:             {}", yes_no(c.is_fibred)),
        format!("braid positive:     {}", yes_no(c.is_braid_positive)),
        format!("sqp:                {}", yes_no(c.is_sqp)),
        format!("genus zero:         {}", yes_no(c.is_genus_zero)),
        format!("g4 = g:             {}", yes_no(c.g4_equals_g)),
        format!("definite:           {}", yes_no(c.is_definite)),
        format!("ade:                {}", c.dynkin.map_or("-".to_string(), |d| d.to_string())),
    ];
    lines.push(format!(
        "ade up to orient.:  {}",
        c.ade_up_to_orientation.map_or("- (not prime)", yes_no)
    ));
    lines.join("\n")
}

#[derive(Debug, Clone, Serialize)]
pub struct OrbifoldJson {
    pub cone_orders: Vec<i64>,
    pub chi: RationalJson,
    pub geometry: orbifold::Geometry,
    pub display: String,
}

impl From<&ConeOrbifold> for OrbifoldJson {
    fn from(o: &ConeOrbifold) -> Self {
        OrbifoldJson {
            cone_orders: o.cone_orders().to_vec(),
            chi: RationalJson(o.chi()),
            geometry: o.geometry(),
            display: o.to_string(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CoverOutput {
    pub link: String,
    pub normalized: String,
    pub alias: Option<String>,
    pub n: i64,
    pub weights: Vec<i64>,
    pub canonical: bool,
    pub b_bar: OrbifoldJson,
    pub fibre: FibreCoverData,
    pub base_orbifold: BaseOrbifold,
    pub pi1_finite: bool,
    pub finite_group: Option<FiniteGroupTag>,
    pub jn: JNData,
    pub jn_lo_sufficient: bool,
    /// Canonical covers only.
    pub status: Option<StarStatus>,
    /// Covers with explicit weights only.
    pub psi_outcome: Option<PsiOutcome>,
    pub seifert_invariants: Option<SeifertInvariants>,
    pub citations: Vec<&'static str>,
}

pub fn cover_report(input: &str, link: &SeifertLink, n: i64, weights: Option<Vec<i64>>) -> Result<CoverOutput> {
    let canonical = weights.is_none();
    let spec = match weights {
        Some(weights) => CoverSpec { n, weights },
        None => CoverSpec::canonical(link, n)?,
    };
    let jn = cover::jn_data(link, &spec)?;
    let b = orbifold::b_bar(link, n)?;
    let mut citations = vec![
        "orbifold-sequence-and-euler-characteristic",
        "fibre-class-order-and-cover-degree",
        citation::FINITE_PI1,
        citation::JANKINS_NEUMANN,
    ];
    let (status, psi_outcome, seifert_invariants) = if canonical {
        let status = cover::canonical_star_status(link, n)?;
        let invariants = match &status.evidence {
            Evidence::NoCtfSeifertObstruction { invariants } => Some(invariants.clone()),
            _ => None,
        };
        citations.push(status.citation);
        (Some(status), None, invariants)
    } else {
        let outcome = cover::general_psi_lo(link, &spec)?;
        if let PsiOutcome::Lo { citation, .. } = &outcome {
            citations.push(citation);
        }
        (None, Some(outcome), None)
    };
    citations.dedup();
    Ok(CoverOutput {
        link: input.to_string(),
        normalized: link.to_string(),
        alias: link::alias(link).map(|a| a.name),
        n,
        weights: spec.weights.clone(),
        canonical,
        b_bar: OrbifoldJson::from(&b),
        fibre: orbifold::fibre_data(link, n)?,
        base_orbifold: orbifold::base_orbifold_sigma_n(link, n)?,
        pi1_finite: orbifold::pi1_sigma_n_finite(link, n)?,
        finite_group: orbifold::finite_group(link, n)?,
        jn_lo_sufficient: cover::jn_lo_sufficient(&jn),
        jn,
        status,
        psi_outcome,
        seifert_invariants,
        citations,
    })
}

fn evidence_text(e: &Evidence) -> String {
    match e {
        Evidence::FinitePi1 { group } => format!("finite fundamental group {group}"),
        Evidence::NoCtfSeifertObstruction { invariants } => {
            format!("Seifert invariants {invariants} admit no co-orientable taut foliation")
        }
        Evidence::PositiveBetti { n } => format!("cyclotomic polynomial of order {n} divides the Alexander polynomial"),
        Evidence::Psl2rRep { jn } => format!("rotation numbers with sum {} give a PSL2(R) representation", exact::display(&jn.sigma)),
        Evidence::Catalog => "cataloged".to_string(),
    }
}

pub fn cover_text(r: &CoverOutput) -> String {
    let thetas: Vec<String> = r.jn.thetas.iter().map(exact::display).collect();
    let mut lines = vec![
        format!("link:             {}", r.link),
        format!("normalized:       {}", r.normalized),
        format!("alias:            {}", r.alias.as_deref().unwrap_or("-")),
        format!("n:                {}", r.n),
        format!(
            "weights:          {}{}",
            r.weights.iter().map(i64::to_string).collect::<Vec<_>>().join(","),
            if r.canonical { " (canonical)" } else { "" }
        ),
        format!("B_n:              {}  chi = {}  ({:?})", r.b_bar.display, exact::display(&r.b_bar.chi.0), r.b_bar.geometry),
        format!("fibre:            s = {}  r = {}  cover degree = {}", r.fibre.s, r.fibre.r, r.fibre.cover_degree),
        format!(
            "base orbifold:    chi = {}{}",
            exact::display(&r.base_orbifold.chi),
            r.base_orbifold.cone.as_ref().map_or(String::new(), |o| format!("  {o}"))
        ),
        format!(
            "pi1 finite:       {}{}",
            yes_no(r.pi1_finite),
            r.finite_group.as_ref().map_or(String::new(), |g| format!("  ({g})"))
        ),
        format!("thetas:           {}", thetas.join(", ")),
        format!("sigma:            {}  (cone points: {})", exact::display(&r.jn.sigma), r.jn.r),
        format!("LO sufficient:    {}", yes_no(r.jn_lo_sufficient)),
    ];
    if let Some(s) = &r.status {
        lines.push(format!("status:           {}", s.verdict));
        lines.push(format!("evidence:         {}", evidence_text(&s.evidence)));
        lines.push(format!("citation:         {}", s.citation));
    }
    if let Some(o) = &r.psi_outcome {
        match o {
            PsiOutcome::Lo { evidence, citation } => {
                lines.push("outcome:          left-orderable".to_string());
                lines.push(format!("evidence:         {}", evidence_text(evidence)));
                lines.push(format!("citation:         {citation}"));
            }
            PsiOutcome::Inconclusive => lines.push("outcome:          inconclusive".to_string()),
        }
    }
    if let Some(s) = &r.seifert_invariants {
        lines.push(format!("seifert inv.:     {s}"));
    }
    lines.join("\n")
}

pub fn to_json<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).unwrap_or_else(|e| json!({ "error": e.to_string() }))
}
