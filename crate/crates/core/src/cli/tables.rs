//! Reference tables regenerated from the library.

use serde::Serialize;
use serde_json::{json, Map, Value};

use crate::alexander;
use crate::classify::{self, DynkinFamily, DynkinType};
use crate::cover::{self, Verdict};
use crate::error::{Error, Result};
use crate::exact::{self, RationalJson};
use crate::link::{self, SeifertLink, Sign};
use crate::orbifold::{self, FiniteGroupTag};

pub const TABLE_NAMES: [&str; 5] = ["ade-2fold", "spherical", "euclidean", "higher-finite", "canonical-status"];

/// Largest Dynkin index in the generated tables.
pub const MAX_M: u32 = 12;
/// Largest `q` for the one-parameter families.
pub const MAX_Q: i64 = 6;
/// Largest cover degree.
pub const MAX_N: i64 = 12;

#[derive(Debug, Clone, Serialize)]
pub struct Table {
    pub name: String,
    pub columns: Vec<String>,
    pub rows: Vec<Map<String, Value>>,
}

impl Table {
    fn new(name: &str, columns: &[&str]) -> Table {
        Table { name: name.to_string(), columns: columns.iter().map(|c| c.to_string()).collect(), rows: vec![] }
    }

    fn push(&mut self, values: Vec<Value>) {
        assert_eq!(values.len(), self.columns.len());
        self.rows.push(self.columns.iter().cloned().zip(values).collect());
    }

    /// Cell text for column `col` of row `i`.
    pub fn cell(&self, i: usize, col: &str) -> String {
        match self.rows[i].get(col) {
            Some(Value::String(s)) => s.clone(),
            Some(Value::Null) | None => "-".to_string(),
            Some(Value::Object(o)) if o.contains_key("num") && o.contains_key("den") => {
                let (n, d) = (o["num"].as_i64().unwrap_or(0), o["den"].as_i64().unwrap_or(1));
                exact::display(&exact::Rational::new(n, d))
            }
            Some(v) => v.to_string(),
        }
    }

    pub fn to_text(&self) -> String {
        let mut widths: Vec<usize> = self.columns.iter().map(|c| c.chars().count()).collect();
        let cells: Vec<Vec<String>> = (0..self.rows.len())
            .map(|i| self.columns.iter().map(|c| self.cell(i, c)).collect())
            .collect();
        for row in &cells {
            for (w, cell) in widths.iter_mut().zip(row) {
                *w = (*w).max(cell.chars().count());
            }
        }
        let render = |row: &[String]| {
            row.iter()
                .zip(&widths)
                .map(|(c, &w)| format!("{c:<w$}"))
                .collect::<Vec<_>>()
                .join("  ")
                .trim_end()
                .to_string()
        };
        let mut out = vec![render(&self.columns)];
        out.push(widths.iter().map(|&w| "-".repeat(w)).collect::<Vec<_>>().join("  "));
        out.extend(cells.iter().map(|r| render(r)));
        out.join("\n")
    }
}

pub fn table(name: &str) -> Result<Table> {
    match name {
        "ade-2fold" => Ok(ade_2fold()),
        "spherical" => Ok(spherical()),
        "euclidean" => Ok(euclidean()),
        "higher-finite" => Ok(higher_finite()),
        "canonical-status" => Ok(canonical_status()),
        _ => Err(Error::UnknownTable(name.to_string())),
    }
}

/// `A_m` and `D_m` with index at most `max_m`, followed by the three exceptional types.
pub fn dynkin_types(max_m: u32) -> Vec<DynkinType> {
    let mut out: Vec<DynkinType> = (1..=max_m).map(DynkinType::a).collect();
    out.extend((4..=max_m).map(DynkinType::d));
    out.extend([6, 7, 8].map(DynkinType::e));
    out
}

/// The links of the reference table of ADE links up to orientation, with `q ≤ max_q`.
pub fn table_one_links(max_q: i64) -> Vec<SeifertLink> {
    use Sign::*;
    let mut out = Vec::new();
    for q in 1..=max_q {
        out.push(SeifertLink::zero_core(1, q, 2, 2));
        if q >= 2 {
            out.push(SeifertLink::zero_core(1, q, 2, 0));
        }
        out.push(SeifertLink::one_core(1, q, 2, 2, Plus));
        out.push(SeifertLink::one_core(1, q, 2, 0, Plus));
        out.push(SeifertLink::one_core(1, q, 2, 2, Minus));
        if q >= 3 && q % 2 == 1 {
            out.push(SeifertLink::zero_core(2, q, 1, 1));
            out.push(SeifertLink::one_core(2, q, 1, 1, Plus));
            out.push(SeifertLink::one_core(2, q, 1, 1, Minus));
        }
    }
    out.push(SeifertLink::one_core(3, 2, 1, 1, Plus));
    out.push(SeifertLink::one_core(3, 2, 1, 1, Minus));
    out.push(SeifertLink::zero_core(3, 4, 1, 1));
    out.push(SeifertLink::zero_core(3, 5, 1, 1));
    let mut links: Vec<SeifertLink> = out.into_iter().map(|l| l.expect("table links are valid")).collect();
    links.sort();
    links.dedup();
    links
}

/// Table-one links together with every ADE link of index at most `max_m`.
pub fn status_grid_links(max_q: i64, max_m: u32) -> Vec<SeifertLink> {
    let mut links = table_one_links(max_q);
    links.extend(dynkin_types(max_m).into_iter().map(|t| classify::ade_link(t).expect("ADE link")));
    links.sort();
    links.dedup();
    links
}

fn name(l: &SeifertLink) -> Value {
    json!(l.to_string())
}

fn alias(l: &SeifertLink) -> Value {
    link::alias(l).map_or(Value::Null, |a| json!(a.name))
}

/// Expected group and determinant of the double branched cover, by Dynkin type.
fn ade_expectation(d: DynkinType) -> (FiniteGroupTag, i64) {
    let m = d.index as i64;
    match (d.family, m) {
        (DynkinFamily::A, _) => (FiniteGroupTag::Cyclic(m + 1), m + 1),
        (DynkinFamily::D, _) => (FiniteGroupTag::BinaryDihedral(m - 2), 4),
        (DynkinFamily::E, 6) => (FiniteGroupTag::BinaryTetrahedral, 3),
        (DynkinFamily::E, 7) => (FiniteGroupTag::BinaryOctahedral, 2),
        _ => (FiniteGroupTag::BinaryIcosahedral, 1),
    }
}

/// One row per Dynkin family. Each row is checked against every instance with index at most
/// [`MAX_M`]; a column reads `mismatch` if any instance disagrees.
fn ade_2fold() -> Table {
    let mut t = Table::new("ade-2fold", &["diagram", "link", "pi1", "determinant", "instances"]);
    let families: [(&str, &str, &str, &str, Vec<DynkinType>); 5] = [
        ("A_m", "T(2,m+1)", "C_{m+1}", "m+1", (1..=MAX_M).map(DynkinType::a).collect()),
        ("D_m", "P(-2,2,m-2)", "D*_{m-2}", "4", (4..=MAX_M).map(DynkinType::d).collect()),
        ("E6", "T(3,4)", "T*", "3", vec![DynkinType::e(6)]),
        ("E7", "P(-2,3,4)", "O*", "2", vec![DynkinType::e(7)]),
        ("E8", "T(3,5)", "I*", "1", vec![DynkinType::e(8)]),
    ];
    for (diagram, link_name, group, det, instances) in families {
        let (mut group_ok, mut det_ok) = (true, true);
        for &d in &instances {
            let l = classify::ade_link(d).expect("ADE link");
            let (want_group, want_det) = ade_expectation(d);
            group_ok &= orbifold::finite_group(&l, 2).ok().flatten() == Some(want_group);
            det_ok &= alexander::determinant(&l) == want_det.into();
        }
        let names: Vec<String> = instances.iter().map(DynkinType::to_string).collect();
        t.push(vec![
            json!(diagram),
            json!(link_name),
            json!(if group_ok { group } else { "mismatch" }),
            json!(if det_ok { det } else { "mismatch" }),
            json!(names.join(",")),
        ]);
    }
    t
}

/// `(n, family, positively oriented representative)` rows of the spherical table.
pub fn spherical_rows() -> Vec<(i64, String, SeifertLink)> {
    use Sign::Plus;
    let mut rows = Vec::new();
    for n in 2..=MAX_N {
        rows.push((n, "L(1,1;2,w)".to_string(), SeifertLink::hopf()));
    }
    for q in 2..=MAX_Q {
        rows.push((2, format!("L(1,{q};2,w)"), SeifertLink::zero_core(1, q, 2, 2).unwrap()));
    }
    for q in (3..=MAX_Q).filter(|q| q % 2 == 1) {
        rows.push((2, format!("L(2,{q};1,1)"), SeifertLink::zero_core(2, q, 1, 1).unwrap()));
    }
    for q in 1..=MAX_Q {
        rows.push((2, format!("L(1,{q};2,w;e)"), SeifertLink::one_core(1, q, 2, 2, Plus).unwrap()));
    }
    for q in (3..=MAX_Q).filter(|q| q % 2 == 1) {
        rows.push((2, format!("L(2,{q};1,1;e)"), SeifertLink::one_core(2, q, 1, 1, Plus).unwrap()));
    }
    rows.push((2, "L(3,4;1,1)".into(), SeifertLink::zero_core(3, 4, 1, 1).unwrap()));
    rows.push((2, "L(3,2;1,1;e)".into(), SeifertLink::one_core(3, 2, 1, 1, Plus).unwrap()));
    rows.push((2, "L(3,5;1,1)".into(), SeifertLink::zero_core(3, 5, 1, 1).unwrap()));
    rows.push((3, "L(2,3;1,1)".into(), SeifertLink::zero_core(2, 3, 1, 1).unwrap()));
    rows.push((3, "L(1,2;2,w)".into(), SeifertLink::zero_core(1, 2, 2, 2).unwrap()));
    rows.push((3, "L(2,5;1,1)".into(), SeifertLink::zero_core(2, 5, 1, 1).unwrap()));
    rows.push((4, "L(2,3;1,1)".into(), SeifertLink::zero_core(2, 3, 1, 1).unwrap()));
    rows.push((5, "L(2,3;1,1)".into(), SeifertLink::zero_core(2, 3, 1, 1).unwrap()));
    rows
}

fn spherical() -> Table {
    let mut t = Table::new("spherical", &["n", "family", "b_bar", "chi", "positive_form", "diagram"]);
    for (n, family, l) in spherical_rows() {
        let b = orbifold::b_bar(&l, n).expect("prime");
        t.push(vec![
            json!(n),
            json!(family),
            json!(b.to_string()),
            json!(RationalJson(b.chi())),
            name(&l),
            classify::is_ade(&l).map_or(Value::Null, |d| json!(d.to_string())),
        ]);
    }
    t
}

/// `(n, family, positively oriented representative)` rows of the Euclidean table.
pub fn euclidean_rows() -> Vec<(i64, String, SeifertLink)> {
    vec![
        (2, "L(1,2;3,w)".into(), SeifertLink::zero_core(1, 2, 3, 3).unwrap()),
        (2, "L(1,1;4,w)".into(), SeifertLink::zero_core(1, 1, 4, 4).unwrap()),
        (3, "L(1,3;2,w)".into(), SeifertLink::zero_core(1, 3, 2, 2).unwrap()),
        (3, "L(1,1;3,w)".into(), SeifertLink::zero_core(1, 1, 3, 3).unwrap()),
        (4, "L(1,2;2,w)".into(), SeifertLink::zero_core(1, 2, 2, 2).unwrap()),
        (6, "L(2,3;1,1)".into(), SeifertLink::zero_core(2, 3, 1, 1).unwrap()),
    ]
}

fn euclidean() -> Table {
    let mut t = Table::new("euclidean", &["n", "family", "b_bar", "chi", "positive_form", "delta_vanishes_at_root"]);
    for (n, family, l) in euclidean_rows() {
        let b = orbifold::b_bar(&l, n).expect("prime");
        t.push(vec![
            json!(n),
            json!(family),
            json!(b.to_string()),
            json!(RationalJson(b.chi())),
            name(&l),
            json!(alexander::cyclotomic_divides(n as u64, &l)),
        ]);
    }
    t
}

fn higher_finite() -> Table {
    let mut t = Table::new("higher-finite", &["link", "alias", "n=3", "n=4", "n=5"]);
    let links = [
        SeifertLink::hopf(),
        SeifertLink::zero_core(2, 3, 1, 1).unwrap(),
        SeifertLink::zero_core(1, 2, 2, 2).unwrap(),
        SeifertLink::zero_core(2, 5, 1, 1).unwrap(),
    ];
    for l in links {
        let mut row = vec![name(&l), alias(&l)];
        for n in 3..=5 {
            let g = orbifold::finite_group(&l, n).expect("prime");
            row.push(json!(g.map_or("infinite".to_string(), |g| g.to_string())));
        }
        t.push(row);
    }
    t
}

fn canonical_status() -> Table {
    let mut cols = vec!["link".to_string(), "alias".to_string(), "threshold".to_string()];
    cols.extend((2..=MAX_N).map(|n| format!("n={n}")));
    let col_refs: Vec<&str> = cols.iter().map(String::as_str).collect();
    let mut t = Table::new("canonical-status", &col_refs);
    for l in status_grid_links(MAX_Q, MAX_M) {
        let threshold = if cover::always_not_star(&l) {
            json!("all")
        } else {
            cover::threshold(&l).map_or(json!("none"), |n| json!(n))
        };
        let mut row = vec![name(&l), alias(&l), threshold];
        for n in 2..=MAX_N {
            let s = cover::canonical_star_status(&l, n).expect("prime link");
            row.push(json!(match s.verdict {
                Verdict::Star => "*",
                Verdict::NotStar => "not *",
            }));
        }
        t.push(row);
    }
    t
}
