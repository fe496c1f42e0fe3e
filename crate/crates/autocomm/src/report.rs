//! Human-readable and key-value renderings.
//!
//! The key-value format is one `key=value` per line, records separated by
//! a blank line. Every record starts with `record=<kind>`. Rationals are
//! written as `a/b`.

use std::fmt::Write as _;

use autocomm_core::degree::DegreeReport;
use autocomm_core::isoclinism::IsoclinismWitness;
use autocomm_core::{GroupHom, Rational, SubgroupSet};
use thiserror::Error;

/// Formats `x` with six significant digits.
pub fn sig6(x: f64) -> String {
    if x == 0.0 || !x.is_finite() {
        return format!("{x}");
    }
    let magnitude = x.abs().log10().floor() as i32;
    let decimals = (5 - magnitude).max(0) as usize;
    format!("{x:.decimals$}")
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct KvRecord {
    fields: Vec<(String, String)>,
}

impl KvRecord {
    pub fn new(kind: &str) -> Self {
        let mut r = KvRecord::default();
        r.push("record", kind);
        r
    }

    pub fn push(&mut self, key: &str, value: impl ToString) -> &mut Self {
        self.fields.push((key.to_string(), value.to_string()));
        self
    }

    pub fn kind(&self) -> Option<&str> {
        self.get("record")
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.fields.iter().find(|(k, _)| k == key).map(|(_, v)| v.as_str())
    }

    pub fn rational(&self, key: &str) -> Option<Rational> {
        self.get(key)?.parse().ok()
    }

    pub fn usize(&self, key: &str) -> Option<usize> {
        self.get(key)?.parse().ok()
    }

    pub fn fields(&self) -> &[(String, String)] {
        &self.fields
    }
}

impl std::fmt::Display for KvRecord {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for (k, v) in &self.fields {
            writeln!(f, "{k}={v}")?;
        }
        Ok(())
    }
}

pub fn render_kv(records: &[KvRecord]) -> String {
    let parts: Vec<String> = records.iter().map(|r| r.to_string()).collect();
    parts.join("\n")
}

#[derive(Debug, Error, PartialEq, Eq)]
#[error("line {line}: expected key=value, found {text:?}")]
pub struct KvError {
    pub line: usize,
    pub text: String,
}

pub fn parse_kv(text: &str) -> Result<Vec<KvRecord>, KvError> {
    let mut out = Vec::new();
    let mut current = KvRecord::default();
    for (i, line) in text.lines().enumerate() {
        if line.trim().is_empty() {
            if !current.fields.is_empty() {
                out.push(std::mem::take(&mut current));
            }
            continue;
        }
        let (k, v) = line.split_once('=').ok_or_else(|| KvError {
            line: i + 1,
            text: line.into(),
        })?;
        current.fields.push((k.to_string(), v.to_string()));
    }
    if !current.fields.is_empty() {
        out.push(current);
    }
    Ok(out)
}

fn orbit_list(report: &DegreeReport) -> String {
    let parts: Vec<String> = report
        .orbits
        .iter()
        .map(|o| {
            let m: Vec<String> = o.members().iter().map(|x| x.to_string()).collect();
            format!("{{{}}}", m.join(","))
        })
        .collect();
    parts.join(" ")
}

pub fn degree_record(group: &str, h: &SubgroupSet, report: &DegreeReport) -> KvRecord {
    let mut r = KvRecord::new("degree");
    r.push("group", group)
        .push("subgroup", h)
        .push("order_h", report.order_h)
        .push("order_aut", report.order_aut)
        .push("order_l", report.order_l)
        .push("order_s", report.order_s)
        .push("order_commutator", report.order_commutator)
        .push("order_x", report.order_x)
        .push("order_x_literal", report.order_x_literal)
        .push("fixed_pairs", report.fixed_pairs)
        .push("pr_definition", &report.pr_definition)
        .push("pr_stab_sum", &report.pr_stab_sum)
        .push("pr_fixed_sum", &report.pr_fixed_sum)
        .push("pr_orbit", &report.pr_orbit)
        .push("pr_orbit_count", &report.pr_orbit_count)
        .push("h_invariant", report.h_invariant)
        .push("h_equals_l", report.h_equals_l)
        .push("formulas_agree", report.formulas_agree())
        .push("orbits", orbit_list(report));
    r
}

pub fn render_degree_human(group: &str, h: &SubgroupSet, report: &DegreeReport) -> String {
    let mut out = String::new();
    let pr = &report.pr_definition;
    let _ = writeln!(out, "G = {group}, H = {h}");
    let _ = writeln!(
        out,
        "  |H| = {}  |Aut(G)| = {}  |L| = {}  |S| = {}  |[H,Aut(G)]| = {}  |X_H| = {} (literal {})",
        report.order_h,
        report.order_aut,
        report.order_l,
        report.order_s,
        report.order_commutator,
        report.order_x,
        report.order_x_literal
    );
    let rows = [
        ("definition", &report.pr_definition),
        ("stabilizer sum", &report.pr_stab_sum),
        ("fixed-subgroup sum", &report.pr_fixed_sum),
        ("orbit sum", &report.pr_orbit),
        ("orbits / |H|", &report.pr_orbit_count),
    ];
    for (label, value) in rows {
        let _ = writeln!(
            out,
            "  Pr {label:<20} {:<10} {}",
            value.to_string(),
            sig6(value.to_f64())
        );
    }
    let _ = writeln!(
        out,
        "  fixed pairs {}, formulas agree: {}",
        report.fixed_pairs,
        yes_no(report.formulas_agree())
    );
    if !report.orbit_forms_agree() {
        let _ = writeln!(
            out,
            "  note: H is not Aut(G)-invariant, orbit count differs from Pr = {pr}"
        );
    }
    let _ = writeln!(out, "  orbits: {}", orbit_list(report));
    out
}

pub fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

/// `0:0,1:2,...`
pub fn mapping(f: &GroupHom) -> String {
    let parts: Vec<String> = f.image().iter().enumerate().map(|(i, y)| format!("{i}:{y}")).collect();
    parts.join(",")
}

pub fn parse_mapping(text: &str) -> Option<Vec<usize>> {
    let mut out = Vec::new();
    for (i, part) in text.split(',').filter(|p| !p.is_empty()).enumerate() {
        let (from, to) = part.split_once(':')?;
        if from.parse::<usize>().ok()? != i {
            return None;
        }
        out.push(to.parse().ok()?);
    }
    Some(out)
}

pub fn witness_record(w: &IsoclinismWitness) -> KvRecord {
    let mut r = KvRecord::new("witness");
    r.push("psi", mapping(&w.psi))
        .push("gamma", mapping(&w.gamma))
        .push("beta", mapping(&w.beta));
    r
}

pub fn render_witness_human(w: &IsoclinismWitness) -> String {
    let mut out = String::new();
    for (label, map, domain) in [
        ("psi", &w.psi, "cosets of L"),
        ("gamma", &w.gamma, "automorphisms"),
        ("beta", &w.beta, "elements of [H,Aut(G)]"),
    ] {
        let _ = writeln!(out, "  {label} on {domain}:");
        let from: Vec<String> = (0..map.image().len()).map(|i| format!("{i:>3}")).collect();
        let to: Vec<String> = map.image().iter().map(|y| format!("{y:>3}")).collect();
        let _ = writeln!(out, "    {}", from.join(""));
        let _ = writeln!(out, "    {}", to.join(""));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn significant_digits() {
        assert_eq!(sig6(0.75), "0.750000");
        assert_eq!(sig6(2.0 / 3.0), "0.666667");
        assert_eq!(sig6(1.0), "1.00000");
        assert_eq!(sig6(0.0375), "0.0375000");
    }

    #[test]
    fn kv_parsing() {
        let recs = parse_kv("record=a\nx=1/2\n\n\nrecord=b\ny=z=w\n").unwrap();
        assert_eq!(recs.len(), 2);
        assert_eq!(recs[0].rational("x"), Some(Rational::new(1, 2)));
        assert_eq!(recs[1].get("y"), Some("z=w"));
        assert_eq!(parse_kv("oops").unwrap_err().line, 1);
    }

    #[test]
    fn mapping_round_trip() {
        assert_eq!(parse_mapping("0:0,1:2,2:1"), Some(vec![0, 2, 1]));
        assert_eq!(parse_mapping("1:0"), None);
    }
}
