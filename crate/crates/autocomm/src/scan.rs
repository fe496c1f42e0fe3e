//! Catalog-wide verification.

use std::fmt::Write as _;

use autocomm_core::aut::compute_inn;
use autocomm_core::bounds::{self, BoundCheck, CheckKind, Direction, Verdict};
use autocomm_core::catalog::build;
use autocomm_core::degree::{degree_report, pr_commuting, pr_commuting_by_classes, pr_definition, DegreeReport};
use autocomm_core::isoclinism::{
    check_equal_degree, fast_rejection, find_autoisoclinism, verify_witness, Limits, PairedGroups,
};
use autocomm_core::subgroup::enumerate_subgroups;
use autocomm_core::{compute_aut_capped, AutGroup, Error, GroupTable, Instance, Rational, SubgroupSet};
use rayon::prelude::*;

use crate::report::{render_kv, KvRecord};

/// The fixed list of groups scanned by `verify`.
pub const DEFAULT_CATALOG: &[&str] = &[
    "C(1)",
    "C(2)",
    "C(3)",
    "C(4)",
    "C(5)",
    "C(6)",
    "C(7)",
    "C(8)",
    "C(9)",
    "C(10)",
    "C(11)",
    "C(12)",
    "C(13)",
    "C(14)",
    "C(15)",
    "C(16)",
    "C(2)×C(2)",
    "C(2)×C(4)",
    "C(2)×C(2)×C(2)",
    "C(3)×C(3)",
    "D(3)",
    "D(4)",
    "D(5)",
    "D(6)",
    "D(7)",
    "D(8)",
    "Q8",
    "Dic(3)",
    "S(3)",
    "S(4)",
    "A(4)",
    "M16",
];

/// Catalog groups of order at most `max_order`, in catalog order.
pub fn catalog(max_order: usize) -> Vec<GroupTable> {
    DEFAULT_CATALOG
        .iter()
        .map(|name| build(name).expect("catalog names are valid"))
        .filter(|g| g.order() <= max_order)
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Suite {
    Formulas,
    Upper,
    Lower,
    Equalities,
    Equivalence,
    Isoclinism,
    All,
}

impl Suite {
    pub const EACH: [Suite; 6] = [
        Suite::Formulas,
        Suite::Upper,
        Suite::Lower,
        Suite::Equalities,
        Suite::Equivalence,
        Suite::Isoclinism,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Suite::Formulas => "formulas",
            Suite::Upper => "upper",
            Suite::Lower => "lower",
            Suite::Equalities => "equalities",
            Suite::Equivalence => "equivalence",
            Suite::Isoclinism => "isoclinism",
            Suite::All => "all",
        }
    }

    pub fn includes(self, other: Suite) -> bool {
        self == Suite::All || self == other
    }
}

impl std::str::FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Suite::EACH
            .into_iter()
            .chain([Suite::All])
            .find(|x| x.as_str() == s)
            .ok_or_else(|| {
                format!(
                    "unknown suite {s:?}; expected formulas, upper, lower, equalities, equivalence, isoclinism or all"
                )
            })
    }
}

impl std::fmt::Display for Suite {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    Fail,
    Inapplicable,
    /// No instance met the hypothesis, so the statement holds vacuously.
    Vacuous,
    /// A side remark or an open question that did not hold; not a failure.
    Finding,
}

impl Outcome {
    pub fn as_str(self) -> &'static str {
        match self {
            Outcome::Pass => "pass",
            Outcome::Fail => "fail",
            Outcome::Inapplicable => "inapplicable",
            Outcome::Vacuous => "vacuous",
            Outcome::Finding => "finding",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckRecord {
    pub suite: Suite,
    pub group: String,
    pub subgroup: String,
    pub check: String,
    pub outcome: Outcome,
    /// The checked value attains the bound.
    pub equality: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InstanceRow {
    pub group: String,
    pub subgroup: String,
    pub report: DegreeReport,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Counts {
    pub pass: usize,
    pub fail: usize,
    pub inapplicable: usize,
    pub vacuous: usize,
    pub findings: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ScanOptions {
    pub max_order: usize,
    pub suite: Suite,
    pub aut_cap: usize,
    pub limits: Limits,
}

impl Default for ScanOptions {
    fn default() -> Self {
        ScanOptions {
            max_order: 16,
            suite: Suite::All,
            aut_cap: autocomm_core::aut::DEFAULT_AUT_CAP,
            limits: Limits::default(),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ScanReport {
    pub instances: Vec<InstanceRow>,
    pub checks: Vec<CheckRecord>,
    pub warnings: Vec<String>,
}

impl ScanReport {
    pub fn counts(&self) -> Counts {
        let mut c = Counts::default();
        for r in &self.checks {
            match r.outcome {
                Outcome::Pass => c.pass += 1,
                Outcome::Fail => c.fail += 1,
                Outcome::Inapplicable => c.inapplicable += 1,
                Outcome::Vacuous => c.vacuous += 1,
                Outcome::Finding => c.findings += 1,
            }
        }
        c
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckRecord> {
        self.checks.iter().filter(|r| r.outcome == Outcome::Fail)
    }

    pub fn findings(&self) -> impl Iterator<Item = &CheckRecord> {
        self.checks.iter().filter(|r| r.outcome == Outcome::Finding)
    }

    pub fn exit_code(&self) -> i32 {
        if self.counts().fail > 0 {
            1
        } else {
            0
        }
    }

    fn extend(&mut self, other: ScanReport) {
        self.instances.extend(other.instances);
        self.checks.extend(other.checks);
        self.warnings.extend(other.warnings);
    }
}

struct Recorder<'a> {
    suite: Suite,
    group: &'a str,
    subgroup: String,
    out: &'a mut ScanReport,
}

impl Recorder<'_> {
    fn push(&mut self, check: &str, outcome: Outcome, equality: bool, detail: String) {
        self.out.checks.push(CheckRecord {
            suite: self.suite,
            group: self.group.to_string(),
            subgroup: self.subgroup.clone(),
            check: check.to_string(),
            outcome,
            equality,
            detail,
        });
    }

    fn flag(&mut self, check: &str, ok: bool, detail: String) {
        self.push(check, if ok { Outcome::Pass } else { Outcome::Fail }, false, detail);
    }

    fn bound(&mut self, c: &BoundCheck) {
        let rel = match c.direction {
            Direction::Upper => "<=",
            Direction::Lower => ">=",
            Direction::Equal => "=",
        };
        let mut detail = format!("{} {rel} {}", c.value, c.bound);
        if let (Some(p), Some(q)) = (c.p, c.q) {
            let _ = write!(detail, " (p={p}, q={q})");
        }
        if let Some(cond) = c.equality_condition {
            let _ = write!(detail, " equality condition {cond}");
        }
        let outcome = match (c.verdict(), c.kind) {
            (Verdict::Pass, _) => Outcome::Pass,
            (Verdict::Inapplicable, _) => Outcome::Inapplicable,
            (Verdict::Fail, CheckKind::Theorem) => Outcome::Fail,
            (Verdict::Fail, CheckKind::Remark) => Outcome::Finding,
        };
        self.push(c.name, outcome, c.is_equality && c.hypothesis_met, detail);
    }

    fn bounds(&mut self, name: &str, result: autocomm_core::Result<Vec<BoundCheck>>) {
        match result {
            Ok(checks) => checks.iter().for_each(|c| self.bound(c)),
            Err(e) => self.push(name, Outcome::Inapplicable, false, e.to_string()),
        }
    }
}

fn label(g: &GroupTable) -> String {
    g.to_string()
}

/// Runs the selected suites over the catalog. Groups are processed in
/// parallel; records are emitted in catalog order.
pub fn run_scan(opts: &ScanOptions) -> ScanReport {
    let groups = catalog(opts.max_order);
    run_scan_on(&groups, opts)
}

type Prepared = (GroupTable, AutGroup, Vec<SubgroupSet>);

pub fn run_scan_on(groups: &[GroupTable], opts: &ScanOptions) -> ScanReport {
    let prepared: Vec<Result<Prepared, String>> = groups
        .par_iter()
        .map(|g| {
            let a = compute_aut_capped(g, opts.aut_cap).map_err(|e| format!("skipping {}: {e}", label(g)))?;
            let subs = enumerate_subgroups(g).map_err(|e| format!("skipping {}: {e}", label(g)))?;
            Ok((g.clone(), a, subs))
        })
        .collect();

    let mut report = ScanReport::default();
    let mut ready = Vec::new();
    for p in prepared {
        match p {
            Ok(x) => ready.push(x),
            Err(w) => report.warnings.push(w),
        }
    }

    let parts: Vec<ScanReport> = ready
        .par_iter()
        .map(|(g, a, subs)| scan_group(g, a, subs, opts))
        .collect();
    parts.into_iter().for_each(|p| report.extend(p));

    if opts.suite.includes(Suite::Equalities) {
        for (check, what) in [
            ("equality_pq", "(p+q-1)/pq"),
            ("equality_pq2", "(q^2+p-1)/pq^2 with H non-abelian"),
        ] {
            let attained = report
                .checks
                .iter()
                .any(|r| r.check == check && matches!(r.outcome, Outcome::Pass | Outcome::Fail));
            if !attained {
                report.checks.push(CheckRecord {
                    suite: Suite::Equalities,
                    group: "*".into(),
                    subgroup: "*".into(),
                    check: check.into(),
                    outcome: Outcome::Vacuous,
                    equality: false,
                    detail: format!("no scanned instance attains {what}"),
                });
            }
        }
    }

    if opts.suite.includes(Suite::Isoclinism) {
        let whole: Vec<(&GroupTable, &AutGroup)> = ready.iter().map(|(g, a, _)| (g, a)).collect();
        report.extend(scan_isoclinism(&whole, &opts.limits));
    }
    report
}

fn scan_group(g: &GroupTable, a: &AutGroup, subs: &[SubgroupSet], opts: &ScanOptions) -> ScanReport {
    let mut out = ScanReport::default();
    let name = label(g);
    for h in subs {
        let inst = match Instance::new(h, a) {
            Ok(i) => i,
            Err(e) => {
                out.warnings.push(format!("skipping {name} {h}: {e}"));
                continue;
            }
        };
        let report = match degree_report(h, a) {
            Ok(r) => r,
            Err(e) => {
                out.warnings.push(format!("skipping {name} {h}: {e}"));
                continue;
            }
        };
        for suite in Suite::EACH {
            if suite == Suite::Isoclinism || !opts.suite.includes(suite) {
                continue;
            }
            let mut rec = Recorder {
                suite,
                group: &name,
                subgroup: h.to_string(),
                out: &mut out,
            };
            match suite {
                Suite::Formulas => formulas(&mut rec, g, h, &report),
                Suite::Upper => upper(&mut rec, &inst, subs, a),
                Suite::Lower => lower(&mut rec, &inst),
                Suite::Equalities => equalities(&mut rec, &inst),
                Suite::Equivalence => equivalence(&mut rec, &inst),
                _ => {}
            }
        }
        out.instances.push(InstanceRow {
            group: name.clone(),
            subgroup: h.to_string(),
            report,
        });
    }
    out
}

fn formulas(rec: &mut Recorder<'_>, g: &GroupTable, h: &SubgroupSet, r: &DegreeReport) {
    let pr = &r.pr_definition;
    rec.flag(
        "formula_agreement",
        r.formulas_agree(),
        format!(
            "definition {pr}, stabilizer sum {}, fixed sum {}, orbit sum {}",
            r.pr_stab_sum, r.pr_fixed_sum, r.pr_orbit
        ),
    );
    let detail = format!("orbits/|H| = {}, Pr = {pr}", r.pr_orbit_count);
    if r.orbit_forms_agree() {
        rec.push("orbit_count_form", Outcome::Pass, false, detail);
    } else if r.h_invariant {
        rec.push("orbit_count_form", Outcome::Fail, false, detail);
    } else {
        rec.push(
            "orbit_count_form",
            Outcome::Finding,
            false,
            format!("H is not Aut(G)-invariant: {detail}"),
        );
    }
    rec.flag(
        "one_iff_autocentre",
        pr.is_one() == r.h_equals_l,
        format!("Pr = {pr}, H = L: {}", r.h_equals_l),
    );
    let scaled = pr * &Rational::ratio(r.order_h * r.order_aut, 1);
    rec.flag(
        "scaled_count_integer",
        scaled == Rational::ratio(r.fixed_pairs, 1),
        format!("|H||A|·Pr = {scaled}"),
    );
    match (
        pr_definition(h, &compute_inn(g)),
        pr_commuting(h, g),
        pr_commuting_by_classes(h),
    ) {
        (Ok(inn), Ok(comm), Ok(classes)) => {
            rec.flag(
                "inner_equals_commuting",
                inn == comm,
                format!("Pr(H,Inn(G)) = {inn}, Pr(H,G) = {comm}"),
            );
            rec.flag(
                "commuting_by_classes",
                comm == classes,
                format!("pairs {comm}, classes {classes}"),
            );
        }
        (Err(e), _, _) | (_, Err(e), _) | (_, _, Err(e)) => {
            rec.push("inner_equals_commuting", Outcome::Fail, false, e.to_string())
        }
    }
}

fn upper(rec: &mut Recorder<'_>, inst: &Instance, subs: &[SubgroupSet], a: &AutGroup) {
    let h = inst.subgroup();
    for k in subs.iter().filter(|k| h.is_subset_of(k)) {
        match bounds::check_monotonicity(h, k, a) {
            Ok(c) => {
                rec.bound(&c);
                if let Some(last) = rec.out.checks.last_mut() {
                    last.detail = format!("K = {k}: {}", last.detail);
                }
            }
            Err(e) => rec.push("monotonicity", Outcome::Fail, false, e.to_string()),
        }
    }
    rec.bounds("upper_main", bounds::bound_upper_main(inst).map(|c| vec![c]));
    rec.bounds("upper_pq", bounds::bound_upper_pq(inst));
    rec.bounds("upper_nonabelian", bounds::bound_upper_nonabelian(inst));
    rec.bounds("le_commuting", bounds::pr_le_commuting(inst).map(|c| vec![c]));
}

fn lower(rec: &mut Recorder<'_>, inst: &Instance) {
    rec.bounds("lower_main", bounds::bound_lower_main(inst).map(|c| vec![c]));
    rec.bounds("lower_s", bounds::bound_lower_s(inst).map(|c| vec![c]));
    rec.bounds("lower_commutator", bounds::bound_lower_commutator(inst));
}

fn equalities(rec: &mut Recorder<'_>, inst: &Instance) {
    for (name, result) in [
        ("equality_pq", bounds::classify_equality_pq(inst)),
        ("equality_pq2", bounds::classify_equality_pq2(inst)),
    ] {
        match result {
            Ok(Some(e)) => {
                let detail = format!(
                    "Pr = {} (p={}, q={}), pq | |H||A|: {}, |H:L| = {}, quotient matches: {}",
                    e.pr, e.p, e.q, e.divides, e.quotient_order, e.quotient_matches
                );
                rec.push(
                    name,
                    if e.holds() { Outcome::Pass } else { Outcome::Fail },
                    true,
                    detail,
                );
            }
            Ok(None) => rec.push(name, Outcome::Inapplicable, false, format!("Pr = {}", inst.pr())),
            Err(e) => rec.push(name, Outcome::Fail, false, e.to_string()),
        }
    }
    rec.bounds("converse", bounds::converse_check(inst));
}

fn equivalence(rec: &mut Recorder<'_>, inst: &Instance) {
    match bounds::equivalent_conditions(inst) {
        Ok(e) => {
            let v = e.as_array().map(|b| if b { 'T' } else { 'F' });
            let detail = format!("(a)-(e) = {}", v.iter().collect::<String>());
            let outcome = match e.verdict() {
                Verdict::Pass => Outcome::Pass,
                Verdict::Fail => Outcome::Fail,
                Verdict::Inapplicable => Outcome::Finding,
            };
            let detail = if outcome == Outcome::Finding {
                format!("{detail}; H is not Aut(G)-invariant")
            } else {
                detail
            };
            rec.push("equivalence", outcome, e.a, detail);
        }
        Err(e) => rec.push("equivalence", Outcome::Inapplicable, false, e.to_string()),
    }
}

fn pair_label(p: &PairedGroups) -> String {
    label(p.group())
}

/// Reflexive witnesses for every group, then every unordered pair of
/// distinct groups (with `H = G`).
fn scan_isoclinism(groups: &[(&GroupTable, &AutGroup)], limits: &Limits) -> ScanReport {
    let mut out = ScanReport::default();
    let paired: Vec<Result<PairedGroups, String>> = groups
        .par_iter()
        .map(|(g, a)| {
            PairedGroups::new(&SubgroupSet::whole(g), a)
                .map_err(|e| format!("skipping {} for isoclinism: {e}", label(g)))
        })
        .collect();
    let mut ps = Vec::new();
    for p in paired {
        match p {
            Ok(p) => ps.push(p),
            Err(w) => out.warnings.push(w),
        }
    }

    let mut jobs = Vec::new();
    for i in 0..ps.len() {
        for j in i..ps.len() {
            jobs.push((i, j));
        }
    }
    let results: Vec<ScanReport> = jobs
        .par_iter()
        .map(|&(i, j)| isoclinism_pair(&ps[i], &ps[j], limits))
        .collect();
    results.into_iter().for_each(|r| out.extend(r));
    out
}

fn isoclinism_pair(p1: &PairedGroups, p2: &PairedGroups, limits: &Limits) -> ScanReport {
    let mut out = ScanReport::default();
    let reflexive = std::ptr::eq(p1, p2);
    let (n1, n2) = (pair_label(p1), pair_label(p2));
    let mut rec = Recorder {
        suite: Suite::Isoclinism,
        group: &n1,
        subgroup: if reflexive { "itself".into() } else { format!("vs {n2}") },
        out: &mut out,
    };
    if !reflexive && limits.fast_reject && fast_rejection(p1, p2).is_some() {
        return out;
    }
    let check = if reflexive { "reflexive" } else { "pair" };
    match find_autoisoclinism(p1, p2, limits) {
        Ok(Some(w)) => {
            let verified = verify_witness(p1, p2, &w);
            let back = w.inverse().map(|b| verify_witness(p2, p1, &b).is_ok()).unwrap_or(false);
            match (verified, check_equal_degree(p1, p2, &w)) {
                (Ok(()), Ok(c)) => {
                    let ok = c.holds && back;
                    rec.flag(
                        check,
                        ok,
                        format!(
                            "witness verified, degrees {} and {}, inverse verified: {back}",
                            c.value, c.bound
                        ),
                    );
                }
                (Err(d), _) => rec.flag(check, false, format!("witness does not verify: {d}")),
                (_, Err(e)) => rec.flag(check, false, e.to_string()),
            }
        }
        Ok(None) => {
            let degrees = (p1.degree(), p2.degree());
            let detail = match &degrees {
                (Ok(a), Ok(b)) => format!("no witness; degrees {a} and {b}"),
                _ => "no witness".into(),
            };
            // A reflexive pair always admits the identity triple.
            rec.flag(check, !reflexive, detail);
        }
        Err(e @ Error::SizeCap { .. }) => {
            rec.out.warnings.push(format!("skipping isoclinism {n1} vs {n2}: {e}"));
        }
        Err(e @ Error::PairingIllDefined { .. }) => {
            rec.push(
                check,
                Outcome::Finding,
                false,
                format!("autocommutator pairing ill-defined: {e}"),
            );
        }
        Err(e) => rec.flag(check, false, e.to_string()),
    }
    out
}

pub fn check_record(r: &CheckRecord) -> KvRecord {
    let mut k = KvRecord::new("check");
    k.push("suite", r.suite)
        .push("group", &r.group)
        .push("subgroup", &r.subgroup)
        .push("check", &r.check)
        .push("outcome", r.outcome.as_str())
        .push("equality", r.equality)
        .push("detail", &r.detail);
    k
}

fn summary_record(report: &ScanReport, opts: &ScanOptions) -> KvRecord {
    let c = report.counts();
    let mut k = KvRecord::new("summary");
    k.push("suite", opts.suite)
        .push("max_order", opts.max_order)
        .push("instances", report.instances.len())
        .push("pass", c.pass)
        .push("fail", c.fail)
        .push("inapplicable", c.inapplicable)
        .push("vacuous", c.vacuous)
        .push("findings", c.findings)
        .push("warnings", report.warnings.len());
    k
}

pub fn render_scan_kv(report: &ScanReport, opts: &ScanOptions) -> String {
    let mut records: Vec<KvRecord> = report.checks.iter().map(check_record).collect();
    for w in &report.warnings {
        let mut k = KvRecord::new("warning");
        k.push("message", w);
        records.push(k);
    }
    records.push(summary_record(report, opts));
    render_kv(&records)
}

fn line(r: &CheckRecord) -> String {
    format!(
        "  {:<12} {:<28} {:<16} {:<18} {}",
        r.suite.as_str(),
        r.check,
        r.group,
        r.subgroup,
        r.detail
    )
}

pub fn render_scan_human(report: &ScanReport, opts: &ScanOptions) -> String {
    let mut out = String::new();
    let c = report.counts();
    let _ = writeln!(
        out,
        "verify: suite {}, groups of order <= {}, {} instances",
        opts.suite,
        opts.max_order,
        report.instances.len()
    );
    let sections = [
        ("failures", Outcome::Fail),
        ("findings", Outcome::Finding),
        ("vacuous", Outcome::Vacuous),
        ("equality instances", Outcome::Pass),
    ];
    for (title, outcome) in sections {
        let keep = |r: &&CheckRecord| r.outcome == outcome && (outcome != Outcome::Pass || r.equality);
        let rows: Vec<String> = report.checks.iter().filter(keep).map(line).collect();
        if !rows.is_empty() {
            let _ = writeln!(out, "{title} ({}):", rows.len());
            for row in rows {
                let _ = writeln!(out, "{row}");
            }
        }
    }
    for w in &report.warnings {
        let _ = writeln!(out, "warning: {w}");
    }
    let _ = writeln!(
        out,
        "summary: {} pass, {} fail, {} inapplicable, {} vacuous, {} findings",
        c.pass, c.fail, c.inapplicable, c.vacuous, c.findings
    );
    out
}
