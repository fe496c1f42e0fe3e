//! Command-line interface.

use std::io::Write;

use autocomm_core::aut::DEFAULT_AUT_CAP;
use autocomm_core::degree::degree_report;
use autocomm_core::isoclinism::{
    check_equal_degree, fast_rejection, find_autoisoclinism, verify_witness, Limits, PairedGroups,
    DEFAULT_AUT_WITNESS_CAP, DEFAULT_QUOTIENT_WITNESS_CAP,
};
use autocomm_core::{compute_aut_capped, GroupTable, SubgroupSet};
use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::error::CliError;
use crate::input::{resolve_group, resolve_subgroups, SubgroupSpec};
use crate::report::{degree_record, render_degree_human, render_kv, render_witness_human, witness_record, KvRecord};
use crate::scan::{catalog, render_scan_human, render_scan_kv, run_scan, ScanOptions, Suite};

#[derive(Parser, Debug)]
#[command(
    name = "autocomm",
    version,
    about = "Exact autocommuting probabilities of finite groups"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Human)]
    pub format: Format,

    /// Largest group order for which Aut(G) is computed
    #[arg(long, global = true, default_value_t = DEFAULT_AUT_CAP)]
    pub aut_cap: usize,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Human,
    Kv,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Compute Pr(H, Aut(G)) for one group and one or all subgroups
    Compute(ComputeArgs),
    /// Check every stated bound and identity over the built-in catalog
    Verify(VerifyArgs),
    /// Search for an autoisoclinism between two pairs (H, G)
    Isoclinic(IsoclinicArgs),
    /// Catalog queries
    Groups {
        #[command(subcommand)]
        command: GroupsCommand,
    },
}

#[derive(Args, Debug)]
pub struct ComputeArgs {
    /// Catalog name or table file
    #[arg(conflicts_with = "group_flag")]
    pub group: Option<String>,
    /// all, whole or gens=i,j,...
    #[arg(conflicts_with = "subgroup_flag")]
    pub subgroup: Option<String>,
    #[arg(long = "group", value_name = "FILE|NAME")]
    pub group_flag: Option<String>,
    #[arg(long = "subgroup", value_name = "all|whole|gens=i,j,...")]
    pub subgroup_flag: Option<String>,
}

#[derive(Args, Debug)]
pub struct WitnessCaps {
    /// Largest |Aut(G)| for witness search
    #[arg(long, default_value_t = DEFAULT_AUT_WITNESS_CAP)]
    pub witness_cap: usize,
    /// Largest |H / L(H, Aut(G))| for witness search
    #[arg(long, default_value_t = DEFAULT_QUOTIENT_WITNESS_CAP)]
    pub quotient_cap: usize,
}

impl WitnessCaps {
    fn limits(&self) -> Limits {
        Limits {
            aut_cap: self.witness_cap,
            quotient_cap: self.quotient_cap,
            ..Limits::default()
        }
    }
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[arg(conflicts_with = "max_order_flag")]
    pub max_order: Option<usize>,
    #[arg(conflicts_with = "suite_flag")]
    pub suite: Option<Suite>,
    #[arg(long = "max-order", value_name = "N")]
    pub max_order_flag: Option<usize>,
    /// formulas, upper, lower, equalities, equivalence, isoclinism or all
    #[arg(long = "suite", value_name = "NAME")]
    pub suite_flag: Option<Suite>,
    #[command(flatten)]
    pub caps: WitnessCaps,
}

#[derive(Args, Debug)]
pub struct IsoclinicArgs {
    /// First group (catalog name or table file)
    pub first: String,
    /// Second group
    pub second: String,
    /// Subgroup of the first group
    #[arg(long, default_value = "whole")]
    pub h1: String,
    /// Subgroup of the second group
    #[arg(long, default_value = "whole")]
    pub h2: String,
    #[command(flatten)]
    pub caps: WitnessCaps,
}

#[derive(Subcommand, Debug)]
pub enum GroupsCommand {
    /// List the scan catalog
    List {
        #[arg(long, value_name = "N")]
        max_order: Option<usize>,
    },
}

/// Runs a parsed command, writing the report to `out`. Returns the exit code.
pub fn run(cli: &Cli, out: &mut dyn Write) -> Result<i32, CliError> {
    let text_and_code = match &cli.command {
        Command::Compute(args) => compute(cli, args)?,
        Command::Verify(args) => verify(cli, args),
        Command::Isoclinic(args) => isoclinic(cli, args)?,
        Command::Groups {
            command: GroupsCommand::List { max_order },
        } => (list(cli, *max_order), 0),
    };
    out.write_all(text_and_code.0.as_bytes())
        .map_err(|source| CliError::Io {
            path: "<stdout>".into(),
            source,
        })?;
    Ok(text_and_code.1)
}

fn single_subgroup(g: &GroupTable, spec: &str) -> Result<SubgroupSet, CliError> {
    let spec: SubgroupSpec = spec.parse()?;
    if spec == SubgroupSpec::All {
        return Err(CliError::Usage("isoclinic needs a single subgroup, not all".into()));
    }
    Ok(resolve_subgroups(g, &spec)?.remove(0))
}

fn compute(cli: &Cli, args: &ComputeArgs) -> Result<(String, i32), CliError> {
    let group = args
        .group
        .as_ref()
        .or(args.group_flag.as_ref())
        .ok_or_else(|| CliError::Usage("compute needs a group".into()))?;
    let spec: SubgroupSpec = args
        .subgroup
        .as_ref()
        .or(args.subgroup_flag.as_ref())
        .map_or("whole", |s| s)
        .parse()?;
    let g = resolve_group(group)?;
    let a = compute_aut_capped(&g, cli.aut_cap)?;
    let name = g.to_string();
    let mut text = String::new();
    let mut records = Vec::new();
    let mut code = 0;
    for h in resolve_subgroups(&g, &spec)? {
        let r = degree_report(&h, &a)?;
        if !r.formulas_agree() {
            code = 1;
        }
        match cli.format {
            Format::Human => text.push_str(&render_degree_human(&name, &h, &r)),
            Format::Kv => records.push(degree_record(&name, &h, &r)),
        }
    }
    if cli.format == Format::Kv {
        text = render_kv(&records);
    }
    Ok((text, code))
}

fn verify(cli: &Cli, args: &VerifyArgs) -> (String, i32) {
    let opts = ScanOptions {
        max_order: args.max_order.or(args.max_order_flag).unwrap_or(16),
        suite: args.suite.or(args.suite_flag).unwrap_or(Suite::All),
        aut_cap: cli.aut_cap,
        limits: args.caps.limits(),
    };
    let report = run_scan(&opts);
    let text = match cli.format {
        Format::Human => render_scan_human(&report, &opts),
        Format::Kv => render_scan_kv(&report, &opts),
    };
    (text, report.exit_code())
}

fn isoclinic(cli: &Cli, args: &IsoclinicArgs) -> Result<(String, i32), CliError> {
    let mut pairs = Vec::new();
    for (spec, sub) in [(&args.first, &args.h1), (&args.second, &args.h2)] {
        let g = resolve_group(spec)?;
        let h = single_subgroup(&g, sub)?;
        let a = compute_aut_capped(&g, cli.aut_cap)?;
        pairs.push(PairedGroups::new(&h, &a)?);
    }
    let (p1, p2) = (&pairs[0], &pairs[1]);
    let (d1, d2) = (p1.degree()?, p2.degree()?);
    let limits = args.caps.limits();
    let rejection = fast_rejection(p1, p2);
    let found = find_autoisoclinism(p1, p2, &limits)?;

    let mut rec = KvRecord::new("isoclinism");
    rec.push("first", p1.group())
        .push("first_subgroup", p1.subgroup())
        .push("second", p2.group())
        .push("second_subgroup", p2.subgroup())
        .push("degree_first", &d1)
        .push("degree_second", &d2);
    let mut human = format!(
        "({}, {}) vs ({}, {})\n  degrees {d1} and {d2}\n",
        p1.subgroup(),
        p1.group(),
        p2.subgroup(),
        p2.group()
    );
    let mut code = 0;
    let mut records = vec![];
    match found {
        Some(w) => {
            let verified = verify_witness(p1, p2, &w);
            let equal = check_equal_degree(p1, p2, &w).map(|c| c.holds).unwrap_or(false);
            if verified.is_err() || !equal {
                code = 1;
            }
            rec.push("witness", true)
                .push("verified", verified.is_ok())
                .push("degrees_equal", equal);
            human.push_str("  witness found\n");
            human.push_str(&render_witness_human(&w));
            match &verified {
                Ok(()) => human.push_str("  witness verified\n"),
                Err(d) => human.push_str(&format!("  witness rejected: {d}\n")),
            }
            human.push_str(&format!("  degrees equal: {}\n", crate::report::yes_no(equal)));
            records.push(rec);
            records.push(witness_record(&w));
        }
        None => {
            let reason = match rejection.filter(|_| limits.fast_reject) {
                Some(r) => format!("fast rejection: {r}"),
                None => "exhaustive search".to_string(),
            };
            rec.push("witness", false).push("reason", &reason);
            human.push_str(&format!("  no witness ({reason})\n"));
            records.push(rec);
        }
    }
    let text = match cli.format {
        Format::Human => human,
        Format::Kv => render_kv(&records),
    };
    Ok((text, code))
}

fn list(cli: &Cli, max_order: Option<usize>) -> String {
    let groups = catalog(max_order.unwrap_or(usize::MAX));
    match cli.format {
        Format::Human => groups
            .iter()
            .map(|g| format!("{:<16} order {:>2}\n", g.to_string(), g.order()))
            .collect(),
        Format::Kv => {
            let records: Vec<KvRecord> = groups
                .iter()
                .map(|g| {
                    let mut r = KvRecord::new("group");
                    r.push("name", g).push("order", g.order());
                    r
                })
                .collect();
            render_kv(&records)
        }
    }
}
