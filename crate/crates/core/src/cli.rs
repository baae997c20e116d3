//! Command-line front end. Every subcommand produces byte-identical output
//! for identical invocations; rationals are printed in lowest terms, never
//! as decimals.

use crate::classify::{self, Report, ReportFilter};
use crate::cyclic;
use crate::determinantal::{self, DetPairSpec, SingularityTag};
use crate::error::Result;
use crate::oracle;
use crate::picard;
use crate::rational::{rat_int, render};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use std::path::PathBuf;

#[derive(Debug, Parser)]
#[command(
    name = "modsing",
    about = "Exact calculator for singularities and canonical classes of spaces of rational curves",
    version
)]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Text)]
    pub format: OutputFormat,

    /// Write output to a file instead of standard output.
    #[arg(long, global = true, value_name = "PATH")]
    pub out: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Log discrepancies and singularity class of a generic determinantal pair.
    Discrepancy {
        /// Source bundle rank.
        #[arg(long)]
        g: u32,
        /// Target bundle rank.
        #[arg(long)]
        f: u32,
        /// Integer multiplicity on the stratum.
        #[arg(long)]
        q: u32,
        /// Stratum rank (0 <= k <= g-1).
        #[arg(long)]
        k: u32,
        /// Tower level to compute from.
        #[arg(long = "base-r", default_value_t = 0)]
        base_r: u32,
    },
    /// Stabilizer invariant of the tangent space at a degree-e multiple cover of a line.
    Rsbt {
        /// Ambient projective dimension.
        #[arg(long)]
        n: u32,
        /// Map degree.
        #[arg(long)]
        e: u32,
        /// Cyclic stabilizer order (must divide e).
        #[arg(long)]
        r: u32,
    },
    /// Canonical divisor class on the space of degree-e rational curves in a hypersurface.
    CanonicalClass {
        /// Ambient projective dimension.
        #[arg(long)]
        n: u32,
        /// Hypersurface degree.
        #[arg(long)]
        d: u32,
        /// Map degree.
        #[arg(long)]
        e: u32,
        /// Number of marked points.
        #[arg(long, default_value_t = 0)]
        marks: u32,
        /// Complete-intersection degrees d1,d2,... (overrides --d).
        #[arg(long, value_delimiter = ',', num_args = 1..)]
        tuple: Option<Vec<u32>>,
    },
    /// Full classification report for a triple (n, d, e).
    Classify {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        d: u32,
        #[arg(long)]
        e: u32,
    },
    /// Classification reports over inclusive ranges A..B.
    Scan {
        #[arg(long, value_parser = parse_range)]
        n: (u32, u32),
        #[arg(long, value_parser = parse_range)]
        d: (u32, u32),
        #[arg(long, value_parser = parse_range)]
        e: (u32, u32),
        /// Keep only matching reports (theorem_applies, big,
        /// general_type_conditional, klt, iso_away_codim2, gorenstein=VALUE,
        /// coarse=VALUE).
        #[arg(long)]
        filter: Option<String>,
    },
    /// Exhaustive matrix rank census over a prime field.
    Oracle {
        /// Field size (2, 3, 5 or 7).
        #[arg(long)]
        p: u32,
        /// Number of rows.
        #[arg(long)]
        g: u32,
        /// Number of columns.
        #[arg(long)]
        f: u32,
    },
}

fn parse_range(s: &str) -> std::result::Result<(u32, u32), String> {
    let one = |t: &str| {
        t.trim()
            .parse::<u32>()
            .map_err(|_| format!("invalid integer `{t}` in range"))
    };
    if let Some((lo, hi)) = s.split_once("..") {
        let (lo, hi) = (one(lo)?, one(hi)?);
        if lo > hi {
            return Err(format!("empty range `{s}`; expected A..B with A <= B"));
        }
        Ok((lo, hi))
    } else {
        let v = one(s)?;
        Ok((v, v))
    }
}

/// Runs a parsed invocation and returns the complete output text.
pub fn run(cli: &Cli) -> Result<String> {
    match &cli.command {
        Command::Discrepancy { g, f, q, k, base_r } => {
            discrepancy_output(*g, *f, *q, *k, *base_r, cli.format)
        }
        Command::Rsbt { n, e, r } => rsbt_output(*n, *e, *r, cli.format),
        Command::CanonicalClass { n, d, e, marks, tuple } => {
            canonical_class_output(*n, *d, *e, *marks, tuple.as_deref(), cli.format)
        }
        Command::Classify { n, d, e } => {
            let report = classify::full_report(*n, *d, *e)?;
            Ok(match cli.format {
                OutputFormat::Text => report_text(&report),
                OutputFormat::Json => pretty_json(&report),
                OutputFormat::Csv => classify::reports_to_csv(std::slice::from_ref(&report)),
            })
        }
        Command::Scan { n, d, e, filter } => {
            let filter = filter.as_deref().map(str::parse::<ReportFilter>).transpose()?;
            let reports = classify::scan(*n, *d, *e, filter.as_ref())?;
            Ok(match cli.format {
                OutputFormat::Text => {
                    let mut out = String::new();
                    for report in &reports {
                        out.push_str(&scan_line(report));
                        out.push('\n');
                    }
                    out
                }
                OutputFormat::Json => pretty_json(&reports),
                OutputFormat::Csv => classify::reports_to_csv(&reports),
            })
        }
        Command::Oracle { p, g, f } => oracle_output(*p, *g, *f, cli.format),
    }
}

#[derive(Serialize)]
struct LevelValue {
    i: u32,
    a: i64,
}

#[derive(Serialize)]
struct DiscrepancyOutput {
    g: u32,
    f: u32,
    q: u32,
    k: u32,
    base_r: u32,
    log_discrepancies: Vec<LevelValue>,
    class: SingularityTag,
    mld: Option<String>,
}

fn discrepancy_output(g: u32, f: u32, q: u32, k: u32, base_r: u32, format: OutputFormat) -> Result<String> {
    let pair = DetPairSpec::new(g, f, q, k, base_r)?;
    let values = determinantal::log_discrepancies(&pair);
    let class = determinantal::classify_pair(&pair);
    let mld = class.mld.as_ref().map(render);
    match format {
        OutputFormat::Text => {
            let mut out = format!("pair: g={g} f={f} q={q} k={k} base_r={base_r}\n");
            for (i, a) in &values {
                out.push_str(&format!("a(E_{i}) = {a}\n"));
            }
            out.push_str(&format!("class: {}\n", class.tag));
            out.push_str(&format!(
                "mld: {}\n",
                mld.as_deref().unwrap_or("undefined")
            ));
            Ok(out)
        }
        OutputFormat::Json => Ok(pretty_json(&DiscrepancyOutput {
            g,
            f,
            q,
            k,
            base_r,
            log_discrepancies: values
                .into_iter()
                .map(|(i, a)| LevelValue { i, a })
                .collect(),
            class: class.tag,
            mld,
        })),
        OutputFormat::Csv => {
            let mut out = String::from("g,f,q,k,base_r,i,a,class,mld\n");
            let mld = mld.as_deref().unwrap_or("undefined");
            for (i, a) in &values {
                out.push_str(&format!(
                    "{g},{f},{q},{k},{base_r},{i},{a},{},{mld}\n",
                    class.tag
                ));
            }
            Ok(out)
        }
    }
}

#[derive(Serialize)]
struct RsbtOutput {
    n: u32,
    e: u32,
    r: u32,
    alpha: String,
    dimension: u64,
    label: String,
}

fn rsbt_output(n: u32, e: u32, r: u32, format: OutputFormat) -> Result<String> {
    let assembly = cyclic::tangent_rep_multiple_cover(n, e, r)?;
    let alpha = assembly.invariant();
    let one = rat_int(1);
    let label = if alpha > one {
        "terminal range"
    } else if alpha == one {
        "canonical boundary"
    } else {
        "below canonical threshold"
    };
    let output = RsbtOutput {
        n,
        e,
        r,
        alpha: render(&alpha),
        dimension: assembly.dim(),
        label: label.to_string(),
    };
    match format {
        OutputFormat::Text => Ok(format!(
            "cover: n={n} e={e} r={r}\nalpha = {}\ndimension = {}\nlabel: {}\n",
            output.alpha, output.dimension, output.label
        )),
        OutputFormat::Json => Ok(pretty_json(&output)),
        OutputFormat::Csv => Ok(format!(
            "n,e,r,alpha,dimension,label\n{n},{e},{r},{},{},{}\n",
            output.alpha, output.dimension, output.label
        )),
    }
}

#[derive(Serialize)]
struct CanonicalClassOutput {
    n: u32,
    e: u32,
    marks: u32,
    degrees: Vec<u32>,
    class: String,
}

fn canonical_class_output(
    n: u32,
    d: u32,
    e: u32,
    marks: u32,
    tuple: Option<&[u32]>,
    format: OutputFormat,
) -> Result<String> {
    let degrees: Vec<u32> = tuple.map(|t| t.to_vec()).unwrap_or_else(|| vec![d]);
    let class = if marks == 0 && degrees.len() == 1 {
        picard::canonical_hypersurface(n, degrees[0], e)?
    } else {
        picard::canonical_complete_intersection(n, &degrees, e, marks)?
    };
    let output = CanonicalClassOutput {
        n,
        e,
        marks,
        degrees,
        class: class.render(),
    };
    match format {
        OutputFormat::Text => {
            let degrees = output
                .degrees
                .iter()
                .map(u32::to_string)
                .collect::<Vec<_>>()
                .join(",");
            Ok(format!(
                "basis: n={n} e={e} marks={marks}\ndegrees: {degrees}\nclass: {}\n",
                output.class
            ))
        }
        OutputFormat::Json => Ok(pretty_json(&output)),
        OutputFormat::Csv => {
            let degrees = output
                .degrees
                .iter()
                .map(u32::to_string)
                .collect::<Vec<_>>()
                .join(" ");
            let mut writer = csv::Writer::from_writer(Vec::new());
            writer
                .write_record(["n", "e", "marks", "degrees", "class"])
                .expect("vec writer");
            writer
                .write_record([
                    n.to_string(),
                    e.to_string(),
                    marks.to_string(),
                    degrees,
                    output.class,
                ])
                .expect("vec writer");
            Ok(String::from_utf8(writer.into_inner().expect("vec writer")).expect("utf-8"))
        }
    }
}

fn report_text(report: &Report) -> String {
    let mut out = String::new();
    let input = report.input;
    out.push_str(&format!("input: n={} d={} e={}\n", input.n, input.d, input.e));
    out.push_str(&format!(
        "theorem_applies: {}\n",
        report.stack_cd.theorem_applies
    ));
    out.push_str(&format!("stack_status: {}\n", report.stack_cd.status));
    out.push_str(&format!("expected_dim: {}\n", report.kbm_x.expected_dim));
    out.push_str(&format!(
        "canonical_if_general: {}\n",
        report.kbm_x.canonical_if_general
    ));
    out.push_str(&format!("coarse_status: {}\n", report.coarse_kbm_pn.status));
    out.push_str(&format!("gorenstein: {}\n", report.coarse_kbm_pn.gorenstein));
    out.push_str(&format!("klt: {}\n", report.coarse_cd.klt));
    out.push_str(&format!(
        "iso_away_codim2: {}\n",
        report.coarse_cd.iso_away_codim2
    ));
    out.push_str(&format!(
        "canonical_if_conjecture: {}\n",
        report.coarse_cd.canonical_if_conjecture
    ));
    out.push_str(&format!(
        "canonical_class: {}\n",
        report
            .canonical_class
            .as_deref()
            .unwrap_or("not applicable: (n, e) = (2, 2) excluded")
    ));
    match report.bigness {
        Some(b) => {
            out.push_str(&format!("bigness_hypotheses_ok: {}\n", b.hypotheses_ok));
            out.push_str(&format!("bigness_sufficient_test: {}\n", b.sufficient_test));
        }
        None => {
            out.push_str("bigness_hypotheses_ok: not applicable: (n, e) = (2, 2) excluded\n");
            out.push_str("bigness_sufficient_test: not applicable: (n, e) = (2, 2) excluded\n");
        }
    }
    out.push_str(&format!(
        "general_type_conditional: {}\n",
        report.general_type_conditional
    ));
    out
}

fn scan_line(report: &Report) -> String {
    let input = report.input;
    let (coarse, gorenstein) = if input.e == 1 {
        ("n/a".to_string(), "n/a".to_string())
    } else {
        (
            report.coarse_kbm_pn.status.clone(),
            report.coarse_kbm_pn.gorenstein.clone(),
        )
    };
    format!(
        "n={} d={} e={} applies={} dim={} coarse={} gorenstein={} klt={} iso={} conditional={} big={} general_type={} class={}",
        input.n,
        input.d,
        input.e,
        report.stack_cd.theorem_applies,
        report.kbm_x.expected_dim,
        coarse,
        gorenstein,
        report.coarse_cd.klt,
        report.coarse_cd.iso_away_codim2,
        report.coarse_cd.canonical_if_conjecture,
        report
            .bigness
            .map(|b| b.sufficient_test.to_string())
            .unwrap_or_else(|| "n/a".to_string()),
        report.general_type_conditional,
        report.canonical_class.as_deref().unwrap_or("n/a"),
    )
}

#[derive(Serialize)]
struct OracleRow {
    p: u32,
    g: u32,
    f: u32,
    k: u32,
    count: u64,
}

fn oracle_output(p: u32, g: u32, f: u32, format: OutputFormat) -> Result<String> {
    let census = oracle::count_by_rank(p, g, f)?;
    let rows: Vec<OracleRow> = census
        .counts
        .iter()
        .enumerate()
        .map(|(k, count)| OracleRow {
            p,
            g,
            f,
            k: k as u32,
            count: *count,
        })
        .collect();
    match format {
        // the plain table doubles as csv
        OutputFormat::Text | OutputFormat::Csv => {
            let mut out = String::from("p,g,f,k,count\n");
            for row in &rows {
                out.push_str(&format!(
                    "{},{},{},{},{}\n",
                    row.p, row.g, row.f, row.k, row.count
                ));
            }
            Ok(out)
        }
        OutputFormat::Json => Ok(pretty_json(&rows)),
    }
}

fn pretty_json<T: Serialize>(value: &T) -> String {
    let mut out = serde_json::to_string_pretty(value).expect("report types serialize");
    out.push('\n');
    out
}
