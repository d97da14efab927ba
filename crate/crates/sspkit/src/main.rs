use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use sspkit::cells::{self, Variant};
use sspkit::classify::{
    self, generic_degree_a, reconstruct_degree, superspecial_datum, superspecial_table,
    superspecial_witness,
};
use sspkit::conjugacy;
use sspkit::registry::{group_data, WeylType};
use sspkit::report::{emit, VerificationReport};
use sspkit::symbols::{enumerate_a, enumerate_bd};

const DEFAULT_BUDGET: u64 = 10_000_000;

#[derive(Parser)]
#[command(name = "sspkit", version, about = "Exact invariants of the superspecial family")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Write to this path instead of stdout (atomic replace)
    #[arg(long, global = true)]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Tsv,
}

#[derive(Args)]
struct TypeSel {
    /// Type kind: A, B, D, E6, E7, E8, F4, G2, H3, H4, I2
    #[arg(long = "type")]
    kind: String,
    /// Rank parameter for A/B/D (A takes the symmetric-group degree) or p for I2
    #[arg(long)]
    param: Option<u32>,
}

impl TypeSel {
    fn resolve(&self) -> sspkit::Result<WeylType> {
        WeylType::new(&self.kind, self.param)
    }
}

#[derive(Subcommand)]
enum Command {
    /// Exponents, order, opposition-orbit count of one type
    Registry(TypeSel),
    /// Full superspecial datum of one type
    Classify(TypeSel),
    /// All irreducible superspecial types up to a rank bound
    Table {
        #[arg(long, default_value_t = 30)]
        max_rank: u32,
    },
    /// Enumerate index sets or symbols of one rank
    Symbols {
        #[arg(long)]
        rank: u32,
        /// a for type A, 1 for defect 1, 0 for defect 0
        #[arg(long, default_value = "1")]
        defect: String,
        #[arg(long, default_value_t = 12)]
        max_n: u32,
    },
    /// Components of Z (or Z' with --prime) for one type
    Cell {
        #[command(flatten)]
        sel: TypeSel,
        #[arg(long)]
        prime: bool,
    },
    /// Minimal-length search for the distinguished class of one type
    Conj {
        #[command(flatten)]
        sel: TypeSel,
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Run a verification suite
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 12)]
        max_n: u32,
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Reconstructed degree of one type, or the q-hook degree of a partition
    Degree {
        #[arg(long = "type")]
        kind: Option<String>,
        #[arg(long)]
        param: Option<u32>,
        /// Comma-separated partition, e.g. 2,1
        #[arg(long)]
        partition: Option<String>,
    },
}

fn budget_from(flag: Option<u64>) -> u64 {
    flag.or_else(|| {
        std::env::var("SSPKIT_BUDGET")
            .ok()
            .and_then(|v| v.parse().ok())
    })
    .unwrap_or(DEFAULT_BUDGET)
}

fn datum_json(t: WeylType) -> sspkit::Result<serde_json::Value> {
    let d = superspecial_datum(t)?;
    let rec = reconstruct_degree(&d)?;
    Ok(serde_json::json!({
        "type": t.to_string(),
        "label": d.label,
        "dim": d.dim.to_string(),
        "a": d.a,
        "b": d.b,
        "c": d.c.to_json(),
        "p_factors": d.p_factors.as_ref().map(|f| f.to_json()),
        "p_expanded": d.p_expanded.to_json(),
        "degree": rec.poly.to_json(),
        "gamma": rec.gamma,
    }))
}

fn datum_tsv(t: WeylType) -> sspkit::Result<String> {
    let d = superspecial_datum(t)?;
    let rec = reconstruct_degree(&d)?;
    Ok(format!(
        "type\tlabel\tdim\ta\tc\tgamma\n{}\t{}\t{}\t{}\t{}\t{}\n",
        t, d.label, d.dim, d.a, d.c, rec.gamma
    ))
}

fn table_rows(max_rank: u32) -> Vec<(String, usize, Option<u32>)> {
    superspecial_table(max_rank)
        .into_iter()
        .map(|(t, k)| {
            let kind = match t {
                WeylType::A(_) => "A".to_string(),
                WeylType::B(_) => "B".to_string(),
                WeylType::D(_) => "D".to_string(),
                other => other.to_string(),
            };
            (kind, t.rank(), k)
        })
        .collect()
}

fn verify_suite(suite: &str, max_n: u32, budget: u64) -> sspkit::Result<VerificationReport> {
    let mut report = VerificationReport::new(suite);
    let want = |name: &str| suite == "all" || suite == name;
    if want("maximality") {
        for n in 1..=max_n {
            report.merge(classify::maximality_suite(WeylType::A(n), max_n)?);
        }
        for n in 2..=max_n.min(10) {
            report.merge(classify::maximality_suite(WeylType::B(n), max_n)?);
        }
        for n in 4..=max_n.min(10) {
            report.merge(classify::maximality_suite(WeylType::D(n), max_n)?);
        }
        for &t in WeylType::all_exceptional() {
            report.merge(classify::maximality_suite(t, max_n)?);
        }
        report.merge(classify::bd_degree_closed_forms(10));
    }
    if want("noncrystal") {
        report.merge(classify::noncrystallographic_suite()?);
    }
    if want("cells") {
        report.merge(cells::cells_suite(3, 4)?);
    }
    if want("conj") {
        report.merge(conjugacy::conjugacy_suite(budget)?);
    }
    if report.cases.is_empty() {
        return Err(sspkit::Error::InvalidRank(
            suite.to_string(),
            "unknown suite (use all, maximality, noncrystal, cells, conj)".into(),
        ));
    }
    Ok(report)
}

fn run(cli: Cli) -> sspkit::Result<u8> {
    let out = |content: String| -> sspkit::Result<u8> {
        emit(&content, cli.output.as_deref())?;
        Ok(0)
    };
    let json_out = |v: serde_json::Value| -> sspkit::Result<u8> {
        let mut s = serde_json::to_string_pretty(&v).expect("serializable");
        s.push('\n');
        emit(&s, cli.output.as_deref())?;
        Ok(0)
    };
    match &cli.command {
        Command::Registry(sel) => {
            let t = sel.resolve()?;
            let data = group_data(t)?;
            match cli.format {
                Format::Json => json_out(data.to_json(t)),
                Format::Tsv => out(format!(
                    "type\trank\texponents\top_orbit_count\torder\n{}\t{}\t{}\t{}\t{}\n",
                    t,
                    data.simple_reflection_count,
                    data.exponents
                        .iter()
                        .map(|e| e.to_string())
                        .collect::<Vec<_>>()
                        .join(","),
                    data.op_orbit_count,
                    data.order
                )),
            }
        }
        Command::Classify(sel) => {
            let t = sel.resolve()?;
            match cli.format {
                Format::Json => json_out(datum_json(t)?),
                Format::Tsv => out(datum_tsv(t)?),
            }
        }
        Command::Table { max_rank } => {
            let rows = table_rows(*max_rank);
            match cli.format {
                Format::Json => {
                    let items: Vec<serde_json::Value> = rows
                        .iter()
                        .map(|(kind, rank, k)| {
                            serde_json::json!({
                                "kind": kind,
                                "rank": rank,
                                "superspecial": true,
                                "witness": k,
                            })
                        })
                        .collect();
                    json_out(serde_json::Value::Array(items))
                }
                Format::Tsv => {
                    let mut s = String::from("kind\trank\tsuperspecial\twitness\n");
                    for (kind, rank, k) in rows {
                        let w = k.map(|v| v.to_string()).unwrap_or_else(|| "-".into());
                        s.push_str(&format!("{kind}\t{rank}\ttrue\t{w}\n"));
                    }
                    out(s)
                }
            }
        }
        Command::Symbols { rank, defect, max_n } => {
            if *rank > *max_n {
                return Err(sspkit::Error::GuardExceeded(format!(
                    "rank {rank} > max_n {max_n}"
                )));
            }
            let rows: Vec<(String, i64)> = match defect.as_str() {
                "a" => enumerate_a(*rank)
                    .into_iter()
                    .map(|x| (x.to_string(), x.alpha()))
                    .collect(),
                "1" => enumerate_bd(*rank, 1)?
                    .into_iter()
                    .map(|s| (s.to_string(), s.alpha()))
                    .collect(),
                "0" => enumerate_bd(*rank, 0)?
                    .into_iter()
                    .map(|s| (s.to_string(), s.alpha()))
                    .collect(),
                other => {
                    return Err(sspkit::Error::InvalidRank(
                        other.to_string(),
                        "defect must be a, 0 or 1".into(),
                    ))
                }
            };
            match cli.format {
                Format::Json => {
                    let items: Vec<serde_json::Value> = rows
                        .iter()
                        .map(|(s, alpha)| serde_json::json!({"index": s, "alpha": alpha}))
                        .collect();
                    json_out(serde_json::Value::Array(items))
                }
                Format::Tsv => {
                    let mut s = String::from("index\talpha\n");
                    for (idx, alpha) in rows {
                        s.push_str(&format!("{idx}\t{alpha}\n"));
                    }
                    out(s)
                }
            }
        }
        Command::Cell { sel, prime } => {
            let t = sel.resolve()?;
            let variant = if *prime { Variant::Zprime } else { Variant::Z };
            let c = cells::cell(t, variant)?;
            match cli.format {
                Format::Json => json_out(cells::cell_to_json(&c)),
                Format::Tsv => out(cells::cell_to_tsv(&c)),
            }
        }
        Command::Conj { sel, budget } => {
            let t = sel.resolve()?;
            let budget = budget_from(*budget);
            if t == WeylType::E7 {
                let report = conjugacy::coxeter_check_e7()?;
                let code = u8::from(!report.all_passed());
                match cli.format {
                    Format::Json => json_out(report.to_json())?,
                    Format::Tsv => out(report.to_tsv())?,
                };
                return Ok(code);
            }
            if t == WeylType::E8 {
                let report = conjugacy::e8_numeric_checks()?;
                let code = u8::from(!report.all_passed());
                match cli.format {
                    Format::Json => json_out(report.to_json())?,
                    Format::Tsv => out(report.to_tsv())?,
                };
                return Ok(code);
            }
            let desc = conjugacy::ssp_class(t)?;
            let found = conjugacy::min_length_search(t, &desc, budget)?;
            let ok = found.m_found == desc.m
                && desc
                    .expected_size
                    .map(|e| found.size_found == Some(e))
                    .unwrap_or(true);
            json_out(conjugacy::search_to_json(t, &desc, &found))?;
            Ok(u8::from(!ok))
        }
        Command::Verify { suite, max_n, budget } => {
            let report = verify_suite(suite, *max_n, budget_from(*budget))?;
            let code = u8::from(!report.all_passed());
            match cli.format {
                Format::Json => json_out(report.to_json())?,
                Format::Tsv => out(report.to_tsv())?,
            };
            Ok(code)
        }
        Command::Degree { kind, param, partition } => match (kind, partition) {
            (Some(kind), None) => {
                let t = WeylType::new(kind, *param)?;
                let d = superspecial_datum(t)?;
                let rec = reconstruct_degree(&d)?;
                json_out(serde_json::json!({
                    "type": t.to_string(),
                    "degree": rec.poly.to_json(),
                    "display": rec.poly.to_string(),
                    "gamma": rec.gamma,
                    "dim": d.dim.to_string(),
                }))
            }
            (None, Some(parts_arg)) => {
                let parts: Result<Vec<u32>, _> =
                    parts_arg.split(',').map(|v| v.trim().parse::<u32>()).collect();
                let mut parts = parts.map_err(|_| {
                    sspkit::Error::InvalidRank(parts_arg.clone(), "partition must be integers".into())
                })?;
                parts.sort_by(|a, b| b.cmp(a));
                parts.retain(|&p| p > 0);
                if parts.is_empty() {
                    return Err(sspkit::Error::InvalidRank(
                        parts_arg.clone(),
                        "empty partition".into(),
                    ));
                }
                let poly = generic_degree_a(&parts)?;
                let n: u32 = parts.iter().sum();
                let (ssp, _) = superspecial_witness(WeylType::A(n));
                json_out(serde_json::json!({
                    "partition": parts,
                    "degree": poly.to_json(),
                    "display": poly.to_string(),
                    "gamma": poly.val_at_minus_one()?,
                    "group_superspecial": ssp,
                }))
            }
            _ => Err(sspkit::Error::InvalidRank(
                "degree".into(),
                "give exactly one of --type or --partition".into(),
            )),
        },
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            let code = match e {
                sspkit::Error::VerificationFailure(_) => 1,
                _ => 2,
            };
            ExitCode::from(code)
        }
    }
}
