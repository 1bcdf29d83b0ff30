// SPDX-License-Identifier: Apache-2.0

//! `gaussf`: compute `S(G)`, `f(G)`, automorphism counts and subgroup
//! lattices of small finite groups, scan the family catalog, and run the
//! verification battery.
//!
//! Exit status: 0 on success, 1 when a verification fails, 2 on bad input,
//! 3 when the order cap or the search budget is exceeded.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use gaussf_core::automorphisms::{self, AutMethod};
use gaussf_core::scanner::{self, report, Cache, VerifyOptions};
use gaussf_core::{gauss, lattice, Error, ErrorKind, FormulaMutation, Group, Limits, SpecAst};
use serde_json::json;

const SPEC_HELP: &str = "Group expression: Z12, D6 (order 6), Q8, Ab[2;1,1]*Ab[3;1], SD(3,2,2,r=2), file:PATH, joined by 'x' for direct products";

#[derive(Parser)]
#[command(name = "gaussf", version, about = "Sum of |Aut(H)| over subgroups, divided by |G|, for small finite groups")]
struct Cli {
    /// Largest group order accepted.
    #[arg(long, global = true, default_value_t = Limits::DEFAULT_ORDER_CAP)]
    order_cap: usize,
    /// Ignore the order cap.
    #[arg(long, global = true)]
    force: bool,
    /// Node budget for each automorphism search.
    #[arg(long, global = true, default_value_t = Limits::DEFAULT_BUDGET)]
    budget: u64,
    /// Scan record cache; defaults to $GAUSSF_CACHE when set.
    #[arg(long, global = true)]
    cache: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Worker threads; 0 uses one per core.
    #[arg(long, global = true, default_value_t = 0)]
    jobs: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Brute,
    Formula,
    Both,
}

#[derive(Subcommand)]
enum Command {
    /// f(G) = S(G)/|G| as an exact fraction.
    F {
        #[arg(help = SPEC_HELP)]
        spec: String,
    },
    /// S(G), the sum of |Aut(H)| over all subgroups H.
    S {
        #[arg(help = SPEC_HELP)]
        spec: String,
    },
    /// |Aut(G)|.
    Aut {
        #[arg(help = SPEC_HELP)]
        spec: String,
        /// `formula` needs an abelian group; `both` fails on disagreement.
        #[arg(long, value_enum, default_value_t = Method::Both)]
        method: Method,
    },
    /// Subgroup counts by order.
    Subgroups {
        #[arg(help = SPEC_HELP)]
        spec: String,
    },
    /// Evaluate every catalog entry up to an order.
    Scan {
        #[arg(long)]
        max_order: usize,
        /// Write the JSON report here instead of printing the records.
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Run every check over the catalog and the abelian types.
    Verify {
        #[arg(long)]
        max_order: usize,
        /// Upper order for the abelian-only checks; defaults to --max-order.
        #[arg(long)]
        abelian_max_order: Option<usize>,
        /// Corrupt one site of the abelian automorphism formula.
        #[arg(long, hide = true)]
        mutate: Option<FormulaMutation>,
    },
    /// Validate a Cayley table file and evaluate it.
    Ingest { path: PathBuf },
}

fn exit_code(kind: ErrorKind) -> u8 {
    match kind {
        ErrorKind::Verification => 1,
        ErrorKind::Input => 2,
        ErrorKind::Limit => 3,
    }
}

fn build(spec: &str, limits: &Limits) -> Result<Group, Error> {
    spec.parse::<SpecAst>()?.build(limits)
}

fn print_json(value: &serde_json::Value) {
    println!("{}", serde_json::to_string_pretty(value).expect("JSON values serialize"));
}

fn run(cli: Cli) -> Result<u8, Error> {
    let mut limits = Limits::new(cli.order_cap, cli.budget);
    if cli.force {
        limits = limits.forced();
    }
    let json = cli.format == Format::Json;
    match cli.command {
        Command::F { spec } => {
            let g = build(&spec, &limits)?;
            let f = gauss::f(&g, &limits)?;
            if json {
                print_json(&json!({ "spec": g.label(), "order": g.order(), "fValue": f }));
            } else {
                println!("{f}");
            }
        }
        Command::S { spec } => {
            let g = build(&spec, &limits)?;
            let s = gauss::big_s(&g, &limits)?;
            if json {
                print_json(&json!({ "spec": g.label(), "order": g.order(), "s": s.to_string() }));
            } else {
                println!("{s}");
            }
        }
        Command::Aut { spec, method } => {
            let g = build(&spec, &limits)?;
            let result = match method {
                Method::Brute => automorphisms::aut_order_bruteforce(&g, &limits)?,
                Method::Formula => automorphisms::aut_order_abelian(&automorphisms::abelian_invariants(&g)?),
                Method::Both if g.is_abelian() => automorphisms::aut_order_checked(&g, &limits)?,
                Method::Both => automorphisms::aut_order_bruteforce(&g, &limits)?,
            };
            if json {
                print_json(&json!({ "spec": g.label(), "autOrder": result.value.to_string(), "method": result.method }));
            } else {
                let how = match result.method {
                    AutMethod::BruteForce => "search",
                    AutMethod::AbelianFormula => "formula",
                };
                println!("{} ({how})", result.value);
            }
        }
        Command::Subgroups { spec } => {
            let g = build(&spec, &limits)?;
            let subgroups = lattice::all_subgroups(&g, &limits)?;
            let mut by_order = std::collections::BTreeMap::<usize, (usize, usize)>::new();
            for h in &subgroups {
                let e = by_order.entry(h.order()).or_default();
                e.0 += 1;
                e.1 += usize::from(h.is_cyclic());
            }
            let cyclic: usize = by_order.values().map(|v| v.1).sum();
            if json {
                let rows: Vec<_> =
                    by_order.iter().map(|(o, (n, c))| json!({ "order": o, "count": n, "cyclic": c })).collect();
                print_json(&json!({
                    "spec": g.label(), "subgroupCount": subgroups.len(), "cyclicSubgroupCount": cyclic, "byOrder": rows
                }));
            } else {
                println!("{} subgroups, {cyclic} cyclic", subgroups.len());
                println!("{:>6} {:>8} {:>8}", "order", "count", "cyclic");
                for (o, (n, c)) in by_order {
                    println!("{o:>6} {n:>8} {c:>8}");
                }
            }
        }
        Command::Scan { max_order, report: path } => {
            let catalog = scanner::build_catalog(max_order, &limits)?;
            let mut cache = Cache::from_flag_or_env(cli.cache.as_deref())?;
            let result = scanner::scan(&catalog, &limits, cache.as_mut())?;
            match path {
                Some(path) => {
                    std::fs::write(&path, report::scan_json(&result))
                        .map_err(|e| Error::Io { path: path.display().to_string(), message: e.to_string() })?;
                    print!("{}", report::summary_text(&result));
                }
                None if json => print!("{}", report::scan_json(&result)),
                None => print!("{}", report::scan_text(&result)),
            }
            if !result.errors.is_empty() {
                return Ok(3);
            }
        }
        Command::Verify { max_order, abelian_max_order, mutate } => {
            let options = VerifyOptions {
                max_order,
                abelian_max_order: abelian_max_order.unwrap_or(max_order),
                mutation: mutate,
            };
            let outcome = scanner::verify_all(&options, &limits)?;
            if json {
                print!("{}", report::verify_json(&outcome));
            } else {
                print!("{}", report::verify_text(&outcome));
            }
            if !outcome.all_hold() {
                return Ok(1);
            }
        }
        Command::Ingest { path } => {
            let g = scanner::read_cayley_file(&path, &limits)?.with_label(path.display().to_string());
            let eval = gauss::Evaluation::compute(&g, &limits)?;
            let record = scanner::ScanRecord::from_evaluation(path.display().to_string(), &eval);
            if json {
                print_json(&serde_json::to_value(&record).expect("records serialize"));
            } else {
                println!(
                    "order {}, f = {}, |Aut| = {}, cyclic {}, abelian {}, |Z(G)| = {}, {} subgroups",
                    record.order,
                    record.f_value,
                    record.aut_order,
                    record.is_cyclic,
                    record.is_abelian,
                    record.center_order,
                    record.subgroup_count
                );
            }
        }
    }
    Ok(0)
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    if cli.jobs > 0 {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(cli.jobs).build_global() {
            log::warn!("could not size the worker pool: {e}");
        }
    }
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(e.kind()))
        }
    }
}
