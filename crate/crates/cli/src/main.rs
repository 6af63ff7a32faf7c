use std::fs;
use std::io::{self, Read};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand};
use serde_json::json;

use lcd_core::code::LinearCode;
use lcd_core::constructions::{construct_codim, construct_k1, construct_n2, Construction};
use lcd_core::gf2::Gf2Matrix;
use lcd_core::lcd::{
    extract_lcd_subcode, hull_dimension, is_lcd, pr_attainable, pr_sequence, PrSequence,
};
use lcd_core::search::{
    exists_lcd, naive_oracle, search_lcd, search_lck, CheckOrder, Execution, Partition,
    SearchOptions, SearchSpec,
};
use lcd_core::tabulate::{
    build_lcd_table, build_lck_table, compare_with, emit, verify_conjecture, BuildOptions,
    CellCache, TableFormat, TableKind, REFERENCE_LCD, REFERENCE_LCK,
};

/// Tools for binary linear complementary dual codes.
#[derive(Parser, Debug)]
#[command(name = "lcd", version, about)]
struct Cli {
    /// Emit machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// Only print results; suppress warnings and progress.
    #[arg(long, short, global = true)]
    quiet: bool,

    /// Worker threads for parallel searches (default: all cores).
    #[arg(long, global = true, value_name = "T", value_parser = clap::builder::RangedU64ValueParser::<usize>::new().range(1..))]
    threads: Option<usize>,

    /// Directory for cached table cells (default: $LCD_TABLE_CACHE).
    #[arg(long, global = true, value_name = "DIR")]
    cache: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Decide whether a generator matrix spans an LCD code.
    Check(MatrixInput),
    /// Minimum distance of the code spanned by a generator matrix.
    Mindist {
        #[command(flatten)]
        input: MatrixInput,
        /// Only decide whether the minimum distance is at least T.
        #[arg(long, value_name = "T", conflicts_with = "systematic")]
        at_least: Option<usize>,
        /// Information-set enumeration, not limited by the dimension.
        #[arg(long)]
        systematic: bool,
    },
    /// Build a code from a closed-form construction.
    Construct {
        #[arg(long)]
        n: usize,
        /// Dimension (1 or 2).
        #[arg(long, conflicts_with = "codim", required_unless_present = "codim")]
        k: Option<usize>,
        /// Codimension i (needs n >= 2^i).
        #[arg(long, value_name = "I")]
        codim: Option<usize>,
        /// Also write a JSON description of the code to this file.
        #[arg(long, value_name = "PATH")]
        sidecar: Option<PathBuf>,
    },
    /// Principal-rank sequence of a symmetric matrix.
    Prseq {
        #[command(flatten)]
        input: OptionalMatrixInput,
        /// Decide whether a sequence such as "1]0101" is attainable instead.
        #[arg(long, value_name = "SEQ", conflicts_with = "matrix")]
        attainable: Option<String>,
    },
    /// Delete generator rows to obtain an LCD subcode of dimension k-1 or k-2.
    Subcode(MatrixInput),
    /// Largest minimum distance of an LCD [n,k] code.
    SearchLcd {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        /// Only look for a code of exactly this distance.
        #[arg(long, value_name = "D")]
        exact_d: Option<usize>,
        #[command(flatten)]
        search: SearchFlags,
    },
    /// Largest dimension of an LCD code of length n and minimum distance d.
    SearchLck {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: usize,
        #[command(flatten)]
        search: SearchFlags,
    },
    /// Brute-force LCD[n,k] over every redundancy block (tiny sizes only).
    Oracle {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
    },
    /// Build and print a full LCD or LCK table.
    Table {
        #[arg(long, value_parser = ["lcd", "lck"])]
        kind: String,
        #[arg(long, value_name = "N")]
        max_n: usize,
        #[arg(long, default_value = "markdown", value_parser = ["markdown", "md", "csv", "json"])]
        format: String,
        /// Keep per-cell timings in JSON output.
        #[arg(long)]
        timing: bool,
        #[command(flatten)]
        search: SearchFlags,
    },
    /// Check that LCD[n,k] never increases along a row.
    VerifyConjecture {
        #[arg(long, value_name = "N")]
        max_n: usize,
        #[command(flatten)]
        search: SearchFlags,
    },
}

#[derive(Args, Debug)]
struct MatrixInput {
    /// Generator matrix file, one row of 0/1 per line ('-' for stdin).
    matrix: PathBuf,
}

#[derive(Args, Debug)]
struct OptionalMatrixInput {
    /// Matrix file, one row of 0/1 per line ('-' for stdin).
    matrix: Option<PathBuf>,
}

#[derive(Args, Debug, Clone)]
struct SearchFlags {
    /// Enumerate every column tuple instead of nondecreasing ones.
    #[arg(long)]
    no_reduce: bool,
    /// Disable partial-weight pruning.
    #[arg(long)]
    no_prune: bool,
    /// Check distance before the determinant at leaves.
    #[arg(long)]
    distance_first: bool,
    /// Only explore slice I of T (e.g. 0/4).
    #[arg(long, value_name = "I/T")]
    partition: Option<Partition>,
    /// Run past the search budget guard (and allow tables beyond n = 12).
    #[arg(long)]
    force: bool,
    /// Single-threaded search.
    #[arg(long)]
    sequential: bool,
}

impl SearchFlags {
    fn options(&self) -> SearchOptions {
        let defaults = SearchOptions::default();
        SearchOptions {
            reduce_columns: !self.no_reduce,
            prune_rows: !self.no_prune,
            check_order: if self.distance_first {
                CheckOrder::DistanceFirst
            } else {
                CheckOrder::DeterminantFirst
            },
            partition: self.partition.unwrap_or(Partition::WHOLE),
            budget: if self.force { None } else { defaults.budget },
            execution: if self.sequential {
                Execution::Sequential
            } else {
                Execution::Parallel
            },
        }
    }
}

fn read_matrix(path: &Path) -> anyhow::Result<Gf2Matrix> {
    let text = if path == Path::new("-") {
        let mut s = String::new();
        io::stdin()
            .read_to_string(&mut s)
            .context("reading stdin")?;
        s
    } else {
        fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?
    };
    Ok(Gf2Matrix::parse_text(&text)?)
}

fn read_code(path: &Path) -> anyhow::Result<LinearCode> {
    Ok(LinearCode::from_generator(read_matrix(path)?)?)
}

fn print_json(value: &impl serde::Serialize) -> anyhow::Result<()> {
    println!("{}", serde_json::to_string_pretty(value)?);
    Ok(())
}

fn table_options(cli: &Cli, search: &SearchFlags, timing: bool) -> anyhow::Result<BuildOptions> {
    let cache = match &cli.cache {
        Some(dir) => Some(CellCache::open(dir)?),
        None => CellCache::from_env()?,
    };
    Ok(BuildOptions {
        search: search.options(),
        cache,
        record_timing: timing,
        force: search.force,
    })
}

fn construct(n: usize, k: Option<usize>, codim: Option<usize>) -> anyhow::Result<Construction> {
    Ok(match (k, codim) {
        (Some(1), None) => construct_k1(n)?,
        (Some(2), None) => construct_n2(n)?,
        (Some(k), None) => bail!("closed forms exist for k = 1, k = 2 and --codim; got k = {k}"),
        (None, Some(i)) => construct_codim(n, i)?,
        _ => unreachable!("clap enforces exactly one of --k and --codim"),
    })
}

fn run(cli: &Cli) -> anyhow::Result<()> {
    match &cli.command {
        Command::Check(input) => {
            let code = read_code(&input.matrix)?;
            let hull = hull_dimension(&code);
            if cli.json {
                print_json(
                    &json!({ "n": code.n(), "k": code.k(), "lcd": hull == 0, "hull_dimension": hull }),
                )?;
            } else if hull == 0 {
                println!("LCD");
            } else {
                println!("not LCD, hull dimension {hull}");
            }
        }
        Command::Mindist {
            input,
            at_least,
            systematic,
        } => {
            let code = read_code(&input.matrix)?;
            if let Some(t) = at_least {
                let ok = code.min_distance_at_least(*t)?;
                if cli.json {
                    print_json(
                        &json!({ "n": code.n(), "k": code.k(), "at_least": t, "holds": ok }),
                    )?;
                } else {
                    println!(
                        "{}",
                        if ok {
                            format!("d >= {t}")
                        } else {
                            format!("d < {t}")
                        }
                    );
                }
            } else {
                let d = if *systematic {
                    code.min_distance_systematic()
                } else {
                    code.min_distance()?
                };
                if cli.json {
                    print_json(&json!({ "n": code.n(), "k": code.k(), "d": d }))?;
                } else {
                    println!("[{},{},{d}]", code.n(), code.k());
                }
            }
        }
        Command::Construct {
            n,
            k,
            codim,
            sidecar,
        } => {
            let c = construct(*n, *k, *codim)?;
            let params = c.code.params()?;
            let doc = json!({
                "params": [params.n, params.k, params.d],
                "lcd": is_lcd(&c.code),
                "source": c.source.tag(),
            });
            if let Some(path) = sidecar {
                fs::write(path, serde_json::to_string_pretty(&doc)? + "\n")
                    .with_context(|| format!("writing {}", path.display()))?;
            }
            if cli.json {
                let mut doc = doc;
                doc["generator"] = json!(c.code.generator().to_bit_rows());
                print_json(&doc)?;
            } else {
                print!("{}", c.code.generator().to_text());
            }
        }
        Command::Prseq { input, attainable } => {
            if let Some(text) = attainable {
                let seq: PrSequence = text.parse()?;
                let ok = pr_attainable(&seq)?;
                if cli.json {
                    print_json(&json!({ "sequence": seq.to_string(), "attainable": ok }))?;
                } else {
                    println!("{}", if ok { "attainable" } else { "not attainable" });
                }
            } else {
                let Some(path) = &input.matrix else {
                    bail!("give a matrix file or --attainable SEQ");
                };
                let seq = pr_sequence(&read_matrix(path)?)?;
                if cli.json {
                    print_json(&json!({ "sequence": seq.to_string() }))?;
                } else {
                    println!("{seq}");
                }
            }
        }
        Command::Subcode(input) => {
            let cert = extract_lcd_subcode(&read_code(&input.matrix)?)?;
            if !cert.guaranteed && !cli.quiet {
                log::warn!("subcode found although none is guaranteed for k = 2");
            }
            if cli.json {
                print_json(&cert.to_json())?;
            } else {
                let removed: Vec<String> = cert
                    .to_json()
                    .removed
                    .iter()
                    .map(|r| r.to_string())
                    .collect();
                println!("removed rows {} -> {}", removed.join(","), cert.sub_params);
                print!("{}", cert.sub_gen.to_text());
            }
        }
        Command::SearchLcd {
            n,
            k,
            exact_d,
            search,
        } => {
            let opts = search.options();
            if let Some(d) = exact_d {
                let (witness, visited) = exists_lcd(*n, *k, *d, true, &opts)?;
                if cli.json {
                    print_json(&json!({
                        "n": n, "k": k, "d": d, "exists": witness.is_some(),
                        "witness_a": witness.as_ref().map(Gf2Matrix::to_bit_rows),
                        "visited": visited,
                    }))?;
                } else {
                    match witness {
                        Some(a) => {
                            println!("LCD [{n},{k},{d}] code exists");
                            print!("{}", LinearCode::systematic(&a).generator().to_text());
                        }
                        None => println!("no LCD [{n},{k},{d}] code"),
                    }
                }
            } else {
                let r = search_lcd(&SearchSpec::max_distance(*n, *k).with_options(opts))?;
                if cli.json {
                    print_json(&r.to_json())?;
                } else {
                    println!("LCD[{n},{k}] = {}", r.params.d);
                    if let Some(code) = r.witness_code() {
                        print!("{}", code.generator().to_text());
                    }
                }
            }
        }
        Command::SearchLck { n, d, search } => {
            let r = search_lck(*n, *d, &search.options(), None)?;
            if cli.json {
                print_json(&r.to_json())?;
            } else {
                println!("LCK[{n},{d}] = {}", r.params.k);
                if let Some(code) = r.witness_code() {
                    print!("{}", code.generator().to_text());
                }
            }
        }
        Command::Oracle { n, k } => {
            let d = naive_oracle(*n, *k)?;
            if cli.json {
                print_json(&json!({ "n": n, "k": k, "d": d }))?;
            } else {
                println!("LCD[{n},{k}] = {d}");
            }
        }
        Command::Table {
            kind,
            max_n,
            format,
            timing,
            search,
        } => {
            let kind: TableKind = kind.parse()?;
            let format: TableFormat = if cli.json {
                TableFormat::Json
            } else {
                format.parse()?
            };
            let opts = table_options(cli, search, *timing)?;
            let (table, reference) = match kind {
                TableKind::Lcd => (build_lcd_table(*max_n, &opts)?, &REFERENCE_LCD),
                TableKind::Lck => {
                    let lcd = build_lcd_table(*max_n, &opts)?;
                    (build_lck_table(*max_n, Some(&lcd), &opts)?, &REFERENCE_LCK)
                }
            };
            for (n, c, expected, got) in compare_with(&table, reference) {
                log::warn!(
                    "{}[{n},{c}] = {got} differs from reference value {expected}",
                    kind.name().to_uppercase()
                );
            }
            print!("{}", emit(&table, format)?);
        }
        Command::VerifyConjecture { max_n, search } => {
            let table = build_lcd_table(*max_n, &table_options(cli, search, false)?)?;
            let report = verify_conjecture(&table)?;
            if cli.json {
                print_json(&report)?;
            } else if report.adjacent_violations.is_empty() {
                println!("LCD[n,k] >= LCD[n,k+1] holds for all n <= {max_n}");
            } else {
                for (n, k) in &report.adjacent_violations {
                    println!("violation: LCD[{n},{k}] > LCD[{n},{}]", k - 1);
                }
            }
            if !report.is_clean() {
                bail!(
                    "{} monotonicity violation(s)",
                    report.adjacent_violations.len()
                );
            }
        }
    }
    Ok(())
}

#[cfg(feature = "parallel")]
fn run_with_threads(cli: &Cli) -> anyhow::Result<()> {
    match cli.threads {
        Some(t) => rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build()
            .context("building thread pool")?
            .install(|| run(cli)),
        None => run(cli),
    }
}

#[cfg(not(feature = "parallel"))]
fn run_with_threads(cli: &Cli) -> anyhow::Result<()> {
    if cli.threads.is_some() {
        log::warn!("built without parallel support; --threads ignored");
    }
    run(cli)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let level = if cli.quiet { "error" } else { "warn" };
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or(level))
        .format_timestamp(None)
        .init();
    match run_with_threads(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
