//! `cyclebetti` command-line interface.
//!
//! Exit status: 0 on success or agreement, 1 on a mismatch, 2 on invalid
//! parameters or input, 3 when an enumeration budget is exceeded.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use cyclebetti::homology::{enumerate_faces, ChainComplex};
use cyclebetti::verify::{sweep, Claim, SweepEntry};
use cyclebetti::{
    betti_table_facet, build_cycle_complex, build_e_complex, closed_form_table, depth,
    homology_e_runs, make_params, pd_from_table, pd_reg, reduced_homology_with, reg_from_table,
    BettiTable, CycleParams, Error, FieldSpec, OracleConfig, SimplicialComplex,
};

#[derive(Parser)]
#[command(name = "cyclebetti", version)]
#[command(about = "Betti numbers of path ideals of cycles, by closed form and by Hochster sums")]
struct Cli {
    #[command(subcommand)]
    command: Commands,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    Closed,
    Oracle,
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Json,
    Csv,
}

#[derive(clap::Args, Clone, Copy)]
struct Instance {
    /// Number of vertices of the cycle
    #[arg(short = 'n')]
    n: usize,
    /// Path length
    #[arg(short = 'm')]
    m: usize,
    /// Step between consecutive paths (normalized to gcd(l, n))
    #[arg(short = 'l')]
    l: usize,
}

#[derive(Subcommand)]
enum Commands {
    /// Print the parameter record (n, m, l, s, t, k, p, d)
    Params {
        #[command(flatten)]
        instance: Instance,
    },
    /// Graded Betti table of R/I
    Betti {
        #[command(flatten)]
        instance: Instance,
        #[arg(long, value_enum, default_value_t = Mode::Closed)]
        mode: Mode,
        /// Coefficient field: a prime p, or 0 for the rationals
        #[arg(long, default_value = "2")]
        field: FieldSpec,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Projective dimension, regularity and depth of R/I
    Pdreg {
        #[command(flatten)]
        instance: Instance,
        #[arg(long, value_enum, default_value_t = Mode::Closed)]
        mode: Mode,
        #[arg(long, default_value = "2")]
        field: FieldSpec,
    },
    /// Compare closed forms with the oracles over every valid (n, m, l) in range
    Verify {
        #[arg(long, default_value_t = 4)]
        min_n: usize,
        #[arg(long, default_value_t = 8)]
        max_n: usize,
        /// Comma-separated field codes (0 = rationals)
        #[arg(long, value_delimiter = ',', default_value = "2")]
        fields: Vec<FieldSpec>,
        /// Print every check, not just failures
        #[arg(long)]
        verbose: bool,
    },
    /// Reduced homology of an E-complex or of a complex read from a file
    Homology {
        /// Run lengths of the E-complex, comma-separated
        #[arg(long, value_delimiter = ',', conflicts_with = "file", requires_all = ["m", "l"])]
        runs: Vec<usize>,
        #[arg(short = 'm')]
        m: Option<usize>,
        #[arg(short = 'l')]
        l: Option<usize>,
        /// Complex in the facet exchange format
        #[arg(long)]
        file: Option<PathBuf>,
        #[arg(long, default_value = "2")]
        field: FieldSpec,
        /// Also print every boundary matrix of the complex as given
        #[arg(long)]
        dump_boundaries: bool,
    },
}

enum Failure {
    Mismatch,
    Error(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Error(e)
    }
}

type CmdResult = Result<(), Failure>;

/// Default config, with every enumeration budget replaced by `BETTI_BUDGET` when set.
fn oracle_config(field: FieldSpec) -> Result<OracleConfig, Error> {
    let mut cfg = OracleConfig::with_field(field);
    if let Ok(raw) = std::env::var("BETTI_BUDGET") {
        let budget: u64 = raw.trim().parse().map_err(|_| {
            Error::InvalidParams(format!("BETTI_BUDGET={raw:?} is not a positive integer"))
        })?;
        if budget == 0 {
            return Err(Error::InvalidParams("BETTI_BUDGET must be positive".into()));
        }
        cfg.facet_subset_budget = budget;
        cfg.vertex_subset_budget = budget;
        cfg.face_budget = usize::try_from(budget).unwrap_or(usize::MAX);
    }
    Ok(cfg)
}

fn params_of(instance: Instance) -> Result<CycleParams, Error> {
    make_params(instance.n, instance.m, instance.l)
}

fn render(table: &BettiTable, format: Format) -> String {
    match format {
        Format::Table => table.to_text(),
        Format::Json => table.to_json() + "\n",
        Format::Csv => table.to_csv(),
    }
}

#[derive(Serialize)]
struct EntryComparison {
    i: usize,
    j: usize,
    closed: u64,
    oracle: u64,
}

#[derive(Serialize)]
struct BettiComparison {
    params: CycleParams,
    field: FieldSpec,
    closed_complete: bool,
    closed: BettiTable,
    oracle: BettiTable,
    entries: Vec<EntryComparison>,
    matches: bool,
}

fn cmd_betti(instance: Instance, mode: Mode, field: FieldSpec, format: Format) -> CmdResult {
    let params = params_of(instance)?;
    let n = params.n();
    let closed = || -> Result<_, Error> {
        let c = closed_form_table(&params)?;
        if !c.complete {
            eprintln!("note: t = 1, entries with 0 < j < n are not covered by the closed forms (use --mode oracle)");
        }
        Ok(c)
    };
    let oracle = || betti_table_facet(&build_cycle_complex(&params), &oracle_config(field)?);
    match mode {
        Mode::Closed => print!("{}", render(&closed()?.table, format)),
        Mode::Oracle => print!("{}", render(&oracle()?, format)),
        Mode::Both => {
            let c = closed()?;
            let o = oracle()?;
            // with t = 1 only column j = n and beta_{0,0} are predicted
            let covered = |j: usize| c.complete || j == n || j == 0;
            let mut keys: Vec<(usize, usize)> = c
                .table
                .entries()
                .chain(o.entries())
                .map(|e| (e.i, e.j))
                .filter(|&(_, j)| covered(j))
                .collect();
            keys.sort_unstable();
            keys.dedup();
            let entries: Vec<EntryComparison> = keys
                .into_iter()
                .map(|(i, j)| EntryComparison {
                    i,
                    j,
                    closed: c.table.get(i, j),
                    oracle: o.get(i, j),
                })
                .collect();
            let matches = entries.iter().all(|e| e.closed == e.oracle);
            match format {
                Format::Json => {
                    let report = BettiComparison {
                        params,
                        field,
                        closed_complete: c.complete,
                        closed: c.table.clone(),
                        oracle: o.clone(),
                        entries,
                        matches,
                    };
                    println!(
                        "{}",
                        serde_json::to_string(&report).expect("report serializes")
                    );
                }
                Format::Csv => {
                    println!("i,j,closed,oracle");
                    for e in &entries {
                        println!("{},{},{},{}", e.i, e.j, e.closed, e.oracle);
                    }
                }
                Format::Table => {
                    println!("{params} over {field}");
                    println!("oracle:\n{}", o.to_text());
                    for e in entries.iter().filter(|e| e.closed != e.oracle) {
                        println!(
                            "beta_{{{},{}}}: closed {} oracle {}",
                            e.i, e.j, e.closed, e.oracle
                        );
                    }
                    if matches {
                        println!("match, beta = {o}");
                    } else {
                        println!("MISMATCH");
                    }
                }
            }
            if !matches {
                return Err(Failure::Mismatch);
            }
        }
    }
    Ok(())
}

fn cmd_pdreg(instance: Instance, mode: Mode, field: FieldSpec) -> CmdResult {
    let params = params_of(instance)?;
    let n = params.n();
    let closed = || {
        let (pd, reg) = pd_reg(&params);
        (pd, reg, depth(&params))
    };
    let oracle = || -> Result<_, Error> {
        let table = betti_table_facet(&build_cycle_complex(&params), &oracle_config(field)?)?;
        let pd = pd_from_table(&table);
        Ok((pd, reg_from_table(&table), n - pd))
    };
    let show =
        |(pd, reg, depth): (usize, usize, usize)| format!("pd {pd}, reg {reg}, depth {depth}");
    match mode {
        Mode::Closed => println!("{}", show(closed())),
        Mode::Oracle => println!("{}", show(oracle()?)),
        Mode::Both => {
            let (c, o) = (closed(), oracle()?);
            println!("closed: {}", show(c));
            println!("oracle: {}", show(o));
            if c != o {
                println!("MISMATCH");
                return Err(Failure::Mismatch);
            }
            println!("match");
        }
    }
    Ok(())
}

const CLAIMS: [Claim; 7] = [
    Claim::TopColumn,
    Claim::PdRegDepth,
    Claim::ComplementHomology,
    Claim::GradedCounting,
    Claim::Bounds,
    Claim::DoubleOracle,
    Claim::FieldIndependence,
];

fn cmd_verify(min_n: usize, max_n: usize, fields: Vec<FieldSpec>, verbose: bool) -> CmdResult {
    if fields.is_empty() {
        return Err(Error::InvalidParams("--fields needs at least one field".into()).into());
    }
    let base = oracle_config(FieldSpec::default())?;
    let report = sweep(min_n, max_n, &fields, &base);
    for entry in &report.entries {
        match entry {
            SweepEntry::Done(r) => {
                for c in r.checks.iter().filter(|c| verbose || c.is_mismatch()) {
                    println!("{} [{}] {c}", r.params, r.field);
                }
            }
            SweepEntry::Failed {
                params,
                field,
                error,
                ..
            } => println!("{params} [{field}] error: {error}"),
        }
    }
    for (params, c) in report
        .field_checks
        .iter()
        .filter(|(_, c)| verbose || c.is_mismatch())
    {
        println!("{params} {c}");
    }
    let instances = report.entries.len() / fields.len();
    let names: Vec<String> = fields.iter().map(ToString::to_string).collect();
    println!(
        "{instances} instances over {}, {} invalid triples skipped",
        names.join(", "),
        report.skipped_triples
    );
    for claim in CLAIMS {
        let (ok, bad, skipped) = report.tally(claim);
        if ok + bad + skipped > 0 {
            println!("  {claim}: {ok} match, {bad} mismatch, {skipped} skipped");
        }
    }
    let failures = report.failures();
    let limited = report.resource_limited();
    if failures == 0 {
        println!("all instances match");
        return Ok(());
    }
    println!("{failures} failing instance checks ({limited} hit a resource limit)");
    if failures == limited {
        let budget = base.facet_subset_budget as u128;
        return Err(Error::ResourceLimit {
            what: "verification sweep",
            size: limited as u128,
            budget,
        }
        .into());
    }
    Err(Failure::Mismatch)
}

fn print_boundaries(chain: &ChainComplex) {
    let Some(top) = chain.top_dim() else {
        println!("% void complex: no boundary matrices");
        return;
    };
    for d in 0..=top {
        println!("% boundary d={d}");
        print!("{}", chain.boundary_matrix(d).to_matrix_market());
    }
}

fn cmd_homology(
    runs: Vec<usize>,
    m: Option<usize>,
    l: Option<usize>,
    file: Option<PathBuf>,
    field: FieldSpec,
    dump: bool,
) -> CmdResult {
    let cfg = oracle_config(field)?;
    let (complex, prediction) = match file {
        Some(path) => {
            let text = std::fs::read_to_string(&path)
                .map_err(|e| Error::Precondition(format!("cannot read {}: {e}", path.display())))?;
            (SimplicialComplex::parse_exchange(&text)?, None)
        }
        None => {
            let (Some(m), Some(l)) = (m, l) else {
                return Err(
                    Error::InvalidParams("give --runs with -m and -l, or --file".into()).into(),
                );
            };
            if runs.is_empty() {
                return Err(
                    Error::InvalidParams("give --runs with -m and -l, or --file".into()).into(),
                );
            }
            let e = build_e_complex(&runs, m, l)?;
            (e, Some(homology_e_runs(&runs, m / l)))
        }
    };
    if dump {
        print_boundaries(&enumerate_faces(&complex, cfg.face_budget)?);
    }
    let dims = reduced_homology_with(&complex, &cfg.homology_options())?;
    println!("{dims}");
    if let Some(answer) = prediction {
        let predicted = answer.to_dims();
        println!("closed form: {predicted}");
        if predicted != dims {
            println!("MISMATCH");
            return Err(Failure::Mismatch);
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Commands::Params { instance } => params_of(instance)
            .map(|p| {
                if p.l() != instance.l {
                    println!("normalized l={} (from l={})", p.l(), instance.l);
                }
                println!("{p}");
            })
            .map_err(Failure::from),
        Commands::Betti {
            instance,
            mode,
            field,
            format,
        } => cmd_betti(instance, mode, field, format),
        Commands::Pdreg {
            instance,
            mode,
            field,
        } => cmd_pdreg(instance, mode, field),
        Commands::Verify {
            min_n,
            max_n,
            fields,
            verbose,
        } => cmd_verify(min_n, max_n, fields, verbose),
        Commands::Homology {
            runs,
            m,
            l,
            file,
            field,
            dump_boundaries,
        } => cmd_homology(runs, m, l, file, field, dump_boundaries),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Mismatch) => ExitCode::from(1),
        Err(Failure::Error(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(match e {
                Error::ResourceLimit { .. } => 3,
                Error::Consistency(_) => 1,
                _ => 2,
            })
        }
    }
}
