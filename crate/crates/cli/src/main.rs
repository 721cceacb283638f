//! Command-line front end: builds the verification objects, runs the
//! requested checks, and emits JSON or text certificates. Exit code 0 means
//! every requested certificate passed, 1 means a certificate failed, and 2
//! covers usage or input errors.

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use syzalg::bigpolygon::{self, Length, PolygonConfig};
use syzalg::borel;
use syzalg::cache::Cache;
use syzalg::certificate::{ResolveCertificate, SeriesCatalogEntry};
use syzalg::homalg;
use syzalg::syzygy;
use syzalg::text;

#[derive(Parser)]
#[command(
    name = "syzalg",
    about = "Exact GF(2) commutative algebra: Groebner bases, resolutions, syzygy orders",
    version
)]
struct Cli {
    /// Degree bound for the linear-algebra oracle checks
    #[arg(long, global = true, default_value_t = 8)]
    degree_bound: i64,
    /// Worker threads for S-pair reduction (0 = automatic)
    #[arg(long, global = true, default_value_t = 0)]
    threads: usize,
    /// Cache directory for expensive intermediates (overrides SYZ_CACHE_DIR)
    #[arg(long, global = true)]
    cache_dir: Option<PathBuf>,
    /// Output format
    #[arg(long, global = true, default_value = "json", value_parser = ["json", "text"])]
    format: String,
    /// Seed for the sampled property suites
    #[arg(long, global = true, default_value_t = 0x5EED)]
    seed: u64,
    /// Write certificates to a file instead of standard output
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Reduced Groebner basis of the relations of a module file
    Groebner {
        #[arg(long)]
        module: PathBuf,
    },
    /// Minimal free resolution: Betti table and Hilbert series
    Resolve {
        #[arg(long)]
        module: PathBuf,
    },
    /// Syzygy order with the Ext-codimension ledger
    SyzygyOrder {
        #[arg(long)]
        module: PathBuf,
    },
    /// Coefficient-ring verifications
    Borel {
        #[command(subcommand)]
        action: BorelAction,
    },
    /// Big polygon space verifications
    Bigpolygon(BigpolygonArgs),
    /// Run the example corpus and the property suites of every module
    Selftest,
}

#[derive(Subcommand)]
enum BorelAction {
    /// Certify that R_H is free of rank 2^n over R_G on the square-free basis
    Basis {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
    },
    /// Degreewise Weyl-invariant dimensions against the restriction image
    Invariants {
        #[arg(long)]
        n: usize,
    },
    /// The three restriction identities of the Euler class x(x+w)
    Euler,
    /// Poincaré-series factorizations of the free-extension catalog
    Series {
        #[arg(long)]
        catalog: Option<PathBuf>,
    },
}

#[derive(Args)]
struct BigpolygonArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    b: u32,
    #[arg(long)]
    a: u32,
    /// Comma-separated edge lengths (rationals like 3/2); equilateral if omitted
    #[arg(long, value_delimiter = ',')]
    lengths: Option<Vec<String>>,
    #[command(subcommand)]
    action: BigpolygonAction,
}

#[derive(Subcommand)]
enum BigpolygonAction {
    /// Verify the exact syzygy order m for equilateral n = 2m+1
    Verify,
    /// Check the kernel/cokernel Hilbert-series decomposition
    Decompose,
}

/// One certificate line; payload fields are flattened beside the envelope.
#[derive(Serialize)]
struct Envelope<T: Serialize> {
    check: String,
    status: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    degree_bound: Option<i64>,
    #[serde(flatten)]
    payload: T,
}

struct Output {
    sink: Box<dyn Write>,
    json: bool,
    all_passed: bool,
}

impl Output {
    fn emit<T: Serialize>(
        &mut self,
        check: &str,
        passed: bool,
        degree_bound: Option<i64>,
        payload: T,
        summary: &str,
    ) {
        self.all_passed &= passed;
        let status = if passed { "PASS" } else { "FAILED" };
        if self.json {
            let env = Envelope {
                check: check.to_string(),
                status,
                degree_bound,
                payload,
            };
            writeln!(
                self.sink,
                "{}",
                serde_json::to_string(&env).expect("serializable certificate")
            )
            .expect("write certificate");
        } else {
            writeln!(self.sink, "{status} {check}: {summary}").expect("write certificate");
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.threads > 0 {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(cli.threads)
            .build_global()
        {
            eprintln!("syzalg: cannot configure {} threads: {e}", cli.threads);
            return ExitCode::from(2);
        }
    }
    let cache_dir = cli
        .cache_dir
        .clone()
        .or_else(|| std::env::var_os("SYZ_CACHE_DIR").map(PathBuf::from));
    if let Some(dir) = cache_dir {
        match Cache::open(&dir) {
            Ok(c) => syzalg::cache::set_global_cache(Some(c)),
            Err(e) => {
                eprintln!("syzalg: cannot open cache directory {}: {e}", dir.display());
                return ExitCode::from(2);
            }
        }
    }

    let sink: Box<dyn Write> = match &cli.out {
        Some(path) => match std::fs::File::create(path) {
            Ok(f) => Box::new(std::io::BufWriter::new(f)),
            Err(e) => {
                eprintln!("syzalg: cannot create {}: {e}", path.display());
                return ExitCode::from(2);
            }
        },
        None => Box::new(std::io::stdout()),
    };
    let mut out = Output {
        sink,
        json: cli.format == "json",
        all_passed: true,
    };

    let result = run(&cli, &mut out);
    out.sink.flush().ok();
    match result {
        Ok(()) => {
            if out.all_passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(msg) => {
            eprintln!("syzalg: {msg}");
            ExitCode::from(2)
        }
    }
}

fn load_module(path: &PathBuf) -> Result<syzalg::PresentedModule, String> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    text::parse_module_file(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn run(cli: &Cli, out: &mut Output) -> Result<(), String> {
    match &cli.command {
        Command::Groebner { module } => {
            let m = load_module(module)?;
            let gens: Vec<_> = m.relations().columns().to_vec();
            let gb = syzalg::groebner::reduced_groebner_basis_in(m.ambient(), &gens)
                .map_err(|e| e.to_string())?;
            #[derive(Serialize)]
            struct Payload {
                rank: usize,
                twists: Vec<i64>,
                generators: Vec<String>,
            }
            let generators: Vec<String> =
                gb.generators().iter().map(text::render_element).collect();
            let summary = format!("{} generators", generators.len());
            out.emit(
                "groebner",
                true,
                None,
                Payload {
                    rank: gb.ambient().rank(),
                    twists: gb.ambient().twists().to_vec(),
                    generators,
                },
                &summary,
            );
        }
        Command::Resolve { module } => {
            let m = load_module(module)?;
            let res = homalg::minimal_free_resolution(&m, None).map_err(|e| e.to_string())?;
            let series = homalg::hilbert_series(&m).map_err(|e| e.to_string())?;
            let cert = ResolveCertificate::new(&res, &series);
            let summary = format!("pd {} hilbert {}", res.length(), series);
            out.emit("resolve", true, None, cert, &summary);
        }
        Command::SyzygyOrder { module } => {
            let m = load_module(module)?;
            let analysis = syzygy::analyze(&m).map_err(|e| e.to_string())?;
            let summary = format!("syzygy order {}", analysis.syzygy_order);
            out.emit("syzygy-order", true, None, analysis, &summary);
        }
        Command::Borel { action } => run_borel(cli, out, action)?,
        Command::Bigpolygon(args) => run_bigpolygon(out, args)?,
        Command::Selftest => {
            let report = syzalg::selftest::run_selftest(cli.seed, cli.degree_bound);
            for check in &report.checks {
                out.emit(
                    &check.name,
                    check.passed,
                    Some(cli.degree_bound),
                    serde_json::json!({ "details": check.details }),
                    &check.details,
                );
            }
            let summary = format!("{} checks", report.checks.len());
            out.emit(
                "selftest",
                report.passed,
                Some(cli.degree_bound),
                serde_json::json!({ "seed": report.seed }),
                &summary,
            );
        }
    }
    Ok(())
}

fn run_borel(cli: &Cli, out: &mut Output, action: &BorelAction) -> Result<(), String> {
    match action {
        BorelAction::Basis { n, m } => {
            let pair = borel::build_borel_pair(*n, *m).map_err(|e| e.to_string())?;
            let cert =
                borel::verify_basis_freeness(&pair, cli.degree_bound).map_err(|e| e.to_string())?;
            let summary = format!("rank {} basis of squarefree monomials", cert.rank);
            let passed = cert.passed;
            out.emit("borel-basis", passed, None, cert, &summary);
        }
        BorelAction::Invariants { n } => {
            let pair = borel::build_borel_pair(*n, 1).map_err(|e| e.to_string())?;
            let bound = cli.degree_bound.max(2 * (*n as i64 + 2));
            let cert = borel::weyl_invariants_check(&pair, bound).map_err(|e| e.to_string())?;
            let summary = format!("invariant dimensions match to degree {bound}");
            let passed = cert.passed;
            out.emit("borel-invariants", passed, None, cert, &summary);
        }
        BorelAction::Euler => {
            let cert = borel::euler_class_restriction_table().map_err(|e| e.to_string())?;
            let passed = cert.passed;
            out.emit(
                "borel-euler",
                passed,
                None,
                cert,
                "three substitution identities on x(x+w)",
            );
        }
        BorelAction::Series { catalog } => {
            let entries: Vec<SeriesCatalogEntry> = match catalog {
                Some(path) => {
                    let text = std::fs::read_to_string(path)
                        .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
                    serde_json::from_str(&text).map_err(|e| format!("{}: {e}", path.display()))?
                }
                None => borel::default_series_catalog(),
            };
            #[derive(Serialize)]
            struct EntryResult {
                name: String,
                ok: bool,
            }
            #[derive(Serialize)]
            struct Payload {
                entries: Vec<EntryResult>,
            }
            let mut results = Vec::new();
            let mut all = true;
            for entry in &entries {
                let chain = entry.chain().map_err(|e| format!("{}: {e}", entry.name))?;
                let ok = borel::free_extension_series_check(&chain).map_err(|e| e.to_string())?;
                all &= ok;
                results.push(EntryResult {
                    name: entry.name.clone(),
                    ok,
                });
            }
            let summary = format!("{} catalog entries", results.len());
            out.emit(
                "borel-series",
                all,
                None,
                Payload { entries: results },
                &summary,
            );
        }
    }
    Ok(())
}

fn run_bigpolygon(out: &mut Output, args: &BigpolygonArgs) -> Result<(), String> {
    let lengths = match &args.lengths {
        Some(ls) => Some(
            ls.iter()
                .map(|s| Length::parse(s))
                .collect::<Result<Vec<_>, _>>()
                .map_err(|e| e.to_string())?,
        ),
        None => None,
    };
    let cfg = PolygonConfig::new(args.n, args.a, args.b, lengths).map_err(|e| e.to_string())?;
    match args.action {
        BigpolygonAction::Verify => {
            if args.n.is_multiple_of(2) || !cfg.is_equilateral() {
                return Err("the syzygy theorem is verified for equilateral odd n".into());
            }
            let m = cfg.m();
            if m < 1 {
                return Err("the theorem needs n >= 3".into());
            }
            let cert =
                bigpolygon::verify_syzygy_theorem(m, args.b, args.a).map_err(|e| e.to_string())?;
            let summary = format!(
                "syzygy order {} (expected {})",
                cert.analysis.syzygy_order, cert.expected_order
            );
            let passed = cert.passed;
            out.emit("bigpolygon-verify", passed, None, cert, &summary);
        }
        BigpolygonAction::Decompose => {
            let cert =
                bigpolygon::structural_decomposition_check(&cfg).map_err(|e| e.to_string())?;
            let summary = format!(
                "kernel offset {}, cokernel offset {}",
                cert.kernel.fitted_offset, cert.cokernel.fitted_offset
            );
            let passed = cert.passed;
            out.emit("bigpolygon-decompose", passed, None, cert, &summary);
        }
    }
    Ok(())
}
