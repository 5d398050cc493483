use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use gradspec::corpus::{generate_corpus, Bounds};
use gradspec::error::HarnessError;
use gradspec::instance::{parse_instance, Instance};
use gradspec::search::{default_bounds, search, Property};
use gradspec::{analyze, dump, fixture_instances, verify};
use gradspec_core::ring::CARRIER_LIMIT;
use gradspec_core::Limits;

/// Graded prime and second spectra of finite graded rings and modules.
#[derive(Parser)]
#[command(name = "gradspec", version)]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[arg(long, global = true, default_value_t = CARRIER_LIMIT)]
    max_ring_order: usize,
    #[arg(long, global = true, default_value_t = CARRIER_LIMIT)]
    max_module_order: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Parse and validate an instance file.
    Validate { file: PathBuf },
    /// Graded prime spectrum and its topology.
    Spec { file: PathBuf },
    /// Graded second spectrum, natural map and module predicates.
    Sspec { file: PathBuf },
    /// Second socle and Zariski socle of a submodule given by element indices.
    Socle {
        file: PathBuf,
        #[arg(long, value_delimiter = ',', num_args = 1.., required = true)]
        submodule: Vec<usize>,
    },
    /// Run property suites on the fixtures, a generated corpus or given files.
    Verify {
        /// Suite id or dotted prefix; comma-separated for several.
        #[arg(long)]
        suite: Option<String>,
        /// Corpus bounds, e.g. `ring=32,module=64,group=4,count=110`.
        #[arg(long)]
        corpus: Option<String>,
        #[arg(long)]
        seed: Option<u64>,
        /// Record wall-clock time per row (reports are then not reproducible).
        #[arg(long)]
        timing: bool,
        /// Instance files to check instead of a corpus.
        #[arg(long = "instance")]
        instances: Vec<PathBuf>,
    },
    /// Bounded search for a module with the given property.
    Search {
        /// non-secondful, secondless or non-cotop
        property: String,
        #[arg(long)]
        corpus: Option<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Print a generated corpus.
    Gen {
        #[arg(long)]
        corpus: Option<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

fn limits(cli: &Cli) -> Result<Limits, HarnessError> {
    for (flag, v) in [("--max-ring-order", cli.max_ring_order), ("--max-module-order", cli.max_module_order)] {
        if v == 0 || v > CARRIER_LIMIT {
            return Err(HarnessError::Usage(format!("{flag} must be between 1 and {CARRIER_LIMIT}")));
        }
    }
    Ok(Limits { max_ring_order: cli.max_ring_order, max_module_order: cli.max_module_order, ..Limits::default() })
}

fn bounds(spec: Option<&str>, default: Bounds) -> Result<Bounds, HarnessError> {
    match spec {
        Some(s) => {
            let parsed: Bounds = s.parse()?;
            // Keys omitted from the flag keep the command's defaults.
            let given = |k: &str| s.split(',').any(|p| p.trim().starts_with(&format!("{k}=")));
            Ok(Bounds {
                ring: if given("ring") { parsed.ring } else { default.ring },
                module: if given("module") { parsed.module } else { default.module },
                group: if given("group") { parsed.group } else { default.group },
                count: if given("count") { parsed.count } else { default.count },
            })
        }
        None => Ok(default),
    }
}

fn single(cli: &Cli, file: &Path) -> Result<gradspec::context::Analysis, HarnessError> {
    let limits = limits(cli)?;
    let instance = parse_instance(file, &limits)?;
    Ok(analyze(vec![instance], &limits)?.remove(0))
}

fn print(cli: &Cli, value: &serde_json::Value) {
    if cli.json {
        println!("{}", serde_json::to_string_pretty(value).expect("values serialize"));
    } else {
        print!("{}", dump::to_text(value));
    }
}

fn run(cli: &Cli) -> Result<i32, HarnessError> {
    match &cli.command {
        Command::Validate { file } => {
            let instance = parse_instance(file, &limits(cli)?)?;
            let value = serde_json::json!({
                "instance": instance.name(),
                "valid": true,
                "ring_order": instance.ring.size(),
                "module_order": instance.module.as_ref().map(|m| m.size()),
            });
            print(cli, &value);
            Ok(0)
        }
        Command::Spec { file } => {
            print(cli, &dump::spec(&single(cli, file)?));
            Ok(0)
        }
        Command::Sspec { file } => {
            print(cli, &dump::sspec(&single(cli, file)?)?);
            Ok(0)
        }
        Command::Socle { file, submodule } => {
            print(cli, &dump::socle(&single(cli, file)?, submodule)?);
            Ok(0)
        }
        Command::Verify { suite, corpus, seed, timing, instances } => {
            let limits = limits(cli)?;
            let (list, report_seed): (Vec<Instance>, Option<u64>) = if !instances.is_empty() {
                (instances.iter().map(|p| parse_instance(p, &limits)).collect::<Result<_, _>>()?, None)
            } else if corpus.is_some() || seed.is_some() {
                let b = bounds(corpus.as_deref(), Bounds::default())?;
                let s = seed.unwrap_or(0);
                (generate_corpus(&b, s).instances, Some(s))
            } else {
                (fixture_instances(), None)
            };
            let report = verify(list, &limits, suite.as_deref(), report_seed, *timing)?;
            if cli.json {
                println!("{}", report.to_json());
            } else {
                print!("{}", report.to_text());
            }
            Ok(report.exit_code())
        }
        Command::Search { property, corpus, seed } => {
            let property: Property = property.parse()?;
            let b = bounds(corpus.as_deref(), default_bounds())?;
            let outcome = search(property, &b, *seed);
            if cli.json {
                println!("{}", outcome.to_json());
            } else {
                print!("{}", outcome.to_text());
            }
            Ok(0)
        }
        Command::Gen { corpus, seed } => {
            let b = bounds(corpus.as_deref(), Bounds::default())?;
            let c = generate_corpus(&b, *seed);
            if cli.json {
                println!("{}", c.to_json());
            } else {
                for i in &c.instances {
                    println!("{}  {}", i.name(), i.file.notes.as_deref().unwrap_or(""));
                }
                println!("{} instances, {} discarded", c.instances.len(), c.discarded);
                if let Some(n) = &c.note {
                    println!("{n}");
                }
            }
            Ok(0)
        }
    }
}
