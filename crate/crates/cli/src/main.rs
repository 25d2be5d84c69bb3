use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use kummer_core::analysis::{self, DualityEntry, InclusionDiagram, Verification};
use kummer_core::catalog::{self, CatalogEntry};
use kummer_core::conjugacy::DEFAULT_BOUND;
use kummer_core::report::{build_report, KummerReport};
use kummer_core::torus::TorsionLevel;

#[derive(Parser)]
#[command(name = "kummer", version, about = "Betti numbers of Kummer 3-folds A^3/G")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Run the pipeline on a catalog group or a generator file.
    Run {
        /// Catalog name such as "S4(2)".
        #[arg(required_unless_present_any = ["gens", "all"], conflicts_with_all = ["gens", "all"])]
        name: Option<String>,
        /// JSON file with {"name": ..., "generators": [...]}.
        #[arg(long, conflicts_with = "all")]
        gens: Option<PathBuf>,
        /// Run every catalog group in table order.
        #[arg(long)]
        all: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// Torsion level; must be a multiple of the group's working level.
        #[arg(long)]
        torsion_level: Option<i64>,
    },
    /// Compare every computed table entry with the reference data.
    Verify {
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Match transposed groups against the catalog.
    Duality {
        #[arg(long, default_value_t = DEFAULT_BOUND, value_parser = clap::value_parser!(i64).range(1..))]
        bound: i64,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Inclusions between catalog classes (covering relations).
    Diagram {
        #[arg(long, default_value_t = DEFAULT_BOUND, value_parser = clap::value_parser!(i64).range(1..))]
        bound: i64,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// List the catalog.
    Catalog {
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(2)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match dispatch(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn dispatch(cmd: Command) -> anyhow::Result<ExitCode> {
    match cmd {
        Command::Run {
            name,
            gens,
            all,
            format,
            torsion_level,
        } => {
            let level = torsion_level.map(TorsionLevel);
            let entries: Vec<CatalogEntry> = if all {
                catalog::catalog()
            } else if let Some(path) = gens {
                vec![catalog::load_generators(&path)?]
            } else {
                vec![catalog::lookup(name.as_deref().unwrap_or_default())?]
            };
            let reports = entries
                .iter()
                .map(|e| build_report(&e.name, &e.generators, level))
                .collect::<Result<Vec<KummerReport>, _>>()?;
            match format {
                Format::Json if all => emit(&format!("{}\n", serde_json::to_string_pretty(&reports)?)),
                Format::Json => emit(&format!("{}\n", reports[0].to_json())),
                Format::Text => {
                    let texts: Vec<String> = reports.iter().map(|r| r.to_text()).collect();
                    emit(&texts.join("\n"));
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { format } => {
            let v = analysis::verify_tables()?;
            match format {
                Format::Json => emit(&format!("{}\n", serde_json::to_string_pretty(&v)?)),
                Format::Text => emit(&verification_text(&v)),
            }
            Ok(if v.passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::Duality { bound, format } => {
            let d = analysis::duality_report(bound)?;
            match format {
                Format::Json => emit(&format!("{}\n", serde_json::to_string_pretty(&d)?)),
                Format::Text => emit(&duality_text(&d)),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Diagram { bound, format } => {
            let d = analysis::inclusion_diagram(bound)?;
            match format {
                Format::Json => emit(&format!("{}\n", serde_json::to_string_pretty(&d)?)),
                Format::Text => emit(&diagram_text(&d)),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Catalog { format } => {
            let entries = catalog::catalog();
            match format {
                Format::Json => emit(&format!("{}\n", serde_json::to_string_pretty(&entries)?)),
                Format::Text => {
                    for e in &entries {
                        let gens: Vec<String> = e.generators.iter().map(|g| g.to_string()).collect();
                        emit(&format!(
                            "{:<6}  order {:>2}  {}\n",
                            e.name,
                            e.group()?.order(),
                            gens.join("  ")
                        ));
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

/// Writes to stdout, ignoring a closed pipe.
fn emit(s: &str) {
    let _ = std::io::stdout().lock().write_all(s.as_bytes());
}

fn verification_text(v: &Verification) -> String {
    let mut out = String::new();
    for c in v.failures() {
        out.push_str(&format!(
            "FAIL {} {}\n  expected: {}\n  actual:   {}\n",
            c.group, c.item, c.expected, c.actual
        ));
    }
    for prefix in [
        "P_Y",
        "P_3",
        "P_2",
        "P_1",
        "P_X",
        "census",
        "curve",
        "distinct",
        "incidence",
    ] {
        let (ok, total) = v.count_for(prefix);
        out.push_str(&format!("{prefix:<10} {ok}/{total}\n"));
    }
    let ok = v.checks.iter().filter(|c| c.pass).count();
    out.push_str(&format!(
        "{}: {ok}/{} checks\n",
        if v.passed() { "PASS" } else { "FAIL" },
        v.checks.len()
    ));
    out
}

fn duality_text(d: &[DualityEntry]) -> String {
    let mut out = String::new();
    for e in d {
        match (&e.dual, &e.witness) {
            (Some(dual), Some(w)) => {
                let kind = if e.is_self_dual() { "self-dual" } else { "dual" };
                out.push_str(&format!("{:<6} -> {:<6} {kind:<9} witness {w}\n", e.class, dual));
            }
            _ => out.push_str(&format!(
                "{:<6} -> ?      inconclusive (candidates: {})\n",
                e.class,
                e.candidates.join(", ")
            )),
        }
    }
    out
}

fn diagram_text(d: &InclusionDiagram) -> String {
    let mut out = String::new();
    for e in &d.edges {
        out.push_str(&format!("{:<6} -> {:<6} witness {}\n", e.from, e.to, e.witness));
    }
    for i in &d.inconclusive {
        out.push_str(&format!(
            "inconclusive: {} subgroup in {} (candidates: {})\n",
            i.subgroup_iso,
            i.group,
            i.candidates.join(", ")
        ));
    }
    out
}
