use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use chibound::bounds::full_report;
use chibound::certify::{certify_specs, find_homomorphism, verify_all_lemmas, verify_certificate, ObstructionCertificate};
use chibound::fracchrom::fractional_chromatic;
use chibound::graph::{enumerate_nonisomorphic_with, write_graph6};
use chibound::survey::{run_survey_with, DEFAULT_TIE_EPS};
use chibound::symmetry::pair_orbit_scheme;
use chibound::{Error, Execution, GraphSpec};
use clap::{Parser, Subcommand};
use serde::Serialize;

/// Spectral chromatic bounds, fractional chromatic numbers and homomorphism
/// obstructions. Graphs are given as `g6:<graph6>`, `file:<path>`,
/// `<generator>[:arg...]` or `complement:<spec>`.
///
/// Set RAYON_NUM_THREADS to control the worker count.
#[derive(Parser)]
#[command(name = "chibound", version)]
struct Cli {
    /// Run batch work on the calling thread only.
    #[arg(long, global = true)]
    sequential: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Squared-energy, Hoffman, inertia and clique bounds.
    Bounds { graph: GraphSpec },
    /// Exact fractional chromatic number with certificates.
    Chif {
        graph: GraphSpec,
        /// Print only the value.
        #[arg(long)]
        value_only: bool,
    },
    /// Obstruction certificate for G -> H, falling back to a homomorphism search.
    Certify { source: GraphSpec, target: GraphSpec },
    /// Recompute a certificate JSON file from its embedded graph specs.
    VerifyCertificate { file: PathBuf },
    /// Pair-orbit scheme of an edge-transitive graph.
    Scheme { graph: GraphSpec },
    /// Seeded randomized checks of the four matrix lemmas.
    VerifyLemmas {
        #[arg(long)]
        target: GraphSpec,
        #[arg(long, default_value_t = 200)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Compare the squared-energy bound with Hoffman over a graph6 corpus.
    Survey {
        file: PathBuf,
        #[arg(long, default_value_t = DEFAULT_TIE_EPS)]
        tie_eps: f64,
        /// Write per-graph rows to this CSV file.
        #[arg(long)]
        csv: Option<PathBuf>,
        /// Print statistics as JSON instead of a table.
        #[arg(long)]
        json: bool,
    },
    /// Print all non-isomorphic graphs on K vertices in graph6.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        connected: bool,
    },
}

#[derive(Serialize)]
struct CertifyOutput {
    source: String,
    target: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    certificate: Option<ObstructionCertificate>,
    #[serde(skip_serializing_if = "Option::is_none")]
    certificate_error: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    homomorphism: Option<Vec<usize>>,
    conclusion: &'static str,
}

#[derive(Serialize)]
struct SchemeClassOutput<'a> {
    index: usize,
    #[serde(flatten)]
    class: &'a chibound::symmetry::SchemeClass,
    rows: Vec<String>,
}

#[derive(Serialize)]
struct SchemeOutput<'a> {
    graph6: String,
    group_order: String,
    edge_class_index: usize,
    classes: Vec<SchemeClassOutput<'a>>,
}

fn print_json<T: Serialize>(value: &T) -> Result<(), Error> {
    let text = serde_json::to_string_pretty(value).map_err(|e| Error::Io(e.to_string()))?;
    println!("{text}");
    Ok(())
}

fn run(cli: Cli) -> Result<bool, Error> {
    let exec = if cli.sequential { Execution::Sequential } else { Execution::default() };
    match cli.command {
        Command::Bounds { graph } => {
            print_json(&full_report(&graph.build()?, &graph.to_string())?)?;
        }
        Command::Chif { graph, value_only } => {
            let sol = fractional_chromatic(&graph.build()?)?;
            if value_only {
                println!("{}", sol.value_string());
            } else {
                print_json(&sol)?;
            }
        }
        Command::Certify { source, target } => {
            let mut out = CertifyOutput {
                source: source.to_string(),
                target: target.to_string(),
                certificate: None,
                certificate_error: None,
                homomorphism: None,
                conclusion: "inconclusive",
            };
            match certify_specs(&source, &target) {
                Ok(c) => out.certificate = Some(c),
                Err(e @ (Error::NotEdgeTransitive { .. } | Error::Edgeless)) => out.certificate_error = Some(e.to_string()),
                Err(e) => return Err(e),
            }
            if out.certificate.as_ref().is_some_and(|c| c.certified) {
                out.conclusion = "no homomorphism (spectral certificate)";
            } else {
                match find_homomorphism(&source.build()?, &target.build()?) {
                    Ok(Some(map)) => {
                        out.homomorphism = Some(map);
                        out.conclusion = "homomorphism found";
                    }
                    Ok(None) => out.conclusion = "no homomorphism (exhaustive search)",
                    Err(Error::BudgetExceeded { .. } | Error::SizeCap { .. }) => {}
                    Err(e) => return Err(e),
                }
            }
            print_json(&out)?;
        }
        Command::VerifyCertificate { file } => {
            let text = std::fs::read_to_string(&file).map_err(|e| Error::Io(format!("{}: {e}", file.display())))?;
            let cert: ObstructionCertificate =
                serde_json::from_str(&text).map_err(|e| Error::Io(format!("{}: {e}", file.display())))?;
            let fresh = verify_certificate(&cert)?;
            print_json(&fresh)?;
            eprintln!("certificate verified");
        }
        Command::Scheme { graph } => {
            let scheme = pair_orbit_scheme(&graph.build()?)?;
            let classes = scheme
                .classes
                .iter()
                .enumerate()
                .map(|(index, class)| SchemeClassOutput { index, class, rows: scheme.bitstring_rows(index) })
                .collect();
            print_json(&SchemeOutput {
                graph6: write_graph6(&scheme.base),
                group_order: scheme.group.order().to_string(),
                edge_class_index: scheme.edge_class_index,
                classes,
            })?;
        }
        Command::VerifyLemmas { target, trials, seed } => {
            let reports = verify_all_lemmas(&target.build()?, trials, seed, exec)?;
            print_json(&reports)?;
            return Ok(reports.iter().all(|r| r.passed));
        }
        Command::Survey { file, tie_eps, csv, json } => {
            let text = std::fs::read_to_string(&file).map_err(|e| Error::Io(format!("{}: {e}", file.display())))?;
            let stats = run_survey_with(&file.display().to_string(), &text, tie_eps, exec)?;
            if let Some(path) = csv {
                let f = File::create(&path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
                stats.write_csv(BufWriter::new(f))?;
            }
            if json {
                print_json(&stats)?;
            } else {
                print!("{stats}");
            }
        }
        Command::Enumerate { n, connected } => {
            let graphs = enumerate_nonisomorphic_with(n, connected, exec)?;
            let mut out = BufWriter::new(io::stdout().lock());
            for g in &graphs {
                writeln!(out, "{}", write_graph6(g)).map_err(|e| Error::Io(e.to_string()))?;
            }
            out.flush().map_err(|e| Error::Io(e.to_string()))?;
        }
    }
    Ok(true)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
