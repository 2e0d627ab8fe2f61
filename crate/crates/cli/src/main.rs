//! `kempe`: generate the example graphs, compute Kempe classes, and check
//! frozen colourings from the command line.
//!
//! Exit codes: 0 success or property holds, 1 property fails, 2 usage or
//! input error, 3 resource cap reached.

use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use kempe_core::frozen::{build_certificate_with_chi, certificate_checks};
use kempe_core::io::{parse_colouring, to_dot, GraphFile};
use kempe_core::kempe::DEFAULT_STATE_CAP;
use kempe_core::{
    apply_op_2k2, are_kempe_equivalent, build_not_kempe_class_certificate, contains_induced, find_op2k2_candidates,
    is_frozen, is_kempe_frozen, is_proper, kempe_classes, named_graph, small_graph_census, verify, Colouring, Error,
    FamilySpec, Op2K2Input,
};

#[derive(Parser)]
#[command(name = "kempe", version, about = "Kempe classes and frozen colourings of small graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Emit a family graph with its named colourings.
    Gen {
        /// prism, fig1, fig2, d_q, y_r, h_k (or d_2, y_3, h_4, ...)
        family: String,
        /// Family parameter q, r or k.
        #[arg(long)]
        param: Option<usize>,
        /// Write the graph file here instead of stdout.
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Also write a DOT drawing, labelled by the first colouring.
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Check a property of a colouring.
    Check {
        property: Property,
        /// Graph file, or - for stdin.
        graph: String,
        /// Name of a colouring in the graph file, or a colouring file.
        colouring: String,
    },
    /// Partition all k-colourings into Kempe classes.
    Classes {
        graph: String,
        #[arg(short)]
        k: usize,
        #[arg(long, default_value_t = DEFAULT_STATE_CAP)]
        cap: usize,
    },
    /// Decide whether two colourings are Kempe equivalent.
    Equiv {
        graph: String,
        first: String,
        second: String,
        #[arg(short)]
        k: usize,
        #[arg(long, default_value_t = DEFAULT_STATE_CAP)]
        cap: usize,
    },
    /// Validate a Kempe-frozen colouring plus a witness with another partition.
    Certificate {
        graph: String,
        frozen: String,
        witness: String,
        /// Also compute the chromatic number.
        #[arg(long)]
        with_chi: bool,
    },
    /// Decide whether a graph has no induced copy of a named graph.
    Hfree {
        graph: String,
        /// P1..P8, C3..C8, K1..K8, 2K2, 3K1, P3+P1, prism, triangle.
        #[arg(long)]
        forbidden: String,
    },
    /// Apply the 2K2-free extension operation, or list where it applies.
    Op2k2 {
        graph: String,
        beta: String,
        gamma: String,
        #[arg(long, requires = "y", conflicts_with = "search")]
        x: Option<usize>,
        #[arg(long, requires = "x")]
        y: Option<usize>,
        #[arg(long, required_unless_present = "x")]
        search: bool,
        /// Write the new graph with colourings beta_prime and gamma_prime.
        #[arg(short, long, conflicts_with = "search")]
        output: Option<PathBuf>,
    },
    /// Count graphs on n vertices up to isomorphism by triangles and 3K1s.
    Census {
        #[arg(short)]
        n: usize,
    },
    /// Reproduce every published claim and print a pass/fail table.
    VerifyPaper {
        /// Skip the Y_3 checks beyond zeta and all q = 4 checks.
        #[arg(long)]
        fast: bool,
        /// Print the results as JSON instead of a table.
        #[arg(long)]
        json: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Property {
    Proper,
    Frozen,
    KempeFrozen,
}

enum Failure {
    Usage(String),
    Lib(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

type Outcome = Result<ExitCode, Failure>;

fn verdict(holds: bool) -> ExitCode {
    if holds {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn print(value: &serde_json::Value) {
    emit(&serde_json::to_string_pretty(value).expect("JSON values serialize"));
}

/// Writes a line to stdout; a reader that hung up early is not an error.
fn emit(text: &str) {
    let mut out = io::stdout().lock();
    let _ = writeln!(out, "{text}").and_then(|_| out.flush());
}

/// Reads a path, or stdin for `-`. Stdin may be read once per run.
struct Inputs {
    stdin_used: bool,
}

impl Inputs {
    fn read(&mut self, source: &str) -> Result<String, Failure> {
        if source == "-" {
            if self.stdin_used {
                return Err(Failure::Usage("stdin can only be read once".into()));
            }
            self.stdin_used = true;
            let mut s = String::new();
            io::stdin()
                .read_to_string(&mut s)
                .map_err(|e| Failure::Usage(format!("reading stdin: {e}")))?;
            Ok(s)
        } else {
            fs::read_to_string(source).map_err(|e| Failure::Usage(format!("reading {source}: {e}")))
        }
    }

    fn graph(&mut self, source: &str) -> Result<GraphFile, Failure> {
        Ok(GraphFile::parse(&self.read(source)?)?)
    }

    fn colouring(&mut self, file: &GraphFile, source: &str) -> Result<Colouring, Failure> {
        if let Some(c) = file.colourings.get(source) {
            return Ok(c.clone());
        }
        if source != "-" && !Path::new(source).exists() {
            let known: Vec<_> = file.colourings.keys().map(String::as_str).collect();
            return Err(Failure::Usage(format!(
                "{source:?} is neither a colouring in the graph file (have {known:?}) nor a file"
            )));
        }
        Ok(parse_colouring(&self.read(source)?)?)
    }
}

fn write_out(path: &Path, text: &str) -> Result<(), Failure> {
    fs::write(path, text).map_err(|e| Failure::Usage(format!("writing {}: {e}", path.display())))
}

fn run(cli: Cli) -> Outcome {
    let mut inputs = Inputs { stdin_used: false };
    match cli.command {
        Command::Gen {
            family,
            param,
            output,
            dot,
        } => {
            let spec = match param {
                Some(p) => FamilySpec::new(&family, Some(p))?,
                None => FamilySpec::from_str(&family)?,
            };
            let inst = spec.generate()?;
            let file = GraphFile::from(inst.clone());
            if let Some(path) = dot {
                let first = inst.colourings.first().map(|(_, c)| c);
                write_out(&path, &to_dot(&file.graph, first))?;
            }
            match output {
                Some(path) => write_out(&path, &(file.to_json() + "\n"))?,
                None => emit(&file.to_json()),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Check {
            property,
            graph,
            colouring,
        } => {
            let file = inputs.graph(&graph)?;
            let c = inputs.colouring(&file, &colouring)?;
            let g = &file.graph;
            let (name, holds) = match property {
                Property::Proper => ("proper", is_proper(g, &c)?),
                Property::Frozen | Property::KempeFrozen if !is_proper(g, &c)? => {
                    return Err(Failure::Usage("the colouring is not proper".into()));
                }
                Property::Frozen => ("frozen", is_frozen(g, &c)?),
                Property::KempeFrozen => ("kempe-frozen", is_kempe_frozen(g, &c)?),
            };
            print(&json!({ "property": name, "holds": holds }));
            Ok(verdict(holds))
        }
        Command::Classes { graph, k, cap } => {
            let file = inputs.graph(&graph)?;
            let report = kempe_classes(&file.graph, k, cap)?;
            print(&serde_json::to_value(&report).expect("reports serialize"));
            Ok(ExitCode::SUCCESS)
        }
        Command::Equiv {
            graph,
            first,
            second,
            k,
            cap,
        } => {
            let file = inputs.graph(&graph)?;
            let c1 = inputs.colouring(&file, &first)?.with_k(k)?;
            let c2 = inputs.colouring(&file, &second)?.with_k(k)?;
            let eq = are_kempe_equivalent(&file.graph, &c1, &c2, cap)?;
            print(&json!({ "k": k, "equivalent": eq }));
            Ok(verdict(eq))
        }
        Command::Certificate {
            graph,
            frozen,
            witness,
            with_chi,
        } => {
            let file = inputs.graph(&graph)?;
            let f = inputs.colouring(&file, &frozen)?;
            let w = inputs.colouring(&file, &witness)?;
            let built = if with_chi {
                build_certificate_with_chi(&file.graph, &f, &w)
            } else {
                build_not_kempe_class_certificate(&file.graph, &f, &w)
            };
            match built {
                Ok(cert) => {
                    let mut v = serde_json::to_value(&cert).expect("certificates serialize");
                    v["valid"] = json!(true);
                    print(&v);
                    Ok(ExitCode::SUCCESS)
                }
                Err(Error::CertificateRejected(why)) => {
                    let checks = certificate_checks(&file.graph, &f, &w)?;
                    print(&json!({ "valid": false, "reason": why, "checks": checks }));
                    Ok(ExitCode::from(1))
                }
                Err(e) => Err(e.into()),
            }
        }
        Command::Hfree { graph, forbidden } => {
            let file = inputs.graph(&graph)?;
            let h = named_graph(&forbidden)?;
            let free = !contains_induced(&file.graph, &h)?;
            print(&json!({ "forbidden": forbidden, "free": free }));
            Ok(verdict(free))
        }
        Command::Op2k2 {
            graph,
            beta,
            gamma,
            x,
            y,
            search,
            output,
        } => {
            let file = inputs.graph(&graph)?;
            let beta = inputs.colouring(&file, &beta)?;
            let gamma = inputs.colouring(&file, &gamma)?;
            if search {
                let found = find_op2k2_candidates(&file.graph, &beta, &gamma)?;
                print(&serde_json::to_value(&found).expect("candidates serialize"));
                return Ok(verdict(!found.is_empty()));
            }
            let (x, y) = (x.expect("clap requires x"), y.expect("clap requires y"));
            let out = apply_op_2k2(&Op2K2Input {
                g: file.graph,
                beta,
                gamma,
                x,
                y,
            })?;
            if let Some(path) = output {
                let mut f = GraphFile::new(out.graph.clone());
                f.colourings.insert("beta_prime".into(), out.beta_prime.clone());
                f.colourings.insert("gamma_prime".into(), out.gamma_prime.clone());
                write_out(&path, &(f.to_json() + "\n"))?;
            }
            print(&serde_json::to_value(&out).expect("outputs serialize"));
            Ok(ExitCode::SUCCESS)
        }
        Command::Census { n } => {
            let report = small_graph_census(n)?;
            print(&serde_json::to_value(&report).expect("reports serialize"));
            Ok(ExitCode::SUCCESS)
        }
        Command::VerifyPaper { fast, json } => {
            let results = verify::run_all(fast);
            let ok = results.iter().all(|r| r.passed && r.within_budget());
            if json {
                print(&serde_json::to_value(&results).expect("results serialize"));
            } else {
                for r in &results {
                    let mark = match (r.passed, r.within_budget()) {
                        (true, true) => "PASS",
                        (true, false) => "SLOW",
                        _ => "FAIL",
                    };
                    emit(&format!(
                        "{mark}  {:>2}  {:<55} {:>9.2?}  {}",
                        r.id, r.title, r.elapsed, r.detail
                    ));
                }
            }
            Ok(verdict(ok))
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Lib(e)) => {
            eprintln!("error: {e}");
            if let Error::PartialClasses { partial, .. } = &e {
                print(&serde_json::to_value(partial.as_ref()).expect("reports serialize"));
            }
            ExitCode::from(if e.is_resource() { 3 } else { 2 })
        }
    }
}
