//! Command-line front end. Report lines go to stdout, diagnostics to
//! stderr. Exit codes: 0 ok, 1 rejected, 2 usage or parse error, 3 some
//! result is only an interval because the budget ran out.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};

use leafage::cert::{report_json, verify_certificate, Certificate, CertificateRefs};
use leafage::ferrers::{
    exact_disjoint_ferrers_dimension_with, exact_ferrers_dimension_with, ferrers_dim_le2,
    Dimension, Le2Witness,
};
use leafage::poset::{incidence_poset, width_and_chains};
use leafage::search::{exact_catch_leafage, exact_leafage, parameter_chain, LeafageResult};
use leafage::sweep::{sweep, to_csv, SweepMode};
use leafage::tree::{export_dot, extract_ferrers_partition};
use leafage::{gen_family, Digraph, Error, SearchBudget, Verdict};

#[derive(Parser)]
#[command(
    name = "leafage",
    version,
    about = "Leafage, catch leafage and Ferrers dimension of digraphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write the adjacency matrix of a named family.
    Gen {
        /// Dn, En, Cn, Fn, Mkm, In, PathLoops or Closing5.
        family: String,
        params: Vec<usize>,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Compute parameters of the digraph in a matrix file.
    Compute {
        matrix: PathBuf,
        #[command(flatten)]
        which: Which,
        #[command(flatten)]
        budget: BudgetArgs,
        /// Directory for certificates and the JSON report.
        #[arg(long)]
        cert_out: Option<PathBuf>,
    },
    /// Check a certificate (representation or Ferrers cover) against a matrix.
    Verify {
        matrix: PathBuf,
        certificate: PathBuf,
    },
    /// Extract a disjoint Ferrers cover from a representation certificate.
    Extract {
        matrix: PathBuf,
        certificate: PathBuf,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Parameter table over all digraphs of order n, or a seeded sample.
    Sweep {
        n: usize,
        #[arg(long, value_enum, default_value_t = Mode::Exhaustive)]
        mode: Mode,
        #[arg(long, default_value_t = 100)]
        count: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        budget: BudgetArgs,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Render the host tree of a representation certificate in DOT.
    Dot {
        certificate: PathBuf,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Exhaustive,
    Random,
}

#[derive(Args)]
struct Which {
    /// The whole chain f, f*, l, l*, w, n (the default).
    #[arg(long)]
    all: bool,
    #[arg(long)]
    f: bool,
    #[arg(long)]
    fstar: bool,
    #[arg(long)]
    l: bool,
    #[arg(long)]
    lstar: bool,
    #[arg(long)]
    w: bool,
    /// Only decide f <= 2 with the bipartite test.
    #[arg(long)]
    f2: bool,
}

#[derive(Args)]
struct BudgetArgs {
    #[arg(long)]
    budget_nodes: Option<u64>,
    #[arg(long)]
    budget_seconds: Option<u64>,
    #[arg(long)]
    max_host_vertices: Option<usize>,
}

impl BudgetArgs {
    fn budget(&self) -> SearchBudget {
        let mut b = SearchBudget::default();
        if let Some(nodes) = self.budget_nodes {
            b = b.with_node_limit(nodes);
        }
        if let Some(secs) = self.budget_seconds {
            b = b.with_time_limit(Duration::from_secs(secs));
        }
        if let Some(v) = self.max_host_vertices {
            b = b.with_max_host_vertices(v);
        }
        b
    }
}

/// A failure with its exit code.
struct Failure(u8, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Invariant(_) | Error::InvalidRepresentation(_) => 1,
            _ => 2,
        };
        Failure(code, e.to_string())
    }
}

type Outcome = Result<u8, Failure>;

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure(2, format!("{}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> Result<(), Failure> {
    fs::write(path, text).map_err(|e| Failure(2, format!("{}: {e}", path.display())))
}

fn emit(out: Option<&Path>, text: &str) -> Result<(), Failure> {
    match out {
        Some(path) => write(path, text),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn read_matrix(path: &Path) -> Result<Digraph, Failure> {
    Digraph::from_matrix_text(&read(path)?)
        .map_err(|e| Failure(2, format!("{}: {e}", path.display())))
}

fn read_certificate(path: &Path) -> Result<Certificate, Failure> {
    Certificate::from_json(&read(path)?).map_err(|e| Failure(2, format!("{}: {e}", path.display())))
}

fn show_dimension(d: &Dimension) -> String {
    match d.value() {
        Some(v) => v.to_string(),
        None => format!(">={}", d.lower_bound()),
    }
}

struct CertDir(Option<PathBuf>);

impl CertDir {
    fn save(&self, name: &str, cert: Option<Certificate>) -> Result<Option<String>, Failure> {
        let (Some(dir), Some(cert)) = (&self.0, cert) else {
            return Ok(None);
        };
        fs::create_dir_all(dir).map_err(|e| Failure(2, format!("{}: {e}", dir.display())))?;
        write(&dir.join(name), &cert.to_json())?;
        Ok(Some(name.to_string()))
    }

    fn cover(&self, name: &str, d: &Dimension) -> Result<Option<String>, Failure> {
        self.save(name, d.cover().map(Certificate::from_cover))
    }

    fn rep(&self, name: &str, r: &LeafageResult) -> Result<Option<String>, Failure> {
        self.save(
            name,
            r.certificate.as_ref().map(Certificate::from_representation),
        )
    }
}

fn compute(
    matrix: &Path,
    which: &Which,
    budget: &SearchBudget,
    cert_out: Option<PathBuf>,
) -> Outcome {
    let d = read_matrix(matrix)?;
    let n = d.n();
    let certs = CertDir(cert_out);
    if which.f2 {
        let test = ferrers_dim_le2(&d);
        println!("f<=2: {}", if test.bipartite { "yes" } else { "no" });
        if let Le2Witness::OddCycle(cycle) = &test.witness {
            let cells: Vec<String> = cycle
                .iter()
                .map(|(r, c)| format!("({},{})", r + 1, c + 1))
                .collect();
            eprintln!("odd cycle in the conflict graph: {}", cells.join(" "));
        }
        if !(which.f || which.fstar || which.l || which.lstar || which.w || which.all) {
            return Ok(0);
        }
    }
    let all =
        which.all || !(which.f || which.fstar || which.l || which.lstar || which.w || which.f2);
    if all {
        let report = parameter_chain(&d, budget)?;
        let refs = CertificateRefs {
            f: certs.cover("f.json", &report.f)?,
            f_star: certs.cover("fstar.json", &report.f_star)?,
            l: certs.rep("l.json", &report.l)?,
            l_star: certs.rep("lstar.json", &report.l_star)?,
        };
        if let Some(dir) = &certs.0 {
            let json = serde_json::to_string_pretty(&report_json(&report, &refs))
                .expect("report serializes");
            write(&dir.join("report.json"), &json)?;
        }
        if report.width_certifies_catch() {
            eprintln!("unique maximal predecessor set: l* = w without search");
        }
        println!("{report}");
        return Ok(if report.is_budget_limited() { 3 } else { 0 });
    }
    let mut tokens = Vec::new();
    let mut limited = false;
    let k_max = n.max(1);
    if which.f {
        let f = exact_ferrers_dimension_with(&d, k_max, &mut budget.meter());
        limited |= f.value().is_none();
        certs.cover("f.json", &f)?;
        tokens.push(format!("f={}", show_dimension(&f)));
    }
    if which.fstar {
        let fs = exact_disjoint_ferrers_dimension_with(&d, k_max, &mut budget.meter());
        limited |= fs.value().is_none();
        certs.cover("fstar.json", &fs)?;
        tokens.push(format!("f*={}", show_dimension(&fs)));
    }
    if which.l {
        let l = exact_leafage(&d, budget);
        limited |= !l.exact();
        certs.rep("l.json", &l)?;
        tokens.push(format!("l={l}"));
    }
    if which.lstar {
        let ls = exact_catch_leafage(&d, budget);
        limited |= !ls.exact();
        certs.rep("lstar.json", &ls)?;
        tokens.push(format!("l*={ls}"));
    }
    if which.w {
        tokens.push(format!(
            "w={}",
            width_and_chains(&incidence_poset(&d)).width
        ));
    }
    println!("{}", tokens.join(" "));
    Ok(if limited { 3 } else { 0 })
}

fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Gen {
            family,
            params,
            out,
        } => {
            let d = gen_family(&family, &params)?;
            match out {
                Some(path) => {
                    write(&path, &d.to_matrix_text())?;
                    println!("n={}", d.n());
                }
                None => print!("{}", d.to_matrix_text()),
            }
            Ok(0)
        }
        Command::Compute {
            matrix,
            which,
            budget,
            cert_out,
        } => compute(&matrix, &which, &budget.budget(), cert_out),
        Command::Verify {
            matrix,
            certificate,
        } => {
            let d = read_matrix(&matrix)?;
            let cert = read_certificate(&certificate)?;
            match verify_certificate(&d, &cert)? {
                Verdict::Accept => {
                    println!("accept");
                    Ok(0)
                }
                Verdict::Reject(why) => {
                    println!("reject");
                    eprintln!("{why}");
                    Ok(1)
                }
            }
        }
        Command::Extract {
            matrix,
            certificate,
            out,
        } => {
            let d = read_matrix(&matrix)?;
            let rep = read_certificate(&certificate)?.to_representation()?;
            let cover = extract_ferrers_partition(&d, &rep)?;
            emit(
                out.as_deref(),
                &(Certificate::from_cover(&cover).to_json() + "\n"),
            )?;
            Ok(0)
        }
        Command::Sweep {
            n,
            mode,
            count,
            seed,
            budget,
            out,
        } => {
            let mode = match mode {
                Mode::Exhaustive => SweepMode::Exhaustive,
                Mode::Random => SweepMode::Random { count, seed },
            };
            let rows = sweep(n, mode, &budget.budget())?;
            emit(out.as_deref(), &to_csv(&rows))?;
            Ok(if rows.iter().any(|r| r.is_budget_limited()) {
                3
            } else {
                0
            })
        }
        Command::Dot { certificate, out } => {
            let rep = read_certificate(&certificate)?.to_representation()?;
            emit(out.as_deref(), &export_dot(&rep))?;
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(Failure(code, message)) => {
            eprintln!("error: {message}");
            ExitCode::from(code)
        }
    }
}
