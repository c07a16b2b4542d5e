//! Command-line front end.
//!
//! Exit status: 0 success, 1 negative result, 2 usage or input error,
//! 3 internal invariant violation.

use std::ffi::OsString;
use std::fs::File;
use std::io::{BufWriter, Read, Write};

use anyhow::{anyhow, Context};
use clap::{Parser, Subcommand, ValueEnum};
use treedom_core::census::CheckCaps;
use treedom_core::characterize::{
    decompose_to_p4, in_family_t_beta, in_family_t_l, structural_tl_check, verify_certificate,
};
use treedom_core::generators::{comb, double_star, family_f, path, q_tree, spider, star, FamilyFSpec};
use treedom_core::solvers::InvariantReport;
use treedom_core::{diameter, Tree, VertexSet};

use crate::census::{run_census, write_csv, VerificationReport};
use crate::io::{read_tree, render_tree, Format};
use crate::random::random_tree;

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "treedom", version, about = "Total co-independent domination on trees")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum InputFormat {
    Edgelist,
    Graph6,
}

impl From<InputFormat> for Format {
    fn from(f: InputFormat) -> Format {
        match f {
            InputFormat::Edgelist => Format::EdgeList,
            InputFormat::Graph6 => Format::Graph6,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ReportFormat {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Property {
    /// Attains the lower bound n - β.
    Tbeta,
    /// Attains the upper bound n - |L|.
    Tl,
    /// Structural test for the upper bound.
    Structural,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Print β, γ_t and γ_t,coi with lexicographically smallest witnesses.
    Compute {
        /// Input file, or `-` for standard input.
        file: String,
        /// Input format; inferred from the extension or content when omitted.
        #[arg(long, value_enum)]
        format: Option<InputFormat>,
        #[arg(long, value_enum, default_value = "text")]
        output: ReportFormat,
    },
    /// Test family membership; prints true or false.
    Check {
        #[arg(value_enum)]
        property: Property,
        file: String,
        #[arg(long, value_enum)]
        format: Option<InputFormat>,
    },
    /// Print an operation sequence from P_4 building the tree, or NOT_MEMBER.
    Certify {
        file: String,
        #[arg(long, value_enum)]
        format: Option<InputFormat>,
    },
    /// Emit a generated tree.
    Generate {
        #[command(subcommand)]
        kind: Generator,
        #[arg(long, value_enum, default_value = "edgelist", global = true)]
        output: InputFormat,
    },
    /// Classify every tree up to an order; write the CSV table and a JSON report.
    Census {
        #[arg(long)]
        max_n: usize,
        /// CSV output path.
        #[arg(long)]
        out: String,
        /// JSON report path; standard output when omitted.
        #[arg(long)]
        report: Option<String>,
        #[arg(long)]
        threads: Option<usize>,
    },
    /// Check every theorem on all trees up to an order.
    Verify {
        #[arg(long, default_value_t = 12)]
        max_n: usize,
        #[arg(long, value_enum, default_value = "text")]
        output: ReportFormat,
        #[arg(long)]
        threads: Option<usize>,
    },
}

#[derive(Subcommand, Debug)]
pub enum Generator {
    Path {
        #[arg(long)]
        n: usize,
    },
    Star {
        #[arg(long)]
        n: usize,
    },
    /// Two adjacent centers with `a` and `b` leaves.
    Doublestar {
        #[arg(long)]
        a: usize,
        #[arg(long)]
        b: usize,
    },
    /// Path of `k` vertices with one pendant on each.
    Comb {
        #[arg(long)]
        k: usize,
    },
    /// Center with paths of the given lengths.
    Spider {
        #[arg(long, value_delimiter = ',', required = true)]
        legs: Vec<usize>,
    },
    /// The tree Q_r.
    Qr {
        #[arg(long)]
        r: usize,
    },
    /// T_{b,d} over a base tree with the given u- and v-vertices.
    Familyf {
        #[arg(long)]
        base: String,
        #[arg(long, value_delimiter = ',')]
        u: Vec<usize>,
        #[arg(long, value_delimiter = ',')]
        v: Vec<usize>,
    },
    /// Uniform random labeled tree.
    Random {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        seed: u64,
    },
}

enum Failure {
    Usage(anyhow::Error),
    Internal(anyhow::Error),
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::Usage(e)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Usage(e.into())
    }
}

impl From<treedom_core::Error> for Failure {
    fn from(e: treedom_core::Error) -> Self {
        Failure::Usage(e.into())
    }
}

struct Streams<'a> {
    stdin: &'a mut dyn Read,
    stdout: &'a mut dyn Write,
    stderr: &'a mut dyn Write,
}

/// Runs the command line `args` (program name first) and returns the exit
/// status.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                stderr.write_all(text.as_bytes())
            } else {
                stdout.write_all(text.as_bytes())
            };
            return code;
        }
    };
    let mut io = Streams { stdin, stdout, stderr };
    match dispatch(cli.command, &mut io) {
        Ok(code) => code,
        Err(Failure::Usage(e)) => {
            let _ = writeln!(io.stderr, "error: {e:#}");
            EXIT_USAGE
        }
        Err(Failure::Internal(e)) => {
            let _ = writeln!(io.stderr, "internal error: {e:#}");
            EXIT_INTERNAL
        }
    }
}

fn dispatch(command: Command, io: &mut Streams) -> Result<i32, Failure> {
    match command {
        Command::Compute { file, format, output } => {
            let t = read_tree(&file, format.map(Into::into), io.stdin)?;
            compute(&t, output, io)
        }
        Command::Check { property, file, format } => {
            let t = read_tree(&file, format.map(Into::into), io.stdin)?;
            check(&t, property, io)
        }
        Command::Certify { file, format } => {
            let t = read_tree(&file, format.map(Into::into), io.stdin)?;
            certify(&t, io)
        }
        Command::Generate { kind, output } => {
            let t = generate(kind, io)?;
            io.stdout.write_all(render_tree(&t, output.into()).as_bytes())?;
            Ok(EXIT_OK)
        }
        Command::Census {
            max_n,
            out,
            report,
            threads,
        } => {
            let run = with_threads(threads, || run_census(max_n, CheckCaps::default()))??;
            let file = File::create(&out).with_context(|| format!("creating {out}"))?;
            write_csv(&run.records, BufWriter::new(file)).with_context(|| format!("writing {out}"))?;
            let json = serde_json::to_string_pretty(&run.report).map_err(anyhow::Error::from)?;
            match report {
                Some(path) => std::fs::write(&path, json + "\n").with_context(|| format!("writing {path}"))?,
                None => writeln!(io.stdout, "{json}")?,
            }
            Ok(if run.report.all_hold() { EXIT_OK } else { EXIT_NEGATIVE })
        }
        Command::Verify { max_n, output, threads } => {
            let run = with_threads(threads, || run_census(max_n, CheckCaps::default()))??;
            match output {
                ReportFormat::Json => {
                    let json = serde_json::to_string_pretty(&run.report).map_err(anyhow::Error::from)?;
                    writeln!(io.stdout, "{json}")?;
                }
                ReportFormat::Text => write_verify_text(&run.report, io.stdout)?,
            }
            Ok(if run.report.all_hold() { EXIT_OK } else { EXIT_NEGATIVE })
        }
    }
}

fn with_threads<R: Send>(threads: Option<usize>, f: impl FnOnce() -> R + Send) -> anyhow::Result<R> {
    match threads {
        None => Ok(f()),
        Some(0) => Err(anyhow!("--threads must be positive")),
        Some(k) => Ok(rayon::ThreadPoolBuilder::new().num_threads(k).build()?.install(f)),
    }
}

fn opt_text<T: ToString>(x: &Option<T>) -> String {
    x.as_ref().map_or_else(|| "undefined".to_string(), ToString::to_string)
}

fn set_text(s: &VertexSet) -> String {
    let parts: Vec<String> = s.iter().map(|v| v.to_string()).collect();
    format!("{{{}}}", parts.join(","))
}

/// Renders an invariant report as `key: value` lines.
pub fn report_text(r: &InvariantReport) -> String {
    format!(
        "n: {}\nbeta: {}\ngamma_t: {}\ntcoi: {}\nbeta_witness: {}\ngamma_t_witness: {}\ntcoi_witness: {}\n",
        r.n,
        r.beta,
        opt_text(&r.gamma_t),
        opt_text(&r.tcoi),
        set_text(&r.beta_witness),
        r.gamma_t_witness.as_ref().map_or_else(|| "undefined".into(), set_text),
        r.tcoi_witness.as_ref().map_or_else(|| "undefined".into(), set_text),
    )
}

fn compute(t: &Tree, output: ReportFormat, io: &mut Streams) -> Result<i32, Failure> {
    let report = InvariantReport::compute(t);
    if !report.witnesses_valid(t) {
        return Err(Failure::Internal(anyhow!("a computed witness fails its own predicate")));
    }
    match output {
        ReportFormat::Text => io.stdout.write_all(report_text(&report).as_bytes())?,
        ReportFormat::Json => {
            let json = serde_json::to_string(&report).map_err(anyhow::Error::from)?;
            writeln!(io.stdout, "{json}")?;
        }
    }
    Ok(EXIT_OK)
}

fn check(t: &Tree, property: Property, io: &mut Streams) -> Result<i32, Failure> {
    let result = match property {
        Property::Tbeta => in_family_t_beta(t),
        Property::Tl => in_family_t_l(t),
        Property::Structural => structural_tl_check(t),
    };
    match result {
        Ok(holds) => {
            writeln!(io.stdout, "{holds}")?;
            Ok(if holds { EXIT_OK } else { EXIT_NEGATIVE })
        }
        Err(treedom_core::Error::Undefined(why)) => {
            writeln!(io.stdout, "undefined")?;
            writeln!(io.stderr, "{why}")?;
            Ok(EXIT_NEGATIVE)
        }
        Err(e) => Err(Failure::Internal(e.into())),
    }
}

fn certify(t: &Tree, io: &mut Streams) -> Result<i32, Failure> {
    if diameter(t) < 3 {
        writeln!(io.stdout, "NOT_MEMBER")?;
        writeln!(io.stderr, "families are only defined for trees of diameter at least 3")?;
        return Ok(EXIT_NEGATIVE);
    }
    match decompose_to_p4(t).map_err(|e| Failure::Internal(e.into()))? {
        None => {
            writeln!(io.stdout, "NOT_MEMBER")?;
            Ok(EXIT_NEGATIVE)
        }
        Some(d) => {
            verify_certificate(&d.certificate, t)
                .map_err(|e| Failure::Internal(anyhow!("certificate does not replay: {e}")))?;
            io.stdout.write_all(d.certificate.to_text().as_bytes())?;
            Ok(EXIT_OK)
        }
    }
}

fn generate(kind: Generator, io: &mut Streams) -> Result<Tree, Failure> {
    let t = match kind {
        Generator::Path { n } => path(n)?,
        Generator::Star { n } => star(n)?,
        Generator::Doublestar { a, b } => double_star(a, b)?,
        Generator::Comb { k } => comb(k)?,
        Generator::Spider { legs } => spider(&legs)?,
        Generator::Qr { r } => q_tree(r)?,
        Generator::Familyf { base, u, v } => {
            let base = read_tree(&base, None, io.stdin)?;
            family_f(&FamilyFSpec::new(base, VertexSet::from(u), VertexSet::from(v))?)?
        }
        Generator::Random { n, seed } => random_tree(n, seed)?,
    };
    Ok(t)
}

fn write_verify_text(report: &VerificationReport, out: &mut dyn Write) -> std::io::Result<()> {
    writeln!(out, "trees: {} (3 <= n <= {})", report.trees, report.max_n)?;
    for (name, checked) in &report.checked {
        writeln!(out, "{name}: checked {checked}, violations {}", report.violations[name])?;
    }
    writeln!(out, "fallback_steps: {}", report.fallback_steps)?;
    match &report.first_counterexample {
        None => writeln!(out, "all theorems hold"),
        Some(c) => writeln!(
            out,
            "VIOLATION: {} fails on n = {} (graph6 {}, canon {})",
            c.check, c.n, c.graph6, c.canon
        ),
    }
}
