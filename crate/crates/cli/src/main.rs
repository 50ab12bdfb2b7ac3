//! `qspaces`: command-line front end for the q-deformed algebra kernel.

mod lattice;

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use qspaces_core::disk::{disk_element_tn_member, f_q, DiskElement};
use qspaces_core::lie::{distinguish, invariant_exponent};
use qspaces_core::parse::{parse_disk, parse_su};
use qspaces_core::rep::{
    gamma_spectrum_exact, relation_residuals, top_edge_residual, TruncatedRep, RELATION_TOLERANCE,
};
use qspaces_core::spectrum::{commutator_spectrum_search, commutator_spectrum_search_with_threads};
use qspaces_core::suq2::{alpha_degree_decompose, tn_member, SuElement};
use qspaces_core::TorusOrder;

use lattice::LatticeSpec;

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Parse(String),
    Validation(String),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Parse(_) => 2,
            CliError::Validation(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Usage(m) | CliError::Parse(m) | CliError::Validation(m) => m,
        }
    }
}

impl From<qspaces_core::Error> for CliError {
    fn from(e: qspaces_core::Error) -> Self {
        match e {
            qspaces_core::Error::Parse { .. } => CliError::Parse(e.to_string()),
            _ => CliError::Validation(e.to_string()),
        }
    }
}

#[derive(Parser, Debug)]
#[command(
    name = "qspaces",
    version,
    about = "Exact algebra in C[SU_q(2)] and the quantum disk, commutator spectra and root-datum invariants",
    after_help = "Expressions use a, a*, g, g* (SU_q(2) context) or y, z, z* (disk context), \
juxtaposition or `*` for products, `^` for powers, and coefficients such as 3/2, i, q^-1 or (1 - q^2).\n\
Exit codes: 0 success, 1 usage error, 2 parse error, 3 validation error."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Context {
    Su,
    Disk,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Text,
    Csv,
}

#[derive(Args, Debug)]
struct ExprArgs {
    /// Algebra expression.
    #[arg(allow_hyphen_values = true)]
    expr: String,
    /// Algebra the expression lives in.
    #[arg(long, value_enum, default_value = "su")]
    context: Context,
}

#[derive(Args, Debug)]
struct DatumArgs {
    /// Root system type, e.g. A1, B2, G2 or A1xA2.
    #[arg(long = "type")]
    type_label: Option<String>,
    /// Cartan matrix as JSON, e.g. "[[2,-1],[-2,2]]".
    #[arg(long)]
    cartan: Option<String>,
    /// Simple roots in S, 1-based and comma separated ("" for none).
    #[arg(long = "S")]
    s: Option<String>,
    /// Generators of L in fundamental-weight coordinates over S^c,
    /// e.g. "(1,0);(0,2)". Defaults to the full lattice; "" means L = {0}.
    #[arg(long = "L")]
    l: Option<String>,
    /// File of key=value lines with keys type, cartan, S, L. Flags win.
    #[arg(long)]
    config: Option<PathBuf>,
}

impl DatumArgs {
    fn spec(&self) -> Result<LatticeSpec, CliError> {
        let spec = LatticeSpec {
            type_label: self.type_label.clone(),
            cartan: self.cartan.clone(),
            s: self.s.clone(),
            l: self.l.clone(),
        };
        match &self.config {
            Some(path) => spec.merge_config(path),
            None => Ok(spec),
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the normal form of an expression.
    Normalize(ExprArgs),
    /// Print the normal form of the adjoint.
    Star(ExprArgs),
    /// Multiply expressions left to right.
    Mul {
        #[arg(required = true, num_args = 1.., allow_hyphen_values = true)]
        exprs: Vec<String>,
        #[arg(long, value_enum, default_value = "su")]
        context: Context,
    },
    /// Split into homogeneous components (alpha-degree, or z-degree on the disk).
    Grade(ExprArgs),
    /// Decide membership in the T_n-invariant subalgebra.
    TnMember {
        #[command(flatten)]
        expr: ExprArgs,
        /// Torus order: a positive integer or `inf`.
        #[arg(long)]
        n: String,
    },
    /// Image of an SU_q(2) expression in the quantum disk.
    Disk {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Search q-commutation exponents among disk T_n monomials.
    Commspec {
        /// Torus order: a positive integer or `inf`.
        #[arg(long)]
        n: String,
        /// Bound on J + |K| for y^J z^K.
        #[arg(long)]
        degree: u32,
        /// Worker threads; the report does not depend on this.
        #[arg(long)]
        threads: Option<usize>,
    },
    /// Check the truncated representation against the defining relations.
    RepCheck {
        #[arg(long)]
        q0: f64,
        /// Truncation dimension.
        #[arg(long = "N")]
        dim: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Print n_i for each simple root outside S and the invariant exponent m.
    Invariant(DatumArgs),
    /// Decide whether C[X_p] and C[X_q] are *-isomorphic. Parameters above 1
    /// are replaced by their inverses.
    Distinguish {
        p: f64,
        q: f64,
        #[command(flatten)]
        datum: DatumArgs,
    },
}

enum Parsed {
    Su(SuElement),
    Disk(DiskElement),
}

impl Parsed {
    fn new(text: &str, context: Context) -> Result<Self, CliError> {
        Ok(match context {
            Context::Su => Parsed::Su(parse_su(text)?),
            Context::Disk => Parsed::Disk(parse_disk(text)?),
        })
    }
}

fn torus_order(text: &str) -> Result<TorusOrder, CliError> {
    Ok(text.parse::<TorusOrder>()?)
}

fn fold_parameter(name: &str, v: f64) -> Result<f64, CliError> {
    if !(v.is_finite() && v > 0.0) {
        return Err(CliError::Validation(format!("{name} = {v} must be a positive real")));
    }
    Ok(if v > 1.0 { 1.0 / v } else { v })
}

fn grade(expr: &Parsed) -> String {
    let mut out = String::new();
    match expr {
        Parsed::Su(a) => {
            writeln!(out, "alpha-degree\tcomponent").unwrap();
            for (deg, part) in alpha_degree_decompose(a) {
                writeln!(out, "{deg}\t{part}").unwrap();
            }
        }
        Parsed::Disk(a) => {
            let degrees: BTreeMap<i64, DiskElement> = a
                .monomials()
                .map(|m| (m.z_exp, a.filter(|x| x.z_exp == m.z_exp)))
                .collect();
            writeln!(out, "z-degree\tcomponent").unwrap();
            for (deg, part) in degrees {
                writeln!(out, "{deg}\t{part}").unwrap();
            }
        }
    }
    out
}

fn rep_check(q0: f64, dim: usize, format: Format) -> Result<String, CliError> {
    let rep = TruncatedRep::new(dim, q0)?;
    let mut rows: Vec<(String, f64, bool)> = relation_residuals(&rep)?
        .into_iter()
        .map(|r| (r.relation.to_string(), r.residual, r.residual < RELATION_TOLERANCE))
        .collect();
    let edge = top_edge_residual(&rep);
    let predicted = 1.0 - q0.powi(2 * dim as i32);
    rows.push((
        "top edge (expected 1 - q0^2N)".into(),
        edge,
        (edge - predicted).abs() < RELATION_TOLERANCE,
    ));
    let exact = gamma_spectrum_exact(&rep);
    rows.push(("g spectrum = -q0^n".into(), if exact { 0.0 } else { 1.0 }, exact));

    let mut out = String::new();
    match format {
        Format::Text => {
            writeln!(out, "relation\tN\tq0\tresidual\tpass").unwrap();
            for (name, v, pass) in rows {
                writeln!(out, "{name}\t{dim}\t{q0}\t{v:.3e}\t{pass}").unwrap();
            }
        }
        Format::Csv => {
            writeln!(out, "check,N,q0,value,pass").unwrap();
            for (name, v, pass) in rows {
                writeln!(out, "{name},{dim},{q0},{v:e},{pass}").unwrap();
            }
        }
    }
    Ok(out)
}

fn run(command: Command) -> Result<String, CliError> {
    Ok(match command {
        Command::Normalize(e) => match Parsed::new(&e.expr, e.context)? {
            Parsed::Su(a) => format!("{a}\n"),
            Parsed::Disk(a) => format!("{a}\n"),
        },
        Command::Star(e) => match Parsed::new(&e.expr, e.context)? {
            Parsed::Su(a) => format!("{}\n", a.star()),
            Parsed::Disk(a) => format!("{}\n", a.star()),
        },
        Command::Mul { exprs, context } => match context {
            Context::Su => {
                let mut acc = SuElement::one();
                for e in &exprs {
                    acc = &acc * &parse_su(e)?;
                }
                format!("{acc}\n")
            }
            Context::Disk => {
                let mut acc = DiskElement::one();
                for e in &exprs {
                    acc = &acc * &parse_disk(e)?;
                }
                format!("{acc}\n")
            }
        },
        Command::Grade(e) => grade(&Parsed::new(&e.expr, e.context)?),
        Command::TnMember { expr, n } => {
            let n = torus_order(&n)?;
            let member = match Parsed::new(&expr.expr, expr.context)? {
                Parsed::Su(a) => tn_member(&a, n),
                Parsed::Disk(a) => disk_element_tn_member(&a, n),
            };
            format!("{member}\n")
        }
        Command::Disk { expr } => format!("{}\n", f_q(&parse_su(&expr)?)),
        Command::Commspec { n, degree, threads } => {
            let n = torus_order(&n)?;
            let report = match threads {
                Some(0) => return Err(CliError::Validation("--threads must be positive".into())),
                Some(t) => commutator_spectrum_search_with_threads(n, degree, t)?,
                None => commutator_spectrum_search(n, degree)?,
            };
            report.to_string()
        }
        Command::RepCheck { q0, dim, format } => rep_check(q0, dim, format)?,
        Command::Invariant(d) => {
            let spec = d.spec()?;
            let datum = spec.datum()?;
            let sub = spec.subgroup(&datum)?;
            invariant_exponent(&sub, &datum)?.to_string()
        }
        Command::Distinguish { p, q, datum } => {
            let (p, q) = (fold_parameter("p", p)?, fold_parameter("q", q)?);
            let spec = datum.spec()?;
            let root = spec.datum()?;
            let sub = spec.subgroup(&root)?;
            distinguish(p, q, &sub, &root)?.to_string()
        }
    })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(cli.command) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {}", e.message());
            ExitCode::from(e.exit_code())
        }
    }
}
