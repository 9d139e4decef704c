//! Command-line front end for `suq2-core`.
//!
//! Every report starts with the run configuration (`#` lines in pretty
//! output, a `config` object in JSON). Exit codes: 0 on success or a
//! verdict that holds, 1 when a check produces a witness, 2 on usage or
//! input errors.

mod json;
pub mod weights_file;

use std::ffi::OsString;
use std::io::Write;
use std::path::Path;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use suq2_core::ccr::{
    classical_part, degree_decompose, hbar_deform, is_classical, is_relation_on_window,
};
use suq2_core::pre_hilbert::{AxiomSample, IdentityCheck};
use suq2_core::quantization::{q_commutator, Diagonal, MatrixEntry, OperatorMatrix};
use suq2_core::{
    expr, AlgebraElement, Basis, BigRational, ExprError, FreeElement, PElement, Quantizer, Scalar,
    Substitution, ToeplitzOperator, WeightFunction, Window,
};

#[derive(Parser, Debug)]
#[command(name = "suq2", version, about = "Exact Toeplitz quantization over SU_q(2)")]
struct Cli {
    #[command(flatten)]
    global: GlobalArgs,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct GlobalArgs {
    /// unit, factorial, q-factorial, or file:<path> (JSON table)
    #[arg(long, global = true, default_value = "unit")]
    weights: String,
    /// Evaluate results at this rational q (default: symbolic q)
    #[arg(long, global = true, allow_hyphen_values = true)]
    q: Option<String>,
    /// Rational value of hbar, needed for relations that contain h
    #[arg(long, global = true)]
    hbar: Option<String>,
    /// Window I,J of basis monomials a^i c^j with i <= I, j <= J
    #[arg(long, global = true, default_value = "8,8")]
    window: String,
    #[arg(long, global = true, value_enum, default_value_t = Format::Pretty)]
    format: Format,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Pretty,
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum BasisArg {
    /// Exact entries in the a^i c^j basis
    Unnorm,
    /// Numeric entries in the orthonormal basis (needs --q)
    Norm,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Bring an algebra expression to normal form
    Normalize { expr: String },
    /// Apply the star operation
    Star { expr: String },
    /// Weighted inner product <f, g>
    Inner { left: String, right: String },
    /// Projection onto the quantum plane
    Project { expr: String },
    #[command(subcommand)]
    Toeplitz(ToeplitzCommand),
    /// Evaluate [S, T]_lambda = S T - lambda T S on the window
    Commutator {
        /// Symbol of S; prefix with `adj:` for the Gram adjoint of T_symbol
        #[arg(long, allow_hyphen_values = true)]
        left: String,
        #[arg(long, allow_hyphen_values = true)]
        right: String,
        #[arg(long, default_value = "q", allow_hyphen_values = true)]
        lambda: String,
    },
    /// Check star compatibility of the inner product on sample triples
    Audit {
        /// "f1; f2; g" with f1, f2 in P (repeatable)
        #[arg(long = "triple")]
        triples: Vec<String>,
    },
    #[command(subcommand)]
    Ccr(CcrCommand),
}

#[derive(Subcommand, Debug)]
enum ToeplitzCommand {
    /// Apply T_symbol to an element of P
    Apply {
        #[arg(long, allow_hyphen_values = true)]
        symbol: String,
        #[arg(long, allow_hyphen_values = true)]
        on: String,
    },
    /// Matrix of T_symbol over the window
    Matrix {
        #[arg(long, allow_hyphen_values = true)]
        symbol: String,
        #[arg(long, value_enum, default_value_t = BasisArg::Unnorm)]
        basis: BasisArg,
    },
    /// Matrix of the Gram adjoint of T_symbol over the window
    Adjoint {
        #[arg(long, allow_hyphen_values = true)]
        symbol: String,
    },
}

#[derive(Subcommand, Debug)]
enum CcrCommand {
    /// Check that a free-algebra relation evaluates to zero on the window
    Check {
        #[arg(long, allow_hyphen_values = true)]
        relation: String,
    },
    /// Weight the homogeneous components by powers of h = hbar^(1/2)
    Deform {
        #[arg(long, allow_hyphen_values = true)]
        relation: String,
    },
    /// Top-degree homogeneous component
    Classical {
        #[arg(long, allow_hyphen_values = true)]
        relation: String,
    },
    /// Homogeneous components and classical/quantum classification
    Classify {
        #[arg(long, allow_hyphen_values = true)]
        relation: String,
    },
}

#[derive(Debug)]
enum CliError {
    Usage(String),
    Expr { input: String, error: ExprError },
    Core(suq2_core::Error),
}

impl From<suq2_core::Error> for CliError {
    fn from(e: suq2_core::Error) -> Self {
        CliError::Core(e)
    }
}

impl From<suq2_core::weights::WeightError> for CliError {
    fn from(e: suq2_core::weights::WeightError) -> Self {
        CliError::Core(e.into())
    }
}

impl From<suq2_core::ScalarError> for CliError {
    fn from(e: suq2_core::ScalarError) -> Self {
        CliError::Core(e.into())
    }
}

impl CliError {
    fn render(&self) -> String {
        match self {
            CliError::Usage(m) => format!("error: {}", m),
            CliError::Core(e) => format!("error: {}", e),
            CliError::Expr { input, error } => {
                let col = input[..error.offset.min(input.len())].chars().count();
                format!("error: {}\n  {}\n  {}^", error, input, " ".repeat(col))
            }
        }
    }
}

fn parse_with<T>(input: &str, f: impl Fn(&str) -> Result<T, ExprError>) -> Result<T, CliError> {
    f(input).map_err(|error| CliError::Expr { input: input.into(), error })
}

fn parse_rational(flag: &str, text: &str) -> Result<BigRational, CliError> {
    expr::scalar(text)
        .ok()
        .and_then(|s| s.as_rational())
        .ok_or_else(|| CliError::Usage(format!("--{} expects a rational number, got `{}`", flag, text)))
}

fn parse_window(text: &str) -> Result<Window, CliError> {
    let bad = || CliError::Usage(format!("--window expects I,J with nonnegative integers, got `{}`", text));
    let (i, j) = text.split_once(',').ok_or_else(bad)?;
    let i = i.trim().parse().map_err(|_| bad())?;
    let j = j.trim().parse().map_err(|_| bad())?;
    Ok(Window::new(i, j))
}

fn parse_weights(text: &str) -> Result<WeightFunction, CliError> {
    match text.strip_prefix("file:") {
        Some(path) => weights_file::load(Path::new(path)).map_err(CliError::Usage),
        None => WeightFunction::preset(text).map_err(|e| CliError::Usage(e.to_string())),
    }
}

/// Parses `expr` or `adj:expr` into `T_expr` or its Gram adjoint.
fn parse_operator(text: &str) -> Result<ToeplitzOperator, CliError> {
    match text.trim_start().strip_prefix("adj:") {
        Some(rest) => Ok(ToeplitzOperator::symbol(parse_with(rest, expr::algebra)?).adjoint()),
        None => Ok(ToeplitzOperator::symbol(parse_with(text, expr::algebra)?)),
    }
}

struct Config {
    weights: WeightFunction,
    q: Option<BigRational>,
    hbar: Option<BigRational>,
    window: Window,
    format: Format,
}

impl Config {
    fn from_args(g: &GlobalArgs) -> Result<Self, CliError> {
        let q = g.q.as_deref().map(|t| parse_rational("q", t)).transpose()?;
        if q.as_ref().is_some_and(|q| q == &BigRational::from_integer(0.into())) {
            return Err(CliError::Usage("--q must be nonzero".into()));
        }
        let hbar = g.hbar.as_deref().map(|t| parse_rational("hbar", t)).transpose()?;
        if hbar.as_ref().is_some_and(|h| h < &BigRational::from_integer(0.into())) {
            return Err(CliError::Usage("--hbar must be nonnegative".into()));
        }
        Ok(Config {
            weights: parse_weights(&g.weights)?,
            q,
            hbar,
            window: parse_window(&g.window)?,
            format: g.format,
        })
    }

    fn header(&self) -> Vec<String> {
        let opt = |v: &Option<BigRational>, none: &str| v.as_ref().map_or(none.to_string(), |r| r.to_string());
        vec![
            format!("# weights: {}", self.weights.name()),
            format!("# q: {}", opt(&self.q, "symbolic")),
            format!("# hbar: {}", opt(&self.hbar, "unset")),
            format!("# window: {},{}", self.window.i_max, self.window.j_max),
        ]
    }

    fn json(&self) -> Value {
        json!({
            "weights": self.weights.name(),
            "q": self.q.as_ref().map(|r| r.to_string()),
            "hbar": self.hbar.as_ref().map(|r| r.to_string()),
            "window": [self.window.i_max, self.window.j_max],
        })
    }

    fn scalar(&self, s: &Scalar) -> Result<Scalar, CliError> {
        Ok(match &self.q {
            Some(q0) => s.specialize_q(q0)?,
            None => s.clone(),
        })
    }

    fn algebra(&self, f: &AlgebraElement) -> Result<AlgebraElement, CliError> {
        f.map_scalars(|c| self.scalar(c))
    }

    fn p_element(&self, f: &PElement) -> Result<PElement, CliError> {
        f.map_scalars(|c| self.scalar(c))
    }

    fn free(&self, f: &FreeElement) -> Result<FreeElement, CliError> {
        f.map_scalars(|c| self.scalar(c))
    }

    fn substitution(&self) -> Substitution {
        Substitution { q: self.q.clone(), hbar: self.hbar.clone() }
    }
}

/// One report in all three output formats.
struct Report {
    command: &'static str,
    pretty: Vec<String>,
    json: Value,
    csv_header: Vec<&'static str>,
    csv: Vec<Vec<String>>,
    code: i32,
}

impl Report {
    fn new(command: &'static str) -> Self {
        Report { command, pretty: Vec::new(), json: Value::Null, csv_header: Vec::new(), csv: Vec::new(), code: 0 }
    }

    fn algebra(command: &'static str, f: &AlgebraElement) -> Self {
        Report {
            pretty: vec![f.to_string()],
            json: json::algebra(f),
            csv_header: vec!["k", "l", "m", "coeff"],
            csv: f
                .terms()
                .map(|(x, c)| vec![x.k.to_string(), x.l.to_string(), x.m.to_string(), c.to_string()])
                .collect(),
            ..Report::new(command)
        }
    }

    fn p_element(command: &'static str, f: &PElement) -> Self {
        Report {
            pretty: vec![f.to_string()],
            json: json::p_element(f),
            csv_header: vec!["i", "j", "coeff"],
            csv: f.terms().map(|(x, c)| vec![x.i.to_string(), x.j.to_string(), c.to_string()]).collect(),
            ..Report::new(command)
        }
    }

    fn scalar(command: &'static str, s: &Scalar) -> Self {
        Report {
            pretty: vec![s.to_string()],
            json: json::scalar(s),
            csv_header: vec!["qexp", "hexp", "num", "den"],
            csv: s
                .terms()
                .map(|(e, c)| vec![e.q.to_string(), e.h.to_string(), c.numer().to_string(), c.denom().to_string()])
                .collect(),
            ..Report::new(command)
        }
    }

    fn free(command: &'static str, f: &FreeElement) -> Self {
        Report {
            pretty: vec![f.to_string()],
            json: json::free(f),
            csv_header: vec!["word", "coeff"],
            csv: f.terms().map(|(w, c)| vec![w.to_string(), c.to_string()]).collect(),
            ..Report::new(command)
        }
    }

    fn matrix(command: &'static str, cfg: &Config, m: &OperatorMatrix) -> Result<Self, CliError> {
        let mut entries = Vec::with_capacity(m.len());
        for (pos, e) in m.entries() {
            let e = match e {
                MatrixEntry::Exact(s) => MatrixEntry::Exact(cfg.scalar(s)?),
                MatrixEntry::Numeric(v) => MatrixEntry::Numeric(*v),
            };
            entries.push((*pos, e));
        }
        let value = |e: &MatrixEntry| match e {
            MatrixEntry::Exact(s) => s.to_string(),
            MatrixEntry::Numeric(v) => v.to_string(),
        };
        let basis = match m.basis {
            Basis::Unnormalized => "unnormalized",
            Basis::Normalized { .. } => "normalized",
        };
        Ok(Report {
            pretty: entries
                .iter()
                .map(|((r, c), e)| format!("({},{}) <- ({},{}): {}", r.i, r.j, c.i, c.j, value(e)))
                .collect(),
            json: json::matrix(m.window, basis, &entries),
            csv_header: vec!["row_i", "row_j", "col_i", "col_j", "value"],
            csv: entries
                .iter()
                .map(|((r, c), e)| {
                    vec![r.i.to_string(), r.j.to_string(), c.i.to_string(), c.j.to_string(), value(e)]
                })
                .collect(),
            ..Report::new(command)
        })
    }

    fn emit(&self, cfg: &Config, out: &mut dyn Write) -> std::io::Result<()> {
        match cfg.format {
            Format::Pretty => {
                for line in cfg.header().iter().chain(&self.pretty) {
                    writeln!(out, "{}", line)?;
                }
            }
            Format::Json => {
                let doc = json!({"command": self.command, "config": cfg.json(), "result": self.json});
                writeln!(out, "{}", serde_json::to_string_pretty(&doc).unwrap_or_default())?;
            }
            Format::Csv => {
                let mut w = csv::Writer::from_writer(Vec::new());
                let io = |e: csv::Error| std::io::Error::other(e.to_string());
                w.write_record(&self.csv_header).map_err(io)?;
                for row in &self.csv {
                    w.write_record(row).map_err(io)?;
                }
                out.write_all(&w.into_inner().map_err(|e| std::io::Error::other(e.to_string()))?)?;
            }
        }
        Ok(())
    }
}

fn identity_json(c: &IdentityCheck) -> Value {
    json!({"lhs": json::scalar(&c.lhs), "rhs": json::scalar(&c.rhs), "holds": c.holds()})
}

fn default_audit_samples() -> Vec<AxiomSample> {
    let e = |text: &str| expr::algebra(text).unwrap_or_default();
    vec![
        AxiomSample::new(e("c"), e("a c"), e("a")),
        AxiomSample::new(e("1"), e("1"), e("1")),
        AxiomSample::new(e("1"), e("c"), e("c")),
        AxiomSample::new(e("a c"), e("a c"), e("1")),
    ]
}

fn parse_triple(text: &str) -> Result<AxiomSample, CliError> {
    let parts: Vec<&str> = text.split(';').collect();
    if parts.len() != 3 {
        return Err(CliError::Usage(format!("--triple expects \"f1; f2; g\", got `{}`", text)));
    }
    Ok(AxiomSample::new(
        parse_with(parts[0], expr::algebra)?,
        parse_with(parts[1], expr::algebra)?,
        parse_with(parts[2], expr::algebra)?,
    ))
}

fn run_audit(cfg: &Config, q: &Quantizer, triples: &[String]) -> Result<Report, CliError> {
    let samples = if triples.is_empty() {
        default_audit_samples()
    } else {
        triples.iter().map(|t| parse_triple(t)).collect::<Result<_, _>>()?
    };
    let audit = q.space().audit_axioms(&samples)?;
    let mut r = Report::new("audit");
    r.csv_header = vec!["triple", "identity", "lhs", "rhs", "holds"];
    let mut items = Vec::new();
    for t in &audit.triples {
        let s = &t.sample;
        r.pretty.push(format!("triple {}: f1 = {}, f2 = {}, g = {}", t.index, s.f1, s.f2, s.g));
        let checks = [
            ("<f1, f2 g> = <f1 g*, f2>", &t.literal),
            ("<f1 g, f2> = <f1, f2 g*>", &t.transposed),
            ("<f1, f2>* = <f1*, f2*>", &t.anti_unitary),
        ];
        for (name, c) in checks {
            let (lhs, rhs) = (cfg.scalar(&c.lhs)?, cfg.scalar(&c.rhs)?);
            let verdict = if c.holds() { "holds" } else { "fails" };
            r.pretty.push(format!("  {}: {} vs {} ({})", name, lhs, rhs, verdict));
            r.csv.push(vec![t.index.to_string(), name.into(), lhs.to_string(), rhs.to_string(), c.holds().to_string()]);
        }
        items.push(json!({
            "index": t.index,
            "f1": s.f1.to_string(),
            "f2": s.f2.to_string(),
            "g": s.g.to_string(),
            "literal": identity_json(&t.literal),
            "transposed": identity_json(&t.transposed),
            "anti_unitary": identity_json(&t.anti_unitary),
        }));
    }
    let star = audit.star_identity_witnesses().count();
    let anti = audit.anti_unitary_witnesses().count();
    r.pretty.push(format!("star identity witnesses: {}, anti-unitarity witnesses: {}", star, anti));
    r.json = json!({"triples": items, "star_identity_witnesses": star, "anti_unitary_witnesses": anti});
    r.code = if audit.all_hold() { 0 } else { 1 };
    Ok(r)
}

fn run_commutator(cfg: &Config, q: &Quantizer, left: &str, right: &str, lambda: &str) -> Result<Report, CliError> {
    let s = parse_operator(left)?;
    let t = parse_operator(right)?;
    let lambda = parse_with(lambda, expr::scalar)?;
    let op = q_commutator(&s, &t, &lambda);
    let check = q.window_check(&op, cfg.window)?;
    let mut r = Report::new("commutator");
    r.pretty.push(format!("operator: {}", op));
    r.csv_header = vec!["col_i", "col_j", "image"];
    let (status, diagonal) = if check.is_zero() {
        ("zero", Value::Null)
    } else {
        match q.diagonal_on_window(&op, cfg.window)? {
            Diagonal::Eigenvalues(ev) => {
                let mut items = Vec::new();
                for (x, v) in &ev {
                    let v = cfg.scalar(v)?;
                    items.push(json!({"column": [x.i, x.j], "value": json::scalar(&v)}));
                }
                ("diagonal", Value::Array(items))
            }
            Diagonal::OffDiagonal(..) => ("nonzero", Value::Null),
        }
    };
    r.pretty.push(format!("status: {}", status));
    let mut images = Vec::new();
    for (x, image) in &check.nonzero {
        let image = cfg.p_element(image)?;
        r.pretty.push(format!("({},{}) -> {}", x.i, x.j, image));
        r.csv.push(vec![x.i.to_string(), x.j.to_string(), image.to_string()]);
        images.push((*x, image));
    }
    r.json = json!({
        "operator": op.to_string(),
        "status": status,
        "diagonal": diagonal,
        "nonzero": json::columns(&images),
    });
    Ok(r)
}

fn run_ccr(cfg: &Config, q: &Quantizer, cmd: &CcrCommand) -> Result<Report, CliError> {
    let text = match cmd {
        CcrCommand::Check { relation }
        | CcrCommand::Deform { relation }
        | CcrCommand::Classical { relation }
        | CcrCommand::Classify { relation } => relation,
    };
    let relation = parse_with(text, expr::free)?;
    match cmd {
        CcrCommand::Check { .. } => {
            let verdict = is_relation_on_window(q, &relation, cfg.window, &cfg.substitution())?;
            let mut r = Report::new("ccr check");
            r.csv_header = vec!["holds", "witness_i", "witness_j", "image"];
            let w = cfg.window;
            match &verdict.witness {
                None => {
                    r.pretty.push(format!("verdict: holds on window {},{}", w.i_max, w.j_max));
                    r.csv.push(vec!["true".into(), String::new(), String::new(), String::new()]);
                    r.json = json!({"relation": relation.to_string(), "holds": true, "witness": null});
                }
                Some((x, image)) => {
                    r.pretty.push(format!("verdict: fails on window {},{}", w.i_max, w.j_max));
                    let image = cfg.p_element(image)?;
                    r.pretty.push(format!("witness: ({},{}) -> {}", x.i, x.j, image));
                    r.csv.push(vec!["false".into(), x.i.to_string(), x.j.to_string(), image.to_string()]);
                    r.json = json!({
                        "relation": relation.to_string(),
                        "holds": false,
                        "witness": {"column": [x.i, x.j], "image": json::p_element(&image)},
                    });
                    r.code = 1;
                }
            }
            if relation.has_extended_generators() {
                r.pretty.push("note: relation uses adjoint generators".into());
            }
            Ok(r)
        }
        CcrCommand::Deform { .. } => Ok(Report::free("ccr deform", &cfg.free(&hbar_deform(&relation)?)?)),
        CcrCommand::Classical { .. } => {
            Ok(Report::free("ccr classical", &cfg.free(&classical_part(&relation)?)?))
        }
        CcrCommand::Classify { .. } => {
            let parts = degree_decompose(&relation)?;
            let kind = if is_classical(&relation) { "classical" } else { "quantum" };
            let mut r = Report::new("ccr classify");
            r.pretty.push(format!("classification: {}", kind));
            r.csv_header = vec!["degree", "component"];
            let mut comps = Vec::new();
            for (d, p) in parts.iter().enumerate() {
                let p = cfg.free(p)?;
                r.pretty.push(format!("degree {}: {}", d, p));
                r.csv.push(vec![d.to_string(), p.to_string()]);
                comps.push(json!({"degree": d, "component": json::free(&p)}));
            }
            r.json = json!({"classification": kind, "components": comps});
            Ok(r)
        }
    }
}

fn dispatch(cfg: &Config, command: &Command) -> Result<Report, CliError> {
    let q = Quantizer::new(cfg.weights.clone());
    match command {
        Command::Normalize { expr: e } => {
            Ok(Report::algebra("normalize", &cfg.algebra(&parse_with(e, expr::algebra)?)?))
        }
        Command::Star { expr: e } => {
            Ok(Report::algebra("star", &cfg.algebra(&parse_with(e, expr::algebra)?.star())?))
        }
        Command::Inner { left, right } => {
            let f = parse_with(left, expr::algebra)?;
            let g = parse_with(right, expr::algebra)?;
            Ok(Report::scalar("inner", &cfg.scalar(&q.space().inner(&f, &g)?)?))
        }
        Command::Project { expr: e } => {
            let f = parse_with(e, expr::algebra)?;
            Ok(Report::p_element("project", &cfg.p_element(&q.project(&f)?)?))
        }
        Command::Toeplitz(ToeplitzCommand::Apply { symbol, on }) => {
            let g = parse_with(symbol, expr::algebra)?;
            let psi = parse_with(on, expr::p_element)?;
            Ok(Report::p_element("toeplitz apply", &cfg.p_element(&q.toeplitz_apply(&g, &psi)?)?))
        }
        Command::Toeplitz(ToeplitzCommand::Matrix { symbol, basis }) => {
            let op = ToeplitzOperator::symbol(parse_with(symbol, expr::algebra)?);
            let basis = match (basis, &cfg.q) {
                (BasisArg::Norm, Some(q0)) => Basis::Normalized { q0: q0.clone() },
                (BasisArg::Norm, None) => {
                    return Err(CliError::Usage("--basis norm needs a numeric --q".into()))
                }
                (BasisArg::Unnorm, _) => Basis::Unnormalized,
            };
            Report::matrix("toeplitz matrix", cfg, &q.operator_matrix(&op, cfg.window, basis)?)
        }
        Command::Toeplitz(ToeplitzCommand::Adjoint { symbol }) => {
            let op = ToeplitzOperator::symbol(parse_with(symbol, expr::algebra)?);
            Report::matrix("toeplitz adjoint", cfg, &q.adjoint_on_window(&op, cfg.window)?)
        }
        Command::Commutator { left, right, lambda } => run_commutator(cfg, &q, left, right, lambda),
        Command::Audit { triples } => run_audit(cfg, &q, triples),
        Command::Ccr(cmd) => run_ccr(cfg, &q, cmd),
    }
}

/// Runs the CLI on `args` (including the program name) and returns the exit
/// code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{}", text);
                2
            } else {
                let _ = write!(out, "{}", text);
                0
            };
        }
    };
    let result = Config::from_args(&cli.global).and_then(|cfg| {
        let report = dispatch(&cfg, &cli.command)?;
        Ok((cfg, report))
    });
    match result {
        Ok((cfg, report)) => match report.emit(&cfg, out) {
            Ok(()) => report.code,
            Err(e) => {
                let _ = writeln!(err, "error: {}", e);
                2
            }
        },
        Err(e) => {
            let _ = writeln!(err, "{}", e.render());
            2
        }
    }
}
