//! The `gmconn` command-line tool.

pub mod files;
pub mod render;

use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use gmconn_core::arrangement::{
    betanbc_frames, betti_and_euler, stv_check, stv_conditions, symbolic_lambdas,
};
use gmconn_core::exact::{Ring, RatFunc};
use gmconn_core::{
    analyze_path, compute_type, connection_concrete, connection_symbolic, golden, omega_general,
    projection_matrix, CocycleBasis, CombinatorialType, Connection, Degeneration, IndexSet,
    Straightener, Weights,
};
use serde_json::{json, Value};

pub use files::{parse_arrangement_file, parse_path_file};
use render::{labels, set_list, Labeled};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error(transparent)]
    Core(#[from] gmconn_core::Error),
    #[error("cannot read {path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum BasisArg {
    Monomial,
    Zeta,
}

impl From<BasisArg> for CocycleBasis {
    fn from(b: BasisArg) -> Self {
        match b {
            BasisArg::Monomial => CocycleBasis::Monomial,
            BasisArg::Zeta => CocycleBasis::Zeta,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum WeightsArg {
    /// Fully symbolic weights, ignoring any values in the file.
    Generic,
    /// Whatever the input file says.
    File,
}

#[derive(Debug, Parser)]
#[command(name = "gmconn", version, about = "Exact Gauss-Manin connection matrices for arrangement degenerations")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    /// Worker threads for the parallel parts (default: all cores).
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    #[arg(long, value_enum, default_value_t = WeightsArg::File, global = true)]
    pub weights: WeightsArg,
    /// Cohomology basis for the target type.
    #[arg(long, value_enum, default_value_t = BasisArg::Monomial, global = true)]
    pub basis: BasisArg,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Type, beta-nbc frames, dense edges and Betti numbers.
    Analyze { file: PathBuf },
    /// Nonresonance verdict for the weights in the file.
    CheckWeights { file: PathBuf },
    /// The projection matrix P(T).
    Projection { file: PathBuf },
    /// The general-position matrix Omega_G(J).
    OmegaGeneral {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        ell: usize,
        #[arg(long = "J", value_name = "j1,j2,...")]
        j: String,
    },
    /// Vanishing orders m_J along a degeneration path.
    Multiplicity { file: PathBuf },
    /// The full pipeline for a degeneration path: Omega_T(T').
    Connection { file: PathBuf },
    /// Recompute the published example matrices and compare.
    VerifyPaper,
}

/// What a command produced: exit code and both renderings.
#[derive(Debug, Clone)]
pub struct Report {
    pub code: i32,
    pub text: String,
    pub json: Value,
}

impl Report {
    fn ok(text: String, json: Value) -> Self {
        Report { code: 0, text, json }
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => self.text.clone(),
            Format::Json => serde_json::to_string_pretty(&self.json).expect("serializable") + "\n",
        }
    }
}

const COVER_NOTE: &str = "the cover relation (no type strictly between T and T') is not checked";

fn read(path: &PathBuf) -> Result<Vec<u8>, CliError> {
    std::fs::read(path).map_err(|source| CliError::Io { path: path.clone(), source })
}

fn effective(w: Weights, arg: WeightsArg) -> Weights {
    match arg {
        WeightsArg::Generic => Weights::Generic,
        WeightsArg::File => w,
    }
}

fn dep_json(t: &CombinatorialType) -> Value {
    json!(labels(&t.dep_list()))
}

fn analyze(file: &PathBuf) -> Result<Report, CliError> {
    let (r, _) = parse_arrangement_file(&read(file)?)?;
    let t = compute_type(&r);
    let m = t.matroid()?;
    let beta = betanbc_frames(&m);
    let dense: Vec<_> = m.flats().into_iter().filter(|f| f.dense).collect();
    let b = betti_and_euler(&m);
    let mut text = format!("n = {}, ell = {}\n", t.n(), t.ell());
    text += &format!("dep(T): {}\n", set_list(&t.dep_list()));
    text += &format!("betanbc(T): {}\n", set_list(&beta));
    text += "dense edges:\n";
    for f in &dense {
        text += &format!("  {} (rank {})\n", f.members, f.rank);
    }
    let betti: Vec<String> = b.betti.iter().map(|x| x.to_string()).collect();
    text += &format!("betti: {}\n|chi|: {}\n", betti.join(" "), b.euler.abs());
    let json = json!({
        "n": t.n(),
        "ell": t.ell(),
        "dep": dep_json(&t),
        "betanbc": labels(&beta),
        "dense_edges": dense.iter().map(|f| json!({"members": f.members.label(), "rank": f.rank})).collect::<Vec<_>>(),
        "betti": b.betti,
        "euler_abs": b.euler.abs(),
    });
    Ok(Report::ok(text, json))
}

fn check_weights(file: &PathBuf, arg: WeightsArg) -> Result<Report, CliError> {
    let (r, w) = parse_arrangement_file(&read(file)?)?;
    let w = effective(w, arg);
    let m = compute_type(&r).matroid()?;
    let v = stv_check(&m, &w)?;
    let conds: Vec<(String, String)> = stv_conditions(&m)
        .into_iter()
        .map(|(f, p)| (f.members.label(), RatFunc::from_poly(p).to_string()))
        .collect();
    let mut text = String::from("nonresonance conditions (lambda_X not in Z>=0):\n");
    for (x, p) in &conds {
        text += &format!("  {x}: {p}\n");
    }
    if v.generic {
        text += "weights: generic\n";
    } else {
        text += &format!("nonresonant: {}\n", v.nonresonant);
        for x in &v.violations {
            text += &format!("  violated at {}: lambda = {}\n", x.flat, x.value);
        }
    }
    let json = json!({
        "conditions": conds.iter().map(|(x, p)| json!({"flat": x, "lambda": p})).collect::<Vec<_>>(),
        "generic": v.generic,
        "nonresonant": v.nonresonant,
        "violations": v.violations.iter().map(|x| json!({"flat": x.flat.label(), "value": x.value.to_string()})).collect::<Vec<_>>(),
    });
    Ok(Report::ok(text, json))
}

fn projection(file: &PathBuf, arg: WeightsArg, basis: CocycleBasis) -> Result<Report, CliError> {
    let (r, w) = parse_arrangement_file(&read(file)?)?;
    let t = compute_type(&r);
    let m = t.matroid()?;
    let st = Straightener::new(&m);
    let table = match effective(w, arg) {
        Weights::Generic => {
            let p = projection_matrix(&st, &symbolic_lambdas(t.n()), basis)?;
            Labeled::new(&p.rows, &p.cols, &p.entries)
        }
        w @ Weights::Values(_) => {
            let v = stv_check(&m, &w)?;
            if !v.nonresonant {
                let list: Vec<String> = v.violations.iter().map(|x| format!("{} -> {}", x.flat, x.value)).collect();
                return Err(gmconn_core::Error::Resonant(list.join(", ")).into());
            }
            let Weights::Values(vals) = w else { unreachable!() };
            let p = projection_matrix(&st, &gmconn_core::arrangement::concrete_lambdas(&vals), basis)?;
            Labeled::new(&p.rows, &p.cols, &p.entries)
        }
    };
    let text = format!("dep(T): {}\nP(T):\n{}", set_list(&t.dep_list()), table.text());
    Ok(Report::ok(text, json!({ "dep": dep_json(&t), "projection": table.json() })))
}

fn omega(n: usize, ell: usize, j: &str) -> Result<Report, CliError> {
    let j: IndexSet = j.parse()?;
    let om = omega_general(&j, n, ell)?;
    let table = Labeled::new(&om.basis, &om.basis, &om.entries.map(|x| RatFunc::from_poly(x.clone())));
    let text = format!("Omega_G({}):\n{}", j.label(), table.text());
    Ok(Report::ok(text, json!({ "J": j.label(), "omega": table.json() })))
}

fn degeneration_header(d: &Degeneration) -> (String, Value) {
    let mut text = format!("dep(T): {}\n", set_list(&d.t.dep_list()));
    text += &format!("dep(T'): {}\n", set_list(&d.tprime.dep_list()));
    text += "multiplicities:\n";
    for (j, m) in &d.multiplicities {
        text += &format!("  m_{} = {}\n", j.label(), m);
    }
    let mult: serde_json::Map<String, Value> =
        d.multiplicities.iter().map(|(j, m)| (j.label(), json!(m))).collect();
    (text, json!({ "dep_T": dep_json(&d.t), "dep_Tprime": dep_json(&d.tprime), "multiplicities": mult }))
}

fn multiplicity(file: &PathBuf) -> Result<Report, CliError> {
    let (p, _) = parse_path_file(&read(file)?)?;
    let d = analyze_path(&p)?;
    let (mut text, mut json) = degeneration_header(&d);
    text += &format!("note: {COVER_NOTE}\n");
    json["note"] = json!(COVER_NOTE);
    Ok(Report::ok(text, json))
}

fn connection_report<K: Ring + std::fmt::Display>(d: &Degeneration, c: &Connection<K>) -> Report {
    let (mut text, mut json) = degeneration_header(d);
    let p = Labeled::new(&c.projection.rows, &c.projection.cols, &c.projection.entries);
    let b = Labeled::new(&c.combined.basis, &c.combined.basis, &c.combined.entries);
    let o = Labeled::new(&c.omega.basis, &c.omega.basis, &c.omega.entries);
    text += &format!("P(T):\n{}", p.text());
    text += &format!("sum m_J Omega_G(J):\n{}", b.text());
    text += &format!("Omega_T(T'):\n{}", o.text());
    text += &format!("note: {COVER_NOTE}\n");
    json["projection"] = p.json();
    json["combined"] = b.json();
    json["omega"] = o.json();
    json["note"] = json!(COVER_NOTE);
    Report::ok(text, json)
}

fn connection(file: &PathBuf, arg: WeightsArg, basis: CocycleBasis) -> Result<Report, CliError> {
    let (p, w) = parse_path_file(&read(file)?)?;
    let d = analyze_path(&p)?;
    Ok(match effective(w, arg) {
        Weights::Generic => connection_report(&d, &connection_symbolic(&d, basis)?),
        Weights::Values(v) => connection_report(&d, &connection_concrete(&d, &v, basis)?),
    })
}

fn verify() -> Report {
    let checks = golden::run_suite();
    let failed = checks.iter().filter(|c| !c.passed).count();
    let mut text = String::new();
    for c in &checks {
        let mark = if c.passed { "PASS" } else { "FAIL" };
        text += &format!("{mark}  {}", c.name);
        if !c.passed {
            text += &format!(": {}", c.detail);
        }
        text.push('\n');
    }
    text += &format!("{} of {} checks passed\n", checks.len() - failed, checks.len());
    let json = json!({
        "passed": failed == 0,
        "checks": checks.iter().map(|c| json!({"name": c.name, "passed": c.passed, "detail": c.detail})).collect::<Vec<_>>(),
    });
    Report { code: if failed == 0 { 0 } else { 2 }, text, json }
}

fn dispatch(cli: &Cli) -> Result<Report, CliError> {
    let basis = cli.basis.into();
    match &cli.command {
        Command::Analyze { file } => analyze(file),
        Command::CheckWeights { file } => check_weights(file, cli.weights),
        Command::Projection { file } => projection(file, cli.weights, basis),
        Command::OmegaGeneral { n, ell, j } => omega(*n, *ell, j),
        Command::Multiplicity { file } => multiplicity(file),
        Command::Connection { file } => connection(file, cli.weights, basis),
        Command::VerifyPaper => Ok(verify()),
    }
}

/// Runs a parsed command line. Returns the exit code and what to print on
/// stdout and stderr.
pub fn run(cli: &Cli) -> (i32, String, String) {
    let go = || match dispatch(cli) {
        Ok(r) => (r.code, r.render(cli.format), String::new()),
        Err(e) => match cli.format {
            Format::Json => {
                let v = json!({ "error": e.to_string() });
                (1, serde_json::to_string_pretty(&v).expect("serializable") + "\n", String::new())
            }
            Format::Text => (1, String::new(), format!("error: {e}\n")),
        },
    };
    match cli.jobs {
        Some(j) => match rayon::ThreadPoolBuilder::new().num_threads(j).build() {
            Ok(pool) => pool.install(go),
            Err(e) => (1, String::new(), format!("error: cannot start {j} worker threads: {e}\n")),
        },
        None => go(),
    }
}
