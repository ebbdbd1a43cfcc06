//! Command-line front end for spreadlab. Every command prints one JSON
//! object per line (or `key: value` text with `--format text`).

pub mod session;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};
use sha2::{Digest, Sha256};
use spreadlab::fatpoints::{self, Constraint};
use spreadlab::filtration::{self as filt, Filtration};
use spreadlab::ideal_ops;
use spreadlab::newton::monomial_integral_closure;
use spreadlab::{parse_poly, Ideal};
use session::Session;
use std::fmt;

pub const SCHEMA: &str = "1";

#[derive(Parser, Debug)]
#[command(name = "spreadlab", version, about = "Analytic spread, symbolic powers and fat points over F_p")]
pub struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Args, Debug)]
pub struct One {
    /// Session file
    #[arg(short = 'f', long)]
    pub file: String,
    /// Ideal name
    #[arg(short = 'i', long)]
    pub ideal: String,
}

#[derive(Args, Debug)]
pub struct Two {
    #[arg(short = 'f', long)]
    pub file: String,
    #[arg(short = 'i', long)]
    pub ideal: String,
    /// Second ideal name
    #[arg(short = 'j', long)]
    pub other: String,
}

#[derive(Args, Debug)]
pub struct FatArgs {
    /// Number of points
    #[arg(long)]
    pub r: usize,
    #[arg(long)]
    pub seed: u64,
    /// Points on a random smooth cubic
    #[arg(long)]
    pub elliptic: bool,
    #[arg(long, default_value_t = spreadlab::DEFAULT_PRIME)]
    pub p: u32,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Reduced Gröbner basis
    Gb(One),
    /// Normal form of a polynomial
    Nf {
        #[command(flatten)]
        one: One,
        #[arg(long)]
        poly: String,
    },
    /// Krull dimension of R/I
    Dim(One),
    /// Height of I
    Ht(One),
    Intersect(Two),
    /// I : J
    Quotient(Two),
    /// I : J^∞
    Saturate(Two),
    /// Integral closure of a monomial ideal
    ClosureMonomial(One),
    /// Symbolic power I^(n), saturating at J (default: the variables)
    Symbolic {
        #[command(flatten)]
        one: One,
        #[arg(short = 'n', long)]
        n: u32,
        #[arg(short = 'j', long)]
        other: Option<String>,
    },
    /// Analytic spread of an ideal
    Ell(One),
    /// Analytic spread of a truncated filtration
    EllTrunc {
        #[arg(short = 'f', long)]
        file: String,
        /// Filtration name
        #[arg(long)]
        filtration: String,
        #[arg(short = 'a', long)]
        a: u32,
        /// Largest truncation level searched for a witness
        #[arg(long)]
        bound: Option<u32>,
    },
    /// Height versus analytic spread
    Equimult(One),
    /// Least M with g^M in m·I_{nM}
    Sp0 {
        #[arg(short = 'f', long)]
        file: String,
        #[arg(long)]
        filtration: String,
        #[arg(short = 'n', long)]
        n: u32,
        #[arg(long)]
        poly: String,
        #[arg(long, default_value_t = 4)]
        max_m: u32,
    },
    /// Finite-generation evidence for a symbolic algebra or filtration
    FingenProbe {
        #[arg(short = 'f', long)]
        file: String,
        #[arg(short = 'i', long, conflicts_with = "filtration")]
        ideal: Option<String>,
        #[arg(short = 'j', long)]
        other: Option<String>,
        #[arg(long)]
        filtration: Option<String>,
        #[arg(long)]
        max_a: u32,
        #[arg(long)]
        max_n: u32,
    },
    /// Fat point schemes in the plane
    Fatpoints {
        #[command(subcommand)]
        op: FatOp,
    },
}

#[derive(Subcommand, Debug)]
pub enum FatOp {
    /// Dimension of the degree-d system
    H0 {
        #[command(flatten)]
        s: FatArgs,
        #[arg(long)]
        m: u32,
        #[arg(long)]
        d: u32,
    },
    /// Surjectivity of linear forms times the degree d-1 system
    Multmap {
        #[command(flatten)]
        s: FatArgs,
        #[arg(long)]
        m: u32,
        #[arg(long)]
        d: u32,
    },
    /// Power containment in m·(sn-system)
    Contain {
        #[command(flatten)]
        s: FatArgs,
        #[arg(short = 'n', long)]
        n: u32,
        #[arg(long)]
        s_power: u32,
        #[arg(long)]
        d_max: u32,
    },
    /// Which graded pieces survive in the fiber
    Census {
        #[command(flatten)]
        s: FatArgs,
        #[arg(long)]
        n_max: u32,
        #[arg(long)]
        d_max: u32,
        #[arg(long)]
        s_power: u32,
    },
}

/// A failed command: user errors exit 2, internal ones exit 1.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub msg: String,
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.msg)
    }
}

fn user(msg: impl Into<String>) -> Failure {
    Failure { code: 2, msg: msg.into() }
}

impl From<spreadlab::Error> for Failure {
    fn from(e: spreadlab::Error) -> Self {
        Failure { code: if e.is_user_error() { 2 } else { 1 }, msg: e.to_string() }
    }
}

impl From<session::SessionError> for Failure {
    fn from(e: session::SessionError) -> Self {
        user(e.to_string())
    }
}

fn to_object<T: serde::Serialize>(v: &T) -> Map<String, Value> {
    match serde_json::to_value(v).expect("reports serialize") {
        Value::Object(m) => m,
        other => Map::from_iter([("result".to_string(), other)]),
    }
}

fn gens_json(i: &Ideal) -> Value {
    Value::from(i.gb().basis().iter().map(|g| g.to_string()).collect::<Vec<_>>())
}

struct Loaded {
    session: Session,
    canonical: String,
}

fn load(path: &str) -> Result<Loaded, Failure> {
    let src = std::fs::read_to_string(path).map_err(|e| user(format!("cannot read {path}: {e}")))?;
    let session = Session::parse(&src)?;
    let canonical = session.to_string();
    Ok(Loaded { session, canonical })
}

impl Loaded {
    fn ideal(&self, name: &str) -> Result<&Ideal, Failure> {
        self.session.ideal(name).ok_or_else(|| user(format!("no ideal named {name:?}")))
    }

    fn filtration(&self, name: &str) -> Result<Filtration, Failure> {
        match self.session.filtration(name) {
            Some(f) => Ok(f?),
            None => Err(user(format!("no filtration named {name:?}"))),
        }
    }
}

/// Result body plus what goes into the envelope.
struct Report {
    op: &'static str,
    digest_input: String,
    seed: Option<u64>,
    body: Map<String, Value>,
}

fn digest(s: &str) -> String {
    hex::encode(Sha256::digest(s.as_bytes()))
}

fn session_op(op: &'static str, l: &Loaded, args: &[&str], body: Map<String, Value>) -> Report {
    let mut d = l.canonical.clone();
    for a in args {
        d.push('\0');
        d.push_str(a);
    }
    Report { op, digest_input: d, seed: None, body }
}

fn obj(v: Value) -> Map<String, Value> {
    match v {
        Value::Object(m) => m,
        _ => unreachable!(),
    }
}

fn scheme(s: &FatArgs) -> Result<fatpoints::FatPointScheme, Failure> {
    let c = if s.elliptic { Constraint::Elliptic } else { Constraint::None };
    Ok(fatpoints::sample_scheme(s.p, s.r, c, s.seed)?)
}

fn fat_report(op: &'static str, s: &FatArgs, extra: String, body: Map<String, Value>) -> Report {
    let d = format!("p={} r={} elliptic={} seed={} {extra}", s.p, s.r, s.elliptic, s.seed);
    Report { op, digest_input: d, seed: Some(s.seed), body }
}

fn bounds(ell: i64, ht: i64, n: usize) -> Value {
    json!({ "ht_le_ell": ht <= ell, "ell_le_n": ell <= n as i64 })
}

fn execute(cmd: &Command) -> Result<Report, Failure> {
    use Command::*;
    Ok(match cmd {
        Gb(a) => {
            let l = load(&a.file)?;
            let i = l.ideal(&a.ideal)?;
            let body = obj(json!({ "order": l.session.ring.order().name(), "gb": gens_json(i) }));
            session_op("gb", &l, &[&a.ideal], body)
        }
        Nf { one, poly } => {
            let l = load(&one.file)?;
            let i = l.ideal(&one.ideal)?;
            let f = parse_poly(&l.session.ring, poly)?;
            let nf = i.gb().normal_form(&f)?;
            let body = obj(json!({ "nf": nf.to_string(), "member": nf.is_zero() }));
            session_op("nf", &l, &[&one.ideal, poly], body)
        }
        Dim(a) => {
            let l = load(&a.file)?;
            let body = obj(json!({ "dim": ideal_ops::krull_dim(l.ideal(&a.ideal)?) }));
            session_op("dim", &l, &[&a.ideal], body)
        }
        Ht(a) => {
            let l = load(&a.file)?;
            let body = obj(json!({ "ht": ideal_ops::height(l.ideal(&a.ideal)?)? }));
            session_op("ht", &l, &[&a.ideal], body)
        }
        Intersect(t) | Quotient(t) | Saturate(t) => {
            let l = load(&t.file)?;
            let (a, b) = (l.ideal(&t.ideal)?, l.ideal(&t.other)?);
            let (op, body) = match cmd {
                Intersect(_) => ("intersect", obj(json!({ "ideal": gens_json(&ideal_ops::intersect(a, b)?) }))),
                Quotient(_) => ("quotient", obj(json!({ "ideal": gens_json(&ideal_ops::quotient(a, b)?) }))),
                _ => {
                    let (s, steps) = ideal_ops::saturate(a, b)?;
                    ("saturate", obj(json!({ "ideal": gens_json(&s), "steps": steps })))
                }
            };
            session_op(op, &l, &[&t.ideal, &t.other], body)
        }
        ClosureMonomial(a) => {
            let l = load(&a.file)?;
            let c = monomial_integral_closure(l.ideal(&a.ideal)?)?;
            session_op("closure-monomial", &l, &[&a.ideal], obj(json!({ "ideal": gens_json(&c) })))
        }
        Symbolic { one, n, other } => {
            let l = load(&one.file)?;
            let j = other.as_deref().map(|j| l.ideal(j)).transpose()?;
            let s = filt::symbolic_power(l.ideal(&one.ideal)?, *n, j)?;
            let ns = n.to_string();
            let body = obj(json!({ "n": n, "ideal": gens_json(&s) }));
            session_op("symbolic", &l, &[&one.ideal, &ns, other.as_deref().unwrap_or("")], body)
        }
        Ell(a) => {
            let l = load(&a.file)?;
            let s = filt::analytic_spread(l.ideal(&a.ideal)?)?;
            let body = obj(json!({
                "ell": s.ell,
                "ht": s.ht,
                "equimultiple": s.ht == s.ell,
                "nvars": s.nvars,
                "bounds": bounds(s.ell, s.ht, s.nvars),
            }));
            session_op("ell", &l, &[&a.ideal], body)
        }
        EllTrunc { file, filtration, a, bound } => {
            let l = load(file)?;
            let f = l.filtration(filtration)?;
            let s = filt::analytic_spread_truncated(&f, *a, *bound)?;
            let mut body = to_object(&s);
            body.insert("bounds".into(), bounds(s.ell, s.ht, s.nvars));
            let (a_s, b_s) = (a.to_string(), bound.map(|b| b.to_string()).unwrap_or_default());
            session_op("ell-trunc", &l, &[filtration, &a_s, &b_s], body)
        }
        Equimult(a) => {
            let l = load(&a.file)?;
            let e = filt::equimultiple_check(l.ideal(&a.ideal)?)?;
            session_op("equimult", &l, &[&a.ideal], to_object(&e))
        }
        Sp0 { file, filtration, n, poly, max_m } => {
            let l = load(file)?;
            let f = l.filtration(filtration)?;
            let g = parse_poly(&l.session.ring, poly)?;
            let w = filt::sp0_witness(&f, *n, &g, *max_m)?;
            let body = obj(json!({ "n": n, "max_m": max_m, "witness": w }));
            let (ns, ms) = (n.to_string(), max_m.to_string());
            session_op("sp0", &l, &[filtration, &ns, poly, &ms], body)
        }
        FingenProbe { file, ideal, other, filtration, max_a, max_n } => {
            let l = load(file)?;
            let rep = match (ideal, filtration) {
                (Some(i), None) => {
                    let j = other.as_deref().map(|j| l.ideal(j)).transpose()?;
                    filt::fingen_probe(l.ideal(i)?, j, *max_a, *max_n)?
                }
                (None, Some(f)) => filt::probe_filtration(&l.filtration(f)?, *max_a, *max_n)?,
                _ => return Err(user("give exactly one of --ideal or --filtration")),
            };
            let target = ideal.as_deref().or(filtration.as_deref()).unwrap_or("");
            let (a_s, n_s) = (max_a.to_string(), max_n.to_string());
            session_op("fingen-probe", &l, &[target, other.as_deref().unwrap_or(""), &a_s, &n_s], to_object(&rep))
        }
        Fatpoints { op } => match op {
            FatOp::H0 { s, m, d } => {
                let sys = fatpoints::h0(&scheme(s)?.uniform(*m), *d);
                let body = obj(json!({
                    "h0": sys.h0,
                    "rank": sys.rank,
                    "conditions": sys.conditions,
                    "r": s.r,
                    "m": m,
                    "d": d,
                }));
                fat_report("fatpoints h0", s, format!("m={m} d={d}"), body)
            }
            FatOp::Multmap { s, m, d } => {
                let rep = fatpoints::mult_map_surjective(&scheme(s)?.uniform(*m), *d)?;
                let mut body = to_object(&rep);
                body.insert("m".into(), json!(m));
                fat_report("fatpoints multmap", s, format!("m={m} d={d}"), body)
            }
            FatOp::Contain { s, n, s_power, d_max } => {
                let rep = fatpoints::graded_power_containment(&scheme(s)?, *n, *s_power, *d_max)?;
                fat_report("fatpoints contain", s, format!("n={n} s={s_power} d_max={d_max}"), to_object(&rep))
            }
            FatOp::Census { s, n_max, d_max, s_power } => {
                let rep = fatpoints::fiber_generator_census(&scheme(s)?, *n_max, *d_max, *s_power)?;
                fat_report("fatpoints census", s, format!("n_max={n_max} d_max={d_max} s={s_power}"), to_object(&rep))
            }
        },
    })
}

fn envelope(r: Report) -> Map<String, Value> {
    let mut out = Map::new();
    out.insert("schema".into(), json!(SCHEMA));
    out.insert("op".into(), json!(r.op));
    out.insert("input_digest".into(), json!(digest(&r.digest_input)));
    if let Some(seed) = r.seed {
        out.insert("seed".into(), json!(seed));
    }
    for (k, v) in r.body {
        out.entry(k).or_insert(v);
    }
    out
}

fn text_lines(prefix: &str, v: &Value, out: &mut String) {
    match v {
        Value::Object(m) => {
            for (k, v) in m {
                let key = if prefix.is_empty() { k.clone() } else { format!("{prefix}.{k}") };
                text_lines(&key, v, out);
            }
        }
        Value::String(s) => out.push_str(&format!("{prefix}: {s}\n")),
        other => out.push_str(&format!("{prefix}: {other}\n")),
    }
}

pub fn render(map: &Map<String, Value>, format: Format) -> String {
    match format {
        Format::Json => format!("{}\n", Value::Object(map.clone())),
        Format::Text => {
            let mut s = String::new();
            text_lines("", &Value::Object(map.clone()), &mut s);
            s
        }
    }
}

/// Runs one command; returns the exit code, stdout and stderr text.
pub fn run<I, T>(argv: I) -> (i32, String, String)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 { (0, text, String::new()) } else { (2, String::new(), text) };
        }
    };
    match execute(&cli.command) {
        Ok(r) => (0, render(&envelope(r), cli.format), String::new()),
        Err(f) => (f.code, String::new(), format!("error: {f}\n")),
    }
}
