//! `psdg` command-line front end. Every subcommand reads JSON, calls one
//! library entry point and writes a JSON report; no mathematics lives here.
//!
//! Exit codes: 0 success, 1 negative mathematical result, 2 usage or input
//! error, 3 undecided (UNKNOWN, EXHAUSTED, INDETERMINATE).

pub mod output;

use std::ffi::OsString;
use std::io::Read;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_rational::BigRational;
use serde_json::{json, Value};

use psdg::certsearch::{
    check_certificate, check_membership, denominator_search, fejer_riesz_with, CertError, Certificate,
    DegreeSchedule, DenomOptions, DenomOutcome, Kind, MembershipStatus, TruncatedPreordering,
};
use psdg::counterexamples::{
    claim2_set, fk_build_with, fk_conditions, fk_psd_report, fk_refute_claim1, fk_refute_claim2_sdp,
    two_unbounded_factorize, CounterexampleError, DEFAULT_DIGITS,
};
use psdg::json::{parse_rational, rational_to_string, JsonError};
use psdg::reduction::{h2f_reduce, H2fOptions, ReductionError};
use psdg::semialg::{classify, natural_description, Description, Piece, SemialgError, SemialgSet};
use psdg::{AnyPoly, Cq, MatrixPoly, Qi2, Scalar};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_UNDECIDED: i32 = 3;

/// Overrides the default digit count of approximate square roots.
pub const PRECISION_ENV: &str = "PSDG_PRECISION";

#[derive(Debug, Parser)]
#[command(name = "psdg", version, about = "Positivity certificates for Hermitian matrix polynomials")]
pub struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Write the report to this file instead of stdout.
    #[arg(long, short, global = true)]
    output: Option<PathBuf>,

    /// Single-line JSON.
    #[arg(long, global = true)]
    compact: bool,

    /// Solver tolerance.
    #[arg(long, global = true, default_value_t = 1e-8)]
    tol: f64,

    /// Arithmetic for polynomial inputs; default follows each file's "mode".
    #[arg(long, global = true, value_enum)]
    mode: Option<ModeArg>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ModeArg {
    Exact,
    Float,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum KindArg {
    Preordering,
    QuadraticModule,
}

impl From<KindArg> for Kind {
    fn from(k: KindArg) -> Kind {
        match k {
            KindArg::Preordering => Kind::Preordering,
            KindArg::QuadraticModule => Kind::QuadraticModule,
        }
    }
}

/// Generators given either directly or as the natural description of a set.
#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
struct GeneratorSource {
    /// Semialgebraic set JSON; its natural description is used.
    #[arg(long)]
    set: Option<String>,
    /// Description JSON (explicit generators).
    #[arg(long)]
    description: Option<String>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Fejér–Riesz factorization F = G*G, or F = G*G + H*H(x−a)(x−b) with --two-unbounded.
    Factor {
        #[arg(long)]
        poly: String,
        /// Endpoints a < b of (−∞, a] ∪ [b, ∞).
        #[arg(long, num_args = 2, value_names = ["A", "B"], allow_hyphen_values = true)]
        two_unbounded: Option<Vec<String>>,
    },
    /// Membership in the truncated preordering or quadratic module at one degree.
    Member {
        #[arg(long)]
        poly: String,
        #[command(flatten)]
        source: GeneratorSource,
        #[arg(long)]
        degree: usize,
        #[arg(long, value_enum, default_value = "preordering")]
        kind: KindArg,
        /// Also try degree + 1, …, degree + N until MEMBER.
        #[arg(long, default_value_t = 0)]
        escalate: usize,
    },
    /// h²F certificate on a compact set with h(x0) ≠ 0.
    Certify {
        #[arg(long)]
        poly: String,
        #[arg(long)]
        set: String,
        /// Description JSON; defaults to the natural description of --set.
        #[arg(long)]
        description: Option<String>,
        /// Point with h(x0) ≠ 0: a rational, "i", or "re,im".
        #[arg(long, default_value = "0", allow_hyphen_values = true)]
        x0: String,
        #[arg(long, value_enum, default_value = "quadratic-module")]
        kind: KindArg,
        /// Relative tolerance for checking the assembled certificate.
        #[arg(long, default_value_t = 1e-6)]
        verify_tol: f64,
    },
    /// Smallest k with ((x−w̄)(x−w))^k F in the preordering.
    Denom {
        #[arg(long)]
        poly: String,
        #[command(flatten)]
        source: GeneratorSource,
        /// Non-real point w: "i" or "re,im".
        #[arg(long, default_value = "i", allow_hyphen_values = true)]
        w: String,
        #[arg(long, default_value_t = 12)]
        k_max: usize,
        #[arg(long, value_enum, default_value = "preordering")]
        kind: KindArg,
        /// Comma-separated degree bounds per k (raised to deg F + 2k).
        #[arg(long)]
        schedule: Option<String>,
        /// Do not retry an UNKNOWN rung at twice the degree.
        #[arg(long)]
        no_double: bool,
    },
    /// Build F_k for x1 < x2 < x3 and k, and run both refutations.
    Counterexample {
        #[arg(long, allow_hyphen_values = true)]
        x1: String,
        #[arg(long, allow_hyphen_values = true)]
        x2: String,
        #[arg(long, allow_hyphen_values = true)]
        x3: String,
        #[arg(long, allow_hyphen_values = true)]
        k: String,
        /// Significant digits of D when D² is not a rational square.
        #[arg(long)]
        precision: Option<u32>,
        /// Number of k0 grid points in (0, 1] for the first claim.
        #[arg(long, default_value_t = 10)]
        grid: usize,
        /// Isolated points of the second set, comma-separated; default x3, x3+1.
        #[arg(long, allow_hyphen_values = true)]
        points: Option<String>,
        /// Skip the SDP for the second claim.
        #[arg(long)]
        skip_sdp: bool,
    },
    /// Recheck a stored certificate against a polynomial.
    Verify {
        #[arg(long)]
        cert: String,
        #[arg(long)]
        poly: String,
        /// Relative tolerance on residual and Gram eigenvalues.
        #[arg(long, default_value_t = 1e-6)]
        verify_tol: f64,
    },
    /// Saturation class of a semialgebraic set.
    Classify {
        #[arg(long)]
        set: String,
    },
}

/// A failed run: exit code, message for stderr and an optional JSON report.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
    pub report: Option<Value>,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: message.into(),
            report: None,
        }
    }

    fn undecided(message: impl Into<String>) -> Self {
        let message = message.into();
        Failure {
            code: EXIT_UNDECIDED,
            report: Some(json!({"status": "UNKNOWN", "reason": message})),
            message,
        }
    }

    fn negative(message: impl Into<String>) -> Self {
        let message = message.into();
        Failure {
            code: EXIT_NEGATIVE,
            report: Some(json!({"status": "NOT_PSD", "reason": message})),
            message,
        }
    }
}

impl From<CertError> for Failure {
    fn from(e: CertError) -> Self {
        match e {
            CertError::NotPsd => Failure::negative(e.to_string()),
            CertError::Unknown(_)
            | CertError::ClipTooLarge { .. }
            | CertError::NoPrimal
            | CertError::Sdp(_) => Failure::undecided(e.to_string()),
            _ => Failure::usage(e.to_string()),
        }
    }
}

impl From<ReductionError> for Failure {
    fn from(e: ReductionError) -> Self {
        match e {
            ReductionError::NotPsd { .. } => Failure::negative(e.to_string()),
            ReductionError::Cert(c) => c.into(),
            ReductionError::ScalarUnknown(_)
            | ReductionError::Identity(_)
            | ReductionError::VanishingAtPoint => Failure::undecided(e.to_string()),
            _ => Failure::usage(e.to_string()),
        }
    }
}

impl From<CounterexampleError> for Failure {
    fn from(e: CounterexampleError) -> Self {
        match e {
            CounterexampleError::Cert(c) => c.into(),
            CounterexampleError::Unknown { .. } | CounterexampleError::Unverified(_) => {
                Failure::undecided(e.to_string())
            }
            _ => Failure::usage(e.to_string()),
        }
    }
}

impl From<SemialgError> for Failure {
    fn from(e: SemialgError) -> Self {
        Failure::usage(e.to_string())
    }
}

/// Successful run: the report and its exit code (0, 1 or 3).
#[derive(Debug)]
pub struct Report {
    pub code: i32,
    pub value: Value,
}

/// Parses `args` (including the program name), runs, writes the report and
/// returns the exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    let compact = cli.compact;
    let output = cli.output.clone();
    let (code, report) = match execute(&cli) {
        Ok(r) => (r.code, Some(r.value)),
        Err(f) => {
            eprintln!("error: {}", f.message);
            (f.code, f.report)
        }
    };
    if let Some(v) = report {
        let text = output::render(&v, compact);
        match &output {
            Some(path) => {
                if let Err(e) = std::fs::write(path, text) {
                    eprintln!("error: cannot write {}: {e}", path.display());
                    return EXIT_USAGE;
                }
            }
            None => print!("{text}"),
        }
    }
    code
}

/// Runs a parsed invocation without touching stdout.
pub fn execute(cli: &Cli) -> Result<Report, Failure> {
    if !(cli.tol.is_finite() && cli.tol > 0.0) {
        return Err(Failure::usage("--tol must be a positive number"));
    }
    let mut io = Inputs::default();
    match &cli.command {
        Command::Factor { poly, two_unbounded } => {
            let f = io.poly(poly, cli.mode)?;
            let ends = two_unbounded
                .as_ref()
                .map(|v| Ok::<_, Failure>((rational(&v[0], "--two-unbounded")?, rational(&v[1], "--two-unbounded")?)))
                .transpose()?;
            with_poly!(f, p => factor(p, ends, cli.tol))
        }
        Command::Member {
            poly,
            source,
            degree,
            kind,
            escalate,
        } => {
            let f = io.poly(poly, cli.mode)?;
            let s = io.generators(source)?;
            with_poly!(f, p => member(p, &s, *degree, (*kind).into(), *escalate, cli.tol))
        }
        Command::Certify {
            poly,
            set,
            description,
            x0,
            kind,
            verify_tol,
        } => {
            positive(*verify_tol, "--verify-tol")?;
            let f = match io.poly(poly, cli.mode)? {
                AnyPoly::Exact(p) => p,
                AnyPoly::Float(_) => return Err(Failure::usage("certify needs an exact polynomial")),
            };
            let k = io.set(set)?;
            let s = match description {
                Some(d) => io.description(d)?,
                None => natural_description(&k)?,
            };
            let x0 = complex(x0, "--x0")?;
            certify(&f, &k, &s, &x0, (*kind).into(), cli.tol, *verify_tol)
        }
        Command::Denom {
            poly,
            source,
            w,
            k_max,
            kind,
            schedule,
            no_double,
        } => {
            let f = io.poly(poly, cli.mode)?;
            let s = io.generators(source)?;
            let w = complex(w, "--w")?;
            let schedule = match schedule {
                None => DegreeSchedule::Default,
                Some(list) => DegreeSchedule::Explicit(
                    list.split(',')
                        .map(|t| t.trim().parse::<usize>())
                        .collect::<Result<_, _>>()
                        .map_err(|_| Failure::usage(format!("--schedule: not a list of degrees: {list:?}")))?,
                ),
            };
            let opts = DenomOptions {
                kind: (*kind).into(),
                k_max: *k_max,
                schedule,
                tol: cli.tol,
                double_on_unknown: !no_double,
            };
            with_poly!(f, p => denom(p, &s, &w, &opts))
        }
        Command::Counterexample {
            x1,
            x2,
            x3,
            k,
            precision,
            grid,
            points,
            skip_sdp,
        } => {
            let digits = match precision {
                Some(d) => *d,
                None => precision_from_env()?,
            };
            if digits == 0 {
                return Err(Failure::usage("precision must be positive"));
            }
            let xs = [
                rational(x1, "--x1")?,
                rational(x2, "--x2")?,
                rational(x3, "--x3")?,
                rational(k, "--k")?,
            ];
            let points = points
                .as_ref()
                .map(|p| p.split(',').map(|t| rational(t, "--points")).collect::<Result<Vec<_>, _>>())
                .transpose()?;
            counterexample(&xs, digits, *grid, points, *skip_sdp, cli.tol)
        }
        Command::Verify { cert, poly, verify_tol } => {
            positive(*verify_tol, "--verify-tol")?;
            let c = io.json(cert)?;
            let c = Certificate::from_json(&c).map_err(|e| field_error(cert, e))?;
            let f = io.poly(poly, cli.mode)?;
            with_poly!(f, p => Ok(verify(p, &c, *verify_tol)))
        }
        Command::Classify { set } => {
            let k = io.set(set)?;
            let label = classify(&k)?;
            Ok(Report {
                code: EXIT_OK,
                value: json!({
                    "status": "CLASSIFIED",
                    "set": k.to_json(),
                    "label": label.as_str(),
                    "saturated": label.verdict().as_str(),
                    "natural_description": natural_description(&k)?.to_json(),
                }),
            })
        }
    }
}

/// Dispatches on the runtime arithmetic of an [`AnyPoly`].
macro_rules! with_poly {
    ($f:expr, $p:ident => $body:expr) => {
        match &$f {
            AnyPoly::Exact($p) => $body,
            AnyPoly::Float($p) => $body,
        }
    };
}
use with_poly;

fn positive(v: f64, name: &str) -> Result<(), Failure> {
    if v.is_finite() && v > 0.0 {
        Ok(())
    } else {
        Err(Failure::usage(format!("{name} must be a positive number")))
    }
}

fn precision_from_env() -> Result<u32, Failure> {
    match std::env::var(PRECISION_ENV) {
        Ok(s) => s
            .trim()
            .parse()
            .map_err(|_| Failure::usage(format!("{PRECISION_ENV} is not a digit count: {s:?}"))),
        Err(_) => Ok(DEFAULT_DIGITS),
    }
}

fn rational(s: &str, flag: &str) -> Result<BigRational, Failure> {
    parse_rational(s).ok_or_else(|| Failure::usage(format!("{flag}: not a rational number: {s:?}")))
}

/// `"i"`, `"-i"`, `"re,im"` or a real rational.
fn complex(s: &str, flag: &str) -> Result<Cq, Failure> {
    let t = s.trim();
    let zero = BigRational::from_integer(0.into());
    let one = BigRational::from_integer(1.into());
    match t {
        "i" | "+i" => return Ok(Cq::new(zero, one)),
        "-i" => return Ok(Cq::new(zero, -one)),
        _ => {}
    }
    match t.split_once(',') {
        Some((re, im)) => Ok(Cq::new(rational(re, flag)?, rational(im, flag)?)),
        None => Ok(Cq::new(rational(t, flag)?, zero)),
    }
}

fn field_error(file: &str, e: JsonError) -> Failure {
    Failure::usage(format!("{file}: {e}"))
}

/// Reads input files; `-` is stdin and may be used once.
#[derive(Default)]
struct Inputs {
    stdin_used: bool,
}

impl Inputs {
    fn json(&mut self, path: &str) -> Result<Value, Failure> {
        let text = if path == "-" {
            if self.stdin_used {
                return Err(Failure::usage("stdin (`-`) can supply only one input"));
            }
            self.stdin_used = true;
            let mut buf = String::new();
            std::io::stdin()
                .read_to_string(&mut buf)
                .map_err(|e| Failure::usage(format!("cannot read stdin: {e}")))?;
            buf
        } else {
            std::fs::read_to_string(path).map_err(|e| Failure::usage(format!("cannot read {path}: {e}")))?
        };
        serde_json::from_str(&text).map_err(|e| Failure::usage(format!("{path}: invalid JSON: {e}")))
    }

    fn poly(&mut self, path: &str, mode: Option<ModeArg>) -> Result<AnyPoly, Failure> {
        let v = self.json(path)?;
        let p = AnyPoly::from_json(&v).map_err(|e| field_error(path, e))?;
        match (mode, p) {
            (Some(ModeArg::Float), p) => Ok(AnyPoly::Float(p.to_float())),
            (Some(ModeArg::Exact), AnyPoly::Float(_)) => Err(Failure::usage(format!(
                "{path}: float input cannot be used with --mode exact"
            ))),
            (_, p) => Ok(p),
        }
    }

    fn set(&mut self, path: &str) -> Result<SemialgSet, Failure> {
        let v = self.json(path)?;
        SemialgSet::from_json(&v).map_err(|e| field_error(path, e))
    }

    fn description(&mut self, path: &str) -> Result<Description, Failure> {
        let v = self.json(path)?;
        Description::from_json(&v).map_err(|e| field_error(path, e))
    }

    fn generators(&mut self, src: &GeneratorSource) -> Result<Description, Failure> {
        match (&src.set, &src.description) {
            (Some(k), _) => Ok(natural_description(&self.set(k)?)?),
            (None, Some(d)) => self.description(d),
            (None, None) => Err(Failure::usage("one of --set or --description is required")),
        }
    }
}

fn factor<T: Scalar>(f: &MatrixPoly<T>, ends: Option<(BigRational, BigRational)>, tol: f64) -> Result<Report, Failure> {
    let value = match ends {
        None => {
            let fr = fejer_riesz_with(f, tol)?;
            json!({"status": "FACTORED", "G": fr.g.to_json(), "residual": fr.residual})
        }
        Some((a, b)) => {
            let tu = two_unbounded_factorize(f, &a, &b, tol)?;
            json!({
                "status": "FACTORED",
                "a": rational_to_string(&a),
                "b": rational_to_string(&b),
                "G": tu.g.to_json(),
                "H": tu.h.to_json(),
                "residual": tu.residual,
            })
        }
    };
    Ok(Report { code: EXIT_OK, value })
}

fn member<T: Scalar>(
    f: &MatrixPoly<T>,
    s: &Description,
    degree: usize,
    kind: Kind,
    escalate: usize,
    tol: f64,
) -> Result<Report, Failure> {
    let mut tried = Vec::new();
    let mut last = None;
    for d in degree..=degree + escalate {
        let t = TruncatedPreordering::new(s.clone(), f.size(), d, kind);
        let report = check_membership(f, &t, tol)?;
        tried.push(json!({"d": d, "status": report.status.as_str()}));
        let done = matches!(report.status, MembershipStatus::Member(_));
        last = Some((d, report));
        if done {
            break;
        }
    }
    let (d, report) = last.expect("at least one degree");
    let code = match report.status {
        MembershipStatus::Member(_) => EXIT_OK,
        MembershipStatus::NotMemberAtDegree(_) => EXIT_NEGATIVE,
        MembershipStatus::Unknown(_) => EXIT_UNDECIDED,
    };
    let mut value = report.to_json();
    value["d"] = json!(d);
    value["kind"] = json!(kind.as_str());
    value["attempts"] = Value::Array(tried);
    Ok(Report { code, value })
}

fn certify(
    f: &MatrixPoly<Cq>,
    k: &SemialgSet,
    s: &Description,
    x0: &Cq,
    kind: Kind,
    tol: f64,
    verify_tol: f64,
) -> Result<Report, Failure> {
    let fq: MatrixPoly<Qi2> = f.map_scalars(Qi2::from_cq);
    let opts = H2fOptions {
        kind,
        tol,
        ..H2fOptions::default()
    };
    let red = h2f_reduce(&fq, k, s, x0, &opts)?;
    let cert = red.assemble(&fq, s, kind);
    let target = red.h2f(&fq);
    let chk = check_certificate(&target, &cert.preordering(), &cert, verify_tol);
    let h_at_x0 = red.h.evaluate(&Qi2::from_cq(x0)).get(0, 0).to_c64();
    let mut value = red.to_json();
    value["status"] = json!(if chk.ok { "CERTIFIED" } else { "UNVERIFIED" });
    value["x0"] = json!([rational_to_string(&x0.re), rational_to_string(&x0.im)]);
    value["h_at_x0"] = json!([h_at_x0.re, h_at_x0.im]);
    value["certificate"] = cert.to_json();
    value["check"] = check_json(chk.residual, chk.min_eigenvalue, chk.structure_ok);
    Ok(Report {
        code: if chk.ok { EXIT_OK } else { EXIT_UNDECIDED },
        value,
    })
}

fn denom<T: Scalar>(f: &MatrixPoly<T>, s: &Description, w: &Cq, opts: &DenomOptions) -> Result<Report, Failure> {
    let report = denominator_search(f, s, w, opts)?;
    let code = match report.outcome {
        DenomOutcome::Found { .. } => EXIT_OK,
        DenomOutcome::Exhausted => EXIT_UNDECIDED,
    };
    let mut value = report.to_json();
    value["w"] = json!([rational_to_string(&w.re), rational_to_string(&w.im)]);
    value["kind"] = json!(opts.kind.as_str());
    Ok(Report { code, value })
}

fn finite_or_null(v: f64) -> Value {
    if v.is_finite() {
        json!(v)
    } else {
        Value::Null
    }
}

fn check_json(residual: f64, min_eigenvalue: f64, structure_ok: bool) -> Value {
    json!({
        "residual": finite_or_null(residual),
        "min_eigenvalue": finite_or_null(min_eigenvalue),
        "structure_ok": structure_ok,
    })
}

fn verify<T: Scalar>(f: &MatrixPoly<T>, c: &Certificate, tol: f64) -> Report {
    let chk = check_certificate(f, &c.preordering(), c, tol);
    let mut value = check_json(chk.residual, chk.min_eigenvalue, chk.structure_ok);
    value["status"] = json!(if chk.ok { "VERIFIED" } else { "REJECTED" });
    value["stored_residual"] = finite_or_null(c.residual);
    value["tolerance"] = json!(tol);
    Report {
        code: if chk.ok { EXIT_OK } else { EXIT_NEGATIVE },
        value,
    }
}

fn counterexample(
    xs: &[BigRational; 4],
    digits: u32,
    grid: usize,
    points: Option<Vec<BigRational>>,
    skip_sdp: bool,
    tol: f64,
) -> Result<Report, Failure> {
    let [x1, x2, x3, k] = xs;
    let cond = fk_conditions(x1, x2, x3, k)?;
    if !cond.all() {
        return Ok(Report {
            code: EXIT_NEGATIVE,
            value: json!({"status": "CONDITIONS_FAIL", "conditions": cond.to_json()}),
        });
    }
    let inst = fk_build_with(x1, x2, x3, k, digits)?;
    let k1 = SemialgSet::new(vec![
        Piece::interval(x1.clone(), x2.clone()),
        Piece::Interval {
            lo: Some(x3.clone()),
            hi: None,
        },
    ])?;
    let psd = fk_psd_report(&inst, &k1);
    let claim1 = fk_refute_claim1(&inst, &k1, grid)?;
    let one = BigRational::from_integer(1.into());
    let points = points.unwrap_or_else(|| vec![x3.clone(), x3 + &one]);
    let claim2 = if skip_sdp {
        None
    } else {
        let mut xs2 = vec![x1.clone(), x2.clone()];
        xs2.extend(points.iter().cloned());
        let s2 = natural_description(&claim2_set(&xs2)?)?;
        Some(fk_refute_claim2_sdp(&inst, &s2, tol)?)
    };
    let claim2_undecided = claim2
        .as_ref()
        .is_some_and(|c| matches!(c.membership.status, MembershipStatus::Unknown(_)));
    let refuted = psd.all_pass() && claim1.refuted && claim2.as_ref().is_none_or(|c| c.confirmed);
    let (status, code) = if refuted {
        ("REFUTED", EXIT_OK)
    } else if claim2_undecided {
        ("INDETERMINATE", EXIT_UNDECIDED)
    } else {
        ("NOT_REFUTED", EXIT_NEGATIVE)
    };
    let mut value = json!({
        "status": status,
        "conditions": cond.to_json(),
        "instance": inst.to_json(),
        "psd_report": psd.to_json(),
        "claim1": claim1.to_json(),
        "claim2_points": points.iter().map(rational_to_string).collect::<Vec<_>>(),
    });
    value["claim2"] = match claim2 {
        Some(c) => c.to_json(),
        None => Value::Null,
    };
    Ok(Report { code, value })
}
