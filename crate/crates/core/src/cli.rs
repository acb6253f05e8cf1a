//! Command-line front end.
//!
//! [`run`] parses arguments, writes to the supplied streams and returns the
//! process exit code: 0 on success, 1 when a verified identity fails (the
//! counterexample is printed), 2 on usage errors, 3 on mathematical errors
//! such as poles.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_traits::{One, Signed};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::coeffseq::{random_affine, random_extension, random_table, CoeffSeq, UniPolySeq};
use crate::error::Error;
use crate::exactalg::{
    parse_rational, poly_to_json, poly_to_latex, poly_to_latex_with, poly_to_text,
    poly_to_text_with, rational_to_latex, MultiPoly, Rational,
};
use crate::gschur::GschurContext;
use crate::partitions::{dominated_partial_sums, partitions_up_to, Partition};
use crate::presets::{
    boundary_insensitive_in, build, build_probed, character_laurent, fh_character_det,
    laurent_phi, required_index_max, Preset, PresetName, PresetSpec,
};
use crate::stable::{
    gschur_function, jt_infinite_sides, sample_nodes, schur_coefficient_minor, schur_expand_at,
    stable_coefficients, super_schur, RationalFunction, SuperAlphabet,
};

#[derive(Debug, Parser)]
#[command(name = "gschur", version, about = "Generalized Schur polynomials from three-term recurrences")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print S_λ(x1..xn) computed by the chosen method.
    Compute(ComputeArgs),
    /// Coefficients of S_λ in the monomial or classical Schur basis.
    Expand(ExpandArgs),
    /// Run a property suite over seeded random instances.
    Verify(VerifyArgs),
    /// Generalized super Schur polynomial in x1..xn / y1..ym.
    Super(SuperArgs),
    /// Stable coefficients c_{λ,μ}(d), optionally evaluated at a dimension d.
    Stable(StableArgs),
}

#[derive(Debug, Clone, Args)]
pub struct SeqArgs {
    /// schur, so_odd, so_even, sp, factorial or bc_jacobi.
    #[arg(long)]
    pub preset: Option<String>,
    /// JSON coefficient table `{"a": [...], "b": [...], "negative": ...}`.
    #[arg(long)]
    pub seq_file: Option<PathBuf>,
    /// bc_jacobi parameter p.
    #[arg(long, allow_hyphen_values = true)]
    pub p: Option<String>,
    /// bc_jacobi parameter q.
    #[arg(long, allow_hyphen_values = true)]
    pub q: Option<String>,
    /// factorial shifts a(0),a(1),... as a comma-separated list.
    #[arg(long, allow_hyphen_values = true)]
    pub shifts: Option<String>,
    /// factorial affine shifts a(i) = offset + slope*i.
    #[arg(long, allow_hyphen_values = true)]
    pub offset: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub slope: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Bialternant,
    Jt,
    Giambelli,
    Fh,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Latex,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Basis {
    Monomial,
    Schur,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Property {
    Jt,
    Giambelli,
    Lemma,
    Triangularity,
    Extension,
    Fh,
    Alternation,
    Stable,
}

impl Property {
    fn name(self) -> &'static str {
        match self {
            Property::Jt => "jt",
            Property::Giambelli => "giambelli",
            Property::Lemma => "lemma",
            Property::Triangularity => "triangularity",
            Property::Extension => "extension",
            Property::Fh => "fh",
            Property::Alternation => "alternation",
            Property::Stable => "stable",
        }
    }
}

fn parse_partition(s: &str) -> Result<Partition, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_rat(s: &str) -> Result<Rational, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

#[derive(Debug, Args)]
pub struct ComputeArgs {
    #[command(flatten)]
    pub seq: SeqArgs,
    #[arg(long)]
    pub n: usize,
    #[arg(long, value_parser = parse_partition, allow_hyphen_values = true)]
    pub lambda: Partition,
    #[arg(long, value_enum, default_value = "bialternant")]
    pub method: Method,
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct ExpandArgs {
    #[command(flatten)]
    pub seq: SeqArgs,
    #[arg(long)]
    pub n: usize,
    #[arg(long, value_parser = parse_partition)]
    pub lambda: Partition,
    #[arg(long, value_enum, default_value = "monomial")]
    pub basis: Basis,
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, value_enum)]
    pub property: Property,
    #[arg(long, default_value_t = 20)]
    pub trials: u64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 6)]
    pub max_weight: u32,
    #[arg(long, default_value_t = 4)]
    pub max_vars: usize,
}

#[derive(Debug, Args)]
pub struct SuperArgs {
    #[command(flatten)]
    pub seq: SeqArgs,
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub m: usize,
    #[arg(long, value_parser = parse_partition)]
    pub lambda: Partition,
    #[arg(long, default_value_t = 4)]
    pub degree_bound: usize,
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct StableArgs {
    #[command(flatten)]
    pub seq: SeqArgs,
    #[arg(long, value_parser = parse_partition)]
    pub lambda: Partition,
    #[arg(long, default_value_t = 4)]
    pub degree_bound: usize,
    /// Evaluate the coefficients at this dimension.
    #[arg(long, value_parser = parse_rat, allow_hyphen_values = true)]
    pub d: Option<Rational>,
    /// Realize the expansion at --d as a polynomial in this many variables.
    #[arg(long, requires = "d")]
    pub n_eval: Option<usize>,
    /// Check the dimension-d Jacobi–Trudy identity at --d in --n-eval variables.
    #[arg(long, requires = "n_eval")]
    pub check_jt: bool,
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
}

enum Failure {
    Usage(String),
    Math(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_mathematical() {
            Failure::Math(e)
        } else {
            Failure::Usage(e.to_string())
        }
    }
}

type CliResult<T> = std::result::Result<T, Failure>;

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            let _ = if code == 0 {
                out.write_all(text.as_bytes())
            } else {
                err.write_all(text.as_bytes())
            };
            return if code == 0 { 0 } else { 2 };
        }
    };
    let result = match &cli.command {
        Command::Compute(a) => compute(a),
        Command::Expand(a) => expand(a),
        Command::Verify(a) => verify(a),
        Command::Super(a) => super_cmd(a),
        Command::Stable(a) => stable_cmd(a),
    };
    match result {
        Ok((text, code)) => {
            let _ = out.write_all(text.as_bytes());
            code
        }
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
        Err(Failure::Math(e)) => {
            let _ = writeln!(err, "mathematical error: {e}");
            3
        }
    }
}

fn rationals(list: &str) -> CliResult<Vec<Rational>> {
    Ok(list
        .split(',')
        .map(|t| parse_rational(t.trim()))
        .collect::<Result<Vec<_>, _>>()?)
}

fn preset_spec(args: &SeqArgs, name: &str) -> CliResult<PresetSpec> {
    let mut spec = PresetSpec::new(name.parse::<PresetName>()?);
    for (key, value) in [
        ("p", &args.p),
        ("q", &args.q),
        ("offset", &args.offset),
        ("slope", &args.slope),
    ] {
        if let Some(v) = value {
            spec = spec.param(key, parse_rational(v)?);
        }
    }
    if let Some(s) = &args.shifts {
        spec.shifts = Some(rationals(s)?);
    }
    Ok(spec)
}

/// The coefficient sequence named on the command line. Presets are probed
/// up to `probe_to` so that singular indices are reported up front.
fn load_seq(args: &SeqArgs, probe_to: Option<i64>) -> CliResult<CoeffSeq> {
    match (&args.preset, &args.seq_file) {
        (Some(name), None) => {
            let preset = preset_spec(args, name)?.to_preset()?;
            Ok(match probe_to {
                Some(i_max) => build_probed(&preset, i_max)?,
                None => build(&preset),
            })
        }
        (None, Some(path)) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
            let value: Value = serde_json::from_str(&text)
                .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
            Ok(CoeffSeq::from_json(&value)?)
        }
        _ => Err(Failure::Usage(
            "give exactly one of --preset and --seq-file".into(),
        )),
    }
}

fn render_poly(p: &MultiPoly, format: Format) -> String {
    match format {
        Format::Json => poly_to_json(p).to_string(),
        Format::Latex => poly_to_latex(p),
        Format::Text => poly_to_text(p),
    }
}

/// Basis expansion `Σ c_μ sym_μ`, largest `μ` first.
fn render_expansion(coeffs: &BTreeMap<Partition, Rational>, symbol: &str, format: Format) -> String {
    match format {
        Format::Json => Value::Array(
            coeffs
                .iter()
                .rev()
                .map(|(mu, c)| json!({"mu": mu, "c": c.to_string()}))
                .collect(),
        )
        .to_string(),
        Format::Text | Format::Latex => {
            if coeffs.is_empty() {
                return "0".into();
            }
            let mut out = String::new();
            for (k, (mu, c)) in coeffs.iter().rev().enumerate() {
                out.push_str(match (k, c.is_negative()) {
                    (0, true) => "-",
                    (0, false) => "",
                    (_, true) => " - ",
                    (_, false) => " + ",
                });
                let c = c.abs();
                let basis = match format {
                    Format::Latex => format!("{symbol}_{{{mu}}}"),
                    _ => format!("{symbol}{mu}"),
                };
                if c.is_one() {
                    out.push_str(&basis);
                } else if format == Format::Latex {
                    out.push_str(&format!("{} {basis}", rational_to_latex(&c)));
                } else {
                    out.push_str(&format!("{c}*{basis}"));
                }
            }
            out
        }
    }
}

fn render_rational_function(f: &RationalFunction, format: Format) -> String {
    match format {
        Format::Latex => {
            let d = |_| "d".to_string();
            let num = poly_to_latex_with(&f.numerator().to_multi(1, 0), d);
            if f.denominator().degree() == Some(0) {
                num
            } else {
                let den = poly_to_latex_with(&f.denominator().to_multi(1, 0), d);
                format!("\\frac{{{num}}}{{{den}}}")
            }
        }
        _ => f.to_string(),
    }
}

fn compute(a: &ComputeArgs) -> CliResult<(String, i32)> {
    let seq = load_seq(&a.seq, Some(required_index_max(&a.lambda, a.n)))?;
    let mut ctx = GschurContext::new(a.n, seq)?;
    let p = match a.method {
        Method::Bialternant => ctx.bialternant(&a.lambda)?,
        Method::Jt => ctx.jacobi_trudy(&a.lambda)?,
        Method::Giambelli => ctx.giambelli(&a.lambda)?,
        Method::Fh => fh_character_det(&mut ctx, &a.lambda)?,
    };
    Ok((format!("{}\n", render_poly(&p, a.format)), 0))
}

fn expand(a: &ExpandArgs) -> CliResult<(String, i32)> {
    let seq = load_seq(&a.seq, Some(required_index_max(&a.lambda, a.n)))?;
    let text = match a.basis {
        Basis::Monomial => {
            let k = GschurContext::new(a.n, seq)?.monomial_expansion(&a.lambda)?;
            render_expansion(&k, "m", a.format)
        }
        Basis::Schur => {
            let e = schur_expand_at(&a.lambda, &seq, a.n)?;
            render_expansion(&e.coeffs, "S", a.format)
        }
    };
    Ok((format!("{text}\n"), 0))
}

fn super_cmd(a: &SuperArgs) -> CliResult<(String, i32)> {
    let seq = load_seq(&a.seq, None)?;
    let alphabet = SuperAlphabet::new(a.n, a.m)?;
    let p = super_schur(&a.lambda, &seq, &alphabet, a.degree_bound)?;
    let n = a.n;
    let text = match a.format {
        Format::Json => poly_to_json(&p).to_string(),
        Format::Text => poly_to_text_with(&p, |i| {
            if i < n {
                format!("x{}", i + 1)
            } else {
                format!("y{}", i - n + 1)
            }
        }),
        Format::Latex => poly_to_latex_with(&p, |i| {
            if i < n {
                format!("x_{{{}}}", i + 1)
            } else {
                format!("y_{{{}}}", i - n + 1)
            }
        }),
    };
    Ok((format!("{text}\n"), 0))
}

fn stable_cmd(a: &StableArgs) -> CliResult<(String, i32)> {
    let seq = load_seq(&a.seq, None)?;
    let Some(d) = &a.d else {
        let coeffs = stable_coefficients(&a.lambda, &seq, a.degree_bound)?;
        let text = match a.format {
            Format::Json => Value::Array(
                coeffs
                    .iter()
                    .rev()
                    .map(|(mu, f)| json!({"mu": mu, "c": f.to_string()}))
                    .collect(),
            )
            .to_string(),
            _ => coeffs
                .iter()
                .rev()
                .map(|(mu, f)| format!("c{mu}(d) = {}", render_rational_function(f, a.format)))
                .collect::<Vec<_>>()
                .join("\n"),
        };
        return Ok((format!("{text}\n"), 0));
    };
    if a.check_jt {
        let n_eval = a.n_eval.expect("clap enforces --n-eval");
        let (lhs, rhs) = jt_infinite_sides(&a.lambda, &seq, d, n_eval, a.degree_bound)?;
        if lhs == rhs {
            return Ok((format!("jt identity holds at d = {d} in {n_eval} variables\n"), 0));
        }
        let cex = json!({
            "property": "jt_infinite",
            "lambda": a.lambda,
            "d": d.to_string(),
            "n_eval": n_eval,
            "lhs": poly_to_json(&lhs),
            "rhs": poly_to_json(&rhs),
        });
        return Ok((format!("{cex}\n"), 1));
    }
    let e = gschur_function(&a.lambda, &seq, d, a.degree_bound)?;
    let text = match a.n_eval {
        Some(vars) => render_poly(&e.realize(vars)?, a.format),
        None => render_expansion(&e.coeffs, "S", a.format),
    };
    Ok((format!("{text}\n"), 0))
}

/// Outcome of one verification trial.
#[derive(Default)]
struct TrialReport {
    checks: u64,
    counterexamples: Vec<Value>,
}

impl TrialReport {
    fn check(&mut self, ok: bool, cex: impl FnOnce() -> Value) {
        self.checks += 1;
        if !ok {
            self.counterexamples.push(cex());
        }
    }
}

struct Trial<'a> {
    property: Property,
    index: u64,
    seed: u64,
    args: &'a VerifyArgs,
}

impl Trial<'_> {
    fn table_len(&self) -> usize {
        2 * self.args.max_weight as usize + 4 * self.args.max_vars + 8
    }

    fn header(&self, seq: &CoeffSeq) -> Value {
        json!({
            "property": self.property.name(),
            "trial": self.index,
            "seed": self.seed,
            "sequence": seq.to_json(self.table_len() as i64),
        })
    }

    fn counterexample(&self, seq: &CoeffSeq, fields: Value) -> Value {
        let mut v = self.header(seq);
        if let (Value::Object(map), Value::Object(extra)) = (&mut v, fields) {
            map.extend(extra);
        }
        v
    }

    fn run(&self) -> crate::Result<TrialReport> {
        let w = self.args.max_weight;
        let max_vars = self.args.max_vars;
        let mut report = TrialReport::default();
        match self.property {
            Property::Jt | Property::Giambelli | Property::Triangularity => {
                let seq = random_table(self.seed, self.table_len());
                for n in 1..=max_vars {
                    let mut ctx = GschurContext::new(n, seq.clone())?;
                    for lam in partitions_up_to(w, n) {
                        let bialt = ctx.bialternant(&lam)?;
                        if self.property == Property::Triangularity {
                            let k = ctx.monomial_expansion(&lam)?;
                            let ok = k.get(&lam) == Some(&Rational::from_integer(1.into()))
                                && k.keys().all(|mu| dominated_partial_sums(mu, &lam, n));
                            report.check(ok, || {
                                self.counterexample(&seq, json!({
                                    "lambda": lam, "n": n,
                                    "lhs": poly_to_json(&bialt),
                                    "rhs": render_expansion(&k, "m", Format::Json)
                                        .parse::<Value>().unwrap_or(Value::Null),
                                }))
                            });
                            continue;
                        }
                        let other = if self.property == Property::Jt {
                            ctx.jacobi_trudy(&lam)?
                        } else {
                            ctx.giambelli(&lam)?
                        };
                        report.check(other == bialt, || {
                            self.counterexample(&seq, json!({
                                "lambda": lam, "n": n,
                                "lhs": poly_to_json(&other), "rhs": poly_to_json(&bialt),
                            }))
                        });
                    }
                }
            }
            Property::Lemma => {
                let seq = random_table(self.seed, self.table_len());
                for n in 2..=max_vars {
                    let mut ctx = GschurContext::new(n, seq.clone())?;
                    let n_i = n as i64;
                    for i in (3 - 2 * n_i)..=i64::from(w) {
                        for r in 1..=(i + 2 * n_i - 2) as u32 {
                            let res = ctx.lemma_residual(i, r)?;
                            report.check(res.is_zero(), || {
                                self.counterexample(&seq, json!({
                                    "n": n, "i": i, "r": r,
                                    "lhs": poly_to_json(&res),
                                    "rhs": poly_to_json(&MultiPoly::zero(n)),
                                }))
                            });
                        }
                    }
                }
            }
            Property::Extension => {
                let base = random_table(self.seed, self.table_len());
                let ext = random_extension(self.seed, self.table_len());
                let extended = base.clone().with_negative(ext);
                for n in 1..=max_vars {
                    let mut zero = GschurContext::new(n, base.clone())?;
                    let mut custom = GschurContext::new(n, extended.clone())?;
                    let n_i = n as i64;
                    for i in (2 - 2 * n_i)..=i64::from(w) {
                        for r in 0..=(i + 2 * n_i - 2) as u32 {
                            let (lhs, rhs) = (zero.h_shift(i, r)?, custom.h_shift(i, r)?);
                            report.check(lhs == rhs, || {
                                self.counterexample(&extended, json!({
                                    "n": n, "i": i, "r": r,
                                    "lhs": poly_to_json(&lhs), "rhs": poly_to_json(&rhs),
                                }))
                            });
                        }
                    }
                }
            }
            Property::Alternation => {
                let seq = random_table(self.seed, self.table_len());
                for n in 1..=max_vars {
                    let mut ctx = GschurContext::new(n, seq.clone())?;
                    let n_i = n as i64;
                    for i in (1 - n_i)..=i64::from(w) {
                        let top = i + 2 * n_i - 2;
                        if top < 0 {
                            continue;
                        }
                        for r in 0..=top as u32 {
                            let (lhs, rhs) = ctx.alternation_claim(i, r)?;
                            report.check(lhs == rhs, || {
                                self.counterexample(&seq, json!({
                                    "n": n, "i": i, "r": r,
                                    "lhs": poly_to_json(&lhs), "rhs": poly_to_json(&rhs),
                                }))
                            });
                        }
                    }
                }
            }
            Property::Stable => {
                let seq = random_affine(self.seed);
                for lam in partitions_up_to(w, max_vars) {
                    let coeffs = stable_coefficients(&lam, &seq, 4)?;
                    let mut phis = UniPolySeq::new(seq.clone());
                    let start = lam.len().max(1);
                    let last = *sample_nodes(start, 4).last().expect("nonempty");
                    for (mu, f) in &coeffs {
                        for n in [last + 1, last + 7] {
                            let direct = schur_coefficient_minor(&lam, mu, &mut phis, n)?;
                            let interpolated = f.eval(&Rational::from_integer((n as i64).into()))?;
                            report.check(direct == interpolated, || {
                                self.counterexample(&seq, json!({
                                    "lambda": lam, "mu": mu, "n": n,
                                    "lhs": interpolated.to_string(), "rhs": direct.to_string(),
                                }))
                            });
                        }
                    }
                    for n in start..=max_vars {
                        let d = Rational::from_integer((n as i64).into());
                        let lhs = gschur_function(&lam, &seq, &d, 4)?.realize(n)?;
                        let rhs = GschurContext::new(n, seq.clone())?.bialternant(&lam)?;
                        report.check(lhs == rhs, || {
                            self.counterexample(&seq, json!({
                                "lambda": lam, "n": n,
                                "lhs": poly_to_json(&lhs), "rhs": poly_to_json(&rhs),
                            }))
                        });
                    }
                }
            }
            Property::Fh => {
                for preset in [Preset::SoOdd, Preset::SoEven, Preset::Sp] {
                    let seq = build(&preset);
                    for n in 1..=max_vars {
                        let mut ctx = GschurContext::new(n, seq.clone())?;
                        for lam in partitions_up_to(w, n) {
                            let fh = fh_character_det(&mut ctx, &lam)?;
                            let jt = ctx.jacobi_trudy(&lam)?;
                            let bialt = ctx.bialternant(&lam)?;
                            report.check(fh == jt && jt == bialt, || {
                                self.counterexample(&seq, json!({
                                    "lambda": lam, "n": n,
                                    "lhs": poly_to_json(&fh), "rhs": poly_to_json(&bialt),
                                }))
                            });
                            let insensitive = boundary_insensitive_in(&mut ctx, &lam)?;
                            report.check(insensitive, || {
                                self.counterexample(&seq, json!({
                                    "lambda": lam, "n": n, "boundary_insensitive": false,
                                }))
                            });
                        }
                    }
                    for i in 0..=10u32 {
                        let got = laurent_phi(&seq, i64::from(i))?;
                        let want = character_laurent(&preset, i).expect("character preset");
                        report.check(got == want, || {
                            let show = |m: &BTreeMap<i64, Rational>| {
                                m.iter().map(|(e, c)| json!([e, c.to_string()])).collect::<Vec<_>>()
                            };
                            self.counterexample(&seq, json!({
                                "i": i, "lhs": show(&got), "rhs": show(&want),
                            }))
                        });
                    }
                }
            }
        }
        Ok(report)
    }
}

fn verify(a: &VerifyArgs) -> CliResult<(String, i32)> {
    if a.max_vars == 0 {
        return Err(Failure::Usage("--max-vars must be at least 1".into()));
    }
    // The character presets have no random ingredient, so one pass suffices.
    let trials = if a.property == Property::Fh { 1 } else { a.trials };
    let reports: Vec<crate::Result<TrialReport>> = (0..trials)
        .into_par_iter()
        .map(|index| {
            Trial {
                property: a.property,
                index,
                seed: a.seed.wrapping_add(index),
                args: a,
            }
            .run()
        })
        .collect();
    let mut text = String::new();
    let (mut checks, mut failures) = (0u64, 0usize);
    for report in reports {
        let report = report?;
        checks += report.checks;
        failures += report.counterexamples.len();
        for cex in report.counterexamples {
            text.push_str(&cex.to_string());
            text.push('\n');
        }
    }
    text.push_str(&format!(
        "{}: trials={trials} checks={checks} failures={failures}\n",
        a.property.name()
    ));
    Ok((text, if failures == 0 { 0 } else { 1 }))
}
