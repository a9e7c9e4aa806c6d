//! `braidcoh`: command-line front end for the braided cohomology engine.

mod output;

use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use braidcoh_core::algebra::{parse_expression, Algebra, Presentation};
use braidcoh_core::bar::{verify_dec_splits, BarComplex};
use braidcoh_core::braided::{check_bimonoid_axioms, coproduct, format_tensor_element};
use braidcoh_core::cup::{CochainFunctional, ComparisonOptions, CupEngine};
use braidcoh_core::duoidal::verify_coduoid;
use braidcoh_core::error::Error;
use braidcoh_core::lifting::{HomotopyOutcome, LiftStrategy};
use braidcoh_core::resolution::{cohomology_dims, parse_resolution, validate, FreeBimoduleResolution};
use braidcoh_core::scalar::format_scalar;

use output::{emit, Report};

#[derive(Parser)]
#[command(name = "braidcoh", version, about = "Hochschild cohomology of braided Hopf algebras with trivial coefficients")]
struct Cli {
    #[command(flatten)]
    common: Common,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    /// `jordan`, `super-jordan` or `file:PATH` to a presentation file.
    #[arg(long, global = true, default_value = "jordan")]
    algebra: String,
    /// `file:PATH` to a resolution file; the built-in one is used otherwise.
    #[arg(long, global = true)]
    resolution: Option<String>,
    /// Internal degree truncation.
    #[arg(long, global = true, env = "BRAIDCOH_TRUNC")]
    trunc: Option<u32>,
    /// Try the closed-form comparison map values before solving.
    #[arg(long, global = true, value_enum, default_value_t = Toggle::Off)]
    seed_paper_maps: Toggle,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Pick a pseudo-random g lift from this seed instead of the first-pivot one.
    #[arg(long, global = true)]
    rng_seed: Option<u64>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Toggle {
    On,
    Off,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Order {
    /// φ reads the leading segment.
    Opposite,
    Standard,
}

#[derive(Subcommand)]
enum Command {
    /// Overlap confluence and the braided bimonoid axioms.
    CheckPresentation {
        #[arg(long)]
        max_degree: Option<u32>,
    },
    /// Normal-word basis per internal degree.
    Basis {
        #[arg(long)]
        max_degree: Option<u32>,
    },
    /// Normal form of an expression.
    Nf {
        #[arg(long)]
        expr: String,
    },
    /// `t^k · expr`.
    Act {
        #[arg(long)]
        expr: String,
        #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
        k: i64,
    },
    /// Braided coproduct of an expression.
    Coproduct {
        #[arg(long)]
        expr: String,
    },
    /// Dimensions of H^n(A, k).
    Cohomology {
        #[arg(long, default_value_t = 3)]
        max_h: usize,
    },
    /// Cup products of dual basis functionals.
    CupTable {
        #[arg(long)]
        p: usize,
        #[arg(long)]
        q: usize,
        #[arg(long, value_enum, default_value_t = Order::Opposite)]
        order: Order,
    },
    /// Graded braided commutativity of the cup product.
    VerifyCommutativity {
        #[arg(long)]
        p: Option<usize>,
        #[arg(long)]
        q: Option<usize>,
        /// Check every p+q ≤ max-h when p and q are not given.
        #[arg(long, default_value_t = 2)]
        max_h: usize,
    },
    /// The deconcatenation identities on the bar complex.
    VerifyDec {
        #[arg(long)]
        p: Option<usize>,
        #[arg(long)]
        q: Option<usize>,
        /// Check every split of p+q ≤ max-n when p and q are not given.
        #[arg(long, default_value_t = 3)]
        max_n: usize,
        #[arg(long)]
        max_degree: Option<u32>,
    },
    /// The coduoid square up to homotopy.
    VerifyCoduoid {
        #[arg(long)]
        max_h: Option<usize>,
    },
    /// Grading, d² = 0, t-equivariance and exactness of a resolution.
    ValidateResolution {
        #[arg(long)]
        max_degree: Option<u32>,
    },
}

/// Failures that are the caller's fault exit with 2.
enum Failure {
    Usage(String),
    Engine(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(_)
            | Error::Schema(_)
            | Error::UnknownGenerator(_)
            | Error::Io(_)
            | Error::Json(_)
            | Error::Truncation { .. }
            | Error::InvalidPresentation(_)
            | Error::InvalidResolution(_) => Failure::Usage(e.to_string()),
            other => Failure::Engine(other),
        }
    }
}

type Outcome = Result<Report, Failure>;

const DEFAULT_TRUNC: u32 = 6;

struct Context {
    common: Common,
    family: Family,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Family {
    Jordan,
    SuperJordan,
    File,
}

impl Context {
    fn trunc(&self) -> u32 {
        self.common.trunc.unwrap_or(DEFAULT_TRUNC)
    }

    fn presentation(&self) -> Result<Presentation, Failure> {
        match self.family {
            Family::Jordan => Ok(Presentation::jordan()),
            Family::SuperJordan => Ok(Presentation::super_jordan()),
            Family::File => {
                let path = &self.common.algebra["file:".len()..];
                let text = std::fs::read_to_string(path)
                    .map_err(|e| Failure::Usage(format!("cannot read {path}: {e}")))?;
                Ok(Presentation::from_json(&text)?)
            }
        }
    }

    fn algebra(&self, trunc: u32) -> Result<Arc<Algebra>, Failure> {
        Ok(Arc::new(Algebra::validated(self.presentation()?, trunc)?))
    }

    /// The resolution through homological degree `n_max` where it has to be built.
    fn resolution(&self, alg: Arc<Algebra>, n_max: usize) -> Result<FreeBimoduleResolution, Failure> {
        if let Some(arg) = &self.common.resolution {
            let path = arg
                .strip_prefix("file:")
                .ok_or_else(|| Failure::Usage("--resolution expects file:PATH".into()))?;
            let text = std::fs::read_to_string(path)
                .map_err(|e| Failure::Usage(format!("cannot read {path}: {e}")))?;
            let trunc = alg.truncation();
            return Ok(parse_resolution(alg, "file", &text, trunc)?.0);
        }
        match self.family {
            Family::Jordan => Ok(FreeBimoduleResolution::builtin_jordan(alg)?),
            Family::SuperJordan => Ok(FreeBimoduleResolution::builtin_super_jordan(alg, n_max.max(1))?),
            Family::File => Err(Failure::Usage(
                "a presentation file needs --resolution file:PATH".into(),
            )),
        }
    }

    fn comparison(&self) -> ComparisonOptions {
        ComparisonOptions {
            seed_paper_maps: self.common.seed_paper_maps == Toggle::On,
            g_strategy: match self.common.rng_seed {
                Some(seed) => LiftStrategy::Perturbed { seed },
                None => LiftStrategy::FirstPivot,
            },
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let family = match cli.common.algebra.as_str() {
        "jordan" => Family::Jordan,
        "super-jordan" => Family::SuperJordan,
        s if s.starts_with("file:") => Family::File,
        other => {
            eprintln!("error: unknown algebra `{other}` (expected jordan, super-jordan or file:PATH)");
            return ExitCode::from(2);
        }
    };
    let format = cli.common.format;
    let ctx = Context {
        common: cli.common,
        family,
    };
    match run(&ctx, &cli.command) {
        Ok(report) => {
            emit(&report, format);
            if report.pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Engine(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

fn run(ctx: &Context, command: &Command) -> Outcome {
    match command {
        Command::CheckPresentation { max_degree } => check_presentation(ctx, *max_degree),
        Command::Basis { max_degree } => basis(ctx, *max_degree),
        Command::Nf { expr } => {
            let alg = ctx.algebra(ctx.trunc())?;
            let e = parse_expression(&alg, expr)?;
            Ok(Report::value(json!(alg.format(&alg.normal_form(&e)?))))
        }
        Command::Act { expr, k } => {
            let alg = ctx.algebra(ctx.trunc())?;
            let e = alg.normal_form(&parse_expression(&alg, expr)?)?;
            Ok(Report::value(json!(alg.format(&alg.act(*k, &e)?))))
        }
        Command::Coproduct { expr } => {
            let alg = ctx.algebra(ctx.trunc())?;
            let e = alg.normal_form(&parse_expression(&alg, expr)?)?;
            Ok(Report::value(json!(format_tensor_element(&alg, &coproduct(&alg, &e)?))))
        }
        Command::Cohomology { max_h } => {
            let alg = ctx.algebra(ctx.trunc().max(*max_h as u32 + 2))?;
            let res = ctx.resolution(alg, max_h + 1)?;
            let dims = cohomology_dims(&res, *max_h)?;
            let mut r = Report::value(json!({ "H": dims }));
            r.text = vec![format!(
                "H = ({})",
                dims.iter().map(|d| d.to_string()).collect::<Vec<_>>().join(", ")
            )];
            Ok(r)
        }
        Command::CupTable { p, q, order } => cup_table(ctx, *p, *q, *order),
        Command::VerifyCommutativity { p, q, max_h } => {
            let pairs: Vec<(usize, usize)> = match (p, q) {
                (Some(p), Some(q)) => vec![(*p, *q)],
                (None, None) => (1..=*max_h)
                    .flat_map(|n| (0..=n).map(move |p| (p, n - p)))
                    .collect(),
                _ => return Err(Failure::Usage("give both --p and --q, or neither".into())),
            };
            verify_commutativity(ctx, &pairs)
        }
        Command::VerifyDec { p, q, max_n, max_degree } => {
            let splits: Vec<(usize, usize)> = match (p, q) {
                (Some(p), Some(q)) => vec![(*p, *q)],
                (None, None) => (1..=*max_n)
                    .flat_map(|n| (0..=n).map(move |p| (p, n - p)))
                    .collect(),
                _ => return Err(Failure::Usage("give both --p and --q, or neither".into())),
            };
            verify_dec(ctx, &splits, max_degree.unwrap_or(ctx.trunc().min(5)))
        }
        Command::VerifyCoduoid { max_h } => coduoid(ctx, *max_h),
        Command::ValidateResolution { max_degree } => {
            let d = max_degree.unwrap_or(ctx.trunc());
            let alg = ctx.algebra(ctx.trunc().max(d))?;
            let res = match &ctx.common.resolution {
                Some(_) => {
                    let path = ctx.common.resolution.as_ref().unwrap();
                    let path = path
                        .strip_prefix("file:")
                        .ok_or_else(|| Failure::Usage("--resolution expects file:PATH".into()))?;
                    let text = std::fs::read_to_string(path)
                        .map_err(|e| Failure::Usage(format!("cannot read {path}: {e}")))?;
                    FreeBimoduleResolution::from_json(alg, "file", &text)?
                }
                None => ctx.resolution(alg, d as usize)?,
            };
            let report = validate(&res, d)?;
            let failures: Vec<Value> = report
                .failures
                .iter()
                .map(|f| json!({"check": f.check, "hdeg": f.hdeg, "ideg": f.ideg, "detail": f.detail}))
                .collect();
            let mut r = Report::new(report.passed());
            r.json = json!({
                "max_degree": report.max_degree,
                "max_hdeg": report.max_hdeg,
                "checks": report.checks,
                "minimal": report.minimal,
                "pass": report.passed(),
                "failures": failures,
            });
            r.text = vec![format!(
                "{} checks through internal degree {}, homological degree {}: {}",
                report.checks,
                report.max_degree,
                report.max_hdeg,
                if report.passed() { "pass" } else { "FAIL" }
            )];
            r.text.push(format!("minimal: {}", report.minimal));
            for f in &report.failures {
                r.text.push(format!("{} at ({}, {}): {}", f.check, f.hdeg, f.ideg, f.detail));
            }
            Ok(r)
        }
    }
}

fn check_presentation(ctx: &Context, max_degree: Option<u32>) -> Outcome {
    let pres = ctx.presentation()?;
    let d = max_degree.unwrap_or(ctx.trunc());
    let alg = Algebra::new(pres.clone(), d.max(2 * pres.max_rule_degree()))?;
    let conf = alg.complete_overlaps(2 * pres.max_rule_degree());
    let unresolved: Vec<Value> = conf
        .ambiguities
        .iter()
        .filter(|a| !a.resolves())
        .map(|a| json!({"word": pres.format_word(&a.word), "difference": alg.format(&a.difference)}))
        .collect();
    let mut r = Report::new(conf.confluent);
    let mut bimonoid = Value::Null;
    r.text.push(format!(
        "overlaps: {} checked, {} unresolved",
        conf.ambiguities.len(),
        unresolved.len()
    ));
    if conf.confluent {
        let report = check_bimonoid_axioms(&alg, d)?;
        r.pass = report.passed();
        let failures: Vec<Value> = report
            .failures
            .iter()
            .map(|f| json!({"axiom": f.axiom, "witness": f.witness}))
            .collect();
        r.text.push(format!(
            "bimonoid axioms through degree {}: {} checks, {} failures",
            d,
            report.checks,
            failures.len()
        ));
        bimonoid = json!({"max_degree": d, "checks": report.checks, "failures": failures});
    } else {
        for a in &unresolved {
            r.text.push(format!("unresolved: {} -> {}", a["word"], a["difference"]));
        }
    }
    r.json = json!({
        "confluent": conf.confluent,
        "ambiguities": conf.ambiguities.len(),
        "unresolved": unresolved,
        "bimonoid": bimonoid,
        "pass": r.pass,
    });
    Ok(r)
}

fn basis(ctx: &Context, max_degree: Option<u32>) -> Outcome {
    let d = max_degree.unwrap_or(ctx.trunc());
    let alg = ctx.algebra(d)?;
    let pres = alg.presentation();
    let mut degrees = Vec::new();
    let mut r = Report::new(true);
    for n in 0..=d {
        let words: Vec<String> = alg.graded_basis(n)?.iter().map(|w| pres.format_word(w)).collect();
        r.text.push(format!("{n}: [{}] {}", words.len(), words.join(", ")));
        degrees.push(json!({"degree": n, "dim": words.len(), "basis": words}));
    }
    r.json = json!({ "degrees": degrees });
    Ok(r)
}

fn cup_table(ctx: &Context, p: usize, q: usize, order: Order) -> Outcome {
    let alg = ctx.algebra(ctx.trunc().max((p + q + 2) as u32))?;
    let res = ctx.resolution(alg.clone(), p + q + 1)?;
    let bar = BarComplex::new(&alg);
    let engine = CupEngine::new(&res, &bar, ctx.comparison());
    let mut rows = Vec::new();
    let mut text = Vec::new();
    for a in res.all_generators(p)? {
        for b in res.all_generators(q)? {
            let (psi, phi) = (CochainFunctional::dual(a), CochainFunctional::dual(b));
            let product = match order {
                Order::Opposite => engine.cup_opposite(&psi, &phi)?,
                Order::Standard => engine.cup_standard(&psi, &phi)?,
            };
            for w in res.all_generators(p + q)? {
                let v = product.value(w);
                rows.push(vec![
                    p.to_string(),
                    q.to_string(),
                    res.label(w).to_string(),
                    psi.format(&res),
                    phi.format(&res),
                    format_scalar(&v),
                ]);
            }
        }
    }
    let header = ["p", "q", "generator", "ψ", "φ", "ψ⌣φ"];
    let json_rows: Vec<Value> = rows
        .iter()
        .map(|r| {
            json!({
                "p": p, "q": q, "generator": r[2], "psi": r[3], "phi": r[4], "value": r[5],
            })
        })
        .collect();
    text.extend(output::table(&header, &rows));
    let mut r = Report::new(true);
    r.json = json!({
        "order": match order { Order::Opposite => "opposite", Order::Standard => "standard" },
        "rows": json_rows,
    });
    r.text = text;
    Ok(r)
}

fn verify_commutativity(ctx: &Context, pairs: &[(usize, usize)]) -> Outcome {
    let top = pairs.iter().map(|(p, q)| p + q).max().unwrap_or(0);
    let alg = ctx.algebra(ctx.trunc())?;
    let res = ctx.resolution(alg.clone(), top)?;
    let bar = BarComplex::new(&alg);
    let engine = CupEngine::new(&res, &bar, ctx.comparison());
    let mut results = Vec::new();
    let mut all = true;
    let mut rows = Vec::new();
    let mut conflicts = Vec::new();
    for &(p, q) in pairs {
        let report = engine.verify_braided_commutativity(p, q)?;
        all &= report.passed();
        let json_rows: Vec<Value> = report
            .rows
            .iter()
            .map(|row| {
                rows.push(vec![
                    row.p.to_string(),
                    row.q.to_string(),
                    row.generator.clone(),
                    row.psi.clone(),
                    row.phi.clone(),
                    format_scalar(&row.lhs),
                    format_scalar(&row.rhs),
                    row.sign.to_string(),
                    if row.pass { "pass".into() } else { "FAIL".into() },
                ]);
                json!({
                    "p": row.p, "q": row.q, "generator": row.generator,
                    "psi": row.psi, "phi": row.phi,
                    "lhs": format_scalar(&row.lhs), "rhs": format_scalar(&row.rhs),
                    "sign": row.sign, "pass": row.pass,
                })
            })
            .collect();
        conflicts = report.seed_conflicts.clone();
        results.push(json!({
            "p": p, "q": q, "minimal": report.minimal, "pass": report.passed(), "rows": json_rows,
        }));
    }
    let mut r = Report::new(all);
    r.json = json!({ "pass": all, "results": results, "seed_conflicts": conflicts });
    r.text = output::table(&["p", "q", "generator", "ψ", "φ", "lhs", "rhs", "sign", "result"], &rows);
    for c in &conflicts {
        r.text.push(format!("seed rejected: {c}"));
    }
    r.text.push(if all { "pass".into() } else { "FAIL".into() });
    Ok(r)
}

fn verify_dec(ctx: &Context, splits: &[(usize, usize)], max_degree: u32) -> Outcome {
    let alg = ctx.algebra(ctx.trunc().max(max_degree))?;
    let mut by_n: std::collections::BTreeMap<usize, Vec<(usize, usize)>> = Default::default();
    for &(p, q) in splits {
        by_n.entry(p + q).or_default().push((p, q));
    }
    let mut results = Vec::new();
    let mut rows = Vec::new();
    let mut all = true;
    for (n, s) in by_n {
        for report in verify_dec_splits(&alg, n, &s, max_degree)? {
            all &= report.passed();
            let failures: Vec<Value> = report
                .failures
                .iter()
                .map(|f| json!({"identity": f.identity, "tensor": f.tensor}))
                .collect();
            rows.push(vec![
                report.p.to_string(),
                report.q.to_string(),
                report.tensors_checked.to_string(),
                report.failures.len().to_string(),
            ]);
            results.push(json!({
                "p": report.p, "q": report.q, "max_degree": report.max_degree,
                "tensors_checked": report.tensors_checked, "pass": report.passed(), "failures": failures,
            }));
        }
    }
    let mut r = Report::new(all);
    r.json = json!({ "pass": all, "results": results });
    r.text = output::table(&["p", "q", "tensors", "failures"], &rows);
    r.text.push(if all { "pass".into() } else { "FAIL".into() });
    Ok(r)
}

fn coduoid(ctx: &Context, max_h: Option<usize>) -> Outcome {
    let d = ctx.trunc();
    let (res, max_h) = match ctx.family {
        Family::SuperJordan if ctx.common.resolution.is_none() => {
            let h = max_h.unwrap_or(2);
            if h > 3 || d > 6 {
                return Err(Failure::Usage(
                    "the super Jordan coduoid check is limited to --max-h ≤ 3 and --trunc ≤ 6".into(),
                ));
            }
            let alg = ctx.algebra(d)?;
            (ctx.resolution(alg, h + 1)?, h)
        }
        _ => {
            let alg = ctx.algebra(d)?;
            let res = ctx.resolution(alg, max_h.unwrap_or(2) + 1)?;
            let h = max_h.unwrap_or(if res.is_complete() { res.max_hdeg() } else { 2 });
            (res, h)
        }
    };
    let report = verify_coduoid(&res, max_h, d)?;
    let (status, detail) = match &report.outcome {
        HomotopyOutcome::Found { exhaustive, .. } => (
            "homotopy found",
            json!({"exhaustive": exhaustive, "terms": report.homotopy_size()}),
        ),
        HomotopyOutcome::NotHomotopic { hdeg, generator } => (
            "not homotopic",
            json!({"hdeg": hdeg, "generator": res.label(*generator)}),
        ),
        HomotopyOutcome::Inconclusive { reason } => ("inconclusive", json!({"reason": reason})),
    };
    let counits: Vec<Value> = report
        .counits
        .iter()
        .map(|(name, ok)| json!({"law": name, "pass": ok}))
        .collect();
    let reached = report.obstruction.is_none();
    let mut r = Report::new(report.passed());
    r.json = json!({
        "max_hdeg": report.max_hdeg,
        "max_ideg": report.max_ideg,
        "degree_zero_square": reached.then_some(report.degree_zero_square),
        "routes_are_chain_maps": reached.then_some(report.routes_are_chain_maps),
        "differing_generators": reached.then_some(&report.differing_generators),
        "counits": reached.then_some(counits),
        "homotopy": reached.then_some(status),
        "detail": reached.then_some(detail.clone()),
        "obstruction": report.obstruction,
        "pass": report.passed(),
    });
    match &report.obstruction {
        Some(o) => r.text.push(format!("obstruction: {o}")),
        None => {
            r.text.push(format!("degree-0 square: {}", report.degree_zero_square));
            r.text.push(format!("both routes are chain maps: {}", report.routes_are_chain_maps));
            r.text.push(format!("routes differ on: [{}]", report.differing_generators.join(", ")));
            for (name, ok) in &report.counits {
                r.text.push(format!("{name}: {ok}"));
            }
            r.text.push(format!("{status}: {detail}"));
        }
    }
    r.text.push(if report.passed() { "pass".into() } else { "FAIL".into() });
    Ok(r)
}
