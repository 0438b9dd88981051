use std::fs;
use std::io::Read;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};
use serde_json::{json, Map, Value};

use conjquandle::components::{
    base_point_sl, chart_general, chart_general_inv, chart_parabolic, chart_parabolic_inv, component_of_psl,
    component_of_sl, conjugator_to_base, GeneralCoord, ParabolicCoord, TraceClass,
};
use conjquandle::decompose::{decompose_in_xt, decompose_ul};
use conjquandle::json::{
    finite_or_null, matrix_to_json, parse_group, parse_matrix_with, parse_scalar, parse_value, psl_to_json,
    AnyGroup, AnyMatrix, AnyScalar, JsonScalar, Mode,
};
use conjquandle::kleinian::{
    build_quandle, canonical_map, centralizer_type_of, discreteness_report, preset, presets, quandle_hom_check,
    DiscretenessReport, GroupSpec, Word,
};
use conjquandle::moebius::{classify_sl2, is_parabolic_trace, Psl2, Sl2};
use conjquandle::quandle::{inner_orbit, AxiomOutcome, AxiomReport, FiniteQuandleSample};
use conjquandle::random::{random_axiom_check, ExactSampler, FloatSampler};
use conjquandle::{selftest, Discriminant, Error, QuadraticNumber, Tolerance};
use num_complex::Complex64;

/// Conjugation quandles of SL(2,C) and PSL(2,C), and quandles of Kleinian
/// groups. Results are printed as JSON.
#[derive(Parser, Debug)]
#[command(name = "conjq", version)]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
struct Global {
    /// Float equality threshold.
    #[arg(long, global = true, default_value_t = Tolerance::DEFAULT_EPS)]
    eps: f64,
    /// Seed for randomized subcommands.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Element cap for enumerations.
    #[arg(long, global = true, default_value_t = 1_000_000)]
    cap: usize,
    /// Write the JSON result to this file instead of standard output.
    #[arg(long, global = true)]
    output: Option<String>,
    /// Read integer-only input exactly in Q(sqrt(d)).
    #[arg(long, global = true, allow_hyphen_values = true)]
    exact: Option<i64>,
}

/// Matrices are JSON: `[[a, b], [c, d]]` or `{"a": .., "b": .., "c": .., "d": ..}`
/// with scalars given as integers, `{"re": x, "im": y}` or
/// `{"a": "p/q", "b": "p/q", "d": d}`. `-` reads standard input and `@path`
/// reads a file.
#[derive(Subcommand, Debug)]
enum Command {
    /// Isometry type and trace class.
    Classify { matrix: String },
    /// Component of the matrix in Conj(SL) and of its class in Conj(PSL).
    Component { matrix: String },
    /// Chart values: F2(alpha, beta) or F_t(alpha, beta, gamma); with
    /// --invert, the coordinates of a matrix.
    Chart {
        #[arg(long, allow_hyphen_values = true)]
        alpha: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        beta: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        gamma: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        trace: Option<String>,
        #[arg(long)]
        invert: Option<String>,
    },
    /// A matrix g with g^-1 A_t g equal to the input.
    Conjugator { matrix: String },
    /// Factor the matrix into elements of trace t.
    Decompose {
        matrix: String,
        #[arg(long, allow_hyphen_values = true)]
        trace: String,
    },
    /// Quandle axioms on random triples, or on an operation table.
    Axioms {
        #[arg(long, default_value_t = 10_000)]
        samples: usize,
        #[arg(long, default_value_t = 50)]
        pool: usize,
        /// JSON table `[[x ◁ y for y] for x]` of a finite quandle.
        #[arg(long)]
        table: Option<String>,
    },
    /// Closure of seeds under the point symmetries of the given elements.
    Orbit {
        #[arg(long = "seed-matrix", required = true)]
        seeds: Vec<String>,
        #[arg(long = "symmetry", required = true)]
        symmetries: Vec<String>,
        #[arg(long, default_value_t = 2)]
        radius: usize,
        /// Work in PSL(2,C) instead of SL(2,C).
        #[arg(long)]
        psl: bool,
    },
    /// Report on the quandle Q(Gamma, gamma) of a Kleinian group.
    Kleinian {
        /// Preset name or group JSON file.
        #[arg(long)]
        group: String,
        #[arg(long)]
        gamma: String,
        /// Central radius; the ball is enumerated one step further.
        #[arg(long, default_value_t = 4)]
        radius: usize,
        #[arg(long, default_value_t = 20.0)]
        window: f64,
        #[arg(long, default_value_t = 500)]
        samples: usize,
        /// Also write the report to this file.
        #[arg(long)]
        report: Option<String>,
    },
    /// List the preset groups.
    Presets,
    /// Run the invariant battery.
    Selftest {
        #[arg(long, default_value_t = 200)]
        samples: usize,
    },
}

struct Ctx {
    tol: Tolerance,
    seed: u64,
    cap: usize,
    hint: Mode,
}

fn read_arg(arg: &str) -> Result<String, Error> {
    if arg == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Error::MalformedJson(e.to_string()))?;
        Ok(s)
    } else if let Some(path) = arg.strip_prefix('@') {
        fs::read_to_string(path).map_err(|e| Error::MalformedJson(format!("{path}: {e}")))
    } else {
        Ok(arg.to_string())
    }
}

fn matrix_arg(arg: &str, ctx: &Ctx) -> Result<AnyMatrix, Error> {
    parse_matrix_with(&parse_value(&read_arg(arg)?)?, ctx.hint, ctx.tol)
}

fn scalar_arg(arg: &str) -> Result<AnyScalar, Error> {
    parse_scalar(&parse_value(arg)?)
}

fn class_json<S: JsonScalar>(m: &Sl2<S>, tol: Tolerance) -> Value {
    json!({
        "class": classify_sl2(m, tol).as_str(),
        "trace_class": TraceClass::new(m.trace(), tol).to_string(),
    })
}

fn component_json<S: JsonScalar>(m: &Sl2<S>, tol: Tolerance) -> Value {
    json!({
        "sl": component_of_sl(m, tol).to_string(),
        "psl": component_of_psl(&Psl2::with_tolerance(m.clone(), tol), tol).to_string(),
        "trace": m.trace().to_json(),
    })
}

fn conjugator_json<S: JsonScalar>(m: &Sl2<S>, tol: Tolerance) -> Result<Value, Error> {
    let (t, g) = conjugator_to_base(m, tol)?;
    let base = base_point_sl(&t, tol)?;
    let verified = base.conj_right(&g).approx_eq(m, tol.scaled(10.0));
    Ok(json!({
        "trace": t.to_json(),
        "base_point": matrix_to_json(&base),
        "conjugator": matrix_to_json(&g),
        "verified": verified,
    }))
}

fn decompose_json<S: JsonScalar>(m: &Sl2<S>, t: &S, tol: Tolerance) -> Result<Value, Error> {
    let transvections: Vec<String> = decompose_ul(m, tol)?.iter().map(|t| t.to_string()).collect();
    let w = decompose_in_xt(m, t, tol)?;
    Ok(json!({
        "trace": t.to_json(),
        "transvections": transvections,
        "count": w.len(),
        "factors": w.factors.iter().map(matrix_to_json).collect::<Vec<_>>(),
        "verified": w.verify(tol),
    }))
}

/// Scalars converted to one common mode.
enum Unified {
    Float(Vec<Complex64>),
    Exact(Vec<QuadraticNumber>),
}

fn unify(xs: Vec<AnyScalar>, hint: Mode) -> Result<Unified, Error> {
    let mode = xs.iter().try_fold(hint, |m, x| {
        m.join(match x {
            AnyScalar::Integer(_) => Mode::Neutral,
            AnyScalar::Float(_) => Mode::Float,
            AnyScalar::Exact(q) => Mode::Exact(q.discriminant()),
        })
    })?;
    match mode {
        Mode::Exact(d) => Ok(Unified::Exact(
            xs.into_iter().map(|x| x.into_exact(d)).collect::<Result<_, _>>()?,
        )),
        _ => Ok(Unified::Float(
            xs.into_iter().map(AnyScalar::into_float).collect::<Result<_, _>>()?,
        )),
    }
}

fn chart_forward<S: JsonScalar>(v: Vec<S>, tol: Tolerance) -> Result<Value, Error> {
    let mut it = v.into_iter();
    let (alpha, beta) = (it.next().expect("alpha"), it.next().expect("beta"));
    match (it.next(), it.next()) {
        (None, _) => {
            let p = ParabolicCoord::new(alpha, beta, tol)?;
            Ok(json!({"chart": "parabolic", "matrix": matrix_to_json(&chart_parabolic(&p))}))
        }
        (Some(gamma), Some(t)) => {
            let q = GeneralCoord::new(alpha, beta, gamma, tol)?;
            Ok(json!({"chart": "general", "matrix": matrix_to_json(&chart_general(&q, &t, tol)?)}))
        }
        (Some(_), None) => Err(Error::MalformedJson("--gamma needs --trace".into())),
    }
}

fn chart_inverse<S: JsonScalar>(m: &Sl2<S>, tol: Tolerance) -> Result<Value, Error> {
    if is_parabolic_trace(&m.trace(), tol) {
        let p = chart_parabolic_inv(m, tol)?;
        Ok(json!({"chart": "parabolic", "alpha": p.alpha().to_json(), "beta": p.beta().to_json()}))
    } else {
        let q = chart_general_inv(m, tol)?;
        Ok(json!({
            "chart": "general",
            "trace": m.trace().to_json(),
            "alpha": q.alpha().to_json(),
            "beta": q.beta().to_json(),
            "gamma": q.gamma().to_json(),
        }))
    }
}

fn outcome_json(o: &AxiomOutcome) -> Value {
    match o {
        AxiomOutcome::Pass => json!("pass"),
        AxiomOutcome::Fail(w) => json!({"fail": w}),
    }
}

fn axiom_json(r: &AxiomReport) -> Value {
    json!({
        "idempotence": outcome_json(&r.idempotence),
        "bijectivity": outcome_json(&r.bijectivity),
        "distributivity": outcome_json(&r.distributivity),
        "escapes": r.escapes.len(),
        "passed": r.all_pass(),
    })
}

fn orbit_json<S: JsonScalar>(seeds: Vec<Sl2<S>>, syms: Vec<Sl2<S>>, radius: usize, psl: bool, ctx: &Ctx) -> Result<Value, Error> {
    let elements: Vec<Value> = if psl {
        let p = |v: Vec<Sl2<S>>| -> Vec<Psl2<S>> { v.into_iter().map(|m| Psl2::with_tolerance(m, ctx.tol)).collect() };
        inner_orbit(&p(seeds), &p(syms), radius, ctx.cap, ctx.tol)?
            .iter()
            .map(|f| json!({"matrix": psl_to_json(f), "component": component_of_psl(f, ctx.tol).to_string()}))
            .collect()
    } else {
        inner_orbit(&seeds, &syms, radius, ctx.cap, ctx.tol)?
            .iter()
            .map(|m| json!({"matrix": matrix_to_json(m), "component": component_of_sl(m, ctx.tol).to_string()}))
            .collect()
    };
    Ok(json!({"count": elements.len(), "radius": radius, "elements": elements}))
}

fn separation_json(r: &DiscretenessReport) -> Value {
    Value::Array(
        r.rows
            .iter()
            .map(|row| {
                json!({
                    "radius": row.radius,
                    "in_window": row.in_window,
                    "min_separation": finite_or_null(row.min_separation),
                })
            })
            .collect(),
    )
}

fn kleinian_json<S: JsonScalar>(
    g: &GroupSpec<S>,
    gamma: &Word,
    radius: usize,
    window: f64,
    samples: usize,
    ctx: &Ctx,
) -> Result<Value, Error> {
    let relators_ok = g.check_relators(ctx.tol)?.is_empty();
    // separation is sampled at radius - 1, radius and radius + 1
    let q = build_quandle(g, gamma, radius + 1, ctx.cap, ctx.tol)?;
    let images = canonical_map(&q);
    let component = component_of_psl(&q.gamma, ctx.tol);
    let confined = images.iter().all(|(_, c)| c.approx_eq(&component, ctx.tol));
    let hom = quandle_hom_check(&q, samples, ctx.seed)?;
    let radii: Vec<usize> = (radius.saturating_sub(1)..=radius + 1).collect();
    let disc = discreteness_report(&q, &radii, window)?;
    let (ctype, ccounts) = centralizer_type_of(&q);
    let mut o = Map::new();
    o.insert("group".into(), json!(g.name));
    o.insert("mode".into(), json!(if S::EXACT { "exact" } else { "float" }));
    o.insert("relators_ok".into(), json!(relators_ok));
    o.insert("gamma".into(), json!(gamma.to_string()));
    o.insert("gamma_matrix".into(), psl_to_json(&q.gamma));
    o.insert(
        "gamma_class".into(),
        json!(classify_sl2(q.gamma.rep(), ctx.tol).as_str()),
    );
    o.insert("component".into(), json!(component.to_string()));
    o.insert("images_in_component".into(), json!(confined));
    o.insert("radius".into(), json!(radius));
    o.insert("enumerated_radius".into(), json!(q.radius));
    o.insert("ball_sizes".into(), json!(q.ball_sizes()));
    o.insert("coset_counts".into(), json!(q.coset_counts()));
    o.insert("homomorphism_samples".into(), json!(hom.samples));
    o.insert("window".into(), json!(window));
    o.insert("separation".into(), separation_json(&disc));
    o.insert("verdict".into(), json!(disc.verdict.as_str()));
    o.insert("theorem_scope".into(), json!(disc.scope.as_str()));
    o.insert("note".into(), json!(DiscretenessReport::NOTE));
    o.insert("centralizer_type".into(), json!(ctype.as_str()));
    o.insert("centralizer_evidence_grade".into(), json!(ctype.is_evidence_grade()));
    o.insert("centralizer_counts".into(), json!(ccounts));
    o.insert("finite_volume".into(), json!(g.finite_volume));
    o.insert("seed".into(), json!(ctx.seed));
    o.insert("eps".into(), json!(ctx.tol.eps()));
    Ok(Value::Object(o))
}

fn run(cmd: Command, ctx: &Ctx) -> Result<Value, Error> {
    macro_rules! with_matrix {
        ($m:expr, |$x:ident| $body:expr) => {
            match $m {
                AnyMatrix::Float($x) => $body,
                AnyMatrix::Exact($x) => $body,
            }
        };
    }
    match cmd {
        Command::Classify { matrix } => {
            let m = matrix_arg(&matrix, ctx)?;
            Ok(with_matrix!(m, |m| class_json(&m, ctx.tol)))
        }
        Command::Component { matrix } => {
            let m = matrix_arg(&matrix, ctx)?;
            Ok(with_matrix!(m, |m| component_json(&m, ctx.tol)))
        }
        Command::Conjugator { matrix } => {
            let m = matrix_arg(&matrix, ctx)?;
            with_matrix!(m, |m| conjugator_json(&m, ctx.tol))
        }
        Command::Decompose { matrix, trace } => {
            let t = scalar_arg(&trace)?;
            match matrix_arg(&matrix, ctx)? {
                AnyMatrix::Float(m) => decompose_json(&m, &t.into_float()?, ctx.tol),
                AnyMatrix::Exact(m) => {
                    let t = t.into_exact(m.field())?;
                    decompose_json(&m, &t, ctx.tol)
                }
            }
        }
        Command::Chart { alpha, beta, gamma, trace, invert } => {
            if let Some(m) = invert {
                let m = matrix_arg(&m, ctx)?;
                return with_matrix!(m, |m| chart_inverse(&m, ctx.tol));
            }
            let (Some(alpha), Some(beta)) = (alpha, beta) else {
                return Err(Error::MalformedJson("chart needs --alpha and --beta, or --invert".into()));
            };
            let mut xs = vec![scalar_arg(&alpha)?, scalar_arg(&beta)?];
            if let Some(g) = gamma {
                xs.push(scalar_arg(&g)?);
            }
            if let Some(t) = trace {
                if xs.len() == 2 {
                    return Err(Error::MalformedJson("--trace needs --gamma".into()));
                }
                xs.push(scalar_arg(&t)?);
            }
            match unify(xs, ctx.hint)? {
                Unified::Float(v) => chart_forward(v, ctx.tol),
                Unified::Exact(v) => chart_forward(v, ctx.tol),
            }
        }
        Command::Axioms { samples, pool, table } => {
            if let Some(t) = table {
                let v = parse_value(&read_arg(&t)?)?;
                let rows: Vec<Vec<u64>> =
                    serde_json::from_value(v).map_err(|e| Error::MalformedJson(e.to_string()))?;
                let n = rows.len();
                if rows.iter().any(|r| r.len() != n) {
                    return Err(Error::MalformedJson("operation table must be square".into()));
                }
                let q = FiniteQuandleSample::new((0..n as u64).collect(), |x: &u64, y: &u64| rows[*x as usize][*y as usize]);
                let r = q.check_axioms();
                return Ok(json!({"table": axiom_json(&r), "size": n}));
            }
            let (mode, (sl, psl)) = match ctx.hint {
                Mode::Exact(d) => ("exact", random_axiom_check(&ExactSampler::new(d), pool, samples, ctx.seed, ctx.tol)),
                _ => (
                    "float",
                    random_axiom_check(&FloatSampler::default(), pool, samples, ctx.seed, ctx.tol.scaled(10.0)),
                ),
            };
            Ok(json!({
                "mode": mode,
                "samples": samples,
                "seed": ctx.seed,
                "sl": axiom_json(&sl),
                "psl": axiom_json(&psl),
            }))
        }
        Command::Orbit { seeds, symmetries, radius, psl } => {
            let k = seeds.len();
            let mut values = Vec::new();
            let mut mode = ctx.hint;
            for s in seeds.iter().chain(&symmetries) {
                let v = parse_value(&read_arg(s)?)?;
                mode = mode.join(parse_matrix_with(&v, ctx.hint, ctx.tol)?.mode())?;
                values.push(v);
            }
            let mut float = Vec::new();
            let mut exact = Vec::new();
            for v in &values {
                match parse_matrix_with(v, mode, ctx.tol)? {
                    AnyMatrix::Float(m) => float.push(m),
                    AnyMatrix::Exact(m) => exact.push(m),
                }
            }
            if exact.is_empty() {
                let syms = float.split_off(k);
                orbit_json(float, syms, radius, psl, ctx)
            } else {
                let syms = exact.split_off(k);
                orbit_json(exact, syms, radius, psl, ctx)
            }
        }
        Command::Kleinian { group, gamma, radius, window, samples, report } => {
            let g = match preset(&group) {
                Some(g) => AnyGroup::Exact(g),
                None => parse_group(&parse_value(&read_arg(&format!("@{group}"))?)?, ctx.tol)?,
            };
            let w = Word::parse(&gamma)?;
            let v = match &g {
                AnyGroup::Float(g) => kleinian_json(g, &w, radius, window, samples, ctx)?,
                AnyGroup::Exact(g) => kleinian_json(g, &w, radius, window, samples, ctx)?,
            };
            if let Some(path) = report {
                write_file(&path, &v)?;
            }
            Ok(v)
        }
        Command::Presets => Ok(Value::Array(
            presets()
                .iter()
                .map(|g| {
                    json!({
                        "name": g.name,
                        "rank": g.rank(),
                        "d": g.field().map(|d| d.get()),
                        "relators": g.relators.iter().map(|w| w.to_string()).collect::<Vec<_>>(),
                        "finite_volume": g.finite_volume,
                    })
                })
                .collect(),
        )),
        Command::Selftest { samples } => {
            let rows = selftest::run(ctx.seed, samples, ctx.tol);
            for r in &rows {
                eprintln!("{} {:<34} {}", if r.passed { "PASS" } else { "FAIL" }, r.name, r.detail);
            }
            let all = rows.iter().all(|r| r.passed);
            Ok(json!({
                "seed": ctx.seed,
                "passed": all,
                "rows": rows
                    .iter()
                    .map(|r| json!({"name": r.name, "passed": r.passed, "detail": r.detail}))
                    .collect::<Vec<_>>(),
            }))
        }
    }
}

fn write_file(path: &str, v: &Value) -> Result<(), Error> {
    fs::write(path, format!("{v}\n")).map_err(|e| Error::MalformedJson(format!("{path}: {e}")))
}

fn emit(v: &Value, output: Option<&str>) -> ExitCode {
    match output {
        Some(path) => match fs::write(path, format!("{v}\n")) {
            Ok(()) => ExitCode::SUCCESS,
            Err(e) => {
                println!("{}", json!({"error": "Io", "message": format!("{path}: {e}")}));
                ExitCode::from(1)
            }
        },
        None => {
            println!("{v}");
            ExitCode::SUCCESS
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => match e.kind() {
            ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                let _ = e.print();
                return ExitCode::SUCCESS;
            }
            kind => {
                let name = if kind == ErrorKind::InvalidSubcommand {
                    "UnknownSubcommand"
                } else {
                    "InvalidArguments"
                };
                println!("{}", json!({"error": name, "message": e.kind().to_string()}));
                eprint!("{e}");
                return ExitCode::from(2);
            }
        },
    };
    let g = cli.global;
    let result = Tolerance::new(g.eps).and_then(|tol| {
        let hint = match g.exact {
            Some(d) => Mode::Exact(Discriminant::new(d)?),
            None => Mode::Neutral,
        };
        let ctx = Ctx {
            tol,
            seed: g.seed,
            cap: g.cap,
            hint,
        };
        run(cli.command, &ctx)
    });
    match result {
        Ok(v) => emit(&v, g.output.as_deref()),
        Err(e) => {
            let v = json!({"error": e.name(), "message": e.to_string()});
            let _ = emit(&v, g.output.as_deref());
            ExitCode::from(if e.is_malformed_input() { 2 } else { 1 })
        }
    }
}
