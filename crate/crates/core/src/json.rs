//! JSON encodings.
//!
//! Float scalars are `{"re": x, "im": y}`, exact scalars are
//! `{"a": "p/q", "b": "p/q", "d": d}` and matrices are
//! `{"a": S, "b": S, "c": S, "d": S}` (a nested `[[a, b], [c, d]]` array is
//! accepted on input). A bare JSON integer is mode-neutral and adopts the
//! mode of the other entries; a bare non-integral number is a float.

use std::str::FromStr;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::Zero;
use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::kleinian::{GroupSpec, Word};
use crate::moebius::{Psl2, Sl2};
use crate::numerics::{Discriminant, QuadraticNumber, Scalar, Tolerance};

/// Scalars with a JSON encoding.
pub trait JsonScalar: Scalar {
    fn to_json(&self) -> Value;
}

impl JsonScalar for Complex64 {
    fn to_json(&self) -> Value {
        // Normalize −0 so output is byte-stable.
        let z = |x: f64| if x == 0.0 { 0.0 } else { x };
        json!({"re": z(self.re), "im": z(self.im)})
    }
}

fn rational_string(r: &BigRational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

impl JsonScalar for QuadraticNumber {
    fn to_json(&self) -> Value {
        json!({
            "a": rational_string(&self.a()),
            "b": rational_string(&self.b()),
            "d": self.discriminant().get(),
        })
    }
}

pub fn matrix_to_json<S: JsonScalar>(m: &Sl2<S>) -> Value {
    json!({
        "a": m.a().to_json(),
        "b": m.b().to_json(),
        "c": m.c().to_json(),
        "d": m.d().to_json(),
    })
}

pub fn psl_to_json<S: JsonScalar>(f: &Psl2<S>) -> Value {
    matrix_to_json(f.rep())
}

/// A parsed scalar before the mode is fixed.
#[derive(Clone, Debug, PartialEq)]
pub enum AnyScalar {
    Integer(i64),
    Float(Complex64),
    Exact(QuadraticNumber),
}

impl AnyScalar {
    pub fn into_float(self) -> Result<Complex64> {
        match self {
            AnyScalar::Integer(n) => Ok(Complex64::new(n as f64, 0.0)),
            AnyScalar::Float(z) => Ok(z),
            AnyScalar::Exact(_) => Err(Error::MixedMode),
        }
    }

    pub fn into_exact(self, d: Discriminant) -> Result<QuadraticNumber> {
        match self {
            AnyScalar::Integer(n) => Ok(QuadraticNumber::from_int(&d, n)),
            AnyScalar::Float(_) => Err(Error::MixedMode),
            AnyScalar::Exact(q) if q.discriminant() == d => Ok(q),
            AnyScalar::Exact(q) => Err(Error::MixedField(q.discriminant().get(), d.get())),
        }
    }

    fn mode(&self) -> Mode {
        match self {
            AnyScalar::Integer(_) => Mode::Neutral,
            AnyScalar::Float(_) => Mode::Float,
            AnyScalar::Exact(q) => Mode::Exact(q.discriminant()),
        }
    }
}

/// Arithmetic mode of a parsed value.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Neutral,
    Float,
    Exact(Discriminant),
}

impl Mode {
    /// Joins two modes, failing on float/exact or field mismatches.
    pub fn join(self, other: Mode) -> Result<Mode> {
        match (self, other) {
            (Mode::Neutral, m) | (m, Mode::Neutral) => Ok(m),
            (Mode::Float, Mode::Float) => Ok(Mode::Float),
            (Mode::Exact(a), Mode::Exact(b)) if a == b => Ok(Mode::Exact(a)),
            (Mode::Exact(a), Mode::Exact(b)) => Err(Error::MixedField(a.get(), b.get())),
            _ => Err(Error::MixedMode),
        }
    }
}

fn malformed(what: impl Into<String>) -> Error {
    Error::MalformedJson(what.into())
}

pub fn parse_value(text: &str) -> Result<Value> {
    serde_json::from_str(text).map_err(|e| malformed(e.to_string()))
}

fn parse_rational(v: &Value) -> Result<BigRational> {
    match v {
        Value::String(s) => {
            let (n, d) = match s.split_once('/') {
                Some((n, d)) => (n.trim(), d.trim()),
                None => (s.trim(), "1"),
            };
            let n = BigInt::from_str(n).map_err(|_| malformed(format!("bad rational {s:?}")))?;
            let d = BigInt::from_str(d).map_err(|_| malformed(format!("bad rational {s:?}")))?;
            if d.is_zero() {
                return Err(malformed(format!("zero denominator in {s:?}")));
            }
            Ok(BigRational::new(n, d))
        }
        Value::Number(n) => n
            .as_i64()
            .map(|n| BigRational::from_integer(n.into()))
            .ok_or_else(|| malformed(format!("exact component {n} is not an integer"))),
        _ => Err(malformed("exact component must be a string \"p/q\"")),
    }
}

fn parse_f64(v: Option<&Value>, what: &str) -> Result<f64> {
    match v {
        None => Ok(0.0),
        Some(v) => v.as_f64().ok_or_else(|| malformed(format!("{what} must be a number"))),
    }
}

pub fn parse_scalar(v: &Value) -> Result<AnyScalar> {
    match v {
        Value::Number(n) => match n.as_i64() {
            Some(i) => Ok(AnyScalar::Integer(i)),
            None => Ok(AnyScalar::Float(Complex64::new(n.as_f64().unwrap_or(f64::NAN), 0.0))),
        },
        Value::Object(o) if o.contains_key("re") || o.contains_key("im") => {
            let z = Complex64::new(parse_f64(o.get("re"), "re")?, parse_f64(o.get("im"), "im")?);
            if !z.is_finite() {
                return Err(Error::NonFinite);
            }
            Ok(AnyScalar::Float(z))
        }
        Value::Object(o) if o.contains_key("d") => {
            let d = o["d"]
                .as_i64()
                .ok_or_else(|| malformed("\"d\" must be an integer"))?;
            let d = Discriminant::new(d)?;
            let a = o.get("a").map(parse_rational).transpose()?.unwrap_or_else(BigRational::zero);
            let b = o.get("b").map(parse_rational).transpose()?.unwrap_or_else(BigRational::zero);
            Ok(AnyScalar::Exact(QuadraticNumber::new(a, b, d)))
        }
        _ => Err(malformed(format!("not a scalar: {v}"))),
    }
}

/// A parsed matrix in whichever mode its entries determine.
#[derive(Clone, Debug, PartialEq)]
pub enum AnyMatrix {
    Float(Sl2<Complex64>),
    Exact(Sl2<QuadraticNumber>),
}

fn matrix_entries(v: &Value) -> Result<[AnyScalar; 4]> {
    let raw: [&Value; 4] = match v {
        Value::Object(o) => {
            let get = |k: &str| o.get(k).ok_or_else(|| malformed(format!("matrix is missing \"{k}\"")));
            [get("a")?, get("b")?, get("c")?, get("d")?]
        }
        Value::Array(rows) => match rows.as_slice() {
            [Value::Array(r0), Value::Array(r1)] if r0.len() == 2 && r1.len() == 2 => [&r0[0], &r0[1], &r1[0], &r1[1]],
            _ => return Err(malformed("matrix array must be [[a, b], [c, d]]")),
        },
        _ => return Err(malformed(format!("not a matrix: {v}"))),
    };
    Ok([
        parse_scalar(raw[0])?,
        parse_scalar(raw[1])?,
        parse_scalar(raw[2])?,
        parse_scalar(raw[3])?,
    ])
}

fn build<S: Scalar>(e: [AnyScalar; 4], conv: impl Fn(AnyScalar) -> Result<S>, tol: Tolerance) -> Result<Sl2<S>> {
    let [a, b, c, d] = e;
    Sl2::new(conv(a)?, conv(b)?, conv(c)?, conv(d)?, tol)
}

/// Parses a matrix; integer-only matrices default to float mode unless
/// `hint` says otherwise.
pub fn parse_matrix_with(v: &Value, hint: Mode, tol: Tolerance) -> Result<AnyMatrix> {
    let e = matrix_entries(v)?;
    let mode = e.iter().try_fold(hint, |m, s| m.join(s.mode()))?;
    match mode {
        Mode::Neutral | Mode::Float => Ok(AnyMatrix::Float(build(e, AnyScalar::into_float, tol)?)),
        Mode::Exact(d) => Ok(AnyMatrix::Exact(build(e, |s| s.into_exact(d), tol)?)),
    }
}

pub fn parse_matrix(v: &Value, tol: Tolerance) -> Result<AnyMatrix> {
    parse_matrix_with(v, Mode::Neutral, tol)
}

impl AnyMatrix {
    pub fn mode(&self) -> Mode {
        match self {
            AnyMatrix::Float(_) => Mode::Float,
            AnyMatrix::Exact(m) => Mode::Exact(m.field()),
        }
    }

    pub fn to_json(&self) -> Value {
        match self {
            AnyMatrix::Float(m) => matrix_to_json(m),
            AnyMatrix::Exact(m) => matrix_to_json(m),
        }
    }
}

/// A parsed group in whichever mode its generators determine.
#[derive(Clone, Debug)]
pub enum AnyGroup {
    Float(GroupSpec<Complex64>),
    Exact(GroupSpec<QuadraticNumber>),
}

fn parse_word(v: &Value) -> Result<Word> {
    match v {
        Value::String(s) => Word::parse(s),
        Value::Array(items) => {
            let idx: Option<Vec<i64>> = items.iter().map(Value::as_i64).collect();
            Word::from_indices(&idx.ok_or_else(|| malformed("word indices must be integers"))?)
        }
        _ => Err(malformed(format!("not a word: {v}"))),
    }
}

/// `{"name": .., "generators": [matrices], "relators": [words],
/// "finite_volume": bool}`; only `generators` is required.
pub fn parse_group(v: &Value, tol: Tolerance) -> Result<AnyGroup> {
    let o = v.as_object().ok_or_else(|| malformed("group must be an object"))?;
    let name = o.get("name").and_then(Value::as_str).unwrap_or("custom").to_string();
    let gens = o
        .get("generators")
        .and_then(Value::as_array)
        .ok_or_else(|| malformed("group needs a \"generators\" array"))?;
    if gens.is_empty() {
        return Err(malformed("group needs at least one generator"));
    }
    let relators = match o.get("relators") {
        None | Some(Value::Null) => Vec::new(),
        Some(Value::Array(rs)) => rs.iter().map(parse_word).collect::<Result<_>>()?,
        Some(_) => return Err(malformed("\"relators\" must be an array")),
    };
    let finite_volume = match o.get("finite_volume") {
        None | Some(Value::Null) => false,
        Some(Value::Bool(b)) => *b,
        Some(_) => return Err(malformed("\"finite_volume\" must be a boolean")),
    };
    let mut mode = Mode::Neutral;
    for g in gens {
        for e in matrix_entries(g)? {
            mode = mode.join(e.mode())?;
        }
    }
    let mats: Vec<AnyMatrix> = gens.iter().map(|g| parse_matrix_with(g, mode, tol)).collect::<Result<_>>()?;
    let group = match mode {
        Mode::Exact(_) => AnyGroup::Exact(
            GroupSpec::new(
                name,
                mats.into_iter()
                    .map(|m| match m {
                        AnyMatrix::Exact(m) => Psl2::new(m),
                        AnyMatrix::Float(_) => unreachable!("mode fixed above"),
                    })
                    .collect(),
            )
            .with_relators(relators)
            .with_finite_volume(finite_volume),
        ),
        _ => AnyGroup::Float(
            GroupSpec::new(
                name,
                mats.into_iter()
                    .map(|m| match m {
                        AnyMatrix::Float(m) => Psl2::with_tolerance(m, tol),
                        AnyMatrix::Exact(_) => unreachable!("mode fixed above"),
                    })
                    .collect(),
            )
            .with_relators(relators)
            .with_finite_volume(finite_volume),
        ),
    };
    Ok(group)
}

pub fn group_to_json<S: JsonScalar>(g: &GroupSpec<S>) -> Value {
    let mut o = Map::new();
    o.insert("name".into(), json!(g.name));
    o.insert(
        "generators".into(),
        Value::Array(g.generators.iter().map(psl_to_json).collect()),
    );
    o.insert(
        "relators".into(),
        Value::Array(g.relators.iter().map(|w| json!(w.to_string())).collect()),
    );
    o.insert("finite_volume".into(), json!(g.finite_volume));
    Value::Object(o)
}

/// Finite floats as numbers, infinities as `null`.
pub fn finite_or_null(x: f64) -> Value {
    if x.is_finite() {
        json!(x)
    } else {
        Value::Null
    }
}
