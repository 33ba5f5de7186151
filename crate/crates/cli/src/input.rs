//! Deformation and weight inputs, from flags or from an earlier JSON echo.

use std::fmt;

use cherednik_core::error::ParseError;
use cherednik_core::poly::xi_to_w;
use cherednik_core::rational::{parse_rational, parse_rational_list};
use cherednik_core::{HPoly, Poly, Rational, Weight};
use serde_json::{json, Value};

use crate::render::rationals;

/// Usage or parse failure; always exits with code 2.
#[derive(Debug)]
pub struct UsageError(pub String);

impl fmt::Display for UsageError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl From<ParseError> for UsageError {
    fn from(e: ParseError) -> Self {
        UsageError(e.to_string())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Deformation {
    Xi(Vec<Rational>),
    W(Vec<Rational>),
    PH(Vec<Rational>),
}

impl Deformation {
    /// `w`, which is also the list of h-basis coefficients of `P`.
    pub fn w(&self, n: usize) -> Poly {
        match self {
            Deformation::Xi(xi) => xi_to_w(&Poly::new(xi.clone()), n),
            Deformation::W(w) | Deformation::PH(w) => Poly::new(w.clone()),
        }
    }

    pub fn p(&self, n: usize) -> HPoly {
        HPoly::from_w(n, &self.w(n))
    }

    fn key(&self) -> &'static str {
        match self {
            Deformation::Xi(_) => "xi",
            Deformation::W(_) => "w",
            Deformation::PH(_) => "P_h",
        }
    }

    fn coeffs(&self) -> &[Rational] {
        match self {
            Deformation::Xi(c) | Deformation::W(c) | Deformation::PH(c) => c,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Job {
    pub n: usize,
    pub deformation: Deformation,
    pub lambda: Option<Weight>,
}

impl Job {
    pub fn echo(&self) -> Value {
        let mut obj = json!({ "n": self.n });
        obj[self.deformation.key()] = rationals(self.deformation.coeffs());
        if let Some(l) = &self.lambda {
            obj["lambda"] = rationals(l.coords());
            obj["lambda_plus_rho"] = rationals(&l.shifted());
        }
        obj
    }
}

/// Raw flag values shared by every computing subcommand.
#[derive(Clone, Debug, Default)]
pub struct RawInput {
    pub n: Option<usize>,
    pub xi: Option<String>,
    pub w: Option<String>,
    pub p_h: Option<String>,
    pub lambda: Option<String>,
    pub lambda_plus_rho: Option<String>,
    pub input: Option<String>,
}

pub fn resolve(raw: &RawInput, need_lambda: bool) -> Result<Job, UsageError> {
    if let Some(path) = &raw.input {
        let flags = [&raw.xi, &raw.w, &raw.p_h, &raw.lambda, &raw.lambda_plus_rho];
        if raw.n.is_some() || flags.iter().any(|f| f.is_some()) {
            return Err(UsageError("--input cannot be combined with other input flags".into()));
        }
        let text = std::fs::read_to_string(path)
            .map_err(|e| UsageError(format!("cannot read `{path}`: {e}")))?;
        return from_json(&text, need_lambda);
    }
    let n = raw.n.ok_or_else(|| UsageError("missing --n".into()))?;
    if n == 0 {
        return Err(UsageError("rank `0` must be positive".into()));
    }
    let given: Vec<Deformation> = [
        raw.xi.as_deref().map(|s| parse_rational_list(s).map(Deformation::Xi)),
        raw.w.as_deref().map(|s| parse_rational_list(s).map(Deformation::W)),
        raw.p_h.as_deref().map(|s| parse_rational_list(s).map(Deformation::PH)),
    ]
    .into_iter()
    .flatten()
    .collect::<Result<_, _>>()?;
    let deformation = match given.len() {
        1 => given.into_iter().next().unwrap(),
        0 => return Err(UsageError("one of --xi, --w, --P-h is required".into())),
        _ => return Err(UsageError("--xi, --w and --P-h are mutually exclusive".into())),
    };
    let lambda = match (&raw.lambda, &raw.lambda_plus_rho) {
        (Some(_), Some(_)) => {
            return Err(UsageError("--lambda and --lambda-plus-rho are mutually exclusive".into()))
        }
        (Some(s), None) => Some(Weight::new(weight_coords(s, n)?)),
        (None, Some(s)) => Some(Weight::from_shifted(weight_coords(s, n)?)),
        (None, None) => None,
    };
    if need_lambda && lambda.is_none() {
        return Err(UsageError("one of --lambda, --lambda-plus-rho is required".into()));
    }
    Ok(Job { n, deformation, lambda })
}

fn weight_coords(text: &str, n: usize) -> Result<Vec<Rational>, UsageError> {
    let coords = parse_rational_list(text)?;
    if coords.len() != n {
        return Err(ParseError::Length { expected: n, got: coords.len() }.into());
    }
    Ok(coords)
}

fn json_rationals(v: &Value, key: &str) -> Result<Vec<Rational>, UsageError> {
    let arr = v
        .as_array()
        .ok_or_else(|| UsageError(format!("`{key}` must be an array of rational strings")))?;
    arr.iter()
        .map(|x| match x {
            Value::String(s) => Ok(parse_rational(s)?),
            Value::Number(num) => Ok(parse_rational(&num.to_string())?),
            other => Err(UsageError(format!("cannot parse `{other}` in `{key}`"))),
        })
        .collect()
}

/// Accepts either a full output document (with an `input` echo) or the echo.
pub fn from_json(text: &str, need_lambda: bool) -> Result<Job, UsageError> {
    let doc: Value =
        serde_json::from_str(text).map_err(|e| UsageError(format!("invalid JSON input: {e}")))?;
    let echo = doc.get("input").unwrap_or(&doc);
    let n = echo
        .get("n")
        .and_then(Value::as_u64)
        .filter(|n| *n > 0)
        .ok_or_else(|| UsageError("input JSON needs a positive integer `n`".into()))?
        as usize;
    let mut found = Vec::new();
    for (key, make) in [
        ("xi", Deformation::Xi as fn(Vec<Rational>) -> Deformation),
        ("w", Deformation::W),
        ("P_h", Deformation::PH),
    ] {
        if let Some(v) = echo.get(key) {
            found.push(make(json_rationals(v, key)?));
        }
    }
    if found.len() != 1 {
        return Err(UsageError("input JSON needs exactly one of `xi`, `w`, `P_h`".into()));
    }
    let lambda = match echo.get("lambda") {
        Some(v) => {
            let coords = json_rationals(v, "lambda")?;
            if coords.len() != n {
                return Err(ParseError::Length { expected: n, got: coords.len() }.into());
            }
            Some(Weight::new(coords))
        }
        None => None,
    };
    if need_lambda && lambda.is_none() {
        return Err(UsageError("input JSON has no `lambda`".into()));
    }
    Ok(Job { n, deformation: found.pop().unwrap(), lambda })
}
