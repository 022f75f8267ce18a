//! Polytope files: JSON with inward or outward facet data and offsets in
//! units of π.
//!
//! ```json
//! {
//!   "name": "blowup_cp3",
//!   "dim": 3,
//!   "convention": "outward",
//!   "facets": [{"normal": [-1, 0, 0], "offset": [0, 1]}, ...]
//! }
//! ```

use std::path::Path;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};
use toric_qh_core::linalg::Rat;
use toric_qh_core::polytope::{builtin, Convention, Facet, Polytope, PolytopeError};

#[derive(Debug, thiserror::Error)]
pub enum LoadError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("ParseError at line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },
    #[error("SchemaError at {path}: {message}")]
    Schema { path: String, message: String },
    #[error(transparent)]
    Polytope(#[from] PolytopeError),
}

fn schema(path: impl Into<String>, message: impl Into<String>) -> LoadError {
    LoadError::Schema {
        path: path.into(),
        message: message.into(),
    }
}

/// A named polytope as read from a file or the built-in library.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolytopeFile {
    pub name: String,
    pub polytope: Polytope,
}

impl PolytopeFile {
    /// Accepts a built-in name (`cp<n>`, `cp1xcp1`, `blowup_cp3`) or a path.
    pub fn load(arg: &str) -> Result<Self, LoadError> {
        if let Some(polytope) = builtin::by_name(arg) {
            return Ok(PolytopeFile {
                name: arg.to_string(),
                polytope,
            });
        }
        Self::read(Path::new(arg))
    }

    pub fn read(path: &Path) -> Result<Self, LoadError> {
        let text = std::fs::read_to_string(path).map_err(|source| LoadError::Io {
            path: path.display().to_string(),
            source,
        })?;
        let fallback = path.file_stem().map(|s| s.to_string_lossy().into_owned());
        Self::parse(&text, fallback.as_deref())
    }

    pub fn parse(text: &str, default_name: Option<&str>) -> Result<Self, LoadError> {
        let value: Value = serde_json::from_str(text).map_err(|e| LoadError::Parse {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        })?;
        Self::from_json(&value, default_name)
    }

    pub fn from_json(value: &Value, default_name: Option<&str>) -> Result<Self, LoadError> {
        let obj = value.as_object().ok_or_else(|| schema("$", "expected an object"))?;
        for key in obj.keys() {
            if !matches!(key.as_str(), "name" | "dim" | "convention" | "facets") {
                return Err(schema(format!("$.{key}"), "unknown field"));
            }
        }
        let name = match obj.get("name") {
            Some(Value::String(s)) => s.clone(),
            Some(_) => return Err(schema("$.name", "expected a string")),
            None => default_name.unwrap_or("unnamed").to_string(),
        };
        let dim = obj
            .get("dim")
            .ok_or_else(|| schema("$.dim", "missing"))?
            .as_u64()
            .filter(|&d| d > 0)
            .ok_or_else(|| schema("$.dim", "expected a positive integer"))? as usize;
        let convention = match obj.get("convention").map(Value::as_str) {
            None => return Err(schema("$.convention", "missing")),
            Some(Some("inward")) => Convention::Inward,
            Some(Some("outward")) => Convention::Outward,
            Some(_) => return Err(schema("$.convention", "expected \"inward\" or \"outward\"")),
        };
        let facets = obj
            .get("facets")
            .ok_or_else(|| schema("$.facets", "missing"))?
            .as_array()
            .ok_or_else(|| schema("$.facets", "expected an array"))?
            .iter()
            .enumerate()
            .map(|(i, f)| parse_facet(f, dim, &format!("$.facets[{i}]")))
            .collect::<Result<Vec<_>, _>>()?;
        let polytope = Polytope::new(dim, facets, convention)?;
        Ok(PolytopeFile { name, polytope })
    }

    /// The facets exactly as declared, in the file's own convention.
    pub fn to_json(&self) -> Value {
        let p = &self.polytope;
        json!({
            "name": self.name,
            "dim": p.dim(),
            "convention": convention_name(p.convention()),
            "facets": p.declared_facets().iter().map(|f| json!({
                "normal": f.normal.iter().map(big_json).collect::<Vec<_>>(),
                "offset": [big_json(f.offset.numer()), big_json(f.offset.denom())],
            })).collect::<Vec<_>>(),
        })
    }
}

pub fn convention_name(c: Convention) -> &'static str {
    match c {
        Convention::Inward => "inward",
        Convention::Outward => "outward",
    }
}

fn big_json(x: &BigInt) -> Value {
    match i64::try_from(x) {
        Ok(v) => json!(v),
        Err(_) => json!(x.to_string()),
    }
}

fn parse_int(v: &Value, path: &str) -> Result<BigInt, LoadError> {
    match v {
        Value::Number(n) => n
            .as_i64()
            .map(BigInt::from)
            .ok_or_else(|| schema(path, "expected an integer")),
        Value::String(s) => s.parse().map_err(|_| schema(path, "expected an integer")),
        _ => Err(schema(path, "expected an integer")),
    }
}

fn parse_facet(v: &Value, dim: usize, path: &str) -> Result<Facet, LoadError> {
    let obj = v.as_object().ok_or_else(|| schema(path, "expected an object"))?;
    for key in obj.keys() {
        if key != "normal" && key != "offset" {
            return Err(schema(format!("{path}.{key}"), "unknown field"));
        }
    }
    let npath = format!("{path}.normal");
    let normal = obj
        .get("normal")
        .ok_or_else(|| schema(&npath, "missing"))?
        .as_array()
        .ok_or_else(|| schema(&npath, "expected an array"))?;
    if normal.len() != dim {
        return Err(schema(&npath, format!("expected {dim} entries, got {}", normal.len())));
    }
    let normal = normal
        .iter()
        .enumerate()
        .map(|(i, x)| parse_int(x, &format!("{npath}[{i}]")))
        .collect::<Result<Vec<_>, _>>()?;
    let opath = format!("{path}.offset");
    let offset = match obj.get("offset").ok_or_else(|| schema(&opath, "missing"))? {
        Value::Array(pair) if pair.len() == 2 => {
            let num = parse_int(&pair[0], &format!("{opath}[0]"))?;
            let den = parse_int(&pair[1], &format!("{opath}[1]"))?;
            if !den.is_positive() {
                return Err(schema(format!("{opath}[1]"), "denominator must be positive"));
            }
            let r = Rat::new(num.clone(), den.clone());
            if r.numer() != &num || r.denom() != &den {
                return Err(schema(&opath, "fraction is not reduced"));
            }
            r
        }
        n @ Value::Number(_) => Rat::from_integer(parse_int(n, &opath)?),
        _ => return Err(schema(&opath, "expected [num, den]")),
    };
    Ok(Facet::new(normal, offset))
}

/// `1/2·π`, `π`, `-3·π`, `0`.
pub fn offset_pi(r: &Rat) -> String {
    if r.is_zero() {
        "0".into()
    } else if r.is_one() {
        "π".into()
    } else if *r == -Rat::one() {
        "-π".into()
    } else {
        format!("{r}·π")
    }
}
