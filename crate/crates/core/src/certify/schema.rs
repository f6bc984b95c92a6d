//! Version 1 of the certificate JSON format.
//!
//! ```text
//! {"v":1,"node":"wps_leaf","weights":[…],"strategy":"family_A",
//!  "entries":[{"b":13,"eq":[{"c":[1,1],"e":[2,0,0]},…]},…]}
//! {"v":1,"node":"elliptic_leaf","dim":1}
//! {"v":1,"node":"cited_leaf","dim":2,"index":14,"cite":"…"}
//! {"v":1,"node":"product","factors":[…]}
//! ```
//!
//! The root may carry `"claim":{"dim":d,"index":m}`, which the verifier
//! compares with what it recomputes.

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive};
use serde_json::{json, Map, Value};

use super::Certificate;
use crate::error::{Error, Result};
use crate::poly::SparsePoly;
use crate::wps::{Entry, KltStrategy, LogLeaf, StdCoeff, Wps};
use crate::Rational;

pub const SCHEMA_VERSION: u64 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Claim {
    pub dim: usize,
    pub index: u64,
}

/// A parsed file: the tree and the optional root claim.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Document {
    pub cert: Certificate,
    pub claim: Option<Claim>,
}

fn int_value(n: &BigInt) -> Value {
    match n.to_i64() {
        Some(i) => json!(i),
        // too large for a JSON number that round-trips everywhere
        None => json!(n.to_string()),
    }
}

fn poly_value(p: &SparsePoly) -> Value {
    Value::Array(
        p.terms()
            .iter()
            .map(|t| {
                json!({
                    "c": [int_value(t.coeff.numer()), int_value(t.coeff.denom())],
                    "e": t.exps,
                })
            })
            .collect(),
    )
}

fn node_value(cert: &Certificate, root: bool) -> Value {
    let mut obj = Map::new();
    if root {
        obj.insert("v".into(), json!(SCHEMA_VERSION));
    }
    match cert {
        Certificate::WpsLeaf(leaf) => {
            obj.insert("node".into(), json!("wps_leaf"));
            obj.insert("weights".into(), json!(leaf.space.weights()));
            obj.insert("strategy".into(), json!(leaf.strategy.tag()));
            let entries: Vec<Value> = leaf
                .entries
                .iter()
                .map(|e| json!({"b": e.coeff.b(), "eq": poly_value(&e.eq)}))
                .collect();
            obj.insert("entries".into(), Value::Array(entries));
        }
        Certificate::EllipticLeaf { dim } => {
            obj.insert("node".into(), json!("elliptic_leaf"));
            obj.insert("dim".into(), json!(dim));
        }
        Certificate::CitedLeaf { dim, index, cite } => {
            obj.insert("node".into(), json!("cited_leaf"));
            obj.insert("dim".into(), json!(dim));
            obj.insert("index".into(), json!(index));
            obj.insert("cite".into(), json!(cite));
        }
        Certificate::Product(fs) => {
            obj.insert("node".into(), json!("product"));
            let factors: Vec<Value> = fs.iter().map(|f| node_value(f, false)).collect();
            obj.insert("factors".into(), Value::Array(factors));
        }
    }
    Value::Object(obj)
}

pub fn to_json(cert: &Certificate, claim: Option<Claim>) -> Value {
    let mut v = node_value(cert, true);
    if let (Some(c), Value::Object(obj)) = (claim, &mut v) {
        obj.insert("claim".into(), json!({"dim": c.dim, "index": c.index}));
    }
    v
}

/// Pretty-printed with a trailing newline.
pub fn to_json_string(cert: &Certificate, claim: Option<Claim>) -> String {
    let mut s = serde_json::to_string_pretty(&to_json(cert, claim)).expect("values serialize");
    s.push('\n');
    s
}

fn malformed(path: &str, what: impl std::fmt::Display) -> Error {
    let at = if path.is_empty() { "$" } else { path };
    Error::Malformed(format!("{at}: {what}"))
}

fn field<'a>(obj: &'a Map<String, Value>, key: &str, path: &str) -> Result<&'a Value> {
    obj.get(key)
        .ok_or_else(|| malformed(path, format!("missing field {key:?}")))
}

fn as_u64(v: &Value, path: &str) -> Result<u64> {
    v.as_u64()
        .ok_or_else(|| malformed(path, "expected a non-negative integer"))
}

fn as_array<'a>(v: &'a Value, path: &str) -> Result<&'a Vec<Value>> {
    v.as_array()
        .ok_or_else(|| malformed(path, "expected an array"))
}

fn as_object<'a>(v: &'a Value, path: &str) -> Result<&'a Map<String, Value>> {
    v.as_object()
        .ok_or_else(|| malformed(path, "expected an object"))
}

fn big_int(v: &Value, path: &str) -> Result<BigInt> {
    match v {
        Value::Number(n) => n
            .as_i64()
            .map(BigInt::from)
            .ok_or_else(|| malformed(path, "expected an integer")),
        Value::String(s) => s
            .parse()
            .map_err(|_| malformed(path, "expected a decimal integer")),
        _ => Err(malformed(path, "expected an integer")),
    }
}

fn parse_poly(v: &Value, nvars: usize, path: &str) -> Result<SparsePoly> {
    let mut terms = Vec::new();
    for (i, t) in as_array(v, path)?.iter().enumerate() {
        let tp = format!("{path}[{i}]");
        let obj = as_object(t, &tp)?;
        let c = as_array(field(obj, "c", &tp)?, &format!("{tp}.c"))?;
        if c.len() != 2 {
            return Err(malformed(
                &format!("{tp}.c"),
                "expected [numerator, denominator]",
            ));
        }
        let num = big_int(&c[0], &format!("{tp}.c[0]"))?;
        let den = big_int(&c[1], &format!("{tp}.c[1]"))?;
        if !den.is_positive() {
            return Err(malformed(
                &format!("{tp}.c[1]"),
                "denominator must be positive",
            ));
        }
        let exps = as_array(field(obj, "e", &tp)?, &format!("{tp}.e"))?
            .iter()
            .enumerate()
            .map(|(j, x)| {
                let ep = format!("{tp}.e[{j}]");
                let k = as_u64(x, &ep)?;
                u32::try_from(k).map_err(|_| malformed(&ep, "exponent too large"))
            })
            .collect::<Result<Vec<u32>>>()?;
        if exps.len() != nvars {
            return Err(malformed(
                &format!("{tp}.e"),
                format!("{} exponents for {nvars} variables", exps.len()),
            ));
        }
        let coeff = if den.is_one() {
            Rational::from_integer(num)
        } else {
            Rational::new(num, den)
        };
        terms.push((coeff, exps));
    }
    SparsePoly::new(nvars, terms).map_err(|e| malformed(path, e))
}

fn parse_node(v: &Value, path: &str) -> Result<Certificate> {
    let obj = as_object(v, path)?;
    let kind = field(obj, "node", path)?
        .as_str()
        .ok_or_else(|| malformed(path, "\"node\" must be a string"))?;
    match kind {
        "wps_leaf" => {
            let weights = as_array(field(obj, "weights", path)?, &format!("{path}.weights"))?
                .iter()
                .enumerate()
                .map(|(i, w)| as_u64(w, &format!("{path}.weights[{i}]")))
                .collect::<Result<Vec<u64>>>()?;
            let space = Wps::new(weights).map_err(|e| malformed(&format!("{path}.weights"), e))?;
            let strategy: KltStrategy = field(obj, "strategy", path)?
                .as_str()
                .ok_or_else(|| malformed(&format!("{path}.strategy"), "expected a string"))?
                .parse()
                .map_err(|e| malformed(&format!("{path}.strategy"), e))?;
            let mut entries = Vec::new();
            let list = as_array(field(obj, "entries", path)?, &format!("{path}.entries"))?;
            for (i, e) in list.iter().enumerate() {
                let ep = format!("{path}.entries[{i}]");
                let eobj = as_object(e, &ep)?;
                let b = as_u64(field(eobj, "b", &ep)?, &format!("{ep}.b"))?;
                let coeff = StdCoeff::new(b).map_err(|err| malformed(&format!("{ep}.b"), err))?;
                let eq = parse_poly(field(eobj, "eq", &ep)?, space.nvars(), &format!("{ep}.eq"))?;
                entries.push(Entry { coeff, eq });
            }
            let leaf = LogLeaf::new(space, entries, strategy).map_err(|e| malformed(path, e))?;
            Ok(Certificate::WpsLeaf(leaf))
        }
        "elliptic_leaf" => {
            let dim = as_u64(field(obj, "dim", path)?, &format!("{path}.dim"))?;
            Ok(Certificate::EllipticLeaf { dim: dim as usize })
        }
        "cited_leaf" => {
            let dim = as_u64(field(obj, "dim", path)?, &format!("{path}.dim"))?;
            let index = as_u64(field(obj, "index", path)?, &format!("{path}.index"))?;
            let cite = field(obj, "cite", path)?
                .as_str()
                .ok_or_else(|| malformed(&format!("{path}.cite"), "expected a string"))?;
            Ok(Certificate::CitedLeaf {
                dim: dim as usize,
                index,
                cite: cite.to_string(),
            })
        }
        "product" => {
            let list = as_array(field(obj, "factors", path)?, &format!("{path}.factors"))?;
            let factors = list
                .iter()
                .enumerate()
                .map(|(i, f)| parse_node(f, &format!("{path}.factors[{i}]")))
                .collect::<Result<Vec<_>>>()?;
            Ok(Certificate::Product(factors))
        }
        other => Err(malformed(
            &format!("{path}.node"),
            format!("unknown node kind {other:?}"),
        )),
    }
}

pub fn from_json(v: &Value) -> Result<Document> {
    let obj = as_object(v, "")?;
    let version = as_u64(field(obj, "v", "")?, "$.v")?;
    if version != SCHEMA_VERSION {
        return Err(malformed(
            "$.v",
            format!("unsupported schema version {version}"),
        ));
    }
    let cert = parse_node(v, "$")?;
    let claim = match obj.get("claim") {
        None => None,
        Some(c) => {
            let cobj = as_object(c, "$.claim")?;
            Some(Claim {
                dim: as_u64(field(cobj, "dim", "$.claim")?, "$.claim.dim")? as usize,
                index: as_u64(field(cobj, "index", "$.claim")?, "$.claim.index")?,
            })
        }
    };
    Ok(Document { cert, claim })
}

/// Parses text; syntax errors carry the line and column.
pub fn from_json_str(text: &str) -> Result<Document> {
    let v: Value = serde_json::from_str(text).map_err(|e| Error::Json {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    from_json(&v)
}
