//! Query files: `{"version": "1", "options": {...}, "queries": [...]}`.

use std::collections::BTreeMap;
use std::fmt;

use serde_json::{Map, Value};

use crate::calculus::MapClassDescriptor;
use crate::engine::{PairKind, PairQuery, Quantifier};
use crate::manifold::{Cardinality, GenericFields, ManifoldDescriptor};
use crate::tables::HomotopyTables;
use crate::Truth;

pub const VERSION: &str = "1";

const DIMENSION_CONVENTION: &str = "maps S^m -> N are only considered for m, n >= 2 (\"assume that m, n ≥ 2\")";

#[derive(Copy, Clone, Debug, Default, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Options {
    pub trace: bool,
    pub format: Format,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QueryFile {
    pub version: String,
    pub options: Options,
    pub queries: Vec<PairQuery>,
}

/// A problem in a query file. `pointer` is a JSON pointer into the document.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Diagnostic {
    pub pointer: String,
    pub line: Option<usize>,
    pub column: Option<usize>,
    pub byte_offset: Option<usize>,
    pub message: String,
}

impl Diagnostic {
    fn at(pointer: impl Into<String>, message: impl Into<String>) -> Self {
        Self { pointer: pointer.into(), line: None, column: None, byte_offset: None, message: message.into() }
    }
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.line, self.column, self.byte_offset) {
            (Some(l), Some(c), Some(b)) => write!(f, "line {l}, column {c} (byte {b}): {}", self.message),
            _ => {
                let p = if self.pointer.is_empty() { "/" } else { &self.pointer };
                write!(f, "{p}: {}", self.message)
            }
        }
    }
}

/// Every diagnostic found; a file with any diagnostic is rejected as a whole.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("{}", .0.iter().map(ToString::to_string).collect::<Vec<_>>().join("\n"))]
pub struct Diagnostics(pub Vec<Diagnostic>);

type Parsed<T> = Result<T, Diagnostic>;

fn byte_offset(text: &str, line: usize, column: usize) -> usize {
    let start: usize = text.split_inclusive('\n').take(line.saturating_sub(1)).map(str::len).sum();
    (start + column).min(text.len())
}

pub fn parse_query_file(bytes: &[u8], tables: &HomotopyTables) -> Result<QueryFile, Diagnostics> {
    let text = std::str::from_utf8(bytes).map_err(|e| {
        Diagnostics(vec![Diagnostic { byte_offset: Some(e.valid_up_to()), ..Diagnostic::at("", "input is not valid UTF-8") }])
    })?;
    let root: Value = serde_json::from_str(text).map_err(|e| {
        let (line, column) = (e.line(), e.column());
        Diagnostics(vec![Diagnostic {
            pointer: String::new(),
            line: Some(line),
            column: Some(column),
            byte_offset: Some(byte_offset(text, line, column)),
            message: format!("JSON syntax error: {e}"),
        }])
    })?;
    let single = |d: Diagnostic| Diagnostics(vec![d]);
    let obj = object(&root, "").map_err(single)?;
    allow_keys(obj, "", &["version", "options", "queries"]).map_err(single)?;
    let version = match obj.get("version") {
        Some(Value::String(v)) if v == VERSION => v.clone(),
        Some(Value::String(v)) => return Err(single(Diagnostic::at("/version", format!("unsupported version \"{v}\", expected \"{VERSION}\"")))),
        Some(_) => return Err(single(Diagnostic::at("/version", "version must be a string"))),
        None => return Err(single(Diagnostic::at("", "missing field \"version\""))),
    };
    let options = match obj.get("options") {
        None => Options::default(),
        Some(v) => parse_options(v).map_err(single)?,
    };
    let items = match obj.get("queries") {
        Some(Value::Array(items)) => items,
        Some(_) => return Err(single(Diagnostic::at("/queries", "queries must be an array"))),
        None => return Err(single(Diagnostic::at("", "missing field \"queries\""))),
    };
    let mut queries = Vec::with_capacity(items.len());
    let mut problems = Vec::new();
    for (i, item) in items.iter().enumerate() {
        let path = format!("/queries/{i}");
        match parse_query(item, &path).and_then(|q| check_query(q, &path, tables)) {
            Ok(q) => queries.push(q),
            Err(d) => problems.push(d),
        }
    }
    if !problems.is_empty() {
        return Err(Diagnostics(problems));
    }
    Ok(QueryFile { version, options, queries })
}

fn check_query(q: PairQuery, path: &str, tables: &HomotopyTables) -> Parsed<PairQuery> {
    match q.validate(tables) {
        Ok(()) => Ok(q),
        Err(e) => Err(Diagnostic::at(path, e.to_string())),
    }
}

fn object<'a>(v: &'a Value, path: &str) -> Parsed<&'a Map<String, Value>> {
    v.as_object().ok_or_else(|| Diagnostic::at(path, "expected an object"))
}

fn allow_keys(obj: &Map<String, Value>, path: &str, allowed: &[&str]) -> Parsed<()> {
    match obj.keys().find(|k| !allowed.contains(&k.as_str())) {
        Some(k) => Err(Diagnostic::at(format!("{path}/{k}"), format!("unknown field \"{k}\" (expected one of: {})", allowed.join(", ")))),
        None => Ok(()),
    }
}

fn field<'a>(obj: &'a Map<String, Value>, path: &str, key: &str) -> Parsed<&'a Value> {
    obj.get(key).ok_or_else(|| Diagnostic::at(path, format!("missing field \"{key}\"")))
}

fn uint(obj: &Map<String, Value>, path: &str, key: &str) -> Parsed<u32> {
    let p = format!("{path}/{key}");
    let v = field(obj, path, key)?;
    v.as_u64()
        .and_then(|x| u32::try_from(x).ok())
        .ok_or_else(|| Diagnostic::at(p, format!("expected a non-negative integer, got {v}")))
}

fn dimension(obj: &Map<String, Value>, path: &str, key: &str) -> Parsed<u32> {
    let x = uint(obj, path, key)?;
    if x < 2 {
        return Err(Diagnostic::at(format!("{path}/{key}"), format!("{key} = {x}: {DIMENSION_CONVENTION}")));
    }
    Ok(x)
}

fn string<'a>(obj: &'a Map<String, Value>, path: &str, key: &str) -> Parsed<&'a str> {
    field(obj, path, key)?.as_str().ok_or_else(|| Diagnostic::at(format!("{path}/{key}"), "expected a string"))
}

fn truth(obj: &Map<String, Value>, path: &str, key: &str) -> Parsed<Truth> {
    match obj.get(key) {
        None => Ok(Truth::Unknown),
        Some(v) => tri_bool(v, &format!("{path}/{key}")),
    }
}

fn tri_bool(v: &Value, path: &str) -> Parsed<Truth> {
    match v {
        Value::Bool(b) => Ok(Truth::from(*b)),
        Value::Null => Ok(Truth::Unknown),
        Value::String(s) if s == "yes" => Ok(Truth::Yes),
        Value::String(s) if s == "no" => Ok(Truth::No),
        Value::String(s) if s == "unknown" => Ok(Truth::Unknown),
        _ => Err(Diagnostic::at(path, format!("expected true, false, \"yes\", \"no\" or \"unknown\", got {v}"))),
    }
}

fn parse_options(v: &Value) -> Parsed<Options> {
    let obj = object(v, "/options")?;
    allow_keys(obj, "/options", &["trace", "format"])?;
    let trace = match obj.get("trace") {
        None => false,
        Some(Value::Bool(b)) => *b,
        Some(_) => return Err(Diagnostic::at("/options/trace", "expected a boolean")),
    };
    let format = match obj.get("format") {
        None => Format::Text,
        Some(v) => serde_json::from_value(v.clone()).map_err(|_| Diagnostic::at("/options/format", format!("expected \"text\" or \"json\", got {v}")))?,
    };
    Ok(Options { trace, format })
}

fn parse_query(v: &Value, path: &str) -> Parsed<PairQuery> {
    let obj = object(v, path)?;
    allow_keys(obj, path, &["id", "manifold", "m", "kind", "quantifier", "f1", "f2"])?;
    let id = match obj.get("id") {
        None => None,
        Some(Value::String(s)) => Some(s.clone()),
        Some(_) => return Err(Diagnostic::at(format!("{path}/id"), "expected a string")),
    };
    let manifold = parse_manifold(field(obj, path, "manifold")?, &format!("{path}/manifold"))?;
    let m = dimension(obj, path, "m")?;
    let kind = match string(obj, path, "kind")? {
        "self" => PairKind::SelfPair,
        "root" => PairKind::Root,
        "general" => PairKind::General,
        other => return Err(Diagnostic::at(format!("{path}/kind"), format!("unknown pair kind \"{other}\" (expected self, root or general)"))),
    };
    let quantifier = match obj.get("quantifier") {
        None => Quantifier::Given,
        Some(v) => serde_json::from_value(v.clone())
            .map_err(|_| Diagnostic::at(format!("{path}/quantifier"), format!("unknown quantifier {v} (expected given, forall or exists)")))?,
    };
    let class = |key: &str| -> Parsed<Option<MapClassDescriptor>> {
        obj.get(key).map(|v| parse_class(v, &format!("{path}/{key}"))).transpose()
    };
    let (f1, f2) = (class("f1")?, class("f2")?);
    let mut q = PairQuery::new(manifold, m, kind, quantifier);
    q.id = id;
    if quantifier != Quantifier::Given {
        if let Some(key) = ["f1", "f2"].into_iter().find(|k| obj.contains_key(*k)) {
            return Err(Diagnostic::at(format!("{path}/{key}"), format!("`{quantifier}` queries range over all classes and take no \"{key}\"")));
        }
        return Ok(q);
    }
    let f1 = f1.ok_or_else(|| Diagnostic::at(path, "missing field \"f1\" (required for `given` queries)"))?;
    match kind {
        PairKind::SelfPair => {
            q.f2 = f2.unwrap_or_else(|| f1.clone());
            q.f1 = f1;
        }
        PairKind::Root => {
            q.f1 = f1;
            q.f2 = f2.unwrap_or_else(MapClassDescriptor::zero);
        }
        PairKind::General => {
            q.f2 = f2.ok_or_else(|| Diagnostic::at(path, "missing field \"f2\" (required for general pairs)"))?;
            q.f1 = f1;
        }
    }
    Ok(q)
}

fn parse_class(v: &Value, path: &str) -> Parsed<MapClassDescriptor> {
    let obj = object(v, path)?;
    allow_keys(obj, path, &["rep", "d", "h", "coords", "boundary", "collapse", "j_boundary_zero"])?;
    serde_json::from_value(v.clone()).map_err(|e| Diagnostic::at(path, format!("invalid map class: {e}")))
}

fn parse_manifold(v: &Value, path: &str) -> Parsed<ManifoldDescriptor> {
    let obj = object(v, path)?;
    let kind = string(obj, path, "kind")?;
    let built = match kind {
        "sphere" | "real_projective" => {
            allow_keys(obj, path, &["kind", "n"])?;
            let n = dimension(obj, path, "n")?;
            if kind == "sphere" {
                ManifoldDescriptor::sphere(n)
            } else {
                ManifoldDescriptor::rp(n)
            }
        }
        "grassmann" | "oriented_grassmann" | "stiefel" => {
            allow_keys(obj, path, &["kind", "r", "k"])?;
            let (r, k) = (uint(obj, path, "r")?, uint(obj, path, "k")?);
            match kind {
                "grassmann" => ManifoldDescriptor::grassmann(r, k),
                "oriented_grassmann" => ManifoldDescriptor::oriented_grassmann(r, k),
                _ => ManifoldDescriptor::stiefel(r, k),
            }
        }
        "surface" => {
            allow_keys(obj, path, &["kind", "genus", "orientable"])?;
            let genus = uint(obj, path, "genus")?;
            let orientable = field(obj, path, "orientable")?
                .as_bool()
                .ok_or_else(|| Diagnostic::at(format!("{path}/orientable"), "expected a boolean"))?;
            ManifoldDescriptor::surface(genus, orientable)
        }
        "product" => {
            allow_keys(obj, path, &["kind", "factors"])?;
            let factors = field(obj, path, "factors")?
                .as_array()
                .ok_or_else(|| Diagnostic::at(format!("{path}/factors"), "expected an array"))?;
            let factors = factors
                .iter()
                .enumerate()
                .map(|(i, f)| parse_manifold(f, &format!("{path}/factors/{i}")))
                .collect::<Parsed<Vec<_>>>()?;
            ManifoldDescriptor::product(factors)
        }
        "generic" => ManifoldDescriptor::generic(parse_generic(obj, path)?),
        other => {
            return Err(Diagnostic::at(
                format!("{path}/kind"),
                format!("unknown manifold kind \"{other}\" (expected sphere, real_projective, grassmann, oriented_grassmann, stiefel, product, surface or generic)"),
            ))
        }
    };
    let desc = built.map_err(|e| Diagnostic::at(path, e.to_string()))?;
    if desc.dim() < 2 {
        return Err(Diagnostic::at(path, format!("dim N = {}: {DIMENSION_CONVENTION}", desc.dim())));
    }
    Ok(desc)
}

fn parse_generic(obj: &Map<String, Value>, path: &str) -> Parsed<GenericFields> {
    allow_keys(
        obj,
        path,
        &["kind", "dim", "pi1_order", "orientable", "closed", "compact", "euler_char", "fibration_with_section", "free_finite_action", "punctured_inclusion_onto"],
    )?;
    let dim = dimension(obj, path, "dim")?;
    let pi1 = match obj.get("pi1_order") {
        None | Some(Value::Null) => None,
        Some(v) => Some(
            serde_json::from_value::<Cardinality>(v.clone()).map_err(|e| Diagnostic::at(format!("{path}/pi1_order"), e.to_string()))?,
        ),
    };
    let euler = match obj.get("euler_char") {
        None | Some(Value::Null) => None,
        Some(v) => Some(v.as_i64().ok_or_else(|| Diagnostic::at(format!("{path}/euler_char"), "expected an integer or null"))?),
    };
    let mut punctured_onto = BTreeMap::new();
    if let Some(v) = obj.get("punctured_inclusion_onto") {
        let p = format!("{path}/punctured_inclusion_onto");
        for (key, flag) in object(v, &p)? {
            let m: u32 = key.parse().map_err(|_| Diagnostic::at(format!("{p}/{key}"), "keys must be values of m"))?;
            punctured_onto.insert(m, tri_bool(flag, &format!("{p}/{key}"))?);
        }
    }
    Ok(GenericFields {
        dim,
        pi1,
        orientable: truth(obj, path, "orientable")?,
        closed: truth(obj, path, "closed")?,
        compact: truth(obj, path, "compact")?,
        euler,
        fibration_with_section: truth(obj, path, "fibration_with_section")?,
        free_finite_action: truth(obj, path, "free_finite_action")?,
        punctured_onto,
    })
}
