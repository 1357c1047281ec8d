//! JSON form of group elements:
//! `{ "sigma": "e" | "(12)" | "(13)" | "(23)" | "(123)" | "(132)", "a": [[rat]], "b": [[rat]], "c": [[rat]] }`.
//! A generator file is a JSON array of such objects, or an object with a
//! `"generators"` array.

use serde_json::{Map, Value};

use super::{FactorPermutation, IsotropyElement};
use crate::algebra::io::{matrix_from_value, matrix_to_value};
use crate::algebra::Format;
use crate::error::{Error, Result};

pub fn element_from_value(v: &Value, loc: &str) -> Result<IsotropyElement> {
    let obj = v
        .as_object()
        .ok_or_else(|| Error::parse(loc, "expected an object"))?;
    let sigma = match obj.get("sigma") {
        None => FactorPermutation::Identity,
        Some(Value::String(s)) => s.parse::<FactorPermutation>().map_err(|_| {
            Error::parse(
                format!("{loc}.sigma"),
                format!("unknown factor permutation {s:?}"),
            )
        })?,
        Some(_) => return Err(Error::parse(format!("{loc}.sigma"), "expected a string")),
    };
    let get = |key: &str| {
        let floc = format!("{loc}.{key}");
        let v = obj
            .get(key)
            .ok_or_else(|| Error::parse(floc.as_str(), "missing"))?;
        matrix_from_value(v, &floc)
    };
    let (a, b, c) = (get("a")?, get("b")?, get("c")?);
    let format = Format::new(a.rows(), b.rows(), c.rows())?;
    IsotropyElement::new(format, sigma, a, b, c).map_err(|e| match e {
        Error::Parse { .. } => e,
        other => Error::parse(loc, other.to_string()),
    })
}

pub fn element_to_value(g: &IsotropyElement) -> Value {
    let mut obj = Map::new();
    obj.insert("sigma".into(), Value::String(g.sigma().name().into()));
    obj.insert("a".into(), matrix_to_value(g.a()));
    obj.insert("b".into(), matrix_to_value(g.b()));
    obj.insert("c".into(), matrix_to_value(g.c()));
    Value::Object(obj)
}

pub fn parse_element(text: &str) -> Result<IsotropyElement> {
    let v: Value =
        serde_json::from_str(text).map_err(|e| Error::parse("document", e.to_string()))?;
    element_from_value(&v, "element")
}

pub fn serialize_element(g: &IsotropyElement) -> String {
    serde_json::to_string(&element_to_value(g)).expect("JSON values serialize")
}

/// Reads a list of elements (a bare array, a `"generators"` object or a
/// single element).
pub fn parse_elements(text: &str) -> Result<Vec<IsotropyElement>> {
    let v: Value =
        serde_json::from_str(text).map_err(|e| Error::parse("document", e.to_string()))?;
    let (list, prefix) = match &v {
        Value::Array(items) => (items.as_slice(), ""),
        Value::Object(obj) if obj.contains_key("generators") => match &obj["generators"] {
            Value::Array(items) => (items.as_slice(), "generators"),
            _ => return Err(Error::parse("generators", "expected an array")),
        },
        Value::Object(_) => return Ok(vec![element_from_value(&v, "element")?]),
        _ => return Err(Error::parse("document", "expected an array or object")),
    };
    list.iter()
        .enumerate()
        .map(|(i, item)| element_from_value(item, &format!("{prefix}[{i}]")))
        .collect()
}
