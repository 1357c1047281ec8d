//! JSON algorithm documents.
//!
//! ```text
//! { "name": str, "m": int, "n": int, "p": int,
//!   "triples": [ { "a": [[rat, ...], ...], "b": ..., "c": ... }, ... ] }
//! ```
//!
//! Rationals are strings such as `"-3/4"`; bare JSON integers are accepted
//! on input. The writer emits keys in the order above, one triple per line,
//! so output is byte-stable.

use serde_json::Value;

use super::{BilinearAlgorithm, Format, Triple};
use crate::error::{Error, Result};
use crate::exact::{Matrix, Rational};

pub fn parse_algorithm(text: &str) -> Result<BilinearAlgorithm> {
    let doc: Value =
        serde_json::from_str(text).map_err(|e| Error::parse("document", e.to_string()))?;
    algorithm_from_value(&doc)
}

pub(crate) fn algorithm_from_value(doc: &Value) -> Result<BilinearAlgorithm> {
    let obj = doc
        .as_object()
        .ok_or_else(|| Error::parse("document", "expected an object"))?;
    let name = match obj.get("name") {
        None | Some(Value::Null) => None,
        Some(Value::String(s)) if s.is_empty() => None,
        Some(Value::String(s)) => Some(s.clone()),
        Some(_) => return Err(Error::parse("name", "expected a string")),
    };
    let dim = |key: &str| -> Result<usize> {
        let v = obj.get(key).ok_or_else(|| Error::parse(key, "missing"))?;
        match v.as_u64() {
            Some(d) if d >= 1 => Ok(d as usize),
            _ => Err(Error::parse(key, "expected a positive integer")),
        }
    };
    let format = Format::new(dim("m")?, dim("n")?, dim("p")?)?;
    let list = obj
        .get("triples")
        .ok_or_else(|| Error::parse("triples", "missing"))?
        .as_array()
        .ok_or_else(|| Error::parse("triples", "expected an array"))?;
    if list.is_empty() {
        return Err(Error::parse("triples", "at least one triple is required"));
    }
    let [sa, sb, sc] = format.triple_shapes();
    let mut triples = Vec::with_capacity(list.len());
    for (l, item) in list.iter().enumerate() {
        let loc = format!("triples[{l}]");
        let t = item
            .as_object()
            .ok_or_else(|| Error::parse(loc.as_str(), "expected an object"))?;
        let mut factors = Vec::with_capacity(3);
        for (key, shape) in [("a", sa), ("b", sb), ("c", sc)] {
            let floc = format!("{loc}.{key}");
            let v = t
                .get(key)
                .ok_or_else(|| Error::parse(floc.as_str(), "missing"))?;
            let m = matrix_from_value(v, &floc)?;
            if m.shape() != shape {
                return Err(Error::parse(
                    floc,
                    format!(
                        "shape {}x{} does not match {}x{} required by format {format}",
                        m.rows(),
                        m.cols(),
                        shape.0,
                        shape.1
                    ),
                ));
            }
            if m.is_zero() {
                return Err(Error::parse(floc, "zero factor"));
            }
            factors.push(m);
        }
        let c = factors.pop().expect("three factors");
        let b = factors.pop().expect("three factors");
        let a = factors.pop().expect("three factors");
        triples.push(Triple::new(a, b, c)?);
    }
    BilinearAlgorithm::new(format, triples, name)
}

pub(crate) fn rational_from_value(v: &Value, loc: &str) -> Result<Rational> {
    match v {
        Value::String(s) => s
            .parse::<Rational>()
            .map_err(|e| Error::parse(loc, format!("bad rational {s:?}: {e}"))),
        Value::Number(n) => n.as_i64().map(Rational::from).ok_or_else(|| {
            Error::parse(
                loc,
                format!("non-integer number {n}; write fractions as strings"),
            )
        }),
        _ => Err(Error::parse(loc, "expected a rational string")),
    }
}

/// Reads a non-empty rectangular array of rows.
pub(crate) fn matrix_from_value(v: &Value, loc: &str) -> Result<Matrix> {
    let rows = v
        .as_array()
        .ok_or_else(|| Error::parse(loc, "expected an array of rows"))?;
    if rows.is_empty() {
        return Err(Error::parse(loc, "empty matrix"));
    }
    let mut out = Vec::with_capacity(rows.len());
    for (i, row) in rows.iter().enumerate() {
        let rloc = format!("{loc}[{i}]");
        let entries = row
            .as_array()
            .ok_or_else(|| Error::parse(rloc.as_str(), "expected an array"))?;
        let parsed = entries
            .iter()
            .enumerate()
            .map(|(j, e)| rational_from_value(e, &format!("{rloc}[{j}]")))
            .collect::<Result<Vec<_>>>()?;
        out.push(parsed);
    }
    Matrix::from_rows(out).map_err(|e| Error::parse(loc, e.to_string()))
}

pub(crate) fn matrix_to_json(m: &Matrix) -> String {
    let rows: Vec<String> = m
        .to_rows()
        .iter()
        .map(|r| {
            let cells: Vec<String> = r.iter().map(|x| format!("\"{x}\"")).collect();
            format!("[{}]", cells.join(", "))
        })
        .collect();
    format!("[{}]", rows.join(", "))
}

pub(crate) fn matrix_to_value(m: &Matrix) -> Value {
    Value::Array(
        m.to_rows()
            .iter()
            .map(|r| Value::Array(r.iter().map(|x| Value::String(x.to_string())).collect()))
            .collect(),
    )
}

/// The document as a JSON value (keys in writer order).
pub fn algorithm_to_value(alg: &BilinearAlgorithm) -> Value {
    serde_json::from_str(&serialize_algorithm(alg)).expect("writer emits valid JSON")
}

pub fn serialize_algorithm(alg: &BilinearAlgorithm) -> String {
    let Format { m, n, p } = alg.format();
    let name = Value::String(alg.name().unwrap_or("").to_string());
    let mut out = String::new();
    out.push_str("{\n");
    out.push_str(&format!("  \"name\": {name},\n"));
    out.push_str(&format!("  \"m\": {m},\n  \"n\": {n},\n  \"p\": {p},\n"));
    out.push_str("  \"triples\": [\n");
    let last = alg.rank() - 1;
    for (l, t) in alg.triples().iter().enumerate() {
        out.push_str(&format!(
            "    {{\"a\": {}, \"b\": {}, \"c\": {}}}{}\n",
            matrix_to_json(t.a()),
            matrix_to_json(t.b()),
            matrix_to_json(t.c()),
            if l == last { "" } else { "," }
        ));
    }
    out.push_str("  ]\n}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{hopcroft, laderman, naive, strassen};

    #[test]
    fn round_trips() {
        for alg in [strassen(), laderman(), hopcroft(), naive(1, 2, 3).unwrap()] {
            let text = serialize_algorithm(&alg);
            assert_eq!(parse_algorithm(&text).unwrap(), alg);
            assert_eq!(serialize_algorithm(&parse_algorithm(&text).unwrap()), text);
        }
        let unnamed =
            BilinearAlgorithm::new(strassen().format(), strassen().triples().to_vec(), None)
                .unwrap();
        assert_eq!(
            parse_algorithm(&serialize_algorithm(&unnamed)).unwrap(),
            unnamed
        );
    }

    #[test]
    fn key_order_is_stable() {
        let text = serialize_algorithm(&strassen());
        let pos = |k: &str| text.find(&format!("\"{k}\"")).unwrap();
        assert!(
            pos("name") < pos("m")
                && pos("m") < pos("n")
                && pos("n") < pos("p")
                && pos("p") < pos("triples")
        );
        assert!(text.contains("{\"a\": [[\"1\", \"0\"], [\"0\", \"0\"]], \"b\""));
    }

    fn doc(a: &str) -> String {
        format!(
            r#"{{"name": "x", "m": 2, "n": 2, "p": 2, "triples": [
                {{"a": {a}, "b": [["1","0"],["0","0"]], "c": [["1","0"],["0","0"]]}}]}}"#
        )
    }

    #[test]
    fn reports_locations() {
        let err = parse_algorithm(&doc(r#"[["1","0","0"],["0","0","0"]]"#)).unwrap_err();
        match err {
            Error::Parse { location, message } => {
                assert_eq!(location, "triples[0].a");
                assert!(message.contains("shape"), "{message}");
            }
            other => panic!("{other:?}"),
        }
        let err = parse_algorithm(&doc(r#"[["1","0"],["1/0","0"]]"#)).unwrap_err();
        assert!(
            matches!(err, Error::Parse { ref location, .. } if location == "triples[0].a[1][0]"),
            "{err:?}"
        );
        let err = parse_algorithm(&doc(r#"[["0","0"],["0","0"]]"#)).unwrap_err();
        assert!(matches!(err, Error::Parse { ref message, .. } if message.contains("zero")));
        let err = parse_algorithm(&doc(r#"[["1"],["0","0"]]"#)).unwrap_err();
        assert!(matches!(err, Error::Parse { .. }));
        assert!(parse_algorithm("{").is_err());
        assert!(parse_algorithm(r#"{"m": 2, "n": 2, "p": 0, "triples": []}"#).is_err());
        let ok = parse_algorithm(&doc(r#"[[1, 0], [0, "-1/2"]]"#)).unwrap();
        assert_eq!(
            ok.triples()[0].a().get(1, 1),
            &Rational::new(-1, 2).unwrap()
        );
    }
}
