//! JSON interchange and DOT export.
//!
//! ```json
//! { "name": "C4", "n": 4, "letters": ["a", "b"],
//!   "delta": { "a": [1, 1, 2, 3], "b": [1, 2, 3, 0] } }
//! ```
//!
//! `name` is optional. The `delta` object is written in letter order.

use std::collections::HashMap;
use std::fmt::Write as _;

use serde::ser::{SerializeMap, SerializeStruct};
use serde::{Deserialize, Serialize, Serializer};
use serde_json::Value;

use super::Dfa;
use crate::error::{Error, Result};

/// Raw, unvalidated shape of the JSON format.
#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AutomatonJson {
    #[serde(default)]
    pub name: Option<String>,
    pub n: i64,
    pub letters: Vec<String>,
    pub delta: HashMap<String, Vec<i64>>,
}

impl AutomatonJson {
    /// Validates the raw document, naming the offending path on failure.
    pub fn validate(self) -> Result<Dfa> {
        if self.n < 1 {
            return Err(Error::parse("n", format!("must be at least 1, got {}", self.n)));
        }
        let n = usize::try_from(self.n).map_err(|_| Error::parse("n", "too large"))?;
        if self.letters.is_empty() {
            return Err(Error::parse("letters", "must list at least one letter"));
        }
        for (i, l) in self.letters.iter().enumerate() {
            if l.is_empty() {
                return Err(Error::parse(format!("letters[{i}]"), "empty letter name"));
            }
            if self.letters[..i].contains(l) {
                return Err(Error::parse(
                    format!("letters[{i}]"),
                    format!("duplicate letter {l:?}"),
                ));
            }
        }
        if let Some(extra) = self.delta.keys().find(|k| !self.letters.contains(k)) {
            return Err(Error::parse(
                format!("delta.{extra}"),
                "letter not listed in \"letters\"",
            ));
        }
        let mut rows = Vec::with_capacity(self.letters.len());
        for l in &self.letters {
            let row = self
                .delta
                .get(l)
                .ok_or_else(|| Error::parse(format!("delta.{l}"), "missing transition row"))?;
            if row.len() != n {
                return Err(Error::parse(
                    format!("delta.{l}"),
                    format!("expected {n} entries, found {}", row.len()),
                ));
            }
            let mut out = Vec::with_capacity(n);
            for (q, &t) in row.iter().enumerate() {
                if t < 0 || t >= self.n {
                    return Err(Error::parse(
                        format!("delta.{l}[{q}]"),
                        format!("{t} is not a state in [0, {n})"),
                    ));
                }
                out.push(t as usize);
            }
            rows.push(out);
        }
        let d = Dfa::new(n, self.letters, rows)?;
        Ok(match self.name {
            Some(name) => d.with_name(name),
            None => d,
        })
    }
}

/// Parses and validates an automaton document.
pub fn from_json_str(text: &str) -> Result<Dfa> {
    let raw: AutomatonJson = serde_json::from_str(text).map_err(|e| {
        Error::parse(
            format!("line {} column {}", e.line(), e.column()),
            e.to_string(),
        )
    })?;
    raw.validate()
}

/// Canonical JSON text (pretty-printed, letter-ordered rows).
pub fn to_json_string(d: &Dfa) -> String {
    serde_json::to_string_pretty(d).expect("automaton serialization cannot fail")
}

pub fn to_json_value(d: &Dfa) -> Value {
    serde_json::to_value(d).expect("automaton serialization cannot fail")
}

struct DeltaRows<'a>(&'a Dfa);

impl Serialize for DeltaRows<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let d = self.0;
        let mut map = s.serialize_map(Some(d.k()))?;
        for a in 0..d.k() {
            map.serialize_entry(d.letter_name(a), &d.row(a).collect::<Vec<_>>())?;
        }
        map.end()
    }
}

impl Serialize for Dfa {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let fields = if self.name().is_some() { 4 } else { 3 };
        let mut st = s.serialize_struct("Dfa", fields)?;
        if let Some(name) = self.name() {
            st.serialize_field("name", name)?;
        }
        st.serialize_field("n", &self.n())?;
        st.serialize_field("letters", self.letters())?;
        st.serialize_field("delta", &DeltaRows(self))?;
        st.end()
    }
}

impl<'de> Deserialize<'de> for Dfa {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        AutomatonJson::deserialize(d)?
            .validate()
            .map_err(serde::de::Error::custom)
    }
}

impl Dfa {
    /// Graphviz rendering; parallel edges share one arrow with a
    /// comma-joined label.
    pub fn to_dot(&self) -> String {
        let mut out = String::new();
        let name = self.name().unwrap_or("A");
        let _ = writeln!(out, "digraph {:?} {{", name);
        let _ = writeln!(out, "  node [shape=circle];");
        for q in 0..self.n() {
            let _ = writeln!(out, "  {q};");
        }
        for q in 0..self.n() {
            let mut targets: Vec<(usize, Vec<&str>)> = Vec::new();
            for a in 0..self.k() {
                let t = self.next(q, a);
                match targets.iter_mut().find(|(p, _)| *p == t) {
                    Some((_, labels)) => labels.push(self.letter_name(a)),
                    None => targets.push((t, vec![self.letter_name(a)])),
                }
            }
            for (t, labels) in targets {
                let _ = writeln!(out, "  {q} -> {t} [label={:?}];", labels.join(","));
            }
        }
        out.push_str("}\n");
        out
    }
}

#[cfg(test)]
mod tests {
    use super::super::tests::cerny;
    use super::*;

    #[test]
    fn canonical_text() {
        let c3 = cerny(3);
        let js = serde_json::to_string(&c3).unwrap();
        assert_eq!(
            js,
            r#"{"n":3,"letters":["a","b"],"delta":{"a":[1,1,2],"b":[1,2,0]}}"#
        );
        let named = serde_json::to_string(&cerny(2).with_name("C2")).unwrap();
        assert!(named.starts_with(r#"{"name":"C2","n":2"#));
    }

    #[test]
    fn round_trip_keeps_letter_order() {
        let d = Dfa::new(2, vec!["z", "a"], vec![vec![1, 0], vec![0, 0]])
            .unwrap()
            .with_name("t");
        let back = from_json_str(&to_json_string(&d)).unwrap();
        assert_eq!(back, d);
        assert_eq!(back.letters(), &["z".to_string(), "a".to_string()]);
    }

    #[test]
    fn parse_errors_name_the_path() {
        let err = |s: &str| match from_json_str(s) {
            Err(Error::Parse { path, .. }) => path,
            other => panic!("expected parse error, got {other:?}"),
        };
        assert_eq!(
            err(r#"{"n":2,"letters":["a"],"delta":{"a":[0,2]}}"#),
            "delta.a[1]"
        );
        assert_eq!(err(r#"{"n":2,"letters":["a","b"],"delta":{"a":[0,1]}}"#), "delta.b");
        assert_eq!(
            err(r#"{"n":2,"letters":["a"],"delta":{"a":[0,1],"c":[0,0]}}"#),
            "delta.c"
        );
        assert_eq!(err(r#"{"n":0,"letters":["a"],"delta":{"a":[]}}"#), "n");
        assert_eq!(err(r#"{"n":2,"letters":["a"],"delta":{"a":[0]}}"#), "delta.a");
        assert!(err(r#"{"n":2,"letters":["a"]"#).starts_with("line"));
    }

    #[test]
    fn dot_merges_parallel_edges() {
        let dot = cerny(3).to_dot();
        assert!(dot.contains("0 -> 1 [label=\"a,b\"];"));
        assert!(dot.contains("1 -> 1 [label=\"a\"];"));
        assert_eq!(dot.matches("->").count(), 5);
    }
}
