//! Canonical JSON: sorted keys, two-space indentation, trailing newline.

use serde::de::DeserializeOwned;
use serde::Serialize;
use thiserror::Error;

use crate::chart::Chart;
use crate::hurwitz::MonodromyData;

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("malformed JSON at line {line}, column {column}: {message}")]
    Json {
        line: usize,
        column: usize,
        message: String,
    },
}

impl From<serde_json::Error> for FormatError {
    fn from(e: serde_json::Error) -> Self {
        Self::Json {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        }
    }
}

/// Serializes through a `Value`, whose maps keep keys sorted.
pub fn to_canonical_json<T: Serialize>(value: &T) -> String {
    let v = serde_json::to_value(value).expect("domain types serialize to JSON");
    let mut s = serde_json::to_string_pretty(&v).expect("values serialize");
    s.push('\n');
    s
}

fn parse<T: DeserializeOwned>(text: &str) -> Result<T, FormatError> {
    Ok(serde_json::from_str(text)?)
}

pub fn parse_monodromy(text: &str) -> Result<MonodromyData, FormatError> {
    parse(text)
}

pub fn parse_chart(text: &str) -> Result<Chart, FormatError> {
    parse(text)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alphabet::Genus;
    use crate::chart::r4_chart;
    use crate::corpus::Example;

    #[test]
    fn monodromy_round_trip_is_byte_identical() {
        let m = Example::U.build(Genus::new(3).unwrap()).unwrap();
        let text = to_canonical_json(&m);
        let again = to_canonical_json(&parse_monodromy(&text).unwrap());
        assert_eq!(text, again);
        assert!(text.find("\"base_genus\"").unwrap() < text.find("\"factors\"").unwrap());
    }

    #[test]
    fn chart_round_trip() {
        let c = r4_chart(Genus::new(2).unwrap());
        let text = to_canonical_json(&c);
        assert_eq!(parse_chart(&text).unwrap(), c);
        assert_eq!(to_canonical_json(&parse_chart(&text).unwrap()), text);
    }

    #[test]
    fn bad_inputs() {
        let bad_sign = r#"{"fiber_genus":2,"base_genus":0,"handle_words":[],
            "factors":[{"conjugator":[],"core":{"kind":"twist","index":1,"sign":2}}]}"#;
        assert!(parse_monodromy(bad_sign).is_err());
        let bad_genus = r#"{"fiber_genus":1,"base_genus":0,"handle_words":[],"factors":[]}"#;
        assert!(parse_monodromy(bad_genus).is_err());
        let FormatError::Json { line, .. } = parse_monodromy("{\n  oops").unwrap_err();
        assert_eq!(line, 2);
    }
}
