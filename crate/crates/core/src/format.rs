//! The `.clt` text format and its JSON mirror.
//!
//! ```text
//! # comments run to the end of a line
//! 5 3          # header: n d
//! 1 2 4        # one circuit per line, vertices in 1..=n, any order
//! 1 2 5
//! ```
//!
//! Blank lines are ignored and duplicate circuits collapse. [`write_clutter`]
//! emits the canonical form: header, then circuits in lexicographic order with
//! ascending vertices, no comments. Parsing a canonical file and writing it back
//! reproduces it byte for byte.
//!
//! The JSON mirror is `{"n": 5, "d": 3, "circuits": [[1, 2, 4], ...]}`;
//! [`parse_any`] accepts either form.

use crate::clutter::Clutter;
use crate::vertex::VertexSet;

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("line {line}: {message}")]
pub struct ParseError {
    /// 1-based; 0 when the problem is not tied to a line.
    pub line: usize,
    pub message: String,
}

fn err(line: usize, message: impl Into<String>) -> ParseError {
    ParseError { line, message: message.into() }
}

fn numbers(line: usize, text: &str) -> Result<Vec<usize>, ParseError> {
    text.split_whitespace()
        .map(|tok| tok.parse::<usize>().map_err(|_| err(line, format!("expected a vertex number, found {tok:?}"))))
        .collect()
}

pub fn parse_clutter(text: &str) -> Result<Clutter, ParseError> {
    let mut header: Option<(usize, usize)> = None;
    let mut circuits = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let body = raw.split('#').next().unwrap_or("").trim();
        if body.is_empty() {
            continue;
        }
        let nums = numbers(line, body)?;
        let Some((n, d)) = header else {
            let [n, d] = nums[..] else { return Err(err(line, "header must be `n d`")) };
            header = Some((n, d));
            continue;
        };
        if nums.len() != d {
            return Err(err(line, format!("circuit has {} vertices, expected {d}", nums.len())));
        }
        if let Some(&v) = nums.iter().find(|&&v| v == 0 || v > n) {
            return Err(err(line, format!("vertex {v} outside 1..={n}")));
        }
        let set: VertexSet = nums.iter().copied().collect();
        if set.len() != d {
            return Err(err(line, "repeated vertex in circuit"));
        }
        circuits.push(set);
    }
    let (n, d) = header.ok_or_else(|| err(0, "missing `n d` header"))?;
    Clutter::new(n, d, circuits).map_err(|e| err(0, e.to_string()))
}

/// Canonical text form.
pub fn write_clutter(c: &Clutter) -> String {
    c.canonical_text()
}

pub fn parse_clutter_json(text: &str) -> Result<Clutter, ParseError> {
    serde_json::from_str(text).map_err(|e| err(e.line(), e.to_string()))
}

pub fn write_clutter_json(c: &Clutter) -> String {
    serde_json::to_string(c).expect("clutters serialize")
}

/// JSON when the first non-blank character is `{`, text otherwise.
pub fn parse_any(text: &str) -> Result<Clutter, ParseError> {
    if text.trim_start().starts_with('{') {
        parse_clutter_json(text)
    } else {
        parse_clutter(text)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::hexahedron;
    use proptest::prelude::*;

    #[test]
    fn parses_comments_and_any_vertex_order() {
        let text = "# bipyramid\n\n5 3 # n d\n4 2 1\n1 2 5\n1 3 4\n1 3 5\n2 3 4\n5 3 2  # last\n";
        let c = parse_clutter(text).unwrap();
        assert_eq!(c, hexahedron());
        assert_eq!(write_clutter(&c), "5 3\n1 2 4\n1 2 5\n1 3 4\n1 3 5\n2 3 4\n2 3 5\n");
    }

    #[test]
    fn reports_line_numbers() {
        assert_eq!(parse_clutter("5 3\n1 2\n").unwrap_err().line, 2);
        assert_eq!(parse_clutter("5 3\n1 2 9\n").unwrap_err().line, 2);
        assert_eq!(parse_clutter("5 3\n1 1 2\n").unwrap_err().line, 2);
        assert_eq!(parse_clutter("5 3\n1 x 2\n").unwrap_err().line, 2);
        assert_eq!(parse_clutter("5\n").unwrap_err().line, 1);
        assert_eq!(parse_clutter("# nothing\n").unwrap_err().line, 0);
        assert!(parse_clutter("3 4\n").is_err());
    }

    #[test]
    fn json_mirror() {
        let t = hexahedron();
        let json = write_clutter_json(&t);
        assert_eq!(json, r#"{"n":5,"d":3,"circuits":[[1,2,4],[1,2,5],[1,3,4],[1,3,5],[2,3,4],[2,3,5]]}"#);
        assert_eq!(parse_any(&json).unwrap(), t);
        assert_eq!(parse_any(&write_clutter(&t)).unwrap(), t);
        assert!(parse_any(r#"{"n":5,"d":3,"circuits":[[1,2]]}"#).is_err());
    }

    proptest! {
        #[test]
        fn text_round_trips(c in crate::clutter::tests::arb_clutter()) {
            let text = write_clutter(&c);
            let back = parse_clutter(&text).unwrap();
            prop_assert_eq!(write_clutter(&back), text);
            prop_assert_eq!(back, c);
        }
    }
}
