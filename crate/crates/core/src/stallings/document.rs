//! Text form of a Stallings graph:
//!
//! ```text
//! rank=2, size=4, base=1, edges = [(a,1,2), (a,2,4), (a,4,3), (b,2,3), (b,3,4), (b,4,1)]
//! ```
//!
//! Vertices are 1-based and edges are sorted by `(letter, source)`.

use std::fmt;
use std::str::FromStr;

use super::{StallingsGraph, BASE};
use crate::error::Error;
use crate::words::{Alphabet, Letter};

impl fmt::Display for StallingsGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "rank={}, size={}, base={}, edges = [",
            self.alphabet.rank(),
            self.size(),
            BASE + 1
        )?;
        for (i, (x, p, q)) in self.edges().into_iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "({x},{},{})", p + 1, q + 1)?;
        }
        f.write_str("]")
    }
}

fn malformed(msg: impl Into<String>) -> Error {
    Error::MalformedDocument(msg.into())
}

fn take_field<'a>(text: &'a str, name: &str) -> Result<(&'a str, &'a str), Error> {
    let rest = text
        .strip_prefix(name)
        .and_then(|r| r.strip_prefix('='))
        .ok_or_else(|| malformed(format!("expected field `{name}`")))?;
    match rest.find(',') {
        Some(i) => Ok((&rest[..i], &rest[i + 1..])),
        None => Ok((rest, "")),
    }
}

fn parse_number(value: &str, field: &str) -> Result<usize, Error> {
    value
        .parse()
        .map_err(|_| malformed(format!("field `{field}` is not a number: {value:?}")))
}

impl FromStr for StallingsGraph {
    type Err = Error;

    /// Parses and validates a graph document. Whitespace is insignificant.
    fn from_str(text: &str) -> Result<Self, Error> {
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        let (rank, rest) = take_field(&compact, "rank")?;
        let alphabet = Alphabet::new(parse_number(rank, "rank")?)?;
        let (size, rest) = take_field(rest, "size")?;
        let size = parse_number(size, "size")?;
        if size == 0 {
            return Err(Error::InvalidGraph(
                "a Stallings graph has at least one vertex".into(),
            ));
        }
        let (base, rest) = take_field(rest, "base")?;
        if parse_number(base, "base")? != BASE + 1 {
            return Err(Error::InvalidGraph("the base vertex must be 1".into()));
        }
        let list = rest
            .strip_prefix("edges=[")
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(|| malformed("expected `edges = [...]`"))?;
        let mut edges = Vec::new();
        if !list.is_empty() {
            let inner = list
                .strip_prefix('(')
                .and_then(|r| r.strip_suffix(')'))
                .ok_or_else(|| malformed("edges must be parenthesized triples"))?;
            for triple in inner.split("),(") {
                let parts: Vec<&str> = triple.split(',').collect();
                let [label, source, target] = parts[..] else {
                    return Err(malformed(format!("edge is not a triple: ({triple})")));
                };
                let mut chars = label.chars();
                let (Some(c), None) = (chars.next(), chars.next()) else {
                    return Err(malformed(format!("edge label {label:?} is not one letter")));
                };
                let x = Letter::from_char(c, alphabet)
                    .filter(|x| x.is_positive())
                    .ok_or_else(|| {
                        Error::InvalidGraph(format!(
                            "edge label {c} is not a generator of rank {}",
                            alphabet.rank()
                        ))
                    })?;
                let source = parse_number(source, "edge source")?;
                let target = parse_number(target, "edge target")?;
                if !(1..=size).contains(&source) || !(1..=size).contains(&target) {
                    return Err(Error::InvalidGraph(format!(
                        "edge ({c},{source},{target}) leaves the vertex range 1..={size}"
                    )));
                }
                edges.push((x, source - 1, target - 1));
            }
        }
        StallingsGraph::from_edges(alphabet, size, edges)
    }
}
