// SPDX-License-Identifier: MIT
//! Text formats.
//!
//! Graph files:
//!
//! ```text
//! nodes a b c d
//! # comment
//! a -> d
//! b -- c
//! ```
//!
//! Triplets are written `X | Y | Z` with comma-separated labels, `Z` possibly
//! empty. Explicit model files start with `model <labels>` and list one
//! independent triplet per line.

use std::fmt::{self, Write as _};

use crate::error::{Error, Result};
use crate::graph::{EdgeKind, HybridGraph};
use crate::nodeset::NodeSet;
use crate::triplet::Triplet;

fn parse_error(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

/// Non-blank, comment-stripped lines as `(line number, text, tokens with columns)`.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let body = raw.split('#').next().unwrap_or("");
        (!body.trim().is_empty()).then_some((i + 1, body))
    })
}

/// Whitespace-separated tokens with 1-based columns.
fn tokens(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, ch) in line.char_indices() {
        if ch.is_whitespace() {
            if let Some(s) = start.take() {
                out.push((s + 1, &line[s..i]));
            }
        } else if start.is_none() {
            start = Some(i);
        }
    }
    if let Some(s) = start {
        out.push((s + 1, &line[s..]));
    }
    out
}

fn header_labels(
    lines: &mut dyn Iterator<Item = (usize, &str)>,
    keyword: &str,
) -> Result<(usize, Vec<String>)> {
    let (lineno, body) = lines
        .next()
        .ok_or_else(|| parse_error(1, 1, format!("missing `{keyword}` line")))?;
    let toks = tokens(body);
    let (col, first) = toks[0];
    if first != keyword {
        return Err(parse_error(lineno, col, format!("expected `{keyword}`")));
    }
    let mut labels = Vec::with_capacity(toks.len() - 1);
    for &(col, tok) in &toks[1..] {
        if !crate::graph::is_valid_label(tok) {
            return Err(parse_error(lineno, col, format!("invalid label {tok:?}")));
        }
        if labels.iter().any(|l| l == tok) {
            return Err(parse_error(lineno, col, format!("duplicate node {tok:?}")));
        }
        labels.push(tok.to_string());
    }
    if labels.is_empty() {
        return Err(parse_error(lineno, col, "node list is empty"));
    }
    Ok((lineno, labels))
}

/// Parses the graph text format.
pub fn parse_graph(text: &str) -> Result<HybridGraph> {
    let mut lines = content_lines(text);
    let (lineno, labels) = header_labels(&mut lines, "nodes")?;
    let mut graph =
        HybridGraph::edgeless(labels).map_err(|e| parse_error(lineno, 1, e.to_string()))?;
    for (lineno, body) in lines {
        let toks = tokens(body);
        if toks.len() != 3 {
            let col = toks.get(3).map_or(toks[0].0, |t| t.0);
            return Err(parse_error(
                lineno,
                col,
                "expected `<u> -> <v>` or `<u> -- <v>`",
            ));
        }
        let kind = match toks[1].1 {
            "->" => EdgeKind::ArrowForward,
            "--" => EdgeKind::Line,
            other => {
                return Err(parse_error(
                    lineno,
                    toks[1].0,
                    format!("unknown edge operator {other:?}"),
                ))
            }
        };
        let resolve = |(col, tok): (usize, &str)| {
            graph
                .index_of(tok)
                .ok_or_else(|| parse_error(lineno, col, format!("unknown node {tok:?}")))
        };
        let u = resolve(toks[0])?;
        let v = resolve(toks[2])?;
        if u == v {
            return Err(parse_error(lineno, toks[0].0, "self-loop"));
        }
        if graph.edge(u, v).is_some() {
            return Err(parse_error(lineno, toks[0].0, "duplicate edge"));
        }
        graph = graph
            .with_edge(u, v, kind)
            .map_err(|e| parse_error(lineno, toks[0].0, e.to_string()))?;
    }
    Ok(graph)
}

/// Canonical serialization: nodes in label order, then lines, then arrows.
pub fn write_graph(g: &HybridGraph) -> String {
    let mut out = String::from("nodes");
    for l in g.labels() {
        out.push(' ');
        out.push_str(l);
    }
    out.push('\n');
    for (u, v) in g.lines() {
        let _ = writeln!(out, "{} -- {}", g.label(u), g.label(v));
    }
    let mut arrows: Vec<(usize, usize)> = g.arrows().collect();
    arrows.sort_unstable();
    for (t, h) in arrows {
        let _ = writeln!(out, "{} -> {}", g.label(t), g.label(h));
    }
    out
}

impl fmt::Display for HybridGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&write_graph(self))
    }
}

impl std::str::FromStr for HybridGraph {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse_graph(s)
    }
}

/// Graph blocks separated by `---` lines.
pub fn write_graph_list(graphs: &[HybridGraph]) -> String {
    graphs
        .iter()
        .map(write_graph)
        .collect::<Vec<_>>()
        .join("---\n")
}

/// DOT rendering: arrows directed, lines drawn without arrowheads.
pub fn write_dot(g: &HybridGraph) -> String {
    let mut out = String::from("digraph G {\n");
    for l in g.labels() {
        let _ = writeln!(out, "  \"{l}\";");
    }
    for (u, v) in g.lines() {
        let _ = writeln!(
            out,
            "  \"{}\" -> \"{}\" [dir=none];",
            g.label(u),
            g.label(v)
        );
    }
    let mut arrows: Vec<(usize, usize)> = g.arrows().collect();
    arrows.sort_unstable();
    for (t, h) in arrows {
        let _ = writeln!(out, "  \"{}\" -> \"{}\";", g.label(t), g.label(h));
    }
    out.push_str("}\n");
    out
}

/// Parses `X | Y | Z` against a sorted label list.
pub fn parse_triplet<S: AsRef<str>>(text: &str, labels: &[S]) -> Result<Triplet> {
    parse_triplet_at(text, labels, 1)
}

fn parse_triplet_at<S: AsRef<str>>(text: &str, labels: &[S], lineno: usize) -> Result<Triplet> {
    let parts: Vec<&str> = text.split('|').collect();
    if parts.len() != 3 {
        return Err(parse_error(lineno, 1, "expected `X | Y | Z`"));
    }
    let mut sets = [NodeSet::EMPTY; 3];
    let mut offset = 0;
    for (k, part) in parts.iter().enumerate() {
        let mut col = offset;
        for item in part.split(',') {
            let label = item.trim();
            let here = col + item.len() - item.trim_start().len() + 1;
            if label.is_empty() {
                if part.trim().is_empty() {
                    break;
                }
                return Err(parse_error(lineno, here, "empty label"));
            }
            let idx = labels
                .binary_search_by(|l| l.as_ref().cmp(label))
                .map_err(|_| parse_error(lineno, here, format!("unknown node {label:?}")))?;
            sets[k].insert(idx);
            col += item.len() + 1;
        }
        offset += part.len() + 1;
    }
    Triplet::new(sets[0], sets[1], sets[2]).map_err(|e| parse_error(lineno, 1, e.to_string()))
}

/// Contents of an explicit model file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModelFile {
    pub labels: Vec<String>,
    pub independent: Vec<Triplet>,
}

pub fn parse_model(text: &str) -> Result<ModelFile> {
    let mut lines = content_lines(text);
    let (lineno, mut labels) = header_labels(&mut lines, "model")?;
    if labels.len() > crate::MAX_NODES {
        return Err(parse_error(
            lineno,
            1,
            Error::TooManyNodes(labels.len()).to_string(),
        ));
    }
    labels.sort();
    let mut independent = Vec::new();
    for (lineno, body) in lines {
        independent.push(parse_triplet_at(body.trim(), &labels, lineno)?);
    }
    Ok(ModelFile {
        labels,
        independent,
    })
}

pub fn write_model(labels: &[String], independent: &[Triplet]) -> String {
    let mut out = format!("model {}\n", labels.join(" "));
    for t in independent {
        out.push_str(&t.display(labels));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const GE: &str =
        "nodes a b c d e f g\nc -- d\nd -- e\na -> c\nb -> e\nb -> g\nd -> f\nd -> g\n";

    #[test]
    fn canonical_text_round_trips() {
        let g = parse_graph(GE).unwrap();
        assert_eq!(write_graph(&g), GE);
        assert_eq!(g.edge_count(), 7);
    }

    #[test]
    fn comments_blank_lines_and_order() {
        let text = "# fixture\n\nnodes d c b a   # four\nb -> a\n\n  c -- b\n";
        let g = parse_graph(text).unwrap();
        assert_eq!(write_graph(&g), "nodes a b c d\nb -- c\nb -> a\n");
    }

    #[test]
    fn parse_errors_carry_positions() {
        let err = parse_graph("nodes a b\na -> z\n").unwrap_err();
        assert_eq!(
            err,
            Error::Parse {
                line: 2,
                column: 6,
                message: "unknown node \"z\"".into()
            }
        );
        assert!(matches!(
            parse_graph("edges a b\n"),
            Err(Error::Parse {
                line: 1,
                column: 1,
                ..
            })
        ));
        assert!(matches!(
            parse_graph("nodes a b\na => b\n"),
            Err(Error::Parse {
                line: 2,
                column: 3,
                ..
            })
        ));
        assert!(matches!(
            parse_graph("nodes a b\na -> b\nb -- a\n"),
            Err(Error::Parse { line: 3, .. })
        ));
        assert!(matches!(parse_graph("nodes A a\nA -- a\n"), Ok(g) if g.n() == 2));
        assert!(parse_graph("nodes a a\n").is_err());
        assert!(parse_graph("").is_err());
        assert!(parse_graph("nodes\n").is_err());
        assert!(parse_graph("nodes a\na -- a\n").is_err());
    }

    #[test]
    fn triplets() {
        let labels = ["a", "b", "c", "d", "e", "f", "g"];
        let t = parse_triplet("a | f | c,e,g", &labels).unwrap();
        assert_eq!(t.display(&labels), "a | f | c,e,g");
        let t = parse_triplet("a,b|c|", &labels).unwrap();
        assert_eq!(t.display(&labels), "a,b | c |");
        assert!(parse_triplet("a | | c", &labels).is_err());
        assert!(parse_triplet("a | b", &labels).is_err());
        assert!(parse_triplet("a | a | c", &labels).is_err());
        assert!(matches!(
            parse_triplet("a | b | q", &labels),
            Err(Error::Parse { column: 9, .. })
        ));
    }

    #[test]
    fn model_files() {
        let text = "model c a b\na | b |\nb | a |\n";
        let m = parse_model(text).unwrap();
        assert_eq!(m.labels, vec!["a", "b", "c"]);
        assert_eq!(m.independent.len(), 2);
        assert_eq!(
            write_model(&m.labels, &m.independent),
            "model a b c\na | b |\nb | a |\n"
        );
        assert!(matches!(
            parse_model("model a b\na | c |\n"),
            Err(Error::Parse { line: 2, .. })
        ));
    }

    #[test]
    fn dot_output() {
        let g = parse_graph("nodes a b c\na -- b\nb -> c\n").unwrap();
        let dot = write_dot(&g);
        assert!(dot.contains("\"a\" -> \"b\" [dir=none];"));
        assert!(dot.contains("\"b\" -> \"c\";"));
        assert!(dot.starts_with("digraph G {"));
    }

    #[test]
    fn graph_lists() {
        let g = parse_graph("nodes a b\na -- b\n").unwrap();
        let h = parse_graph("nodes a b\na -> b\n").unwrap();
        assert_eq!(
            write_graph_list(&[g, h]),
            "nodes a b\na -- b\n---\nnodes a b\na -> b\n"
        );
    }
}
