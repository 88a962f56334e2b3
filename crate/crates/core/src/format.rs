//! Plain-text graph and numbering files.
//!
//! Graph: first line `m e`, then `e` lines `u v` with 1-based vertex ids.
//! Numbering: a single line `linear: v1 v2 ...` or `cyclic: v1 v2 ...`
//! listing 1-based vertex ids in position order. Blank lines and lines
//! starting with `#` are ignored.

use crate::error::{Error, Result};
use crate::hypercube::{Graph, Host, Numbering};

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_ids(line: usize, fields: &str) -> Result<Vec<usize>> {
    fields
        .split_whitespace()
        .map(|tok| match tok.parse::<usize>() {
            Ok(0) => Err(Error::Parse { line, msg: "vertex ids are 1-based".into() }),
            Ok(v) => Ok(v - 1),
            Err(_) => Err(Error::Parse { line, msg: format!("not an integer: {tok:?}") }),
        })
        .collect()
}

pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut lines = content_lines(text);
    let (hline, header) = lines
        .next()
        .ok_or(Error::Parse { line: 1, msg: "missing `m e` header".into() })?;
    let nums: Vec<usize> = header
        .split_whitespace()
        .map(|t| t.parse())
        .collect::<std::result::Result<_, _>>()
        .map_err(|_| Error::Parse { line: hline, msg: "header must be `m e`".into() })?;
    let [m, e] = nums[..] else {
        return Err(Error::Parse { line: hline, msg: "header must be `m e`".into() });
    };
    let mut edges = Vec::with_capacity(e);
    for (line, body) in lines.by_ref().take(e) {
        // 1-based ids: a literal 0 is reported by parse_ids
        let ids = parse_ids(line, body)?;
        let [u, v] = ids[..] else {
            return Err(Error::Parse { line, msg: "edge line must be `u v`".into() });
        };
        edges.push((u, v));
    }
    if edges.len() != e {
        return Err(Error::Parse {
            line: hline,
            msg: format!("header announces {e} edges, found {}", edges.len()),
        });
    }
    if let Some((line, _)) = lines.next() {
        return Err(Error::Parse { line, msg: "trailing content after edge list".into() });
    }
    Graph::new(m, edges)
}

pub fn render_graph(graph: &Graph) -> String {
    let mut out = format!("{} {}\n", graph.vertex_count(), graph.edge_count());
    for &(u, v) in graph.edges() {
        out.push_str(&format!("{} {}\n", u + 1, v + 1));
    }
    out
}

pub fn parse_numbering(text: &str) -> Result<Numbering> {
    let mut lines = content_lines(text);
    let (line, body) = lines
        .next()
        .ok_or(Error::Parse { line: 1, msg: "empty numbering file".into() })?;
    let (tag, rest) = body
        .split_once(':')
        .ok_or(Error::Parse { line, msg: "expected `linear:` or `cyclic:` prefix".into() })?;
    let host = match tag.trim() {
        "linear" => Host::Linear,
        "cyclic" => Host::Cyclic,
        other => return Err(Error::Parse { line, msg: format!("unknown host {other:?}") }),
    };
    let placement = parse_ids(line, rest)?;
    if let Some((line, _)) = lines.next() {
        return Err(Error::Parse { line, msg: "numbering must be a single line".into() });
    }
    Numbering::new(host, placement)
}

pub fn render_numbering(numbering: &Numbering) -> String {
    let ids: Vec<String> = numbering.placement().iter().map(|v| (v + 1).to_string()).collect();
    format!("{}: {}", numbering.host(), ids.join(" "))
}
