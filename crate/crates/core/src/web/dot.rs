//! Graphviz export, and a reader for exactly the dialect written here.

use std::collections::BTreeMap;
use std::fmt::Write;

use super::graph::{Edge, Vertex, Web, WebError};
use crate::strings::{Color, State};

pub fn to_dot(w: &Web) -> String {
    let mut out = String::from("graph web {\n");
    let boundary: Vec<String> = w.boundary.iter().map(|v| v.to_string()).collect();
    writeln!(out, "  leftmost={};", w.leftmost).unwrap();
    writeln!(out, "  boundary=\"{}\";", boundary.join(" ")).unwrap();
    for (id, v) in w.vertices.iter().enumerate() {
        let rot: Vec<String> = w.rotation[id].iter().map(|e| e.to_string()).collect();
        let (fill, font) = match v.color {
            Color::B => ("black", "white"),
            Color::W => ("white", "black"),
        };
        writeln!(
            out,
            "  n{id} [shape={}, style=filled, fillcolor={fill}, fontcolor={font}, web_color={}, web_boundary={}, rotation=\"{}\"];",
            if v.boundary { "box" } else { "circle" },
            v.color,
            v.boundary,
            rot.join(" ")
        )
        .unwrap();
    }
    for (id, e) in w.edges.iter().enumerate() {
        writeln!(
            out,
            "  n{} -- n{} [label=\"{}\", edge_id={id}];",
            e.a,
            e.b,
            e.label.value()
        )
        .unwrap();
    }
    out.push_str("}\n");
    out
}

fn parse_attrs(text: &str) -> BTreeMap<String, String> {
    let mut out = BTreeMap::new();
    let mut chars = text.chars().peekable();
    loop {
        while chars.peek().is_some_and(|c| c.is_whitespace() || *c == ',') {
            chars.next();
        }
        let key: String = std::iter::from_fn(|| chars.next_if(|c| *c != '=')).collect();
        if chars.next().is_none() {
            break;
        }
        let value: String = if chars.peek() == Some(&'"') {
            chars.next();
            let v = std::iter::from_fn(|| chars.next_if(|c| *c != '"')).collect();
            chars.next();
            v
        } else {
            std::iter::from_fn(|| chars.next_if(|c| *c != ',' && !c.is_whitespace())).collect()
        };
        out.insert(key.trim().to_string(), value);
    }
    out
}

fn bad(msg: impl Into<String>) -> WebError {
    WebError::Malformed(msg.into())
}

fn node_id(tok: &str) -> Result<usize, WebError> {
    tok.trim()
        .strip_prefix('n')
        .and_then(|d| d.parse().ok())
        .ok_or_else(|| bad(format!("bad node name {tok:?}")))
}

fn numbers(text: &str) -> Result<Vec<usize>, WebError> {
    text.split_whitespace()
        .map(|t| t.parse().map_err(|_| bad(format!("bad number {t:?}"))))
        .collect()
}

pub fn from_dot(text: &str) -> Result<Web, WebError> {
    let mut leftmost = None;
    let mut boundary = Vec::new();
    let mut vertices: BTreeMap<usize, (Vertex, Vec<usize>)> = BTreeMap::new();
    let mut edges: BTreeMap<usize, Edge> = BTreeMap::new();
    for line in text.lines().map(str::trim) {
        let line = line.trim_end_matches(';');
        if line.is_empty() || line.starts_with("graph") || line == "}" {
            continue;
        }
        if let Some(v) = line.strip_prefix("leftmost=") {
            leftmost = Some(v.trim().parse().map_err(|_| bad("bad leftmost"))?);
        } else if let Some(v) = line.strip_prefix("boundary=") {
            boundary = numbers(v.trim_matches('"'))?;
        } else {
            let (head, attrs) = line
                .split_once('[')
                .ok_or_else(|| bad(format!("unrecognised line {line:?}")))?;
            let attrs = parse_attrs(attrs.trim_end_matches(']'));
            let get = |k: &str| attrs.get(k).ok_or_else(|| bad(format!("missing {k}")));
            if let Some((a, b)) = head.split_once("--") {
                let id: usize = get("edge_id")?.parse().map_err(|_| bad("bad edge_id"))?;
                let label: i8 = get("label")?.parse().map_err(|_| bad("bad label"))?;
                let label = State::try_from(label).map_err(bad)?;
                edges.insert(id, Edge { a: node_id(a)?, b: node_id(b)?, label });
            } else {
                let color = match get("web_color")?.as_str() {
                    "B" => Color::B,
                    "W" => Color::W,
                    c => return Err(bad(format!("bad color {c:?}"))),
                };
                let boundary = get("web_boundary")? == "true";
                let rot = numbers(get("rotation")?)?;
                vertices.insert(node_id(head)?, (Vertex { color, boundary }, rot));
            }
        }
    }
    let dense = |len: usize, keys: Vec<usize>| keys.into_iter().eq(0..len);
    if !dense(vertices.len(), vertices.keys().copied().collect()) || !dense(edges.len(), edges.keys().copied().collect()) {
        return Err(bad("vertex and edge ids must be 0..n"));
    }
    let (verts, rotation): (Vec<Vertex>, Vec<Vec<usize>>) = vertices.into_values().unzip();
    Web::from_parts(
        verts,
        edges.into_values().collect(),
        rotation,
        boundary,
        leftmost.ok_or_else(|| bad("missing leftmost"))?,
    )
}
