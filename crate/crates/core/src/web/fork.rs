use super::graph::{Edge, Vertex, Web};
use crate::strings::{Color, Entry, SignatureStateString, State};

/// The two states replacing `j` on a fork, outer-left first.
///
/// Under a black leftmost vertex the pair is listed in decreasing order
/// (`1 > 0 > -1`); under a white one, in increasing order.
pub fn fork_pair(j: State, leftmost: Color) -> (State, State) {
    let mut rest: Vec<State> = State::ALL.into_iter().filter(|&s| s != j).collect();
    if leftmost == Color::W {
        rest.reverse();
    }
    (rest[0], rest[1])
}

/// Replaces every entry whose color differs from the first entry's by the
/// two-entry fork of the first entry's color.
pub fn fork_extend_string(s: &SignatureStateString) -> SignatureStateString {
    let Some(first) = s.entries().first() else {
        return s.clone();
    };
    let c = first.color;
    let mut out = Vec::with_capacity(2 * s.len());
    for &e in s.entries() {
        if e.color == c {
            out.push(e);
        } else {
            let (l, r) = fork_pair(e.state, c);
            out.push(Entry::new(l, c));
            out.push(Entry::new(r, c));
        }
    }
    out.into()
}

/// Turns every boundary vertex of the opposite color to the leftmost one into
/// an internal vertex carrying two new boundary vertices.
pub fn fork_extend(w: &Web) -> Web {
    let mut out = w.clone();
    if w.boundary.is_empty() {
        return out;
    }
    let c = w.vertex(w.leftmost).color;
    let mut boundary = Vec::with_capacity(2 * w.boundary.len());
    for &u in &w.boundary {
        if w.vertex(u).color == c {
            boundary.push(u);
            continue;
        }
        let stem = w.rotation(u)[0];
        let (l, r) = fork_pair(w.edge(stem).label, c);
        out.vertices[u].boundary = false;
        let mut add_leaf = |label: State| {
            out.vertices.push(Vertex { color: c, boundary: true });
            let leaf = out.vertices.len() - 1;
            out.edges.push(Edge { a: leaf, b: u, label });
            out.rotation.push(vec![out.edges.len() - 1]);
            (leaf, out.edges.len() - 1)
        };
        let (bl, el) = add_leaf(l);
        let (br, er) = add_leaf(r);
        out.rotation[u] = vec![el, stem, er];
        boundary.push(bl);
        boundary.push(br);
    }
    out.boundary = boundary;
    out.source = w.source.as_ref().map(fork_extend_string);
    out
}
