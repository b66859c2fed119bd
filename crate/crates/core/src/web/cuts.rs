use serde::{Deserialize, Serialize};

use super::graph::{Web, WebError};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Turn {
    Left,
    Right,
}

/// A boundary-to-boundary path that alternates turns.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CutResult {
    pub end_vertex: usize,
    /// Traversed edges with the vertex each was entered from.
    pub path: Vec<(usize, usize)>,
}

fn cut(w: &Web, v: usize, first: Turn) -> Result<CutResult, WebError> {
    if v >= w.vertices().len() || !w.vertex(v).boundary {
        return Err(WebError::NotBoundaryVertex(v));
    }
    let mut e = w.rotation(v)[0];
    let mut from = v;
    let mut turn = first;
    let mut path = Vec::new();
    for _ in 0..=2 * w.edges().len() {
        path.push((e, from));
        let x = w.edge(e).other(from);
        if w.vertex(x).boundary {
            return Ok(CutResult { end_vertex: x, path });
        }
        let next = match turn {
            Turn::Left => w.ccw_prev(x, e),
            Turn::Right => w.ccw_next(x, e),
        };
        turn = match turn {
            Turn::Left => Turn::Right,
            Turn::Right => Turn::Left,
        };
        e = next;
        from = x;
    }
    Err(WebError::Malformed("cut path does not reach the boundary".into()))
}

/// Turns left at the first internal vertex, then right, then left, …
pub fn left_cut(w: &Web, v: usize) -> Result<CutResult, WebError> {
    cut(w, v, Turn::Left)
}

/// Turns right at the first internal vertex, then left, then right, …
pub fn right_cut(w: &Web, v: usize) -> Result<CutResult, WebError> {
    cut(w, v, Turn::Right)
}

/// Reading positions of the ends of the left and right cuts from the leftmost vertex.
pub fn cut_positions(w: &Web) -> Result<(usize, usize), WebError> {
    let v = w.leftmost();
    let l = left_cut(w, v)?.end_vertex;
    let r = right_cut(w, v)?.end_vertex;
    Ok((w.boundary_position(l).unwrap(), w.boundary_position(r).unwrap()))
}
