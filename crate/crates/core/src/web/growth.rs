//! Inductive growth of a web from a dominant signature and state string.
//!
//! The boundary sits on a horizontal line, read left to right, with one
//! dangling edge hanging below each vertex. Local rules act on two adjacent
//! dangling edges, each tagged by its label and the color of its upper
//! endpoint:
//!
//! * a merge joins the two edges at a new vertex and leaves one edge below it;
//! * an H-move places a new vertex under each edge, joins them by a horizontal
//!   edge and leaves two edges below;
//! * a cap joins the two edges into one.
//!
//! Growth stops when no dangling edges remain.

use thiserror::Error;

use super::graph::{Edge, Vertex, Web};
use crate::strings::{is_dominant, Color, Entry, SignatureStateString, State};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GrowthError {
    #[error("string is not dominant")]
    NotDominant,
    #[error("no growth rule applies to the frontier {0}")]
    NoRuleApplicable(SignatureStateString),
}

/// Which applicable position of the frontier is rewritten first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum GrowthPolicy {
    #[default]
    LeftmostFirst,
    RightmostFirst,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GrowthRule {
    /// Two edges meet at a vertex; the entry describes the edge leaving it.
    Merge(Entry),
    /// Two new vertices joined by an edge with the given label.
    HMove {
        left: Entry,
        right: Entry,
        horizontal: State,
    },
    Cap,
}

/// The rule for an adjacent pair of dangling edges, if any.
pub fn rule_for(left: Entry, right: Entry) -> Option<GrowthRule> {
    use Color::{B, W};
    use State::{Minus, Plus, Zero};
    let key = (left.state, left.color, right.state, right.color);
    let merge = |s| Some(GrowthRule::Merge(Entry::new(s, left.color.opposite())));
    let hmove = |l: State, lc: Color, r: State, rc: Color, h: State| {
        Some(GrowthRule::HMove {
            left: Entry::new(l, lc),
            right: Entry::new(r, rc),
            horizontal: h,
        })
    };
    match key {
        (Plus, B, Zero, B) => merge(Minus),
        (Zero, B, Minus, B) => merge(Plus),
        (Plus, B, Minus, B) => merge(Zero),
        (Minus, W, Zero, W) => merge(Plus),
        (Zero, W, Plus, W) => merge(Minus),
        (Minus, W, Plus, W) => merge(Zero),
        (Plus, B, Zero, W) => hmove(Zero, W, Plus, B, Minus),
        (Zero, B, Zero, W) => hmove(Plus, W, Plus, B, Minus),
        (Zero, B, Plus, W) => hmove(Plus, W, Zero, B, Minus),
        (Minus, W, Zero, B) => hmove(Zero, B, Minus, W, Plus),
        (Zero, W, Zero, B) => hmove(Minus, B, Minus, W, Plus),
        (Zero, W, Minus, B) => hmove(Minus, B, Zero, W, Plus),
        (Plus, B, Plus, W) | (Minus, W, Minus, B) => Some(GrowthRule::Cap),
        _ => None,
    }
}

#[derive(Debug, Clone, Copy)]
struct Stub {
    edge: usize,
    tag: Entry,
}

struct Builder {
    vertices: Vec<Vertex>,
    ends: Vec<(usize, Option<usize>, State)>,
    alive: Vec<bool>,
    rotation: Vec<Vec<usize>>,
}

impl Builder {
    fn vertex(&mut self, color: Color, boundary: bool) -> usize {
        self.vertices.push(Vertex { color, boundary });
        self.rotation.push(Vec::new());
        self.vertices.len() - 1
    }

    fn edge(&mut self, a: usize, b: Option<usize>, label: State) -> usize {
        self.ends.push((a, b, label));
        self.alive.push(true);
        self.ends.len() - 1
    }

    fn attach(&mut self, stub: Stub, v: usize) {
        self.ends[stub.edge].1 = Some(v);
    }

    fn apply(&mut self, rule: GrowthRule, l: Stub, r: Stub) -> Vec<Stub> {
        match rule {
            GrowthRule::Merge(out) => {
                let x = self.vertex(l.tag.color.opposite(), false);
                let down = self.edge(x, None, out.state);
                self.attach(l, x);
                self.attach(r, x);
                self.rotation[x] = vec![l.edge, down, r.edge];
                vec![Stub { edge: down, tag: out }]
            }
            GrowthRule::HMove { left, right, horizontal } => {
                let lv = self.vertex(l.tag.color.opposite(), false);
                let rv = self.vertex(r.tag.color.opposite(), false);
                let h = self.edge(lv, Some(rv), horizontal);
                let dl = self.edge(lv, None, left.state);
                let dr = self.edge(rv, None, right.state);
                self.attach(l, lv);
                self.attach(r, rv);
                self.rotation[lv] = vec![l.edge, dl, h];
                self.rotation[rv] = vec![r.edge, h, dr];
                vec![Stub { edge: dl, tag: left }, Stub { edge: dr, tag: right }]
            }
            GrowthRule::Cap => {
                let upper = self.ends[r.edge].0;
                self.ends[l.edge].1 = Some(upper);
                for e in self.rotation[upper].iter_mut() {
                    if *e == r.edge {
                        *e = l.edge;
                    }
                }
                self.alive[r.edge] = false;
                Vec::new()
            }
        }
    }

    fn finish(self, boundary: Vec<usize>, source: &SignatureStateString) -> Web {
        let mut new_id = vec![usize::MAX; self.ends.len()];
        let mut edges = Vec::new();
        for (i, &(a, b, label)) in self.ends.iter().enumerate() {
            if self.alive[i] {
                new_id[i] = edges.len();
                edges.push(Edge {
                    a,
                    b: b.expect("every edge closed"),
                    label,
                });
            }
        }
        let rotation = self
            .rotation
            .iter()
            .map(|rot| rot.iter().map(|&e| new_id[e]).collect())
            .collect();
        Web {
            vertices: self.vertices,
            edges,
            rotation,
            leftmost: boundary.first().copied().unwrap_or(0),
            boundary,
            source: Some(source.clone()),
        }
    }
}

/// Frontier states visited while growing, first to last.
pub type GrowthTrace = Vec<SignatureStateString>;

pub fn grow_web_traced(
    s: &SignatureStateString,
    policy: GrowthPolicy,
) -> Result<(Web, GrowthTrace), GrowthError> {
    if !is_dominant(s) {
        return Err(GrowthError::NotDominant);
    }
    let mut b = Builder {
        vertices: Vec::new(),
        ends: Vec::new(),
        alive: Vec::new(),
        rotation: Vec::new(),
    };
    let mut frontier = Vec::with_capacity(s.len());
    let mut boundary = Vec::with_capacity(s.len());
    for &e in s.entries() {
        let v = b.vertex(e.color, true);
        let edge = b.edge(v, None, e.state);
        b.rotation[v] = vec![edge];
        boundary.push(v);
        frontier.push(Stub { edge, tag: e });
    }
    let tags = |f: &[Stub]| SignatureStateString::new(f.iter().map(|st| st.tag).collect());
    let mut trace = vec![tags(&frontier)];
    while !frontier.is_empty() {
        let mut candidates = (0..frontier.len().saturating_sub(1))
            .filter_map(|i| rule_for(frontier[i].tag, frontier[i + 1].tag).map(|r| (i, r)));
        let found = match policy {
            GrowthPolicy::LeftmostFirst => candidates.next(),
            GrowthPolicy::RightmostFirst => candidates.next_back(),
        };
        let (i, rule) = found.ok_or_else(|| GrowthError::NoRuleApplicable(tags(&frontier)))?;
        let replacement = b.apply(rule, frontier[i], frontier[i + 1]);
        frontier.splice(i..i + 2, replacement);
        trace.push(tags(&frontier));
    }
    Ok((b.finish(boundary, s), trace))
}

pub fn grow_web_with(s: &SignatureStateString, policy: GrowthPolicy) -> Result<Web, GrowthError> {
    grow_web_traced(s, policy).map(|(w, _)| w)
}

pub fn grow_web(s: &SignatureStateString) -> Result<Web, GrowthError> {
    grow_web_with(s, GrowthPolicy::LeftmostFirst)
}
