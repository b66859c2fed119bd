use std::collections::{BTreeMap, VecDeque};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::strings::{Color, SignatureStateString, State};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Vertex {
    pub color: Color,
    pub boundary: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Edge {
    pub a: usize,
    pub b: usize,
    pub label: State,
}

impl Edge {
    pub fn other(&self, v: usize) -> usize {
        if self.a == v {
            self.b
        } else {
            self.a
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WebError {
    #[error("vertex {vertex} has degree {degree}")]
    BadDegree { vertex: usize, degree: usize },
    #[error("edge {0} joins two vertices of the same color")]
    NotBipartite(usize),
    #[error("internal vertex {0} does not see each label exactly once")]
    NotTricolored(usize),
    #[error("internal face with {0} sides")]
    SmallFace(usize),
    #[error("rotation at vertex {0} does not list exactly its incident edges")]
    BadRotation(usize),
    #[error("embedding is not planar")]
    NotPlanar,
    #[error("boundary order does not match the embedding")]
    BoundaryOrder,
    #[error("boundary vertex at position {0} disagrees with the source string")]
    SourceMismatch(usize),
    #[error("vertex {0} is not a boundary vertex")]
    NotBoundaryVertex(usize),
    #[error("malformed web description: {0}")]
    Malformed(String),
}

/// A face of the embedding: its number of sides and whether it avoids the boundary.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Face {
    pub sides: usize,
    pub internal: bool,
    pub vertices: Vec<usize>,
}

/// A planar bipartite graph in a disk, given by a counterclockwise rotation
/// system. Boundary vertices are listed clockwise; `leftmost` marks where the
/// boundary reading starts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Web {
    pub(crate) vertices: Vec<Vertex>,
    pub(crate) edges: Vec<Edge>,
    pub(crate) rotation: Vec<Vec<usize>>,
    pub(crate) boundary: Vec<usize>,
    pub(crate) leftmost: usize,
    pub(crate) source: Option<SignatureStateString>,
}

impl Web {
    pub fn from_parts(
        vertices: Vec<Vertex>,
        edges: Vec<Edge>,
        rotation: Vec<Vec<usize>>,
        boundary: Vec<usize>,
        leftmost: usize,
    ) -> Result<Self, WebError> {
        let n = vertices.len();
        if rotation.len() != n {
            return Err(WebError::Malformed("one rotation list per vertex".into()));
        }
        if edges.iter().any(|e| e.a >= n || e.b >= n) {
            return Err(WebError::Malformed("edge endpoint out of range".into()));
        }
        if rotation.iter().flatten().any(|&e| e >= edges.len()) {
            return Err(WebError::Malformed("rotation names an unknown edge".into()));
        }
        if boundary.iter().any(|&v| v >= n || !vertices[v].boundary)
            || boundary.len() != vertices.iter().filter(|v| v.boundary).count()
        {
            return Err(WebError::Malformed("boundary list must name every boundary vertex".into()));
        }
        if !boundary.is_empty() && !boundary.contains(&leftmost) {
            return Err(WebError::Malformed("leftmost vertex is not on the boundary".into()));
        }
        Ok(Web {
            vertices,
            edges,
            rotation,
            boundary,
            leftmost,
            source: None,
        })
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn vertex(&self, v: usize) -> Vertex {
        self.vertices[v]
    }

    pub fn edge(&self, e: usize) -> Edge {
        self.edges[e]
    }

    /// Incident edges of `v`, counterclockwise.
    pub fn rotation(&self, v: usize) -> &[usize] {
        &self.rotation[v]
    }

    pub fn leftmost(&self) -> usize {
        self.leftmost
    }

    pub fn source(&self) -> Option<&SignatureStateString> {
        self.source.as_ref()
    }

    pub fn num_internal(&self) -> usize {
        self.vertices.iter().filter(|v| !v.boundary).count()
    }

    /// Boundary vertices clockwise, starting at the leftmost one.
    pub fn reading_order(&self) -> Vec<usize> {
        if self.boundary.is_empty() {
            return Vec::new();
        }
        let start = self.boundary.iter().position(|&v| v == self.leftmost).unwrap();
        let mut out = self.boundary[start..].to_vec();
        out.extend_from_slice(&self.boundary[..start]);
        out
    }

    /// 1-based position of a boundary vertex in the reading order.
    pub fn boundary_position(&self, v: usize) -> Option<usize> {
        self.reading_order().iter().position(|&u| u == v).map(|p| p + 1)
    }

    pub fn boundary_colors(&self) -> Vec<Color> {
        self.reading_order().iter().map(|&v| self.vertices[v].color).collect()
    }

    /// Edge labels at the boundary, in reading order.
    pub fn boundary_labels(&self) -> Vec<State> {
        self.reading_order()
            .iter()
            .map(|&v| self.edges[self.rotation[v][0]].label)
            .collect()
    }

    /// Edge following `e` counterclockwise around `v`.
    pub fn ccw_next(&self, v: usize, e: usize) -> usize {
        let rot = &self.rotation[v];
        let i = rot.iter().position(|&x| x == e).expect("edge incident to vertex");
        rot[(i + 1) % rot.len()]
    }

    /// Edge preceding `e` counterclockwise around `v` (its clockwise successor).
    pub fn ccw_prev(&self, v: usize, e: usize) -> usize {
        let rot = &self.rotation[v];
        let i = rot.iter().position(|&x| x == e).expect("edge incident to vertex");
        rot[(i + rot.len() - 1) % rot.len()]
    }

    /// Some component is a single edge between two boundary vertices.
    pub fn contains_identity_component(&self) -> bool {
        self.edges
            .iter()
            .any(|e| self.vertices[e.a].boundary && self.vertices[e.b].boundary)
    }

    /// Face walks: a dart `(e, from)` is followed by the edge after `e`
    /// counterclockwise at its head.
    pub fn faces(&self) -> Vec<Face> {
        let mut seen = vec![[false; 2]; self.edges.len()];
        let side = |e: usize, from: usize| usize::from(self.edges[e].a != from);
        let mut out = Vec::new();
        for e0 in 0..self.edges.len() {
            for from0 in [self.edges[e0].a, self.edges[e0].b] {
                if seen[e0][side(e0, from0)] {
                    continue;
                }
                let mut verts = Vec::new();
                let (mut e, mut from) = (e0, from0);
                loop {
                    seen[e][side(e, from)] = true;
                    verts.push(from);
                    let head = self.edges[e].other(from);
                    let next = self.ccw_next(head, e);
                    e = next;
                    from = head;
                    if e == e0 && from == from0 {
                        break;
                    }
                }
                let internal = verts.iter().all(|&v| !self.vertices[v].boundary);
                out.push(Face {
                    sides: verts.len(),
                    internal,
                    vertices: verts,
                });
            }
        }
        out
    }

    fn components(&self) -> Vec<usize> {
        let mut comp = vec![usize::MAX; self.vertices.len()];
        let mut next = 0;
        for s in 0..self.vertices.len() {
            if comp[s] != usize::MAX {
                continue;
            }
            comp[s] = next;
            let mut queue = VecDeque::from([s]);
            while let Some(v) = queue.pop_front() {
                for &e in &self.rotation[v] {
                    let u = self.edges[e].other(v);
                    if comp[u] == usize::MAX {
                        comp[u] = next;
                        queue.push_back(u);
                    }
                }
            }
            next += 1;
        }
        comp
    }

    /// Checks the rotation system, planarity, degrees, coloring, labels, face
    /// sizes, boundary order and agreement with the source string.
    pub fn validate(&self) -> Result<(), WebError> {
        for (v, rot) in self.rotation.iter().enumerate() {
            let mut incident: Vec<usize> = self
                .edges
                .iter()
                .enumerate()
                .flat_map(|(i, e)| {
                    let mut hits = Vec::new();
                    if e.a == v {
                        hits.push(i);
                    }
                    if e.b == v {
                        hits.push(i);
                    }
                    hits
                })
                .collect();
            let mut listed = rot.clone();
            incident.sort_unstable();
            listed.sort_unstable();
            if incident != listed {
                return Err(WebError::BadRotation(v));
            }
        }
        for (v, vert) in self.vertices.iter().enumerate() {
            let degree = self.rotation[v].len();
            let want = if vert.boundary { 1 } else { 3 };
            if degree != want {
                return Err(WebError::BadDegree { vertex: v, degree });
            }
            if !vert.boundary {
                let mut labels: Vec<State> = self.rotation[v].iter().map(|&e| self.edges[e].label).collect();
                labels.sort();
                if labels != [State::Minus, State::Zero, State::Plus] {
                    return Err(WebError::NotTricolored(v));
                }
            }
        }
        for (i, e) in self.edges.iter().enumerate() {
            if self.vertices[e.a].color == self.vertices[e.b].color {
                return Err(WebError::NotBipartite(i));
            }
        }
        let faces = self.faces();
        let comp = self.components();
        let ncomp = comp.iter().copied().max().map_or(0, |m| m + 1);
        let mut euler = vec![0i64; ncomp];
        for &c in &comp {
            euler[c] += 1;
        }
        for e in &self.edges {
            euler[comp[e.a]] -= 1;
        }
        for f in &faces {
            euler[comp[f.vertices[0]]] += 1;
        }
        if euler.iter().any(|&x| x != 2) {
            return Err(WebError::NotPlanar);
        }
        if let Some(f) = faces.iter().find(|f| f.internal && f.sides < 6) {
            return Err(WebError::SmallFace(f.sides));
        }
        if ncomp == 1 && !self.boundary.is_empty() {
            let outer = faces
                .iter()
                .find(|f| f.vertices.contains(&self.boundary[0]))
                .unwrap();
            let mut seen: Vec<usize> = Vec::new();
            for &v in outer.vertices.iter().rev() {
                if self.vertices[v].boundary && !seen.contains(&v) {
                    seen.push(v);
                }
            }
            if seen.len() != self.boundary.len() || !is_rotation_of(&seen, &self.boundary) {
                return Err(WebError::BoundaryOrder);
            }
        }
        if let Some(src) = &self.source {
            let colors = self.boundary_colors();
            let labels = self.boundary_labels();
            if src.len() != colors.len() {
                return Err(WebError::SourceMismatch(0));
            }
            for (i, e) in src.entries().iter().enumerate() {
                if e.color != colors[i] || e.state != labels[i] {
                    return Err(WebError::SourceMismatch(i + 1));
                }
            }
        }
        Ok(())
    }

    /// Canonical code of the embedded graph, relative to the marked vertex.
    ///
    /// Components are visited in boundary reading order; inside a component,
    /// vertices are numbered in breadth-first order with neighbours taken
    /// counterclockwise from the edge of discovery.
    pub fn canonical_code(&self, with_labels: bool) -> Vec<i64> {
        let mut id = vec![usize::MAX; self.vertices.len()];
        let mut entry = vec![usize::MAX; self.vertices.len()];
        let mut order = Vec::with_capacity(self.vertices.len());
        let reading = self.reading_order();
        for &root in &reading {
            if id[root] != usize::MAX {
                continue;
            }
            id[root] = order.len();
            entry[root] = self.rotation[root][0];
            order.push(root);
            let mut head = order.len() - 1;
            while head < order.len() {
                let v = order[head];
                head += 1;
                let rot = &self.rotation[v];
                let start = rot.iter().position(|&e| e == entry[v]).unwrap();
                for t in 0..rot.len() {
                    let e = rot[(start + t) % rot.len()];
                    let u = self.edges[e].other(v);
                    if id[u] == usize::MAX {
                        id[u] = order.len();
                        entry[u] = e;
                        order.push(u);
                    }
                }
            }
        }
        let mut code = vec![self.vertices.len() as i64, self.edges.len() as i64];
        if order.len() != self.vertices.len() {
            code.push(-1);
            return code;
        }
        for &v in &order {
            let vert = self.vertices[v];
            code.push(match vert.color {
                Color::B => 0,
                Color::W => 1,
            });
            code.push(i64::from(vert.boundary));
            let rot = &self.rotation[v];
            let start = rot.iter().position(|&e| e == entry[v]).unwrap();
            code.push(rot.len() as i64);
            for t in 0..rot.len() {
                let e = rot[(start + t) % rot.len()];
                if with_labels {
                    code.push(i64::from(self.edges[e].label.value()));
                }
                code.push(id[self.edges[e].other(v)] as i64);
            }
        }
        code.extend(reading.iter().map(|&v| id[v] as i64));
        code
    }

    /// Advances the marker one boundary vertex clockwise. Edge labels are kept
    /// as they were; the source string no longer describes the result.
    pub fn rotated(&self) -> Web {
        let mut out = self.clone();
        if let Some(pos) = self.boundary.iter().position(|&v| v == self.leftmost) {
            out.leftmost = self.boundary[(pos + 1) % self.boundary.len()];
        }
        out.source = None;
        out
    }

    pub fn to_json(&self) -> WebJson {
        WebJson {
            vertices: self
                .vertices
                .iter()
                .enumerate()
                .map(|(id, v)| VertexJson {
                    id,
                    color: v.color,
                    boundary: v.boundary,
                })
                .collect(),
            edges: self.edges.clone(),
            rotation: self.rotation.iter().cloned().enumerate().collect(),
            boundary: self.boundary.clone(),
            leftmost: self.leftmost,
            source: self.source.clone(),
        }
    }

    pub fn from_json(json: &WebJson) -> Result<Web, WebError> {
        let n = json.vertices.len();
        let mut vertices = vec![None; n];
        for v in &json.vertices {
            if v.id >= n || vertices[v.id].is_some() {
                return Err(WebError::Malformed(format!("vertex id {}", v.id)));
            }
            vertices[v.id] = Some(Vertex {
                color: v.color,
                boundary: v.boundary,
            });
        }
        let vertices: Vec<Vertex> = vertices.into_iter().map(Option::unwrap).collect();
        let mut rotation = vec![Vec::new(); n];
        for (&v, rot) in &json.rotation {
            if v >= n {
                return Err(WebError::Malformed(format!("rotation for vertex {v}")));
            }
            rotation[v] = rot.clone();
        }
        let mut web = Web::from_parts(vertices, json.edges.clone(), rotation, json.boundary.clone(), json.leftmost)?;
        web.source = json.source.clone();
        Ok(web)
    }
}

fn is_rotation_of(a: &[usize], b: &[usize]) -> bool {
    if a.len() != b.len() {
        return false;
    }
    if a.is_empty() {
        return true;
    }
    (0..a.len()).any(|s| (0..a.len()).all(|i| a[(s + i) % a.len()] == b[i]))
}

/// Planar isomorphism preserving colors, the embedding, the boundary order
/// and the marked vertex. Edge labels are ignored, since they depend on where
/// the boundary reading starts.
pub fn webs_equal(w1: &Web, w2: &Web) -> bool {
    w1.canonical_code(false) == w2.canonical_code(false)
}

/// As [`webs_equal`], additionally matching edge labels.
pub fn webs_equal_labeled(w1: &Web, w2: &Web) -> bool {
    w1.canonical_code(true) == w2.canonical_code(true)
}

pub fn rotate_web(w: &Web) -> Web {
    w.rotated()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexJson {
    pub id: usize,
    pub color: Color,
    pub boundary: bool,
}

/// Wire form of a web.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WebJson {
    pub vertices: Vec<VertexJson>,
    pub edges: Vec<Edge>,
    pub rotation: BTreeMap<usize, Vec<usize>>,
    pub boundary: Vec<usize>,
    pub leftmost: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub source: Option<SignatureStateString>,
}

impl Serialize for Web {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Web {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let json = WebJson::deserialize(d)?;
        Web::from_json(&json).map_err(serde::de::Error::custom)
    }
}
