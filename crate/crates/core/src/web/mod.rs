//! Planar webs: growth from strings, structure checks, cuts, rotation.

pub mod cuts;
pub mod dot;
pub mod fork;
pub mod graph;
pub mod growth;

pub use cuts::{cut_positions, left_cut, right_cut, CutResult};
pub use dot::{from_dot, to_dot};
pub use fork::{fork_extend, fork_extend_string, fork_pair};
pub use graph::{rotate_web, webs_equal, webs_equal_labeled, Edge, Face, Vertex, Web, WebError, WebJson};
pub use growth::{grow_web, grow_web_traced, grow_web_with, rule_for, GrowthError, GrowthPolicy, GrowthRule};
