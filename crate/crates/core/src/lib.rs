//! Generalized oscillating tableaux, their promotion, web growth and rotation.

pub mod csp;
pub mod enumerate;
pub mod poly;
pub mod rotation;
pub mod strings;
pub mod tableaux;
pub mod web;
