//! Cyclic sieving for promotion on rectangular tableaux, and orbit data for
//! promotion on generalized oscillating tableaux.

use std::collections::{BTreeMap, HashMap};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::enumerate::enumerate_got;
use crate::poly::{q_hook_rectangle, round_to_integer, IntPolynomial, PolyError};
use crate::tableaux::{classical_promotion, promote_growth, Got, PromotionError, StandardYoungTableau};

pub const ROUNDING_TOLERANCE: f64 = 1e-6;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum CspError {
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Promotion(#[from] PromotionError),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CspRow {
    pub d: usize,
    pub fixed_points: usize,
    /// `X(ζ^d)` rounded, for `ζ` a primitive `bn`-th root of unity.
    pub x_value: i128,
    pub matches: bool,
    /// `X(ω^d)` rounded, for `ω` a primitive `n`-th root, when it is near an integer.
    pub x_at_column_root: Option<i128>,
    /// Whether the `n`-th root value differs from the fixed-point count.
    pub column_grading_differs: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CspReport {
    pub b: usize,
    pub n: usize,
    pub group_order: usize,
    pub tableaux: usize,
    pub x_at_one: i128,
    pub polynomial: IntPolynomial,
    pub order_divides_group: bool,
    pub rows: Vec<CspRow>,
    pub pass: bool,
}

/// Orbit length of every tableau under a permutation given as an index map.
fn orbit_lengths(next: &[usize]) -> Vec<usize> {
    let mut len = vec![0; next.len()];
    for start in 0..next.len() {
        if len[start] != 0 {
            continue;
        }
        let mut cycle = vec![start];
        let mut cur = next[start];
        while cur != start {
            cycle.push(cur);
            cur = next[cur];
        }
        for &c in &cycle {
            len[c] = cycle.len();
        }
    }
    len
}

/// Compares fixed points of powers of promotion on `b × n` standard tableaux
/// with the q-hook polynomial at roots of unity of order `bn`.
pub fn csp_check(b: usize, n: usize) -> Result<CspReport, CspError> {
    let all = StandardYoungTableau::all_of_shape(&vec![n; b]);
    let index: HashMap<&StandardYoungTableau, usize> = all.iter().enumerate().map(|(i, t)| (t, i)).collect();
    let next: Vec<usize> = all
        .par_iter()
        .map(|t| index[&classical_promotion(t)])
        .collect();
    let orbits = orbit_lengths(&next);
    let group = b * n;
    let x = q_hook_rectangle(b, n)?;
    let mut rows = Vec::with_capacity(group);
    for d in 1..=group {
        let fixed = orbits.iter().filter(|&&l| d % l == 0).count();
        let x_value = round_to_integer(x.eval_root_of_unity(group, d), ROUNDING_TOLERANCE)?;
        let at_column = round_to_integer(x.eval_root_of_unity(n, d % n), ROUNDING_TOLERANCE).ok();
        rows.push(CspRow {
            d,
            fixed_points: fixed,
            x_value,
            matches: x_value >= 0 && x_value as usize == fixed,
            x_at_column_root: at_column,
            column_grading_differs: at_column != Some(fixed as i128),
        });
    }
    let order_divides_group = orbits.iter().all(|&l| group.is_multiple_of(l));
    let x_at_one = x.eval_at_one();
    let pass = order_divides_group && x_at_one == all.len() as i128 && rows.iter().all(|r| r.matches);
    Ok(CspReport {
        b,
        n,
        group_order: group,
        tableaux: all.len(),
        x_at_one,
        polynomial: x,
        order_divides_group,
        rows,
        pass,
    })
}

/// How promotion acts on all of GOT(k, n), viewed as a map of a finite set
/// to itself.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitStats {
    pub k: usize,
    pub n: usize,
    pub size: usize,
    pub injective: bool,
    /// Elements lying on a cycle of the map.
    pub periodic: usize,
    /// Cycle length → number of cycles of that length.
    pub cycle_lengths: BTreeMap<usize, usize>,
    /// Elements whose cycle length divides `k`.
    pub order_divides_length: usize,
}

pub fn orbit_stats(k: usize, n: usize) -> Result<OrbitStats, CspError> {
    let all: Vec<Got> = enumerate_got(k, n).collect();
    let index: HashMap<&Got, usize> = all.iter().enumerate().map(|(i, t)| (t, i)).collect();
    let next: Vec<usize> = all
        .par_iter()
        .map(|t| promote_growth(t).map(|(p, _)| index[&p]))
        .collect::<Result<_, _>>()?;
    let mut hit = vec![false; all.len()];
    let mut injective = true;
    for &j in &next {
        injective &= !std::mem::replace(&mut hit[j], true);
    }
    // An element is periodic when iterating from it returns to it; walking
    // `size` steps from anywhere lands on a cycle.
    let mut on_cycle = vec![false; all.len()];
    let mut cycle_len = vec![0usize; all.len()];
    let mut cycle_lengths = BTreeMap::new();
    for start in 0..all.len() {
        let mut cur = start;
        for _ in 0..all.len() {
            cur = next[cur];
            if on_cycle[cur] {
                break;
            }
        }
        if on_cycle[cur] {
            continue;
        }
        let mut cycle = vec![cur];
        let mut c = next[cur];
        while c != cur {
            cycle.push(c);
            c = next[c];
        }
        for &c in &cycle {
            on_cycle[c] = true;
            cycle_len[c] = cycle.len();
        }
        *cycle_lengths.entry(cycle.len()).or_insert(0) += 1;
    }
    let periodic = on_cycle.iter().filter(|&&b| b).count();
    let order_divides_length = cycle_len
        .iter()
        .zip(&on_cycle)
        .filter(|&(&l, &p)| p && (k == 0 || k.is_multiple_of(l)))
        .count();
    Ok(OrbitStats {
        k,
        n,
        size: all.len(),
        injective,
        periodic,
        cycle_lengths,
        order_divides_length,
    })
}
