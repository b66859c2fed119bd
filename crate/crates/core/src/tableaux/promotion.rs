//! Generalized oscillating promotion through local growth rules.
//!
//! The bottom row `μ⁰ = ∅, μ¹, …, μᵏ` of the growth diagram is built one
//! square at a time from `μˢ⁻¹`, `λˢ` and `λˢ⁺¹`. Each square is resolved by
//! exactly one rule of a total decision table keyed on the direction of
//! `λˢ/μˢ⁻¹`, the direction and row of `λˢ⁺¹/λˢ`, and whether the direct
//! candidate is a generalized partition.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::filling::{Bullet, Cell, SetValuedFilling};
use super::got::Got;
use super::partition::{Direction, GeneralizedPartition, Step};

/// Growth rule applied at one square of the diagram.
///
/// The first word is the bullet's step. The rest says what became of the next
/// step of the tableau: applied unchanged, blocked (so `μˢ = λˢ` and the bullet
/// jumps), or moved `t` rows away from the bullet.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Rule {
    AddAdd,
    AddBlocked,
    AddRemove,
    /// Deletion pushed down `t` rows.
    RemoveShifted { t: usize },
    RemoveRemove,
    RemoveBlocked,
    RemoveAdd,
    /// Addition pushed up `t` rows.
    AddShifted { t: usize },
    Final,
}

impl Rule {
    /// Rules after which the bullet changes row.
    pub fn is_jump(self) -> bool {
        matches!(
            self,
            Rule::AddBlocked | Rule::RemoveShifted { .. } | Rule::RemoveBlocked | Rule::AddShifted { .. }
        )
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Rule::AddAdd => write!(f, "add-add"),
            Rule::AddBlocked => write!(f, "add-blocked"),
            Rule::AddRemove => write!(f, "add-remove"),
            Rule::RemoveShifted { t } => write!(f, "remove-shifted(t={t})"),
            Rule::RemoveRemove => write!(f, "remove-remove"),
            Rule::RemoveBlocked => write!(f, "remove-blocked"),
            Rule::RemoveAdd => write!(f, "remove-add"),
            Rule::AddShifted { t } => write!(f, "add-shifted(t={t})"),
            Rule::Final => write!(f, "final"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PromotionError {
    /// No rule, or more than one, matched a square. Indicates a bug.
    #[error("growth rule table is not total at step {step}: {detail}")]
    RuleTable { step: usize, detail: String },
    #[error("step {0} is outside 1..=k")]
    IndexOutOfRange(usize),
}

/// Record of one promotion: the bottom row, the rows `iₛ` in which `λˢ`
/// differs from `μˢ⁻¹`, and the rule that produced each `μˢ`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PromotionTrace {
    pub mu: Vec<GeneralizedPartition>,
    /// `rows[s-1]` is `iₛ` (1-based row), for `s = 1..=k`.
    pub rows: Vec<usize>,
    /// Whether `λˢ` is `μˢ⁻¹` plus a box (unprimed bullet) or minus one.
    pub bullet_dirs: Vec<Direction>,
    /// `rules[s-1]` produced `μˢ`; the last entry is always [`Rule::Final`].
    pub rules: Vec<Rule>,
}

impl PromotionTrace {
    /// `iₛ` for 1-based `s`.
    pub fn row_index(&self, s: usize) -> usize {
        self.rows[s - 1]
    }
}

fn table_error(step: usize, detail: impl Into<String>) -> PromotionError {
    PromotionError::RuleTable {
        step,
        detail: detail.into(),
    }
}

/// One square of the diagram: `(μˢ⁻¹, λˢ, λˢ⁺¹) ↦ μˢ`.
fn grow_square(
    s: usize,
    mu_prev: &GeneralizedPartition,
    lam: &GeneralizedPartition,
    lam_next: &GeneralizedPartition,
) -> Result<(GeneralizedPartition, Rule), PromotionError> {
    let first = mu_prev
        .step_to(lam)
        .ok_or_else(|| table_error(s, "μˢ⁻¹ and λˢ are not adjacent"))?;
    let second = lam
        .step_to(lam_next)
        .ok_or_else(|| table_error(s, "λˢ and λˢ⁺¹ are not adjacent"))?;
    let i = first.row;
    let j = second.row;
    let n = mu_prev.n();
    let direct = mu_prev.apply(second);

    let (mu, rule) = match (first.dir, second.dir, direct) {
        (Direction::Add, Direction::Add, Some(m)) => (m, Rule::AddAdd),
        (Direction::Add, Direction::Add, None) => {
            if j == i {
                return Err(table_error(s, "an addition blocked in its own row"));
            }
            (lam.clone(), Rule::AddBlocked)
        }
        (Direction::Add, Direction::Remove, Some(m)) => (m, Rule::AddRemove),
        (Direction::Add, Direction::Remove, None) => {
            if j != i {
                return Err(table_error(s, "a blocked deletion outside the bullet row"));
            }
            let (t, m) = (1..=n - i)
                .find_map(|t| mu_prev.apply(Step::remove(i + t)).map(|m| (t, m)))
                .ok_or_else(|| table_error(s, "no row below accepts a deletion"))?;
            (m, Rule::RemoveShifted { t })
        }
        (Direction::Remove, Direction::Remove, Some(m)) => (m, Rule::RemoveRemove),
        (Direction::Remove, Direction::Remove, None) => {
            if j == i {
                return Err(table_error(s, "a deletion blocked in its own row"));
            }
            (lam.clone(), Rule::RemoveBlocked)
        }
        (Direction::Remove, Direction::Add, Some(m)) => (m, Rule::RemoveAdd),
        (Direction::Remove, Direction::Add, None) => {
            if j != i {
                return Err(table_error(s, "a blocked addition outside the bullet row"));
            }
            let (t, m) = (1..i)
                .find_map(|t| mu_prev.apply(Step::add(i - t)).map(|m| (t, m)))
                .ok_or_else(|| table_error(s, "no row above accepts an addition"))?;
            (m, Rule::AddShifted { t })
        }
    };
    if mu.step_to(lam_next).is_none() {
        return Err(table_error(s, "μˢ is not adjacent to λˢ⁺¹"));
    }
    Ok((mu, rule))
}

/// Promotion of a generalized oscillating tableau by the growth rules.
/// Length 0 is the identity.
pub fn promote_growth(got: &Got) -> Result<(Got, PromotionTrace), PromotionError> {
    let k = got.k();
    let n = got.n();
    let mut mu = vec![GeneralizedPartition::empty(n)];
    let mut rows = Vec::with_capacity(k);
    let mut dirs = Vec::with_capacity(k);
    let mut rules = Vec::with_capacity(k);
    for s in 1..=k {
        let lam = got.shape(s);
        let first = mu[s - 1]
            .step_to(lam)
            .ok_or_else(|| table_error(s, "μˢ⁻¹ and λˢ are not adjacent"))?;
        rows.push(first.row);
        dirs.push(first.dir);
        if s == k {
            mu.push(lam.clone());
            rules.push(Rule::Final);
        } else {
            let (next, rule) = grow_square(s, &mu[s - 1], lam, got.shape(s + 1))?;
            mu.push(next);
            rules.push(rule);
        }
    }
    let promoted = Got::from_shapes_unchecked(n, mu.clone());
    Ok((
        promoted,
        PromotionTrace {
            mu,
            rows,
            bullet_dirs: dirs,
            rules,
        },
    ))
}

/// Iterates [`promote_growth`] `times` times.
pub fn promote_growth_n(got: &Got, times: usize) -> Result<Got, PromotionError> {
    let mut cur = got.clone();
    for _ in 0..times {
        cur = promote_growth(&cur)?.0;
    }
    Ok(cur)
}

/// The tableau read from `(μ⁰,…,μˢ⁻¹,λˢ,…,λᵏ)`: entries `j+1` for the
/// bottom-row steps, `j` for the top-row steps, and the bullet in the box
/// between `μˢ⁻¹` and `λˢ`.
pub fn bullet_tableau_at_step(
    trace: &PromotionTrace,
    got: &Got,
    s: usize,
) -> Result<SetValuedFilling, PromotionError> {
    let k = got.k();
    if s == 0 || s > k || trace.mu.len() != k + 1 {
        return Err(PromotionError::IndexOutOfRange(s));
    }
    let mut filling = SetValuedFilling::new(got.n(), k);
    for j in 1..s {
        let step = trace.mu[j - 1].step_to(&trace.mu[j]).expect("adjacent");
        filling.insert_step(&trace.mu[j - 1], step, j + 1);
    }
    let step = trace.mu[s - 1].step_to(got.shape(s)).expect("adjacent");
    let col = trace.mu[s - 1].box_column(step);
    filling.set_bullet(Bullet {
        cell: Cell::new(step.row, col),
        primed: step.dir == Direction::Remove,
        after: s,
    });
    for j in (s + 1)..=k {
        filling.insert_step(got.shape(j - 1), got.step(j), j);
    }
    Ok(filling)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tableaux::filling::Label;

    fn got(shapes: &[&[i32]], n: usize) -> Got {
        Got::validate(shapes, n).unwrap()
    }

    fn worked_example() -> Got {
        got(
            &[
                &[0, 0, 0],
                &[1, 0, 0],
                &[2, 0, 0],
                &[2, 0, -1],
                &[2, 1, -1],
                &[1, 1, -1],
                &[1, 0, -1],
                &[1, 0, 0],
                &[0, 0, 0],
            ],
            3,
        )
    }

    #[test]
    fn worked_example_bottom_row_and_rules() {
        let (p, trace) = promote_growth(&worked_example()).unwrap();
        let expected = got(
            &[
                &[0, 0, 0],
                &[1, 0, 0],
                &[1, 0, -1],
                &[1, 1, -1],
                &[1, 0, -1],
                &[1, -1, -1],
                &[1, 0, -1],
                &[0, 0, -1],
                &[0, 0, 0],
            ],
            3,
        );
        assert_eq!(p, expected);
        assert_eq!(
            trace.rules,
            vec![
                Rule::AddAdd,
                Rule::AddRemove,
                Rule::AddAdd,
                Rule::RemoveShifted { t: 1 },
                Rule::AddRemove,
                Rule::AddBlocked,
                Rule::AddRemove,
                Rule::Final
            ]
        );
        assert_eq!(trace.rows, vec![1, 1, 1, 1, 2, 2, 3, 3]);
    }

    #[test]
    fn tripod_tableau_is_fixed() {
        let t = got(&[&[0, 0, 0], &[1, 0, 0], &[1, 1, 0], &[1, 1, 1]], 3);
        let (p, trace) = promote_growth(&t).unwrap();
        assert_eq!(p, t);
        assert_eq!(trace.rules, vec![Rule::AddBlocked, Rule::AddBlocked, Rule::Final]);
    }

    #[test]
    fn forced_deletion_in_last_row() {
        let t = got(&[&[0, 0, 0], &[1, 0, 0], &[0, 0, 0]], 3);
        let (p, trace) = promote_growth(&t).unwrap();
        assert_eq!(p, got(&[&[0, 0, 0], &[0, 0, -1], &[0, 0, 0]], 3));
        assert_eq!(trace.rules, vec![Rule::RemoveShifted { t: 2 }, Rule::Final]);
    }

    #[test]
    fn length_zero_and_one() {
        let (p, trace) = promote_growth(&Got::empty(3)).unwrap();
        assert_eq!(p, Got::empty(3));
        assert!(trace.rules.is_empty());
        let t = got(&[&[0, 0], &[0, -1]], 2);
        assert_eq!(promote_growth(&t).unwrap().0, t);
    }

    #[test]
    fn bullet_reading_mid_promotion() {
        let t = worked_example();
        let (_, trace) = promote_growth(&t).unwrap();
        let f = bullet_tableau_at_step(&trace, &t, 4).unwrap();
        let l = |i, p| Label::new(i, p);
        assert_eq!(f.labels_at(Cell::new(1, 1)), &[l(2, false), l(8, true)]);
        assert_eq!(f.labels_at(Cell::new(1, 2)), &[l(5, true)]);
        assert_eq!(f.labels_at(Cell::new(2, 1)), &[l(4, false), l(6, true)]);
        assert_eq!(f.labels_at(Cell::new(3, -1)), &[l(3, true), l(7, false)]);
        let b = f.bullet().unwrap();
        assert_eq!(b.cell, Cell::new(1, 2));
        assert!(!b.primed);
        assert_eq!(f.to_string(), "{28'} {•5'}\n{46'}\n[3'7]\n");
        assert!(bullet_tableau_at_step(&trace, &t, 0).is_err());
        assert!(bullet_tableau_at_step(&trace, &t, 9).is_err());
    }

    #[test]
    fn bullet_reading_at_last_step() {
        let t = worked_example();
        let (p, trace) = promote_growth(&t).unwrap();
        let f = bullet_tableau_at_step(&trace, &t, t.k()).unwrap();
        // Everything except the bullet is the promoted filling shifted up by one.
        let promoted = SetValuedFilling::from_got(&p);
        for (cell, labels) in promoted.cells() {
            for lab in labels.iter().filter(|l| l.index < t.k()) {
                assert!(f.labels_at(cell).contains(&Label::new(lab.index + 1, lab.primed)));
            }
        }
    }
}
