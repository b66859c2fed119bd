use std::fmt;

use serde::{Deserialize, Serialize};

/// Whether a step adds a box to a row (part grows by one) or removes one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Direction {
    Add,
    Remove,
}

impl Direction {
    pub fn sign(self) -> i32 {
        match self {
            Direction::Add => 1,
            Direction::Remove => -1,
        }
    }

    pub fn flip(self) -> Self {
        match self {
            Direction::Add => Direction::Remove,
            Direction::Remove => Direction::Add,
        }
    }
}

/// A single-box move between two generalized partitions. Rows are 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Step {
    pub row: usize,
    pub dir: Direction,
}

impl Step {
    pub fn add(row: usize) -> Self {
        Step { row, dir: Direction::Add }
    }

    pub fn remove(row: usize) -> Self {
        Step { row, dir: Direction::Remove }
    }
}

/// A weakly decreasing integer vector with a fixed number of parts.
///
/// Negative parts are drawn as red boxes to the left of the axis. Two values
/// are only comparable when they have the same part count; conversion from a
/// shorter list pads with zeros (see [`GeneralizedPartition::padded`]).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct GeneralizedPartition {
    parts: Vec<i32>,
}

/// Why an integer list is not a generalized partition with the requested part count.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PartitionDefect {
    /// The list increases somewhere (after padding).
    NotWeaklyDecreasing,
    /// The list has nonzero entries beyond the requested part count.
    TooManyParts,
}

impl GeneralizedPartition {
    /// Wraps `parts` verbatim; the part count is `parts.len()`.
    pub fn new(parts: Vec<i32>) -> Result<Self, PartitionDefect> {
        if parts.windows(2).all(|w| w[0] >= w[1]) {
            Ok(GeneralizedPartition { parts })
        } else {
            Err(PartitionDefect::NotWeaklyDecreasing)
        }
    }

    /// The empty shape `(0,…,0)` with `n` parts.
    pub fn empty(n: usize) -> Self {
        GeneralizedPartition { parts: vec![0; n] }
    }

    /// Writes `parts` with exactly `n` parts, appending or dropping trailing zeros.
    pub fn padded(parts: &[i32], n: usize) -> Result<Self, PartitionDefect> {
        if parts.len() > n {
            if parts[n..].iter().any(|&p| p != 0) {
                return Err(PartitionDefect::TooManyParts);
            }
            return Self::new(parts[..n].to_vec());
        }
        let mut v = parts.to_vec();
        v.resize(n, 0);
        Self::new(v)
    }

    pub fn n(&self) -> usize {
        self.parts.len()
    }

    pub fn parts(&self) -> &[i32] {
        &self.parts
    }

    /// Part in 1-based `row`.
    pub fn part(&self, row: usize) -> i32 {
        self.parts[row - 1]
    }

    pub fn is_empty_shape(&self) -> bool {
        self.parts.iter().all(|&p| p == 0)
    }

    /// Number of positive boxes minus number of negative boxes.
    pub fn size(&self) -> i32 {
        self.parts.iter().sum()
    }

    /// Whether every part is non-negative (an ordinary partition).
    pub fn is_ordinary(&self) -> bool {
        self.parts.iter().all(|&p| p >= 0)
    }

    /// Whether moving one box in `step.row` keeps the vector weakly decreasing.
    pub fn can_apply(&self, step: Step) -> bool {
        let r = step.row;
        if r == 0 || r > self.n() {
            return false;
        }
        let p = self.parts[r - 1];
        match step.dir {
            Direction::Add => r == 1 || self.parts[r - 2] > p,
            Direction::Remove => r == self.n() || self.parts[r] < p,
        }
    }

    pub fn apply(&self, step: Step) -> Option<Self> {
        if !self.can_apply(step) {
            return None;
        }
        let mut parts = self.parts.clone();
        parts[step.row - 1] += step.dir.sign();
        Some(GeneralizedPartition { parts })
    }

    /// The step taking `self` to `other`, if they differ by exactly one box.
    pub fn step_to(&self, other: &Self) -> Option<Step> {
        if self.n() != other.n() {
            return None;
        }
        let mut found = None;
        for (i, (a, b)) in self.parts.iter().zip(&other.parts).enumerate() {
            match b - a {
                0 => {}
                1 | -1 if found.is_none() => {
                    let dir = if b > a { Direction::Add } else { Direction::Remove };
                    found = Some(Step { row: i + 1, dir });
                }
                _ => return None,
            }
        }
        found
    }

    /// Column of the box that `step` adds or deletes, in the convention where
    /// positive columns are `1, 2, …` and red columns are `-1, -2, …` with `-1`
    /// next to the axis.
    pub fn box_column(&self, step: Step) -> i32 {
        let p = self.part(step.row);
        match step.dir {
            Direction::Add => {
                if p >= 0 {
                    p + 1
                } else {
                    p
                }
            }
            Direction::Remove => {
                if p > 0 {
                    p
                } else {
                    p - 1
                }
            }
        }
    }
}

impl fmt::Display for GeneralizedPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty_shape() {
            return write!(f, "∅");
        }
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn padding_respects_weak_decrease() {
        let p = GeneralizedPartition::padded(&[2, 1], 4).unwrap();
        assert_eq!(p.parts(), &[2, 1, 0, 0]);
        assert_eq!(
            GeneralizedPartition::padded(&[2, 1, 0], 2).unwrap().parts(),
            &[2, 1]
        );
        assert_eq!(
            GeneralizedPartition::padded(&[-1], 2),
            Err(PartitionDefect::NotWeaklyDecreasing)
        );
        assert_eq!(
            GeneralizedPartition::padded(&[2, 1], 1),
            Err(PartitionDefect::TooManyParts)
        );
    }

    #[test]
    fn fixed_part_count_example() {
        let parts = [5, 5, 3, 0, -2, -2];
        assert!(GeneralizedPartition::padded(&parts, 6).is_ok());
        assert!(GeneralizedPartition::padded(&parts, 7).is_err());
        assert!(GeneralizedPartition::padded(&parts, 5).is_err());
    }

    #[test]
    fn moves_and_columns() {
        let p = GeneralizedPartition::new(vec![1, 0, -2]).unwrap();
        assert!(p.can_apply(Step::add(1)));
        assert!(p.can_apply(Step::add(2)));
        assert!(p.can_apply(Step::add(3)));
        let full = GeneralizedPartition::new(vec![1, 1, -2]).unwrap();
        assert!(!full.can_apply(Step::add(2)));
        assert!(!full.can_apply(Step::remove(1)));
        assert!(p.can_apply(Step::remove(3)));
        assert!(p.can_apply(Step::remove(2)));
        assert!(!p.can_apply(Step::remove(4)));
        assert_eq!(p.box_column(Step::add(1)), 2);
        assert_eq!(p.box_column(Step::remove(1)), 1);
        assert_eq!(p.box_column(Step::add(3)), -2);
        assert_eq!(p.box_column(Step::remove(3)), -3);
        assert_eq!(p.box_column(Step::remove(2)), -1);
        let q = p.apply(Step::remove(2)).unwrap();
        assert_eq!(p.step_to(&q), Some(Step::remove(2)));
        assert_eq!(p.step_to(&p), None);
    }
}
