use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::got::Got;
use super::partition::{Direction, Step};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SytError {
    #[error("row lengths must weakly decrease")]
    BadShape,
    #[error("entries must be exactly 1..={0}")]
    BadEntries(usize),
    #[error("entries must increase along rows and down columns")]
    NotIncreasing,
    #[error("tableau has more rows than the {0} parts requested")]
    TooManyRows(usize),
    #[error("tableau is not standard: step {0} deletes a box or leaves ordinary partitions")]
    NotStandard(usize),
}

/// A standard Young tableau, stored as its rows (top to bottom).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<usize>>", into = "Vec<Vec<usize>>")]
pub struct StandardYoungTableau {
    rows: Vec<Vec<usize>>,
}

impl TryFrom<Vec<Vec<usize>>> for StandardYoungTableau {
    type Error = SytError;
    fn try_from(rows: Vec<Vec<usize>>) -> Result<Self, SytError> {
        StandardYoungTableau::new(rows)
    }
}

impl From<StandardYoungTableau> for Vec<Vec<usize>> {
    fn from(t: StandardYoungTableau) -> Self {
        t.rows
    }
}

impl StandardYoungTableau {
    pub fn new(mut rows: Vec<Vec<usize>>) -> Result<Self, SytError> {
        while rows.last().is_some_and(|r| r.is_empty()) {
            rows.pop();
        }
        if rows.windows(2).any(|w| w[0].len() < w[1].len()) {
            return Err(SytError::BadShape);
        }
        let size: usize = rows.iter().map(Vec::len).sum();
        let mut seen = vec![false; size + 1];
        for &e in rows.iter().flatten() {
            if e == 0 || e > size || seen[e] {
                return Err(SytError::BadEntries(size));
            }
            seen[e] = true;
        }
        for (r, row) in rows.iter().enumerate() {
            for (c, &e) in row.iter().enumerate() {
                if c > 0 && row[c - 1] >= e {
                    return Err(SytError::NotIncreasing);
                }
                if r > 0 && rows[r - 1][c] >= e {
                    return Err(SytError::NotIncreasing);
                }
            }
        }
        Ok(StandardYoungTableau { rows })
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn shape(&self) -> Vec<usize> {
        self.rows.iter().map(Vec::len).collect()
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    /// Row (1-based) holding each entry, indexed by entry.
    fn row_of_entries(&self) -> Vec<usize> {
        let mut row_of = vec![0; self.size() + 1];
        for (r, row) in self.rows.iter().enumerate() {
            for &e in row {
                row_of[e] = r + 1;
            }
        }
        row_of
    }

    /// The chain of shapes `∅ ⊂ λ¹ ⊂ … ⊂ λᵏ` viewed as a tableau with `n` parts.
    pub fn to_got(&self, n: usize) -> Result<Got, SytError> {
        if self.rows.len() > n {
            return Err(SytError::TooManyRows(n));
        }
        let row_of = self.row_of_entries();
        let steps: Vec<Step> = row_of[1..].iter().map(|&r| Step::add(r)).collect();
        Ok(Got::from_steps(n, &steps).expect("standard tableaux give legal steps"))
    }

    /// Inverse of [`StandardYoungTableau::to_got`]; fails when a step deletes a box.
    pub fn from_got(got: &Got) -> Result<Self, SytError> {
        let mut rows: Vec<Vec<usize>> = vec![Vec::new(); got.n()];
        for i in 1..=got.k() {
            let step = got.step(i);
            if step.dir != Direction::Add || got.shape(i - 1).part(step.row) < 0 {
                return Err(SytError::NotStandard(i));
            }
            rows[step.row - 1].push(i);
        }
        StandardYoungTableau::new(rows)
    }

    /// All standard tableaux of the given shape, in lexicographic order of
    /// their row words.
    pub fn all_of_shape(shape: &[usize]) -> Vec<Self> {
        let size: usize = shape.iter().sum();
        let mut out = Vec::new();
        let mut rows: Vec<Vec<usize>> = vec![Vec::new(); shape.len()];
        fn rec(
            next: usize,
            size: usize,
            shape: &[usize],
            rows: &mut Vec<Vec<usize>>,
            out: &mut Vec<StandardYoungTableau>,
        ) {
            if next > size {
                out.push(StandardYoungTableau { rows: rows.clone() });
                return;
            }
            for r in 0..shape.len() {
                let len = rows[r].len();
                if len < shape[r] && (r == 0 || rows[r - 1].len() > len) {
                    rows[r].push(next);
                    rec(next + 1, size, shape, rows, out);
                    rows[r].pop();
                }
            }
        }
        rec(1, size, shape, &mut rows, &mut out);
        out
    }

    /// Jeu de taquin promotion: remove 1, slide the hole out, fill with
    /// `k+1`, then decrement every entry.
    pub fn promote(&self) -> Self {
        let k = self.size();
        if k == 0 {
            return self.clone();
        }
        let mut grid: Vec<Vec<Option<usize>>> = self
            .rows
            .iter()
            .map(|r| r.iter().map(|&e| Some(e)).collect())
            .collect();
        let mut pos = vec![(0usize, 0usize); k + 1];
        for (r, row) in self.rows.iter().enumerate() {
            for (c, &e) in row.iter().enumerate() {
                pos[e] = (r, c);
            }
        }
        let mut hole = pos[1];
        grid[hole.0][hole.1] = None;
        for (i, p) in pos.iter_mut().enumerate().skip(2) {
            let (r, c) = *p;
            if (r == hole.0 + 1 && c == hole.1) || (r == hole.0 && c == hole.1 + 1) {
                grid[hole.0][hole.1] = Some(i);
                grid[r][c] = None;
                *p = hole;
                hole = (r, c);
            }
        }
        grid[hole.0][hole.1] = Some(k + 1);
        let rows = grid
            .into_iter()
            .map(|row| row.into_iter().map(|e| e.unwrap() - 1).collect())
            .collect();
        StandardYoungTableau { rows }
    }
}

impl fmt::Display for StandardYoungTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(|e| e.to_string()).collect();
            writeln!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

/// Classical promotion, the four-step jeu de taquin procedure.
pub fn classical_promotion(t: &StandardYoungTableau) -> StandardYoungTableau {
    t.promote()
}

/// Two-row growth diagram of classical promotion: `top` holds `λ⁰..λᵏ`,
/// `bottom` holds `μ⁰..μᵏ`. Partitions are padded to the row count of the input.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassicalGrowth {
    pub top: Vec<Vec<usize>>,
    pub bottom: Vec<Vec<usize>>,
}

impl ClassicalGrowth {
    /// Tableau read off `(μ⁰,…,μˢ⁻¹,λˢ,…,λᵏ)`: `None` marks the bullet.
    pub fn reading(&self, s: usize) -> Vec<Vec<Option<usize>>> {
        let k = self.top.len() - 1;
        assert!((1..=k).contains(&s), "step out of range");
        let rows = self.top[k].len();
        let mut grid: Vec<Vec<Option<usize>>> =
            (0..rows).map(|r| vec![None; self.top[k][r]]).collect();
        let added_row = |a: &[usize], b: &[usize]| (0..rows).find(|&r| b[r] > a[r]).unwrap();
        for j in 1..s {
            let r = added_row(&self.bottom[j - 1], &self.bottom[j]);
            grid[r][self.bottom[j - 1][r]] = Some(j + 1);
        }
        for j in (s + 1)..=k {
            let r = added_row(&self.top[j - 1], &self.top[j]);
            grid[r][self.top[j - 1][r]] = Some(j);
        }
        grid
    }
}

/// Classical promotion via local growth rules; returns the promoted tableau
/// and the full diagram.
pub fn classical_promotion_growth(t: &StandardYoungTableau) -> (StandardYoungTableau, ClassicalGrowth) {
    let rows = t.rows.len();
    let k = t.size();
    let row_of = t.row_of_entries();
    let mut top = vec![vec![0usize; rows]];
    for i in 1..=k {
        let mut next = top[i - 1].clone();
        next[row_of[i] - 1] += 1;
        top.push(next);
    }
    let mut bottom = vec![vec![0usize; rows]];
    for s in 1..k {
        let mu = &bottom[s - 1];
        let j = row_of[s + 1] - 1;
        let addable = j == 0 || mu[j - 1] > mu[j];
        let next = if addable {
            let mut m = mu.clone();
            m[j] += 1;
            m
        } else {
            top[s].clone()
        };
        bottom.push(next);
    }
    if k > 0 {
        bottom.push(top[k].clone());
    }
    let mut out_rows = vec![Vec::new(); rows];
    for i in 1..=k {
        let r = (0..rows).find(|&r| bottom[i][r] > bottom[i - 1][r]).unwrap();
        out_rows[r].push(i);
    }
    let promoted = StandardYoungTableau::new(out_rows).expect("growth rules keep standardness");
    (promoted, ClassicalGrowth { top, bottom })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn syt(rows: &[&[usize]]) -> StandardYoungTableau {
        StandardYoungTableau::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    #[test]
    fn promotion_of_three_by_three() {
        let t = syt(&[&[1, 2, 6], &[3, 5, 7], &[4, 8, 9]]);
        assert_eq!(t.promote(), syt(&[&[1, 4, 5], &[2, 6, 8], &[3, 7, 9]]));
        let u = syt(&[&[1, 2, 4], &[3, 6, 7], &[5, 8, 9]]);
        assert_eq!(u.promote(), syt(&[&[1, 3, 6], &[2, 5, 8], &[4, 7, 9]]));
    }

    #[test]
    fn single_box_and_empty() {
        let t = syt(&[&[1]]);
        assert_eq!(t.promote(), t);
        let e = StandardYoungTableau::new(vec![]).unwrap();
        assert_eq!(e.promote(), e);
    }

    #[test]
    fn growth_diagram_bottom_row() {
        let t = syt(&[&[1, 2, 6], &[3, 5, 7], &[4, 8, 9]]);
        let (p, g) = classical_promotion_growth(&t);
        assert_eq!(p, t.promote());
        let expected: Vec<Vec<usize>> = vec![
            vec![0, 0, 0],
            vec![1, 0, 0],
            vec![1, 1, 0],
            vec![1, 1, 1],
            vec![2, 1, 1],
            vec![3, 1, 1],
            vec![3, 2, 1],
            vec![3, 2, 2],
            vec![3, 3, 2],
            vec![3, 3, 3],
        ];
        assert_eq!(g.bottom, expected);
        let reading = g.reading(5);
        assert_eq!(
            reading,
            vec![
                vec![Some(2), Some(5), Some(6)],
                vec![Some(3), None, Some(7)],
                vec![Some(4), Some(8), Some(9)],
            ]
        );
    }

    #[test]
    fn rejects_bad_tableaux() {
        assert_eq!(
            StandardYoungTableau::new(vec![vec![1], vec![2, 3]]),
            Err(SytError::BadShape)
        );
        assert_eq!(
            StandardYoungTableau::new(vec![vec![2, 1]]),
            Err(SytError::NotIncreasing)
        );
        assert_eq!(
            StandardYoungTableau::new(vec![vec![1, 3]]),
            Err(SytError::BadEntries(2))
        );
    }

    #[test]
    fn got_round_trip() {
        let t = syt(&[&[1, 2, 6], &[3, 5, 7], &[4, 8, 9]]);
        let got = t.to_got(4).unwrap();
        assert_eq!(got.n(), 4);
        assert_eq!(StandardYoungTableau::from_got(&got).unwrap(), t);
        assert!(t.to_got(2).is_err());
    }

    #[test]
    fn all_of_shape_counts() {
        assert_eq!(StandardYoungTableau::all_of_shape(&[3, 3, 3]).len(), 42);
        assert_eq!(StandardYoungTableau::all_of_shape(&[2, 2, 2]).len(), 5);
        assert_eq!(StandardYoungTableau::all_of_shape(&[3, 3]).len(), 5);
    }
}
