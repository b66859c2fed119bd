use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::got::Got;
use super::partition::{Direction, GeneralizedPartition, Step};

/// A box position. Rows are 1-based from the top; columns skip zero, with
/// negative (red) columns to the left of the axis.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Cell {
    pub row: usize,
    pub col: i32,
}

impl Cell {
    pub fn new(row: usize, col: i32) -> Self {
        debug_assert!(col != 0);
        Cell { row, col }
    }

    pub fn is_red(self) -> bool {
        self.col < 0
    }

    pub fn right(self) -> Cell {
        Cell::new(self.row, if self.col == -1 { 1 } else { self.col + 1 })
    }

    pub fn left(self) -> Cell {
        Cell::new(self.row, if self.col == 1 { -1 } else { self.col - 1 })
    }

    pub fn below(self) -> Cell {
        Cell::new(self.row + 1, self.col)
    }

    pub fn above(self) -> Option<Cell> {
        (self.row > 1).then(|| Cell::new(self.row - 1, self.col))
    }
}

/// Entry `i` (box added at step `i`) or `i′` (box deleted at step `i`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Label {
    #[serde(rename = "i")]
    pub index: usize,
    pub primed: bool,
}

impl Label {
    pub fn new(index: usize, primed: bool) -> Self {
        Label { index, primed }
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.index, if self.primed { "'" } else { "" })
    }
}

/// The sliding marker `•` / `•′` of a promotion in progress. `after` is the
/// largest index that sorts before it inside a cell.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Bullet {
    pub cell: Cell,
    pub primed: bool,
    pub after: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FillingError {
    #[error("label {0} is missing")]
    MissingLabel(usize),
    #[error("label {0} occurs more than once")]
    DuplicateLabel(usize),
    #[error("label {0} lies outside rows 1..=n")]
    RowOutOfRange(usize),
    #[error("label {0} does not describe a legal single-box step")]
    IllegalStep(usize),
    #[error("label {index} sits in column {found}, but the step touches column {expected}")]
    ColumnMismatch { index: usize, expected: i32, found: i32 },
    #[error("filling still carries a bullet")]
    HasBullet,
}

/// Set-valued filling of a generalized oscillating tableau.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SetValuedFilling {
    n: usize,
    k: usize,
    cells: BTreeMap<Cell, Vec<Label>>,
    bullet: Option<Bullet>,
}

impl SetValuedFilling {
    pub fn new(n: usize, k: usize) -> Self {
        SetValuedFilling {
            n,
            k,
            cells: BTreeMap::new(),
            bullet: None,
        }
    }

    /// Records each step of `got` in the box it adds or deletes.
    pub fn from_got(got: &Got) -> Self {
        let mut out = SetValuedFilling::new(got.n(), got.k());
        for i in 1..=got.k() {
            let step = got.step(i);
            out.insert_step(got.shape(i - 1), step, i);
        }
        out
    }

    /// Places label `index` for `step` applied to `before`.
    pub(crate) fn insert_step(&mut self, before: &GeneralizedPartition, step: Step, index: usize) {
        let cell = Cell::new(step.row, before.box_column(step));
        self.insert(cell, Label::new(index, step.dir == Direction::Remove));
    }

    pub fn insert(&mut self, cell: Cell, label: Label) {
        let labels = self.cells.entry(cell).or_default();
        let pos = labels.partition_point(|l| l < &label);
        labels.insert(pos, label);
    }

    pub(crate) fn set_bullet(&mut self, bullet: Bullet) {
        self.cells.entry(bullet.cell).or_default();
        self.bullet = Some(bullet);
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn bullet(&self) -> Option<Bullet> {
        self.bullet
    }

    pub fn cells(&self) -> impl Iterator<Item = (Cell, &[Label])> {
        self.cells.iter().map(|(c, l)| (*c, l.as_slice()))
    }

    pub fn labels_at(&self, cell: Cell) -> &[Label] {
        self.cells.get(&cell).map(|v| v.as_slice()).unwrap_or(&[])
    }

    /// Decodes back into the shape sequence, checking that each label sits in
    /// the box its step touches.
    pub fn to_got(&self) -> Result<Got, FillingError> {
        if self.bullet.is_some() {
            return Err(FillingError::HasBullet);
        }
        let mut by_index: Vec<Option<(Cell, bool)>> = vec![None; self.k + 1];
        for (cell, labels) in &self.cells {
            for l in labels {
                if l.index == 0 || l.index > self.k {
                    return Err(FillingError::MissingLabel(l.index));
                }
                if by_index[l.index].replace((*cell, l.primed)).is_some() {
                    return Err(FillingError::DuplicateLabel(l.index));
                }
            }
        }
        let mut shapes = vec![GeneralizedPartition::empty(self.n)];
        for (i, slot) in by_index.iter().enumerate().skip(1) {
            let (cell, primed) = slot.ok_or(FillingError::MissingLabel(i))?;
            if cell.row == 0 || cell.row > self.n {
                return Err(FillingError::RowOutOfRange(i));
            }
            let step = if primed {
                Step::remove(cell.row)
            } else {
                Step::add(cell.row)
            };
            let prev = &shapes[i - 1];
            let next = prev.apply(step).ok_or(FillingError::IllegalStep(i))?;
            let expected = prev.box_column(step);
            if expected != cell.col {
                return Err(FillingError::ColumnMismatch {
                    index: i,
                    expected,
                    found: cell.col,
                });
            }
            shapes.push(next);
        }
        Ok(Got::from_shapes_unchecked(self.n, shapes))
    }

    /// Number of white boxes and of red boxes in each row, top to bottom.
    pub fn row_sizes(&self) -> (Vec<usize>, Vec<usize>) {
        let mut pos = vec![0; self.n];
        let mut neg = vec![0; self.n];
        for cell in self.cells.keys() {
            if cell.row == 0 || cell.row > self.n {
                continue;
            }
            if cell.is_red() {
                neg[cell.row - 1] += 1;
            } else {
                pos[cell.row - 1] += 1;
            }
        }
        (pos, neg)
    }

    /// Whether the white row sizes weakly decrease and the red row sizes
    /// weakly increase from top to bottom.
    pub fn has_valid_row_profile(&self) -> bool {
        let (pos, neg) = self.row_sizes();
        pos.windows(2).all(|w| w[0] >= w[1]) && neg.windows(2).all(|w| w[0] <= w[1])
    }

    /// Primes are redundant: inside a white box the entries alternate
    /// unprimed/primed starting unprimed, inside a red box starting primed.
    pub fn primes_match_parity(&self) -> bool {
        self.cells.iter().all(|(cell, labels)| {
            labels.iter().enumerate().all(|(pos, l)| {
                let odd = pos % 2 == 0;
                l.primed == (odd == cell.is_red())
            })
        })
    }

    /// Wire form: one object per cell, ordered by row then column.
    pub fn to_json(&self) -> Vec<CellJson> {
        self.cells
            .iter()
            .map(|(cell, labels)| CellJson {
                row: cell.row,
                col: cell.col,
                labels: labels.clone(),
                red: cell.is_red(),
                bullet: self
                    .bullet
                    .filter(|b| b.cell == *cell)
                    .map(|b| BulletJson { primed: b.primed }),
            })
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CellJson {
    pub row: usize,
    pub col: i32,
    pub labels: Vec<Label>,
    pub red: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub bullet: Option<BulletJson>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct BulletJson {
    pub primed: bool,
}

impl fmt::Display for SetValuedFilling {
    /// One line per row, cells separated by spaces, red cells in brackets.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in 1..=self.n {
            let mut first = true;
            for (cell, labels) in self.cells.range(Cell::new(row, i32::MIN)..Cell::new(row + 1, i32::MIN)) {
                if !first {
                    write!(f, " ")?;
                }
                first = false;
                let mut text = String::new();
                let mut bullet_done = false;
                let bullet = self.bullet.filter(|b| b.cell == *cell);
                for l in labels {
                    if let Some(b) = bullet {
                        if !bullet_done && l.index > b.after {
                            text.push_str(if b.primed { "•'" } else { "•" });
                            bullet_done = true;
                        }
                    }
                    text.push_str(&l.to_string());
                }
                if let (Some(b), false) = (bullet, bullet_done) {
                    text.push_str(if b.primed { "•'" } else { "•" });
                }
                if cell.is_red() {
                    write!(f, "[{text}]")?;
                } else {
                    write!(f, "{{{text}}}")?;
                }
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn labels(spec: &[(usize, bool)]) -> Vec<Label> {
        spec.iter().map(|&(i, p)| Label::new(i, p)).collect()
    }

    #[test]
    fn introduction_filling() {
        let got = Got::validate(
            &[vec![0, 0], vec![1, 0], vec![1, -1], vec![2, -1], vec![2, 0], vec![1, 0]],
            2,
        )
        .unwrap();
        let f = SetValuedFilling::from_got(&got);
        assert_eq!(f.labels_at(Cell::new(1, 1)), labels(&[(1, false)]).as_slice());
        assert_eq!(
            f.labels_at(Cell::new(1, 2)),
            labels(&[(3, false), (5, true)]).as_slice()
        );
        assert_eq!(
            f.labels_at(Cell::new(2, -1)),
            labels(&[(2, true), (4, false)]).as_slice()
        );
        assert_eq!(f.to_got().unwrap(), got);
    }

    #[test]
    fn empty_filling() {
        let f = SetValuedFilling::from_got(&Got::empty(3));
        assert_eq!(f.cells().count(), 0);
        assert_eq!(f.to_got().unwrap(), Got::empty(3));
    }

    #[test]
    fn decode_rejects_misplaced_label() {
        let mut f = SetValuedFilling::new(2, 1);
        f.insert(Cell::new(1, 2), Label::new(1, false));
        assert!(matches!(
            f.to_got(),
            Err(FillingError::ColumnMismatch { index: 1, expected: 1, found: 2 })
        ));
        let mut g = SetValuedFilling::new(2, 1);
        g.insert(Cell::new(2, 1), Label::new(1, false));
        assert_eq!(g.to_got(), Err(FillingError::IllegalStep(1)));
        let h = SetValuedFilling::new(2, 1);
        assert_eq!(h.to_got(), Err(FillingError::MissingLabel(1)));
    }

    #[test]
    fn cell_neighbours_skip_the_axis() {
        let c = Cell::new(2, 1);
        assert_eq!(c.left(), Cell::new(2, -1));
        assert_eq!(c.left().right(), c);
        assert_eq!(c.above(), Some(Cell::new(1, 1)));
        assert_eq!(Cell::new(1, -3).above(), None);
    }
}
