//! Generalized oscillating promotion on set-valued fillings.
//!
//! This is the sliding description: the entry `1` (or `1′`) becomes a bullet,
//! entries `2, 3, …, k` are visited in order and either swap with the bullet
//! or travel with it to a neighbouring column, and the bullet finally becomes
//! `k+1` (or `(k+1)′`) before every entry is decremented. It does not consult
//! the growth rules.

use std::collections::BTreeMap;

use thiserror::Error;

use super::filling::{Bullet, Cell, FillingError, Label, SetValuedFilling};
use super::got::Got;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TableauPromotionError {
    #[error("slid filling does not decode to a tableau: {0}")]
    Decode(#[from] FillingError),
}

struct Sliding<'a> {
    got: &'a Got,
    cells: BTreeMap<Cell, Vec<Label>>,
    pos: Vec<(Cell, bool)>,
    bullet: Cell,
    primed: bool,
}

impl<'a> Sliding<'a> {
    fn new(got: &'a Got) -> Self {
        let filling = SetValuedFilling::from_got(got);
        let mut cells = BTreeMap::new();
        let mut pos = vec![(Cell::new(1, 1), false); got.k() + 1];
        for (cell, labels) in filling.cells() {
            for l in labels {
                pos[l.index] = (cell, l.primed);
            }
            cells.insert(cell, labels.to_vec());
        }
        let (c1, p1) = pos[1];
        remove_label(&mut cells, c1, Label::new(1, p1));
        Sliding {
            got,
            cells,
            pos,
            bullet: c1,
            primed: p1,
        }
    }

    fn relocate(&mut self, i: usize, to: Cell) {
        let (from, primed) = self.pos[i];
        remove_label(&mut self.cells, from, Label::new(i, primed));
        insert_label(&mut self.cells, to, Label::new(i, primed));
        self.pos[i] = (to, primed);
    }

    /// Bottommost (`down`) or topmost row of `λⁱ` whose part equals that of `row`.
    fn extreme_equal_row(&self, i: usize, row: usize, down: bool) -> usize {
        let lam = self.got.shape(i);
        let size = lam.part(row);
        let rows = 1..=lam.n();
        let mut same = rows.filter(|&r| lam.part(r) == size);
        if down {
            same.next_back().unwrap()
        } else {
            same.next().unwrap()
        }
    }

    fn visit(&mut self, i: usize) {
        let (cell, label_primed) = self.pos[i];
        let b = self.bullet;
        let n = self.got.n();
        let lam = self.got.shape(i);
        if !self.primed {
            if !label_primed && (cell == b.below() || cell == b.right()) {
                self.relocate(i, b);
                self.bullet = cell;
            } else if label_primed && cell == b {
                let r = b.row;
                let target = if r == n || lam.part(r) != lam.part(r + 1) {
                    b.left()
                } else {
                    Cell::new(self.extreme_equal_row(i, r, true), b.col).left()
                };
                self.relocate(i, target);
                self.bullet = target;
            }
        } else if label_primed && (Some(cell) == b.above() || cell == b.left()) {
            self.relocate(i, b);
            self.bullet = cell;
        } else if !label_primed && cell == b {
            let r = b.row;
            let target = if r == 1 || lam.part(r) != lam.part(r - 1) {
                b.right()
            } else {
                Cell::new(self.extreme_equal_row(i, r, false), b.col).right()
            };
            self.relocate(i, target);
            self.bullet = target;
        }
    }

    fn snapshot(&self, after: usize) -> SetValuedFilling {
        let mut f = SetValuedFilling::new(self.got.n(), self.got.k());
        for (cell, labels) in &self.cells {
            for l in labels {
                f.insert(*cell, *l);
            }
        }
        f.set_bullet(Bullet {
            cell: self.bullet,
            primed: self.primed,
            after,
        });
        f
    }

    fn finish(mut self) -> SetValuedFilling {
        let k = self.got.k();
        insert_label(&mut self.cells, self.bullet, Label::new(k + 1, self.primed));
        let mut f = SetValuedFilling::new(self.got.n(), k);
        for (cell, labels) in &self.cells {
            for l in labels {
                f.insert(*cell, Label::new(l.index - 1, l.primed));
            }
        }
        f
    }
}

fn remove_label(cells: &mut BTreeMap<Cell, Vec<Label>>, cell: Cell, label: Label) {
    let labels = cells.get_mut(&cell).expect("label present");
    labels.retain(|l| *l != label);
    if labels.is_empty() {
        cells.remove(&cell);
    }
}

fn insert_label(cells: &mut BTreeMap<Cell, Vec<Label>>, cell: Cell, label: Label) {
    let labels = cells.entry(cell).or_default();
    let at = labels.partition_point(|l| l < &label);
    labels.insert(at, label);
}

/// Promotion computed on the set-valued filling. Length 0 is the identity.
pub fn promote_tableau(got: &Got) -> Result<Got, TableauPromotionError> {
    Ok(promote_tableau_filling(got).to_got()?)
}

/// The promoted filling, before decoding back into shapes.
pub fn promote_tableau_filling(got: &Got) -> SetValuedFilling {
    if got.k() == 0 {
        return SetValuedFilling::from_got(got);
    }
    let mut sliding = Sliding::new(got);
    for i in 2..=got.k() {
        sliding.visit(i);
    }
    sliding.finish()
}

/// Intermediate fillings: entry `s-1` is the state once entries `2..=s` have
/// been visited, with the bullet still in place.
pub fn promote_tableau_snapshots(got: &Got) -> Vec<SetValuedFilling> {
    if got.k() == 0 {
        return Vec::new();
    }
    let mut sliding = Sliding::new(got);
    let mut out = vec![sliding.snapshot(1)];
    for i in 2..=got.k() {
        sliding.visit(i);
        out.push(sliding.snapshot(i));
    }
    out
}
