//! Depth-first enumerators for dominant strings and generalized oscillating tableaux.

use crate::strings::path::{at_origin, in_chamber, step_point};
use crate::strings::{Entry, Point, SignatureStateString};
use crate::tableaux::{GeneralizedPartition, Got, Step};

/// Fewest steps needed to bring `p` back to equal counts.
fn distance_home(p: Point) -> usize {
    let a = (p[0] - p[1]) as usize;
    let b = (p[1] - p[2]) as usize;
    a.max(b)
}

/// Dominant strings of a fixed length, in lexicographic order over
/// [`Entry::alphabet`].
pub struct DominantStrings {
    k: usize,
    prefix: Vec<Entry>,
    points: Vec<Point>,
    cursor: Vec<usize>,
    done: bool,
}

impl DominantStrings {
    pub fn new(k: usize) -> Self {
        DominantStrings::with_prefix(k, &[])
    }

    /// Only the strings beginning with `prefix`; used to split work.
    pub fn with_prefix(k: usize, prefix: &[Entry]) -> Self {
        let mut p = [0; 3];
        let mut ok = prefix.len() <= k;
        for &e in prefix {
            p = step_point(p, e);
            ok &= in_chamber(p);
        }
        ok &= distance_home(p) <= k.saturating_sub(prefix.len());
        DominantStrings {
            k,
            prefix: prefix.to_vec(),
            points: vec![p],
            cursor: vec![0],
            done: !ok,
        }
    }

    fn pop(&mut self) {
        if self.points.len() == 1 {
            self.done = true;
        } else {
            self.points.pop();
            self.cursor.pop();
            self.prefix.pop();
        }
    }
}

impl Iterator for DominantStrings {
    type Item = SignatureStateString;

    fn next(&mut self) -> Option<SignatureStateString> {
        let letters = Entry::alphabet();
        while !self.done {
            let p = *self.points.last().unwrap();
            if self.prefix.len() == self.k {
                let out = at_origin(p).then(|| SignatureStateString::new(self.prefix.clone()));
                self.pop();
                if out.is_some() {
                    return out;
                }
                continue;
            }
            let c = self.cursor.last_mut().unwrap();
            if *c == letters.len() {
                self.pop();
                continue;
            }
            let e = letters[*c];
            *c += 1;
            let q = step_point(p, e);
            if in_chamber(q) && distance_home(q) < self.k - self.prefix.len() {
                self.prefix.push(e);
                self.points.push(q);
                self.cursor.push(0);
            }
        }
        None
    }
}

pub fn enumerate_dominant_strings(k: usize) -> DominantStrings {
    DominantStrings::new(k)
}

/// All tableaux in GOT(k, n). Steps are tried as additions to rows `1..=n`,
/// then removals from rows `1..=n`.
pub struct Gots {
    k: usize,
    moves: Vec<Step>,
    shapes: Vec<GeneralizedPartition>,
    cursor: Vec<usize>,
    done: bool,
}

impl Gots {
    pub fn new(k: usize, n: usize) -> Self {
        let moves = (1..=n)
            .map(Step::add)
            .chain((1..=n).map(Step::remove))
            .collect();
        Gots {
            k,
            moves,
            shapes: vec![GeneralizedPartition::empty(n)],
            cursor: vec![0],
            done: n == 0,
        }
    }
}

impl Iterator for Gots {
    type Item = Got;

    fn next(&mut self) -> Option<Got> {
        while !self.done {
            let depth = self.shapes.len() - 1;
            if depth == self.k {
                let got = Got::from_shapes_unchecked(self.shapes[0].n(), self.shapes.clone());
                self.backtrack();
                return Some(got);
            }
            let c = self.cursor[depth];
            if c == self.moves.len() {
                self.backtrack();
                continue;
            }
            self.cursor[depth] += 1;
            if let Some(next) = self.shapes[depth].apply(self.moves[c]) {
                self.shapes.push(next);
                self.cursor.push(0);
            }
        }
        None
    }
}

impl Gots {
    fn backtrack(&mut self) {
        self.shapes.pop();
        self.cursor.pop();
        if self.shapes.is_empty() {
            self.done = true;
        }
    }
}

pub fn enumerate_got(k: usize, n: usize) -> Gots {
    Gots::new(k, n)
}

/// Dominant strings whose colors are exactly `colors`, in decreasing state order.
pub fn dominant_strings_with_signature(colors: &[crate::strings::Color]) -> Vec<SignatureStateString> {
    fn go(
        colors: &[crate::strings::Color],
        p: Point,
        prefix: &mut Vec<Entry>,
        out: &mut Vec<SignatureStateString>,
    ) {
        let depth = prefix.len();
        if depth == colors.len() {
            if at_origin(p) {
                out.push(SignatureStateString::new(prefix.clone()));
            }
            return;
        }
        for state in crate::strings::State::ALL {
            let e = Entry::new(state, colors[depth]);
            let q = step_point(p, e);
            if in_chamber(q) && distance_home(q) < colors.len() - depth {
                prefix.push(e);
                go(colors, q, prefix, out);
                prefix.pop();
            }
        }
    }
    let mut out = Vec::new();
    if colors.is_empty() {
        out.push(SignatureStateString::default());
    } else {
        go(colors, [0; 3], &mut Vec::new(), &mut out);
    }
    out
}
