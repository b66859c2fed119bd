use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::signature::{SignatureStateString, State};
use crate::tableaux::StandardYoungTableau;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WordError {
    #[error("word does not have equally many 1, 0 and -1 entries")]
    NotBalanced,
    #[error("prefix of length {0} has fewer 1s than 0s or fewer 0s than -1s")]
    NotLatticeWord(usize),
    #[error("tableau is not a rectangle with three rows")]
    NotThreeRowRectangle,
    #[error("unexpected character {0:?} in word")]
    BadCharacter(char),
    #[error("string has a white entry")]
    NotAllBlack,
}

/// States of an all-black boundary, read clockwise. Text form uses `1`, `0`, `m`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Word {
    states: Vec<State>,
}

impl Word {
    pub fn new(states: Vec<State>) -> Self {
        Word { states }
    }

    pub fn from_values(values: &[i8]) -> Self {
        Word {
            states: values
                .iter()
                .map(|&v| State::try_from(v).expect("state in {1,0,-1}"))
                .collect(),
        }
    }

    pub fn states(&self) -> &[State] {
        &self.states
    }

    pub fn values(&self) -> Vec<i8> {
        self.states.iter().map(|s| s.value()).collect()
    }

    pub fn len(&self) -> usize {
        self.states.len()
    }

    pub fn is_empty(&self) -> bool {
        self.states.is_empty()
    }

    pub fn to_signature_string(&self) -> SignatureStateString {
        SignatureStateString::all_black(&self.states)
    }

    pub fn from_signature_string(s: &SignatureStateString) -> Result<Self, WordError> {
        if !s.is_all_black() {
            return Err(WordError::NotAllBlack);
        }
        Ok(Word::new(s.states()))
    }

    /// `(#1, #0, #-1)` over the first `i` letters.
    fn prefix_counts(&self, i: usize) -> [usize; 3] {
        let mut c = [0; 3];
        for s in &self.states[..i] {
            c[s.row() - 1] += 1;
        }
        c
    }

    /// Checks the lattice condition on every prefix and equal totals.
    pub fn check_lattice(&self) -> Result<(), WordError> {
        let mut c = [0usize; 3];
        for (i, s) in self.states.iter().enumerate() {
            c[s.row() - 1] += 1;
            if c[0] < c[1] || c[1] < c[2] {
                return Err(WordError::NotLatticeWord(i + 1));
            }
        }
        if c[0] != c[1] || c[1] != c[2] {
            return Err(WordError::NotBalanced);
        }
        Ok(())
    }

    /// The first returns located by counting letters rather than by walking a
    /// path: `a` is the first prefix with as many `1`s as `0`s, `b` the first
    /// later prefix with as many `0`s as `-1`s.
    pub fn counting_return_indices(&self) -> Option<(usize, usize)> {
        let a = (1..=self.len()).find(|&i| {
            let c = self.prefix_counts(i);
            c[0] == c[1]
        })?;
        let b = (a + 1..=self.len()).find(|&i| {
            let c = self.prefix_counts(i);
            c[1] == c[2]
        })?;
        Some((a, b))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.states {
            write!(f, "{}", s.to_char())?;
        }
        Ok(())
    }
}

impl FromStr for Word {
    type Err = WordError;

    fn from_str(text: &str) -> Result<Self, WordError> {
        text.chars()
            .filter(|c| !c.is_whitespace() && *c != ',')
            .map(|c| State::from_char(c).ok_or(WordError::BadCharacter(c)))
            .collect::<Result<Vec<_>, _>>()
            .map(Word::new)
    }
}

/// Row `r` of the tableau lists the positions of the `r`-th state (`1`, `0`, `-1`).
pub fn syt_from_word(w: &Word) -> Result<StandardYoungTableau, WordError> {
    w.check_lattice()?;
    let mut rows = vec![Vec::new(); 3];
    for (i, s) in w.states().iter().enumerate() {
        rows[s.row() - 1].push(i + 1);
    }
    Ok(StandardYoungTableau::new(rows).expect("lattice words give standard tableaux"))
}

pub fn word_from_syt(t: &StandardYoungTableau) -> Result<Word, WordError> {
    let shape = t.shape();
    if t.size() == 0 {
        return Ok(Word::default());
    }
    if shape.len() != 3 || shape[0] != shape[2] {
        return Err(WordError::NotThreeRowRectangle);
    }
    let mut states = vec![State::Plus; t.size()];
    for (r, row) in t.rows().iter().enumerate() {
        for &e in row {
            states[e - 1] = State::from_row(r + 1).unwrap();
        }
    }
    Ok(Word::new(states))
}
