use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Boundary state of a web vertex: `1`, `0` or `-1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "i8", into = "i8")]
pub enum State {
    Minus,
    Zero,
    Plus,
}

impl State {
    pub const ALL: [State; 3] = [State::Plus, State::Zero, State::Minus];

    pub fn value(self) -> i8 {
        match self {
            State::Plus => 1,
            State::Zero => 0,
            State::Minus => -1,
        }
    }

    /// Row of a three-part shape that this state moves: `1 → 1`, `0 → 2`, `-1 → 3`.
    pub fn row(self) -> usize {
        match self {
            State::Plus => 1,
            State::Zero => 2,
            State::Minus => 3,
        }
    }

    pub fn from_row(row: usize) -> Option<State> {
        match row {
            1 => Some(State::Plus),
            2 => Some(State::Zero),
            3 => Some(State::Minus),
            _ => None,
        }
    }

    /// Compact character: `1`, `0`, or `m` for `-1`.
    pub fn to_char(self) -> char {
        match self {
            State::Plus => '1',
            State::Zero => '0',
            State::Minus => 'm',
        }
    }

    pub fn from_char(c: char) -> Option<State> {
        match c {
            '1' => Some(State::Plus),
            '0' => Some(State::Zero),
            'm' => Some(State::Minus),
            _ => None,
        }
    }
}

impl TryFrom<i8> for State {
    type Error = String;

    fn try_from(v: i8) -> Result<Self, String> {
        match v {
            1 => Ok(State::Plus),
            0 => Ok(State::Zero),
            -1 => Ok(State::Minus),
            _ => Err(format!("state must be 1, 0 or -1, got {v}")),
        }
    }
}

impl From<State> for i8 {
    fn from(s: State) -> i8 {
        s.value()
    }
}

impl fmt::Display for State {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Color {
    B,
    W,
}

impl Color {
    pub fn opposite(self) -> Color {
        match self {
            Color::B => Color::W,
            Color::W => Color::B,
        }
    }
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Color::B => "B",
            Color::W => "W",
        })
    }
}

/// One boundary vertex: its state and its color.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Entry {
    pub state: State,
    pub color: Color,
}

impl Entry {
    pub fn new(state: State, color: Color) -> Self {
        Entry { state, color }
    }

    pub fn black(state: State) -> Self {
        Entry::new(state, Color::B)
    }

    pub fn white(state: State) -> Self {
        Entry::new(state, Color::W)
    }

    /// All six letters, in the order used by the enumerators.
    pub fn alphabet() -> [Entry; 6] {
        [
            Entry::black(State::Plus),
            Entry::black(State::Zero),
            Entry::black(State::Minus),
            Entry::white(State::Plus),
            Entry::white(State::Zero),
            Entry::white(State::Minus),
        ]
    }
}

impl fmt::Display for Entry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.state.to_char(), self.color)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseStringError {
    #[error("expected a state character (1, 0, m) at position {0}")]
    BadState(usize),
    #[error("expected a color character (B, W) at position {0}")]
    BadColor(usize),
}

/// Boundary data of a web read clockwise from the leftmost vertex.
///
/// JSON form is `[{"state":1,"color":"B"},…]`; the compact text form
/// concatenates state and color characters, e.g. `1B0BmB`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct SignatureStateString {
    entries: Vec<Entry>,
}

impl SignatureStateString {
    pub fn new(entries: Vec<Entry>) -> Self {
        SignatureStateString { entries }
    }

    /// Builds a string from `(state, color)` pairs given as integers and `'B'`/`'W'`.
    pub fn from_pairs(pairs: &[(i8, char)]) -> Self {
        let entries = pairs
            .iter()
            .map(|&(s, c)| {
                let state = State::try_from(s).expect("state in {1,0,-1}");
                let color = match c {
                    'B' => Color::B,
                    'W' => Color::W,
                    _ => panic!("color must be 'B' or 'W'"),
                };
                Entry::new(state, color)
            })
            .collect();
        SignatureStateString { entries }
    }

    pub fn all_black(states: &[State]) -> Self {
        SignatureStateString {
            entries: states.iter().map(|&s| Entry::black(s)).collect(),
        }
    }

    pub fn entries(&self) -> &[Entry] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Entry at 1-based position `i`.
    pub fn at(&self, i: usize) -> Entry {
        self.entries[i - 1]
    }

    pub fn states(&self) -> Vec<State> {
        self.entries.iter().map(|e| e.state).collect()
    }

    pub fn signature(&self) -> Vec<Color> {
        self.entries.iter().map(|e| e.color).collect()
    }

    pub fn is_all_black(&self) -> bool {
        self.entries.iter().all(|e| e.color == Color::B)
    }

    pub fn to_compact(&self) -> String {
        self.to_string()
    }
}

impl From<Vec<Entry>> for SignatureStateString {
    fn from(entries: Vec<Entry>) -> Self {
        SignatureStateString { entries }
    }
}

impl fmt::Display for SignatureStateString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for e in &self.entries {
            write!(f, "{e}")?;
        }
        Ok(())
    }
}

impl FromStr for SignatureStateString {
    type Err = ParseStringError;

    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let chars: Vec<char> = text.chars().filter(|c| !c.is_whitespace() && *c != ',').collect();
        let mut entries = Vec::with_capacity(chars.len() / 2);
        for (pos, pair) in chars.chunks(2).enumerate() {
            let state = State::from_char(pair[0]).ok_or(ParseStringError::BadState(2 * pos))?;
            let color = match pair.get(1) {
                Some('B') => Color::B,
                Some('W') => Color::W,
                _ => return Err(ParseStringError::BadColor(2 * pos + 1)),
            };
            entries.push(Entry::new(state, color));
        }
        Ok(SignatureStateString { entries })
    }
}
