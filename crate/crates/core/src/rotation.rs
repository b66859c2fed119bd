//! Rotation of boundary strings, and the check that it matches promotion.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::enumerate::{dominant_strings_with_signature, enumerate_dominant_strings};
use crate::strings::{
    first_return_indices, got_from_string, is_dominant, string_from_got, Color, Entry,
    SignatureStateString, State, StringError, Word,
};
use crate::tableaux::{promote_growth, Got, PromotionError};
use crate::web::{cut_positions, grow_web, rotate_web, webs_equal, GrowthError, Web, WebError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RotationError {
    #[error("string is not dominant")]
    NotDominant,
    #[error("word is not all black")]
    NotAllBlack,
    #[error("web contains an identity component; use the search-based rotation")]
    ContainsIdentityWeb,
    #[error("no dominant string grows into the rotated web")]
    NoMatch,
    #[error("{0} dominant strings grow into the rotated web")]
    NotUnique(usize),
    #[error("promotion order {order} does not divide the length {k}")]
    OrderDoesNotDivide { order: usize, k: usize },
    #[error(transparent)]
    Growth(#[from] GrowthError),
    #[error(transparent)]
    Web(#[from] WebError),
    #[error(transparent)]
    Promotion(#[from] PromotionError),
    #[error(transparent)]
    String(#[from] StringError),
}

/// One step of rotation for a dominant all-black word: drop the first letter,
/// write `1` at the first point with as many `1`s as `0`s, `0` at the next
/// point with as many `0`s as `-1`s, and append `-1`.
pub fn rotate_word_allblack(w: &Word) -> Result<Word, RotationError> {
    w.check_lattice().map_err(|_| RotationError::NotDominant)?;
    if w.is_empty() {
        return Ok(w.clone());
    }
    let (a, b) = w.counting_return_indices().ok_or(RotationError::NotDominant)?;
    let mut out: Vec<State> = Vec::with_capacity(w.len());
    for (i, &s) in w.states().iter().enumerate().skip(1) {
        let pos = i + 1;
        out.push(if pos == a {
            State::Plus
        } else if pos == b {
            State::Zero
        } else {
            s
        });
    }
    out.push(State::Minus);
    Ok(Word::new(out))
}

/// The rotated string from the cut endpoints of an identity-free web.
pub fn rotate_string(s: &SignatureStateString, w: &Web) -> Result<SignatureStateString, RotationError> {
    if !is_dominant(s) {
        return Err(RotationError::NotDominant);
    }
    if s.is_empty() {
        return Ok(s.clone());
    }
    if w.contains_identity_component() {
        return Err(RotationError::ContainsIdentityWeb);
    }
    let (a, b) = cut_positions(w)?;
    let reading = w.reading_order();
    let color_at = |pos: usize| w.vertex(reading[pos - 1]).color;
    let cv = color_at(1);
    let at_a = if color_at(a) == cv {
        match cv {
            Color::B => State::Plus,
            Color::W => State::Minus,
        }
    } else {
        State::Zero
    };
    let at_b = if color_at(b) == cv {
        State::Zero
    } else {
        match cv {
            Color::B => State::Minus,
            Color::W => State::Plus,
        }
    };
    let last = match cv {
        Color::B => State::Minus,
        Color::W => State::Plus,
    };
    let mut out = Vec::with_capacity(s.len());
    for pos in 2..=s.len() {
        let e = s.at(pos);
        let state = if pos == a {
            at_a
        } else if pos == b {
            at_b
        } else {
            e.state
        };
        out.push(Entry::new(state, e.color));
    }
    out.push(Entry::new(last, cv));
    Ok(out.into())
}

/// The unique dominant string of the shifted signature that grows into the
/// rotated web, found by search.
///
/// Candidates first vary only the last entry and the two first-return
/// positions; if none of those match, every dominant string of the shifted
/// signature is tried.
pub fn rotate_string_oracle(s: &SignatureStateString) -> Result<SignatureStateString, RotationError> {
    if !is_dominant(s) {
        return Err(RotationError::NotDominant);
    }
    if s.is_empty() {
        return Ok(s.clone());
    }
    let web = grow_web(s)?;
    let target = rotate_web(&web);
    let shifted: Vec<Entry> = s.entries()[1..].iter().copied().chain([s.at(1)]).collect();
    let matches = |cand: &SignatureStateString| -> Result<bool, RotationError> {
        Ok(is_dominant(cand) && webs_equal(&grow_web(cand)?, &target))
    };
    if let Ok((a, b)) = first_return_indices(s) {
        let mut found = Vec::new();
        for x in State::ALL {
            for y in State::ALL {
                for z in State::ALL {
                    let mut cand = shifted.clone();
                    cand[a - 2].state = x;
                    cand[b - 2].state = y;
                    cand[s.len() - 1].state = z;
                    let cand = SignatureStateString::new(cand);
                    if matches(&cand)? {
                        found.push(cand);
                    }
                }
            }
        }
        match found.len() {
            1 => return Ok(found.pop().unwrap()),
            0 => {}
            n => return Err(RotationError::NotUnique(n)),
        }
    }
    let colors: Vec<Color> = shifted.iter().map(|e| e.color).collect();
    let mut found = Vec::new();
    for cand in dominant_strings_with_signature(&colors) {
        if matches(&cand)? {
            found.push(cand);
        }
    }
    match found.len() {
        1 => Ok(found.pop().unwrap()),
        0 => Err(RotationError::NoMatch),
        n => Err(RotationError::NotUnique(n)),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum RotationMethod {
    Formula,
    GraphSearch,
}

/// Outcome of comparing promotion with rotation for one string.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RotationReport {
    pub input: SignatureStateString,
    pub promoted: Got,
    pub rotated_string: SignatureStateString,
    pub method: RotationMethod,
    pub left_side: Got,
    pub right_side: Got,
    pub equal: bool,
    pub web_isomorphic: bool,
}

impl RotationReport {
    pub fn passed(&self) -> bool {
        self.equal && self.web_isomorphic
    }
}

/// Compares the tableau of the rotated web with the promoted tableau, and the
/// web grown from the promoted tableau with the rotated web.
pub fn verify_main_theorem(s: &SignatureStateString) -> Result<RotationReport, RotationError> {
    if !is_dominant(s) {
        return Err(RotationError::NotDominant);
    }
    let got = got_from_string(s)?;
    let (promoted, _) = promote_growth(&got)?;
    let web = grow_web(s)?;
    let (rotated_string, method) = if web.contains_identity_component() || s.is_empty() {
        (rotate_string_oracle(s)?, RotationMethod::GraphSearch)
    } else {
        (rotate_string(s, &web)?, RotationMethod::Formula)
    };
    let left_side = got_from_string(&rotated_string)?;
    let promoted_string = string_from_got(&promoted)?;
    let web_isomorphic = is_dominant(&promoted_string)
        && webs_equal(&grow_web(&promoted_string)?, &rotate_web(&web));
    Ok(RotationReport {
        input: s.clone(),
        equal: left_side == promoted,
        right_side: promoted.clone(),
        promoted,
        rotated_string,
        method,
        left_side,
        web_isomorphic,
    })
}

/// Least `r ≥ 1` with `pʳ(T) = T`, looking no further than `limit`.
pub fn promotion_order_got(got: &Got, limit: usize) -> Result<Option<usize>, PromotionError> {
    let mut cur = got.clone();
    for r in 1..=limit.max(1) {
        cur = promote_growth(&cur)?.0;
        if &cur == got {
            return Ok(Some(r));
        }
    }
    Ok(None)
}

/// Promotion order of the tableau of a dominant string; it must divide the length.
pub fn promotion_order(s: &SignatureStateString) -> Result<usize, RotationError> {
    if !is_dominant(s) {
        return Err(RotationError::NotDominant);
    }
    let got = got_from_string(s)?;
    let k = s.len();
    match promotion_order_got(&got, k)? {
        Some(r) if k == 0 || k.is_multiple_of(r) => Ok(r),
        Some(r) => Err(RotationError::OrderDoesNotDivide { order: r, k }),
        None => Err(RotationError::OrderDoesNotDivide { order: 0, k }),
    }
}

/// Per-length summary of an exhaustive run.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LengthSummary {
    pub k: usize,
    pub checked: usize,
    pub by_formula: usize,
    pub by_search: usize,
    pub failures: Vec<String>,
}

/// Runs [`verify_main_theorem`] on every dominant string of length `k`.
pub fn verify_length(k: usize) -> LengthSummary {
    let strings: Vec<SignatureStateString> = enumerate_dominant_strings(k).collect();
    let results: Vec<(SignatureStateString, Result<RotationReport, RotationError>)> = strings
        .into_par_iter()
        .map(|s| {
            let r = verify_main_theorem(&s);
            (s, r)
        })
        .collect();
    let mut summary = LengthSummary {
        k,
        checked: results.len(),
        by_formula: 0,
        by_search: 0,
        failures: Vec::new(),
    };
    for (s, r) in results {
        match r {
            Ok(rep) => {
                match rep.method {
                    RotationMethod::Formula => summary.by_formula += 1,
                    RotationMethod::GraphSearch => summary.by_search += 1,
                }
                if !rep.passed() {
                    summary.failures.push(format!(
                        "{s}: rotated {} promoted {} (equal={}, web={})",
                        rep.rotated_string,
                        string_from_got(&rep.promoted).map(|x| x.to_string()).unwrap_or_default(),
                        rep.equal,
                        rep.web_isomorphic
                    ));
                }
            }
            Err(e) => summary.failures.push(format!("{s}: {e}")),
        }
    }
    summary
}
