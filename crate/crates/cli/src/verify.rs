use rayon::prelude::*;
use serde::Serialize;
use webtab::csp::{csp_check, orbit_stats, CspReport, OrbitStats};
use webtab::enumerate::{enumerate_dominant_strings, enumerate_got};
use webtab::rotation::{promotion_order, verify_length, LengthSummary};
use webtab::strings::got_from_string;
use webtab::tableaux::{promote_growth, promote_growth_n, promote_tableau, SetValuedFilling};
use webtab::web::{grow_web, grow_web_with, webs_equal_labeled, GrowthPolicy};

#[derive(Debug, Serialize)]
pub struct Counted {
    pub k: usize,
    pub checked: usize,
    pub failures: Vec<String>,
}

#[derive(Debug, Serialize)]
#[serde(untagged)]
pub enum Detail {
    MainTheorem(Vec<LengthSummary>),
    Counts(Vec<Counted>),
    Csp(Box<CspReport>),
    Orbits(Vec<OrbitStats>),
}

#[derive(Debug, Serialize)]
pub struct Summary {
    pub suite: &'static str,
    pub pass: bool,
    pub results: Detail,
}

fn counted(k: usize, checked: usize, mut failures: Vec<String>) -> Counted {
    failures.sort();
    Counted { k, checked, failures }
}

pub fn main_theorem(max_length: usize) -> Summary {
    let rows: Vec<LengthSummary> = (0..=max_length).map(verify_length).collect();
    Summary {
        suite: "main-theorem",
        pass: rows.iter().all(|r| r.failures.is_empty()),
        results: Detail::MainTheorem(rows),
    }
}

pub fn equivalence(parts: usize, max_length: usize) -> Summary {
    let rows: Vec<Counted> = (0..=max_length)
        .map(|k| {
            let all: Vec<_> = enumerate_got(k, parts).collect();
            let failures = all
                .par_iter()
                .filter_map(|t| {
                    let g = promote_growth(t).map(|(p, _)| p);
                    let s = promote_tableau(t);
                    match (g, s) {
                        (Ok(a), Ok(b)) if a == b => None,
                        _ => Some(t.to_string()),
                    }
                })
                .collect();
            counted(k, all.len(), failures)
        })
        .collect();
    Summary {
        suite: "equivalence",
        pass: rows.iter().all(|r| r.failures.is_empty()),
        results: Detail::Counts(rows),
    }
}

/// Web validity and policy independence, filling round trips, and `p^k = id`
/// on web tableaux.
pub fn invariants(parts: usize, max_length: usize) -> Summary {
    let rows: Vec<Counted> = (0..=max_length)
        .map(|k| {
            let strings: Vec<_> = enumerate_dominant_strings(k).collect();
            let mut failures: Vec<String> = strings
                .par_iter()
                .filter_map(|s| {
                    let w = grow_web(s).ok()?;
                    if let Err(e) = w.validate() {
                        return Some(format!("{s}: {e}"));
                    }
                    let r = grow_web_with(s, GrowthPolicy::RightmostFirst).ok()?;
                    if !webs_equal_labeled(&w, &r) {
                        return Some(format!("{s}: growth policies disagree"));
                    }
                    let t = got_from_string(s).ok()?;
                    match (promote_growth_n(&t, k), promotion_order(s)) {
                        (Ok(p), Ok(_)) if p == t => None,
                        _ => Some(format!("{s}: promotion order does not divide {k}")),
                    }
                })
                .collect();
            let gots: Vec<_> = enumerate_got(k, parts).collect();
            failures.extend(gots.par_iter().filter_map(|t| {
                let f = SetValuedFilling::from_got(t);
                let ok = f.has_valid_row_profile() && f.primes_match_parity() && f.to_got().ok().as_ref() == Some(t);
                (!ok).then(|| format!("{t}: filling does not round-trip"))
            }).collect::<Vec<_>>());
            counted(k, strings.len() + gots.len(), failures)
        })
        .collect();
    Summary {
        suite: "invariants",
        pass: rows.iter().all(|r| r.failures.is_empty()),
        results: Detail::Counts(rows),
    }
}

pub fn csp(rows: usize, cols: usize) -> anyhow::Result<Summary> {
    let rep = csp_check(rows, cols)?;
    Ok(Summary {
        suite: "csp",
        pass: rep.pass,
        results: Detail::Csp(Box::new(rep)),
    })
}

/// Orbit data is reported, not judged.
pub fn orbits(parts: usize, max_length: usize) -> anyhow::Result<Summary> {
    let stats = (0..=max_length)
        .map(|k| orbit_stats(k, parts))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Summary {
        suite: "orbits",
        pass: true,
        results: Detail::Orbits(stats),
    })
}
