use std::collections::BTreeSet;

use webtab::enumerate::{dominant_strings_with_signature, enumerate_dominant_strings, enumerate_got};
use webtab::strings::{
    first_return_indices, got_from_string, is_dominant, path_from_string, string_from_got,
    syt_from_word, word_from_syt, Entry, SignatureStateString, StringError, Word,
};
use webtab::tableaux::{Got, StandardYoungTableau};

/// Every string over the six letters, by counting in base 6.
fn all_strings(k: usize) -> Vec<SignatureStateString> {
    let letters = Entry::alphabet();
    (0..6usize.pow(k as u32))
        .map(|mut code| {
            let mut v = vec![letters[0]; k];
            for slot in v.iter_mut().rev() {
                *slot = letters[code % 6];
                code /= 6;
            }
            SignatureStateString::new(v)
        })
        .collect()
}

/// Prefix counts of rows, computed from scratch.
fn naive_counts(s: &SignatureStateString) -> Vec<[i32; 3]> {
    let mut c = [0i32; 3];
    let mut out = vec![c];
    for e in s.entries() {
        let idx = match e.state.value() {
            1 => 0,
            0 => 1,
            _ => 2,
        };
        c[idx] += if e.color == webtab::strings::Color::B { 1 } else { -1 };
        out.push(c);
    }
    out
}

fn naive_in_chamber(s: &SignatureStateString) -> bool {
    naive_counts(s).iter().all(|c| c[0] >= c[1] && c[1] >= c[2])
}

fn naive_dominant(s: &SignatureStateString) -> bool {
    let counts = naive_counts(s);
    let end = counts.last().unwrap();
    naive_in_chamber(s) && end[0] == end[1] && end[1] == end[2]
}

#[test]
fn enumerator_matches_brute_force() {
    for k in 0..=6 {
        let brute: Vec<_> = all_strings(k).into_iter().filter(naive_dominant).collect();
        let fast: Vec<_> = enumerate_dominant_strings(k).collect();
        assert_eq!(fast, brute, "k={k}");
    }
}

#[test]
fn small_dominant_string_lists() {
    assert_eq!(enumerate_dominant_strings(1).count(), 0);
    let two: Vec<String> = enumerate_dominant_strings(2).map(|s| s.to_string()).collect();
    assert_eq!(two, vec!["1B1W", "mWmB"]);
    let three: Vec<String> = enumerate_dominant_strings(3).map(|s| s.to_string()).collect();
    assert_eq!(three, vec!["1B0BmB", "mW0W1W"]);
    assert_eq!(enumerate_dominant_strings(0).count(), 1);
}

#[test]
fn prefix_split_covers_everything() {
    for k in 0..=7 {
        let whole: Vec<_> = enumerate_dominant_strings(k).collect();
        let mut parts = Vec::new();
        for e in Entry::alphabet() {
            parts.extend(webtab::enumerate::DominantStrings::with_prefix(k, &[e]));
        }
        if k == 0 {
            assert_eq!(whole.len(), 1);
        } else {
            assert_eq!(parts, whole);
        }
    }
}

#[test]
fn fixed_signature_enumeration() {
    for k in 0..=7 {
        let mut by_sig: BTreeSet<SignatureStateString> = BTreeSet::new();
        for s in enumerate_dominant_strings(k) {
            by_sig.insert(s);
        }
        let sigs: BTreeSet<Vec<_>> = by_sig.iter().map(|s| s.signature()).collect();
        let mut total = 0;
        for sig in &sigs {
            let found = dominant_strings_with_signature(sig);
            assert!(found.iter().all(|s| by_sig.contains(s) && &s.signature() == sig));
            total += found.len();
        }
        assert_eq!(total, by_sig.len());
    }
}

/// Every sequence of `k` moves among `2n` candidates that stays weakly decreasing.
fn naive_gots(k: usize, n: usize) -> BTreeSet<Vec<Vec<i32>>> {
    let mut out = BTreeSet::new();
    for code in 0..(2 * n).pow(k as u32) {
        let mut c = code;
        let mut shape = vec![0i32; n];
        let mut seq = vec![shape.clone()];
        let mut ok = true;
        for _ in 0..k {
            let m = c % (2 * n);
            c /= 2 * n;
            shape[m % n] += if m < n { 1 } else { -1 };
            ok &= shape.windows(2).all(|w| w[0] >= w[1]);
            seq.push(shape.clone());
        }
        if ok {
            out.insert(seq);
        }
    }
    out
}

#[test]
fn got_enumerator_is_complete_and_duplicate_free() {
    for n in 1..=3 {
        for k in 0..=5 {
            let listed: Vec<Vec<Vec<i32>>> = enumerate_got(k, n)
                .map(|g| g.shapes().iter().map(|s| s.parts().to_vec()).collect())
                .collect();
            let set: BTreeSet<_> = listed.iter().cloned().collect();
            assert_eq!(set.len(), listed.len(), "duplicates at k={k} n={n}");
            assert_eq!(set, naive_gots(k, n), "k={k} n={n}");
        }
    }
    assert_eq!(enumerate_got(2, 2).count(), 8);
    assert_eq!(enumerate_got(0, 5).count(), 1);
    let one: Vec<Got> = enumerate_got(1, 3).collect();
    assert_eq!(
        one,
        vec![
            Got::validate(&[vec![0, 0, 0], vec![1, 0, 0]], 3).unwrap(),
            Got::validate(&[vec![0, 0, 0], vec![0, 0, -1]], 3).unwrap()
        ]
    );
}

#[test]
fn string_and_tableau_conversions_are_inverse() {
    for k in 0..=8 {
        for t in enumerate_got(k, 3) {
            let s = string_from_got(&t).unwrap();
            assert_eq!(got_from_string(&s).unwrap(), t);
            assert_eq!(is_dominant(&s), t.ends_rectangular(), "{s}");
        }
    }
    for k in 0..=6 {
        for s in all_strings(k) {
            match got_from_string(&s) {
                Ok(t) => {
                    assert!(naive_in_chamber(&s));
                    assert_eq!(string_from_got(&t).unwrap(), s);
                }
                Err(StringError::LeavesChamber(i)) => {
                    assert!(!naive_in_chamber(&s));
                    let c = naive_counts(&s)[i];
                    assert!(c[0] < c[1] || c[1] < c[2]);
                }
                Err(e) => panic!("{e}"),
            }
        }
    }
}

#[test]
fn path_is_prefix_counts() {
    for s in all_strings(4) {
        let p = path_from_string(&s);
        assert_eq!(p.points(), naive_counts(&s).as_slice());
    }
}

fn all_black_dominant_words(n: usize) -> Vec<Word> {
    StandardYoungTableau::all_of_shape(&[n, n, n])
        .iter()
        .map(|t| word_from_syt(t).unwrap())
        .collect()
}

#[test]
fn word_tableau_round_trip() {
    for n in 0..=4 {
        let words = all_black_dominant_words(n);
        for w in &words {
            let t = syt_from_word(w).unwrap();
            assert_eq!(&word_from_syt(&t).unwrap(), w);
            assert!(is_dominant(&w.to_signature_string()));
            let parsed: Word = w.to_string().parse().unwrap();
            assert_eq!(&parsed, w);
        }
        let dominant_black = enumerate_dominant_strings(3 * n).filter(|s| s.is_all_black()).count();
        assert_eq!(dominant_black, words.len());
    }
}

#[test]
fn first_returns_agree_with_letter_counting() {
    for n in 1..=4 {
        for w in all_black_dominant_words(n) {
            let by_path = first_return_indices(&w.to_signature_string()).unwrap();
            assert_eq!(Some(by_path), w.counting_return_indices(), "{w}");
        }
    }
}
