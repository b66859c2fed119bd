use webtab::enumerate::enumerate_dominant_strings;
use webtab::rotation::{
    promotion_order, rotate_string, rotate_string_oracle, rotate_word_allblack, verify_length,
    verify_main_theorem, RotationError, RotationMethod,
};
use webtab::strings::{
    first_return_indices, got_from_string, syt_from_word, word_from_syt, Color, SignatureStateString,
    Word,
};
use webtab::tableaux::{
    classical_promotion, promote_growth, promote_tableau_filling, Cell, Got, Label, SetValuedFilling,
    StandardYoungTableau,
};
use webtab::web::{grow_web, rotate_web, webs_equal};

fn s(text: &str) -> SignatureStateString {
    text.parse().unwrap()
}

/// Identity-free dominant strings of length `1..=kmax`.
fn identity_free(kmax: usize) -> Vec<SignatureStateString> {
    (1..=kmax)
        .flat_map(enumerate_dominant_strings)
        .filter(|st| !grow_web(st).unwrap().contains_identity_component())
        .collect()
}

#[test]
fn all_black_word_example() {
    let w: Word = "10m10m".parse().unwrap();
    assert_eq!(rotate_word_allblack(&w).unwrap().to_string(), "1010mm");
    let t = syt_from_word(&w).unwrap();
    let promoted = word_from_syt(&classical_promotion(&t)).unwrap();
    assert_eq!(promoted.to_string(), "1010mm");
}

#[test]
fn all_black_words_match_classical_promotion() {
    for n in 0..=4 {
        for t in StandardYoungTableau::all_of_shape(&[n, n, n]) {
            let w = word_from_syt(&t).unwrap();
            let expected = word_from_syt(&classical_promotion(&t)).unwrap();
            assert_eq!(rotate_word_allblack(&w).unwrap(), expected, "{w}");
        }
    }
    let bad: Word = "0".parse().unwrap();
    assert_eq!(rotate_word_allblack(&bad).unwrap_err(), RotationError::NotDominant);
}

#[test]
fn small_rotations() {
    assert_eq!(rotate_string_oracle(&s("1B1W")).unwrap(), s("mWmB"));
    assert_eq!(rotate_string_oracle(&s("mWmB")).unwrap(), s("1B1W"));
    let tri = s("1B0BmB");
    assert_eq!(rotate_string(&tri, &grow_web(&tri).unwrap()).unwrap(), tri);
    assert_eq!(rotate_string_oracle(&tri).unwrap(), tri);
    let id = s("1B1W");
    assert_eq!(
        rotate_string(&id, &grow_web(&id).unwrap()).unwrap_err(),
        RotationError::ContainsIdentityWeb
    );
    assert_eq!(rotate_string_oracle(&s("1B")).unwrap_err(), RotationError::NotDominant);
}

#[test]
fn identity_promotes_to_its_rotation() {
    let rep = verify_main_theorem(&s("1B1W")).unwrap();
    assert!(rep.passed());
    assert_eq!(rep.method, RotationMethod::GraphSearch);
    let expected = Got::validate(&[vec![0, 0, 0], vec![0, 0, -1], vec![0, 0, 0]], 3).unwrap();
    assert_eq!(rep.promoted, expected);
    assert_eq!(rep.left_side, expected);
}

#[test]
fn worked_example_rotation() {
    let st = s("1B1BmW0BmW0BmBmB0W1WmB");
    let w = grow_web(&st).unwrap();
    let r = rotate_string(&st, &w).unwrap();
    assert_eq!(r, rotate_string_oracle(&st).unwrap());
    assert!(webs_equal(&grow_web(&r).unwrap(), &rotate_web(&w)));
    let rep = verify_main_theorem(&st).unwrap();
    assert!(rep.passed());
    assert_eq!(rep.method, RotationMethod::Formula);
}

#[test]
fn formula_agrees_with_search() {
    for st in identity_free(8) {
        let formula = rotate_string(&st, &grow_web(&st).unwrap()).unwrap();
        assert_eq!(formula, rotate_string_oracle(&st).unwrap(), "{st}");
    }
}

#[test]
fn rotation_changes_three_positions() {
    for st in identity_free(10) {
        let r = rotate_string(&st, &grow_web(&st).unwrap()).unwrap();
        let (a, b) = first_return_indices(&st).unwrap();
        let k = st.len();
        let mut sig = st.signature();
        sig.rotate_left(1);
        assert_eq!(r.signature(), sig, "{st}");
        for j in 1..k {
            if j + 1 != a && j + 1 != b {
                assert_eq!(r.at(j), st.at(j + 1), "{st} position {j}");
            }
        }
    }
}

#[test]
fn main_theorem_up_to_eight() {
    for k in 0..=8 {
        let summary = verify_length(k);
        assert!(summary.failures.is_empty(), "{:?}", summary.failures);
        assert_eq!(summary.checked, summary.by_formula + summary.by_search);
    }
}

#[test]
fn promotion_orders() {
    assert_eq!(promotion_order(&s("1B1W")).unwrap(), 2);
    assert_eq!(promotion_order(&s("1B0BmB")).unwrap(), 1);
    assert_eq!(promotion_order(&s("")).unwrap(), 1);
    for k in 1..=8 {
        for st in enumerate_dominant_strings(k) {
            let order = promotion_order(&st).unwrap();
            assert_eq!(k % order, 0, "{st}");
        }
    }
}

/// Rows `1^m 2^* 3^+` for a black leftmost vertex, mirrored for white.
#[test]
fn row_indices_move_in_three_phases() {
    for st in identity_free(10) {
        let t = got_from_string(&st).unwrap();
        let (_, trace) = promote_growth(&t).unwrap();
        let rows: Vec<usize> = if st.entries()[0].color == Color::B {
            trace.rows.clone()
        } else {
            trace.rows.iter().map(|r| 4 - r).collect()
        };
        assert!(rows.windows(2).all(|w| w[0] <= w[1]), "{st}: {rows:?}");
        assert_eq!(rows[0], 1, "{st}");
        assert_eq!(*rows.last().unwrap(), 3, "{st}");
    }
}

/// The only shape of size `-1` next to `∅` is `(0,0,-1)`, so the bullet drops
/// to the last row at the second step.
#[test]
fn leading_identity_forces_early_jump() {
    for k in 3..=8 {
        for st in enumerate_dominant_strings(k) {
            if st.at(1) != s("1B").at(1) || st.at(2) != s("1W").at(1) {
                continue;
            }
            let (_, trace) = promote_growth(&got_from_string(&st).unwrap()).unwrap();
            assert_eq!(&trace.rows[..2], &[1, 3], "{st}");
            assert_eq!(trace.mu[1].parts(), &[0, 0, -1]);
        }
    }
}

fn row_of(f: &SetValuedFilling, index: usize) -> (usize, bool) {
    f.cells()
        .find_map(|(c, labels): (Cell, &[Label])| {
            labels.iter().find(|l| l.index == index).map(|l| (c.row, l.primed))
        })
        .unwrap()
}

type Wall = fn(&[i32]) -> bool;

/// Entries change rows exactly at the first two wall contacts, moving one row
/// towards the bullet: up when unprimed, down when primed.
#[test]
fn entries_change_rows_at_wall_contacts() {
    for st in identity_free(10) {
        let t = got_from_string(&st).unwrap();
        let black = st.entries()[0].color == Color::B;
        let (first_wall, second_wall): (Wall, Wall) = if black {
            (|p| p[0] == p[1], |p| p[1] == p[2])
        } else {
            (|p| p[1] == p[2], |p| p[0] == p[1])
        };
        let i1 = (1..=t.k()).find(|&i| first_wall(t.shape(i).parts())).unwrap();
        let i2 = (i1 + 1..=t.k()).find(|&i| second_wall(t.shape(i).parts())).unwrap();
        let before = SetValuedFilling::from_got(&t);
        let after = promote_tableau_filling(&t);
        for i in 2..=t.k() {
            let (r0, primed) = row_of(&before, i);
            let (r1, _) = row_of(&after, i - 1);
            if i == i1 || i == i2 {
                let expected = if primed { r0 + 1 } else { r0 - 1 };
                assert_eq!(r1, expected, "{st}: entry {i}");
            } else {
                assert_eq!(r1, r0, "{st}: entry {i}");
            }
        }
    }
}
