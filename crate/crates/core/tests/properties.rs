use proptest::prelude::*;

use webtab::poly::IntPolynomial;
use webtab::rotation::verify_main_theorem;
use webtab::strings::{got_from_string, is_dominant, string_from_got, Entry, SignatureStateString};
use webtab::tableaux::{promote_growth, promote_tableau, Got, SetValuedFilling, Step};
use webtab::web::{from_dot, grow_web, grow_web_with, rotate_web, to_dot, webs_equal_labeled, GrowthPolicy};

/// Walks `choices.len()` legal moves from the empty shape, picking among the
/// legal moves by index.
fn got_from_choices(n: usize, choices: &[usize]) -> Got {
    let mut steps = Vec::with_capacity(choices.len());
    let mut shape = vec![0i32; n];
    for &c in choices {
        let legal: Vec<Step> = (1..=n)
            .map(Step::add)
            .chain((1..=n).map(Step::remove))
            .filter(|s| {
                let r = s.row - 1;
                match s.dir {
                    webtab::tableaux::Direction::Add => r == 0 || shape[r - 1] > shape[r],
                    webtab::tableaux::Direction::Remove => r + 1 == n || shape[r + 1] < shape[r],
                }
            })
            .collect();
        let s = legal[c % legal.len()];
        shape[s.row - 1] += s.dir.sign();
        steps.push(s);
    }
    Got::from_steps(n, &steps).unwrap()
}

fn arb_got() -> impl Strategy<Value = Got> {
    (1usize..=4, prop::collection::vec(any::<usize>(), 0..=12))
        .prop_map(|(n, choices)| got_from_choices(n, &choices))
}

/// A string built by a random walk pruned to stay near a path home.
fn dominant_from_choices(k: usize, choices: &[usize]) -> SignatureStateString {
    let mut p = [0i32; 3];
    let mut out = Vec::with_capacity(k);
    for i in 0..k {
        let left = (k - i - 1) as i32;
        let options: Vec<(Entry, [i32; 3])> = Entry::alphabet()
            .into_iter()
            .map(|e| {
                let mut q = p;
                let row = e.state.row() - 1;
                q[row] += if e.color == webtab::strings::Color::B { 1 } else { -1 };
                (e, q)
            })
            .filter(|(_, q)| q[0] >= q[1] && q[1] >= q[2] && (q[0] - q[1]).max(q[1] - q[2]) <= left)
            .filter(|(_, q)| {
                // Black steps raise x + 2y by one mod 3 and white steps lower it,
                // so a single remaining step must fix the residue exactly.
                let x = q[0] - q[1];
                let y = q[1] - q[2];
                left != 1 || (x + 2 * y).rem_euclid(3) != 0
            })
            .collect();
        if options.is_empty() {
            break;
        }
        let (e, q) = options[choices[i] % options.len()];
        out.push(e);
        p = q;
    }
    SignatureStateString::new(out)
}

fn arb_dominant() -> impl Strategy<Value = SignatureStateString> {
    (0usize..=14, prop::collection::vec(any::<usize>(), 14))
        .prop_map(|(k, choices)| dominant_from_choices(k, &choices))
        .prop_filter("dominant", is_dominant)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn filling_round_trip(t in arb_got()) {
        let f = SetValuedFilling::from_got(&t);
        prop_assert!(f.has_valid_row_profile());
        prop_assert!(f.primes_match_parity());
        prop_assert_eq!(f.to_got().unwrap(), t);
    }

    #[test]
    fn tableau_and_growth_promotion_agree(t in arb_got()) {
        let (g, trace) = promote_growth(&t).unwrap();
        prop_assert_eq!(promote_tableau(&t).unwrap(), g.clone());
        prop_assert_eq!(g.k(), t.k());
        prop_assert_eq!(g.n(), t.n());
        prop_assert_eq!(trace.rows.len(), t.k());
        prop_assert_eq!(g.shape(t.k()), t.shape(t.k()));
    }

    #[test]
    fn three_row_tableaux_are_strings(t in arb_got().prop_filter("three rows", |t| t.n() == 3)) {
        let s = string_from_got(&t).unwrap();
        prop_assert_eq!(got_from_string(&s).unwrap(), t.clone());
        prop_assert_eq!(is_dominant(&s), t.ends_rectangular());
    }

    #[test]
    fn grown_webs_are_valid_and_rotate(s in arb_dominant()) {
        let w = grow_web(&s).unwrap();
        prop_assert!(w.validate().is_ok());
        let r = grow_web_with(&s, GrowthPolicy::RightmostFirst).unwrap();
        prop_assert!(webs_equal_labeled(&w, &r));
        let mut turned = w.clone();
        for _ in 0..s.len() {
            turned = rotate_web(&turned);
        }
        prop_assert!(webs_equal_labeled(&turned, &w));
        prop_assert!(webs_equal_labeled(&from_dot(&to_dot(&w)).unwrap(), &w));
    }

    #[test]
    fn rotation_matches_promotion(s in arb_dominant()) {
        let rep = verify_main_theorem(&s).unwrap();
        prop_assert!(rep.passed(), "{}", s);
    }

    #[test]
    fn exact_division_inverts_multiplication(
        a in prop::collection::vec(-20i128..20, 0..8),
        b in prop::collection::vec(-20i128..20, 1..6),
    ) {
        let a = IntPolynomial::new(a);
        let b = IntPolynomial::new(b);
        prop_assume!(!b.is_zero());
        let prod = &a * &b;
        prop_assert_eq!(prod.div_exact(&b).unwrap(), a.clone());
        prop_assert_eq!(prod.eval_at_one(), a.eval_at_one() * b.eval_at_one());
    }
}
