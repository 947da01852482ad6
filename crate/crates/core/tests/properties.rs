use proptest::prelude::*;

use delsub::channel::{apply_del_sub, error_ball, ErrorEvent};
use delsub::code::CodeParams;
use delsub::decoder::list_decode;
use delsub::syndrome::{suffix_diff, vt_syndrome, vt_syndrome_by_suffix};
use delsub::word::BitWord;

fn word(max: usize) -> impl Strategy<Value = BitWord> {
    prop::collection::vec(0u8..2, 2..=max).prop_map(|b| BitWord::from_bits(&b).unwrap())
}

fn pair(max: usize) -> impl Strategy<Value = (BitWord, BitWord)> {
    (2..=max).prop_flat_map(|n| {
        let bits = || prop::collection::vec(0u8..2, n).prop_map(|b| BitWord::from_bits(&b).unwrap());
        (bits(), bits())
    })
}

proptest! {
    #[test]
    fn suffix_diff_is_antisymmetric((x, x2) in pair(40)) {
        let a = suffix_diff(&x, &x2).unwrap();
        let b = suffix_diff(&x2, &x).unwrap();
        prop_assert!(a.iter().zip(b.iter()).all(|(p, q)| p == &-q));
    }

    #[test]
    fn syndrome_difference_is_moment_of_u((x, x2) in pair(40)) {
        let u = suffix_diff(&x, &x2).unwrap();
        for j in 1..=3u32 {
            let lhs = vt_syndrome(&x, j).unwrap() as i128 - vt_syndrome(&x2, j).unwrap() as i128;
            let rhs: i128 = u.iter().enumerate().map(|(i, &v)| v as i128 * (i as i128 + 1).pow(j - 1)).sum();
            prop_assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn first_entry_of_u_against_zero_is_weight(x in word(60)) {
        let u = suffix_diff(&x, &BitWord::zeros(x.len())).unwrap();
        prop_assert_eq!(u[0], x.weight() as i64);
    }

    #[test]
    fn prefix_and_suffix_sums_agree(x in word(60)) {
        for j in 1..=3 {
            prop_assert_eq!(vt_syndrome(&x, j).unwrap(), vt_syndrome_by_suffix(&x, j).unwrap());
        }
    }

    #[test]
    fn sent_word_is_always_decoded(x in word(40), d in 1usize..=40, e in 0usize..=40) {
        let n = x.len();
        prop_assume!(!x.is_constant() && d <= n && e <= n);
        let ev = if e == 0 || e == d { ErrorEvent::deletion(d) } else { ErrorEvent::new(d, e) };
        let y = apply_del_sub(&x, ev).unwrap();
        let p = CodeParams::of_word(&x).unwrap();
        let r = list_decode(&y, &p).unwrap();
        prop_assert!(r.len() <= 2);
        prop_assert!(r.words().contains(&&x));
    }

    #[test]
    fn ball_is_bounded_and_reached(x in word(12)) {
        let n = x.len();
        let ball = error_ball(&x).unwrap();
        prop_assert!(ball.len() <= n * n);
        for ev in ErrorEvent::all(n) {
            prop_assert!(ball.contains(&apply_del_sub(&x, ev).unwrap()));
        }
    }
}
