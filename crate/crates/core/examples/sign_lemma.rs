//! Pairs with equal exact syndromes never have a suffix difference that
//! splits into m + 1 sign-constant pieces. Also reports how many would if
//! the first piece were allowed to skip position 1.

use delsub::verify::{verify_congruence_bridge, verify_sign_lemma, VerifyOptions};

fn main() -> Result<(), delsub::error::Error> {
    let opts = VerifyOptions::default();
    for (m, top) in [(1, 14), (2, 14)] {
        for n in (4..=top).step_by(2) {
            let r = verify_sign_lemma(n, m, &opts)?;
            println!(
                "m={m} n={n:<2} buckets {:<6} pairs {:<6} counterexamples {}  (skipping position 1: {})",
                r.buckets, r.pairs_checked, r.counterexamples, r.counterexamples_from_two
            );
        }
    }
    for n in [8, 12, 16] {
        let b = verify_congruence_bridge(n, &opts)?;
        println!("bridge n={n}: {} pairs, {} counterexamples", b.pairs_checked, b.counterexamples);
    }
    Ok(())
}
