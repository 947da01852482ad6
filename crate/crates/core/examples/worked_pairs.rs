//! Three colliding pairs that cannot share a code, one per ordering case,
//! recomputed from the words.

use delsub::syndrome::ExactSyndromes;
use delsub::verify::check_pair;
use delsub::worked::{replay_one, WORKED_PAIRS};

fn main() -> Result<(), delsub::error::Error> {
    for pair in &WORKED_PAIRS {
        let out = replay_one(pair)?;
        let (x, x2, y) = pair.words();
        let (s, s2) = (ExactSyndromes::of(&x), ExactSyndromes::of(&x2));
        println!("{}: {x} / {x2} -> {y}", pair.name);
        println!("    events {:?} {:?}, case {}", pair.first, pair.second, out.case);
        println!("    u = {:?}", out.u);
        println!(
            "    (wt, f1, f2) = ({}, {}, {}) vs ({}, {}, {})",
            s.weight, s.f1, s.f2, s2.weight, s2.f1, s2.f2
        );
        let flagged = check_pair(&x, &x2, &y)?;
        println!(
            "    formula {} | replay {} | {} of {} representation pairs outside the between case",
            out.formula_matches,
            if out.passed { "ok" } else { "MISMATCH" },
            flagged.violations,
            flagged.representation_pairs
        );
    }
    Ok(())
}
