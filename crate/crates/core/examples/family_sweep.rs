//! Every code of a given length, not only the largest: list size, ordering
//! and single-deletion checks over all residue classes.

use delsub::parallel::workers_from_env;
use delsub::verify::{verify_family, verify_table1, VerifyOptions};

fn main() -> Result<(), delsub::error::Error> {
    let opts = VerifyOptions {
        workers: workers_from_env(),
        ..VerifyOptions::default()
    };
    for n in 4..=14 {
        let f = verify_family(n, &opts)?;
        println!(
            "n={n:<2} classes {:<6} max list {} collisions {:<7} ordering violations {} deletion failures {}",
            f.nonempty_classes, f.max_list_size, f.collision_count, f.lemma2.violations, f.single_deletion_failures
        );
    }
    for n in 2..=10 {
        let t = verify_table1(n)?;
        println!("weight table n={n}: {} events, passed {}", t.events_checked, t.passed());
    }
    Ok(())
}
