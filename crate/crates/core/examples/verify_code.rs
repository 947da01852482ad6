//! Exhaustive list-size, ordering and single-deletion checks for the best
//! code at each length, with the first few collisions.
//!
//!     cargo run --release --example verify_code -- 20

use delsub::parallel::workers_from_env;
use delsub::verify::{verify, Check, VerifyOptions};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let ns: Vec<usize> = std::env::args().skip(1).map(|a| a.parse()).collect::<Result<_, _>>()?;
    let ns = if ns.is_empty() { vec![10, 12, 14, 16] } else { ns };
    let opts = VerifyOptions {
        workers: workers_from_env(),
        inventory_cap: 3,
    };
    for n in ns {
        let r = verify(n, None, &[Check::List2, Check::Lemma2, Check::Deletion], &opts)?;
        let l2 = r.lemma2.as_ref().unwrap();
        println!(
            "n={n} code {} |C|={} max list {} collisions {} case counts {:?} deletion-disjoint {} [{:.2}s]",
            r.params,
            r.code_size,
            r.max_list_size.unwrap(),
            r.collision_count.unwrap(),
            l2.case_counts,
            r.single_deletion_ok.unwrap(),
            r.elapsed.unwrap_or(0.0),
        );
        for c in r.collision_pairs.iter().flatten() {
            println!(
                "    {} ({},{:?}) / {} ({},{:?}) -> {}",
                c.x, c.w1.d, c.w1.e, c.x_prime, c.w2.d, c.w2.e, c.y
            );
        }
    }
    Ok(())
}
