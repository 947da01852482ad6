//! Largest code of each length and how far its redundancy sits below
//! `3 log2 n + 4`.
//!
//!     cargo run --release --example construct -- 8 12 16 20

use delsub::code::{choose_params, enumerate_code, pigeonhole_bound, redundancy_bound};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let ns: Vec<usize> = std::env::args().skip(1).map(|a| a.parse()).collect::<Result<_, _>>()?;
    let ns = if ns.is_empty() { vec![8, 10, 12, 14, 16] } else { ns };
    for n in ns {
        let (p, stats) = choose_params(n)?;
        println!(
            "n={n:<3} params={p:<12} size={:<6} (pigeonhole >= {:.1})  r={:.3} <= {:.3}",
            stats.size,
            pigeonhole_bound(n),
            stats.redundancy.unwrap_or(f64::NAN),
            redundancy_bound(n)
        );
        if n <= 12 {
            for x in enumerate_code(&p)? {
                println!("    {x}");
            }
        }
    }
    Ok(())
}
