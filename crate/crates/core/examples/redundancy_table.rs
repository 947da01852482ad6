//! Redundancy table up to n = 32 (the last rows scan 2^n words; set
//! DELSUB_WORKERS to spread them).

use delsub::parallel::workers_from_env;
use delsub::verify::redundancy_table;

fn main() -> Result<(), delsub::error::Error> {
    let ns: Vec<usize> = std::env::args()
        .skip(1)
        .map(|a| a.parse().expect("length"))
        .collect();
    let ns = if ns.is_empty() { (8..=28).step_by(2).collect() } else { ns };
    println!("{:>3} {:>10} {:>8} {:>8} {:>7}", "n", "size", "r", "bound", "margin");
    for row in redundancy_table(&ns, workers_from_env())? {
        println!(
            "{:>3} {:>10} {:>8.3} {:>8.3} {:>7.3}",
            row.n, row.size, row.redundancy, row.bound, row.margin
        );
    }
    Ok(())
}
