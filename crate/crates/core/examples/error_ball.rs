//! Error balls, the events that reach each word, and the weight-change
//! classes used to prune decoding.

use delsub::channel::{classify_weight_delta, error_ball, events_reaching, WeightDeltaClass};
use delsub::word::BitWord;

fn main() -> Result<(), delsub::error::Error> {
    let x: BitWord = std::env::args().nth(1).as_deref().unwrap_or("011010").parse()?;
    let n = x.len();
    let ball = error_ball(&x)?;
    println!("|B({x})| = {} (event bound {})", ball.len(), n * n);
    let v = x.to_packed().expect("short word");
    for y in &ball {
        let events = events_reaching(v, n, y.to_packed().unwrap());
        let rec = classify_weight_delta((x.weight() % 4) as u8, y.weight(), n)?;
        let shown: Vec<String> = events.iter().map(ToString::to_string).collect();
        println!(
            "  {y}  delta {:>2}  canonical {:?}  via {}",
            rec.class.delta,
            rec.class.substitution,
            shown.join(" ")
        );
    }

    println!("weight-change table:");
    for row in WeightDeltaClass::TABLE {
        println!("  deleted {} {:?}: wt(x) - wt(y) = {}", row.deleted, row.substitution, row.delta);
    }
    Ok(())
}
