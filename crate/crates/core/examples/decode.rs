//! Corrupt a codeword with one deletion and one substitution, then list
//! decode the result.

use delsub::channel::{apply_del_sub, ErrorEvent};
use delsub::code::CodeParams;
use delsub::decoder::{list_decode, list_decode_brute};
use delsub::word::BitWord;

fn main() -> Result<(), delsub::error::Error> {
    let x: BitWord = "1101101000101110".parse()?;
    let p = CodeParams::of_word(&x)?;
    println!("x = {x}, code {p}");

    for ev in [ErrorEvent::new(10, 6), ErrorEvent::new(1, 16), ErrorEvent::deletion(7)] {
        let y = apply_del_sub(&x, ev)?;
        let fast = list_decode(&y, &p)?;
        let brute = list_decode_brute(&y, &p)?;
        assert_eq!(fast.words(), brute.words());
        println!("{ev}: y = {y}");
        for c in &fast.candidates {
            let mark = if c.word == x { "  <- sent" } else { "" };
            println!("    {} via {}{mark}", c.word, c.witness);
        }
        println!("    {} membership tests (brute force: {})", fast.examined, brute.examined);
    }
    Ok(())
}
