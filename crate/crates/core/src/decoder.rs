//! List decoding of a received word of length `n - 1`.
//!
//! Both decoders return exactly the codewords whose error ball contains the
//! received word. [`list_decode_brute`] tries every single-bit insertion
//! followed by at most one flip; [`list_decode`] first recovers the sent
//! weight from `c0` and only tries insertions and flips consistent with the
//! canonical error class for that weight change.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::channel::{canonical_witness, classify_weight_delta, ErrorEvent};
use crate::code::{is_codeword, CodeParams};
use crate::error::{Error, Result};
use crate::word::BitWord;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Candidate {
    pub word: BitWord,
    pub witness: ErrorEvent,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DecodeResult {
    /// Ascending by codeword.
    pub candidates: Vec<Candidate>,
    /// Membership tests performed.
    pub examined: usize,
}

impl DecodeResult {
    pub fn len(&self) -> usize {
        self.candidates.len()
    }

    pub fn is_empty(&self) -> bool {
        self.candidates.is_empty()
    }

    pub fn words(&self) -> Vec<&BitWord> {
        self.candidates.iter().map(|c| &c.word).collect()
    }
}

fn check_length(y: &BitWord, p: &CodeParams) -> Result<()> {
    if y.len() + 1 != p.n {
        return Err(Error::LengthMismatch {
            expected: p.n - 1,
            actual: y.len(),
        });
    }
    Ok(())
}

fn finish(y: &BitWord, found: BTreeSet<BitWord>, examined: usize) -> Result<DecodeResult> {
    if found.len() > 2 {
        return Err(Error::ListBoundViolated {
            word: y.to_string(),
            count: found.len(),
        });
    }
    let candidates = found
        .into_iter()
        .map(|word| {
            let witness = canonical_witness(&word, y).expect("decoded word reaches y");
            Candidate { word, witness }
        })
        .collect();
    Ok(DecodeResult { candidates, examined })
}

/// Every codeword of `p` that reaches `y`, found by trying all `2n` single
/// insertions each followed by no flip or one flip of another position.
pub fn list_decode_brute(y: &BitWord, p: &CodeParams) -> Result<DecodeResult> {
    let (found, examined) = covering_brute(y, p)?;
    finish(y, found, examined)
}

/// Unbounded form of [`list_decode_brute`]: never fails on more than two
/// matches.
pub fn covering_brute(y: &BitWord, p: &CodeParams) -> Result<(BTreeSet<BitWord>, usize)> {
    check_length(y, p)?;
    let n = p.n;
    let mut found = BTreeSet::new();
    let mut examined = 0;
    for d in 1..=n {
        for value in 0..2u8 {
            let z = y.with_inserted(d, value);
            examined += 1;
            if is_codeword(&z, p)? {
                found.insert(z.clone());
            }
            for e in (1..=n).filter(|&e| e != d) {
                let mut x = z.clone();
                x.flip(e);
                examined += 1;
                if is_codeword(&x, p)? {
                    found.insert(x);
                }
            }
        }
    }
    Ok((found, examined))
}

/// Same output as [`list_decode_brute`], restricted to insertions of the
/// deleted value and flips of the substituted value implied by `c0` and
/// `wt(y)`.
pub fn list_decode(y: &BitWord, p: &CodeParams) -> Result<DecodeResult> {
    check_length(y, p)?;
    let n = p.n;
    let recovery = match classify_weight_delta(p.c0, y.weight(), n) {
        Ok(r) => r,
        Err(Error::WeightOutOfRange { .. }) => {
            return Ok(DecodeResult {
                candidates: Vec::new(),
                examined: 0,
            })
        }
        Err(e) => return Err(e),
    };
    if recovery.weight == 0 || recovery.weight == n {
        return Ok(DecodeResult {
            candidates: Vec::new(),
            examined: 0,
        });
    }
    let deleted = recovery.class.deleted;
    let source = recovery
        .class
        .substitution
        .source()
        .expect("canonical classes always substitute");

    let mut found = BTreeSet::new();
    let mut examined = 0;
    for d in 1..=n {
        // inserting into a run of equal symbols gives the same word
        if d > 1 && y.bit(d - 1) == deleted {
            continue;
        }
        let z = y.with_inserted(d, deleted);
        // d stands for its whole run, so e = d is reachable through a later
        // run member when the run is longer than one
        let run_continues = d < n && z.bit(d + 1) == deleted;
        for e in (1..=n).filter(|&e| (e != d || run_continues) && z.bit(e) != source) {
            let mut x = z.clone();
            x.flip(e);
            examined += 1;
            if is_codeword(&x, p)? {
                found.insert(x);
            }
        }
    }
    finish(y, found, examined)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::channel::{apply_del_sub, error_ball};
    use crate::code::{choose_params, enumerate_code};

    fn w(s: &str) -> BitWord {
        s.parse().unwrap()
    }

    #[test]
    fn decodes_worked_corruption() {
        let x = w("1101101000101110");
        let p = CodeParams::of_word(&x).unwrap();
        let y = w("110111100101110");
        for result in [list_decode(&y, &p).unwrap(), list_decode_brute(&y, &p).unwrap()] {
            assert!(result.words().contains(&&x));
            let c = result.candidates.iter().find(|c| c.word == x).unwrap();
            assert_eq!(apply_del_sub(&x, c.witness).unwrap(), y);
        }
        // the other preimage sits in a different f_1 class
        let other = w("1001111001011010");
        assert_eq!(crate::syndrome::vt_syndrome(&other, 1).unwrap(), 73);
        assert!(!is_codeword(&other, &p).unwrap());
    }

    #[test]
    fn canonical_witness_prefers_smallest_event() {
        let x = w("1101101000101110");
        let p = CodeParams::of_word(&x).unwrap();
        let y = w("110111100101110");
        let r = list_decode(&y, &p).unwrap();
        let c = r.candidates.iter().find(|c| c.word == x).unwrap();
        let smallest = crate::channel::ErrorEvent::all(16)
            .filter(|&ev| ev.e.is_some() && apply_del_sub(&x, ev).unwrap() == y)
            .min()
            .unwrap();
        assert_eq!(c.witness, smallest);
        assert!(c.witness.d <= 10);
    }

    #[test]
    fn wrong_length_rejected() {
        let p = CodeParams::new(4, 2, 4, 7).unwrap();
        assert!(matches!(
            list_decode(&w("1010"), &p),
            Err(Error::LengthMismatch { expected: 3, actual: 4 })
        ));
        assert!(list_decode_brute(&w("10"), &p).is_err());
    }

    #[test]
    fn empty_class_decodes_to_nothing() {
        // n = 4 has 14 non-constant words spread over 1024 classes
        let p = CodeParams::new(4, 0, 0, 0).unwrap();
        for v in 0..8u64 {
            let y = BitWord::from_packed(v, 3);
            assert!(list_decode(&y, &p).unwrap().is_empty());
            assert!(list_decode_brute(&y, &p).unwrap().is_empty());
        }
    }

    #[test]
    fn out_of_range_weight_gives_empty_list() {
        // c0 = 3 with wt(y) = 0 would need weight -1
        let p = CodeParams::new(5, 3, 0, 0).unwrap();
        let r = list_decode(&BitWord::zeros(4), &p).unwrap();
        assert!(r.is_empty());
        assert_eq!(r.examined, 0);
    }

    #[test]
    fn both_decoders_agree_with_definition() {
        for n in 4..=9 {
            let (p, _) = choose_params(n).unwrap();
            let code: Vec<BitWord> = enumerate_code(&p).unwrap().collect();
            let balls: Vec<_> = code.iter().map(|x| error_ball(x).unwrap()).collect();
            for v in 0..(1u64 << (n - 1)) {
                let y = BitWord::from_packed(v, n - 1);
                let expected: Vec<&BitWord> = code
                    .iter()
                    .zip(&balls)
                    .filter(|(_, b)| b.contains(&y))
                    .map(|(x, _)| x)
                    .collect();
                let fast = list_decode(&y, &p).unwrap();
                let brute = list_decode_brute(&y, &p).unwrap();
                assert_eq!(fast.words(), expected);
                assert_eq!(fast, DecodeResult { examined: fast.examined, ..brute.clone() });
                assert!(fast.examined <= brute.examined);
            }
        }
    }
}
