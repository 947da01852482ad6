//! Both decoders against the definitional covering set, across whole
//! families and for the best codes.

use std::collections::{BTreeSet, HashMap};

use delsub::channel::error_ball_packed;
use delsub::code::{choose_params, enumerate_code_packed, CodeParams};
use delsub::decoder::{covering_brute, list_decode, list_decode_brute};
use delsub::syndrome::ExactSyndromes;
use delsub::word::BitWord;

fn definitional(code: &[u64], n: usize) -> HashMap<u64, BTreeSet<BitWord>> {
    let mut map: HashMap<u64, BTreeSet<BitWord>> = HashMap::new();
    for &x in code {
        for y in error_ball_packed(x, n) {
            map.entry(y).or_default().insert(BitWord::from_packed(x, n));
        }
    }
    map
}

#[test]
fn every_class_decodes_definitionally() {
    for n in 4..=7 {
        let mut classes: HashMap<_, Vec<u64>> = HashMap::new();
        for v in 1..(1u64 << n) - 1 {
            classes.entry(ExactSyndromes::of_packed(v, n).reduce(n)).or_default().push(v);
        }
        for (s, code) in classes {
            let p = CodeParams::from_syndrome(s).unwrap();
            let cover = definitional(&code, n);
            for yv in 0..(1u64 << (n - 1)) {
                let y = BitWord::from_packed(yv, n - 1);
                let expected: Vec<&BitWord> = cover.get(&yv).map(|s| s.iter().collect()).unwrap_or_default();
                assert_eq!(list_decode(&y, &p).unwrap().words(), expected, "{p} {y}");
                assert_eq!(list_decode_brute(&y, &p).unwrap().words(), expected, "{p} {y}");
            }
        }
    }
}

#[test]
fn coverage_counts_match_brute_force_lists() {
    for n in [10, 11, 12] {
        let (p, _) = choose_params(n).unwrap();
        let code = enumerate_code_packed(&p).unwrap();
        let cover = definitional(&code, n);
        let entries: usize = code.iter().map(|&x| error_ball_packed(x, n).len()).sum();
        assert!(entries >= cover.len());
        for yv in 0..(1u64 << (n - 1)) {
            let y = BitWord::from_packed(yv, n - 1);
            let (found, _) = covering_brute(&y, &p).unwrap();
            assert_eq!(found.len(), cover.get(&yv).map_or(0, BTreeSet::len));
        }
    }
}

#[test]
fn decoded_witnesses_reproduce_the_received_word() {
    let (p, _) = choose_params(11).unwrap();
    for yv in 0..(1u64 << 10) {
        let y = BitWord::from_packed(yv, 10);
        for c in list_decode(&y, &p).unwrap().candidates {
            assert_eq!(delsub::channel::apply_del_sub(&c.word, c.witness).unwrap(), y);
        }
    }
}
