//! One PASS/FAIL line per acceptance criterion; exits nonzero if any fail.

use std::collections::{BTreeSet, HashMap};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use delsub::channel::error_ball_packed;
use delsub::code::{choose_params, enumerate_code_packed};
use delsub::decoder::{list_decode, list_decode_brute};
use delsub::verify::{
    redundancy_table, verify, verify_lemma2, verify_list2, verify_sign_lemma, verify_single_deletion,
    verify_table1, Check, VerifyOptions,
};
use delsub::word::BitWord;
use delsub::worked;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ok_if(cond: bool, detail: String) -> Outcome {
    if cond {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn worked_pairs() -> Outcome {
    let t = Instant::now();
    let out = worked::replay().map_err(|e| e.to_string())?;
    let elapsed = t.elapsed();
    let all = out
        .iter()
        .all(|o| o.first_reaches_y && o.second_reaches_y && o.u_matches && o.passed);
    ok_if(
        all && elapsed < Duration::from_secs(1),
        format!("3 pairs replayed in {:.1} ms", elapsed.as_secs_f64() * 1e3),
    )
}

fn list_size() -> Outcome {
    let opts = VerifyOptions::default();
    let mut detail = Vec::new();
    let mut pass = true;
    for n in [8, 10, 12, 14, 16] {
        let (p, _) = choose_params(n).map_err(|e| e.to_string())?;
        let r = verify_list2(&p, &opts).map_err(|e| e.to_string())?;
        pass &= r.max_list_size <= 2;
        detail.push(format!("n={n}:{}", r.max_list_size));
    }
    ok_if(pass, format!("max list size {}", detail.join(" ")))
}

fn redundancy() -> Outcome {
    let rows = redundancy_table(&[8, 12, 16, 20, 24], 1).map_err(|e| e.to_string())?;
    let min = rows.iter().map(|r| r.margin).fold(f64::INFINITY, f64::min);
    ok_if(
        rows.iter().all(|r| r.passed()),
        format!("smallest margin {min:.3} over n=8,12,16,20,24"),
    )
}

fn ordering() -> Outcome {
    let opts = VerifyOptions::default();
    let mut detail = Vec::new();
    let mut pass = true;
    for n in [10, 12, 14] {
        let (p, _) = choose_params(n).map_err(|e| e.to_string())?;
        let r = verify_lemma2(&p, &opts).map_err(|e| e.to_string())?;
        let only_between = r.case_counts.keys().all(|c| c.is_between());
        pass &= r.violations == 0 && r.remark3_violations == 0 && only_between && r.colliding_pairs > 0;
        detail.push(format!(
            "n={n}: {} collisions, {} violations",
            r.colliding_pairs, r.violations
        ));
    }
    ok_if(pass, detail.join("; "))
}

fn sign_lemma() -> Outcome {
    let opts = VerifyOptions::default();
    let mut pairs = [0u64; 2];
    let mut bad = 0u64;
    // m = 2 has no equal-syndrome pairs below n = 11, so go past 10
    for (m, top) in [(1usize, 12usize), (2, 12)] {
        for n in 2..=top {
            let r = verify_sign_lemma(n, m, &opts).map_err(|e| e.to_string())?;
            pairs[m - 1] += r.pairs_checked;
            bad += r.counterexamples;
        }
    }
    ok_if(
        bad == 0,
        format!(
            "{bad} counterexamples; {} pairs for m=1 (n<=12), {} for m=2 (n<=12, none below 11)",
            pairs[0], pairs[1]
        ),
    )
}

fn weight_table() -> Outcome {
    let mut events = 0;
    let mut bad = 0;
    for n in 2..=10 {
        let r = verify_table1(n).map_err(|e| e.to_string())?;
        events += r.events_checked;
        bad += r.delta_violations + r.canonical_violations;
    }
    ok_if(bad == 0, format!("{bad} violations over {events} events, n<=10"))
}

fn decoder_equivalence() -> Outcome {
    let n = 12;
    let (p, _) = choose_params(n).map_err(|e| e.to_string())?;
    let code = enumerate_code_packed(&p).map_err(|e| e.to_string())?;
    let mut cover: HashMap<u64, BTreeSet<BitWord>> = HashMap::new();
    for &x in &code {
        for y in error_ball_packed(x, n) {
            cover.entry(y).or_default().insert(BitWord::from_packed(x, n));
        }
    }
    let mut mismatches = 0;
    for yv in 0..(1u64 << (n - 1)) {
        let y = BitWord::from_packed(yv, n - 1);
        let expected: Vec<&BitWord> = cover.get(&yv).map(|s| s.iter().collect()).unwrap_or_default();
        let fast = list_decode(&y, &p).map_err(|e| e.to_string())?;
        let brute = list_decode_brute(&y, &p).map_err(|e| e.to_string())?;
        mismatches += usize::from(fast.words() != expected || brute.words() != expected);
    }
    ok_if(mismatches == 0, format!("{mismatches} mismatches over 2^11 received words"))
}

fn single_deletion() -> Outcome {
    let opts = VerifyOptions::default();
    let mut pass = true;
    for n in 2..=16 {
        let (p, _) = choose_params(n).map_err(|e| e.to_string())?;
        pass &= verify_single_deletion(&p, &opts).map_err(|e| e.to_string())?;
    }
    ok_if(pass, "best codes n=2..16".into())
}

fn scan_24() -> Outcome {
    let checks = [Check::List2, Check::Lemma2, Check::Deletion];
    let run = |workers| {
        let opts = VerifyOptions {
            workers,
            ..VerifyOptions::default()
        };
        verify(24, None, &checks, &opts).map(|mut r| {
            r.elapsed = None;
            (serde_json::to_string(&r).unwrap(), r.passed)
        })
    };
    let t = Instant::now();
    let (base, passed) = run(1).map_err(|e| e.to_string())?;
    let secs = t.elapsed().as_secs_f64();
    let mut identical = true;
    for w in [2, 4, 8] {
        identical &= run(w).map_err(|e| e.to_string())?.0 == base;
    }
    ok_if(
        passed && identical && secs <= 60.0,
        format!("single-threaded {secs:.2}s, workers 2/4/8 identical: {identical}"),
    )
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("worked pairs replay", worked_pairs),
        ("list size <= 2", list_size),
        ("redundancy <= 3 log2 n + 4", redundancy),
        ("collisions only between deletions", ordering),
        ("sign-segment lemma", sign_lemma),
        ("weight-change table", weight_table),
        ("decoder equivalence n=12", decoder_equivalence),
        ("single-deletion balls disjoint", single_deletion),
        ("n=24 scan time and determinism", scan_24),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        match f() {
            Ok(d) => println!("PASS {} {name}: {d}", i + 1),
            Err(d) => {
                failed += 1;
                println!("FAIL {} {name}: {d}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
