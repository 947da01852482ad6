//! Three hand-checked collisions of length 16, one per ordering case I, II
//! and III, with their suffix differences. [`replay`] recomputes every
//! quantity from the words and compares.

use serde::Serialize;

use crate::cases::{classify, predicted_suffix_diff, OrderCase};
use crate::channel::{apply_del_sub, ErrorEvent};
use crate::error::Result;
use crate::syndrome::{sign_segments_ok, suffix_diff};
use crate::word::BitWord;

#[derive(Debug, Clone, Copy)]
pub struct WorkedPair {
    pub name: &'static str,
    pub x: &'static str,
    pub x_prime: &'static str,
    pub y: &'static str,
    pub first: (usize, usize),
    pub second: (usize, usize),
    pub case: OrderCase,
    pub lambda: (usize, usize),
    /// Breakpoint splitting `u` into two sign-constant segments.
    pub breakpoint: usize,
    pub u: [i64; 16],
}

pub const WORKED_PAIRS: [WorkedPair; 3] = [
    WorkedPair {
        name: "case-i",
        x: "1101101000101110",
        x_prime: "1001111001011010",
        y: "110111100101110",
        first: (10, 6),
        second: (14, 2),
        case: OrderCase::I,
        lambda: (2, 6),
        breakpoint: 6,
        u: [0, 0, -1, -1, -1, -1, 0, 0, 0, 0, 1, 0, 1, 1, 0, 0],
    },
    WorkedPair {
        name: "case-ii",
        x: "1001011101001110",
        x_prime: "1101111000011010",
        y: "110111101001110",
        first: (5, 2),
        second: (14, 9),
        case: OrderCase::Ii,
        lambda: (2, 10),
        breakpoint: 9,
        u: [0, 0, 1, 1, 1, 2, 2, 2, 1, 1, 0, 0, 1, 1, 0, 0],
    },
    WorkedPair {
        name: "case-iii",
        x: "1001010101001111",
        x_prime: "1101101010001101",
        y: "100110101001101",
        first: (5, 15),
        second: (10, 2),
        case: OrderCase::Iii,
        lambda: (2, 15),
        breakpoint: 16,
        u: [0, 0, 1, 1, 1, 2, 1, 2, 1, 2, 1, 1, 1, 1, 1, 0],
    },
];

impl WorkedPair {
    pub fn words(&self) -> (BitWord, BitWord, BitWord) {
        (
            self.x.parse().expect("valid literal"),
            self.x_prime.parse().expect("valid literal"),
            self.y.parse().expect("valid literal"),
        )
    }

    pub fn events(&self) -> (ErrorEvent, ErrorEvent) {
        (
            ErrorEvent::new(self.first.0, self.first.1),
            ErrorEvent::new(self.second.0, self.second.1),
        )
    }
}

/// Outcome of recomputing one worked pair.
#[derive(Debug, Clone, Serialize)]
pub struct ReplayOutcome {
    pub name: &'static str,
    pub first_reaches_y: bool,
    pub second_reaches_y: bool,
    pub case: OrderCase,
    pub case_matches: bool,
    pub u: Vec<i64>,
    pub u_matches: bool,
    pub formula_matches: bool,
    pub sign_segments_ok: bool,
    pub max_abs_u: i64,
    pub passed: bool,
}

pub fn replay_one(pair: &WorkedPair) -> Result<ReplayOutcome> {
    let (x, x2, y) = pair.words();
    let (first, second) = pair.events();
    let first_reaches_y = apply_del_sub(&x, first)? == y;
    let second_reaches_y = apply_del_sub(&x2, second)? == y;
    let case = classify(first, second);
    let u = suffix_diff(&x, &x2)?;
    let u_matches = u[..] == pair.u[..];
    let formula_matches = predicted_suffix_diff(&x, &x2, first, second).as_deref() == Some(&u[..]);
    let sign_ok = sign_segments_ok(&u, &[pair.breakpoint])?;
    let max_abs_u = u.max_abs();
    let passed = first_reaches_y
        && second_reaches_y
        && case == pair.case
        && u_matches
        && formula_matches
        && sign_ok
        && max_abs_u <= 2;
    Ok(ReplayOutcome {
        name: pair.name,
        first_reaches_y,
        second_reaches_y,
        case,
        case_matches: case == pair.case,
        u: u.into_inner(),
        u_matches,
        formula_matches,
        sign_segments_ok: sign_ok,
        max_abs_u,
        passed,
    })
}

pub fn replay() -> Result<Vec<ReplayOutcome>> {
    WORKED_PAIRS.iter().map(replay_one).collect()
}
