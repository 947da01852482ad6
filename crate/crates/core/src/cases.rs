//! Ordering cases for two representations `y = E(x, d1, e1) = E(x', d2, e2)`
//! with `d1 <= d2`, and the closed-form suffix differences that hold in
//! every case except the one where both substitutions sit between the two
//! deletions.

use std::fmt;

use serde::Serialize;

use crate::channel::ErrorEvent;
use crate::word::BitWord;

/// Relative order of `d1, e1, d2, e2` (with `d1 <= d2`), merged into six
/// cases.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum OrderCase {
    /// `e1 < d1` and `e2 < d1`.
    I,
    /// `e1 < d1 <= e2 < d2` or `e2 < d1 < e1 <= d2`.
    Ii,
    /// `e1 < d1 <= d2 < e2` or `e2 < d1 <= d2 < e1`.
    Iii,
    /// `d1 < e1 <= d2` and `d1 <= e2 < d2`: the only case two distinct
    /// codewords can produce.
    Iv,
    /// `d1 < e1 <= d2 < e2` or `d1 <= e2 < d2 < e1`.
    V,
    /// `d2 < e1` and `d2 < e2`.
    Vi,
}

impl OrderCase {
    pub const ALL: [OrderCase; 6] = [
        OrderCase::I,
        OrderCase::Ii,
        OrderCase::Iii,
        OrderCase::Iv,
        OrderCase::V,
        OrderCase::Vi,
    ];

    pub fn label(self) -> &'static str {
        match self {
            OrderCase::I => "i",
            OrderCase::Ii => "ii",
            OrderCase::Iii => "iii",
            OrderCase::Iv => "iv",
            OrderCase::V => "v",
            OrderCase::Vi => "vi",
        }
    }

    /// Both substitutions lie between the deletions.
    pub fn is_between(self) -> bool {
        self == OrderCase::Iv
    }
}

impl fmt::Display for OrderCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Side {
    Before,
    Between,
    After,
}

/// Classifies two exactly-one-substitution events, `first.d <= second.d`.
///
/// Panics if either event lacks a substitution or the deletions are out of
/// order.
pub fn classify(first: ErrorEvent, second: ErrorEvent) -> OrderCase {
    let (d1, d2) = (first.d, second.d);
    assert!(d1 <= d2, "events must be ordered by deletion position");
    let e1 = first.e.expect("first event substitutes");
    let e2 = second.e.expect("second event substitutes");
    let s1 = if e1 < d1 {
        Side::Before
    } else if e1 <= d2 {
        Side::Between
    } else {
        Side::After
    };
    let s2 = if e2 < d1 {
        Side::Before
    } else if e2 < d2 {
        Side::Between
    } else {
        Side::After
    };
    use Side::*;
    match (s1, s2) {
        (Before, Before) => OrderCase::I,
        (Before, Between) | (Between, Before) => OrderCase::Ii,
        (Before, After) | (After, Before) => OrderCase::Iii,
        (Between, Between) => OrderCase::Iv,
        (Between, After) | (After, Between) => OrderCase::V,
        (After, After) => OrderCase::Vi,
    }
}

/// Closed-form `u` for a pair with `E(x, first) = E(x2, first')`, equal
/// weights and equal deleted symbols, evaluated from the case formulas.
///
/// Returns `None` for [`OrderCase::Iv`], which has no such formula, and for
/// cases I and VI when both substitutions hit the same position.
pub fn predicted_suffix_diff(
    x: &BitWord,
    x2: &BitWord,
    first: ErrorEvent,
    second: ErrorEvent,
) -> Option<Vec<i64>> {
    let n = x.len();
    let case = classify(first, second);
    let (d1, d2) = (first.d, second.d);
    let (e1, e2) = (first.e?, second.e?);
    let a = |i: usize| i64::from(x.bit(i));
    let b = |i: usize| i64::from(x2.bit(i));
    let xd2 = b(d2);

    let u: Vec<i64> = match case {
        OrderCase::I => {
            if e1 == e2 {
                return None;
            }
            let (l1, l2) = (e1.min(e2), e1.max(e2));
            (1..=n)
                .map(|i| match i {
                    _ if i <= l1 => 0,
                    _ if i <= l2 => a(l2) - b(l2),
                    _ if i <= d1 => 0,
                    _ if i <= d2 => a(i) - xd2,
                    _ => 0,
                })
                .collect()
        }
        OrderCase::Ii => {
            let (l1, l2) = if e1 < d1 { (e1, e2 + 1) } else { (e2, e1) };
            (1..=n)
                .map(|i| match i {
                    _ if i <= l1 => 0,
                    _ if i <= d1 => a(l2) - b(l2 - 1),
                    _ if i < l2 => a(i) + a(l2) - b(l2 - 1) - xd2,
                    _ if i <= d2 => a(i) - xd2,
                    _ => 0,
                })
                .collect()
        }
        OrderCase::Iii => {
            let (l1, l2) = (e1.min(e2), e1.max(e2));
            (1..=n)
                .map(|i| match i {
                    _ if i <= l1 => 0,
                    _ if i <= d1 => a(l2) - b(l2),
                    _ if i <= d2 => a(i) + a(l2) - xd2 - b(l2),
                    _ if i <= l2 => a(l2) - b(l2),
                    _ => 0,
                })
                .collect()
        }
        OrderCase::Iv => return None,
        OrderCase::V => {
            let (l1, l2) = if e1 <= d2 { (e1, e2) } else { (e2 + 1, e1) };
            (1..=n)
                .map(|i| match i {
                    _ if i <= d1 => 0,
                    _ if i < l1 => a(i) - xd2,
                    _ if i <= d2 => a(i) + a(l2) - xd2 - b(l2),
                    _ if i <= l2 => a(l2) - b(l2),
                    _ => 0,
                })
                .collect()
        }
        OrderCase::Vi => {
            if e1 == e2 {
                return None;
            }
            let (l1, l2) = (e1.min(e2), e1.max(e2));
            (1..=n)
                .map(|i| match i {
                    _ if i <= d1 => 0,
                    _ if i <= d2 => a(i) - xd2,
                    _ if i <= l1 => 0,
                    _ if i <= l2 => a(l2) - b(l2),
                    _ => 0,
                })
                .collect()
        }
    };
    Some(u)
}
