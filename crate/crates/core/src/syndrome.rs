//! Weights, higher-order VT syndromes and the suffix-difference vector.
//!
//! The `j`th-order syndrome of a word `x` of length `n` is
//! `f_j(x) = sum_i (1^(j-1) + 2^(j-1) + ... + i^(j-1)) * x_i`. It can also
//! be summed by suffix weights: `f_j(x) = sum_i (x_i + ... + x_n) * i^(j-1)`.
//! Both orders are exposed so they can be checked against each other.

use std::ops::Deref;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::word::{packed, BitWord};

pub fn weight(x: &BitWord) -> usize {
    x.weight()
}

fn pow_u128(base: u128, exp: u32) -> Option<u128> {
    base.checked_pow(exp)
}

/// Exact `f_j(x)` summed by prefix coefficients.
pub fn vt_syndrome(x: &BitWord, j: u32) -> Result<u128> {
    if j == 0 {
        return Err(Error::ZeroOrder);
    }
    let overflow = || Error::SyndromeOverflow { order: j, len: x.len() };
    let mut coeff: u128 = 0;
    let mut total: u128 = 0;
    for i in 1..=x.len() {
        let term = pow_u128(i as u128, j - 1).ok_or_else(overflow)?;
        coeff = coeff.checked_add(term).ok_or_else(overflow)?;
        if x.bit(i) == 1 {
            total = total.checked_add(coeff).ok_or_else(overflow)?;
        }
    }
    Ok(total)
}

/// Exact `f_j(x)` summed by suffix weights.
pub fn vt_syndrome_by_suffix(x: &BitWord, j: u32) -> Result<u128> {
    if j == 0 {
        return Err(Error::ZeroOrder);
    }
    let overflow = || Error::SyndromeOverflow { order: j, len: x.len() };
    let mut suffix: u128 = 0;
    let mut total: u128 = 0;
    for i in (1..=x.len()).rev() {
        suffix += u128::from(x.bit(i));
        if suffix != 0 {
            let term = pow_u128(i as u128, j - 1).ok_or_else(overflow)?;
            let add = suffix.checked_mul(term).ok_or_else(overflow)?;
            total = total.checked_add(add).ok_or_else(overflow)?;
        }
    }
    Ok(total)
}

/// Coefficient of position `i` in `f_2`: `1 + 2 + ... + i`.
#[inline]
pub fn f2_coefficient(i: u64) -> u64 {
    i * (i + 1) / 2
}

/// Coefficient of position `i` in `f_3`: `1 + 4 + ... + i^2`.
#[inline]
pub fn f3_coefficient(i: u64) -> u64 {
    i * (i + 1) * (2 * i + 1) / 6
}

#[inline]
pub fn f1_modulus(n: usize) -> u64 {
    2 * n as u64
}

#[inline]
pub fn f2_modulus(n: usize) -> u64 {
    2 * (n as u64) * (n as u64)
}

/// Unreduced weight, `f_1` and `f_2` of a word.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExactSyndromes {
    pub weight: u64,
    pub f1: u64,
    pub f2: u64,
}

impl ExactSyndromes {
    pub fn of(x: &BitWord) -> Self {
        let mut s = Self { weight: 0, f1: 0, f2: 0 };
        for i in x.ones_positions() {
            let i = i as u64;
            s.weight += 1;
            s.f1 += i;
            s.f2 += f2_coefficient(i);
        }
        s
    }

    pub fn of_packed(v: u64, n: usize) -> Self {
        let mut s = Self { weight: 0, f1: 0, f2: 0 };
        let mut rest = v;
        while rest != 0 {
            let b = rest.trailing_zeros() as u64;
            rest &= rest - 1;
            let i = n as u64 - b;
            s.weight += 1;
            s.f1 += i;
            s.f2 += f2_coefficient(i);
        }
        s
    }

    pub fn reduce(self, n: usize) -> SyndromeVector {
        SyndromeVector {
            n,
            weight_mod4: (self.weight % 4) as u8,
            f1_mod: self.f1 % f1_modulus(n),
            f2_mod: self.f2 % f2_modulus(n),
        }
    }
}

/// Exact `f_3` of a packed word.
pub fn f3_packed(v: u64, n: usize) -> u64 {
    let mut rest = v;
    let mut total = 0;
    while rest != 0 {
        let b = rest.trailing_zeros() as u64;
        rest &= rest - 1;
        total += f3_coefficient(n as u64 - b);
    }
    total
}

/// Residues `(wt mod 4, f_1 mod 2n, f_2 mod 2n^2)` of a word of length `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct SyndromeVector {
    pub n: usize,
    pub weight_mod4: u8,
    pub f1_mod: u64,
    pub f2_mod: u64,
}

pub fn syndrome_vector(x: &BitWord) -> SyndromeVector {
    ExactSyndromes::of(x).reduce(x.len())
}

pub fn syndrome_vector_packed(v: u64, n: usize) -> SyndromeVector {
    ExactSyndromes::of_packed(v, n).reduce(n)
}

/// `u_i = (x_i + ... + x_n) - (x'_i + ... + x'_n)` for `i = 1..n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct SuffixDiff(Vec<i64>);

impl SuffixDiff {
    pub fn into_inner(self) -> Vec<i64> {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&v| v == 0)
    }

    pub fn max_abs(&self) -> i64 {
        self.0.iter().map(|v| v.abs()).max().unwrap_or(0)
    }

    /// Value at 1-based position `i`.
    pub fn at(&self, i: usize) -> i64 {
        self.0[i - 1]
    }
}

impl Deref for SuffixDiff {
    type Target = [i64];

    fn deref(&self) -> &[i64] {
        &self.0
    }
}

pub fn suffix_diff(x: &BitWord, x2: &BitWord) -> Result<SuffixDiff> {
    if x.len() != x2.len() {
        return Err(Error::LengthMismatch {
            expected: x.len(),
            actual: x2.len(),
        });
    }
    let n = x.len();
    let mut u = vec![0i64; n];
    let mut acc = 0i64;
    for i in (1..=n).rev() {
        acc += i64::from(x.bit(i)) - i64::from(x2.bit(i));
        u[i - 1] = acc;
    }
    Ok(SuffixDiff(u))
}

/// Suffix difference of two packed words of length `n`.
pub fn suffix_diff_packed(x: u64, x2: u64, n: usize, out: &mut Vec<i64>) {
    out.clear();
    out.resize(n, 0);
    let mut acc = 0i64;
    for i in (1..=n).rev() {
        acc += i64::from(packed::bit(x, n, i)) - i64::from(packed::bit(x2, n, i));
        out[i - 1] = acc;
    }
}

/// Where the first sign-constant segment begins.
///
/// With breakpoints `p_1 < ... < p_m` the segments are `[p_{j-1}+1, p_j]`
/// for `j = 1..=m+1`, `p_{m+1} = n`. `FromOne` takes `p_0 = 0` so every
/// position is covered; `FromTwo` takes `p_0 = 1`, leaving `u_1` free.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SegmentStart {
    #[default]
    FromOne,
    FromTwo,
}

impl SegmentStart {
    fn first(self) -> usize {
        match self {
            SegmentStart::FromOne => 1,
            SegmentStart::FromTwo => 2,
        }
    }
}

fn sign_constant(values: &[i64]) -> bool {
    values.iter().all(|&v| v >= 0) || values.iter().all(|&v| v <= 0)
}

/// True iff every segment cut by `breakpoints` is all `>= 0` or all `<= 0`.
/// The first segment starts at position 1.
pub fn sign_segments_ok(u: &[i64], breakpoints: &[usize]) -> Result<bool> {
    sign_segments_ok_with(u, breakpoints, SegmentStart::FromOne)
}

pub fn sign_segments_ok_with(u: &[i64], breakpoints: &[usize], start: SegmentStart) -> Result<bool> {
    let n = u.len();
    let ascending = breakpoints.windows(2).all(|w| w[0] < w[1]);
    let in_range = breakpoints.iter().all(|&p| p >= 1 && p <= n);
    if !ascending || !in_range {
        return Err(Error::BadBreakpoints {
            breakpoints: breakpoints.to_vec(),
            len: n,
        });
    }
    let mut lo = start.first();
    for &hi in breakpoints.iter().chain(std::iter::once(&n)) {
        if lo <= hi && !sign_constant(&u[lo - 1..hi]) {
            return Ok(false);
        }
        lo = hi + 1;
    }
    Ok(true)
}

/// Number of sign changes between consecutive nonzero entries of `u`,
/// counting from the segment start.
pub fn sign_alternations(u: &[i64], start: SegmentStart) -> usize {
    let mut last = 0i64;
    let mut count = 0;
    for &v in u.iter().skip(start.first() - 1) {
        if v == 0 {
            continue;
        }
        let s = v.signum();
        if last != 0 && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

/// Whether some `m` ascending breakpoints in `[1, n]` make every segment
/// sign-constant.
pub fn admits_sign_segments(u: &[i64], m: usize, start: SegmentStart) -> bool {
    m <= u.len() && sign_alternations(u, start) <= m
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> BitWord {
        s.parse().unwrap()
    }

    // Direct double sum over the defining coefficients.
    fn oracle_f(x: &BitWord, j: u32) -> u128 {
        let mut total = 0u128;
        for i in 1..=x.len() {
            if x.bit(i) == 1 {
                total += (1..=i as u128).map(|l| l.pow(j - 1)).sum::<u128>();
            }
        }
        total
    }

    #[test]
    fn syndrome_examples() {
        assert_eq!(vt_syndrome(&BitWord::zeros(9), 1).unwrap(), 0);
        assert_eq!(vt_syndrome(&BitWord::zeros(9), 3).unwrap(), 0);
        assert_eq!(vt_syndrome(&w("1101101000101110"), 1).unwrap(), 72);
        assert_eq!(vt_syndrome(&w("1010"), 2).unwrap(), 7);
        assert_eq!(vt_syndrome(&w("1010"), 0), Err(Error::ZeroOrder));
        assert_eq!(vt_syndrome_by_suffix(&w("1010"), 0), Err(Error::ZeroOrder));
    }

    #[test]
    fn syndrome_vector_examples() {
        let z = syndrome_vector(&BitWord::zeros(4));
        assert_eq!((z.weight_mod4, z.f1_mod, z.f2_mod), (0, 0, 0));
        let s = syndrome_vector(&w("1010"));
        assert_eq!((s.weight_mod4, s.f1_mod, s.f2_mod), (2, 4, 7));
        let x = w("1101101000101110");
        let s = syndrome_vector(&x);
        let f2 = oracle_f(&x, 2);
        assert_eq!(f2, 439);
        assert_eq!((s.weight_mod4, s.f1_mod, s.f2_mod), (1, 8, 439));
    }

    #[test]
    fn both_summation_orders_agree_exhaustively() {
        for n in 1..=12 {
            for v in 0..(1u64 << n) {
                let x = BitWord::from_packed(v, n);
                for j in 1..=3 {
                    let a = vt_syndrome(&x, j).unwrap();
                    assert_eq!(a, vt_syndrome_by_suffix(&x, j).unwrap());
                    if n <= 8 {
                        assert_eq!(a, oracle_f(&x, j));
                    }
                }
                let e = ExactSyndromes::of_packed(v, n);
                assert_eq!(e, ExactSyndromes::of(&x));
                assert_eq!(u128::from(e.f2), vt_syndrome(&x, 2).unwrap());
                assert_eq!(u128::from(f3_packed(v, n)), vt_syndrome(&x, 3).unwrap());
            }
        }
    }

    #[test]
    fn overflow_is_reported() {
        let x = BitWord::ones(200);
        assert!(matches!(
            vt_syndrome(&x, 40),
            Err(Error::SyndromeOverflow { order: 40, .. })
        ));
    }

    #[test]
    fn suffix_diff_rejects_mismatch() {
        assert_eq!(
            suffix_diff(&w("101"), &w("10")),
            Err(Error::LengthMismatch { expected: 3, actual: 2 })
        );
        assert!(suffix_diff(&w("101"), &w("101")).unwrap().is_zero());
    }

    #[test]
    fn sign_segment_examples() {
        assert!(sign_segments_ok(&[0; 6], &[2, 4]).unwrap());
        let u = [0, 1, -1, 0];
        assert!(sign_segments_ok(&u, &[2]).unwrap());
        assert!(!sign_segments_ok(&u, &[3]).unwrap());
        assert!(sign_segments_ok_with(&u, &[2], SegmentStart::FromTwo).unwrap());
        assert!(!sign_segments_ok_with(&u, &[3], SegmentStart::FromTwo).unwrap());
        assert!(sign_segments_ok(&u, &[3, 2]).is_err());
        assert!(sign_segments_ok(&u, &[0]).is_err());
        assert!(sign_segments_ok(&u, &[5]).is_err());
    }

    #[test]
    fn literal_start_leaves_first_entry_free() {
        let u = [-1, 1, 1, 0];
        assert!(!sign_segments_ok(&u, &[3]).unwrap());
        assert!(sign_segments_ok_with(&u, &[3], SegmentStart::FromTwo).unwrap());
        assert_eq!(sign_alternations(&u, SegmentStart::FromOne), 1);
        assert_eq!(sign_alternations(&u, SegmentStart::FromTwo), 0);
    }

    fn breakpoint_tuples(n: usize, m: usize) -> Vec<Vec<usize>> {
        fn rec(lo: usize, n: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if left == 0 {
                out.push(cur.clone());
                return;
            }
            for p in lo..=n {
                cur.push(p);
                rec(p + 1, n, left - 1, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(1, n, m, &mut Vec::new(), &mut out);
        out
    }

    #[test]
    fn alternation_count_matches_breakpoint_search() {
        // every vector over {-2..2} up to length 6
        for n in 1..=6usize {
            let total = 5usize.pow(n as u32);
            for code in 0..total {
                let mut c = code;
                let u: Vec<i64> = (0..n)
                    .map(|_| {
                        let v = (c % 5) as i64 - 2;
                        c /= 5;
                        v
                    })
                    .collect();
                for m in 1..=2 {
                    for start in [SegmentStart::FromOne, SegmentStart::FromTwo] {
                        let brute = breakpoint_tuples(n, m)
                            .iter()
                            .any(|p| sign_segments_ok_with(&u, p, start).unwrap());
                        assert_eq!(brute, admits_sign_segments(&u, m, start), "u={u:?} m={m}");
                    }
                }
            }
        }
    }
}
