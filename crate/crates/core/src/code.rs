//! The code family: all non-constant words of length `n` whose residues
//! `(wt mod 4, f_1 mod 2n, f_2 mod 2n^2)` equal a fixed triple.
//!
//! Parameter selection buckets every non-constant word by its residue
//! triple in one pass and keeps the largest class, which by pigeonhole
//! holds at least `(2^n - 2) / (16 n^3)` words.

use std::fmt;
use std::ops::Range;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::parallel;
use crate::syndrome::{f1_modulus, f2_coefficient, f2_modulus, syndrome_vector, ExactSyndromes, SyndromeVector};
use crate::word::{packed, BitWord};

/// Largest `n` the full `2^n` scans accept.
pub const SCAN_CEILING: usize = 32;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct CodeParams {
    pub n: usize,
    pub c0: u8,
    pub c1: u64,
    pub c2: u64,
}

impl CodeParams {
    pub fn new(n: usize, c0: u8, c1: u64, c2: u64) -> Result<Self> {
        if n < 2 {
            return Err(Error::TooShort { len: n, min: 2 });
        }
        check_residue("c0", u64::from(c0), 4)?;
        check_residue("c1", c1, f1_modulus(n))?;
        check_residue("c2", c2, f2_modulus(n))?;
        Ok(Self { n, c0, c1, c2 })
    }

    /// Parameters of the class containing `x`.
    pub fn of_word(x: &BitWord) -> Result<Self> {
        Self::from_syndrome(syndrome_vector(x))
    }

    pub fn from_syndrome(s: SyndromeVector) -> Result<Self> {
        Self::new(s.n, s.weight_mod4, s.f1_mod, s.f2_mod)
    }

    pub fn syndrome(&self) -> SyndromeVector {
        SyndromeVector {
            n: self.n,
            weight_mod4: self.c0,
            f1_mod: self.c1,
            f2_mod: self.c2,
        }
    }

    /// Number of residue triples for this length: `16 n^3`.
    pub fn class_count(n: usize) -> usize {
        4 * f1_modulus(n) as usize * f2_modulus(n) as usize
    }

    fn bucket_index(&self) -> usize {
        bucket_index(self.n, self.c0 as u64, self.c1, self.c2)
    }
}

impl fmt::Display for CodeParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{},{}", self.c0, self.c1, self.c2)
    }
}

fn check_residue(name: &'static str, value: u64, modulus: u64) -> Result<()> {
    if value >= modulus {
        return Err(Error::ResidueOutOfRange { name, value, modulus });
    }
    Ok(())
}

#[inline]
fn bucket_index(n: usize, c0: u64, c1: u64, c2: u64) -> usize {
    let m1 = f1_modulus(n);
    let m2 = f2_modulus(n);
    ((c0 * m1 + c1) * m2 + c2) as usize
}

/// Size of a code and its redundancy `n - log2(size)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CodeStats {
    pub n: usize,
    pub size: u64,
    /// `None` for an empty code.
    pub redundancy: Option<f64>,
}

impl CodeStats {
    pub fn new(n: usize, size: u64) -> Self {
        let redundancy = (size > 0).then(|| n as f64 - (size as f64).log2());
        Self { n, size, redundancy }
    }
}

pub fn redundancy(stats: &CodeStats) -> Result<f64> {
    stats.redundancy.ok_or(Error::EmptyCode)
}

/// `3 log2 n + 4`.
pub fn redundancy_bound(n: usize) -> f64 {
    3.0 * (n as f64).log2() + 4.0
}

/// `(2^n - 2) / (16 n^3)`.
pub fn pigeonhole_bound(n: usize) -> f64 {
    ((n as f64).exp2() - 2.0) / (16.0 * (n as f64).powi(3))
}

pub fn is_codeword(x: &BitWord, p: &CodeParams) -> Result<bool> {
    if x.len() != p.n {
        return Err(Error::LengthMismatch {
            expected: p.n,
            actual: x.len(),
        });
    }
    Ok(!x.is_constant() && syndrome_vector(x) == p.syndrome())
}

#[inline]
pub fn is_codeword_packed(v: u64, p: &CodeParams) -> bool {
    let n = p.n;
    if v == 0 || v == packed::mask(n) {
        return false;
    }
    let s = ExactSyndromes::of_packed(v, n);
    s.weight % 4 == u64::from(p.c0) && s.f1 % f1_modulus(n) == p.c1 && s.f2 % f2_modulus(n) == p.c2
}

fn check_ceiling(n: usize) -> Result<()> {
    if n < 2 {
        return Err(Error::TooShort { len: n, min: 2 });
    }
    if n > SCAN_CEILING {
        return Err(Error::CeilingExceeded {
            what: "scan",
            len: n,
            ceiling: SCAN_CEILING,
        });
    }
    Ok(())
}

/// Running residues of a word under single-bit toggles.
#[derive(Debug, Clone, Copy)]
struct ResidueTracker {
    m1: u64,
    m2: u64,
    weight: u64,
    f1: u64,
    f2: u64,
}

impl ResidueTracker {
    fn new(v: u64, n: usize) -> Self {
        let s = ExactSyndromes::of_packed(v, n);
        let (m1, m2) = (f1_modulus(n), f2_modulus(n));
        Self {
            m1,
            m2,
            weight: s.weight % 4,
            f1: s.f1 % m1,
            f2: s.f2 % m2,
        }
    }

    /// Applies the toggle of position `i`; `set` says whether it became 1.
    #[inline(always)]
    fn toggle(&mut self, i: u64, set: bool) {
        let c2 = f2_coefficient(i);
        if set {
            self.weight = (self.weight + 1) & 3;
            self.f1 += i;
            self.f2 += c2;
        } else {
            self.weight = (self.weight + 3) & 3;
            self.f1 += self.m1 - i;
            self.f2 += self.m2 - c2;
        }
        if self.f1 >= self.m1 {
            self.f1 -= self.m1;
        }
        if self.f2 >= self.m2 {
            self.f2 -= self.m2;
        }
    }

    #[inline(always)]
    fn index(&self) -> usize {
        ((self.weight * self.m1 + self.f1) * self.m2 + self.f2) as usize
    }

    #[inline(always)]
    fn matches(&self, p: &CodeParams) -> bool {
        self.weight == u64::from(p.c0) && self.f1 == p.c1 && self.f2 == p.c2
    }
}

/// Yields, in ascending order, the packed words `v` in `range` whose
/// residues match `p`. Constant words are not filtered here.
struct AscendingScan<'a> {
    p: &'a CodeParams,
    next: u64,
    end: u64,
    tracker: ResidueTracker,
}

impl<'a> AscendingScan<'a> {
    fn new(p: &'a CodeParams, range: Range<u64>) -> Self {
        Self {
            p,
            next: range.start,
            end: range.end,
            tracker: ResidueTracker::new(range.start, p.n),
        }
    }
}

impl Iterator for AscendingScan<'_> {
    type Item = u64;

    fn next(&mut self) -> Option<u64> {
        let n = self.p.n as u64;
        while self.next < self.end {
            let v = self.next;
            let hit = self.tracker.matches(self.p);
            self.next += 1;
            if self.next < self.end {
                // v -> v+1 clears the trailing ones and sets the next zero
                let ones = v.trailing_ones() as u64;
                for b in 0..ones {
                    self.tracker.toggle(n - b, false);
                }
                self.tracker.toggle(n - ones, true);
            }
            if hit {
                return Some(v);
            }
        }
        None
    }
}

/// Codewords of `p` as packed integers in ascending order.
pub fn enumerate_code_packed(p: &CodeParams) -> Result<Vec<u64>> {
    enumerate_code_packed_with(p, 1)
}

/// As [`enumerate_code_packed`], splitting the scan over `workers` threads.
pub fn enumerate_code_packed_with(p: &CodeParams, workers: usize) -> Result<Vec<u64>> {
    check_ceiling(p.n)?;
    let all = packed::mask(p.n);
    // skip 0^n and 1^n
    let pieces = parallel::split_range(1..all, workers);
    Ok(parallel::map_ranges(pieces, |r| AscendingScan::new(p, r).collect::<Vec<_>>())
        .into_iter()
        .flatten()
        .collect())
}

/// Codewords of `p` in ascending order (position 1 most significant).
pub fn enumerate_code(p: &CodeParams) -> Result<impl Iterator<Item = BitWord> + '_> {
    check_ceiling(p.n)?;
    let n = p.n;
    Ok(AscendingScan::new(p, 1..packed::mask(n)).map(move |v| BitWord::from_packed(v, n)))
}

/// How the histogram scan visits words.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ScanMethod {
    /// Gray-code order with O(1) residue updates per word.
    #[default]
    Gray,
    /// Ascending order, residues recomputed from scratch for every word.
    Direct,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ScanConfig {
    pub workers: usize,
    pub method: ScanMethod,
}

impl Default for ScanConfig {
    fn default() -> Self {
        Self {
            workers: 1,
            method: ScanMethod::Gray,
        }
    }
}

/// Class sizes for every residue triple at one length, constant words
/// excluded.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SyndromeHistogram {
    n: usize,
    counts: Vec<u64>,
}

impl SyndromeHistogram {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn count(&self, p: &CodeParams) -> u64 {
        self.counts[p.bucket_index()]
    }

    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }

    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    /// Largest class; ties go to the lexicographically smallest triple.
    pub fn best(&self) -> (CodeParams, CodeStats) {
        let (idx, &size) = self
            .counts
            .iter()
            .enumerate()
            .max_by(|a, b| a.1.cmp(b.1).then(b.0.cmp(&a.0)))
            .expect("histogram is never empty");
        let m1 = f1_modulus(self.n) as usize;
        let m2 = f2_modulus(self.n) as usize;
        let c2 = (idx % m2) as u64;
        let c1 = ((idx / m2) % m1) as u64;
        let c0 = (idx / (m1 * m2)) as u8;
        let params = CodeParams {
            n: self.n,
            c0,
            c1,
            c2,
        };
        (params, CodeStats::new(self.n, size))
    }
}

#[inline]
fn gray(k: u64) -> u64 {
    k ^ (k >> 1)
}

fn histogram_gray(n: usize, range: Range<u64>) -> Vec<u64> {
    let mut counts = vec![0u64; CodeParams::class_count(n)];
    if range.is_empty() {
        return counts;
    }
    let mut v = gray(range.start);
    let mut t = ResidueTracker::new(v, n);
    counts[t.index()] += 1;
    let n64 = n as u64;
    for k in range.start + 1..range.end {
        let b = k.trailing_zeros() as u64;
        v ^= 1 << b;
        t.toggle(n64 - b, (v >> b) & 1 == 1);
        counts[t.index()] += 1;
    }
    counts
}

fn histogram_direct(n: usize, range: Range<u64>) -> Vec<u64> {
    let mut counts = vec![0u64; CodeParams::class_count(n)];
    let (m1, m2) = (f1_modulus(n), f2_modulus(n));
    for v in range {
        let s = ExactSyndromes::of_packed(v, n);
        counts[bucket_index(n, s.weight % 4, s.f1 % m1, s.f2 % m2)] += 1;
    }
    counts
}

/// Buckets all non-constant words of length `n` by residue triple.
pub fn syndrome_histogram(n: usize, cfg: &ScanConfig) -> Result<SyndromeHistogram> {
    check_ceiling(n)?;
    let pieces = parallel::split_range(0..1u64 << n, cfg.workers);
    let partials = parallel::map_ranges(pieces, |r| match cfg.method {
        ScanMethod::Gray => histogram_gray(n, r),
        ScanMethod::Direct => histogram_direct(n, r),
    });
    let mut counts = vec![0u64; CodeParams::class_count(n)];
    for part in partials {
        for (acc, c) in counts.iter_mut().zip(part) {
            *acc += c;
        }
    }
    for v in [0, packed::mask(n)] {
        let s = ExactSyndromes::of_packed(v, n).reduce(n);
        counts[bucket_index(n, u64::from(s.weight_mod4), s.f1_mod, s.f2_mod)] -= 1;
    }
    Ok(SyndromeHistogram { n, counts })
}

/// Largest code of length `n` in the family.
pub fn choose_params(n: usize) -> Result<(CodeParams, CodeStats)> {
    choose_params_with(n, &ScanConfig::default())
}

pub fn choose_params_with(n: usize, cfg: &ScanConfig) -> Result<(CodeParams, CodeStats)> {
    Ok(syndrome_histogram(n, cfg)?.best())
}
