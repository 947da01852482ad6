//! Exhaustive checks of the list-size-two guarantee and the facts it rests
//! on, for lengths small enough to enumerate.
//!
//! Every pass is deterministic: work is split into contiguous pieces whose
//! partial results are merged in piece order or by commutative sums, so the
//! worker count never changes a reported value.

use std::collections::{BTreeMap, HashMap};
use std::time::Instant;

use serde::Serialize;

use crate::cases::{classify, OrderCase};
use crate::channel::{
    apply_del_sub, classify_weight_delta, error_ball_packed, events_reaching,
    ErrorEvent, Substitution, WeightDeltaClass,
};
use crate::code::{
    choose_params_with, enumerate_code_packed_with, redundancy_bound, CodeParams, CodeStats, ScanConfig,
    ScanMethod, SCAN_CEILING,
};
use crate::error::{Error, Result};
use crate::parallel;
use crate::syndrome::{
    admits_sign_segments, f3_packed, suffix_diff_packed, ExactSyndromes, SegmentStart, SyndromeVector,
};
use crate::word::{packed, BitWord};

pub const SIGN_LEMMA_CEILING: usize = 14;
pub const TABLE1_CEILING: usize = 12;
pub const BRIDGE_CEILING: usize = 16;
pub const FAMILY_CEILING: usize = 16;
pub const DEFAULT_INVENTORY_CAP: usize = 100;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyOptions {
    pub workers: usize,
    /// Most collision records kept; counts stay exact.
    pub inventory_cap: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        Self {
            workers: 1,
            inventory_cap: DEFAULT_INVENTORY_CAP,
        }
    }
}

fn ceiling(what: &'static str, n: usize, max: usize) -> Result<()> {
    if n < 2 {
        return Err(Error::TooShort { len: n, min: 2 });
    }
    if n > max {
        return Err(Error::CeilingExceeded {
            what,
            len: n,
            ceiling: max,
        });
    }
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub d: usize,
    pub e: Option<usize>,
}

impl From<ErrorEvent> for Witness {
    fn from(ev: ErrorEvent) -> Self {
        Self { d: ev.d, e: ev.e }
    }
}

/// One received word reached from two codewords, labeled so `d1 <= d2`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Collision {
    pub x: String,
    pub x_prime: String,
    pub y: String,
    pub w1: Witness,
    pub w2: Witness,
    pub case: Option<OrderCase>,
}

/// Result of checking every representation pair of one collision.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PairCheck {
    /// Exactly-one-substitution representation pairs examined.
    pub representation_pairs: u64,
    /// Pairs not in the between-deletions case.
    pub violations: u64,
    /// Pairs whose deleted symbols differ or whose words differ in weight.
    pub remark3_violations: u64,
    pub case_counts: BTreeMap<OrderCase, u64>,
    /// Canonical witnesses of the pair.
    pub canonical: Collision,
}

/// Checks the ordering claim for two distinct words that both reach `y`,
/// whether or not they share a code.
pub fn check_pair(x: &BitWord, x_prime: &BitWord, y: &BitWord) -> Result<PairCheck> {
    let n = x.len();
    if x_prime.len() != n || y.len() + 1 != n {
        return Err(Error::LengthMismatch {
            expected: n,
            actual: x_prime.len(),
        });
    }
    if n > packed::MAX_LEN {
        return Err(Error::CeilingExceeded {
            what: "packed word",
            len: n,
            ceiling: packed::MAX_LEN,
        });
    }
    let to_p = |w: &BitWord| w.to_packed().expect("length checked");
    Ok(check_pair_packed(to_p(x), to_p(x_prime), to_p(y), n))
}

/// Orders two events by deletion position, carrying the word each came from.
fn orient(a: (u64, ErrorEvent), b: (u64, ErrorEvent)) -> ((u64, ErrorEvent), (u64, ErrorEvent)) {
    if a.1.d <= b.1.d {
        (a, b)
    } else {
        (b, a)
    }
}

fn check_pair_packed(x: u64, xp: u64, y: u64, n: usize) -> PairCheck {
    let subs = |w: u64| -> Vec<ErrorEvent> {
        events_reaching(w, n, y)
            .into_iter()
            .filter(|ev| ev.e.is_some())
            .collect()
    };
    let (ea, eb) = (subs(x), subs(xp));
    let mut out = PairCheck {
        representation_pairs: 0,
        violations: 0,
        remark3_violations: 0,
        case_counts: BTreeMap::new(),
        canonical: canonical_collision(x, xp, y, n),
    };
    let equal_weight = x.count_ones() == xp.count_ones();
    for &a in &ea {
        for &b in &eb {
            let ((w1, ev1), (w2, ev2)) = orient((x, a), (xp, b));
            let case = classify(ev1, ev2);
            out.representation_pairs += 1;
            *out.case_counts.entry(case).or_default() += 1;
            if !case.is_between() {
                out.violations += 1;
            }
            if !equal_weight || packed::bit(w1, n, ev1.d) != packed::bit(w2, n, ev2.d) {
                out.remark3_violations += 1;
            }
        }
    }
    out
}

fn canonical_collision(x: u64, xp: u64, y: u64, n: usize) -> Collision {
    let wa = events_reaching(x, n, y).first().copied();
    let wb = events_reaching(xp, n, y).first().copied();
    let (wa, wb) = (wa.expect("x reaches y"), wb.expect("x' reaches y"));
    let ((w1, ev1), (w2, ev2)) = orient((x, wa), (xp, wb));
    let case = (ev1.e.is_some() && ev2.e.is_some()).then(|| classify(ev1, ev2));
    Collision {
        x: packed::to_string(w1, n),
        x_prime: packed::to_string(w2, n),
        y: packed::to_string(y, n - 1),
        w1: ev1.into(),
        w2: ev2.into(),
        case,
    }
}

/// Codewords covering one received word; ids beyond the third are counted
/// but not stored.
#[derive(Debug, Clone, Copy, Default)]
struct Cover {
    count: u32,
    ids: [u32; 3],
}

impl Cover {
    fn push(&mut self, id: u32) {
        if (self.count as usize) < self.ids.len() {
            self.ids[self.count as usize] = id;
        }
        self.count += 1;
    }

    fn ids(&self) -> &[u32] {
        &self.ids[..(self.count as usize).min(3)]
    }
}

/// Ball-coverage table for a list of codewords.
struct Coverage {
    n: usize,
    words: Vec<u64>,
    table: HashMap<u64, Cover>,
}

impl Coverage {
    fn build(words: Vec<u64>, n: usize, workers: usize) -> Self {
        let pieces = parallel::split_range(0..words.len() as u64, workers);
        let partials = parallel::map_ranges(pieces, |r| {
            let mut table: HashMap<u64, Cover> = HashMap::new();
            for id in r {
                for y in error_ball_packed(words[id as usize], n) {
                    table.entry(y).or_default().push(id as u32);
                }
            }
            table
        });
        // pieces hold ascending id ranges, so merging in piece order keeps
        // ids sorted within every entry
        let mut table: HashMap<u64, Cover> = HashMap::new();
        for part in partials {
            for (y, cover) in part {
                let entry = table.entry(y).or_default();
                let stored = cover.ids().len() as u32;
                for &id in cover.ids() {
                    entry.push(id);
                }
                entry.count += cover.count - stored;
            }
        }
        Self { n, words, table }
    }

    fn max_list_size(&self) -> usize {
        self.table.values().map(|c| c.count as usize).max().unwrap_or(0)
    }

    /// Received words covered more than once, ascending.
    fn collisions(&self) -> Vec<(u64, Cover)> {
        let mut out: Vec<(u64, Cover)> = self
            .table
            .iter()
            .filter(|(_, c)| c.count >= 2)
            .map(|(&y, &c)| (y, c))
            .collect();
        out.sort_unstable_by_key(|&(y, _)| y);
        out
    }

    fn covered(&self) -> usize {
        self.table.len()
    }

    fn ball_entries(&self) -> usize {
        self.table.values().map(|c| c.count as usize).sum()
    }
}

/// Coverage and collision inventory for one code.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ListReport {
    pub code_size: u64,
    pub max_list_size: usize,
    pub covered_words: usize,
    pub ball_entries: usize,
    pub collision_count: u64,
    pub collision_pairs: Vec<Collision>,
    pub inventory_truncated: bool,
}

impl ListReport {
    pub fn passed(&self) -> bool {
        self.max_list_size <= 2
    }
}

/// Ordering check summed over all collisions of one code.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize)]
pub struct Lemma2Report {
    pub colliding_pairs: u64,
    pub representation_pairs: u64,
    pub violations: u64,
    pub remark3_violations: u64,
    pub case_counts: BTreeMap<OrderCase, u64>,
}

impl Lemma2Report {
    pub fn passed(&self) -> bool {
        self.violations == 0 && self.remark3_violations == 0
    }

    fn absorb(&mut self, c: &PairCheck) {
        self.colliding_pairs += 1;
        self.representation_pairs += c.representation_pairs;
        self.violations += c.violations;
        self.remark3_violations += c.remark3_violations;
        for (&k, &v) in &c.case_counts {
            *self.case_counts.entry(k).or_default() += v;
        }
    }

    fn merge(&mut self, other: &Lemma2Report) {
        self.colliding_pairs += other.colliding_pairs;
        self.representation_pairs += other.representation_pairs;
        self.violations += other.violations;
        self.remark3_violations += other.remark3_violations;
        for (&k, &v) in &other.case_counts {
            *self.case_counts.entry(k).or_default() += v;
        }
    }
}

fn code_words(p: &CodeParams, workers: usize) -> Result<Vec<u64>> {
    ceiling("ball coverage", p.n, SCAN_CEILING)?;
    enumerate_code_packed_with(p, workers)
}

fn list_report(cov: &Coverage, cap: usize) -> ListReport {
    let collisions = cov.collisions();
    let mut collision_pairs = Vec::new();
    let mut collision_count = 0u64;
    for (y, cover) in &collisions {
        let ids = cover.ids();
        for (i, &a) in ids.iter().enumerate() {
            for &b in &ids[i + 1..] {
                collision_count += 1;
                if collision_pairs.len() < cap {
                    collision_pairs.push(canonical_collision(
                        cov.words[a as usize],
                        cov.words[b as usize],
                        *y,
                        cov.n,
                    ));
                }
            }
        }
    }
    ListReport {
        code_size: cov.words.len() as u64,
        max_list_size: cov.max_list_size(),
        covered_words: cov.covered(),
        ball_entries: cov.ball_entries(),
        inventory_truncated: collision_count > collision_pairs.len() as u64,
        collision_count,
        collision_pairs,
    }
}

fn lemma2_report(cov: &Coverage, workers: usize) -> Lemma2Report {
    let mut jobs: Vec<(u64, u32, u32)> = Vec::new();
    for (y, cover) in cov.collisions() {
        let ids = cover.ids();
        for (i, &a) in ids.iter().enumerate() {
            for &b in &ids[i + 1..] {
                jobs.push((y, a, b));
            }
        }
    }
    let checks = parallel::map_items(&jobs, workers, |&(y, a, b)| {
        check_pair_packed(cov.words[a as usize], cov.words[b as usize], y, cov.n)
    });
    let mut report = Lemma2Report::default();
    for c in &checks {
        report.absorb(c);
    }
    report
}

/// Exhaustive ball coverage of the code `p`: the largest number of
/// codewords any received word is reachable from.
pub fn verify_list2(p: &CodeParams, opts: &VerifyOptions) -> Result<ListReport> {
    let words = code_words(p, opts.workers)?;
    let cov = Coverage::build(words, p.n, opts.workers);
    Ok(list_report(&cov, opts.inventory_cap))
}

/// Every exactly-one-substitution representation pair of every collision
/// in `p` must have both substitutions between the deletions.
pub fn verify_lemma2(p: &CodeParams, opts: &VerifyOptions) -> Result<Lemma2Report> {
    let words = code_words(p, opts.workers)?;
    let cov = Coverage::build(words, p.n, opts.workers);
    Ok(lemma2_report(&cov, opts.workers))
}

/// Single-deletion balls of distinct codewords are disjoint.
pub fn verify_single_deletion(p: &CodeParams, opts: &VerifyOptions) -> Result<bool> {
    let words = code_words(p, opts.workers)?;
    Ok(deletion_balls_disjoint(&words, p.n))
}

fn deletion_balls_disjoint(words: &[u64], n: usize) -> bool {
    let mut owner: HashMap<u64, u64> = HashMap::new();
    for &x in words {
        for d in 1..=n {
            let y = packed::delete(x, n, d);
            if *owner.entry(y).or_insert(x) != x {
                return false;
            }
        }
    }
    true
}

/// Counterexample search for the sign-segment uniqueness lemma.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SignLemmaReport {
    pub n: usize,
    pub m: usize,
    pub buckets: usize,
    /// Unordered pairs of distinct words with equal exact `f_1..f_{m+1}`.
    pub pairs_checked: u64,
    /// Pairs whose `u` splits into `m + 1` sign-constant segments when the
    /// first segment starts at position 1.
    pub counterexamples: u64,
    /// Same, with the first segment starting at position 2.
    pub counterexamples_from_two: u64,
    /// Up to ten `(x, x')` pairs counted only by the second reading.
    pub from_two_samples: Vec<(String, String)>,
}

impl SignLemmaReport {
    pub fn passed(&self) -> bool {
        self.counterexamples == 0
    }
}

pub fn verify_sign_lemma(n: usize, m: usize, opts: &VerifyOptions) -> Result<SignLemmaReport> {
    if !(1..=2).contains(&m) {
        return Err(Error::UnsupportedOrder(m));
    }
    ceiling("sign lemma", n, SIGN_LEMMA_CEILING)?;
    let mut buckets: HashMap<(u64, u64, u64), Vec<u64>> = HashMap::new();
    for v in 0..(1u64 << n) {
        let s = ExactSyndromes::of_packed(v, n);
        let f3 = if m == 2 { f3_packed(v, n) } else { 0 };
        buckets.entry((s.f1, s.f2, f3)).or_default().push(v);
    }
    let mut groups: Vec<(_, Vec<u64>)> = buckets.into_iter().filter(|(_, g)| g.len() > 1).collect();
    groups.sort_unstable_by_key(|(k, _)| *k);

    struct Partial {
        pairs: u64,
        strict: u64,
        loose: u64,
        samples: Vec<(u64, u64)>,
    }
    let partials = parallel::map_items(&groups, opts.workers, |(_, g)| {
        let mut p = Partial {
            pairs: 0,
            strict: 0,
            loose: 0,
            samples: Vec::new(),
        };
        let mut u = Vec::with_capacity(n);
        for (i, &a) in g.iter().enumerate() {
            for &b in &g[i + 1..] {
                p.pairs += 1;
                suffix_diff_packed(a, b, n, &mut u);
                let strict = admits_sign_segments(&u, m, SegmentStart::FromOne);
                let loose = admits_sign_segments(&u, m, SegmentStart::FromTwo);
                p.strict += u64::from(strict);
                p.loose += u64::from(loose);
                if loose && !strict && p.samples.len() < 10 {
                    p.samples.push((a, b));
                }
            }
        }
        p
    });
    let mut report = SignLemmaReport {
        n,
        m,
        buckets: groups.len(),
        pairs_checked: 0,
        counterexamples: 0,
        counterexamples_from_two: 0,
        from_two_samples: Vec::new(),
    };
    for p in partials {
        report.pairs_checked += p.pairs;
        report.counterexamples += p.strict;
        report.counterexamples_from_two += p.loose;
        for (a, b) in p.samples {
            if report.from_two_samples.len() < 10 {
                report
                    .from_two_samples
                    .push((packed::to_string(a, n), packed::to_string(b, n)));
            }
        }
    }
    Ok(report)
}

/// Congruence-to-equality step: two words in one residue class with equal
/// weight and `|u_i| <= 2` everywhere must have equal exact `f_1` and `f_2`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BridgeReport {
    pub n: usize,
    pub pairs_checked: u64,
    pub counterexamples: u64,
}

impl BridgeReport {
    pub fn passed(&self) -> bool {
        self.counterexamples == 0
    }
}

pub fn verify_congruence_bridge(n: usize, opts: &VerifyOptions) -> Result<BridgeReport> {
    ceiling("congruence bridge", n, BRIDGE_CEILING)?;
    let groups = classes(n);
    let partials = parallel::map_items(&groups, opts.workers, |(_, g)| {
        let mut pairs = 0u64;
        let mut bad = 0u64;
        let mut u = Vec::with_capacity(n);
        for (i, &a) in g.iter().enumerate() {
            for &b in &g[i + 1..] {
                suffix_diff_packed(a, b, n, &mut u);
                if u[0] != 0 || u.iter().any(|v| v.abs() > 2) {
                    continue;
                }
                pairs += 1;
                let (sa, sb) = (ExactSyndromes::of_packed(a, n), ExactSyndromes::of_packed(b, n));
                if sa.f1 != sb.f1 || sa.f2 != sb.f2 {
                    bad += 1;
                }
            }
        }
        (pairs, bad)
    });
    let (pairs_checked, counterexamples) = partials
        .into_iter()
        .fold((0, 0), |acc, (p, b)| (acc.0 + p, acc.1 + b));
    Ok(BridgeReport {
        n,
        pairs_checked,
        counterexamples,
    })
}

/// Non-constant words grouped by residue triple, in triple order.
fn classes(n: usize) -> Vec<(SyndromeVector, Vec<u64>)> {
    let mut map: HashMap<SyndromeVector, Vec<u64>> = HashMap::new();
    for v in 1..packed::mask(n) {
        map.entry(ExactSyndromes::of_packed(v, n).reduce(n)).or_default().push(v);
    }
    let mut out: Vec<_> = map.into_iter().collect();
    out.sort_unstable_by_key(|(k, _)| *k);
    out
}

/// Weight-change table and canonical re-expression over all words of one
/// length.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Table1Report {
    pub n: usize,
    pub events_checked: u64,
    pub delta_violations: u64,
    /// `(x, y)` pairs, `x` non-constant, with no exactly-one-substitution
    /// event of the class predicted from `wt(x) mod 4` and `wt(y)`.
    pub canonical_violations: u64,
    pub constant_words_exempted: u64,
}

impl Table1Report {
    pub fn passed(&self) -> bool {
        self.delta_violations == 0 && self.canonical_violations == 0
    }
}

pub fn verify_table1(n: usize) -> Result<Table1Report> {
    ceiling("weight table", n, TABLE1_CEILING)?;
    let mut report = Table1Report {
        n,
        events_checked: 0,
        delta_violations: 0,
        canonical_violations: 0,
        constant_words_exempted: 0,
    };
    for v in 0..(1u64 << n) {
        let x = BitWord::from_packed(v, n);
        let wt_x = x.weight() as i64;
        // (y -> classes of exactly-one-substitution events reaching it)
        let mut reached: BTreeMap<u64, Vec<WeightDeltaClass>> = BTreeMap::new();
        for ev in ErrorEvent::all(n) {
            let y = apply_del_sub(&x, ev)?;
            report.events_checked += 1;
            let row = WeightDeltaClass::of_event(&x, ev);
            if wt_x - y.weight() as i64 != i64::from(row.delta) {
                report.delta_violations += 1;
            }
            let classes = reached.entry(y.to_packed().expect("short word")).or_default();
            if row.substitution != Substitution::None {
                classes.push(row);
            }
        }
        if x.is_constant() {
            report.constant_words_exempted += 1;
            continue;
        }
        for (y, classes) in reached {
            let wt_y = y.count_ones() as usize;
            let predicted = classify_weight_delta((wt_x % 4) as u8, wt_y, n)?;
            if !classes.contains(&predicted.class) || predicted.weight as i64 != wt_x {
                report.canonical_violations += 1;
            }
        }
    }
    Ok(report)
}

/// One line of the redundancy table.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RedundancyRow {
    pub n: usize,
    pub c0: u8,
    pub c1: u64,
    pub c2: u64,
    pub size: u64,
    pub redundancy: f64,
    pub bound: f64,
    pub margin: f64,
}

impl RedundancyRow {
    pub fn passed(&self) -> bool {
        self.margin >= 0.0
    }
}

pub fn redundancy_row(n: usize, workers: usize) -> Result<RedundancyRow> {
    let cfg = ScanConfig {
        workers,
        method: ScanMethod::Gray,
    };
    let (p, stats) = choose_params_with(n, &cfg)?;
    let redundancy = stats.redundancy.ok_or(Error::EmptyCode)?;
    let bound = redundancy_bound(n);
    Ok(RedundancyRow {
        n,
        c0: p.c0,
        c1: p.c1,
        c2: p.c2,
        size: stats.size,
        redundancy,
        bound,
        margin: bound - redundancy,
    })
}

pub fn redundancy_table(ns: &[usize], workers: usize) -> Result<Vec<RedundancyRow>> {
    ns.iter().map(|&n| redundancy_row(n, workers)).collect()
}

/// List size and ordering checks over every code of one length.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FamilyReport {
    pub n: usize,
    pub nonempty_classes: usize,
    pub max_list_size: usize,
    pub collision_count: u64,
    pub lemma2: Lemma2Report,
    pub single_deletion_failures: usize,
}

impl FamilyReport {
    pub fn passed(&self) -> bool {
        self.max_list_size <= 2 && self.lemma2.passed() && self.single_deletion_failures == 0
    }
}

pub fn verify_family(n: usize, opts: &VerifyOptions) -> Result<FamilyReport> {
    ceiling("family sweep", n, FAMILY_CEILING)?;
    let groups = classes(n);
    let partials = parallel::map_items(&groups, opts.workers, |(_, words)| {
        let cov = Coverage::build(words.clone(), n, 1);
        let list = list_report(&cov, 0);
        let lemma2 = lemma2_report(&cov, 1);
        let disjoint = deletion_balls_disjoint(words, n);
        (list.max_list_size, list.collision_count, lemma2, disjoint)
    });
    let mut report = FamilyReport {
        n,
        nonempty_classes: groups.len(),
        max_list_size: 0,
        collision_count: 0,
        lemma2: Lemma2Report::default(),
        single_deletion_failures: 0,
    };
    for (max, collisions, lemma2, disjoint) in partials {
        report.max_list_size = report.max_list_size.max(max);
        report.collision_count += collisions;
        report.lemma2.merge(&lemma2);
        report.single_deletion_failures += usize::from(!disjoint);
    }
    Ok(report)
}

/// Selectable verification passes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Check {
    List2,
    Lemma2,
    Sign,
    Table1,
    Deletion,
    Bridge,
}

impl Check {
    pub const ALL: [Check; 6] = [
        Check::List2,
        Check::Lemma2,
        Check::Sign,
        Check::Table1,
        Check::Deletion,
        Check::Bridge,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::List2 => "list2",
            Check::Lemma2 => "lemma2",
            Check::Sign => "sign",
            Check::Table1 => "table1",
            Check::Deletion => "deletion",
            Check::Bridge => "bridge",
        }
    }

    /// Checks run when none are named: the code checks always, the
    /// word-pair checks when `n` is within their ceilings.
    pub fn defaults(n: usize) -> Vec<Check> {
        let mut out = vec![Check::List2, Check::Lemma2, Check::Deletion];
        if n <= SIGN_LEMMA_CEILING {
            out.push(Check::Sign);
        }
        if n <= TABLE1_CEILING {
            out.push(Check::Table1);
        }
        out
    }
}

impl std::str::FromStr for Check {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Check::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| format!("unknown check {s:?}"))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerifyReport {
    pub params: CodeParams,
    pub code_size: u64,
    pub redundancy: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_list_size: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub collision_count: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub collision_pairs: Option<Vec<Collision>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lemma2_violations: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lemma2: Option<Lemma2Report>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub single_deletion_ok: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sign_lemma: Option<Vec<SignLemmaReport>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub table1: Option<Table1Report>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bridge: Option<BridgeReport>,
    pub checks: Vec<Check>,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed: Option<f64>,
}

/// Runs the selected checks. Without `params`, the largest code of length
/// `n` is used.
pub fn verify(
    n: usize,
    params: Option<CodeParams>,
    checks: &[Check],
    opts: &VerifyOptions,
) -> Result<VerifyReport> {
    let start = Instant::now();
    ceiling("verify", n, SCAN_CEILING)?;
    let params = match params {
        Some(p) if p.n != n => {
            return Err(Error::LengthMismatch {
                expected: n,
                actual: p.n,
            })
        }
        Some(p) => p,
        None => {
            choose_params_with(
                n,
                &ScanConfig {
                    workers: opts.workers,
                    method: ScanMethod::Gray,
                },
            )?
            .0
        }
    };
    let mut checks = checks.to_vec();
    checks.sort_unstable();
    checks.dedup();

    let words = code_words(&params, opts.workers)?;
    let stats = CodeStats::new(n, words.len() as u64);
    let mut report = VerifyReport {
        params,
        code_size: stats.size,
        redundancy: stats.redundancy,
        max_list_size: None,
        collision_count: None,
        collision_pairs: None,
        lemma2_violations: None,
        lemma2: None,
        single_deletion_ok: None,
        sign_lemma: None,
        table1: None,
        bridge: None,
        checks: checks.clone(),
        passed: true,
        elapsed: None,
    };

    let needs_cov = checks.contains(&Check::List2) || checks.contains(&Check::Lemma2);
    let cov = needs_cov.then(|| Coverage::build(words.clone(), n, opts.workers));
    for check in &checks {
        match check {
            Check::List2 => {
                let list = list_report(cov.as_ref().expect("built"), opts.inventory_cap);
                report.passed &= list.passed();
                report.max_list_size = Some(list.max_list_size);
                report.collision_count = Some(list.collision_count);
                report.collision_pairs = Some(list.collision_pairs);
            }
            Check::Lemma2 => {
                let l2 = lemma2_report(cov.as_ref().expect("built"), opts.workers);
                report.passed &= l2.passed();
                report.lemma2_violations = Some(l2.violations);
                report.lemma2 = Some(l2);
            }
            Check::Deletion => {
                let ok = deletion_balls_disjoint(&words, n);
                report.passed &= ok;
                report.single_deletion_ok = Some(ok);
            }
            Check::Sign => {
                let reports = vec![verify_sign_lemma(n, 1, opts)?, verify_sign_lemma(n, 2, opts)?];
                report.passed &= reports.iter().all(SignLemmaReport::passed);
                report.sign_lemma = Some(reports);
            }
            Check::Table1 => {
                let t = verify_table1(n)?;
                report.passed &= t.passed();
                report.table1 = Some(t);
            }
            Check::Bridge => {
                let b = verify_congruence_bridge(n, opts)?;
                report.passed &= b.passed();
                report.bridge = Some(b);
            }
        }
    }
    report.elapsed = Some(start.elapsed().as_secs_f64());
    Ok(report)
}
