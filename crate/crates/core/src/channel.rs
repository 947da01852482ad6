//! The single-deletion single-substitution channel.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::word::{packed, BitWord};

/// Delete position `d`, and flip position `e` first when present.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct ErrorEvent {
    pub d: usize,
    pub e: Option<usize>,
}

impl ErrorEvent {
    pub fn new(d: usize, e: usize) -> Self {
        Self { d, e: Some(e) }
    }

    pub fn deletion(d: usize) -> Self {
        Self { d, e: None }
    }

    pub fn validate(&self, n: usize) -> Result<()> {
        if n < 2 {
            return Err(Error::TooShort { len: n, min: 2 });
        }
        if self.d < 1 || self.d > n {
            return Err(Error::PositionOutOfRange { pos: self.d, len: n });
        }
        if let Some(e) = self.e {
            if e < 1 || e > n {
                return Err(Error::PositionOutOfRange { pos: e, len: n });
            }
            if e == self.d {
                return Err(Error::SubstitutionAtDeletion { pos: e });
            }
        }
        Ok(())
    }

    /// Canonical witness order: exactly-one-substitution events first, then
    /// by `d`, then by `e`.
    pub fn witness_key(&self) -> (bool, usize, usize) {
        (self.e.is_none(), self.d, self.e.unwrap_or(0))
    }

    /// Every valid event for words of length `n`: for each `d`, the pure
    /// deletion and then each substitution position.
    pub fn all(n: usize) -> impl Iterator<Item = ErrorEvent> {
        (1..=n).flat_map(move |d| {
            std::iter::once(ErrorEvent::deletion(d))
                .chain((1..=n).filter(move |&e| e != d).map(move |e| ErrorEvent::new(d, e)))
        })
    }
}

impl fmt::Display for ErrorEvent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.e {
            Some(e) => write!(f, "(d={}, e={})", self.d, e),
            None => write!(f, "(d={}, e=none)", self.d),
        }
    }
}

/// `E(x, d, e)`: flip `e` (if any), then delete `d`.
pub fn apply_del_sub(x: &BitWord, ev: ErrorEvent) -> Result<BitWord> {
    ev.validate(x.len())?;
    let mut z = x.clone();
    if let Some(e) = ev.e {
        z.flip(e);
    }
    Ok(z.without(ev.d))
}

/// Packed form of [`apply_del_sub`]; the event must be valid for `n`.
#[inline]
pub fn apply_packed(v: u64, n: usize, ev: ErrorEvent) -> u64 {
    let z = match ev.e {
        Some(e) => packed::flip(v, n, e),
        None => v,
    };
    packed::delete(z, n, ev.d)
}

/// Every (event, received word) pair for `x`, with multiplicity.
pub fn ball_events(x: &BitWord) -> Result<Vec<(ErrorEvent, BitWord)>> {
    if x.len() < 2 {
        return Err(Error::TooShort { len: x.len(), min: 2 });
    }
    ErrorEvent::all(x.len())
        .map(|ev| apply_del_sub(x, ev).map(|y| (ev, y)))
        .collect()
}

/// `B_{1,1}(x)`: all distinct words reachable by one deletion and at most
/// one substitution.
pub fn error_ball(x: &BitWord) -> Result<BTreeSet<BitWord>> {
    Ok(ball_events(x)?.into_iter().map(|(_, y)| y).collect())
}

/// Sorted distinct members of the ball of a packed word.
pub fn error_ball_packed(v: u64, n: usize) -> Vec<u64> {
    let mut ys: Vec<u64> = ErrorEvent::all(n).map(|ev| apply_packed(v, n, ev)).collect();
    ys.sort_unstable();
    ys.dedup();
    ys
}

/// Events of `x` that produce `y`, canonical witness first.
pub fn events_reaching(x: u64, n: usize, y: u64) -> Vec<ErrorEvent> {
    let mut evs: Vec<ErrorEvent> = ErrorEvent::all(n)
        .filter(|&ev| apply_packed(x, n, ev) == y)
        .collect();
    evs.sort_by_key(ErrorEvent::witness_key);
    evs
}

/// Smallest event under [`ErrorEvent::witness_key`] mapping `x` to `y`.
pub fn canonical_witness(x: &BitWord, y: &BitWord) -> Option<ErrorEvent> {
    if x.len() != y.len() + 1 || x.len() < 2 {
        return None;
    }
    ErrorEvent::all(x.len())
        .filter(|&ev| apply_del_sub(x, ev).is_ok_and(|z| &z == y))
        .min_by_key(ErrorEvent::witness_key)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Substitution {
    None,
    ZeroToOne,
    OneToZero,
}

impl Substitution {
    /// Direction of flipping a symbol currently equal to `bit`.
    pub fn flipping(bit: u8) -> Self {
        if bit == 0 {
            Substitution::ZeroToOne
        } else {
            Substitution::OneToZero
        }
    }

    /// The symbol value a flip of this kind starts from.
    pub fn source(self) -> Option<u8> {
        match self {
            Substitution::None => None,
            Substitution::ZeroToOne => Some(0),
            Substitution::OneToZero => Some(1),
        }
    }
}

/// One row of the weight-change table: `wt(x) - wt(y)` for a deleted
/// symbol value and a substitution kind.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct WeightDeltaClass {
    pub delta: i8,
    pub deleted: u8,
    pub substitution: Substitution,
}

impl WeightDeltaClass {
    pub const TABLE: [WeightDeltaClass; 6] = [
        Self::row(1, 1, Substitution::None),
        Self::row(2, 1, Substitution::OneToZero),
        Self::row(0, 1, Substitution::ZeroToOne),
        Self::row(0, 0, Substitution::None),
        Self::row(1, 0, Substitution::OneToZero),
        Self::row(-1, 0, Substitution::ZeroToOne),
    ];

    const fn row(delta: i8, deleted: u8, substitution: Substitution) -> Self {
        Self {
            delta,
            deleted,
            substitution,
        }
    }

    /// Table row for a deleted value and substitution kind.
    pub fn lookup(deleted: u8, substitution: Substitution) -> Self {
        *Self::TABLE
            .iter()
            .find(|r| r.deleted == deleted && r.substitution == substitution)
            .expect("table covers every combination")
    }

    /// Row selected by applying `ev` to `x`.
    pub fn of_event(x: &BitWord, ev: ErrorEvent) -> Self {
        let sub = ev
            .e
            .map_or(Substitution::None, |e| Substitution::flipping(x.bit(e)));
        Self::lookup(x.bit(ev.d), sub)
    }

    /// Exactly-one-substitution row for a weight change.
    pub fn canonical(delta: i8) -> Option<Self> {
        let (deleted, sub) = match delta {
            -1 => (0, Substitution::ZeroToOne),
            0 => (1, Substitution::ZeroToOne),
            1 => (0, Substitution::OneToZero),
            2 => (1, Substitution::OneToZero),
            _ => return None,
        };
        Some(Self::lookup(deleted, sub))
    }
}

/// Sent-word weight and canonical error class recovered from `wt(x) mod 4`
/// and the received weight.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct WeightRecovery {
    pub weight: usize,
    pub class: WeightDeltaClass,
}

/// Recovers `wt(x)` as the unique value congruent to `c0` in
/// `{wt_y - 1, ..., wt_y + 2}` and returns its canonical class. `n` is the
/// sent length; a recovered weight outside `[0, n]` is an error.
pub fn classify_weight_delta(c0: u8, wt_y: usize, n: usize) -> Result<WeightRecovery> {
    let lo = wt_y as i64 - 1;
    let weight = lo + (i64::from(c0) - lo).rem_euclid(4);
    if weight < 0 || weight > n as i64 {
        return Err(Error::WeightOutOfRange { weight, len: n });
    }
    let delta = (weight - wt_y as i64) as i8;
    let class = WeightDeltaClass::canonical(delta).expect("delta lies in the four-value window");
    Ok(WeightRecovery {
        weight: weight as usize,
        class,
    })
}
