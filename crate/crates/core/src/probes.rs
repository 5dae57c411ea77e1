//! Bounded numeric probes: cycle detection, growth-point census, and a
//! data-parallel range verifier.
//!
//! Nothing here can loop forever. Every probe takes an explicit step budget,
//! and "budget exhausted without an answer" is a first-class inconclusive
//! result rather than an error or a hang.
//!
//! [`verify_range`] partitions its range into disjoint chunks processed by
//! scoped worker threads. The per-chunk summaries merge with associative,
//! tie-broken operations (logical and, max with smallest-start tie break,
//! saturating sum, minimum), so the output is identical for any worker count.
//! Orbit values that fit in `u128` run on a checked machine-word fast path;
//! anything that would overflow falls back to arbitrary precision for that
//! start. The fast path is held equal to [`col_step`] by tests.

use std::collections::HashSet;

use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::orbit::{classify_mod4, col_step};
use crate::{Error, Nat};

/// Outcome of a cycle search along one orbit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleReport {
    pub start: Nat,
    /// False means the budget ran out before any value repeated: inconclusive.
    pub cycle_found: bool,
    /// The cycle, listed from its entry point in map order; empty when no
    /// cycle was found.
    pub cycle_members: Vec<Nat>,
    /// True when the cycle is the fixed point {1}.
    pub is_trivial: bool,
    /// Successor applications spent in the detection phase.
    pub steps_used: u64,
}

/// Growth points observed along one orbit prefix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GrowthCensus {
    pub start: Nat,
    /// Number of orbit elements examined (`x_1 ..= x_horizon`, or fewer if
    /// the orbit reaches 1 first).
    pub horizon: u64,
    /// 1-based indices `i` with `x_i ≡ 3 (mod 4)`.
    pub growth_indices: Vec<u64>,
    /// The witnesses `y_i = (x_i - 3) / 4`, parallel to `growth_indices`.
    pub y_values: Vec<Nat>,
    /// Count of distinct values among `y_values`.
    pub distinct_y: usize,
}

/// Aggregate result of verifying every start in a range.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RangeSummary {
    pub lo: Nat,
    pub hi: Nat,
    /// True when every start reached 1 within the step budget.
    pub all_converged: bool,
    /// The largest odd orbit value observed anywhere in the range.
    pub max_excursion: Nat,
    /// The smallest start whose orbit attains `max_excursion`.
    pub worst_start: Nat,
    /// Total accelerated steps taken across all starts (saturating).
    pub total_steps: u64,
    /// The smallest start that failed to reach 1, if any.
    pub first_nonconverged: Option<Nat>,
}

/// One application of the map on `u128`, or `None` on overflow.
fn col_step_u128(x: u128) -> Option<(u128, u32)> {
    debug_assert!(x >= 1);
    if x & 1 == 1 {
        let raised = x.checked_mul(3)?.checked_add(1)?;
        let m = raised.trailing_zeros();
        Some((raised >> m, m))
    } else {
        let m = x.trailing_zeros();
        Some((x >> m, m))
    }
}

enum Walk<T> {
    Found { members: Vec<T>, steps_used: u64 },
    Inconclusive { steps_used: u64 },
    Overflow,
}

/// Brent's cycle detection over an arbitrary successor, with the detection
/// walk capped at `budget` successor applications. Once a cycle is detected
/// the entry point and members are recovered without further budgeting (that
/// recovery is bounded by the structure already found).
fn brent_cycle<T, F>(start: &T, succ: F, budget: u64) -> Walk<T>
where
    T: Clone + Eq,
    F: Fn(&T) -> Option<T>,
{
    let mut steps_used = 0u64;
    let mut power = 1u64;
    let mut lambda = 0u64;
    let mut tortoise = start.clone();
    let mut hare = start.clone();
    loop {
        if steps_used == budget {
            return Walk::Inconclusive { steps_used };
        }
        hare = match succ(&hare) {
            Some(v) => v,
            None => return Walk::Overflow,
        };
        steps_used += 1;
        lambda += 1;
        if hare == tortoise {
            break;
        }
        if lambda == power {
            tortoise = hare.clone();
            power = power.saturating_mul(2);
            lambda = 0;
        }
    }
    // A cycle of length `lambda` exists. Slide a window of that length from
    // the start until its ends meet: the meeting point is the cycle entry.
    let advance = |from: &T, count: u64| -> Option<T> {
        let mut cur = from.clone();
        for _ in 0..count {
            cur = succ(&cur)?;
        }
        Some(cur)
    };
    let recover = || -> Option<Vec<T>> {
        let mut lead = advance(start, lambda)?;
        let mut trail = start.clone();
        while trail != lead {
            trail = succ(&trail)?;
            lead = succ(&lead)?;
        }
        let mut members = vec![trail.clone()];
        let mut cur = succ(&trail)?;
        while cur != trail {
            members.push(cur.clone());
            cur = succ(&cur)?;
        }
        Some(members)
    };
    match recover() {
        Some(members) => Walk::Found { members, steps_used },
        None => Walk::Overflow,
    }
}

/// Search `x1`'s orbit for a repeated value within `max_steps` applications.
///
/// A repeat certifies a cycle; reaching 1 shows up as the trivial cycle {1}
/// since 1 is a fixed point of the accelerated map. If the budget runs out
/// first the report is inconclusive (`cycle_found == false`).
pub fn cycle_probe(x1: &Nat, max_steps: u64) -> Result<CycleReport, Error> {
    if x1.is_zero() {
        return Err(Error::ZeroInput);
    }
    if max_steps == 0 {
        return Err(Error::TooSmall {
            what: "max_steps",
            min: 1,
            got: 0,
        });
    }
    if let Some(small) = x1.to_u128() {
        match brent_cycle(&small, |&v| col_step_u128(v).map(|(next, _)| next), max_steps) {
            Walk::Found { members, steps_used } => {
                return Ok(report(x1, members.into_iter().map(Nat::from).collect(), steps_used));
            }
            Walk::Inconclusive { steps_used } => return Ok(inconclusive(x1, steps_used)),
            Walk::Overflow => {} // fall through to arbitrary precision
        }
    }
    let succ = |v: &Nat| Some(col_step(v).expect("orbit values stay positive").0);
    match brent_cycle(x1, succ, max_steps) {
        Walk::Found { members, steps_used } => Ok(report(x1, members, steps_used)),
        Walk::Inconclusive { steps_used } => Ok(inconclusive(x1, steps_used)),
        Walk::Overflow => unreachable!("arbitrary-precision successor is total"),
    }
}

fn report(start: &Nat, members: Vec<Nat>, steps_used: u64) -> CycleReport {
    let is_trivial = members.len() == 1 && members[0].is_one();
    CycleReport {
        start: start.clone(),
        cycle_found: true,
        cycle_members: members,
        is_trivial,
        steps_used,
    }
}

fn inconclusive(start: &Nat, steps_used: u64) -> CycleReport {
    CycleReport {
        start: start.clone(),
        cycle_found: false,
        cycle_members: Vec::new(),
        is_trivial: false,
        steps_used,
    }
}

/// Walk the orbit elements `x_1 ..= x_horizon` (stopping early at 1) and
/// record every growth point together with its witness `y = (x - 3) / 4`.
pub fn growth_census(x1: &Nat, horizon: u64) -> Result<GrowthCensus, Error> {
    if x1.is_zero() {
        return Err(Error::ZeroInput);
    }
    if horizon == 0 {
        return Err(Error::TooSmall {
            what: "horizon",
            min: 1,
            got: 0,
        });
    }
    let mut growth_indices = Vec::new();
    let mut y_values = Vec::new();
    let mut current = x1.clone();
    let mut index = 1u64;
    loop {
        if classify_mod4(&current).is_growth {
            growth_indices.push(index);
            y_values.push((&current - 3u32) >> 2u32);
        }
        if current.is_one() || index == horizon {
            break;
        }
        current = col_step(&current)?.0;
        index += 1;
    }
    let distinct_y = y_values.iter().collect::<HashSet<_>>().len();
    Ok(GrowthCensus {
        start: x1.clone(),
        horizon,
        growth_indices,
        y_values,
        distinct_y,
    })
}

/// Per-start result used by the range verifier.
struct StartStats {
    converged: bool,
    steps: u64,
    peak_odd: Nat,
}

fn start_stats(x: &Nat, budget: u64) -> StartStats {
    if let Some(small) = x.to_u128() {
        if let Some(stats) = start_stats_u128(small, budget) {
            return stats;
        }
    }
    start_stats_big(x, budget)
}

fn start_stats_u128(x: u128, budget: u64) -> Option<StartStats> {
    let mut peak = if x & 1 == 1 { x } else { 1 };
    let mut current = x;
    let mut steps = 0u64;
    while current != 1 && steps < budget {
        let (next, _) = col_step_u128(current)?;
        current = next;
        steps += 1;
        if current > peak {
            peak = current;
        }
    }
    Some(StartStats {
        converged: current == 1,
        steps,
        peak_odd: Nat::from(peak),
    })
}

fn start_stats_big(x: &Nat, budget: u64) -> StartStats {
    let mut peak = if x.is_odd() { x.clone() } else { Nat::one() };
    let mut current = x.clone();
    let mut steps = 0u64;
    while !current.is_one() && steps < budget {
        current = col_step(&current).expect("orbit values stay positive").0;
        steps += 1;
        if current > peak {
            peak = current.clone();
        }
    }
    StartStats {
        converged: current.is_one(),
        steps,
        peak_odd: peak,
    }
}

#[derive(Clone)]
struct ChunkSummary {
    all_converged: bool,
    /// `(peak, start attaining it)`; `None` for an empty chunk.
    excursion: Option<(Nat, Nat)>,
    total_steps: u64,
    first_nonconverged: Option<Nat>,
}

impl ChunkSummary {
    fn empty() -> Self {
        ChunkSummary {
            all_converged: true,
            excursion: None,
            total_steps: 0,
            first_nonconverged: None,
        }
    }

    fn absorb_start(&mut self, start: &Nat, stats: StartStats) {
        self.all_converged &= stats.converged;
        if !stats.converged && self.first_nonconverged.is_none() {
            self.first_nonconverged = Some(start.clone());
        }
        self.total_steps = self.total_steps.saturating_add(stats.steps);
        let better = match &self.excursion {
            None => true,
            Some((peak, _)) => stats.peak_odd > *peak,
        };
        if better {
            self.excursion = Some((stats.peak_odd, start.clone()));
        }
    }

    /// Associative merge; `self` comes from smaller starts than `other`.
    fn merge(mut self, other: ChunkSummary) -> ChunkSummary {
        self.all_converged &= other.all_converged;
        self.total_steps = self.total_steps.saturating_add(other.total_steps);
        if self.first_nonconverged.is_none() {
            self.first_nonconverged = other.first_nonconverged;
        }
        self.excursion = match (self.excursion, other.excursion) {
            (None, e) | (e, None) => e,
            (Some(a), Some(b)) => {
                // Strict comparison keeps the smaller (earlier) start on ties.
                if b.0 > a.0 {
                    Some(b)
                } else {
                    Some(a)
                }
            }
        };
        self
    }
}

fn verify_chunk(lo: &Nat, hi: &Nat, budget: u64) -> ChunkSummary {
    let mut summary = ChunkSummary::empty();
    let mut start = lo.clone();
    loop {
        summary.absorb_start(&start, start_stats(&start, budget));
        if start == *hi {
            break;
        }
        start += 1u32;
    }
    summary
}

/// Check that every start in `[lo, hi]` reaches 1 within `step_budget`
/// accelerated steps, aggregating the peak odd excursion and total step
/// count. `workers` caps the thread count; the output is bit-identical for
/// any worker count.
pub fn verify_range(
    lo: &Nat,
    hi: &Nat,
    step_budget: u64,
    workers: usize,
) -> Result<RangeSummary, Error> {
    if lo.is_zero() || lo > hi {
        return Err(Error::InvalidRange {
            lo: lo.clone(),
            hi: hi.clone(),
        });
    }
    if step_budget == 0 {
        return Err(Error::TooSmall {
            what: "step_budget",
            min: 1,
            got: 0,
        });
    }
    if workers == 0 {
        return Err(Error::TooSmall {
            what: "workers",
            min: 1,
            got: 0,
        });
    }

    let width = hi - lo + 1u32;
    let worker_count = Nat::from(workers).min(width.clone());
    let chunk_size = width.div_ceil(&worker_count);
    let chunks: Vec<(Nat, Nat)> = {
        let mut out = Vec::new();
        let mut from = lo.clone();
        while from <= *hi {
            let to = (&from + &chunk_size - 1u32).min(hi.clone());
            out.push((from.clone(), to.clone()));
            from = to + 1u32;
        }
        out
    };

    let summaries: Vec<ChunkSummary> = std::thread::scope(|scope| {
        let handles: Vec<_> = chunks
            .iter()
            .map(|(a, b)| scope.spawn(move || verify_chunk(a, b, step_budget)))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("verifier worker panicked"))
            .collect()
    });

    let merged = summaries
        .into_iter()
        .fold(ChunkSummary::empty(), ChunkSummary::merge);
    let (max_excursion, worst_start) = merged
        .excursion
        .expect("range is nonempty, so at least one start was examined");
    Ok(RangeSummary {
        lo: lo.clone(),
        hi: hi.clone(),
        all_converged: merged.all_converged,
        max_excursion,
        worst_start,
        total_steps: merged.total_steps,
        first_nonconverged: merged.first_nonconverged,
    })
}
