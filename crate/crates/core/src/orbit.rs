//! The accelerated Collatz map, orbit records, and growth-point tests.
//!
//! One application of the map ([`col_step`]) removes *every* factor of two in
//! a single step: for odd `x` it returns `((3x + 1) / 2^m, m)` with `m` the
//! 2-adic valuation of `3x + 1`; for even `x` it returns the odd part of `x`
//! and the valuation of `x` itself (no `3x + 1` is applied first). The output
//! value is therefore always odd, and `m >= 1` whenever the input exceeds 1.
//!
//! A value `x` is a *growth point* when `col_step(x).0 > x`. The growth
//! points are exactly the values congruent to 3 mod 4; [`is_growth_point`]
//! decides the question by direct comparison so that the residue shortcut in
//! [`classify_mod4`] can be tested against it.

use num_integer::Integer;
use num_traits::{One, Zero};

use crate::{Error, Nat};

/// One step of an orbit: the odd value produced and the exponent removed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitStep {
    /// The odd value `x_{n+1}`.
    pub value: Nat,
    /// The step size `m_n`: the power of two stripped to reach `value`.
    pub step_size: u64,
}

/// An orbit prefix: the start value and every step taken from it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitRecord {
    pub start: Nat,
    pub steps: Vec<OrbitStep>,
    /// True when the final recorded value is 1.
    pub terminated: bool,
}

impl OrbitRecord {
    /// The orbit elements `x_1, x_2, ...` (start first, then every step value).
    pub fn elements(&self) -> Vec<Nat> {
        let mut out = Vec::with_capacity(self.steps.len() + 1);
        out.push(self.start.clone());
        out.extend(self.steps.iter().map(|s| s.value.clone()));
        out
    }

    /// The step sizes `m_1, m_2, ...` in order.
    pub fn step_sizes(&self) -> Vec<u64> {
        self.steps.iter().map(|s| s.step_size).collect()
    }
}

/// Residue of a value mod 4 and the growth verdict that residue implies.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GrowthClass {
    /// `value mod 4`, one of 0, 1, 2, 3.
    pub residue: u8,
    /// True exactly when `residue == 3`.
    pub is_growth: bool,
}

/// Apply the accelerated map once.
///
/// Odd `x` maps to `((3x + 1) / 2^m, m)` with `m` the exact 2-adic valuation
/// of `3x + 1`; even `x` maps to its odd part with `m` the valuation of `x`.
/// `col_step(1) == (1, 2)` since `3 * 1 + 1 = 4`.
pub fn col_step(x: &Nat) -> Result<(Nat, u64), Error> {
    if x.is_zero() {
        return Err(Error::ZeroInput);
    }
    let raised = if x.is_odd() { x * 3u32 + 1u32 } else { x.clone() };
    let m = raised.trailing_zeros().expect("raised value is nonzero");
    Ok((raised >> m, m))
}

/// Iterate [`col_step`] from `x1`, recording every step.
///
/// Stops after `max_steps` steps or as soon as a step produces the value 1,
/// whichever comes first. A bound is mandatory: convergence of arbitrary
/// orbits is an open question, so unbounded iteration is not offered.
pub fn orbit(x1: &Nat, max_steps: u64) -> Result<OrbitRecord, Error> {
    if max_steps == 0 {
        return Err(Error::TooSmall {
            what: "max_steps",
            min: 1,
            got: 0,
        });
    }
    let mut steps = Vec::new();
    let mut terminated = false;
    let mut current = x1.clone();
    for _ in 0..max_steps {
        let (value, step_size) = col_step(&current)?;
        current = value.clone();
        steps.push(OrbitStep { value, step_size });
        if current.is_one() {
            terminated = true;
            break;
        }
    }
    Ok(OrbitRecord {
        start: x1.clone(),
        steps,
        terminated,
    })
}

/// Does one application of the map strictly increase `x`?
///
/// Decided by direct comparison against [`col_step`], not by the mod-4
/// residue; the residue shortcut is what gets validated against this.
pub fn is_growth_point(x: &Nat) -> Result<bool, Error> {
    let (next, _) = col_step(x)?;
    Ok(next > *x)
}

/// Classify `x` by its residue mod 4; growth is claimed iff the residue is 3.
pub fn classify_mod4(x: &Nat) -> GrowthClass {
    let residue = x.bit(0) as u8 | ((x.bit(1) as u8) << 1);
    GrowthClass {
        residue,
        is_growth: residue == 3,
    }
}
