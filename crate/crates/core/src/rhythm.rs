//! Orbit rhythms and the arithmetic progressions that share them.
//!
//! The *rhythm* of length `n` of an orbit is its first `n` step sizes
//! `<m_1, ..., m_n>`. Two starts whose difference is a multiple of
//!
//! ```text
//! D(n) = 4 * 2^{m_1 + ... + m_{n-1}}
//! ```
//!
//! share the length-`n` rhythm whenever `m_n = 1`; for larger `m_n` the last
//! step can break. [`enumerate_class`] therefore verifies every member it
//! emits by direct iteration instead of trusting the progression, and
//! failures are surfaced as diagnostics rather than skipped.

use num_traits::One;

use crate::orbit::orbit;
use crate::{Error, Nat};

/// A rhythm class: a verified base start, its length-`n` rhythm, and the
/// modulus `D(n)` whose multiples generate candidate members.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RhythmClass {
    pub base: Nat,
    /// The shared step sizes `<m_1, ..., m_n>`.
    pub rhythm: Vec<u64>,
    /// `D(n) = 4 * 2^{m_1 + ... + m_{n-1}}`.
    pub modulus: Nat,
}

impl RhythmClass {
    /// Rhythm length `n`.
    pub fn len(&self) -> usize {
        self.rhythm.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rhythm.is_empty()
    }
}

/// One enumerated candidate member of a class, with its verification result.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassMember {
    pub value: Nat,
    /// The member's actual length-`n` rhythm; `None` when its orbit reaches 1
    /// before `n` steps complete.
    pub rhythm: Option<Vec<u64>>,
    /// True iff the actual rhythm equals the class rhythm.
    pub verified: bool,
}

/// The first `n` step sizes of `x1`'s orbit.
///
/// Errors with [`Error::OrbitTooShort`] if the value 1 is reached before `n`
/// steps complete; the start 1 itself has no steps at all (its orbit has
/// already arrived).
pub fn rhythm_of(x1: &Nat, n: usize) -> Result<Vec<u64>, Error> {
    if n == 0 {
        return Err(Error::TooSmall {
            what: "rhythm length n",
            min: 1,
            got: 0,
        });
    }
    if x1.is_one() {
        return Err(Error::OrbitTooShort {
            start: x1.clone(),
            requested: n as u64,
            available: 0,
        });
    }
    let rec = orbit(x1, n as u64)?;
    if rec.steps.len() < n {
        return Err(Error::OrbitTooShort {
            start: x1.clone(),
            requested: n as u64,
            available: rec.steps.len() as u64,
        });
    }
    Ok(rec.step_sizes())
}

/// Extract `x1`'s length-`n` rhythm and package it with its modulus `D(n)`.
pub fn class_of(x1: &Nat, n: usize) -> Result<RhythmClass, Error> {
    let rhythm = rhythm_of(x1, n)?;
    let shift: u64 = 2 + rhythm[..n - 1].iter().sum::<u64>();
    Ok(RhythmClass {
        base: x1.clone(),
        rhythm,
        modulus: Nat::one() << shift,
    })
}

/// Enumerate `base, base + D, ..., base + (count-1) D`, verifying each
/// member's rhythm by iteration. Verification failures are reported in the
/// returned members, never silently dropped.
pub fn enumerate_class(class: &RhythmClass, count: usize) -> Vec<ClassMember> {
    (0..count)
        .map(|r| {
            let value = &class.base + &class.modulus * r;
            match rhythm_of(&value, class.len()) {
                Ok(found) => ClassMember {
                    value,
                    verified: found == class.rhythm,
                    rhythm: Some(found),
                },
                Err(_) => ClassMember {
                    value,
                    rhythm: None,
                    verified: false,
                },
            }
        })
        .collect()
}

/// Do `a` and `b` share their first `n` step sizes?
pub fn same_rhythm(a: &Nat, b: &Nat, n: usize) -> Result<bool, Error> {
    Ok(rhythm_of(a, n)? == rhythm_of(b, n)?)
}
