//! Constructors for monotone runs of the map with a uniform step size.
//!
//! # Increasing runs (step size 1)
//!
//! For `x1 = K * 2^{n+1} - 1` the first `n` steps each have step size exactly
//! 1 and strictly increase. Inductively `x_i = K * 3^{i-1} * 2^{n+2-i} - 1`:
//! then `3 x_i + 1 = 2 * (K * 3^i * 2^{n+1-i} - 1)` and the cofactor is odd
//! for every `i <= n`, so exactly one factor of two is removed per step. Each
//! intermediate is `(multiple of 4) - 1`, i.e. congruent to 3 mod 4, which is
//! precisely the growth condition. The run ends at
//! `x_{n+1} = 6 K 3^{n-1} - 1`, and `y_n + 1 = K * 3^{n-1}` is the witness
//! integer recovered by `closed_form::equal_step_x(x1, n, 1)`.
//!
//! # Decreasing runs (step size m >= 2)
//!
//! Substituting `u = (2^m - 3) x - 1` turns `x -> (3x + 1) / 2^m` into the
//! purely multiplicative `u -> 3 u / 2^m`. Seeding `u_1 = K' * 2^{m n}` makes
//! `u_i = K' * 3^{i-1} * 2^{m (n-i+1)}` for `i = 1 ..= n+1`, hence
//!
//! ```text
//! x_i = (K' * 3^{i-1} * 2^{m (n-i+1)} + 1) / (2^m - 3)
//! ```
//!
//! Because `2^m ≡ 3 (mod 2^m - 3)`, every `u_i` is congruent to `K' * 3^n`
//! modulo `2^m - 3`, so the single congruence `K' ≡ -3^{-n} (mod 2^m - 3)`
//! makes every `x_i` an integer at once. Each `u_i` with `i <= n` is
//! divisible by 4, so those `x_i` are automatically odd. Steps `1 .. n-1`
//! have 2-adic valuation exactly `m` for free (the power of two in `3 u_i`
//! strictly exceeds `m` there); step `n` has valuation exactly `m` iff
//! `K' * 3^n + 1` is odd, i.e. iff `K'` is even. Of the two smallest residue
//! representatives `K'_0` and `K'_0 + (2^m - 3)` exactly one is even, and
//! shifting by multiples of `2 (2^m - 3)` walks the rest of the family.
//! Strict decrease is immediate from `(2^m - 3) x_i > 1`.
//!
//! Both constructors re-verify the whole claimed sequence by direct iteration
//! before returning, so an algebra bug here cannot hand out a wrong artifact.

use num_integer::Integer;
use num_traits::{One, Zero};

use crate::orbit::orbit;
use crate::{Error, Nat};

/// Orientation of a monotone run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Increasing,
    Decreasing,
}

/// A verified monotone run: `n` consecutive steps, every step size exactly
/// `step_size`, strictly monotone in `direction`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonotoneSpec {
    pub direction: Direction,
    /// Number of steps `n`.
    pub length: usize,
    /// The uniform step size `m` (1 for increasing runs, >= 2 for decreasing).
    pub step_size: u64,
    /// Family parameter: `K` for increasing runs, `K'` for decreasing runs.
    pub multiplier: Nat,
    pub start: Nat,
    /// The claimed `x_{n+1}`, confirmed by iteration before returning.
    pub predicted_final: Nat,
    /// The full run `x_1 ..= x_{n+1}`, iteration-verified.
    pub sequence: Vec<Nat>,
}

/// Build the increasing run `x1 = K * 2^{n+1} - 1` of length `n`.
pub fn construct_increasing(n: usize, k: &Nat) -> Result<MonotoneSpec, Error> {
    if n == 0 {
        return Err(Error::TooSmall {
            what: "n",
            min: 1,
            got: 0,
        });
    }
    if k.is_zero() {
        return Err(Error::TooSmall {
            what: "K",
            min: 1,
            got: 0,
        });
    }
    // x_i = K * 3^{i-1} * 2^{n+2-i} - 1 for i = 1 ..= n+1
    let mut sequence = Vec::with_capacity(n + 1);
    let mut pow3 = Nat::one();
    for i in 1..=n + 1 {
        sequence.push(((k * &pow3) << (n + 2 - i)) - 1u32);
        pow3 *= 3u32;
    }
    let spec = MonotoneSpec {
        direction: Direction::Increasing,
        length: n,
        step_size: 1,
        multiplier: k.clone(),
        start: sequence[0].clone(),
        predicted_final: sequence[n].clone(),
        sequence,
    };
    verify_by_iteration(&spec)?;
    Ok(spec)
}

/// Build the smallest decreasing run of length `n` with uniform step size
/// `m >= 2`. Equivalent to [`construct_decreasing_with_index`] at index 0.
pub fn construct_decreasing(n: usize, m: u64) -> Result<MonotoneSpec, Error> {
    construct_decreasing_with_index(n, m, 0)
}

/// Build the `t`-th member of the decreasing family: the seed `K'` is the
/// smallest valid one shifted by `2 (2^m - 3) t`.
pub fn construct_decreasing_with_index(n: usize, m: u64, t: u64) -> Result<MonotoneSpec, Error> {
    if n == 0 {
        return Err(Error::TooSmall {
            what: "n",
            min: 1,
            got: 0,
        });
    }
    if m < 2 {
        return Err(Error::TooSmall {
            what: "step size m",
            min: 2,
            got: m,
        });
    }
    let modulus = (Nat::one() << m) - 3u32; // 2^m - 3, odd and >= 1
    let seed = smallest_even_seed(n, &modulus) + &modulus * (2 * t);

    // x_i = (K' * 3^{i-1} * 2^{m (n-i+1)} + 1) / (2^m - 3)
    let mut sequence = Vec::with_capacity(n + 1);
    let mut pow3 = Nat::one();
    for i in 1..=(n as u64) + 1 {
        let u = (&seed * &pow3) << (m * (n as u64 + 1 - i));
        let (x, rem) = (u + 1u32).div_rem(&modulus);
        debug_assert!(rem.is_zero(), "seed congruence guarantees integrality");
        sequence.push(x);
        pow3 *= 3u32;
    }
    let spec = MonotoneSpec {
        direction: Direction::Decreasing,
        length: n,
        step_size: m,
        multiplier: seed,
        start: sequence[0].clone(),
        predicted_final: sequence[n].clone(),
        sequence,
    };
    verify_by_iteration(&spec)?;
    Ok(spec)
}

/// Smallest even positive `K'` with `K' * 3^n ≡ -1 (mod modulus)`.
fn smallest_even_seed(n: usize, modulus: &Nat) -> Nat {
    let base = if modulus.is_one() {
        // 2^m - 3 = 1 (m = 2): the congruence is vacuous.
        Nat::one()
    } else {
        let pow = Nat::from(3u32).modpow(&Nat::from(n), modulus);
        let inv = modular_inverse(&pow, modulus);
        modulus - inv // -3^{-n} mod modulus, in [1, modulus - 1]
    };
    if base.is_even() {
        base
    } else {
        base + modulus
    }
}

/// Inverse of `a` modulo odd `modulus > 1`; requires `gcd(a, modulus) == 1`,
/// which holds here since 3 never divides `2^m - 3`.
fn modular_inverse(a: &Nat, modulus: &Nat) -> Nat {
    use num_bigint::BigInt;
    let gcd = BigInt::from(a.clone()).extended_gcd(&BigInt::from(modulus.clone()));
    debug_assert!(gcd.gcd.is_one());
    let m = BigInt::from(modulus.clone());
    let inv = gcd.x.mod_floor(&m);
    inv.to_biguint().expect("mod_floor of positive modulus")
}

/// Re-run the map from `spec.start` and confirm every claim: the iterated
/// values equal the constructed sequence, every step size is exactly
/// `spec.step_size`, and the run is strictly monotone in `spec.direction`.
fn verify_by_iteration(spec: &MonotoneSpec) -> Result<(), Error> {
    let fail = |detail: String| Err(Error::Verification(detail));
    let rec = orbit(&spec.start, spec.length as u64)?;
    if rec.steps.len() != spec.length {
        return fail(format!(
            "orbit of {} has only {} steps, expected {}",
            spec.start,
            rec.steps.len(),
            spec.length
        ));
    }
    let elements = rec.elements();
    if elements != spec.sequence {
        return fail(format!("iterated orbit of {} diverges from the constructed sequence", spec.start));
    }
    for (i, step) in rec.steps.iter().enumerate() {
        if step.step_size != spec.step_size {
            return fail(format!(
                "step {} of {} has size {}, expected {}",
                i + 1,
                spec.start,
                step.step_size,
                spec.step_size
            ));
        }
    }
    for pair in elements.windows(2) {
        let ok = match spec.direction {
            Direction::Increasing => pair[1] > pair[0],
            Direction::Decreasing => pair[1] < pair[0],
        };
        if !ok {
            return fail(format!(
                "run from {} is not strictly {:?} at {} -> {}",
                spec.start, spec.direction, pair[0], pair[1]
            ));
        }
    }
    if *elements.last().unwrap() != spec.predicted_final {
        return fail(format!(
            "final value {} does not match prediction {}",
            elements.last().unwrap(),
            spec.predicted_final
        ));
    }
    Ok(())
}
