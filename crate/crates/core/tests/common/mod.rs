//! A deliberately naive reference implementation used as an oracle.
//!
//! One Collatz operation at a time: `3x + 1` on odd values, `x / 2` on even
//! values. Nothing is accelerated and no step sizes are computed, so this
//! shares no code path with the library under test.

use collatz_core::Nat;
use num_integer::Integer;
use num_traits::One;

/// The full unaccelerated trajectory from `x1`, start included, stopping at 1
/// or after `max_ops` operations.
pub fn schoolbook_trajectory(x1: &Nat, max_ops: u64) -> Vec<Nat> {
    let mut values = vec![x1.clone()];
    let mut current = x1.clone();
    for _ in 0..max_ops {
        if current.is_one() {
            break;
        }
        current = if current.is_odd() {
            &current * 3u32 + 1u32
        } else {
            &current / 2u32
        };
        values.push(current.clone());
    }
    values
}

/// The odd values of the trajectory, in order.
pub fn schoolbook_odd_values(x1: &Nat, max_ops: u64) -> Vec<Nat> {
    schoolbook_trajectory(x1, max_ops)
        .into_iter()
        .filter(|v| v.is_odd())
        .collect()
}
