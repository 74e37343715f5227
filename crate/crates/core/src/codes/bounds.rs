//! Upper bounds on the minimum distance of ternary codes.

use num_bigint::BigUint;
use num_traits::{One, Pow, Zero};

fn pow3(k: u64) -> BigUint {
    BigUint::from(3u32).pow(k)
}

/// `sum_{i<=t} C(n, i) 2^i`, the size of a Hamming ball of radius `t`.
pub fn ball_volume(n: u64, t: u64) -> BigUint {
    let mut total = BigUint::zero();
    let mut term = BigUint::one();
    for i in 0..=t.min(n) {
        if i > 0 {
            term = term * BigUint::from(n - i + 1) * BigUint::from(2u32) / BigUint::from(i);
        }
        total += &term;
    }
    total
}

/// Largest `d` allowed for an `[n, k]` ternary code by the sphere packing
/// bound `3^k V(n, (d-1)/2) <= 3^n`, and never above the Singleton value
/// `n - k + 1`.
pub fn sphere_packing_max_d(n: u64, k: u64) -> u64 {
    assert!(1 <= k && k <= n, "need 1 <= k <= n");
    let room = pow3(n - k);
    let mut t = 0;
    while t < n && ball_volume(n, t + 1) <= room {
        t += 1;
    }
    (2 * t + 2).min(n - k + 1)
}

/// The parameters `(t, r)` of the bound for distance `d`.
fn rgss_params(n: u64, d: u64) -> (u64, u64) {
    let t = n - d + 1;
    // q - 2 = 1 for ternary codes.
    let r = ((n - t) / 2).min(t - 1);
    (t, r)
}

/// Upper bound on the size of any ternary code of length `n` and minimum
/// distance `d`: `floor(3^(t+2r) / sum_{i<=r} C(t+2r, i) 2^i)` with
/// `t = n - d + 1` and `r = floor(min((n-t)/2, t-1))`.
pub fn rgss_upper_bound(n: u64, d: u64) -> BigUint {
    assert!(1 <= d && d <= n, "need 1 <= d <= n");
    let (t, r) = rgss_params(n, d);
    pow3(t + 2 * r) / ball_volume(t + 2 * r, r)
}

/// Whether the bound rules out a code with `3^k` words at distance `d`.
/// Avoids materializing `3^(t+2r)` when `k` is close to it.
fn rgss_excludes(n: u64, k: u64, d: u64) -> bool {
    let (t, r) = rgss_params(n, d);
    let top = t + 2 * r;
    if top < k {
        return true;
    }
    pow3(top - k) < ball_volume(top, r)
}

/// One less than the smallest `d` for which the bound excludes `3^k`
/// codewords, searching `d` up to `limit`. Returns `limit` when none does.
pub fn rgss_max_d(n: u64, k: u64, limit: u64) -> u64 {
    (2..=limit.min(n))
        .find(|&d| rgss_excludes(n, k, d))
        .map_or(limit, |d| d - 1)
}
