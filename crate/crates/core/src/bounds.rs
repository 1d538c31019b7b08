//! The sphere-packing bound and the optimality vocabulary built on it.

use num_bigint::BigUint;
use serde::Serialize;

/// Classification relative to the sphere-packing bound only.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Classification {
    SpherePackingOptimal,
    AlmostDistanceOptimal,
    NearDistanceOptimal,
    Inconclusive,
    /// The parameters themselves violate the bound.
    Infeasible,
}

impl Classification {
    pub fn as_str(self) -> &'static str {
        match self {
            Classification::SpherePackingOptimal => "sphere-packing-optimal",
            Classification::AlmostDistanceOptimal => "almost-distance-optimal",
            Classification::NearDistanceOptimal => "near-distance-optimal",
            Classification::Inconclusive => "inconclusive",
            Classification::Infeasible => "infeasible",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OptimalityReport {
    pub n: usize,
    pub k: usize,
    pub d: usize,
    pub q: u64,
    pub max_d_allowed: usize,
    /// The bound holds with equality at `(n, k, d)`.
    pub perfect: bool,
    #[serde(rename = "class")]
    pub classification: Classification,
}

/// `Σ_{i ≤ t} (q-1)^i C(n, i)`.
pub fn ball_volume(n: usize, t: usize, q: u64) -> BigUint {
    let mut term = BigUint::from(1u32);
    let mut sum = term.clone();
    for i in 1..=t.min(n) {
        term = term * (q - 1) * (n - i + 1) / i;
        sum += &term;
    }
    sum
}

fn redundancy_space(n: usize, k: usize, q: u64) -> BigUint {
    BigUint::from(q).pow((n - k) as u32)
}

/// `Σ_{i=0}^{⌊(d-1)/2⌋} (q-1)^i C(n, i) ≤ q^{n-k}`.
pub fn sphere_packing_holds(n: usize, k: usize, d: usize, q: u64) -> bool {
    assert!(k <= n && d >= 1, "need 0 <= k <= n and d >= 1");
    ball_volume(n, (d - 1) / 2, q) <= redundancy_space(n, k, q)
}

/// Largest `d' ≤ n` for which the bound at `(n, k, d')` holds.
pub fn max_d_allowed(n: usize, k: usize, q: u64) -> usize {
    let cap = redundancy_space(n, k, q);
    let mut term = BigUint::from(1u32);
    let mut sum = term.clone();
    let mut t = 0;
    while t < n {
        let i = t + 1;
        term = term * (q - 1) * (n - i + 1) / i;
        if &sum + &term > cap {
            break;
        }
        sum += &term;
        t = i;
    }
    (2 * t + 2).min(n)
}

/// Gap between `max_d_allowed` and `d`: 0 optimal, 1 almost, 2 near.
///
/// A perfect code with odd `d` is also reported optimal when the bound fails
/// for `(n-1, k, d)`: a code with distance `d+1` would puncture to one.
pub fn classify(n: usize, k: usize, d: usize, q: u64) -> OptimalityReport {
    let max_d = max_d_allowed(n, k, q);
    let perfect = ball_volume(n, (d - 1) / 2, q) == redundancy_space(n, k, q);
    let punctured_excluded =
        perfect && d % 2 == 1 && n > k + 1 && !sphere_packing_holds(n - 1, k, d, q);
    let classification = if max_d < d {
        Classification::Infeasible
    } else if punctured_excluded {
        Classification::SpherePackingOptimal
    } else {
        match max_d - d {
            0 => Classification::SpherePackingOptimal,
            1 => Classification::AlmostDistanceOptimal,
            2 => Classification::NearDistanceOptimal,
            _ => Classification::Inconclusive,
        }
    };
    OptimalityReport {
        n,
        k,
        d,
        q,
        max_d_allowed: max_d,
        perfect,
        classification,
    }
}
