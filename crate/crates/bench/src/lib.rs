//! Shared inputs for the criterion benchmarks.

use essgraph::ring::first_primes;

/// `n` values spanning the closed-form families at increasing graph sizes.
pub fn workload() -> Vec<(&'static str, u64)> {
    vec![
        ("p^8", 2u64.pow(8)),
        ("p^2q^2", 36),
        ("p^4q^4", 1296),
        ("p1p2p3p4", 210),
        ("p1..p6", first_primes(6).iter().product()),
        ("2^3*3^2*5*7", 2520),
    ]
}
