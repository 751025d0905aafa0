//! Factorization of `n` and the ideal lattice of `Z_n`.
//!
//! Every ideal of `Z_n` is principal and generated by a divisor of `n`, so an
//! ideal is named by the exponent vector of its generator over the primes of
//! `n`. The unit ideal is the all-zero vector and the zero ideal is the vector
//! of full exponents.

use crate::error::{Error, Result};
use serde::Serialize;
use std::fmt;

/// `n = p_1^{m_1} ... p_k^{m_k}` with `p_1 < ... < p_k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct FactoredInteger {
    primes: Vec<u64>,
    exponents: Vec<u32>,
    value: u64,
}

impl FactoredInteger {
    /// Builds a factorization from explicit parts. The result must describe a
    /// composite number.
    pub fn from_parts(primes: Vec<u64>, exponents: Vec<u32>) -> Result<Self> {
        if primes.is_empty() || primes.len() != exponents.len() {
            return Err(Error::Invalid(
                "primes and exponents must be non-empty and aligned".into(),
            ));
        }
        if primes.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::Invalid("primes must be strictly ascending".into()));
        }
        if let Some(p) = primes.iter().find(|&&p| !is_prime(p)) {
            return Err(Error::Invalid(format!("{p} is not prime")));
        }
        if exponents.contains(&0) {
            return Err(Error::Invalid("exponents must be positive".into()));
        }
        let mut value: u64 = 1;
        for (&p, &m) in primes.iter().zip(&exponents) {
            for _ in 0..m {
                value = value
                    .checked_mul(p)
                    .ok_or_else(|| Error::Invalid("n does not fit in 64 bits".into()))?;
            }
        }
        if primes.len() == 1 && exponents[0] == 1 {
            return Err(Error::Undefined {
                n: value,
                reason: "n is prime",
            });
        }
        Ok(FactoredInteger {
            primes,
            exponents,
            value,
        })
    }

    pub fn primes(&self) -> &[u64] {
        &self.primes
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    pub fn value(&self) -> u64 {
        self.value
    }

    /// Number of distinct primes `k`.
    pub fn num_primes(&self) -> usize {
        self.primes.len()
    }

    pub fn is_squarefree(&self) -> bool {
        self.exponents.iter().all(|&m| m == 1)
    }

    /// `∏(m_i + 1) - 2`, the number of nonzero proper ideals.
    pub fn vertex_count(&self) -> usize {
        self.exponents
            .iter()
            .map(|&m| m as usize + 1)
            .product::<usize>()
            - 2
    }

    /// `∏ m_i - 1`, the number of proper essential ideals.
    pub fn essential_count(&self) -> usize {
        self.exponents
            .iter()
            .map(|&m| m as usize)
            .product::<usize>()
            - 1
    }

    pub fn unit_ideal(&self) -> IdealId {
        IdealId {
            exponents: vec![0; self.primes.len()],
        }
    }

    pub fn zero_ideal(&self) -> IdealId {
        IdealId {
            exponents: self.exponents.clone(),
        }
    }

    /// Builds an ideal from exponents, checking `0 <= r_i <= m_i`.
    pub fn ideal(&self, exponents: &[u32]) -> Result<IdealId> {
        self.check(exponents)?;
        Ok(IdealId {
            exponents: exponents.to_vec(),
        })
    }

    /// The ideal generated by `g`, which must divide `n`.
    pub fn ideal_of(&self, g: u64) -> Result<IdealId> {
        if g == 0 || !self.value.is_multiple_of(g) {
            return Err(Error::Invalid(format!(
                "{g} does not divide {}",
                self.value
            )));
        }
        let mut rest = g;
        let exponents = self
            .primes
            .iter()
            .map(|&p| {
                let mut r = 0;
                while rest.is_multiple_of(p) {
                    rest /= p;
                    r += 1;
                }
                r
            })
            .collect();
        Ok(IdealId { exponents })
    }

    pub fn generator(&self, ideal: &IdealId) -> u64 {
        self.primes
            .iter()
            .zip(&ideal.exponents)
            .map(|(&p, &r)| p.pow(r))
            .product()
    }

    pub(crate) fn check(&self, exponents: &[u32]) -> Result<()> {
        if exponents.len() != self.exponents.len() {
            return Err(Error::MismatchedRing);
        }
        if exponents.iter().zip(&self.exponents).any(|(r, m)| r > m) {
            return Err(Error::BadExponents(exponents.to_vec()));
        }
        Ok(())
    }
}

impl fmt::Display for FactoredInteger {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .primes
            .iter()
            .zip(&self.exponents)
            .map(|(p, m)| {
                if *m == 1 {
                    p.to_string()
                } else {
                    format!("{p}^{m}")
                }
            })
            .collect();
        write!(f, "{}", parts.join(" * "))
    }
}

/// Exponent vector `(r_1, ..., r_k)` naming the ideal `<p_1^{r_1} ... p_k^{r_k}>`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct IdealId {
    exponents: Vec<u32>,
}

impl IdealId {
    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    /// Number of primes dividing the generator.
    pub fn support(&self) -> usize {
        self.exponents.iter().filter(|&&r| r > 0).count()
    }

    /// Generator written as a nondecreasing word of prime indices,
    /// e.g. `p_1^2 p_3 -> [0, 0, 2]`.
    pub fn index_word(&self) -> Vec<usize> {
        self.exponents
            .iter()
            .enumerate()
            .flat_map(|(i, &r)| std::iter::repeat_n(i, r as usize))
            .collect()
    }

    pub fn is_unit(&self) -> bool {
        self.exponents.iter().all(|&r| r == 0)
    }

    pub fn is_zero_in(&self, f: &FactoredInteger) -> bool {
        self.exponents == f.exponents
    }

    /// A nonzero proper ideal of `Z_n`.
    pub fn is_vertex_of(&self, f: &FactoredInteger) -> bool {
        f.check(&self.exponents).is_ok() && !self.is_unit() && !self.is_zero_in(f)
    }
}

/// Deterministic trial-division factorization.
pub fn factorize(n: u64) -> Result<FactoredInteger> {
    if n < 4 {
        return Err(Error::Undefined { n, reason: "n < 4" });
    }
    let mut primes = Vec::new();
    let mut exponents = Vec::new();
    let mut rest = n;
    let mut d = 2u64;
    while d.saturating_mul(d) <= rest {
        if rest.is_multiple_of(d) {
            let mut m = 0;
            while rest.is_multiple_of(d) {
                rest /= d;
                m += 1;
            }
            primes.push(d);
            exponents.push(m);
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if rest > 1 {
        primes.push(rest);
        exponents.push(1);
    }
    FactoredInteger::from_parts(primes, exponents)
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// The first `k` primes.
pub fn first_primes(k: usize) -> Vec<u64> {
    (2u64..).filter(|&p| is_prime(p)).take(k).collect()
}

/// All nonzero proper ideals in canonical order: by support size, then
/// lexicographically by prime-index word (`p_1 < p_1^2 < p_1 p_2 < p_2`).
/// For squarefree `n` this lists `<p_1>, ..., <p_k>, <p_1 p_2>, <p_1 p_3>, ...`.
pub fn enumerate_ideals(f: &FactoredInteger) -> Vec<IdealId> {
    let k = f.exponents.len();
    let mut out = Vec::with_capacity(f.vertex_count());
    let mut current = vec![0u32; k];
    loop {
        let id = IdealId {
            exponents: current.clone(),
        };
        if !id.is_unit() && !id.is_zero_in(f) {
            out.push(id);
        }
        // odometer increment, last index fastest
        let mut i = k;
        loop {
            if i == 0 {
                out.sort_by_cached_key(|id| (id.support(), id.index_word()));
                return out;
            }
            i -= 1;
            if current[i] < f.exponents[i] {
                current[i] += 1;
                break;
            }
            current[i] = 0;
        }
    }
}

/// `<x> + <y> = <gcd(x, y)>`: componentwise minimum of exponents.
pub fn ideal_sum(a: &IdealId, b: &IdealId) -> Result<IdealId> {
    if a.exponents.len() != b.exponents.len() {
        return Err(Error::MismatchedRing);
    }
    Ok(IdealId {
        exponents: a
            .exponents
            .iter()
            .zip(&b.exponents)
            .map(|(x, y)| *x.min(y))
            .collect(),
    })
}

/// `<x> ∩ <y> = <lcm(x, y)>`: componentwise maximum of exponents.
pub fn ideal_intersection(a: &IdealId, b: &IdealId) -> Result<IdealId> {
    if a.exponents.len() != b.exponents.len() {
        return Err(Error::MismatchedRing);
    }
    Ok(IdealId {
        exponents: a
            .exponents
            .iter()
            .zip(&b.exponents)
            .map(|(x, y)| *x.max(y))
            .collect(),
    })
}
