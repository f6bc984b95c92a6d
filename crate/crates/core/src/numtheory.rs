//! Integer arithmetic for totients, factorizations and index-set enumeration.
//!
//! Everything here works on machine integers; inputs are small (the index
//! sets of interest are bounded by `2·B²` for a totient bound `B`).

use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};

/// Canonical prime factorization, primes strictly increasing.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Factorization {
    factors: Vec<(u64, u32)>,
}

impl Factorization {
    pub fn factors(&self) -> &[(u64, u32)] {
        &self.factors
    }

    /// Number of distinct primes.
    pub fn num_primes(&self) -> usize {
        self.factors.len()
    }

    pub fn is_prime(&self) -> bool {
        matches!(self.factors.as_slice(), [(_, 1)])
    }

    /// `Some((p, e))` when the factored integer is a prime power `p^e`, `e ≥ 1`.
    pub fn as_prime_power(&self) -> Option<(u64, u32)> {
        match self.factors.as_slice() {
            [pe] => Some(*pe),
            _ => None,
        }
    }

    pub fn value(&self) -> u64 {
        self.factors.iter().map(|&(p, e)| p.pow(e)).product()
    }
}

/// Factorization by trial division.
pub fn factorize(m: u64) -> Result<Factorization> {
    if m == 0 {
        return Err(Error::ZeroArgument("factorize"));
    }
    let mut rest = m;
    let mut factors = Vec::new();
    let mut p = 2u64;
    while p.saturating_mul(p) <= rest {
        if rest.is_multiple_of(p) {
            let mut e = 0;
            while rest.is_multiple_of(p) {
                rest /= p;
                e += 1;
            }
            factors.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if rest > 1 {
        factors.push((rest, 1));
    }
    Ok(Factorization { factors })
}

/// Euler's totient through the product formula `∏ (p^e − p^(e−1))`.
pub fn euler_phi(m: u64) -> Result<u64> {
    if m == 0 {
        return Err(Error::ZeroArgument("euler_phi"));
    }
    Ok(phi_of(&factorize(m)?))
}

pub(crate) fn phi_of(f: &Factorization) -> u64 {
    f.factors
        .iter()
        .map(|&(p, e)| p.pow(e) - p.pow(e - 1))
        .product()
}

/// Totient of a positive integer. Panics on zero; for internal callers that
/// already hold a positive value.
pub(crate) fn phi(m: u64) -> u64 {
    euler_phi(m).expect("totient of a positive integer")
}

/// The finite set `{m ≥ 1 : φ(m) ≤ bound}` in increasing order.
///
/// Completeness: `φ(m) ≥ √(m/2)` for every `m ≥ 1`, so `φ(m) ≤ B` forces
/// `m ≤ 2B²` and scanning that range finds every member.
pub fn indices_with_phi_at_most(bound: u64) -> Result<Vec<u64>> {
    if bound == 0 {
        return Err(Error::ZeroArgument("indices_with_phi_at_most"));
    }
    let limit = 2 * bound * bound;
    Ok((1..=limit).filter(|&m| phi(m) <= bound).collect())
}

/// The variety types whose fixed-point-free automorphisms are constrained.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FreeAutKind {
    StrictCyEven,
    StrictCyOdd,
    HolomorphicSymplectic,
    Abelian,
}

/// Whether `m` can be the index of a fixed-point-free automorphism of finite
/// order on an `n`-dimensional variety of the given kind.
pub fn admissible_free_index(kind: FreeAutKind, n: u64, m: u64) -> Result<bool> {
    if n == 0 || m == 0 {
        return Err(Error::ZeroArgument("admissible_free_index"));
    }
    match kind {
        FreeAutKind::StrictCyEven => {
            if !n.is_multiple_of(2) {
                return Err(Error::Precondition(format!(
                    "strict Calabi-Yau (even) needs even dimension, got {n}"
                )));
            }
            Ok(m == 2)
        }
        FreeAutKind::StrictCyOdd => {
            if n.is_multiple_of(2) {
                return Err(Error::Precondition(format!(
                    "strict Calabi-Yau (odd) needs odd dimension, got {n}"
                )));
            }
            Ok(m == 1)
        }
        FreeAutKind::HolomorphicSymplectic => {
            if !n.is_multiple_of(2) {
                return Err(Error::Precondition(format!(
                    "holomorphic symplectic varieties have even dimension, got {n}"
                )));
            }
            // n/2 ≡ −1 (mod m)
            Ok((n / 2 + 1).is_multiple_of(m))
        }
        FreeAutKind::Abelian => Ok(phi(m) <= 2 * n),
    }
}

/// `(s_{n−1} − 1)(2 s_{n−1} − 3)` where `s_0 = 2`, `s_k = s_{k−1}(s_{k−1} − 1) + 1`.
pub fn sylvester_bound(n: u32) -> Result<BigUint> {
    if n == 0 {
        return Err(Error::ZeroArgument("sylvester_bound"));
    }
    let one = BigUint::one();
    let mut s = BigUint::from(2u32);
    for _ in 1..n {
        s = &s * (&s - &one) + &one;
    }
    Ok((&s - &one) * (&s * 2u32 - 3u32))
}

pub fn gcd(a: u64, b: u64) -> u64 {
    num_integer::gcd(a, b)
}

pub fn lcm(a: u64, b: u64) -> u64 {
    num_integer::lcm(a, b)
}
