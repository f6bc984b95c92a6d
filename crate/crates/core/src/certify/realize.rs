//! The recursive construction behind `{m : φ(m) ≤ 2n} ⊆ I(n − 1)`.

use super::build::{
    base_leaf, build_index_prime, build_prime_power, check_dim_inequality, DimInequality,
};
use super::Certificate;
use crate::error::{Error, Result};
use crate::numtheory::{factorize, phi};

/// A certificate of dimension exactly `n − 1` and index exactly `m`, for any
/// `n ≥ 3` and `m` with `φ(m) ≤ 2n`.
///
/// Cases, in order:
/// * `n = 3`: the surface catalogue.
/// * `φ(m) < 2n`: `realize(n − 1, m)` times an elliptic curve.
/// * `m` prime: the index-prime family, padded.
/// * `m = p^e`, `e ≥ 2`: the prime-power family, padded.
/// * otherwise `m = m₁·m₂` with `m₂` the prime power of the largest prime
///   factor, and the two coprime halves certified separately.
pub fn realize(n: u64, m: u64) -> Result<Certificate> {
    if n < 3 {
        return Err(Error::Precondition(format!("need n >= 3, got {n}")));
    }
    if m == 0 {
        return Err(Error::ZeroArgument("realize"));
    }
    let phi_m = phi(m);
    if phi_m > 2 * n {
        return Err(Error::Precondition(format!(
            "phi({m}) = {phi_m} exceeds 2n = {}",
            2 * n
        )));
    }
    let target = (n - 1) as usize;

    if n == 3 {
        return base_leaf(2, m);
    }
    if phi_m < 2 * n {
        // φ is 1 or even, so φ(m) ≤ 2(n − 1)
        return Ok(Certificate::product(vec![
            realize(n - 1, m)?,
            Certificate::elliptic(1),
        ]));
    }

    let f = factorize(m)?;
    if let Some((p, e)) = f.as_prime_power() {
        let leaf = prime_power_leaf(p, e)?;
        return Ok(leaf.padded_to(target));
    }

    // r ≥ 2: peel off the prime power of the largest prime.
    let &(p, e) = f.factors().last().expect("at least two primes");
    let m2 = p.pow(e);
    let m1 = m / m2;
    let (phi1, phi2) = (phi(m1), phi(m2));

    let parts = if phi1 >= 6 {
        // φ(m₂) ≥ 2 since p is odd
        vec![realize(phi1 / 2, m1)?, low_or_realize(m2, phi2)?]
    } else if phi1 == 1 {
        // m₁ = 2, m = 2·p^e with φ(p^e) = 2n ≥ 8
        vec![base_leaf(1, 2)?, prime_power_leaf(p, e)?]
    } else {
        // φ(m₁) ∈ {2, 4}; φ(m₂) ≥ 2
        vec![low_or_realize(m1, phi1)?, low_or_realize(m2, phi2)?]
    };
    let cert = Certificate::product(parts);
    if cert.dim() > target {
        return Err(Error::Precondition(format!(
            "internal: split of {m} has dimension {} > {target}",
            cert.dim()
        )));
    }
    Ok(cert.padded_to(target))
}

/// Certificate for `l` in its natural low dimension: the curve catalogue
/// when `φ(l) = 2`, the surface catalogue when `φ(l) = 4`, and
/// `realize(φ(l)/2, l)` otherwise.
fn low_or_realize(l: u64, phi_l: u64) -> Result<Certificate> {
    match phi_l {
        1 | 2 => base_leaf(1, l),
        4 => base_leaf(2, l),
        _ => realize(phi_l / 2, l),
    }
}

/// The explicit pair for a prime power, in its own dimension.
fn prime_power_leaf(p: u64, e: u32) -> Result<Certificate> {
    let leaf = if e == 1 {
        build_index_prime(p)?
    } else {
        if (p, e) != (2, 2)
            && (p, e) != (2, 3)
            && !check_dim_inequality(p, e, DimInequality::Padding)?
        {
            return Err(Error::Precondition(format!(
                "internal: dimension bound fails for {p}^{e}"
            )));
        }
        build_prime_power(p, e)?
    };
    Ok(Certificate::WpsLeaf(leaf))
}
