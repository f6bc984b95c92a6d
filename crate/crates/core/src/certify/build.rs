//! Explicit pairs: the two prime families, the prime-power family, and the
//! catalogue of curves and surfaces the recursion bottoms out in.

use num_bigint::BigInt;
use num_traits::{One, Pow};

use super::search::{instantiate_plane, Component};
use super::Certificate;
use crate::error::{Error, Result};
use crate::numtheory::phi;
use crate::poly::SparsePoly;
use crate::wps::{Entry, KltStrategy, LogLeaf, StdCoeff, Wps};

pub const K3_CITATION: &str = "index 14 is realized by a K3 surface with a purely non-symplectic \
automorphism of order 14 (Machida-Oguiso, Main Theorem 3); no explicit pair is known to this tool";

/// Points of P¹ in the order they are handed out: 0, 1, ∞, 2, 3, …
/// `None` stands for ∞.
pub const P1_POINTS: [Option<i64>; 8] = [
    Some(0),
    Some(1),
    None,
    Some(2),
    Some(3),
    Some(4),
    Some(5),
    Some(6),
];

fn entry(b: u64, eq: SparsePoly) -> Result<Entry> {
    Ok(Entry {
        coeff: StdCoeff::new(b)?,
        eq,
    })
}

/// Pair of index `m` (odd, `m ≥ 5`) in dimension `(m+3)/4` or `(m+1)/4`.
///
/// For `m ≡ 1 (mod 4)`, `n = (m+3)/4`: `P(4^(n−2), 2, 1, 1)` with
/// coefficient `(m−1)/m` on `x_0, …, x_{n−3}`, on `x_n` and on
/// `H = x_0 + ⋯ + x_{n−3} + x_{n−2}² + x_{n−1}⁴ + x_n⁴`.
///
/// For `m ≡ 3 (mod 4)`, `n = (m+1)/4`: `P(4^(n−2), 3, 2, 1)` with
/// coefficient `(m−1)/m` on `x_0, …, x_{n−2}` and on
/// `H = x_0 + ⋯ + x_{n−3} + x_{n−2}x_n + x_{n−1}² + x_n⁴`.
pub fn build_index_prime(m: u64) -> Result<LogLeaf> {
    if m < 5 || m.is_multiple_of(2) {
        return Err(Error::Precondition(format!(
            "index-prime family needs an odd m >= 5, got {m}"
        )));
    }
    let one_mod_four = m % 4 == 1;
    let n = if one_mod_four {
        m.div_ceil(4)
    } else {
        (m + 1) / 4
    } as usize;
    let nvars = n + 1;
    let mut weights = vec![4; n - 2];
    weights.extend_from_slice(if one_mod_four { &[2, 1, 1] } else { &[3, 2, 1] });

    let mut h_terms: Vec<(i64, Vec<u32>)> = (0..n - 2)
        .map(|i| {
            let mut e = vec![0; nvars];
            e[i] = 1;
            (1, e)
        })
        .collect();
    let mono = |pairs: &[(usize, u32)]| {
        let mut e = vec![0; nvars];
        for &(j, k) in pairs {
            e[j] = k;
        }
        (1, e)
    };
    let mut entries = Vec::new();
    if one_mod_four {
        h_terms.push(mono(&[(n - 2, 2)]));
        h_terms.push(mono(&[(n - 1, 4)]));
        h_terms.push(mono(&[(n, 4)]));
        for i in 0..n - 2 {
            entries.push(entry(m, SparsePoly::var(nvars, i))?);
        }
        entries.push(entry(m, SparsePoly::var(nvars, n))?);
    } else {
        h_terms.push(mono(&[(n - 2, 1), (n, 1)]));
        h_terms.push(mono(&[(n - 1, 2)]));
        h_terms.push(mono(&[(n, 4)]));
        for i in 0..=n - 2 {
            entries.push(entry(m, SparsePoly::var(nvars, i))?);
        }
    }
    entries.push(entry(m, SparsePoly::from_ints(nvars, &h_terms))?);
    let strategy = if one_mod_four {
        KltStrategy::FamilyA
    } else {
        KltStrategy::FamilyB
    };
    LogLeaf::new(Wps::new(weights)?, entries, strategy)
}

/// Pair of index `m^e` in dimension `m + e − 3` on
/// `P((m−1)^(e−1), 1^(m−1))`, with coefficient `1 − 1/m^(i+1)` on `x_i` for
/// `i < e` and `1 − 1/m^e` on
/// `H = x_0 + ⋯ + x_{e−2} + x_{e−1}^{m−1} + ⋯ + x_{e+m−3}^{m−1}`.
pub fn build_prime_power(m: u64, e: u32) -> Result<LogLeaf> {
    if m < 2 || e < 2 {
        return Err(Error::Precondition(format!(
            "prime-power family needs m, e >= 2, got ({m}, {e})"
        )));
    }
    let pow = |k: u32| {
        m.checked_pow(k)
            .ok_or_else(|| Error::Precondition(format!("{m}^{k} does not fit in 64 bits")))
    };
    let top = pow(e)?;
    let ne = e as usize;
    let nvars = ne + m as usize - 2;
    let mut weights = vec![m - 1; ne - 1];
    weights.extend(std::iter::repeat_n(1, m as usize - 1));

    let h_terms: Vec<(i64, Vec<u32>)> = (0..nvars)
        .map(|j| {
            let mut x = vec![0; nvars];
            x[j] = if j + 1 < ne { 1 } else { (m - 1) as u32 };
            (1, x)
        })
        .collect();
    let mut entries = Vec::with_capacity(ne + 1);
    for i in 0..ne {
        entries.push(entry(pow(i as u32 + 1)?, SparsePoly::var(nvars, i))?);
    }
    entries.push(entry(top, SparsePoly::from_ints(nvars, &h_terms))?);
    let strategy = if m == 2 {
        KltStrategy::HyperplaneArrangement
    } else {
        KltStrategy::FamilyC
    };
    LogLeaf::new(Wps::new(weights)?, entries, strategy)
}

/// The linear form vanishing at a point of P¹ (`None` = ∞).
fn p1_point(t: Option<i64>) -> SparsePoly {
    match t {
        Some(t) => SparsePoly::from_ints(2, &[(1, vec![1, 0]), (-t, vec![0, 1])]),
        None => SparsePoly::var(2, 1),
    }
}

/// `(P¹, Σ (1 − 1/b_i) P_i)` at the points 0, 1, ∞, 2, … in order.
pub fn p1_leaf(bs: &[u64]) -> Result<LogLeaf> {
    if bs.len() > P1_POINTS.len() {
        return Err(Error::Precondition(format!(
            "at most {} points on P^1",
            P1_POINTS.len()
        )));
    }
    let entries = bs
        .iter()
        .zip(P1_POINTS)
        .map(|(&b, t)| entry(b, p1_point(t)))
        .collect::<Result<_>>()?;
    LogLeaf::new(Wps::projective(1), entries, KltStrategy::PlaneArrangement)
}

/// A `P²` arrangement from `(b, degree)` components.
pub fn plane_leaf(components: &[Component]) -> Result<LogLeaf> {
    instantiate_plane(2, components)
}

/// Explicit certificates for every index of a curve (`dim = 1`) and for every
/// `m` with `φ(m) ≤ 6` on a surface (`dim = 2`).
pub fn base_leaf(dim: usize, m: u64) -> Result<Certificate> {
    let reject =
        || Error::Precondition(format!("no catalogue entry for dimension {dim}, index {m}"));
    match dim {
        1 => match m {
            1 => Ok(Certificate::elliptic(1)),
            2 => Ok(Certificate::WpsLeaf(p1_leaf(&[2, 2, 2, 2])?)),
            3 => Ok(Certificate::WpsLeaf(p1_leaf(&[3, 3, 3])?)),
            4 => Ok(Certificate::WpsLeaf(p1_leaf(&[2, 4, 4])?)),
            6 => Ok(Certificate::WpsLeaf(p1_leaf(&[2, 3, 6])?)),
            _ => Err(reject()),
        },
        2 => {
            if m == 0 || phi(m) > 6 {
                return Err(reject());
            }
            let c = match m {
                1 => Certificate::elliptic(2),
                2 | 3 | 4 | 6 => {
                    Certificate::product(vec![base_leaf(1, m)?, Certificate::elliptic(1)])
                }
                5 | 7 => Certificate::WpsLeaf(build_index_prime(m)?),
                8 => Certificate::WpsLeaf(build_prime_power(2, 3)?),
                9 => Certificate::WpsLeaf(build_prime_power(3, 2)?),
                12 => Certificate::product(vec![base_leaf(1, 4)?, base_leaf(1, 3)?]),
                10 => Certificate::WpsLeaf(plane_leaf(&[
                    Component::line(2),
                    Component::conic(5),
                    Component::line(10),
                ])?),
                18 => Certificate::WpsLeaf(plane_leaf(&[
                    Component::line(2),
                    Component::line(3),
                    Component::line(9),
                    Component::line(18),
                ])?),
                14 => Certificate::CitedLeaf {
                    dim: 2,
                    index: 14,
                    cite: K3_CITATION.to_string(),
                },
                _ => return Err(reject()),
            };
            Ok(c)
        }
        _ => Err(reject()),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DimInequality {
    /// `m + e − 3 ≤ n − 1`
    Padding,
    /// `m + e − 3 ≤ n − 3`
    Strict,
}

/// Evaluates `m + e − 3 ≤ n − 1` (or `≤ n − 3`) for `n = (m^e − m^(e−1))/2`.
pub fn check_dim_inequality(m: u64, e: u32, variant: DimInequality) -> Result<bool> {
    if m < 2 || e < 2 {
        return Err(Error::Precondition(format!(
            "need m, e >= 2, got ({m}, {e})"
        )));
    }
    match variant {
        DimInequality::Padding if (m, e) == (2, 2) || (m, e) == (2, 3) => {
            return Err(Error::Precondition(format!(
                "({m}, {e}) is excluded: (2, 2) and (2, 3) violate the bound"
            )))
        }
        DimInequality::Strict if m < 3 || (m, e) == (3, 2) => {
            return Err(Error::Precondition(format!(
                "({m}, {e}) is excluded: this variant needs m >= 3 and (m, e) != (3, 2)"
            )))
        }
        _ => {}
    }
    let mb = BigInt::from(m);
    let n = (Pow::pow(&mb, e) - Pow::pow(&mb, e - 1)) / 2;
    let lhs = BigInt::from(m) + BigInt::from(e) - 3;
    let slack = match variant {
        DimInequality::Padding => BigInt::one(),
        DimInequality::Strict => BigInt::from(3),
    };
    Ok(lhs <= n - slack)
}
