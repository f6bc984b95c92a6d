//! Weighted projective spaces, standard coefficients and log pairs, with the
//! degree bookkeeping for `K_X + B`.

use std::fmt;
use std::str::FromStr;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::numtheory::{gcd, lcm};
use crate::poly::SparsePoly;
use crate::Rational;

/// `P(a_0, …, a_N)` with every weight positive and `N ≥ 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Wps {
    weights: Vec<u64>,
}

impl Wps {
    pub fn new(weights: Vec<u64>) -> Result<Self> {
        if weights.len() < 2 {
            return Err(Error::InvalidWps(format!(
                "need at least two weights, got {}",
                weights.len()
            )));
        }
        if weights.contains(&0) {
            return Err(Error::InvalidWps("weights must be positive".into()));
        }
        Ok(Wps { weights })
    }

    /// Ordinary projective space of dimension `n`.
    pub fn projective(n: usize) -> Self {
        Wps {
            weights: vec![1; n + 1],
        }
    }

    pub fn weights(&self) -> &[u64] {
        &self.weights
    }

    pub fn dim(&self) -> usize {
        self.weights.len() - 1
    }

    pub fn nvars(&self) -> usize {
        self.weights.len()
    }
}

impl fmt::Display for Wps {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let w: Vec<String> = self.weights.iter().map(u64::to_string).collect();
        write!(f, "P({})", w.join(","))
    }
}

/// Coefficient `1 − 1/b` with `b ≥ 2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct StdCoeff(u64);

impl StdCoeff {
    pub fn new(b: u64) -> Result<Self> {
        if b < 2 {
            return Err(Error::InvalidCoefficient(b));
        }
        Ok(StdCoeff(b))
    }

    pub fn b(self) -> u64 {
        self.0
    }

    pub fn value(self) -> Rational {
        Rational::new((self.0 - 1).into(), self.0.into())
    }
}

impl fmt::Display for StdCoeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.0 - 1, self.0)
    }
}

/// How kltness of a leaf is to be certified.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum KltStrategy {
    FamilyA,
    FamilyB,
    FamilyC,
    HyperplaneArrangement,
    PlaneArrangement,
}

impl KltStrategy {
    pub const ALL: [KltStrategy; 5] = [
        KltStrategy::FamilyA,
        KltStrategy::FamilyB,
        KltStrategy::FamilyC,
        KltStrategy::HyperplaneArrangement,
        KltStrategy::PlaneArrangement,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            KltStrategy::FamilyA => "family_A",
            KltStrategy::FamilyB => "family_B",
            KltStrategy::FamilyC => "family_C",
            KltStrategy::HyperplaneArrangement => "hyperplane_arrangement",
            KltStrategy::PlaneArrangement => "plane_arrangement",
        }
    }

    pub fn is_family(self) -> bool {
        matches!(
            self,
            KltStrategy::FamilyA | KltStrategy::FamilyB | KltStrategy::FamilyC
        )
    }
}

impl FromStr for KltStrategy {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        KltStrategy::ALL
            .into_iter()
            .find(|k| k.tag() == s)
            .ok_or_else(|| Error::UnknownStrategy(s.to_string()))
    }
}

impl serde::Serialize for KltStrategy {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.tag())
    }
}

impl fmt::Display for KltStrategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Entry {
    pub coeff: StdCoeff,
    pub eq: SparsePoly,
}

/// One explicit pair `(P(a), B)` with `B = Σ (1 − 1/b_j) {f_j = 0}`.
///
/// Construction only checks arity; the geometric invariants (quasi-
/// homogeneity, distinct components) are re-checked by the verifier so
/// that tampered input can be reported rather than rejected.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LogLeaf {
    pub space: Wps,
    pub entries: Vec<Entry>,
    pub strategy: KltStrategy,
}

impl LogLeaf {
    pub fn new(space: Wps, entries: Vec<Entry>, strategy: KltStrategy) -> Result<Self> {
        for e in &entries {
            if e.eq.nvars() != space.nvars() {
                return Err(Error::ArityMismatch {
                    expected: space.nvars(),
                    found: e.eq.nvars(),
                });
            }
            if e.eq.is_zero() {
                return Err(Error::ZeroPolynomial);
            }
        }
        Ok(LogLeaf {
            space,
            entries,
            strategy,
        })
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    /// Indices `(i, j)` of entries whose equations are proportional.
    pub fn proportional_pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.entries.len() {
            for j in i + 1..self.entries.len() {
                if self.entries[i].eq.is_proportional(&self.entries[j].eq) {
                    out.push((i, j));
                }
            }
        }
        out
    }
}

/// Every weight-omitting gcd equals 1.
pub fn is_well_formed(space: &Wps) -> bool {
    let w = space.weights();
    (0..w.len()).all(|i| {
        w.iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .fold(0, |g, (_, &a)| gcd(g, a))
            == 1
    })
}

/// The common weighted degree `Σ a_j e_j` of all monomials.
pub fn weighted_degree(eq: &SparsePoly, space: &Wps) -> Result<u64> {
    if eq.nvars() != space.nvars() {
        return Err(Error::ArityMismatch {
            expected: space.nvars(),
            found: eq.nvars(),
        });
    }
    let mut degrees = eq.terms().iter().map(|m| {
        m.exps
            .iter()
            .zip(space.weights())
            .map(|(&e, &a)| u64::from(e) * a)
            .sum::<u64>()
    });
    let first = degrees.next().ok_or(Error::ZeroPolynomial)?;
    for other in degrees {
        if other != first {
            return Err(Error::NotQuasiHomogeneous { first, other });
        }
    }
    Ok(first)
}

/// Degree of `K_X`, i.e. `−Σ a_i`.
pub fn canonical_degree(space: &Wps) -> i64 {
    -(space.weights().iter().sum::<u64>() as i64)
}

/// Degree `d` with `K_X + B ∼_Q O_X(d)`, computed exactly.
pub fn log_degree(leaf: &LogLeaf) -> Result<Rational> {
    let mut d = Rational::from_integer(canonical_degree(&leaf.space).into());
    for e in &leaf.entries {
        let deg = weighted_degree(&e.eq, &leaf.space)?;
        d += e.coeff.value() * Rational::from_integer(deg.into());
    }
    Ok(d)
}

/// The index of a Calabi-Yau leaf.
///
/// On a well-formed `P(a)` the class group is `Z` graded by degree, so
/// `m(K_X + B) ∼ 0` exactly when the degree vanishes and `mB` is integral;
/// the smallest such `m` is the lcm of the `b_j`.
pub fn pair_index(leaf: &LogLeaf) -> Result<u64> {
    if !is_well_formed(&leaf.space) {
        return Err(Error::NotWellFormed);
    }
    let d = log_degree(leaf)?;
    if !d.is_zero() {
        return Err(Error::NonzeroDegree(d.to_string()));
    }
    Ok(leaf.entries.iter().fold(1, |acc, e| lcm(acc, e.coeff.b())))
}

/// Sum of the coefficients, handy for diagnostics.
pub fn total_coefficient(leaf: &LogLeaf) -> Rational {
    leaf.entries
        .iter()
        .fold(Rational::zero(), |acc, e| acc + e.coeff.value())
}
