//! Sparse multivariate polynomials over Q, plus the univariate and
//! binary-form machinery used by the plane-curve checks.

use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg;
use crate::Rational;

pub(crate) fn q(v: i64) -> Rational {
    Rational::from_integer(v.into())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Monomial {
    pub coeff: Rational,
    pub exps: Vec<u32>,
}

impl Monomial {
    pub fn total_degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    /// `Some((j, k))` when the monomial is `c·x_j^k` with `k ≥ 1`.
    pub fn pure_power(&self) -> Option<(usize, u32)> {
        let mut found = None;
        for (j, &k) in self.exps.iter().enumerate() {
            if k > 0 {
                if found.is_some() {
                    return None;
                }
                found = Some((j, k));
            }
        }
        found
    }

    fn involves(&self, var: usize) -> bool {
        self.exps[var] > 0
    }
}

/// A polynomial in a fixed number of variables with no repeated exponent
/// vectors and no zero coefficients. Term order is the order of insertion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparsePoly {
    nvars: usize,
    terms: Vec<Monomial>,
}

impl SparsePoly {
    pub fn new<I>(nvars: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Rational, Vec<u32>)>,
    {
        let mut out: Vec<Monomial> = Vec::new();
        for (coeff, exps) in terms {
            if exps.len() != nvars {
                return Err(Error::ArityMismatch {
                    expected: nvars,
                    found: exps.len(),
                });
            }
            match out.iter_mut().find(|m| m.exps == exps) {
                Some(m) => m.coeff += coeff,
                None => out.push(Monomial { coeff, exps }),
            }
        }
        out.retain(|m| !m.coeff.is_zero());
        Ok(SparsePoly { nvars, terms: out })
    }

    /// Builds from integer coefficients; panics on arity mismatch.
    pub fn from_ints(nvars: usize, terms: &[(i64, Vec<u32>)]) -> Self {
        Self::new(nvars, terms.iter().map(|(c, e)| (q(*c), e.clone())))
            .expect("exponent vectors match the declared arity")
    }

    pub fn zero(nvars: usize) -> Self {
        SparsePoly {
            nvars,
            terms: Vec::new(),
        }
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        Self::new(nvars, [(c, vec![0; nvars])]).expect("arity")
    }

    /// The coordinate `x_j`.
    pub fn var(nvars: usize, j: usize) -> Self {
        Self::power(nvars, j, 1)
    }

    /// `x_j^k`.
    pub fn power(nvars: usize, j: usize, k: u32) -> Self {
        let mut exps = vec![0; nvars];
        exps[j] = k;
        SparsePoly {
            nvars,
            terms: vec![Monomial {
                coeff: Rational::one(),
                exps,
            }],
        }
    }

    /// The linear form `Σ normal_j x_j`.
    pub fn linear_form(normal: &[Rational]) -> Self {
        let n = normal.len();
        Self::new(
            n,
            normal.iter().enumerate().map(|(j, c)| {
                let mut e = vec![0; n];
                e[j] = 1;
                (c.clone(), e)
            }),
        )
        .expect("arity")
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &[Monomial] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms
            .iter()
            .map(Monomial::total_degree)
            .max()
            .unwrap_or(0)
    }

    /// Whether every monomial has the same total degree.
    pub fn is_homogeneous(&self) -> bool {
        let d = self.total_degree();
        self.terms.iter().all(|m| m.total_degree() == d)
    }

    pub fn involves(&self, var: usize) -> bool {
        self.terms.iter().any(|m| m.involves(var))
    }

    /// `Some(j)` when the polynomial is `c·x_j`.
    pub fn coordinate_var(&self) -> Option<usize> {
        match self.terms.as_slice() {
            [m] => match m.pure_power() {
                Some((j, 1)) => Some(j),
                _ => None,
            },
            _ => None,
        }
    }

    /// The coefficient vector when every monomial is `c·x_j`.
    pub fn linear_normal(&self) -> Option<Vec<Rational>> {
        if self.is_zero() {
            return None;
        }
        let mut normal = vec![Rational::zero(); self.nvars];
        for m in &self.terms {
            match m.pure_power() {
                Some((j, 1)) => normal[j] = m.coeff.clone(),
                _ => return None,
            }
        }
        Some(normal)
    }

    /// Every monomial is a pure power of one variable and no variable occurs
    /// in two monomials.
    pub fn is_diagonal(&self) -> bool {
        let mut seen = vec![false; self.nvars];
        for m in &self.terms {
            match m.pure_power() {
                Some((j, _)) if !seen[j] => seen[j] = true,
                _ => return false,
            }
        }
        true
    }

    /// Variables that appear as a lone `c·x_j` term and nowhere else, i.e.
    /// those whose partial derivative is a nonzero constant.
    pub fn constant_partial_vars(&self) -> Vec<usize> {
        (0..self.nvars)
            .filter(|&j| {
                let mut holders = self.terms.iter().filter(|m| m.involves(j));
                matches!(
                    (holders.next(), holders.next()),
                    (Some(m), None) if m.pure_power() == Some((j, 1))
                )
            })
            .collect()
    }

    pub fn eval(&self, point: &[Rational]) -> Rational {
        let mut acc = Rational::zero();
        for m in &self.terms {
            let mut t = m.coeff.clone();
            for (x, &k) in point.iter().zip(&m.exps) {
                if k > 0 {
                    t *= num_traits::pow(x.clone(), k as usize);
                }
            }
            acc += t;
        }
        acc
    }

    pub fn partial(&self, var: usize) -> SparsePoly {
        let terms = self.terms.iter().filter(|m| m.exps[var] > 0).map(|m| {
            let mut e = m.exps.clone();
            let k = e[var];
            e[var] -= 1;
            (&m.coeff * q(k as i64), e)
        });
        SparsePoly::new(self.nvars, terms).expect("arity")
    }

    /// Sets the listed variables to zero, keeping the ambient arity.
    pub fn set_zero(&self, vars: &[usize]) -> SparsePoly {
        SparsePoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter(|m| vars.iter().all(|&v| m.exps[v] == 0))
                .cloned()
                .collect(),
        }
    }

    /// Re-expresses the polynomial in the listed variables only. Fails if any
    /// other variable occurs.
    pub fn restrict_to(&self, vars: &[usize]) -> Result<SparsePoly> {
        let mut out = Vec::with_capacity(self.terms.len());
        for m in &self.terms {
            let outside = (0..self.nvars).any(|j| m.exps[j] > 0 && !vars.contains(&j));
            if outside {
                return Err(Error::Precondition(
                    "polynomial involves a variable outside the restriction".into(),
                ));
            }
            out.push((m.coeff.clone(), vars.iter().map(|&v| m.exps[v]).collect()));
        }
        SparsePoly::new(vars.len(), out)
    }

    /// Whether `other = c·self` for some nonzero rational `c`.
    pub fn is_proportional(&self, other: &SparsePoly) -> bool {
        if self.nvars != other.nvars || self.terms.len() != other.terms.len() || self.is_zero() {
            return false;
        }
        let lead = &self.terms[0];
        let Some(olead) = other.terms.iter().find(|m| m.exps == lead.exps) else {
            return false;
        };
        let ratio = &olead.coeff / &lead.coeff;
        self.terms.iter().all(|m| {
            other
                .terms
                .iter()
                .any(|o| o.exps == m.exps && o.coeff == &m.coeff * &ratio)
        })
    }

    pub fn add(&self, other: &SparsePoly) -> SparsePoly {
        let terms = self
            .terms
            .iter()
            .chain(&other.terms)
            .map(|m| (m.coeff.clone(), m.exps.clone()));
        SparsePoly::new(self.nvars, terms).expect("arity")
    }

    pub fn scale(&self, c: &Rational) -> SparsePoly {
        let terms = self.terms.iter().map(|m| (&m.coeff * c, m.exps.clone()));
        SparsePoly::new(self.nvars, terms).expect("arity")
    }

    pub fn mul(&self, other: &SparsePoly) -> SparsePoly {
        let mut terms = Vec::with_capacity(self.terms.len() * other.terms.len());
        for a in &self.terms {
            for b in &other.terms {
                let e = a.exps.iter().zip(&b.exps).map(|(x, y)| x + y).collect();
                terms.push((&a.coeff * &b.coeff, e));
            }
        }
        SparsePoly::new(self.nvars, terms).expect("arity")
    }

    pub fn pow(&self, k: u32) -> SparsePoly {
        let mut acc = SparsePoly::constant(self.nvars, Rational::one());
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Substitutes `x_j ↦ images[j]` for every variable.
    pub fn compose(&self, images: &[SparsePoly]) -> SparsePoly {
        assert_eq!(images.len(), self.nvars);
        let target = images.first().map_or(0, SparsePoly::nvars);
        let mut acc = SparsePoly::zero(target);
        for m in &self.terms {
            let mut t = SparsePoly::constant(target, m.coeff.clone());
            for (img, &k) in images.iter().zip(&m.exps) {
                if k > 0 {
                    t = t.mul(&img.pow(k));
                }
            }
            acc = acc.add(&t);
        }
        acc
    }

    /// Coefficient polynomial of `var^k`, as a polynomial in all variables
    /// (with `var` absent).
    pub fn coefficient_of(&self, var: usize, k: u32) -> SparsePoly {
        let terms = self.terms.iter().filter(|m| m.exps[var] == k).map(|m| {
            let mut e = m.exps.clone();
            e[var] = 0;
            (m.coeff.clone(), e)
        });
        SparsePoly::new(self.nvars, terms).expect("arity")
    }

    /// Views the polynomial as univariate in `var`, evaluating every other
    /// variable at `point` (the entry at `var` is ignored).
    pub fn univariate_in(&self, var: usize, point: &[Rational]) -> UniPoly {
        let deg = self.terms.iter().map(|m| m.exps[var]).max().unwrap_or(0) as usize;
        let mut coeffs = vec![Rational::zero(); deg + 1];
        for m in &self.terms {
            let mut t = m.coeff.clone();
            for (j, (x, &k)) in point.iter().zip(&m.exps).enumerate() {
                if j != var && k > 0 {
                    t *= num_traits::pow(x.clone(), k as usize);
                }
            }
            coeffs[m.exps[var] as usize] += t;
        }
        UniPoly::new(coeffs)
    }
}

impl fmt::Display for SparsePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, m) in self.terms.iter().enumerate() {
            let neg = m.coeff.is_negative();
            let abs = m.coeff.abs();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            let is_const = m.exps.iter().all(|&k| k == 0);
            if !abs.is_one() || is_const {
                write!(f, "{abs}")?;
                if !is_const {
                    write!(f, "*")?;
                }
            }
            let mut first = true;
            for (j, &k) in m.exps.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                if !first {
                    write!(f, "*")?;
                }
                first = false;
                write!(f, "x{j}")?;
                if k > 1 {
                    write!(f, "^{k}")?;
                }
            }
        }
        Ok(())
    }
}

/// Dense univariate polynomial, coefficients from low to high degree,
/// always trimmed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniPoly {
    coeffs: Vec<Rational>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| q(c)).collect())
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Nonzero constant.
    pub fn is_unit(&self) -> bool {
        self.coeffs.len() == 1
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn derivative(&self) -> UniPoly {
        UniPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * q(k as i64))
                .collect(),
        )
    }

    pub fn rem(&self, divisor: &UniPoly) -> UniPoly {
        let dd = divisor.degree().expect("division by zero polynomial");
        let lead = &divisor.coeffs[dd];
        let mut r = self.coeffs.clone();
        while r.len() > dd && !r.is_empty() {
            let top = r.len() - 1;
            let factor = &r[top] / lead;
            let shift = top - dd;
            for (k, c) in divisor.coeffs.iter().enumerate() {
                r[shift + k] -= &factor * c;
            }
            r.pop();
            while r.last().is_some_and(Zero::is_zero) {
                r.pop();
            }
        }
        UniPoly::new(r)
    }

    /// Monic greatest common divisor (zero if both are zero).
    pub fn gcd(&self, other: &UniPoly) -> UniPoly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn monic(&self) -> UniPoly {
        match self.coeffs.last() {
            None => self.clone(),
            Some(lead) => UniPoly::new(self.coeffs.iter().map(|c| c / lead).collect()),
        }
    }

    /// No repeated root over the algebraic closure. The zero polynomial is
    /// not squarefree.
    pub fn is_squarefree(&self) -> bool {
        match self.degree() {
            None => false,
            Some(0) => true,
            Some(_) => self.gcd(&self.derivative()).is_unit(),
        }
    }

    /// Lagrange interpolation through distinct nodes.
    pub fn interpolate(points: &[(Rational, Rational)]) -> UniPoly {
        let mut acc = vec![Rational::zero(); points.len()];
        for (i, (xi, yi)) in points.iter().enumerate() {
            // basis polynomial ∏_{j≠i} (x - xj)/(xi - xj)
            let mut basis = vec![Rational::one()];
            let mut denom = Rational::one();
            for (j, (xj, _)) in points.iter().enumerate() {
                if i == j {
                    continue;
                }
                let mut next = vec![Rational::zero(); basis.len() + 1];
                for (k, c) in basis.iter().enumerate() {
                    next[k + 1] += c;
                    next[k] -= c * xj;
                }
                basis = next;
                denom *= xi - xj;
            }
            let scale = yi / denom;
            for (k, c) in basis.iter().enumerate() {
                acc[k] += c * &scale;
            }
        }
        UniPoly::new(acc)
    }
}

/// Resultant of two polynomials of the given formal degrees via the Sylvester
/// determinant. Formal degrees must match the actual leading terms.
pub fn resultant(f: &UniPoly, g: &UniPoly) -> Rational {
    let (Some(df), Some(dg)) = (f.degree(), g.degree()) else {
        return Rational::zero();
    };
    let n = df + dg;
    if n == 0 {
        return Rational::one();
    }
    let mut rows = vec![vec![Rational::zero(); n]; n];
    // coefficients from high to low degree
    for r in 0..dg {
        for (k, c) in f.coeffs.iter().rev().enumerate() {
            rows[r][r + k] = c.clone();
        }
    }
    for r in 0..df {
        for (k, c) in g.coeffs.iter().rev().enumerate() {
            rows[dg + r][r + k] = c.clone();
        }
    }
    linalg::determinant(&rows)
}

/// A binary form `h(x, z)` of a fixed degree, stored through its
/// dehomogenization `h(x, 1)`. Roots at `z = 0` show up as a drop in degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BinaryForm {
    degree: usize,
    dehom: UniPoly,
}

impl BinaryForm {
    pub fn new(degree: usize, dehom: UniPoly) -> Self {
        debug_assert!(dehom.degree().is_none_or(|d| d <= degree));
        BinaryForm { degree, dehom }
    }

    pub fn is_zero(&self) -> bool {
        self.dehom.is_zero()
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn dehomogenized(&self) -> &UniPoly {
        &self.dehom
    }

    fn root_at_infinity(&self) -> usize {
        self.degree - self.dehom.degree().unwrap_or(0)
    }

    /// Distinct roots on P¹.
    pub fn is_squarefree(&self) -> bool {
        !self.is_zero() && self.dehom.is_squarefree() && self.root_at_infinity() <= 1
    }

    /// Shared root on P¹. Zero forms share every root.
    pub fn shares_root_with(&self, other: &BinaryForm) -> bool {
        if self.is_zero() || other.is_zero() {
            return true;
        }
        !self.dehom.gcd(&other.dehom).is_unit()
            || (self.root_at_infinity() > 0 && other.root_at_infinity() > 0)
    }

    /// The binary form of a homogeneous polynomial in two variables
    /// `(x_0, x_1)`, dehomogenized at `x_1 = 1`.
    pub fn from_poly(f: &SparsePoly) -> Self {
        assert_eq!(f.nvars(), 2);
        let d = f.total_degree() as usize;
        let mut coeffs = vec![Rational::zero(); d + 1];
        for m in f.terms() {
            coeffs[m.exps[0] as usize] += &m.coeff;
        }
        BinaryForm::new(d, UniPoly::new(coeffs))
    }
}

/// `Res_y(F, G)` for homogeneous `F, G` in `(x, y, z)` (variables 0, 1, 2)
/// whose `y`-leading coefficients are nonzero constants. The result is a
/// binary form in `(x, z)` of degree `deg F · deg G`, recovered by
/// evaluating at `z = 1` and interpolating in `x`.
pub fn resultant_y(f: &SparsePoly, g: &SparsePoly) -> BinaryForm {
    let df = f.total_degree() as usize;
    let dg = g.total_degree() as usize;
    debug_assert!(!f.coefficient_of(1, df as u32).is_zero());
    debug_assert!(!g.coefficient_of(1, dg as u32).is_zero());
    let d = df * dg;
    let points: Vec<(Rational, Rational)> = (0..=d)
        .map(|t| {
            let x = q(t as i64);
            let point = [x.clone(), Rational::zero(), Rational::one()];
            let fu = f.univariate_in(1, &point);
            let gu = g.univariate_in(1, &point);
            (x, resultant(&fu, &gu))
        })
        .collect();
    BinaryForm::new(d, UniPoly::interpolate(&points))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn merge_and_drop_zero_terms() {
        let p = SparsePoly::from_ints(2, &[(1, vec![1, 0]), (2, vec![0, 1]), (-1, vec![1, 0])]);
        assert_eq!(p.terms().len(), 1);
        assert_eq!(p.coordinate_var(), Some(1));
        assert!(SparsePoly::new(2, [(q(1), vec![1])]).is_err());
    }

    #[test]
    fn proportionality() {
        let a = SparsePoly::from_ints(3, &[(1, vec![1, 0, 0]), (1, vec![0, 2, 0])]);
        let b = a.scale(&q(-3));
        assert!(a.is_proportional(&b));
        let c = SparsePoly::from_ints(3, &[(1, vec![1, 0, 0]), (2, vec![0, 2, 0])]);
        assert!(!a.is_proportional(&c));
    }

    #[test]
    fn constant_partials() {
        // x0 + x1 + x2^2 + x3*x1?  x1 appears twice so only x0 qualifies
        let p = SparsePoly::from_ints(
            4,
            &[
                (1, vec![1, 0, 0, 0]),
                (1, vec![0, 1, 0, 0]),
                (1, vec![0, 0, 2, 0]),
                (1, vec![0, 1, 0, 1]),
            ],
        );
        assert_eq!(p.constant_partial_vars(), vec![0]);
    }

    #[test]
    fn univariate_gcd_and_squarefree() {
        let f = UniPoly::from_ints(&[-1, 0, 1]); // x^2 - 1
        let g = UniPoly::from_ints(&[1, 2, 1]); // (x+1)^2
        assert_eq!(f.gcd(&g), UniPoly::from_ints(&[1, 1]));
        assert!(f.is_squarefree());
        assert!(!g.is_squarefree());
        assert!(UniPoly::from_ints(&[5]).is_squarefree());
        assert!(!UniPoly::from_ints(&[]).is_squarefree());
    }

    #[test]
    fn sylvester_resultant() {
        // Res(x^2 - 1, x - 2) = (2)^2 - 1 = 3 up to sign convention: g(roots of f)
        let f = UniPoly::from_ints(&[-1, 0, 1]);
        let g = UniPoly::from_ints(&[-2, 1]);
        // Res(f, g) = lc(f)^1 * ∏ g(α) = (1-2)(-1-2) = 3
        assert_eq!(resultant(&f, &g), q(3));
        let h = UniPoly::from_ints(&[-1, 1]);
        assert_eq!(resultant(&f, &h), q(0));
    }

    #[test]
    fn interpolation_recovers_polynomial() {
        let f = UniPoly::from_ints(&[3, 0, -2, 1]);
        let pts: Vec<_> = (0..4).map(|t| (q(t), f.eval(&q(t)))).collect();
        assert_eq!(UniPoly::interpolate(&pts), f);
    }

    #[test]
    fn tangent_line_gives_double_root() {
        // line x + y = 0 against (x + y) z - y^2: substituting y = -x gives -x^2
        let line = SparsePoly::from_ints(3, &[(1, vec![1, 0, 0]), (1, vec![0, 1, 0])]);
        let conic = SparsePoly::from_ints(
            3,
            &[(1, vec![1, 0, 1]), (1, vec![0, 1, 1]), (-1, vec![0, 2, 0])],
        );
        let r = resultant_y(&line, &conic);
        assert_eq!(r.degree(), 2);
        assert!(!r.is_squarefree());
    }

    #[test]
    fn binary_form_infinity() {
        // x * z: roots 0 and ∞, squarefree
        let f = BinaryForm::new(2, UniPoly::from_ints(&[0, 1]));
        assert!(f.is_squarefree());
        // z^2: double root at ∞
        let g = BinaryForm::new(2, UniPoly::from_ints(&[1]));
        assert!(!g.is_squarefree());
        assert!(f.shares_root_with(&g));
        let h = BinaryForm::new(1, UniPoly::from_ints(&[-1, 1]));
        assert!(!h.shares_root_with(&g));
    }

    #[test]
    fn display() {
        let p = SparsePoly::from_ints(3, &[(1, vec![2, 0, 0]), (-3, vec![0, 1, 1])]);
        assert_eq!(p.to_string(), "x0^2 - 3*x1*x2");
    }
}
