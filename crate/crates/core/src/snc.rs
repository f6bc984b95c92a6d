//! Kltness of log leaves through the affine-cone reduction.
//!
//! A pair on a well-formed `P(a)` is klt iff its affine cone is klt outside
//! the origin. Every strategy below proves the stronger statement that the
//! cone's boundary has simple normal crossing support outside the origin;
//! with all coefficients `< 1` that implies klt. Nothing here attempts a
//! general klt decision: each strategy re-checks one shape of argument.

use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg;
use crate::poly::{q, resultant_y, BinaryForm, SparsePoly};
use crate::wps::{is_well_formed, KltStrategy, LogLeaf};
use crate::Rational;

pub const STEP_WELL_FORMED: &str =
    "ambient space is well-formed, so kltness may be read off the affine cone";
pub const STEP_DISTINCT: &str = "boundary components are pairwise distinct";
pub const STEP_SHAPE: &str = "leaf matches the declared strategy shape";
pub const STEP_LINEAR_BLOCK: &str =
    "variables with constant nonzero partial derivative in H make the support snc off their common zero locus";
pub const STEP_RESIDUAL_SMOOTH: &str = "residual hypersurface is smooth outside the origin";
pub const STEP_RESIDUAL_GRADIENT: &str =
    "residual gradient (z, 2y, x + 4z^3) vanishes only at the origin";
pub const STEP_RESIDUAL_RESTRICTION: &str =
    "residual restricted to the distinguished coordinate hyperplane is smooth outside the origin";
pub const STEP_HYPERPLANES: &str = "hyperplane arrangement is snc outside the origin";
pub const STEP_LINEAR_ENTRIES: &str = "all boundary equations are linear forms";
pub const STEP_PLANE_AMBIENT: &str = "ambient space is P^1 or P^2";
pub const STEP_PLANE: &str = "curve arrangement is snc";
pub const STEP_KLT: &str = "snc support with all coefficients < 1 outside the origin implies klt";

pub const HYP_IRREDUCIBLE: &str = "irreducibility of non-coordinate divisors";

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KltStep {
    pub step: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KltReport {
    pub passed: bool,
    pub strategy: KltStrategy,
    pub steps: Vec<KltStep>,
    pub unchecked_hypotheses: Vec<String>,
}

impl KltReport {
    fn new(strategy: KltStrategy) -> Self {
        KltReport {
            passed: false,
            strategy,
            steps: Vec::new(),
            unchecked_hypotheses: Vec::new(),
        }
    }

    fn push(&mut self, step: &str, passed: bool) -> bool {
        self.steps.push(KltStep {
            step: step.to_string(),
            passed,
            detail: None,
        });
        passed
    }

    fn push_detail(&mut self, step: &str, passed: bool, detail: String) -> bool {
        self.steps.push(KltStep {
            step: step.to_string(),
            passed,
            detail: Some(detail),
        });
        passed
    }

    fn all_passed(&self) -> bool {
        !self.steps.is_empty() && self.steps.iter().all(|s| s.passed)
    }

    fn finish(mut self) -> Self {
        self.passed = self.all_passed();
        self
    }

    pub fn failed_steps(&self) -> impl Iterator<Item = &KltStep> {
        self.steps.iter().filter(|s| !s.passed)
    }
}

/// For a diagonal form `Σ c_j x_j^{k_j}`: whether `{f = 0}` is smooth away
/// from the origin of the affine space on the polynomial's variables.
///
/// The gradient `(c_j k_j x_j^{k_j − 1})` never vanishes if some `k_j = 1`;
/// otherwise it vanishes exactly on the coordinates that do not occur, so
/// the check is combinatorial.
pub fn diagonal_smooth_outside_origin(eq: &SparsePoly) -> Result<bool> {
    if !eq.is_diagonal() {
        return Err(Error::Precondition(format!("{eq} is not a diagonal form")));
    }
    if eq.is_zero() {
        return Ok(false);
    }
    let mut linear = false;
    let mut constant = false;
    for m in eq.terms() {
        match m.pure_power() {
            Some((_, 1)) => linear = true,
            None => constant = true,
            _ => {}
        }
    }
    if linear || (constant && eq.terms().len() == 1) {
        return Ok(true);
    }
    Ok((0..eq.nvars()).all(|j| eq.involves(j)))
}

/// Whether the hyperplanes `{⟨n_i, x⟩ = 0}` in `A^{N+1}` form an snc
/// arrangement outside the origin.
///
/// Any dependent subset of at most `N+1` normals has rank `≤ N`, so its
/// hyperplanes share a line through the origin. Conversely if every subset of
/// size `min(count, N+1)` is independent, so is every smaller subset.
pub fn hyperplane_arrangement_snc(normals: &[Vec<Rational>]) -> bool {
    let Some(first) = normals.first() else {
        return true;
    };
    let dim = first.len();
    if normals
        .iter()
        .any(|n| n.len() != dim || n.iter().all(Zero::is_zero))
    {
        return false;
    }
    let k = normals.len().min(dim);
    let mut subset: Vec<usize> = (0..k).collect();
    loop {
        let rows: Vec<Vec<Rational>> = subset.iter().map(|&i| normals[i].clone()).collect();
        if linalg::rank(&rows) < k {
            return false;
        }
        // next k-combination in lexicographic order
        let n = normals.len();
        let Some(pos) = (0..k).rev().find(|&i| subset[i] != i + n - k) else {
            return true;
        };
        subset[pos] += 1;
        for i in pos + 1..k {
            subset[i] = subset[i - 1] + 1;
        }
    }
}

/// Largest shear parameter sum tried before giving up.
const MAX_SHEAR: i64 = 64;

/// The substitution `x ↦ x + a·y`, `z ↦ z + b·y`.
fn shear_images(a: i64, b: i64) -> [SparsePoly; 3] {
    let x = SparsePoly::var(3, 0);
    let y = SparsePoly::var(3, 1);
    let z = SparsePoly::var(3, 2);
    [x.add(&y.scale(&q(a))), y.clone(), z.add(&y.scale(&q(b)))]
}

/// `y`-leading coefficient of the sheared curve, which is `F(a, 1, b)`.
fn shear_lead(f: &SparsePoly, a: i64, b: i64) -> Rational {
    f.eval(&[q(a), Rational::one(), q(b)])
}

/// Smallest shear, ordered by `a + b` then by `b`, for which every curve has
/// a nonzero `y`-leading coefficient. The plain `x ↦ x + k·y` shears come
/// first within each total.
fn find_shear(curves: &[&SparsePoly]) -> Option<(i64, i64)> {
    (0..=MAX_SHEAR).find_map(|s| {
        (0..=s)
            .map(|b| (s - b, b))
            .find(|&(a, b)| curves.iter().all(|f| !shear_lead(f, a, b).is_zero()))
    })
}

fn conic_is_smooth(f: &SparsePoly) -> bool {
    // symmetric matrix of the quadratic form
    let mut m = vec![vec![Rational::zero(); 3]; 3];
    for t in f.terms() {
        let vars: Vec<usize> = (0..3)
            .flat_map(|j| std::iter::repeat_n(j, t.exps[j] as usize))
            .collect();
        let (i, j) = (vars[0], vars[1]);
        if i == j {
            m[i][i] += &t.coeff;
        } else {
            let half = &t.coeff / q(2);
            m[i][j] += &half;
            m[j][i] += &half;
        }
    }
    !linalg::determinant(&m).is_zero()
}

/// Smoothness of a plane cubic: its three partials share no projective zero.
/// Common zeros project to common roots of two `y`-resultants; a shared root
/// of those leads to conservative rejection.
fn cubic_is_smooth(f: &SparsePoly) -> bool {
    for s in 0..=MAX_SHEAR {
        for b in 0..=s {
            let a = s - b;
            let g = f.compose(&shear_images(a, b));
            let grads: Vec<SparsePoly> = (0..3).map(|j| g.partial(j)).collect();
            let usable = grads.iter().all(|p| {
                p.total_degree() == 2 && p.is_homogeneous() && !p.coefficient_of(1, 2).is_zero()
            });
            if !usable {
                continue;
            }
            let r1 = resultant_y(&grads[1], &grads[0]);
            let r2 = resultant_y(&grads[1], &grads[2]);
            if r1.is_zero() || r2.is_zero() {
                return false;
            }
            return !r1.shares_root_with(&r2);
        }
    }
    false
}

/// Whether the curves (lines, conics, cubics in `P²`, or binary forms in
/// `P¹`) form an snc arrangement: each is smooth, pairs meet transversally
/// and no point lies on three curves.
///
/// In `P²` all curves are sheared once; a pair is transversal if its
/// `y`-resultant is squarefree, and a triple is free of common points if two
/// resultants through a shared curve have no common root. Ambiguous cases are
/// rejected.
#[allow(clippy::needless_range_loop)]
pub fn plane_arrangement_snc(curves: &[SparsePoly]) -> Result<bool> {
    let Some(first) = curves.first() else {
        return Ok(true);
    };
    let nvars = first.nvars();
    if nvars != 2 && nvars != 3 {
        return Err(Error::Precondition(format!(
            "plane arrangements live in 2 or 3 variables, got {nvars}"
        )));
    }
    for c in curves {
        if c.nvars() != nvars {
            return Err(Error::ArityMismatch {
                expected: nvars,
                found: c.nvars(),
            });
        }
        let d = c.total_degree();
        if d > 3 {
            return Err(Error::DegreeTooHigh(d));
        }
        if !c.is_homogeneous() {
            return Err(Error::Precondition(format!("{c} is not homogeneous")));
        }
        if c.is_zero() || d == 0 {
            return Ok(false);
        }
    }

    if nvars == 2 {
        let forms: Vec<BinaryForm> = curves.iter().map(BinaryForm::from_poly).collect();
        if !forms.iter().all(BinaryForm::is_squarefree) {
            return Ok(false);
        }
        for i in 0..forms.len() {
            for j in i + 1..forms.len() {
                if forms[i].shares_root_with(&forms[j]) {
                    return Ok(false);
                }
            }
        }
        return Ok(true);
    }

    let smooth = curves.iter().all(|c| match c.total_degree() {
        1 => true,
        2 => conic_is_smooth(c),
        _ => cubic_is_smooth(c),
    });
    if !smooth {
        return Ok(false);
    }

    let refs: Vec<&SparsePoly> = curves.iter().collect();
    let Some((a, b)) = find_shear(&refs) else {
        return Ok(false);
    };
    let images = shear_images(a, b);
    let sheared: Vec<SparsePoly> = curves.iter().map(|c| c.compose(&images)).collect();

    let n = sheared.len();
    let mut res = vec![vec![None; n]; n];
    for i in 0..n {
        for j in i + 1..n {
            let r = resultant_y(&sheared[i], &sheared[j]);
            if !r.is_squarefree() {
                return Ok(false);
            }
            res[i][j] = Some(r.clone());
            res[j][i] = Some(r);
        }
    }
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let rij = res[i][j].as_ref().expect("filled");
                let rik = res[i][k].as_ref().expect("filled");
                if rij.shares_root_with(rik) {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// Splits a family leaf into coordinate hyperplane variables and the single
/// non-coordinate equation `H`.
fn split_family(leaf: &LogLeaf) -> std::result::Result<(Vec<usize>, &SparsePoly), String> {
    let mut coords = Vec::new();
    let mut others = Vec::new();
    for e in &leaf.entries {
        match e.eq.coordinate_var() {
            Some(j) => coords.push(j),
            None => others.push(&e.eq),
        }
    }
    match others.as_slice() {
        [h] => Ok((coords, h)),
        _ => Err(format!(
            "expected exactly one non-coordinate component, found {}",
            others.len()
        )),
    }
}

fn shape_err(strategy: KltStrategy, reason: impl Into<String>) -> Error {
    Error::ShapeMismatch {
        strategy: strategy.tag().to_string(),
        reason: reason.into(),
    }
}

/// Re-runs the two-step snc reduction for the parametric families.
///
/// Step 1: at a point where some `x_i` with `∂H/∂x_i` a nonzero constant is
/// nonzero, `dH` is independent of every coordinate differential present, so
/// the support is snc away from `⋂ {x_i = 0}`. Step 2: on that locus the
/// configuration is the residual hypersurface `R = H|_{x_L = 0}` together
/// with one coordinate hyperplane `{w = 0}`, which is snc outside the origin
/// when `R` and `R|_{w = 0}` are both smooth there.
pub fn family_snc_check(leaf: &LogLeaf) -> Result<KltReport> {
    let strategy = leaf.strategy;
    if !strategy.is_family() {
        return Err(shape_err(strategy, "not a parametric family strategy"));
    }
    let mut report = KltReport::new(strategy);
    report
        .unchecked_hypotheses
        .push(HYP_IRREDUCIBLE.to_string());

    let (coords, h) = split_family(leaf).map_err(|r| shape_err(strategy, r))?;

    if strategy == KltStrategy::FamilyC && h.linear_normal().is_some() {
        // all weights are 1 and the boundary is e + 1 hyperplanes
        let normals: Vec<Vec<Rational>> = leaf
            .entries
            .iter()
            .map(|e| {
                e.eq.linear_normal()
                    .ok_or_else(|| shape_err(strategy, "non-linear entry in the linear case"))
            })
            .collect::<Result<_>>()?;
        report.push(STEP_HYPERPLANES, hyperplane_arrangement_snc(&normals));
        return Ok(report.finish());
    }

    let linear = h.constant_partial_vars();
    let residual_vars: Vec<usize> = (0..h.nvars()).filter(|j| !linear.contains(j)).collect();
    let residual_coords: Vec<usize> = coords
        .iter()
        .copied()
        .filter(|j| residual_vars.contains(j))
        .collect();
    let expected_residual = match strategy {
        KltStrategy::FamilyA | KltStrategy::FamilyB => Some(3),
        _ => None,
    };
    if let Some(size) = expected_residual {
        if residual_vars.len() != size {
            return Err(shape_err(
                strategy,
                format!(
                    "residual block has {} variables, expected {size}",
                    residual_vars.len()
                ),
            ));
        }
    } else if residual_vars.len() < 2 {
        return Err(shape_err(
            strategy,
            "residual block has fewer than 2 variables",
        ));
    }
    let &[w] = residual_coords.as_slice() else {
        return Err(shape_err(
            strategy,
            format!(
                "expected one coordinate hyperplane in the residual block, found {}",
                residual_coords.len()
            ),
        ));
    };

    report.push_detail(
        STEP_LINEAR_BLOCK,
        true,
        format!("linear variables {linear:?}, residual variables {residual_vars:?}"),
    );

    let r = h
        .set_zero(&linear)
        .restrict_to(&residual_vars)
        .map_err(|e| shape_err(strategy, e.to_string()))?;
    let w_local = residual_vars
        .iter()
        .position(|&v| v == w)
        .expect("w is residual");
    let rest: Vec<usize> = (0..residual_vars.len()).filter(|&j| j != w_local).collect();
    let restriction = r
        .set_zero(&[w_local])
        .restrict_to(&rest)
        .expect("w was zeroed");

    match strategy {
        KltStrategy::FamilyA | KltStrategy::FamilyC => {
            if !r.is_diagonal() {
                return Err(shape_err(strategy, format!("residual {r} is not diagonal")));
            }
            if strategy == KltStrategy::FamilyC {
                let mut exps = r.terms().iter().filter_map(|m| m.pure_power().map(|p| p.1));
                let k = exps.next();
                if k.is_none() || !exps.all(|e| Some(e) == k) {
                    return Err(shape_err(
                        strategy,
                        format!("residual {r} is not a Fermat form"),
                    ));
                }
            }
            let smooth = diagonal_smooth_outside_origin(&r)?;
            report.push_detail(STEP_RESIDUAL_SMOOTH, smooth, r.to_string());
        }
        KltStrategy::FamilyB => {
            let ok = family_b_gradient(&r, w_local).map_err(|why| shape_err(strategy, why))?;
            report.push_detail(STEP_RESIDUAL_GRADIENT, ok, r.to_string());
        }
        _ => unreachable!("family strategies only"),
    }

    let restricted_ok = restriction.is_diagonal() && diagonal_smooth_outside_origin(&restriction)?;
    report.push_detail(
        STEP_RESIDUAL_RESTRICTION,
        restricted_ok,
        restriction.to_string(),
    );
    Ok(report.finish())
}

/// The residual of the second family must read `c₁·x·z + c₂·y² + c₃·z⁴` with
/// `x` the distinguished coordinate. Its gradient `(c₁z, 2c₂y, c₁x + 4c₃z³)`
/// forces `z = 0`, then `y = 0`, then `x = 0`.
fn family_b_gradient(r: &SparsePoly, x: usize) -> std::result::Result<bool, String> {
    let mismatch = || format!("residual {r} is not of the form x*z + y^2 + z^4");
    if r.terms().len() != 3 {
        return Err(mismatch());
    }
    let mixed = r
        .terms()
        .iter()
        .find(|m| m.pure_power().is_none())
        .ok_or_else(mismatch)?;
    let others: Vec<usize> = (0..3).filter(|&j| j != x).collect();
    let z = *others
        .iter()
        .find(|&&j| mixed.exps[j] == 1)
        .ok_or_else(mismatch)?;
    let y = *others.iter().find(|&&j| j != z).expect("three variables");
    let mut expect_mixed = vec![0; 3];
    expect_mixed[x] = 1;
    expect_mixed[z] = 1;
    let has_pure = |v: usize, k: u32| r.terms().iter().any(|m| m.pure_power() == Some((v, k)));
    if mixed.exps != expect_mixed || !has_pure(y, 2) || !has_pure(z, 4) {
        return Err(mismatch());
    }
    // the x- and y-partials are c₁·z and 2c₂·y with c₁, c₂ nonzero
    let c1 = &mixed.coeff;
    let c2 = &r
        .terms()
        .iter()
        .find(|m| m.pure_power() == Some((y, 2)))
        .expect("checked")
        .coeff;
    Ok(!c1.is_zero() && !c2.is_zero())
}

/// Dispatches on the leaf's strategy and records every step. Shape problems
/// are reported as a failed step rather than an error.
pub fn is_klt_leaf(leaf: &LogLeaf) -> KltReport {
    let strategy = leaf.strategy;
    let mut prefix = KltReport::new(strategy);
    prefix.push(STEP_WELL_FORMED, is_well_formed(&leaf.space));
    let dupes = leaf.proportional_pairs();
    if dupes.is_empty() {
        prefix.push(STEP_DISTINCT, true);
    } else {
        prefix.push_detail(
            STEP_DISTINCT,
            false,
            format!("proportional entries {dupes:?}"),
        );
    }

    let body = match strategy {
        KltStrategy::FamilyA | KltStrategy::FamilyB | KltStrategy::FamilyC => {
            family_snc_check(leaf)
        }
        KltStrategy::HyperplaneArrangement => Ok(hyperplane_leaf(leaf)),
        KltStrategy::PlaneArrangement => Ok(plane_leaf(leaf)),
    };
    let mut report = match body {
        Ok(body) => {
            let mut r = prefix;
            r.steps.extend(body.steps);
            r.unchecked_hypotheses = body.unchecked_hypotheses;
            r
        }
        Err(e) => {
            let mut r = prefix;
            r.push_detail(STEP_SHAPE, false, e.to_string());
            if strategy.is_family() {
                r.unchecked_hypotheses.push(HYP_IRREDUCIBLE.to_string());
            }
            r
        }
    };
    let coefficients_below_one = leaf.entries.iter().all(|e| e.coeff.b() >= 2);
    let ok = report.all_passed() && coefficients_below_one;
    report.push(STEP_KLT, ok);
    report.finish()
}

fn hyperplane_leaf(leaf: &LogLeaf) -> KltReport {
    let mut report = KltReport::new(leaf.strategy);
    let normals: Option<Vec<Vec<Rational>>> =
        leaf.entries.iter().map(|e| e.eq.linear_normal()).collect();
    let Some(normals) = normals else {
        report.push(STEP_LINEAR_ENTRIES, false);
        return report;
    };
    report.push(STEP_LINEAR_ENTRIES, true);
    report.push(STEP_HYPERPLANES, hyperplane_arrangement_snc(&normals));
    report
}

fn plane_leaf(leaf: &LogLeaf) -> KltReport {
    let mut report = KltReport::new(leaf.strategy);
    let w = leaf.space.weights();
    let ambient_ok = (w.len() == 2 || w.len() == 3) && w.iter().all(|&a| a == 1);
    if !report.push(STEP_PLANE_AMBIENT, ambient_ok) {
        return report;
    }
    let curves: Vec<SparsePoly> = leaf.entries.iter().map(|e| e.eq.clone()).collect();
    match plane_arrangement_snc(&curves) {
        Ok(ok) => {
            report.push(STEP_PLANE, ok);
        }
        Err(e) => {
            report.push_detail(STEP_PLANE, false, e.to_string());
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(nvars: usize, terms: &[(i64, &[u32])]) -> SparsePoly {
        SparsePoly::from_ints(
            nvars,
            &terms
                .iter()
                .map(|(c, e)| (*c, e.to_vec()))
                .collect::<Vec<_>>(),
        )
    }

    fn normals(rows: &[&[i64]]) -> Vec<Vec<Rational>> {
        rows.iter()
            .map(|r| r.iter().map(|&v| q(v)).collect())
            .collect()
    }

    #[test]
    fn diagonal_smoothness() {
        let f = poly(3, &[(1, &[2, 0, 0]), (1, &[0, 4, 0]), (1, &[0, 0, 4])]);
        assert!(diagonal_smooth_outside_origin(&f).unwrap());
        let g = poly(3, &[(1, &[2, 0, 0]), (1, &[0, 4, 0])]);
        assert!(!diagonal_smooth_outside_origin(&g).unwrap());
        let fermat = poly(
            4,
            &[
                (1, &[4, 0, 0, 0]),
                (1, &[0, 4, 0, 0]),
                (1, &[0, 0, 4, 0]),
                (1, &[0, 0, 0, 4]),
            ],
        );
        assert!(diagonal_smooth_outside_origin(&fermat).unwrap());
        let mixed = poly(3, &[(1, &[1, 0, 1]), (1, &[0, 2, 0])]);
        assert!(diagonal_smooth_outside_origin(&mixed).is_err());
        // a linear term keeps the gradient nonzero
        let lin = poly(3, &[(1, &[1, 0, 0]), (1, &[0, 2, 0])]);
        assert!(diagonal_smooth_outside_origin(&lin).unwrap());
    }

    #[test]
    fn hyperplanes() {
        let good = normals(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[1, 1, 1]]);
        assert!(hyperplane_arrangement_snc(&good));
        let pencil = normals(&[&[1, 0, 0], &[0, 1, 0], &[1, 1, 0]]);
        assert!(!hyperplane_arrangement_snc(&pencil));
        let twice = normals(&[&[1, 2, 0], &[1, 2, 0]]);
        assert!(!hyperplane_arrangement_snc(&twice));
        assert!(!hyperplane_arrangement_snc(&normals(&[&[0, 0]])));
        // P^1 with four distinct points
        let pts = normals(&[&[1, 0], &[0, 1], &[1, -1], &[1, -2]]);
        assert!(hyperplane_arrangement_snc(&pts));
    }

    fn line(a: i64, b: i64, c: i64) -> SparsePoly {
        poly(3, &[(a, &[1, 0, 0]), (b, &[0, 1, 0]), (c, &[0, 0, 1])])
    }

    fn conic_xz_y2() -> SparsePoly {
        poly(3, &[(1, &[1, 0, 1]), (-1, &[0, 2, 0])])
    }

    #[test]
    fn four_general_lines() {
        // y = k x + (k^2 + 1) z for k = 0..3
        let lines: Vec<_> = (0..4).map(|k| line(k, -1, k * k + 1)).collect();
        assert!(plane_arrangement_snc(&lines).unwrap());
    }

    #[test]
    fn tangent_line_and_conic() {
        assert!(!plane_arrangement_snc(&[line(1, 0, 0), conic_xz_y2()]).unwrap());
        // a transversal line is fine
        assert!(plane_arrangement_snc(&[line(0, -1, 1), conic_xz_y2()]).unwrap());
    }

    #[test]
    fn concurrent_lines() {
        // all through [0:0:1]
        let lines = [line(1, 0, 0), line(0, 1, 0), line(1, 1, 0)];
        assert!(!plane_arrangement_snc(&lines).unwrap());
    }

    #[test]
    fn coordinate_triangle_is_snc() {
        let lines = [line(1, 0, 0), line(0, 1, 0), line(0, 0, 1)];
        assert!(plane_arrangement_snc(&lines).unwrap());
    }

    #[test]
    fn singular_conic_rejected() {
        // xy: two lines
        let c = poly(3, &[(1, &[1, 1, 0])]);
        assert!(!plane_arrangement_snc(&[c]).unwrap());
    }

    #[test]
    fn cubics() {
        let fermat = poly(3, &[(1, &[3, 0, 0]), (1, &[0, 3, 0]), (1, &[0, 0, 3])]);
        assert!(plane_arrangement_snc(&[fermat]).unwrap());
        // nodal cubic y^2 z - x^3 - x^2 z
        let nodal = poly(3, &[(1, &[0, 2, 1]), (-1, &[3, 0, 0]), (-1, &[2, 0, 1])]);
        assert!(!plane_arrangement_snc(&[nodal]).unwrap());
        let quartic = poly(3, &[(1, &[4, 0, 0])]);
        assert_eq!(
            plane_arrangement_snc(&[quartic]),
            Err(Error::DegreeTooHigh(4))
        );
    }

    #[test]
    fn projective_line_points() {
        let p = |a: i64, b: i64| poly(2, &[(a, &[1, 0]), (b, &[0, 1])]);
        assert!(plane_arrangement_snc(&[p(1, 0), p(0, 1), p(1, -1)]).unwrap());
        assert!(!plane_arrangement_snc(&[p(1, 0), p(2, 0)]).unwrap());
    }
}
