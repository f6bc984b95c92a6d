//! Independent re-check of a certificate. Nothing the constructor computed is
//! trusted: every leaf's degree, index and klt argument is recomputed and
//! the tree arithmetic is redone from scratch.

use serde::Serialize;

use super::schema::Claim;
use super::Certificate;
use crate::numtheory::lcm;
use crate::snc::{is_klt_leaf, KltReport};
use crate::wps::{is_well_formed, log_degree, weighted_degree, LogLeaf};

pub const CHECK_WELL_FORMED: &str = "well_formed";
pub const CHECK_QUASI_HOMOGENEOUS: &str = "quasi_homogeneous";
pub const CHECK_DISTINCT: &str = "distinct_components";
pub const CHECK_STANDARD: &str = "standard_coefficients";
pub const CHECK_DEGREE_ZERO: &str = "degree_zero";
pub const CHECK_INDEX: &str = "index";
pub const CHECK_KLT: &str = "klt";
pub const CHECK_ELLIPTIC_DIM: &str = "elliptic_dim";
pub const CHECK_PRODUCT_ARITY: &str = "product_arity";
pub const CHECK_CITED: &str = "cited_leaf";
pub const CHECK_CLAIM_DIM: &str = "claimed_dim";
pub const CHECK_CLAIM_INDEX: &str = "claimed_index";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    /// Cited leaves fail verification.
    Strict,
    /// Cited leaves are accepted and listed.
    Trusting,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub step: &'static str,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl Check {
    fn new(step: &'static str, passed: bool) -> Self {
        Check {
            step,
            passed,
            detail: None,
        }
    }

    fn with(step: &'static str, passed: bool, detail: impl Into<String>) -> Self {
        Check {
            step,
            passed,
            detail: Some(detail.into()),
        }
    }
}

/// Findings for one node. `path` lists child positions from the root,
/// e.g. `"0.1"`; the root itself is `""`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LeafReport {
    pub path: String,
    pub node: &'static str,
    pub dim: usize,
    pub index: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub log_degree: Option<String>,
    pub checks: Vec<Check>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub klt: Option<KltReport>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CitedRef {
    pub path: String,
    pub dim: usize,
    pub index: u64,
    pub cite: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub passed: bool,
    pub mode: Mode,
    pub dim: usize,
    /// `None` when some leaf's index could not be established.
    pub index: Option<u64>,
    pub nodes: Vec<LeafReport>,
    pub claim_checks: Vec<Check>,
    pub cited_leaves: Vec<CitedRef>,
    pub unchecked_hypotheses: Vec<String>,
}

impl VerificationReport {
    /// Names of every failing check, in report order.
    pub fn failed_steps(&self) -> Vec<&'static str> {
        let mut out: Vec<&'static str> = self
            .nodes
            .iter()
            .flat_map(|n| n.checks.iter())
            .chain(&self.claim_checks)
            .filter(|c| !c.passed)
            .map(|c| c.step)
            .collect();
        out.dedup();
        out
    }
}

fn check_leaf(leaf: &LogLeaf, path: String) -> LeafReport {
    let mut checks = Vec::new();
    let wf = is_well_formed(&leaf.space);
    checks.push(Check::with(CHECK_WELL_FORMED, wf, leaf.space.to_string()));

    let mut qh_fail = Vec::new();
    for (i, e) in leaf.entries.iter().enumerate() {
        if let Err(err) = weighted_degree(&e.eq, &leaf.space) {
            qh_fail.push(format!("entry {i}: {err}"));
        }
    }
    let qh = qh_fail.is_empty();
    checks.push(if qh {
        Check::new(CHECK_QUASI_HOMOGENEOUS, true)
    } else {
        Check::with(CHECK_QUASI_HOMOGENEOUS, false, qh_fail.join("; "))
    });

    let dupes = leaf.proportional_pairs();
    checks.push(if dupes.is_empty() {
        Check::new(CHECK_DISTINCT, true)
    } else {
        Check::with(
            CHECK_DISTINCT,
            false,
            format!("proportional entries {dupes:?}"),
        )
    });

    // StdCoeff already enforces b ≥ 2; recorded so the report is complete.
    let coeffs: Vec<String> = leaf.entries.iter().map(|e| e.coeff.to_string()).collect();
    checks.push(Check::with(
        CHECK_STANDARD,
        leaf.entries.iter().all(|e| e.coeff.b() >= 2),
        coeffs.join(", "),
    ));

    let degree = if qh { log_degree(leaf).ok() } else { None };
    let degree_zero = degree.as_ref().is_some_and(num_traits::Zero::is_zero);
    checks.push(match &degree {
        Some(d) => Check::with(
            CHECK_DEGREE_ZERO,
            degree_zero,
            format!("deg(K_X + B) = {d}"),
        ),
        None => Check::with(CHECK_DEGREE_ZERO, false, "degree undefined"),
    });

    let index = if wf && degree_zero && dupes.is_empty() {
        Some(leaf.entries.iter().fold(1, |acc, e| lcm(acc, e.coeff.b())))
    } else {
        None
    };
    checks.push(match index {
        Some(m) => Check::with(CHECK_INDEX, true, format!("lcm of denominators = {m}")),
        None => Check::with(
            CHECK_INDEX,
            false,
            "index undefined: needs well-formed, degree zero, distinct components",
        ),
    });

    let klt = is_klt_leaf(leaf);
    checks.push(Check::with(CHECK_KLT, klt.passed, leaf.strategy.tag()));

    LeafReport {
        path,
        node: "wps_leaf",
        dim: leaf.dim(),
        index,
        log_degree: degree.map(|d| d.to_string()),
        checks,
        klt: Some(klt),
    }
}

struct Walker {
    mode: Mode,
    nodes: Vec<LeafReport>,
    cited: Vec<CitedRef>,
    hypotheses: Vec<String>,
}

impl Walker {
    /// Returns `(dim, index)` of the subtree.
    fn visit(&mut self, cert: &Certificate, path: String) -> (usize, Option<u64>) {
        match cert {
            Certificate::WpsLeaf(leaf) => {
                let report = check_leaf(leaf, path);
                if let Some(k) = &report.klt {
                    for h in &k.unchecked_hypotheses {
                        if !self.hypotheses.contains(h) {
                            self.hypotheses.push(h.clone());
                        }
                    }
                }
                let out = (report.dim, report.index);
                self.nodes.push(report);
                out
            }
            Certificate::EllipticLeaf { dim } => {
                self.nodes.push(LeafReport {
                    path,
                    node: "elliptic_leaf",
                    dim: *dim,
                    index: Some(1),
                    log_degree: None,
                    checks: vec![Check::new(CHECK_ELLIPTIC_DIM, *dim >= 1)],
                    klt: None,
                });
                (*dim, Some(1))
            }
            Certificate::CitedLeaf { dim, index, cite } => {
                let accepted = self.mode == Mode::Trusting;
                self.cited.push(CitedRef {
                    path: path.clone(),
                    dim: *dim,
                    index: *index,
                    cite: cite.clone(),
                });
                self.nodes.push(LeafReport {
                    path,
                    node: "cited_leaf",
                    dim: *dim,
                    index: Some(*index),
                    log_degree: None,
                    checks: vec![Check::with(
                        CHECK_CITED,
                        accepted,
                        if accepted {
                            "accepted on citation (trusting mode)"
                        } else {
                            "citation is not machine-checked (strict mode)"
                        },
                    )],
                    klt: None,
                });
                (*dim, Some(*index))
            }
            Certificate::Product(factors) => {
                let slot = self.nodes.len();
                self.nodes.push(LeafReport {
                    path: path.clone(),
                    node: "product",
                    dim: 0,
                    index: None,
                    log_degree: None,
                    checks: vec![Check::with(
                        CHECK_PRODUCT_ARITY,
                        factors.len() >= 2,
                        format!("{} factors", factors.len()),
                    )],
                    klt: None,
                });
                let mut dim = 0;
                let mut index = Some(1);
                for (i, f) in factors.iter().enumerate() {
                    let child = if path.is_empty() {
                        i.to_string()
                    } else {
                        format!("{path}.{i}")
                    };
                    let (d, m) = self.visit(f, child);
                    dim += d;
                    index = match (index, m) {
                        (Some(a), Some(b)) => Some(lcm(a, b)),
                        _ => None,
                    };
                }
                self.nodes[slot].dim = dim;
                self.nodes[slot].index = index;
                (dim, index)
            }
        }
    }
}

/// Recomputes everything about `cert`. Failures are reported, never thrown.
pub fn verify_certificate(cert: &Certificate, mode: Mode) -> VerificationReport {
    let mut w = Walker {
        mode,
        nodes: Vec::new(),
        cited: Vec::new(),
        hypotheses: Vec::new(),
    };
    let (dim, index) = w.visit(cert, String::new());
    let passed = index.is_some() && w.nodes.iter().all(|n| n.checks.iter().all(|c| c.passed));
    VerificationReport {
        passed,
        mode,
        dim,
        index,
        nodes: w.nodes,
        claim_checks: Vec::new(),
        cited_leaves: w.cited,
        unchecked_hypotheses: w.hypotheses,
    }
}

/// As [`verify_certificate`], additionally comparing against a claimed
/// dimension and index.
pub fn verify_claim(cert: &Certificate, mode: Mode, claim: &Claim) -> VerificationReport {
    let mut report = verify_certificate(cert, mode);
    report.claim_checks.push(Check::with(
        CHECK_CLAIM_DIM,
        report.dim == claim.dim,
        format!("claimed {}, computed {}", claim.dim, report.dim),
    ));
    let computed = report
        .index
        .map_or("undefined".to_string(), |m| m.to_string());
    report.claim_checks.push(Check::with(
        CHECK_CLAIM_INDEX,
        report.index == Some(claim.index),
        format!("claimed {}, computed {computed}", claim.index),
    ));
    report.passed = report.passed && report.claim_checks.iter().all(|c| c.passed);
    report
}
