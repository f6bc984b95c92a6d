//! Index sets in low dimension with a realizability status per element.
//!
//! Dimensions 1 and 2 are known exactly: `I(1) = {1, 2, 3, 4, 6}` and
//! `I(2) = {m : φ(m) ≤ 20} \ {60}`. The exclusion of 60 is a classification
//! result this tool cannot decide, so it is applied as a fixed rule. From
//! dimension 3 on only the lower bound `{m : φ(m) ≤ 2(d + 1)}` is listed.

use serde::Serialize;

use super::build::base_leaf;
use super::realize::realize;
use super::search::search_plane_pair;
use super::verify::{verify_certificate, Mode};
use super::Certificate;
use crate::error::{Error, Result};
use crate::numtheory::{indices_with_phi_at_most, phi};

/// Members of `I(2)` with `φ ≤ 20` excluded by the surface classification.
pub const SURFACE_EXCLUSIONS: &[u64] = &[60];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RowStatus {
    /// An explicit certificate that verifies in strict mode.
    Explicit,
    /// A plane arrangement found by search, verified in strict mode.
    Searched,
    /// Only a literature citation.
    Cited,
    /// Member of the set, but no certificate from this tool.
    NotConstructed,
}

impl RowStatus {
    pub fn label(self) -> &'static str {
        match self {
            RowStatus::Explicit => "explicit",
            RowStatus::Searched => "searched",
            RowStatus::Cited => "cited",
            RowStatus::NotConstructed => "not constructed",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TableRow {
    pub m: u64,
    pub phi: u64,
    pub status: RowStatus,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IndexTable {
    pub dim: usize,
    /// Whether `rows` is the whole index set or only a lower bound.
    pub exact: bool,
    pub rows: Vec<TableRow>,
    /// Elements removed by a fixed rule rather than by computation.
    pub excluded: Vec<u64>,
}

impl IndexTable {
    pub fn members(&self) -> Vec<u64> {
        self.rows.iter().map(|r| r.m).collect()
    }
}

fn status_of(cert: &Certificate) -> RowStatus {
    if verify_certificate(cert, Mode::Strict).passed {
        RowStatus::Explicit
    } else if cert.contains_cited() && verify_certificate(cert, Mode::Trusting).passed {
        RowStatus::Cited
    } else {
        RowStatus::NotConstructed
    }
}

fn surface_status(m: u64) -> RowStatus {
    if let Ok(cert) = base_leaf(2, m) {
        return status_of(&cert);
    }
    match search_plane_pair(2, m, 4).map(Certificate::WpsLeaf) {
        Some(cert) if status_of(&cert) == RowStatus::Explicit => RowStatus::Searched,
        _ => RowStatus::NotConstructed,
    }
}

pub fn index_table(dim: usize) -> Result<IndexTable> {
    let row = |m: u64, status| TableRow {
        m,
        phi: phi(m),
        status,
    };
    match dim {
        0 => Err(Error::ZeroArgument("index_table")),
        1 => Ok(IndexTable {
            dim,
            exact: true,
            rows: indices_with_phi_at_most(2)?
                .into_iter()
                .map(|m| {
                    row(
                        m,
                        base_leaf(1, m).map_or(RowStatus::NotConstructed, |c| status_of(&c)),
                    )
                })
                .collect(),
            excluded: Vec::new(),
        }),
        2 => Ok(IndexTable {
            dim,
            exact: true,
            rows: indices_with_phi_at_most(20)?
                .into_iter()
                .filter(|m| !SURFACE_EXCLUSIONS.contains(m))
                .map(|m| row(m, surface_status(m)))
                .collect(),
            excluded: SURFACE_EXCLUSIONS.to_vec(),
        }),
        d => {
            let n = d as u64 + 1;
            let rows = indices_with_phi_at_most(2 * n)?
                .into_iter()
                .map(|m| {
                    row(
                        m,
                        realize(n, m).map_or(RowStatus::NotConstructed, |c| status_of(&c)),
                    )
                })
                .collect();
            Ok(IndexTable {
                dim,
                exact: false,
                rows,
                excluded: Vec::new(),
            })
        }
    }
}
