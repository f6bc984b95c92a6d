//! Index certificates: trees of explicit pairs, elliptic factors and
//! products, together with the constructions that produce them and an
//! independent verifier.
//!
//! A product of pairs of dimensions `d_i` and indices `m_i` is a pair of
//! dimension `Σ d_i` and index `lcm(m_i)`; multiplying by an elliptic curve
//! raises the dimension without changing the index.

mod build;
mod realize;
mod schema;
mod search;
mod table;
mod verify;

pub use build::{
    base_leaf, build_index_prime, build_prime_power, check_dim_inequality, p1_leaf, plane_leaf,
    DimInequality, K3_CITATION, P1_POINTS,
};
pub use realize::realize;
pub use schema::{from_json, from_json_str, to_json, to_json_string, Claim, Document};
pub use search::{plane_decompositions, search_plane_pair, Component};
pub use table::{index_table, IndexTable, TableRow};
pub use verify::{
    verify_certificate, verify_claim, Check, LeafReport, Mode, VerificationReport, CHECK_CITED,
    CHECK_CLAIM_DIM, CHECK_CLAIM_INDEX, CHECK_DEGREE_ZERO, CHECK_DISTINCT, CHECK_ELLIPTIC_DIM,
    CHECK_INDEX, CHECK_KLT, CHECK_PRODUCT_ARITY, CHECK_QUASI_HOMOGENEOUS, CHECK_STANDARD,
    CHECK_WELL_FORMED,
};

use crate::error::Result;
use crate::numtheory::lcm;
use crate::wps::{pair_index, LogLeaf};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Certificate {
    WpsLeaf(LogLeaf),
    /// An abelian factor of dimension `dim`, index 1 and empty boundary.
    EllipticLeaf {
        dim: usize,
    },
    /// Existence justified by the literature rather than by computation.
    CitedLeaf {
        dim: usize,
        index: u64,
        cite: String,
    },
    Product(Vec<Certificate>),
}

impl Certificate {
    pub fn elliptic(dim: usize) -> Self {
        Certificate::EllipticLeaf { dim }
    }

    pub fn product(factors: Vec<Certificate>) -> Self {
        Certificate::Product(factors)
    }

    pub fn dim(&self) -> usize {
        match self {
            Certificate::WpsLeaf(leaf) => leaf.dim(),
            Certificate::EllipticLeaf { dim } | Certificate::CitedLeaf { dim, .. } => *dim,
            Certificate::Product(fs) => fs.iter().map(Certificate::dim).sum(),
        }
    }

    /// Index as the tree arithmetic computes it; fails on a leaf that is not
    /// Calabi-Yau.
    pub fn index(&self) -> Result<u64> {
        match self {
            Certificate::WpsLeaf(leaf) => pair_index(leaf),
            Certificate::EllipticLeaf { .. } => Ok(1),
            Certificate::CitedLeaf { index, .. } => Ok(*index),
            Certificate::Product(fs) => fs.iter().try_fold(1, |acc, f| Ok(lcm(acc, f.index()?))),
        }
    }

    /// Pads with an elliptic factor up to `dim`; a no-op if already there.
    pub fn padded_to(self, dim: usize) -> Self {
        let have = self.dim();
        assert!(have <= dim, "cannot pad dimension {have} down to {dim}");
        if have == dim {
            return self;
        }
        match self {
            Certificate::Product(mut fs) => {
                fs.push(Certificate::elliptic(dim - have));
                Certificate::Product(fs)
            }
            other => Certificate::Product(vec![other, Certificate::elliptic(dim - have)]),
        }
    }

    pub fn contains_cited(&self) -> bool {
        match self {
            Certificate::CitedLeaf { .. } => true,
            Certificate::Product(fs) => fs.iter().any(Certificate::contains_cited),
            _ => false,
        }
    }

    /// Pre-order walk over every node.
    pub fn walk<'a>(&'a self, f: &mut impl FnMut(&'a Certificate)) {
        f(self);
        if let Certificate::Product(fs) = self {
            for c in fs {
                c.walk(f);
            }
        }
    }

    pub fn leaves(&self) -> Vec<&LogLeaf> {
        let mut out = Vec::new();
        self.walk(&mut |c| {
            if let Certificate::WpsLeaf(l) = c {
                out.push(l);
            }
        });
        out
    }
}
