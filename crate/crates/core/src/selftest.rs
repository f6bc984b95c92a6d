//! Invariant sweeps over all modules, runnable from the command line.

use num_traits::Zero;
use serde::Serialize;

use crate::certify::{
    build_index_prime, build_prime_power, check_dim_inequality, index_table, realize,
    search_plane_pair, verify_certificate, DimInequality, Mode,
};
use crate::numtheory::{euler_phi, gcd, indices_with_phi_at_most, sylvester_bound};
use crate::snc::is_klt_leaf;
use crate::wps::{log_degree, pair_index, LogLeaf};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SelfTestResult {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

fn naive_phi(m: u64) -> u64 {
    (1..=m).filter(|&k| gcd(k, m) == 1).count() as u64
}

fn totients() -> Result<String, String> {
    let phis: Vec<u64> = (1..=1000).map(naive_phi).collect();
    for bound in 1..=64 {
        let want: Vec<u64> = (1..=1000u64)
            .filter(|&m| phis[m as usize - 1] <= bound)
            .collect();
        let got = indices_with_phi_at_most(bound).map_err(|e| e.to_string())?;
        if got != want {
            return Err(format!("bound {bound}: {got:?} != {want:?}"));
        }
    }
    for m in 1..=1000u64 {
        if euler_phi(m).map_err(|e| e.to_string())? != phis[m as usize - 1] {
            return Err(format!("phi({m})"));
        }
    }
    Ok("bounds 1..=64 against gcd counting over m <= 1000".into())
}

fn leaf_identities(leaf: &LogLeaf, index: u64) -> Result<(), String> {
    let d = log_degree(leaf).map_err(|e| e.to_string())?;
    if !d.is_zero() {
        return Err(format!("log degree {d}"));
    }
    let got = pair_index(leaf).map_err(|e| e.to_string())?;
    if got != index {
        return Err(format!("index {got}, expected {index}"));
    }
    if !is_klt_leaf(leaf).passed {
        return Err("klt check failed".into());
    }
    Ok(())
}

fn families() -> Result<String, String> {
    let mut count = 0;
    for m in (5..=401).step_by(2) {
        let leaf = build_index_prime(m).map_err(|e| e.to_string())?;
        leaf_identities(&leaf, m).map_err(|e| format!("index-prime {m}: {e}"))?;
        count += 1;
    }
    for m in 2..=12u64 {
        for e in 2..=12u32 {
            let leaf = build_prime_power(m, e).map_err(|e| e.to_string())?;
            leaf_identities(&leaf, m.pow(e))
                .map_err(|err| format!("prime-power {m}^{e}: {err}"))?;
            count += 1;
        }
    }
    Ok(format!("{count} leaves: degree 0, expected index, klt"))
}

fn inequality() -> Result<String, String> {
    let mut count = 0;
    for m in 2..=50u64 {
        for e in 2..=50u32 {
            for variant in [DimInequality::Padding, DimInequality::Strict] {
                match check_dim_inequality(m, e, variant) {
                    Ok(true) => count += 1,
                    Ok(false) => return Err(format!("({m}, {e}) {variant:?} is false")),
                    Err(_) => {}
                }
            }
        }
    }
    Ok(format!("{count} admissible cases"))
}

fn realize_sweep() -> Result<String, String> {
    let mut count = 0;
    for n in 3..=10u64 {
        for m in indices_with_phi_at_most(2 * n).map_err(|e| e.to_string())? {
            let cert = realize(n, m).map_err(|e| format!("realize({n}, {m}): {e}"))?;
            let r = verify_certificate(&cert, Mode::Trusting);
            if !r.passed || r.dim as u64 != n - 1 || r.index != Some(m) {
                return Err(format!("realize({n}, {m}) does not verify"));
            }
            let strict = verify_certificate(&cert, Mode::Strict).passed;
            if strict == cert.contains_cited() {
                return Err(format!(
                    "strict mode disagrees with cited leaves at ({n}, {m})"
                ));
            }
            count += 1;
        }
    }
    Ok(format!("{count} pairs (n, m) with 3 <= n <= 10"))
}

fn search() -> Result<String, String> {
    let curves: Vec<u64> = (2..=20)
        .filter(|&m| search_plane_pair(1, m, 4).is_some())
        .collect();
    if curves != [2, 3, 4, 6] {
        return Err(format!("curve hits {curves:?}"));
    }
    for m in [10, 18] {
        if search_plane_pair(2, m, 4).is_none() {
            return Err(format!("no plane arrangement of index {m}"));
        }
    }
    Ok("curves {2, 3, 4, 6}; surfaces 10 and 18".into())
}

fn tables() -> Result<String, String> {
    let t1 = index_table(1).map_err(|e| e.to_string())?.members();
    let t2 = index_table(2).map_err(|e| e.to_string())?.members();
    if t1 != [1, 2, 3, 4, 6] {
        return Err(format!("I(1) = {t1:?}"));
    }
    if !t2.contains(&66) || t2.contains(&60) || t2.contains(&64) {
        return Err("I(2) membership".into());
    }
    let s2 = sylvester_bound(2).map_err(|e| e.to_string())?;
    let s3 = sylvester_bound(3).map_err(|e| e.to_string())?;
    if s2 != (*t1.iter().max().unwrap()).into() || s3 != (*t2.iter().max().unwrap()).into() {
        return Err(format!("sylvester bounds {s2}, {s3}"));
    }
    Ok(format!(
        "|I(1)| = {}, |I(2)| = {}, maxima {s2} and {s3}",
        t1.len(),
        t2.len()
    ))
}

type Sweep = fn() -> Result<String, String>;

const SWEEPS: &[(&str, Sweep)] = &[
    ("totient enumeration", totients),
    ("family degree, index and klt identities", families),
    ("dimension inequality", inequality),
    ("realize round trip", realize_sweep),
    ("plane pair search", search),
    ("low-dimensional tables", tables),
];

pub fn run() -> Vec<SelfTestResult> {
    SWEEPS
        .iter()
        .map(|&(name, f)| {
            let (passed, detail) = match f() {
                Ok(d) => (true, d),
                Err(d) => (false, d),
            };
            SelfTestResult {
                name,
                passed,
                detail,
            }
        })
        .collect()
}
