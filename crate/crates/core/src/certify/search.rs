//! Enumeration of curve pairs `(P¹, Σ c_j P_j)` and `(P², Σ c_j C_j)` with
//! standard coefficients, a prescribed index and lines/conics in explicit
//! general position.

use super::build::p1_leaf;
use crate::error::{Error, Result};
use crate::numtheory::lcm;
use crate::poly::SparsePoly;
use crate::snc::plane_arrangement_snc;
use crate::wps::{Entry, KltStrategy, LogLeaf, StdCoeff, Wps};

/// A boundary component `(1 − 1/b)·C` with `C` of the given degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Component {
    pub b: u64,
    pub degree: u32,
}

impl Component {
    pub fn line(b: u64) -> Self {
        Component { b, degree: 1 }
    }

    pub fn conic(b: u64) -> Self {
        Component { b, degree: 2 }
    }
}

/// The `k`-th line `k·x − y + (k² + 1)·z`: slopes 0, 1, 2, … with distinct
/// intercepts, no three concurrent and none tangent to `xz = y²`.
fn plane_line(k: i64) -> SparsePoly {
    SparsePoly::from_ints(
        3,
        &[
            (k, vec![1, 0, 0]),
            (-1, vec![0, 1, 0]),
            (k * k + 1, vec![0, 0, 1]),
        ],
    )
}

/// Conics handed out in order; the first is `xz − y²`.
fn plane_conic(j: usize) -> SparsePoly {
    match j {
        0 => SparsePoly::from_ints(3, &[(1, vec![1, 0, 1]), (-1, vec![0, 2, 0])]),
        1 => SparsePoly::from_ints(
            3,
            &[
                (1, vec![2, 0, 0]),
                (1, vec![0, 2, 0]),
                (-5, vec![0, 0, 2]),
                (1, vec![1, 1, 0]),
            ],
        ),
        _ => {
            let j = j as i64;
            SparsePoly::from_ints(
                3,
                &[
                    (1, vec![2, 0, 0]),
                    (j, vec![0, 2, 0]),
                    (-(j * j + 1), vec![0, 0, 2]),
                    (2 * j, vec![0, 1, 1]),
                ],
            )
        }
    }
}

/// Turns components into a leaf: on P¹ the points 0, 1, ∞, 2, …; on P² the
/// next unused line or conic for each component, in order.
pub(crate) fn instantiate_plane(dim: usize, components: &[Component]) -> Result<LogLeaf> {
    match dim {
        1 => {
            if components.iter().any(|c| c.degree != 1) {
                return Err(Error::Precondition("points on P^1 have degree 1".into()));
            }
            let bs: Vec<u64> = components.iter().map(|c| c.b).collect();
            p1_leaf(&bs)
        }
        2 => {
            let (mut lines, mut conics) = (0, 0);
            let mut entries = Vec::with_capacity(components.len());
            for c in components {
                let eq = match c.degree {
                    1 => {
                        lines += 1;
                        plane_line(lines - 1)
                    }
                    2 => {
                        conics += 1;
                        plane_conic(conics - 1)
                    }
                    d => return Err(Error::DegreeTooHigh(d)),
                };
                entries.push(Entry {
                    coeff: StdCoeff::new(c.b)?,
                    eq,
                });
            }
            LogLeaf::new(Wps::projective(2), entries, KltStrategy::PlaneArrangement)
        }
        _ => Err(Error::Precondition(format!(
            "plane pairs have dimension 1 or 2, got {dim}"
        ))),
    }
}

/// Every multiset of components with `Σ (1 − 1/b)·deg = dim + 1`,
/// `lcm(b) = index` and at most `max_components` members, ordered by size
/// and then lexicographically on the sorted component list.
pub fn plane_decompositions(dim: usize, index: u64, max_components: usize) -> Vec<Vec<Component>> {
    let degrees: &[u32] = match dim {
        1 => &[1],
        2 => &[1, 2],
        _ => return Vec::new(),
    };
    let mut candidates: Vec<Component> = (2..=index)
        .filter(|b| index.is_multiple_of(*b))
        .flat_map(|b| degrees.iter().map(move |&degree| Component { b, degree }))
        .collect();
    candidates.sort();
    // Work in units of 1/index: (1 − 1/b)·deg = deg·(index − index/b)/index.
    let weight = |c: &Component| u64::from(c.degree) * (index - index / c.b);
    let target = (dim as u64 + 1) * index;

    let mut out = Vec::new();
    for size in 1..=max_components {
        let mut current = Vec::with_capacity(size);
        extend(
            &candidates,
            &weight,
            target,
            index,
            size,
            0,
            0,
            &mut current,
            &mut out,
        );
    }
    out
}

#[allow(clippy::too_many_arguments)]
fn extend(
    candidates: &[Component],
    weight: &impl Fn(&Component) -> u64,
    target: u64,
    index: u64,
    size: usize,
    start: usize,
    sum: u64,
    current: &mut Vec<Component>,
    out: &mut Vec<Vec<Component>>,
) {
    if current.len() == size {
        let l = current.iter().fold(1, |acc, c| lcm(acc, c.b));
        if sum == target && l == index {
            out.push(current.clone());
        }
        return;
    }
    for (i, c) in candidates.iter().enumerate().skip(start) {
        let s = sum + weight(c);
        if s > target {
            continue;
        }
        current.push(*c);
        extend(candidates, weight, target, index, size, i, s, current, out);
        current.pop();
    }
}

/// First decomposition whose explicit instantiation passes the snc check.
/// Index 1 has no boundary and is never returned here.
pub fn search_plane_pair(dim: usize, index: u64, max_components: usize) -> Option<LogLeaf> {
    plane_decompositions(dim, index, max_components)
        .into_iter()
        .filter_map(|comps| instantiate_plane(dim, &comps).ok())
        .find(|leaf| {
            let curves: Vec<SparsePoly> = leaf.entries.iter().map(|e| e.eq.clone()).collect();
            plane_arrangement_snc(&curves).unwrap_or(false)
        })
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Brute force over all b ≤ index (not only divisors) and all sizes,
    /// with rational arithmetic, as an independent check of the enumeration.
    fn brute_force(dim: usize, index: u64, max: usize) -> Vec<Vec<Component>> {
        use crate::Rational;
        let degrees: Vec<u32> = if dim == 1 { vec![1] } else { vec![1, 2] };
        let mut cands = Vec::new();
        for b in 2..=index {
            for &d in &degrees {
                cands.push(Component { b, degree: d });
            }
        }
        cands.sort();
        let target = Rational::from_integer((dim as i64 + 1).into());
        let mut found = Vec::new();
        let n = cands.len();
        // iterate over non-decreasing index tuples of each size
        for size in 1..=max {
            let mut idx = vec![0usize; size];
            loop {
                let comps: Vec<Component> = idx.iter().map(|&i| cands[i]).collect();
                let sum: Rational = comps
                    .iter()
                    .map(|c| {
                        StdCoeff::new(c.b).unwrap().value()
                            * Rational::from_integer(c.degree.into())
                    })
                    .sum();
                let l = comps.iter().fold(1, |a, c| lcm(a, c.b));
                if sum == target && l == index {
                    found.push(comps);
                }
                let Some(pos) = (0..size).rev().find(|&p| idx[p] + 1 < n) else {
                    break;
                };
                idx[pos] += 1;
                for p in pos + 1..size {
                    idx[p] = idx[pos];
                }
            }
        }
        found
    }

    #[test]
    fn enumeration_matches_brute_force() {
        for &(dim, index) in &[(1, 2), (1, 4), (1, 6), (1, 5), (2, 10), (2, 12), (2, 18)] {
            assert_eq!(
                plane_decompositions(dim, index, 4),
                brute_force(dim, index, 4),
                "dim {dim} index {index}"
            );
        }
    }

    #[test]
    fn index_ten_decompositions() {
        let d = plane_decompositions(2, 10, 4);
        assert_eq!(
            d,
            vec![
                vec![Component::line(2), Component::conic(5), Component::line(10)],
                vec![
                    Component::line(2),
                    Component::line(5),
                    Component::line(5),
                    Component::line(10)
                ],
            ]
        );
    }

    #[test]
    fn curve_classification() {
        let hits: Vec<u64> = (1..=20)
            .filter(|&m| search_plane_pair(1, m, 4).is_some())
            .collect();
        assert_eq!(hits, vec![2, 3, 4, 6]);
    }

    #[test]
    fn surface_hits() {
        let ten = search_plane_pair(2, 10, 4).unwrap();
        let bs: Vec<u64> = ten.entries.iter().map(|e| e.coeff.b()).collect();
        assert_eq!(bs, vec![2, 5, 10]);
        assert_eq!(ten.entries[1].eq.total_degree(), 2);
        let eighteen = search_plane_pair(2, 18, 4).unwrap();
        let bs: Vec<u64> = eighteen.entries.iter().map(|e| e.coeff.b()).collect();
        assert_eq!(bs, vec![2, 3, 9, 18]);
    }

    #[test]
    fn listed_conics_are_general() {
        let mut curves: Vec<SparsePoly> = (0..3).map(plane_conic).collect();
        curves.extend((0..4).map(plane_line));
        for i in 0..curves.len() {
            for j in i + 1..curves.len() {
                let pair = [curves[i].clone(), curves[j].clone()];
                assert!(
                    plane_arrangement_snc(&pair).unwrap(),
                    "{} / {}",
                    curves[i],
                    curves[j]
                );
            }
        }
    }
}
