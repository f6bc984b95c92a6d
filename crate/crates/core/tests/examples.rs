use idxcert_core::certify::{
    base_leaf, build_index_prime, build_prime_power, check_dim_inequality, realize,
    search_plane_pair, verify_certificate, Certificate, DimInequality, Mode,
};
use idxcert_core::numtheory::sylvester_bound;
use idxcert_core::poly::SparsePoly;
use idxcert_core::snc::is_klt_leaf;
use idxcert_core::wps::{log_degree, pair_index, LogLeaf};
use idxcert_core::Rational;
use num_traits::Zero;

fn bs(leaf: &LogLeaf) -> Vec<u64> {
    leaf.entries.iter().map(|e| e.coeff.b()).collect()
}

fn leaf_of(cert: &Certificate) -> &LogLeaf {
    match cert {
        Certificate::WpsLeaf(l) => l,
        other => panic!("expected a wps leaf, got {other:?}"),
    }
}

#[test]
fn index_prime_five() {
    let leaf = build_index_prime(5).unwrap();
    assert_eq!(leaf.space.weights(), &[2, 1, 1]);
    assert_eq!(bs(&leaf), vec![5, 5]);
    assert_eq!(leaf.entries[0].eq, SparsePoly::var(3, 2));
    let h = SparsePoly::from_ints(
        3,
        &[(1, vec![2, 0, 0]), (1, vec![0, 4, 0]), (1, vec![0, 0, 4])],
    );
    assert!(leaf.entries[1].eq.is_proportional(&h));
    assert_eq!(leaf.dim(), 2);
    assert_eq!(pair_index(&leaf).unwrap(), 5);
}

#[test]
fn index_prime_seven() {
    let leaf = build_index_prime(7).unwrap();
    assert_eq!(leaf.space.weights(), &[3, 2, 1]);
    assert_eq!(bs(&leaf), vec![7, 7]);
    assert_eq!(leaf.entries[0].eq, SparsePoly::var(3, 0));
    let h = SparsePoly::from_ints(
        3,
        &[(1, vec![1, 0, 1]), (1, vec![0, 2, 0]), (1, vec![0, 0, 4])],
    );
    assert!(leaf.entries[1].eq.is_proportional(&h));
    assert_eq!(pair_index(&leaf).unwrap(), 7);
}

#[test]
fn index_prime_thirteen() {
    let leaf = build_index_prime(13).unwrap();
    assert_eq!(leaf.space.weights(), &[4, 4, 2, 1, 1]);
    assert_eq!(leaf.dim(), 4);
    assert!(log_degree(&leaf).unwrap().is_zero());
    assert_eq!(pair_index(&leaf).unwrap(), 13);
}

#[test]
fn index_prime_rejects() {
    for m in [0, 1, 2, 3, 4, 6, 10] {
        assert!(build_index_prime(m).is_err(), "{m}");
    }
}

#[test]
fn prime_power_two_three() {
    let leaf = build_prime_power(2, 3).unwrap();
    assert_eq!(leaf.space.weights(), &[1, 1, 1]);
    assert_eq!(bs(&leaf), vec![2, 4, 8, 8]);
    let h = SparsePoly::from_ints(
        3,
        &[(1, vec![1, 0, 0]), (1, vec![0, 1, 0]), (1, vec![0, 0, 1])],
    );
    assert_eq!(leaf.entries[3].eq, h);
    assert_eq!(pair_index(&leaf).unwrap(), 8);
    assert_eq!(leaf.dim(), 2);
}

#[test]
fn prime_power_three_two() {
    let leaf = build_prime_power(3, 2).unwrap();
    assert_eq!(leaf.space.weights(), &[2, 1, 1]);
    assert_eq!(bs(&leaf), vec![3, 9, 9]);
    assert!(log_degree(&leaf).unwrap().is_zero());
    assert_eq!(pair_index(&leaf).unwrap(), 9);
}

#[test]
fn prime_power_two_two_is_a_curve() {
    let leaf = build_prime_power(2, 2).unwrap();
    assert_eq!(leaf.space.weights(), &[1, 1]);
    assert_eq!(bs(&leaf), vec![2, 4, 4]);
    assert_eq!(leaf.dim(), 1);
    assert_eq!(pair_index(&leaf).unwrap(), 4);
    assert!(is_klt_leaf(&leaf).passed);
}

#[test]
fn prime_power_rejects() {
    for (m, e) in [(1, 3), (0, 2), (2, 1), (5, 0)] {
        assert!(build_prime_power(m, e).is_err(), "({m}, {e})");
    }
}

#[test]
fn curve_catalogue() {
    let six = base_leaf(1, 6).unwrap();
    assert_eq!(bs(leaf_of(&six)), vec![2, 3, 6]);
    let two = base_leaf(1, 2).unwrap();
    assert_eq!(bs(leaf_of(&two)), vec![2, 2, 2, 2]);
    assert_eq!(base_leaf(1, 1).unwrap(), Certificate::elliptic(1));
    assert!(base_leaf(1, 5).is_err());
}

#[test]
fn surface_catalogue() {
    let ten = base_leaf(2, 10).unwrap();
    let leaf = leaf_of(&ten);
    assert_eq!(bs(leaf), vec![2, 5, 10]);
    let degrees: Vec<u32> = leaf.entries.iter().map(|e| e.eq.total_degree()).collect();
    assert_eq!(degrees, vec![1, 2, 1]);

    let eighteen = base_leaf(2, 18).unwrap();
    let mut b = bs(leaf_of(&eighteen));
    b.sort();
    assert_eq!(b, vec![2, 3, 9, 18]);

    for m in [1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 18] {
        let cert = base_leaf(2, m).unwrap();
        let r = verify_certificate(&cert, Mode::Strict);
        assert!(r.passed, "{m}");
        assert_eq!((r.dim, r.index), (2, Some(m)));
    }
    assert!(matches!(
        base_leaf(2, 14).unwrap(),
        Certificate::CitedLeaf { index: 14, .. }
    ));
    for m in [11, 13, 15, 16] {
        assert!(base_leaf(2, m).is_err(), "{m}");
    }
    assert!(base_leaf(3, 2).is_err());
}

#[test]
fn realize_sixteen_is_one_leaf() {
    let cert = realize(4, 16).unwrap();
    let leaf = leaf_of(&cert);
    assert_eq!(leaf.space.weights(), &[1, 1, 1, 1]);
    let r = verify_certificate(&cert, Mode::Strict);
    assert!(r.passed);
    assert_eq!((r.dim, r.index), (3, Some(16)));
}

#[test]
fn realize_fifteen_splits() {
    let cert = realize(4, 15).unwrap();
    assert_eq!(
        cert,
        Certificate::product(vec![base_leaf(1, 3).unwrap(), base_leaf(2, 5).unwrap()])
    );
    assert_eq!(cert.index().unwrap(), 15);
    assert_eq!(cert.dim(), 3);
}

#[test]
fn realize_six_pads() {
    let cert = realize(3, 6).unwrap();
    assert_eq!(
        cert,
        Certificate::product(vec![base_leaf(1, 6).unwrap(), Certificate::elliptic(1)])
    );
}

#[test]
fn realize_rejects() {
    assert!(realize(3, 23).is_err());
    assert!(realize(2, 1).is_err());
    assert!(realize(5, 0).is_err());
}

#[test]
fn fourteen_needs_trust() {
    let cert = realize(3, 14).unwrap();
    let strict = verify_certificate(&cert, Mode::Strict);
    assert!(!strict.passed);
    assert_eq!(strict.cited_leaves.len(), 1);
    let trusting = verify_certificate(&cert, Mode::Trusting);
    assert!(trusting.passed);
    assert_eq!(trusting.index, Some(14));
}

#[test]
fn elliptic_product() {
    let cert = Certificate::product(vec![Certificate::elliptic(1), Certificate::elliptic(1)]);
    let r = verify_certificate(&cert, Mode::Strict);
    assert!(r.passed);
    assert_eq!((r.dim, r.index), (2, Some(1)));
}

#[test]
fn dimension_inequality() {
    assert!(check_dim_inequality(3, 2, DimInequality::Padding).unwrap());
    assert!(check_dim_inequality(2, 4, DimInequality::Padding).unwrap());
    assert!(check_dim_inequality(2, 2, DimInequality::Padding).is_err());
    assert!(check_dim_inequality(2, 3, DimInequality::Padding).is_err());
    assert!(check_dim_inequality(3, 2, DimInequality::Strict).is_err());
    assert!(check_dim_inequality(2, 5, DimInequality::Strict).is_err());
    assert!(check_dim_inequality(3, 3, DimInequality::Strict).unwrap());
}

#[test]
fn search_examples() {
    let six = search_plane_pair(1, 6, 4).unwrap();
    assert_eq!(bs(&six), vec![2, 3, 6]);
    assert!(search_plane_pair(1, 5, 4).is_none());
    assert!(search_plane_pair(1, 1, 4).is_none());
    let ten = search_plane_pair(2, 10, 4).unwrap();
    assert_eq!(bs(&ten), vec![2, 5, 10]);
}

/// Small plane searches for index 14: every decomposition with at most six
/// lines and conics fails the snc check or does not exist.
#[test]
fn no_small_plane_pair_of_index_fourteen() {
    assert!(search_plane_pair(2, 14, 6).is_none());
}

#[test]
fn sylvester_matches_low_dimensional_maxima() {
    assert_eq!(sylvester_bound(2).unwrap(), 6u32.into());
    assert_eq!(sylvester_bound(3).unwrap(), 66u32.into());
}

#[test]
fn log_degree_is_exact() {
    let leaf = build_index_prime(401).unwrap();
    assert_eq!(log_degree(&leaf).unwrap(), Rational::zero());
}
