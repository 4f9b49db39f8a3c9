//! Randomized invariants of the linear algebra and the simplicial structure.

use ibig::ops::Abs;
use ibig::IBig;
use proptest::prelude::*;

use e2top::catalog::CatalogEntry;
use e2top::homology::{rank_mod_p, smith_normal_form, IntMatrix};
use e2top::simplicial::{
    affine_generated_abelian, affine_in_abelian_coset, affine_successive_commute, e2_chain_complex, enumerate_e2_all,
    Budget, ChainComplex,
};
use e2top::{FiniteGroup, GroupElement};

fn small_matrix() -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1usize..6, 1usize..6).prop_flat_map(|(r, c)| prop::collection::vec(prop::collection::vec(-6i64..7, c), r))
}

fn permuted(m: &[Vec<i64>], rows: &[usize], cols: &[usize]) -> Vec<Vec<i64>> {
    rows.iter().map(|&r| cols.iter().map(|&c| m[r][c]).collect()).collect()
}

/// Determinantal divisors: d_k is the gcd of all k×k minors, and the
/// invariant factors are d_k / d_{k-1}.
fn invariant_factors_by_minors(m: &[Vec<i64>]) -> Vec<IBig> {
    let (r, c) = (m.len(), m[0].len());
    let mut out = Vec::new();
    let mut prev = IBig::from(1);
    for k in 1..=r.min(c) {
        let mut g = IBig::from(0);
        for rows in subsets(r, k) {
            for cols in subsets(c, k) {
                let sub: Vec<Vec<IBig>> =
                    rows.iter().map(|&i| cols.iter().map(|&j| IBig::from(m[i][j])).collect()).collect();
                let d = det(sub);
                if d != IBig::from(0) {
                    g = if g == IBig::from(0) { d.abs() } else { g.gcd(&d) };
                }
            }
        }
        if g == IBig::from(0) {
            break;
        }
        out.push(&g / &prev);
        prev = g;
    }
    out
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    (0u32..1 << n)
        .filter(|m| m.count_ones() as usize == k)
        .map(|m| (0..n).filter(|i| m >> i & 1 == 1).collect())
        .collect()
}

fn det(m: Vec<Vec<IBig>>) -> IBig {
    if m.len() == 1 {
        return m[0][0].clone();
    }
    let mut total = IBig::from(0);
    for j in 0..m.len() {
        let minor: Vec<Vec<IBig>> = m[1..]
            .iter()
            .map(|row| row.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, v)| v.clone()).collect())
            .collect();
        let term = &m[0][j] * det(minor);
        if j % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 128, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn snf_matches_determinantal_divisors(m in small_matrix()) {
        let snf = smith_normal_form(&IntMatrix::from_dense(&m));
        prop_assert_eq!(snf.diagonal, invariant_factors_by_minors(&m));
    }

    #[test]
    fn snf_invariant_under_permutation_and_transpose(
        m in small_matrix(),
        seed in any::<u64>(),
    ) {
        use rand::seq::SliceRandom;
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let mut rows: Vec<usize> = (0..m.len()).collect();
        let mut cols: Vec<usize> = (0..m[0].len()).collect();
        rows.shuffle(&mut rng);
        cols.shuffle(&mut rng);
        let a = IntMatrix::from_dense(&m);
        let b = IntMatrix::from_dense(&permuted(&m, &rows, &cols));
        let base = smith_normal_form(&a);
        prop_assert_eq!(&base, &smith_normal_form(&b));
        prop_assert_eq!(&base, &smith_normal_form(&a.transpose()));
    }

    #[test]
    fn mod_p_rank_bounded_by_integer_rank(m in small_matrix(), p in prop::sample::select(vec![2u64, 3, 5, 7])) {
        let a = IntMatrix::from_dense(&m);
        let snf = smith_normal_form(&a);
        let expected = snf.diagonal.iter().filter(|d| *d % IBig::from(p) != IBig::from(0)).count();
        prop_assert_eq!(rank_mod_p(&a, p), expected);
    }
}

fn catalog_small() -> Vec<FiniteGroup> {
    ["S3", "D4", "Q8", "A4", "D6", "C2xC2", "C6"]
        .iter()
        .map(|n| n.parse::<CatalogEntry>().unwrap().build().unwrap())
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 256, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn affine_conditions_agree(which in 0usize..7, picks in prop::collection::vec(0usize..12, 1..5)) {
        let groups = catalog_small();
        let g = &groups[which];
        let abelian = g.abelian_subgroups();
        let set: Vec<GroupElement> = picks.iter().map(|&i| GroupElement::new(i % g.order())).collect();
        let a = affine_successive_commute(g, &set);
        prop_assert_eq!(a, affine_generated_abelian(g, &set));
        prop_assert_eq!(a, affine_in_abelian_coset(g, &set, &abelian));
        let mut rev = set.clone();
        rev.reverse();
        prop_assert_eq!(a, affine_successive_commute(g, &rev));
    }
}

#[test]
fn faces_and_degeneracies_stay_in_e2() {
    for g in catalog_small() {
        for n in 1..=3 {
            let upper = enumerate_e2_all(&g, n, Budget::default()).unwrap();
            let lower = enumerate_e2_all(&g, n - 1, Budget::default()).unwrap();
            let higher = enumerate_e2_all(&g, n + 1, Budget::default()).unwrap();
            for x in &upper {
                for i in 0..=n {
                    assert!(lower.binary_search(&x.face(i)).is_ok());
                    assert!(higher.binary_search(&x.degeneracy(i)).is_ok());
                }
            }
        }
    }
}

#[test]
fn chain_text_round_trip() {
    for g in catalog_small() {
        let c = e2_chain_complex(&g, 2, Budget::default()).unwrap();
        let text = c.to_text();
        let back = ChainComplex::read_text(text.as_bytes()).unwrap();
        assert_eq!(back.ranks(), c.ranks());
        for d in 0..=c.max_dim() {
            assert_eq!(back.boundary(d), c.boundary(d));
        }
        assert_eq!(back.to_text(), text);
    }
}
