use fixedbitset::FixedBitSet;
use ibig::IBig;

use super::{is_pairwise_commuting, maximal_abelian_cosets, BasisLabel, Budget, ChainComplex, SimplexTuple};
use crate::error::{Error, Result};
use crate::group::{FiniteGroup, GroupElement};
use crate::homology::IntMatrix;

fn tuples_in_coset(coset: &[GroupElement], len: usize, nondegenerate: bool, out: &mut Vec<SimplexTuple>) {
    let mut current = Vec::with_capacity(len);
    fn rec(
        coset: &[GroupElement],
        len: usize,
        nondegenerate: bool,
        current: &mut Vec<GroupElement>,
        out: &mut Vec<SimplexTuple>,
    ) {
        if current.len() == len {
            out.push(SimplexTuple(current.clone()));
            return;
        }
        for &x in coset {
            if nondegenerate && current.last() == Some(&x) {
                continue;
            }
            current.push(x);
            rec(coset, len, nondegenerate, current, out);
            current.pop();
        }
    }
    rec(coset, len, nondegenerate, &mut current, out);
}

fn coset_count(cosets: &[Vec<GroupElement>], n: usize, nondegenerate: bool) -> u128 {
    cosets
        .iter()
        .map(|c| {
            let m = c.len() as u128;
            if nondegenerate {
                m.saturating_mul((m - 1).saturating_pow(n as u32))
            } else {
                m.saturating_pow(n as u32 + 1)
            }
        })
        .fold(0u128, u128::saturating_add)
}

/// Upper bound on the number of nondegenerate `n`-simplices of `E(2, G)`:
/// the sum over maximal abelian cosets of size `m` of `m(m-1)^n`.
pub fn estimate_e2_count(group: &FiniteGroup, n: usize) -> u128 {
    coset_count(&maximal_abelian_cosets(group), n, true)
}

fn enumerate_in_cosets(
    cosets: &[Vec<GroupElement>],
    n: usize,
    nondegenerate: bool,
    budget: Budget,
) -> Result<Vec<SimplexTuple>> {
    let estimated = coset_count(cosets, n, nondegenerate);
    if estimated > budget.max_simplices as u128 {
        return Err(Error::TooLarge { degree: n, estimated, budget: budget.max_simplices });
    }
    let mut out = Vec::with_capacity(estimated as usize);
    for c in cosets {
        tuples_in_coset(c, n + 1, nondegenerate, &mut out);
    }
    // A tuple lies in several cosets exactly when its set lies in their
    // intersection.
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

/// Nondegenerate `n`-simplices of `E_•(2, G)` in lexicographic order.
///
/// Tuples are generated inside each left coset of a maximal abelian
/// subgroup and merged, rather than filtered out of `G^{n+1}`.
pub fn enumerate_e2_nondegenerate(group: &FiniteGroup, n: usize, budget: Budget) -> Result<Vec<SimplexTuple>> {
    enumerate_in_cosets(&maximal_abelian_cosets(group), n, true, budget)
}

/// All `n`-simplices of `E_•(2, G)`, degenerate ones included.
pub fn enumerate_e2_all(group: &FiniteGroup, n: usize, budget: Budget) -> Result<Vec<SimplexTuple>> {
    enumerate_in_cosets(&maximal_abelian_cosets(group), n, false, budget)
}

/// `C_n(G)`: `n`-tuples of pairwise commuting elements, lexicographic.
pub fn enumerate_commuting_tuples(group: &FiniteGroup, n: usize, budget: Budget) -> Result<Vec<SimplexTuple>> {
    let cents: Vec<FixedBitSet> = group.elements().map(|g| group.centralizer_set(g)).collect();
    let mut all = FixedBitSet::with_capacity(group.order());
    all.insert_range(..);
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(n);

    fn rec(
        cents: &[FixedBitSet],
        allowed: &FixedBitSet,
        n: usize,
        budget: Budget,
        current: &mut Vec<GroupElement>,
        out: &mut Vec<SimplexTuple>,
    ) -> Result<()> {
        if current.len() == n {
            if out.len() >= budget.max_simplices {
                return Err(Error::TooLarge {
                    degree: n,
                    estimated: out.len() as u128 + 1,
                    budget: budget.max_simplices,
                });
            }
            out.push(SimplexTuple(current.clone()));
            return Ok(());
        }
        for x in allowed.ones() {
            let mut next = allowed.clone();
            next.intersect_with(&cents[x]);
            current.push(GroupElement::new(x));
            rec(cents, &next, n, budget, current, out)?;
            current.pop();
        }
        Ok(())
    }

    rec(&cents, &all, n, budget, &mut current, &mut out)?;
    Ok(out)
}

/// Normalized boundary: `Σ (-1)^i ∂_i`, with faces that `locate` rejects
/// (degenerate or collapsed) contributing nothing.
fn boundary_matrix<F>(upper: &[SimplexTuple], lower_len: usize, locate: F) -> IntMatrix
where
    F: Fn(&SimplexTuple) -> Option<usize>,
{
    let mut trip = Vec::with_capacity(upper.len() * upper.first().map_or(0, |t| t.0.len()));
    for (j, s) in upper.iter().enumerate() {
        for i in 0..s.0.len() {
            if let Some(row) = locate(&s.face(i)) {
                trip.push((row, j, IBig::from(if i % 2 == 0 { 1i8 } else { -1 })));
            }
        }
    }
    IntMatrix::from_triplets(lower_len, upper.len(), trip)
}

fn locate_in(basis: &[SimplexTuple], t: &SimplexTuple) -> Option<usize> {
    if !t.is_nondegenerate() {
        return None;
    }
    basis.binary_search(t).ok()
}

fn check_cumulative(total: &mut u128, add: u128, degree: usize, budget: Budget) -> Result<()> {
    *total = total.saturating_add(add);
    if *total > budget.max_simplices as u128 {
        return Err(Error::TooLarge { degree, estimated: *total, budget: budget.max_simplices });
    }
    Ok(())
}

fn e2_bases(group: &FiniteGroup, max_dim: usize, budget: Budget) -> Result<Vec<Vec<SimplexTuple>>> {
    let cosets = maximal_abelian_cosets(group);
    let mut total = 0u128;
    let mut bases = Vec::with_capacity(max_dim + 1);
    for d in 0..=max_dim {
        check_cumulative(&mut total, coset_count(&cosets, d, true), d, budget)?;
        bases.push(enumerate_in_cosets(&cosets, d, true, budget)?);
    }
    Ok(bases)
}

/// Normalized chains of `E_•(2, G)` through degree `max_dim`. The result is
/// a truncation: homology is determined in degrees below `max_dim`.
pub fn e2_chain_complex(group: &FiniteGroup, max_dim: usize, budget: Budget) -> Result<ChainComplex> {
    let bases = e2_bases(group, max_dim, budget)?;
    let mut boundaries = vec![IntMatrix::zeros(0, bases[0].len())];
    for d in 1..=max_dim {
        let lower = &bases[d - 1];
        boundaries.push(boundary_matrix(&bases[d], lower.len(), |t| locate_in(lower, t)));
    }
    let labels = bases.into_iter().map(|b| b.into_iter().map(BasisLabel::Tuple).collect()).collect();
    Ok(ChainComplex::new(labels, boundaries, false))
}

/// Normalized chains of the quotient `E_n(2, G) / C_{n+1}(G)`.
///
/// Degree 0 is the single basepoint; in degree `d ≥ 1` the basis is the
/// nondegenerate simplices whose coordinates do not pairwise commute. Faces
/// landing in the commuting part go to the basepoint, which is zero in
/// positive degrees.
pub fn ebar_chain_complex(group: &FiniteGroup, max_dim: usize, budget: Budget) -> Result<ChainComplex> {
    let mut bases = e2_bases(group, max_dim, budget)?;
    for b in bases.iter_mut().skip(1) {
        b.retain(|t| !is_pairwise_commuting(group, &t.0));
    }
    let mut boundaries = vec![IntMatrix::zeros(0, 1)];
    for d in 1..=max_dim {
        let m = if d == 1 {
            boundary_matrix(&bases[1], 1, |_| Some(0))
        } else {
            let lower = &bases[d - 1];
            boundary_matrix(&bases[d], lower.len(), |t| {
                if is_pairwise_commuting(group, &t.0) {
                    None
                } else {
                    locate_in(lower, t)
                }
            })
        };
        boundaries.push(m);
    }
    let mut labels: Vec<Vec<BasisLabel>> = vec![vec![BasisLabel::Basepoint]];
    labels.extend(bases.into_iter().skip(1).map(|b| b.into_iter().map(BasisLabel::Tuple).collect()));
    Ok(ChainComplex::new(labels, boundaries, false))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::CatalogEntry;
    use crate::simplicial::is_affinely_commutative;

    fn group(name: &str) -> FiniteGroup {
        name.parse::<CatalogEntry>().unwrap().build().unwrap()
    }

    /// Filter of `G^{n+1}` by the definition.
    fn brute_force_e2(g: &FiniteGroup, n: usize, nondegenerate: bool) -> Vec<SimplexTuple> {
        let mut out = Vec::new();
        let total = g.order().pow(n as u32 + 1);
        for code in 0..total {
            let mut c = code;
            let coords: Vec<GroupElement> = (0..=n)
                .map(|_| {
                    let x = c % g.order();
                    c /= g.order();
                    GroupElement::new(x)
                })
                .rev()
                .collect();
            let t = SimplexTuple(coords);
            if nondegenerate && !t.is_nondegenerate() {
                continue;
            }
            let mut set = t.0.clone();
            set.sort();
            set.dedup();
            if is_affinely_commutative(g, &set).unwrap() {
                out.push(t);
            }
        }
        out.sort();
        out
    }

    fn brute_force_commuting(g: &FiniteGroup, n: usize) -> usize {
        let total = g.order().pow(n as u32);
        (0..total)
            .filter(|&code| {
                let mut c = code;
                let coords: Vec<GroupElement> = (0..n)
                    .map(|_| {
                        let x = c % g.order();
                        c /= g.order();
                        GroupElement::new(x)
                    })
                    .collect();
                is_pairwise_commuting(g, &coords)
            })
            .count()
    }

    #[test]
    fn z2_alternating_sequences() {
        let g = group("C2");
        for n in 0..6 {
            assert_eq!(enumerate_e2_nondegenerate(&g, n, Budget::default()).unwrap().len(), 2);
        }
    }

    #[test]
    fn s3_counts_match_brute_force() {
        let g = group("S3");
        let b = Budget::default();
        assert_eq!(enumerate_e2_nondegenerate(&g, 1, b).unwrap().len(), 30);
        assert_eq!(enumerate_e2_nondegenerate(&g, 2, b).unwrap().len(), 42);
        for n in 0..=3 {
            assert_eq!(enumerate_e2_nondegenerate(&g, n, b).unwrap(), brute_force_e2(&g, n, true));
            assert_eq!(enumerate_e2_all(&g, n, b).unwrap(), brute_force_e2(&g, n, false));
        }
    }

    #[test]
    fn coset_enumeration_matches_filter_on_small_groups() {
        for name in ["Q8", "D4", "A4", "C2xC2", "D6"] {
            let g = group(name);
            for n in 0..=2 {
                assert_eq!(
                    enumerate_e2_nondegenerate(&g, n, Budget::default()).unwrap(),
                    brute_force_e2(&g, n, true),
                    "{name} n={n}"
                );
            }
        }
    }

    #[test]
    fn every_pair_is_an_edge() {
        for name in ["S3", "Q8", "A4", "S4"] {
            let g = group(name);
            let edges = enumerate_e2_nondegenerate(&g, 1, Budget::default()).unwrap();
            assert_eq!(edges.len(), g.order() * (g.order() - 1));
        }
    }

    #[test]
    fn commuting_tuples() {
        let s3 = group("S3");
        let b = Budget::default();
        assert_eq!(enumerate_commuting_tuples(&s3, 1, b).unwrap().len(), 6);
        assert_eq!(enumerate_commuting_tuples(&s3, 2, b).unwrap().len(), 18);
        assert_eq!(enumerate_commuting_tuples(&group("C4"), 3, b).unwrap().len(), 64);
        for name in ["Q8", "D4", "A4"] {
            let g = group(name);
            for n in 1..=3 {
                assert_eq!(enumerate_commuting_tuples(&g, n, b).unwrap().len(), brute_force_commuting(&g, n));
            }
        }
        let t = enumerate_commuting_tuples(&s3, 2, b).unwrap();
        assert!(t.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn budget_is_enforced() {
        let g = group("S3");
        let err = enumerate_e2_nondegenerate(&g, 3, Budget::new(10)).unwrap_err();
        assert!(matches!(err, Error::TooLarge { degree: 3, .. }));
        let err = e2_chain_complex(&g, 3, Budget::new(100)).unwrap_err();
        assert!(matches!(err, Error::TooLarge { degree: 3, .. }));
        assert!(matches!(enumerate_commuting_tuples(&g, 2, Budget::new(5)), Err(Error::TooLarge { .. })));
    }

    #[test]
    fn chain_complex_ranks() {
        let z2 = e2_chain_complex(&group("C2"), 4, Budget::default()).unwrap();
        assert_eq!(z2.ranks(), vec![2, 2, 2, 2, 2]);
        let s3 = e2_chain_complex(&group("S3"), 2, Budget::default()).unwrap();
        assert_eq!(s3.ranks(), vec![6, 30, 42]);
        assert!(s3.boundary_defects().is_empty());
    }

    #[test]
    fn ebar_ranks() {
        let s3 = ebar_chain_complex(&group("S3"), 2, Budget::default()).unwrap();
        assert_eq!(s3.rank(0), 1);
        assert_eq!(s3.rank(1), 30 - (18 - 6));
        assert!(s3.boundary(1).is_zero());
        let c4 = ebar_chain_complex(&group("C4"), 3, Budget::default()).unwrap();
        assert_eq!(c4.ranks(), vec![1, 0, 0, 0]);
    }
}
