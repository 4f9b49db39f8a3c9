use std::fmt;

use super::{affine_successive_commute, enumerate_e2_all, BarSimplex, Budget, SimplexTuple};
use crate::error::{Error, Result};
use crate::group::{FiniteGroup, GroupElement};

/// `c(g_0, …, g_n) = ([g_0, g_1], …, [g_{n-1}, g_n])`, an `n`-simplex of the
/// bar construction on `[G, G]`.
pub fn commutator_simplicial_map(group: &FiniteGroup, x: &SimplexTuple) -> Result<BarSimplex> {
    if x.0.is_empty() {
        return Err(Error::InvalidInput("empty simplex".into()));
    }
    if !affine_successive_commute(group, &x.0) {
        return Err(Error::InvalidInput(format!("{x} is not affinely commutative")));
    }
    Ok(commutators(group, &x.0))
}

fn commutators(group: &FiniteGroup, g: &[GroupElement]) -> BarSimplex {
    BarSimplex(g.windows(2).map(|w| group.commutator(w[0], w[1])).collect())
}

/// `f(g_0, …, g_n) = (g_1⁻¹g_0, …, g_n⁻¹g_{n-1})`, the classifying map of the
/// principal `G`-bundle over `E(2, G)`.
fn quotient_map(group: &FiniteGroup, g: &[GroupElement]) -> BarSimplex {
    BarSimplex(g.windows(2).map(|w| group.left_quotient(w[1], w[0])).collect())
}

/// `h_i(g_0, …, g_n)`: the commutators `[g_{k-1}, g_k]` for `k ≤ i`, then
/// `g_i⁻¹`, then the quotients `g_k⁻¹g_{k-1}` for `k > i`.
pub fn homotopy_component(group: &FiniteGroup, x: &SimplexTuple, i: usize) -> BarSimplex {
    let g = &x.0;
    assert!(i < g.len(), "homotopy index out of range");
    let mut v = Vec::with_capacity(g.len());
    v.extend(g[..=i].windows(2).map(|w| group.commutator(w[0], w[1])));
    v.push(group.inv(g[i]));
    v.extend(g[i..].windows(2).map(|w| group.left_quotient(w[1], w[0])));
    BarSimplex(v)
}

/// One failed simplicial identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomotopyViolation {
    pub simplex: SimplexTuple,
    pub identity: String,
}

impl fmt::Display for HomotopyViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} fails at {}", self.identity, self.simplex)
    }
}

/// Checks that the `h_j` form a simplicial homotopy from `f` to `c` on every
/// simplex of `E(2, G)` of degree at most `max_degree`, degenerate ones
/// included. Returns the violations found.
pub fn check_simplicial_homotopy(
    group: &FiniteGroup,
    max_degree: usize,
    budget: Budget,
) -> Result<Vec<HomotopyViolation>> {
    let mut out = Vec::new();
    for n in 0..=max_degree {
        for x in enumerate_e2_all(group, n, budget)? {
            check_simplex(group, &x, &mut out);
        }
    }
    Ok(out)
}

fn check_simplex(group: &FiniteGroup, x: &SimplexTuple, out: &mut Vec<HomotopyViolation>) {
    let n = x.dim();
    let h: Vec<BarSimplex> = (0..=n).map(|j| homotopy_component(group, x, j)).collect();
    let mut check = |ok: bool, identity: String| {
        if !ok {
            out.push(HomotopyViolation { simplex: x.clone(), identity });
        }
    };

    check(h[0].face(group, 0) == quotient_map(group, &x.0), "d_0 h_0 = f".into());
    check(h[n].face(group, n + 1) == commutators(group, &x.0), format!("d_{} h_{n} = c", n + 1));

    for j in 0..=n {
        for i in 0..=n + 1 {
            let lhs = h[j].face(group, i);
            if i < j {
                let rhs = homotopy_component(group, &x.face(i), j - 1);
                check(lhs == rhs, format!("d_{i} h_{j} = h_{} d_{i}", j - 1));
            } else if i == j + 1 && j < n {
                check(lhs == h[j + 1].face(group, i), format!("d_{i} h_{j} = d_{i} h_{}", j + 1));
            } else if i > j + 1 {
                let rhs = homotopy_component(group, &x.face(i - 1), j);
                check(lhs == rhs, format!("d_{i} h_{j} = h_{j} d_{}", i - 1));
            }
        }
        for i in 0..=n + 1 {
            let lhs = h[j].degeneracy(i);
            if i <= j {
                let rhs = homotopy_component(group, &x.degeneracy(i), j + 1);
                check(lhs == rhs, format!("s_{i} h_{j} = h_{} s_{i}", j + 1));
            } else {
                let rhs = homotopy_component(group, &x.degeneracy(i - 1), j);
                check(lhs == rhs, format!("s_{i} h_{j} = h_{j} s_{}", i - 1));
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::CatalogEntry;

    fn group(name: &str) -> FiniteGroup {
        name.parse::<CatalogEntry>().unwrap().build().unwrap()
    }

    #[test]
    fn homotopy_on_small_groups() {
        let g = group("S3");
        assert!(check_simplicial_homotopy(&g, 3, Budget::default()).unwrap().is_empty());
        for name in ["Q8", "D4", "C4", "C2xC2"] {
            let g = group(name);
            let v = check_simplicial_homotopy(&g, 2, Budget::default()).unwrap();
            assert!(v.is_empty(), "{name}: {}", v[0]);
        }
    }

    #[test]
    fn components_have_the_right_dimension() {
        let g = group("S3");
        let x = SimplexTuple::from_indices(&[0, 1, 0]);
        for j in 0..3 {
            assert_eq!(homotopy_component(&g, &x, j).dim(), 3);
        }
    }

    /// `c` commutes with faces and degeneracies on every simplex of degree ≤ 3.
    #[test]
    fn commutator_map_is_simplicial() {
        for name in ["S3", "D4", "Q8", "A4", "D6"] {
            let g = group(name);
            for n in 0..=3 {
                for x in enumerate_e2_all(&g, n, Budget::default()).unwrap() {
                    let cx = commutator_simplicial_map(&g, &x).unwrap();
                    assert_eq!(cx.dim(), n);
                    for e in cx.0.iter() {
                        assert!(g.commutator_subgroup().contains(*e));
                    }
                    if n > 0 {
                        for i in 0..=n {
                            assert_eq!(commutator_simplicial_map(&g, &x.face(i)).unwrap(), cx.face(&g, i));
                        }
                    }
                    for i in 0..=n {
                        assert_eq!(commutator_simplicial_map(&g, &x.degeneracy(i)).unwrap(), cx.degeneracy(i));
                    }
                }
            }
        }
    }

    #[test]
    fn rejects_non_affinely_commutative() {
        let g = group("S3");
        let non: Vec<GroupElement> = g.elements().collect();
        assert!(commutator_simplicial_map(&g, &SimplexTuple(non)).is_err());
        assert!(commutator_simplicial_map(&g, &SimplexTuple(vec![])).is_err());
    }

    #[test]
    fn abelian_commutators_vanish() {
        let g = group("C6");
        for x in enumerate_e2_all(&g, 2, Budget::default()).unwrap() {
            let cx = commutator_simplicial_map(&g, &x).unwrap();
            assert!(cx.0.iter().all(|e| e.is_identity()));
        }
    }
}
