//! Simplicial models of the space of affinely commuting elements.
//!
//! An `n`-simplex of `E_•G` is a tuple `(g_0, …, g_n)`; face `∂_i` deletes
//! coordinate `i` and degeneracy `s_i` duplicates it. `E_•(2, G)` keeps the
//! tuples whose underlying set lies in a single left coset of an abelian
//! subgroup. The bar construction `B_•G` has `n`-simplices `G^n`, outer faces
//! dropping the first or last coordinate and inner faces multiplying
//! neighbours.

mod chain;
mod commutator;
mod coset_poset;
mod enumerate;

use std::fmt;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::group::{FiniteGroup, GroupElement, Subgroup};

pub use chain::{BasisLabel, ChainComplex};
pub use commutator::{check_simplicial_homotopy, commutator_simplicial_map, homotopy_component, HomotopyViolation};
pub use coset_poset::{coset_poset, coset_poset_complex, CosetPoset, CosetVertex};
pub use enumerate::{
    e2_chain_complex, ebar_chain_complex, enumerate_commuting_tuples, enumerate_e2_all, enumerate_e2_nondegenerate,
    estimate_e2_count,
};

/// Default cap on the number of simplices materialized by one enumeration.
pub const DEFAULT_SIMPLEX_BUDGET: usize = 5_000_000;

/// Resource limit for simplex enumeration.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    pub max_simplices: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget { max_simplices: DEFAULT_SIMPLEX_BUDGET }
    }
}

impl Budget {
    pub fn new(max_simplices: usize) -> Self {
        Budget { max_simplices }
    }
}

/// A simplex `(g_0, …, g_n)` of `E_•G`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SimplexTuple(pub Vec<GroupElement>);

impl SimplexTuple {
    pub fn new(coords: Vec<GroupElement>) -> Self {
        SimplexTuple(coords)
    }

    pub fn from_indices(indices: &[usize]) -> Self {
        SimplexTuple(indices.iter().map(|&i| GroupElement::new(i)).collect())
    }

    pub fn coords(&self) -> &[GroupElement] {
        &self.0
    }

    /// Simplicial dimension; the tuple has `dim + 1` coordinates.
    pub fn dim(&self) -> usize {
        self.0.len() - 1
    }

    /// No two adjacent coordinates agree.
    pub fn is_nondegenerate(&self) -> bool {
        self.0.windows(2).all(|w| w[0] != w[1])
    }

    /// `∂_i`: delete coordinate `i`.
    pub fn face(&self, i: usize) -> SimplexTuple {
        let mut v = self.0.clone();
        v.remove(i);
        SimplexTuple(v)
    }

    /// `s_i`: duplicate coordinate `i`.
    pub fn degeneracy(&self, i: usize) -> SimplexTuple {
        let mut v = self.0.clone();
        v.insert(i, self.0[i]);
        SimplexTuple(v)
    }
}

impl fmt::Display for SimplexTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|g| g.index().to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// A simplex `(g_1, …, g_n)` of the bar construction `B_•G`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BarSimplex(pub Vec<GroupElement>);

impl BarSimplex {
    pub fn dim(&self) -> usize {
        self.0.len()
    }

    /// `∂_0` drops the first coordinate, `∂_n` the last; inner faces
    /// multiply coordinates `i` and `i + 1` (counting from 1).
    pub fn face(&self, group: &FiniteGroup, i: usize) -> BarSimplex {
        let n = self.0.len();
        assert!(n >= 1 && i <= n, "face index out of range");
        let mut v = self.0.clone();
        if i == 0 {
            v.remove(0);
        } else if i == n {
            v.pop();
        } else {
            let merged = group.mul(v[i - 1], v[i]);
            v[i - 1] = merged;
            v.remove(i);
        }
        BarSimplex(v)
    }

    /// `s_i`: insert the identity in position `i + 1` (counting from 1).
    pub fn degeneracy(&self, i: usize) -> BarSimplex {
        let mut v = self.0.clone();
        v.insert(i, GroupElement::IDENTITY);
        BarSimplex(v)
    }
}

fn check_nonempty(set: &[GroupElement]) -> Result<()> {
    if set.is_empty() {
        Err(Error::InvalidInput("affine commutativity of the empty set".into()))
    } else {
        Ok(())
    }
}

/// The successive quotients `s_{i-1}⁻¹ s_i`, in the given order, pairwise
/// commute.
pub fn affine_successive_commute(group: &FiniteGroup, set: &[GroupElement]) -> bool {
    let diffs: Vec<GroupElement> = set.windows(2).map(|w| group.left_quotient(w[0], w[1])).collect();
    diffs.iter().enumerate().all(|(i, &a)| diffs[i + 1..].iter().all(|&b| group.commutes(a, b)))
}

/// The subgroup generated by all `s_i⁻¹ s_j` is abelian.
pub fn affine_generated_abelian(group: &FiniteGroup, set: &[GroupElement]) -> bool {
    let gens = set.iter().flat_map(|&a| set.iter().map(move |&b| group.left_quotient(a, b)));
    group.subgroup_generated(gens).is_abelian(group)
}

/// `set` lies in one left coset of a member of `abelian` (which should list
/// the abelian subgroups of `group`).
pub fn affine_in_abelian_coset(group: &FiniteGroup, set: &[GroupElement], abelian: &[Subgroup]) -> bool {
    let Some(&s0) = set.first() else { return true };
    // s ∈ s0·A  ⇔  s0⁻¹s ∈ A.
    let diffs: Vec<GroupElement> = set.iter().map(|&s| group.left_quotient(s0, s)).collect();
    abelian.iter().any(|a| diffs.iter().all(|&d| a.contains(d)))
}

/// Whether the finite set `set` is affinely commutative.
pub fn is_affinely_commutative(group: &FiniteGroup, set: &[GroupElement]) -> Result<bool> {
    check_nonempty(set)?;
    Ok(affine_successive_commute(group, set))
}

/// All coordinates pairwise commute.
pub fn is_pairwise_commuting(group: &FiniteGroup, coords: &[GroupElement]) -> bool {
    coords.iter().enumerate().all(|(i, &a)| coords[i + 1..].iter().all(|&b| group.commutes(a, b)))
}

/// Left cosets of the maximal abelian subgroups, each sorted, deduplicated.
pub fn maximal_abelian_cosets(group: &FiniteGroup) -> Vec<Vec<GroupElement>> {
    let mut out: Vec<Vec<GroupElement>> =
        group.maximal_abelian_subgroups().iter().flat_map(|a| a.left_cosets(group)).collect();
    out.sort();
    out.dedup();
    out
}

pub(crate) fn bitset_of(order: usize, elems: &[GroupElement]) -> FixedBitSet {
    let mut s = FixedBitSet::with_capacity(order);
    for e in elems {
        s.insert(e.index());
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::CatalogEntry;

    fn group(name: &str) -> FiniteGroup {
        name.parse::<CatalogEntry>().unwrap().build().unwrap()
    }

    #[test]
    fn small_sets() {
        let g = group("S3");
        for a in g.elements() {
            assert!(is_affinely_commutative(&g, &[a]).unwrap());
            for b in g.elements() {
                assert!(is_affinely_commutative(&g, &[a, b]).unwrap());
            }
        }
        assert!(is_affinely_commutative(&g, &[]).is_err());
    }

    #[test]
    fn s3_three_element_example() {
        let c = crate::group::group_from_generators_capped(&["(1 2)", "(1 2 3)"], 3, 1024).unwrap();
        let find = |s: &str| {
            let p = crate::group::parse_permutation(s, 3).unwrap();
            GroupElement::new(c.elements.iter().position(|x| *x == p).unwrap())
        };
        let g = &c.group;
        let set = [find("()"), find("(1 2)"), find("(1 3)")];
        assert!(!is_affinely_commutative(g, &set).unwrap());
        assert!(!affine_generated_abelian(g, &set));
        assert!(!affine_in_abelian_coset(g, &set, &g.abelian_subgroups()));
    }

    #[test]
    fn bar_faces() {
        let g = group("C4");
        let a = g.generators()[0];
        let x = BarSimplex(vec![a, a, a]);
        assert_eq!(x.face(&g, 0), BarSimplex(vec![a, a]));
        assert_eq!(x.face(&g, 3), BarSimplex(vec![a, a]));
        assert_eq!(x.face(&g, 1), BarSimplex(vec![g.mul(a, a), a]));
        assert_eq!(x.degeneracy(0).0[0], GroupElement::IDENTITY);
    }

    #[test]
    fn tuple_faces() {
        let t = SimplexTuple::from_indices(&[1, 2, 1]);
        assert!(t.is_nondegenerate());
        assert_eq!(t.face(1), SimplexTuple::from_indices(&[1, 1]));
        assert!(!t.face(1).is_nondegenerate());
        assert_eq!(t.degeneracy(2), SimplexTuple::from_indices(&[1, 2, 1, 1]));
    }
}
