use fixedbitset::FixedBitSet;
use ibig::IBig;

use super::{bitset_of, BasisLabel, ChainComplex};
use crate::group::{FiniteGroup, GroupElement, Subgroup};
use crate::homology::IntMatrix;

/// A left coset `gA` of an abelian subgroup, named by its least element.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CosetVertex {
    /// Index into [`CosetPoset::subgroups`].
    pub subgroup: usize,
    pub rep: GroupElement,
}

/// The poset of left cosets of abelian subgroups, ordered by inclusion.
#[derive(Clone, Debug)]
pub struct CosetPoset {
    pub subgroups: Vec<Subgroup>,
    /// Sorted by subgroup (hence by size) and then by representative.
    pub vertices: Vec<CosetVertex>,
    members: Vec<FixedBitSet>,
    /// For each vertex, the strictly larger vertices containing it, ascending.
    above: Vec<Vec<u32>>,
}

impl CosetPoset {
    pub fn coset_members(&self, v: usize) -> &FixedBitSet {
        &self.members[v]
    }

    pub fn is_below(&self, v: usize, w: usize) -> bool {
        self.above[v].binary_search(&(w as u32)).is_ok()
    }

    /// Strict chains `v_0 < v_1 < … < v_d`, grouped by `d` and sorted.
    pub fn chains(&self) -> Vec<Vec<Vec<u32>>> {
        let mut by_dim: Vec<Vec<Vec<u32>>> = Vec::new();
        let mut current = Vec::new();
        for v in 0..self.vertices.len() {
            current.push(v as u32);
            self.extend_chains(&mut current, &mut by_dim);
            current.pop();
        }
        by_dim
    }

    fn extend_chains(&self, current: &mut Vec<u32>, by_dim: &mut Vec<Vec<Vec<u32>>>) {
        let d = current.len() - 1;
        if by_dim.len() <= d {
            by_dim.push(Vec::new());
        }
        by_dim[d].push(current.clone());
        let top = *current.last().expect("nonempty chain") as usize;
        for &w in &self.above[top] {
            current.push(w);
            self.extend_chains(current, by_dim);
            current.pop();
        }
    }
}

/// Builds the coset poset over all abelian subgroups, trivial one included.
pub fn coset_poset(group: &FiniteGroup) -> CosetPoset {
    let subgroups = group.abelian_subgroups();
    let mut vertices = Vec::new();
    let mut members = Vec::new();
    for (i, a) in subgroups.iter().enumerate() {
        for coset in a.left_cosets(group) {
            vertices.push(CosetVertex { subgroup: i, rep: coset[0] });
            members.push(bitset_of(group.order(), &coset));
        }
    }
    // gA ⊊ hB exactly when A ⊊ B and g ∈ hB.
    let above = vertices
        .iter()
        .enumerate()
        .map(|(v, cv)| {
            (v + 1..vertices.len())
                .filter(|&w| {
                    let cw = vertices[w];
                    subgroups[cw.subgroup].order() > subgroups[cv.subgroup].order() && members[v].is_subset(&members[w])
                })
                .map(|w| w as u32)
                .collect()
        })
        .collect();
    CosetPoset { subgroups, vertices, members, above }
}

/// Order complex of the coset poset. It is finite-dimensional, so the
/// returned complex is complete.
pub fn coset_poset_complex(group: &FiniteGroup) -> ChainComplex {
    let poset = coset_poset(group);
    let chains = poset.chains();
    let mut boundaries = vec![IntMatrix::zeros(0, chains[0].len())];
    for d in 1..chains.len() {
        let lower = &chains[d - 1];
        let mut trip = Vec::new();
        for (j, c) in chains[d].iter().enumerate() {
            for i in 0..c.len() {
                let mut face = c.clone();
                face.remove(i);
                let row = lower.binary_search(&face).expect("faces of chains are chains");
                trip.push((row, j, IBig::from(if i % 2 == 0 { 1i8 } else { -1 })));
            }
        }
        boundaries.push(IntMatrix::from_triplets(lower.len(), chains[d].len(), trip));
    }
    let basis = chains.into_iter().map(|cs| cs.into_iter().map(BasisLabel::CosetChain).collect()).collect();
    ChainComplex::new(basis, boundaries, true)
}
