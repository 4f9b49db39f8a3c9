use std::collections::HashSet;

use fixedbitset::FixedBitSet;

use super::{FiniteGroup, GroupElement};

/// A subgroup, stored as the sorted list of its members' indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subgroup {
    members: Vec<GroupElement>,
}

impl Subgroup {
    pub fn trivial() -> Self {
        Subgroup { members: vec![GroupElement::IDENTITY] }
    }

    pub fn whole(group: &FiniteGroup) -> Self {
        Subgroup { members: group.elements().collect() }
    }

    /// Wraps a member list after checking it is a subgroup of `group`.
    pub fn from_members(group: &FiniteGroup, mut members: Vec<GroupElement>) -> Option<Self> {
        members.sort_unstable();
        members.dedup();
        if members.first() != Some(&GroupElement::IDENTITY) || members.iter().any(|m| m.index() >= group.order()) {
            return None;
        }
        let set = Self::bits(group.order(), &members);
        let closed = members.iter().all(|&a| {
            set.contains(group.inv(a).index()) && members.iter().all(|&b| set.contains(group.mul(a, b).index()))
        });
        closed.then_some(Subgroup { members })
    }

    fn from_bits(bits: &FixedBitSet) -> Self {
        Subgroup { members: bits.ones().map(GroupElement::new).collect() }
    }

    fn bits(order: usize, members: &[GroupElement]) -> FixedBitSet {
        let mut set = FixedBitSet::with_capacity(order);
        for m in members {
            set.insert(m.index());
        }
        set
    }

    pub fn members(&self) -> &[GroupElement] {
        &self.members
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.members.len() == 1
    }

    pub fn contains(&self, g: GroupElement) -> bool {
        self.members.binary_search(&g).is_ok()
    }

    pub fn to_bitset(&self, group: &FiniteGroup) -> FixedBitSet {
        Self::bits(group.order(), &self.members)
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.members.iter().all(|&m| other.contains(m))
    }

    /// The left coset `gA`, sorted.
    pub fn left_coset(&self, group: &FiniteGroup, g: GroupElement) -> Vec<GroupElement> {
        let mut c: Vec<_> = self.members.iter().map(|&a| group.mul(g, a)).collect();
        c.sort_unstable();
        c
    }

    /// All left cosets, each sorted, listed by their least element.
    pub fn left_cosets(&self, group: &FiniteGroup) -> Vec<Vec<GroupElement>> {
        let mut covered = FixedBitSet::with_capacity(group.order());
        let mut out = Vec::with_capacity(group.order() / self.order());
        for g in group.elements() {
            if covered.contains(g.index()) {
                continue;
            }
            let coset = self.left_coset(group, g);
            for x in &coset {
                covered.insert(x.index());
            }
            out.push(coset);
        }
        out
    }

    pub fn is_normal(&self, group: &FiniteGroup) -> bool {
        group.elements().all(|g| self.members.iter().all(|&a| self.contains(group.mul(group.mul(group.inv(g), a), g))))
    }

    pub fn is_abelian(&self, group: &FiniteGroup) -> bool {
        self.members.iter().enumerate().all(|(i, &a)| self.members[i + 1..].iter().all(|&b| group.commutes(a, b)))
    }

    /// `g⁻¹Ag`, sorted.
    pub fn conjugate(&self, group: &FiniteGroup, g: GroupElement) -> Subgroup {
        let mut m: Vec<_> = self.members.iter().map(|&a| group.mul(group.mul(group.inv(g), a), g)).collect();
        m.sort_unstable();
        Subgroup { members: m }
    }
}

impl FiniteGroup {
    /// Subgroup generated by `gens`.
    pub fn subgroup_generated<I: IntoIterator<Item = GroupElement>>(&self, gens: I) -> Subgroup {
        let gens: Vec<GroupElement> = gens.into_iter().collect();
        let mut set = FixedBitSet::with_capacity(self.order());
        set.insert(0);
        let mut members = vec![GroupElement::IDENTITY];
        let mut i = 0;
        // Finite: closure under right multiplication by generators suffices.
        while i < members.len() {
            let x = members[i];
            for &g in &gens {
                let y = self.mul(x, g);
                if !set.contains(y.index()) {
                    set.insert(y.index());
                    members.push(y);
                }
            }
            i += 1;
        }
        Subgroup::from_bits(&set)
    }

    pub fn center(&self) -> Subgroup {
        let members = self.elements().filter(|&z| self.elements().all(|g| self.commutes(z, g))).collect();
        Subgroup { members }
    }

    /// `[G, G]`, generated by all commutators.
    pub fn commutator_subgroup(&self) -> Subgroup {
        let mut comms = FixedBitSet::with_capacity(self.order());
        for g in self.elements() {
            for h in self.elements() {
                comms.insert(self.commutator(g, h).index());
            }
        }
        self.subgroup_generated(comms.ones().map(GroupElement::new))
    }

    /// Every abelian subgroup, trivial and (when abelian) whole group
    /// included, sorted by size and then by member list.
    ///
    /// Starts from the cyclic subgroups and repeatedly adjoins an element of
    /// the centralizer, so each abelian subgroup is reached through a chain
    /// of abelian joins.
    pub fn abelian_subgroups(&self) -> Vec<Subgroup> {
        let n = self.order();
        let centralizers: Vec<FixedBitSet> = self.elements().map(|g| self.centralizer_set(g)).collect();
        let mut seen: HashSet<FixedBitSet> = HashSet::new();
        let mut frontier: Vec<FixedBitSet> = Vec::new();
        for g in self.elements() {
            let cyc = self.subgroup_generated([g]).to_bitset(self);
            if seen.insert(cyc.clone()) {
                frontier.push(cyc);
            }
        }
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for a in &frontier {
                let mut cent = FixedBitSet::with_capacity(n);
                cent.insert_range(..);
                for m in a.ones() {
                    cent.intersect_with(&centralizers[m]);
                }
                cent.difference_with(a);
                for g in cent.ones() {
                    let joined = self.join_with_element(a, GroupElement::new(g));
                    if seen.insert(joined.clone()) {
                        next.push(joined);
                    }
                }
            }
            frontier = next;
        }
        let mut out: Vec<Subgroup> = seen.iter().map(Subgroup::from_bits).collect();
        out.sort_by(|a, b| a.order().cmp(&b.order()).then_with(|| a.members.cmp(&b.members)));
        out
    }

    /// `A·⟨g⟩` for `g` centralizing the abelian subgroup `A`.
    fn join_with_element(&self, a: &FixedBitSet, g: GroupElement) -> FixedBitSet {
        let mut out = a.clone();
        let mut power = g;
        while !a.contains(power.index()) {
            for m in a.ones() {
                out.insert(self.mul(GroupElement::new(m), power).index());
            }
            power = self.mul(power, g);
        }
        out
    }

    /// Abelian subgroups not properly contained in another abelian subgroup.
    pub fn maximal_abelian_subgroups(&self) -> Vec<Subgroup> {
        let all = self.abelian_subgroups();
        maximal_among(&all)
    }

    /// Commuting is transitive on non-central elements.
    pub fn is_transitively_commutative(&self) -> bool {
        let center = self.center().to_bitset(self);
        let mut noncentral = FixedBitSet::with_capacity(self.order());
        noncentral.insert_range(..);
        noncentral.difference_with(&center);
        let cents: Vec<FixedBitSet> = self
            .elements()
            .map(|g| {
                let mut c = self.centralizer_set(g);
                c.intersect_with(&noncentral);
                c
            })
            .collect();
        // For commuting non-central a, b: every non-central c commuting with b
        // must commute with a.
        noncentral.ones().all(|a| cents[a].ones().all(|b| cents[b].is_subset(&cents[a])))
    }
}

/// Elements of `subgroups` not strictly contained in another element.
pub(crate) fn maximal_among(subgroups: &[Subgroup]) -> Vec<Subgroup> {
    subgroups
        .iter()
        .filter(|a| !subgroups.iter().any(|b| b.order() > a.order() && a.is_subgroup_of(b)))
        .cloned()
        .collect()
}
