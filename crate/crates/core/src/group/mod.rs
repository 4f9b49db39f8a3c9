//! Finite groups stored as complete multiplication tables.
//!
//! Every group carries a canonical element ordering: elements are discovered
//! breadth-first from the identity by right multiplication with the
//! generators, and each breadth-first layer is sorted by the underlying
//! representation (the one-line image for permutations). The identity always
//! has index 0.
//!
//! Permutations act on the right: the product `gh` means "apply `g`, then
//! `h`". Commutators follow `[g, h] = g⁻¹h⁻¹gh`.

mod closure;
mod perm;
mod subgroups;

use std::fmt;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};

pub use closure::{closure, Closure};
pub use perm::{group_from_generators, group_from_generators_capped, parse_permutation, Permutation};
pub use subgroups::Subgroup;

/// Default cap on the order of any group built by closure.
pub const DEFAULT_ORDER_CAP: usize = 1024;

/// An element of a [`FiniteGroup`], identified by its canonical index.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct GroupElement(u16);

impl GroupElement {
    pub const IDENTITY: GroupElement = GroupElement(0);

    /// Panics if `index` does not fit the element index width.
    pub fn new(index: usize) -> Self {
        GroupElement(u16::try_from(index).expect("element index exceeds u16"))
    }

    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }

    #[inline]
    pub fn is_identity(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    order: usize,
    table: Vec<u16>,
    inverse: Vec<u16>,
    labels: Vec<String>,
    generators: Vec<GroupElement>,
}

impl FiniteGroup {
    /// Builds a group from an explicit multiplication table, checking every
    /// group axiom. `table[a][b]` is the index of `a·b`.
    pub fn from_table(table: Vec<Vec<usize>>, labels: Vec<String>, generators: Vec<GroupElement>) -> Result<Self> {
        let order = table.len();
        if order == 0 {
            return Err(Error::InvalidTable("empty table".into()));
        }
        if order > u16::MAX as usize {
            return Err(Error::InvalidTable(format!("order {order} too large")));
        }
        if labels.len() != order {
            return Err(Error::InvalidTable(format!("{} labels for {order} elements", labels.len())));
        }
        let mut flat = Vec::with_capacity(order * order);
        for (a, row) in table.iter().enumerate() {
            if row.len() != order {
                return Err(Error::InvalidTable(format!("row {a} has length {}", row.len())));
            }
            for &v in row {
                if v >= order {
                    return Err(Error::InvalidTable(format!("entry {v} out of range")));
                }
                flat.push(v as u16);
            }
        }
        let group = Self::from_flat_unchecked(order, flat, labels, generators);
        group.validate()?;
        Ok(group)
    }

    /// Assumes `flat` is a valid table with identity 0; inverses are derived.
    pub(crate) fn from_flat_unchecked(
        order: usize,
        table: Vec<u16>,
        labels: Vec<String>,
        generators: Vec<GroupElement>,
    ) -> Self {
        let mut inverse = vec![0u16; order];
        for a in 0..order {
            if let Some(b) = (0..order).find(|&b| table[a * order + b] == 0) {
                inverse[a] = b as u16;
            }
        }
        FiniteGroup { order, table, inverse, labels, generators }
    }

    /// Checks the table invariants: identity row/column 0, Latin square,
    /// inverses and associativity.
    pub fn validate(&self) -> Result<()> {
        let n = self.order;
        for a in 0..n {
            if self.table[a] as usize != a || self.table[a * n] as usize != a {
                return Err(Error::InvalidTable("index 0 is not the identity".into()));
            }
        }
        let mut seen = FixedBitSet::with_capacity(n);
        for a in 0..n {
            seen.clear();
            for b in 0..n {
                seen.insert(self.table[a * n + b] as usize);
            }
            if seen.count_ones(..) != n {
                return Err(Error::InvalidTable(format!("row {a} is not a permutation")));
            }
            seen.clear();
            for b in 0..n {
                seen.insert(self.table[b * n + a] as usize);
            }
            if seen.count_ones(..) != n {
                return Err(Error::InvalidTable(format!("column {a} is not a permutation")));
            }
            if self.table[a * n + self.inverse[a] as usize] != 0 {
                return Err(Error::InvalidTable(format!("element {a} has no inverse")));
            }
        }
        for a in 0..n {
            for b in 0..n {
                let ab = self.table[a * n + b] as usize;
                for c in 0..n {
                    let bc = self.table[b * n + c] as usize;
                    if self.table[ab * n + c] != self.table[a * n + bc] {
                        return Err(Error::InvalidTable(format!("associativity fails at ({a}, {b}, {c})")));
                    }
                }
            }
        }
        Ok(())
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn identity(&self) -> GroupElement {
        GroupElement::IDENTITY
    }

    pub fn elements(&self) -> impl ExactSizeIterator<Item = GroupElement> {
        (0..self.order as u16).map(GroupElement)
    }

    pub fn element(&self, index: usize) -> Option<GroupElement> {
        (index < self.order).then_some(GroupElement(index as u16))
    }

    #[inline]
    pub fn mul(&self, a: GroupElement, b: GroupElement) -> GroupElement {
        GroupElement(self.table[a.index() * self.order + b.index()])
    }

    #[inline]
    pub fn inv(&self, a: GroupElement) -> GroupElement {
        GroupElement(self.inverse[a.index()])
    }

    /// `a⁻¹b`, the difference used throughout the bar constructions.
    #[inline]
    pub fn left_quotient(&self, a: GroupElement, b: GroupElement) -> GroupElement {
        self.mul(self.inv(a), b)
    }

    pub fn product<I: IntoIterator<Item = GroupElement>>(&self, elems: I) -> GroupElement {
        elems.into_iter().fold(GroupElement::IDENTITY, |acc, x| self.mul(acc, x))
    }

    #[inline]
    pub fn commutes(&self, a: GroupElement, b: GroupElement) -> bool {
        self.mul(a, b) == self.mul(b, a)
    }

    /// `[g, h] = g⁻¹h⁻¹gh`.
    #[inline]
    pub fn commutator(&self, g: GroupElement, h: GroupElement) -> GroupElement {
        let gh = self.mul(g, h);
        let hg = self.mul(h, g);
        // g⁻¹h⁻¹gh = (hg)⁻¹(gh)
        self.left_quotient(hg, gh)
    }

    pub fn element_order(&self, a: GroupElement) -> usize {
        let mut x = a;
        let mut k = 1;
        while !x.is_identity() {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn label(&self, a: GroupElement) -> &str {
        &self.labels[a.index()]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn find_label(&self, label: &str) -> Option<GroupElement> {
        self.labels.iter().position(|l| l == label).map(GroupElement::new)
    }

    /// The generating set the canonical ordering was built from.
    pub fn generators(&self) -> &[GroupElement] {
        &self.generators
    }

    /// Row `a` of the table as raw indices.
    pub fn row(&self, a: GroupElement) -> &[u16] {
        let n = self.order;
        &self.table[a.index() * n..(a.index() + 1) * n]
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order;
        (0..n).all(|a| (a + 1..n).all(|b| self.table[a * n + b] == self.table[b * n + a]))
    }

    /// Centralizer of `a` as a bitset over element indices.
    pub fn centralizer_set(&self, a: GroupElement) -> FixedBitSet {
        let mut set = FixedBitSet::with_capacity(self.order);
        for b in self.elements() {
            if self.commutes(a, b) {
                set.insert(b.index());
            }
        }
        set
    }

    /// Conjugacy classes, each sorted, listed by smallest member.
    pub fn conjugacy_classes(&self) -> Vec<Vec<GroupElement>> {
        let mut assigned = FixedBitSet::with_capacity(self.order);
        let mut classes = Vec::new();
        for a in self.elements() {
            if assigned.contains(a.index()) {
                continue;
            }
            let mut class: Vec<GroupElement> = self.elements().map(|g| self.mul(self.mul(self.inv(g), a), g)).collect();
            class.sort_unstable();
            class.dedup();
            for c in &class {
                assigned.insert(c.index());
            }
            classes.push(class);
        }
        classes
    }
}
