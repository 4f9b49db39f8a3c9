//! Fundamental group of `E(2, G)` for finite `G`.
//!
//! With basepoint the vertex `1`, `π₁` is generated by symbols `x_{g,h}`, one
//! per edge `(g, h)`, subject to `x_{g,1} = x_{1,g} = 1` and
//! `x_{g,h} x_{h,k} x_{k,g} = 1` whenever `{g, h, k}` is affinely
//! commutative. The commutator map sends `x_{g,h}` to `[g, h]`.

mod presentation;
mod tietze;
mod todd_coxeter;

use std::fmt;

use ibig::IBig;

use crate::error::Result;
use crate::group::{FiniteGroup, GroupElement, Subgroup};
use crate::homology::{smith_normal_form, HomologyGroup, IntMatrix};
use crate::simplicial::{enumerate_e2_all, Budget};

pub use presentation::{canonical_rotation, cyclic_reduce, free_reduce, inverse_word, Letter, Presentation, Word};
pub use tietze::{tietze_simplify, DEFAULT_TIETZE_ROUNDS};
pub use todd_coxeter::{enumerate_cosets, DEFAULT_COSET_ROWS};

/// The generator `x_{g,h}` attached to the edge `(g, h)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Pi1Generator {
    pub g: GroupElement,
    pub h: GroupElement,
}

impl Pi1Generator {
    /// Position in [`pi1_presentation`]'s generator list.
    pub fn index(self, order: usize) -> usize {
        self.g.index() * order + self.h.index()
    }

    pub fn from_index(index: usize, order: usize) -> Self {
        Pi1Generator { g: GroupElement::new(index / order), h: GroupElement::new(index % order) }
    }

    /// `x_g_h` with element labels; `^` is dropped so that symbols never
    /// collide with the inverse suffix of the text format.
    pub fn symbol(self, group: &FiniteGroup) -> String {
        let clean = |e: GroupElement| group.label(e).replace('^', "");
        format!("x_{}_{}", clean(self.g), clean(self.h))
    }

    /// Image under the commutator homomorphism.
    pub fn commutator_image(self, group: &FiniteGroup) -> GroupElement {
        group.commutator(self.g, self.h)
    }
}

/// The presentation of `π₁(E(2, G), 1)`: all `|G|²` generators, the unit
/// relators, and one triangle relator per affinely commutative ordered
/// triple (repeats allowed), deduplicated up to rotation and inversion.
pub fn pi1_presentation(group: &FiniteGroup) -> Result<Presentation> {
    pi1_presentation_with_budget(group, Budget::default())
}

pub fn pi1_presentation_with_budget(group: &FiniteGroup, budget: Budget) -> Result<Presentation> {
    let n = group.order();
    let x = |g: GroupElement, h: GroupElement| Letter::new(Pi1Generator { g, h }.index(n));
    let generators = (0..n * n).map(|i| Pi1Generator::from_index(i, n).symbol(group)).collect();
    let one = group.identity();
    let mut relators: Vec<Word> = Vec::new();
    for g in group.elements() {
        relators.push(vec![x(g, one)]);
        relators.push(vec![x(one, g)]);
    }
    for t in enumerate_e2_all(group, 2, budget)? {
        let [g, h, k] = [t.0[0], t.0[1], t.0[2]];
        relators.push(vec![x(g, h), x(h, k), x(k, g)]);
    }
    let mut seen = std::collections::HashSet::new();
    relators.retain(|r| seen.insert(canonical_rotation(r)));
    Ok(Presentation::new_unchecked(generators, relators))
}

/// Exponent-sum matrix: one row per relator, one column per generator.
pub fn exponent_sum_matrix(p: &Presentation) -> IntMatrix {
    let trip = p
        .relators()
        .iter()
        .enumerate()
        .flat_map(|(i, r)| r.iter().map(move |l| (i, l.generator, IBig::from(l.sign()))));
    IntMatrix::from_triplets(p.relators().len(), p.num_generators(), trip)
}

/// The abelianized group, from the Smith normal form of the exponent sums.
pub fn abelianization(p: &Presentation) -> HomologyGroup {
    let snf = smith_normal_form(&exponent_sum_matrix(p));
    HomologyGroup { betti: p.num_generators() - snf.rank, torsion: snf.torsion() }
}

/// Subgroup generated by the images `[g, h]` of all generators `x_{g,h}`.
pub fn commutator_hom_image(group: &FiniteGroup) -> Subgroup {
    let n = group.order();
    group.subgroup_generated((0..n * n).map(|i| Pi1Generator::from_index(i, n).commutator_image(group)))
}

/// Resource limits for [`pi1_trivial_certificate`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Pi1Budget {
    pub tietze_rounds: usize,
    pub coset_rows: usize,
    pub simplices: Budget,
}

impl Default for Pi1Budget {
    fn default() -> Self {
        Pi1Budget { tietze_rounds: DEFAULT_TIETZE_ROUNDS, coset_rows: DEFAULT_COSET_ROWS, simplices: Budget::default() }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Verdict {
    Trivial,
    Nontrivial,
    Unknown,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Trivial => "Trivial",
            Verdict::Nontrivial => "Nontrivial",
            Verdict::Unknown => "Unknown",
        })
    }
}

/// Evidence supporting a verdict. Each variant can be rechecked from the
/// group alone.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    /// Tietze simplification reached `⟨ | ⟩`.
    EmptyPresentation,
    /// Coset enumeration of the trivial subgroup closed with this many
    /// cosets, which is the order of `π₁`.
    CosetEnumeration { cosets: usize },
    /// The abelianization is nonzero.
    Abelianization(HomologyGroup),
    /// The commutator map is onto `[G, G]`, of the given order.
    CommutatorSurjection { order: usize },
    /// Neither triviality nor nontriviality was established within budget.
    BudgetExhausted,
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::EmptyPresentation => write!(f, "empty presentation reached"),
            Witness::CosetEnumeration { cosets } => write!(f, "coset enumeration closed with {cosets} coset(s)"),
            Witness::Abelianization(h) => write!(f, "abelianization {h}"),
            Witness::CommutatorSurjection { order } => write!(f, "commutator map onto [G,G] of order {order}"),
            Witness::BudgetExhausted => write!(f, "budget exhausted"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TrivialityCertificate {
    pub verdict: Verdict,
    pub witnesses: Vec<Witness>,
    /// Abelianization of `π₁`, which is `H₁(E(2, G))`.
    pub abelianization: HomologyGroup,
    /// Size of the simplified presentation.
    pub simplified_generators: usize,
    pub simplified_relators: usize,
}

/// Decides whether `π₁(E(2, G))` is trivial, with evidence.
///
/// Nontriviality comes from a nonzero abelianization or a nontrivial
/// commutator image (all applicable witnesses are listed); triviality from
/// reaching the empty presentation or from coset enumeration closing with a
/// single coset.
pub fn pi1_trivial_certificate(group: &FiniteGroup, budget: Pi1Budget) -> Result<TrivialityCertificate> {
    let raw = pi1_presentation_with_budget(group, budget.simplices)?;
    let simplified = tietze_simplify(&raw, budget.tietze_rounds);
    let abelianization = abelianization(&simplified);
    let image = commutator_hom_image(group);

    let mut witnesses = Vec::new();
    if !image.is_trivial() {
        witnesses.push(Witness::CommutatorSurjection { order: image.order() });
    }
    if !abelianization.is_zero() {
        witnesses.push(Witness::Abelianization(abelianization.clone()));
    }
    let verdict = if !witnesses.is_empty() {
        Verdict::Nontrivial
    } else if simplified.is_empty() {
        witnesses.push(Witness::EmptyPresentation);
        Verdict::Trivial
    } else {
        match enumerate_cosets(&simplified, budget.coset_rows) {
            Some(cosets) => {
                witnesses.push(Witness::CosetEnumeration { cosets });
                if cosets == 1 {
                    Verdict::Trivial
                } else {
                    Verdict::Nontrivial
                }
            }
            None => {
                witnesses.push(Witness::BudgetExhausted);
                Verdict::Unknown
            }
        }
    };
    Ok(TrivialityCertificate {
        verdict,
        witnesses,
        abelianization,
        simplified_generators: simplified.num_generators(),
        simplified_relators: simplified.relators().len(),
    })
}
