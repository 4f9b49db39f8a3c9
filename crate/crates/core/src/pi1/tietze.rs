use std::collections::HashSet;

use super::presentation::{canonical_rotation, cyclic_reduce, Letter, Presentation, Word};

/// Default cap on elimination rounds.
pub const DEFAULT_TIETZE_ROUNDS: usize = 1000;

/// Generator substitutions as a union-find with signs: each generator equals
/// `root^sign`, and a root may be killed (equal to the identity).
struct Substitution {
    parent: Vec<usize>,
    sign: Vec<bool>,
    killed: Vec<bool>,
}

impl Substitution {
    fn new(n: usize) -> Self {
        Substitution { parent: (0..n).collect(), sign: vec![false; n], killed: vec![false; n] }
    }

    /// `(root, inverted)` with `g = root^(±1)`.
    fn find(&mut self, g: usize) -> (usize, bool) {
        let p = self.parent[g];
        if p == g {
            return (g, false);
        }
        let (root, s) = self.find(p);
        self.parent[g] = root;
        self.sign[g] ^= s;
        (root, self.sign[g])
    }

    fn rewrite(&mut self, w: &[Letter]) -> Word {
        let mut out = Vec::with_capacity(w.len());
        for &l in w {
            let (root, s) = self.find(l.generator);
            if !self.killed[root] {
                out.push(Letter { generator: root, inverse: l.inverse ^ s });
            }
        }
        cyclic_reduce(&out)
    }

    /// Applies a reduced relator of length one or two over distinct roots.
    /// Returns whether anything changed.
    fn absorb(&mut self, w: &[Letter]) -> bool {
        match *w {
            [l] => {
                self.killed[l.generator] = true;
                true
            }
            // a^ε b^δ = 1 gives a = b^(-εδ); the larger root is replaced.
            [x, y] if x.generator != y.generator => {
                let (lo, hi) = if x.generator < y.generator { (y, x) } else { (x, y) };
                self.parent[lo.generator] = hi.generator;
                self.sign[lo.generator] = lo.inverse == hi.inverse;
                true
            }
            _ => false,
        }
    }
}

/// Eliminates generators through relators of length one (killing them) and
/// two (substituting one generator by the other's inverse or itself),
/// rewriting, reducing and deduplicating relators until nothing changes or
/// `max_rounds` is reached. Surviving generators keep their symbols and
/// relative order.
pub fn tietze_simplify(p: &Presentation, max_rounds: usize) -> Presentation {
    let n = p.num_generators();
    let mut sub = Substitution::new(n);
    let mut relators: Vec<Word> = p.relators().to_vec();
    for _ in 0..max_rounds.max(1) {
        let mut changed = false;
        let mut next = Vec::with_capacity(relators.len());
        for r in &relators {
            let w = sub.rewrite(r);
            if w.is_empty() {
                continue;
            }
            if sub.absorb(&w) {
                changed = true;
            } else {
                next.push(w);
            }
        }
        relators = dedupe(next);
        if !changed {
            break;
        }
    }
    let relators: Vec<Word> = dedupe(relators.iter().map(|r| sub.rewrite(r)).filter(|w| !w.is_empty()).collect());

    let mut new_index = vec![usize::MAX; n];
    let mut generators = Vec::new();
    for g in 0..n {
        if sub.find(g).0 == g && !sub.killed[g] {
            new_index[g] = generators.len();
            generators.push(p.generators()[g].clone());
        }
    }
    let relators = relators
        .into_iter()
        .map(|r| r.into_iter().map(|l| Letter { generator: new_index[l.generator], ..l }).collect())
        .collect();
    Presentation::new_unchecked(generators, relators)
}

/// Removes relators equal up to rotation and inversion, keeping the first
/// occurrence in canonical form.
fn dedupe(relators: Vec<Word>) -> Vec<Word> {
    let mut seen = HashSet::new();
    relators.into_iter().map(|r| canonical_rotation(&r)).filter(|r| seen.insert(r.clone())).collect()
}
