use std::fmt;

use super::{closure, Closure, FiniteGroup, DEFAULT_ORDER_CAP};
use crate::error::{Error, Result};

/// A permutation of `{1, …, degree}` stored as its zero-based one-line image.
///
/// Composition follows the right-action convention: `p.then(q)` is the
/// permutation "apply `p`, then `q`", which is the group product `pq`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation(Vec<u16>);

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation((0..degree as u16).collect())
    }

    /// From a zero-based image; `None` unless it is a bijection.
    pub fn from_images(images: Vec<u16>) -> Option<Self> {
        let mut seen = vec![false; images.len()];
        for &x in &images {
            let slot = seen.get_mut(x as usize)?;
            if *slot {
                return None;
            }
            *slot = true;
        }
        Some(Permutation(images))
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn images(&self) -> &[u16] {
        &self.0
    }

    /// Image of the zero-based point `x`.
    pub fn apply(&self, x: usize) -> usize {
        self.0[x] as usize
    }

    pub fn then(&self, other: &Permutation) -> Permutation {
        Permutation(self.0.iter().map(|&x| other.0[x as usize]).collect())
    }

    /// Places `self` on the points `offset..offset + degree` of a larger set.
    pub fn shifted(&self, offset: usize, degree: usize) -> Permutation {
        let mut out: Vec<u16> = (0..degree as u16).collect();
        for (i, &x) in self.0.iter().enumerate() {
            out[offset + i] = offset as u16 + x;
        }
        Permutation(out)
    }

    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.0.len()];
        let mut out = Vec::new();
        for start in 0..self.0.len() {
            if seen[start] || self.0[start] as usize == start {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut x = self.0[start] as usize;
            while x != start {
                seen[x] = true;
                cycle.push(x);
                x = self.0[x] as usize;
            }
            out.push(cycle);
        }
        out
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            let pts: Vec<String> = c.iter().map(|x| (x + 1).to_string()).collect();
            write!(f, "({})", pts.join(" "))?;
        }
        Ok(())
    }
}

/// Parses cycle notation such as `(1 2)(3 4 5)` or `(1,2)` on `1..=degree`.
/// Cycles are composed left to right; `()` and the empty string denote the
/// identity.
pub fn parse_permutation(text: &str, degree: usize) -> Result<Permutation> {
    let bad = |reason: &str| Error::InvalidCycle { text: text.to_string(), reason: reason.to_string() };
    let mut result = Permutation::identity(degree);
    let mut rest = text.trim();
    while !rest.is_empty() {
        let body_start = rest.strip_prefix('(').ok_or_else(|| bad("expected `(`"))?;
        let close = body_start.find(')').ok_or_else(|| bad("unclosed cycle"))?;
        let body = &body_start[..close];
        rest = body_start[close + 1..].trim_start();

        let mut points = Vec::new();
        for tok in body.split(|c: char| c == ',' || c.is_whitespace()).filter(|t| !t.is_empty()) {
            let p: usize = tok.parse().map_err(|_| bad("point is not a positive integer"))?;
            if p == 0 || p > degree {
                return Err(bad(&format!("point {p} outside 1..={degree}")));
            }
            if points.contains(&(p - 1)) {
                return Err(bad(&format!("point {p} repeated in a cycle")));
            }
            points.push(p - 1);
        }
        if points.len() < 2 {
            continue;
        }
        let mut images: Vec<u16> = (0..degree as u16).collect();
        for (i, &p) in points.iter().enumerate() {
            images[p] = points[(i + 1) % points.len()] as u16;
        }
        result = result.then(&Permutation(images));
    }
    Ok(result)
}

/// Closure of permutations in cycle notation, capped at the default order.
pub fn group_from_generators<S: AsRef<str>>(generators: &[S], degree: usize) -> Result<FiniteGroup> {
    group_from_generators_capped(generators, degree, DEFAULT_ORDER_CAP).map(|c| c.group)
}

pub fn group_from_generators_capped<S: AsRef<str>>(
    generators: &[S],
    degree: usize,
    cap: usize,
) -> Result<Closure<Permutation>> {
    if degree == 0 {
        return Err(Error::InvalidInput("degree must be positive".into()));
    }
    let perms = generators.iter().map(|g| parse_permutation(g.as_ref(), degree)).collect::<Result<Vec<_>>>()?;
    closure(&perms, Permutation::identity(degree), |a, b| a.then(b), cap)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::GroupElement;

    #[test]
    fn parse_and_display() {
        let p = parse_permutation("(1 2 3)(4 5)", 5).unwrap();
        assert_eq!(p.images(), &[1, 2, 0, 4, 3]);
        assert_eq!(p.to_string(), "(1 2 3)(4 5)");
        assert_eq!(parse_permutation("()", 3).unwrap(), Permutation::identity(3));
        assert_eq!(parse_permutation("(1,3)", 3).unwrap().images(), &[2, 1, 0]);
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(parse_permutation("(1 2", 3), Err(Error::InvalidCycle { .. })));
        assert!(matches!(parse_permutation("(1 4)", 3), Err(Error::InvalidCycle { .. })));
        assert!(matches!(parse_permutation("(1 1)", 3), Err(Error::InvalidCycle { .. })));
        assert!(matches!(parse_permutation("1 2", 3), Err(Error::InvalidCycle { .. })));
        assert!(matches!(parse_permutation("(a b)", 3), Err(Error::InvalidCycle { .. })));
    }

    #[test]
    fn right_action_composition() {
        // (1 2) then (1 3): 1 -> 2 -> 2, 2 -> 1 -> 3, 3 -> 3 -> 1.
        let p = parse_permutation("(1 2)", 3).unwrap();
        let q = parse_permutation("(1 3)", 3).unwrap();
        assert_eq!(p.then(&q).to_string(), "(1 2 3)");
        // Cycles in one word compose the same way.
        assert_eq!(parse_permutation("(1 2)(1 3)", 3).unwrap().to_string(), "(1 2 3)");
    }

    #[test]
    fn trivial_group() {
        let g = group_from_generators::<&str>(&[], 1).unwrap();
        assert_eq!(g.order(), 1);
        assert_eq!(g.label(GroupElement::IDENTITY), "1");
    }

    #[test]
    fn s3_closure_matches_brute_force() {
        let c = group_from_generators_capped(&["(1 2)", "(1 2 3)"], 3, 1024).unwrap();
        assert_eq!(c.group.order(), 6);
        // Brute force: all 6 permutations of 3 points appear.
        let mut imgs: Vec<_> = c.elements.iter().map(|p| p.images().to_vec()).collect();
        imgs.sort();
        imgs.dedup();
        assert_eq!(imgs.len(), 6);
        assert_eq!(c.elements[0], Permutation::identity(3));
        // Table agrees with direct composition.
        for a in c.group.elements() {
            for b in c.group.elements() {
                let ab = c.group.mul(a, b);
                assert_eq!(c.elements[ab.index()], c.elements[a.index()].then(&c.elements[b.index()]));
            }
        }
    }

    /// With the transpositions `(5 6)(7 8)` in place of a 4-cycle the first
    /// generator no longer squares to the central involution.
    #[test]
    fn near_miss_q8_generators_give_order_32() {
        let g = group_from_generators(&["(1 2 3 4)(5 6)(7 8)", "(1 5 3 7)(2 8 4 6)"], 8).unwrap();
        assert_eq!(g.order(), 32);
    }

    #[test]
    fn q8_from_permutations() {
        let g = group_from_generators(&["(1 2 3 4)(5 6 7 8)", "(1 5 3 7)(2 8 4 6)"], 8).unwrap();
        assert_eq!(g.order(), 8);
        assert_eq!(g.center().order(), 2);
        let involutions = g.elements().filter(|&x| g.element_order(x) == 2).count();
        assert_eq!(involutions, 1);
    }

    #[test]
    fn closure_is_deterministic() {
        let a = group_from_generators(&["(1 2 3 4)", "(1 2)"], 4).unwrap();
        let b = group_from_generators(&["(1 2 3 4)", "(1 2)"], 4).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn order_cap() {
        let err = group_from_generators(&["(1 2)", "(1 2 3 4 5 6 7)"], 7).unwrap_err();
        assert_eq!(err, Error::GroupTooLarge { cap: 1024 });
    }
}
