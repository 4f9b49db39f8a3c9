//! Integral homology of chain complexes via Smith normal form.

mod matrix;
mod modp;
mod snf;

use std::fmt;

use ibig::IBig;

use crate::error::{Error, Result};
use crate::simplicial::ChainComplex;

pub use matrix::IntMatrix;
pub use modp::rank_mod_p;
pub use snf::{smith_normal_form, SnfResult};

/// `ℤ^betti ⊕ ℤ/t₁ ⊕ … ⊕ ℤ/t_k` with `t₁ | t₂ | … | t_k`, all `t_i > 1`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct HomologyGroup {
    pub betti: usize,
    pub torsion: Vec<IBig>,
}

impl HomologyGroup {
    pub fn free(betti: usize) -> Self {
        HomologyGroup { betti, torsion: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.betti == 0 && self.torsion.is_empty()
    }

    pub fn is_free(&self) -> bool {
        self.torsion.is_empty()
    }

    /// Reduced homology: in degree 0 one copy of ℤ is removed.
    pub fn reduced(&self, degree: usize) -> HomologyGroup {
        let mut h = self.clone();
        if degree == 0 {
            h.betti = h.betti.saturating_sub(1);
        }
        h
    }

    /// Torsion factors that fit in `u64`, for reporting.
    pub fn torsion_u64(&self) -> Vec<u64> {
        self.torsion.iter().map(|t| u64::try_from(t).unwrap_or(u64::MAX)).collect()
    }
}

impl fmt::Display for HomologyGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.betti {
            0 => {}
            1 => parts.push("Z".to_string()),
            b => parts.push(format!("Z^{b}")),
        }
        for t in &self.torsion {
            parts.push(format!("Z/{t}"));
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

/// `H_d = ker ∂_d / im ∂_{d+1}`.
pub fn homology(c: &ChainComplex, d: usize) -> Result<HomologyGroup> {
    let max = c.homology_top();
    if d > max || c.is_empty_range() {
        return Err(Error::InvalidDegree { degree: d, max });
    }
    let incoming = boundary_snf(c, d);
    let outgoing = if d < c.max_dim() { Some(boundary_snf(c, d + 1)) } else { None };
    Ok(assemble(c.rank(d), incoming.rank, outgoing.as_ref()))
}

/// Homology in every valid degree, reusing each boundary's SNF.
pub fn homology_all(c: &ChainComplex) -> Vec<HomologyGroup> {
    if c.is_empty_range() {
        return Vec::new();
    }
    let top = c.homology_top();
    let snfs: Vec<SnfResult> = (0..=c.max_dim()).map(|d| boundary_snf(c, d)).collect();
    (0..=top).map(|d| assemble(c.rank(d), snfs[d].rank, snfs.get(d + 1))).collect()
}

fn boundary_snf(c: &ChainComplex, d: usize) -> SnfResult {
    if d == 0 {
        SnfResult { diagonal: Vec::new(), rank: 0 }
    } else {
        smith_normal_form(c.boundary(d))
    }
}

fn assemble(chains: usize, rank_in: usize, out: Option<&SnfResult>) -> HomologyGroup {
    let (rank_out, torsion) = out.map_or((0, Vec::new()), |s| (s.rank, s.torsion()));
    HomologyGroup { betti: chains - rank_in - rank_out, torsion }
}

/// `dim H_d(C; F_p)` from ranks modulo `p`.
pub fn homology_dim_mod_p(c: &ChainComplex, d: usize, p: u64) -> Result<usize> {
    let max = c.homology_top();
    if d > max || c.is_empty_range() {
        return Err(Error::InvalidDegree { degree: d, max });
    }
    let rank_in = if d == 0 { 0 } else { rank_mod_p(c.boundary(d), p) };
    let rank_out = if d < c.max_dim() { rank_mod_p(c.boundary(d + 1), p) } else { 0 };
    Ok(c.rank(d) - rank_in - rank_out)
}

/// Alternating sum of chain ranks; only defined for complexes known to
/// vanish above `max_dim`.
pub fn euler_characteristic(c: &ChainComplex) -> Result<i64> {
    if !c.is_complete() {
        return Err(Error::NotFiniteDimensional);
    }
    Ok((0..=c.max_dim()).map(|d| if d % 2 == 0 { c.rank(d) as i64 } else { -(c.rank(d) as i64) }).sum())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simplicial::{BasisLabel, ChainComplex};

    /// Simplicial complex on sorted vertex lists, all faces included.
    fn complex_from_facets(facets: &[Vec<usize>]) -> ChainComplex {
        let mut by_dim: Vec<Vec<Vec<usize>>> = Vec::new();
        for f in facets {
            for mask in 1u32..(1 << f.len()) {
                let s: Vec<usize> = (0..f.len()).filter(|i| mask >> i & 1 == 1).map(|i| f[i]).collect();
                let d = s.len() - 1;
                if by_dim.len() <= d {
                    by_dim.resize(d + 1, Vec::new());
                }
                by_dim[d].push(s);
            }
        }
        for v in &mut by_dim {
            v.sort();
            v.dedup();
        }
        let mut boundaries = vec![IntMatrix::zeros(0, by_dim[0].len())];
        for d in 1..by_dim.len() {
            let mut trip = Vec::new();
            for (j, s) in by_dim[d].iter().enumerate() {
                for i in 0..s.len() {
                    let mut face = s.clone();
                    face.remove(i);
                    let row = by_dim[d - 1].binary_search(&face).unwrap();
                    trip.push((row, j, IBig::from(if i % 2 == 0 { 1 } else { -1 })));
                }
            }
            boundaries.push(IntMatrix::from_triplets(by_dim[d - 1].len(), by_dim[d].len(), trip));
        }
        let basis = by_dim.iter().map(|v| (0..v.len()).map(BasisLabel::Index).collect()).collect();
        ChainComplex::new(basis, boundaries, true)
    }

    #[test]
    fn circle_with_one_loop() {
        let c = ChainComplex::new(
            vec![vec![BasisLabel::Index(0)], vec![BasisLabel::Index(0)]],
            vec![IntMatrix::zeros(0, 1), IntMatrix::zeros(1, 1)],
            true,
        );
        assert_eq!(homology(&c, 0).unwrap(), HomologyGroup::free(1));
        assert_eq!(homology(&c, 1).unwrap(), HomologyGroup::free(1));
    }

    #[test]
    fn projective_plane() {
        // Six-vertex triangulation of RP².
        let facets = [
            [0, 1, 3],
            [0, 1, 5],
            [0, 2, 4],
            [0, 2, 5],
            [0, 3, 4],
            [1, 2, 3],
            [1, 2, 4],
            [1, 4, 5],
            [2, 3, 5],
            [3, 4, 5],
        ];
        let facets: Vec<Vec<usize>> = facets
            .iter()
            .map(|f| {
                let mut v = f.to_vec();
                v.sort();
                v
            })
            .collect();
        let c = complex_from_facets(&facets);
        assert_eq!(euler_characteristic(&c).unwrap(), 1);
        assert_eq!(homology(&c, 0).unwrap(), HomologyGroup::free(1));
        assert_eq!(homology(&c, 1).unwrap(), HomologyGroup { betti: 0, torsion: vec![IBig::from(2)] });
        assert!(homology(&c, 2).unwrap().is_zero());
        // Mod 2 the torsion shows up in degrees 1 and 2.
        assert_eq!(homology_dim_mod_p(&c, 1, 2).unwrap(), 1);
        assert_eq!(homology_dim_mod_p(&c, 2, 2).unwrap(), 1);
        assert_eq!(homology_dim_mod_p(&c, 1, 3).unwrap(), 0);
    }

    #[test]
    fn point_and_truncation() {
        let point = ChainComplex::new(vec![vec![BasisLabel::Index(0)]], vec![IntMatrix::zeros(0, 1)], true);
        assert_eq!(euler_characteristic(&point).unwrap(), 1);
        assert_eq!(homology_all(&point), vec![HomologyGroup::free(1)]);

        let truncated = ChainComplex::new(
            vec![vec![BasisLabel::Index(0)], vec![BasisLabel::Index(0)]],
            vec![IntMatrix::zeros(0, 1), IntMatrix::zeros(1, 1)],
            false,
        );
        assert_eq!(euler_characteristic(&truncated), Err(Error::NotFiniteDimensional));
        assert!(homology(&truncated, 0).is_ok());
        assert_eq!(homology(&truncated, 1), Err(Error::InvalidDegree { degree: 1, max: 0 }));
    }

    #[test]
    fn display() {
        assert_eq!(HomologyGroup::free(0).to_string(), "0");
        assert_eq!(HomologyGroup::free(8).to_string(), "Z^8");
        let h = HomologyGroup { betti: 1, torsion: vec![IBig::from(2), IBig::from(4)] };
        assert_eq!(h.to_string(), "Z + Z/2 + Z/4");
    }
}
