use std::fmt;
use std::io::{self, BufRead, Write};

use ibig::IBig;

use super::SimplexTuple;
use crate::error::{Error, Result};
use crate::homology::IntMatrix;

/// Label of a basis element of a [`ChainComplex`].
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BasisLabel {
    Tuple(SimplexTuple),
    /// A strict chain of coset-poset vertices, by vertex index.
    CosetChain(Vec<u32>),
    /// The collapsed class of the quotient model.
    Basepoint,
    /// Anonymous basis element, e.g. after parsing the text format.
    Index(usize),
}

impl fmt::Display for BasisLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BasisLabel::Tuple(t) => write!(f, "{t}"),
            BasisLabel::CosetChain(c) => {
                let parts: Vec<String> = c.iter().map(u32::to_string).collect();
                write!(f, "<{}>", parts.join(" < "))
            }
            BasisLabel::Basepoint => write!(f, "*"),
            BasisLabel::Index(i) => write!(f, "#{i}"),
        }
    }
}

/// Free chain groups in degrees `0..=max_dim` with integer boundary matrices.
///
/// `boundary(d)` has shape `rank(d-1) × rank(d)`; `boundary(0)` is the zero
/// map out of degree 0. A complex is *complete* when it is known to vanish
/// above `max_dim`; otherwise it is a truncation and homology is only valid
/// below `max_dim`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainComplex {
    basis: Vec<Vec<BasisLabel>>,
    boundaries: Vec<IntMatrix>,
    complete: bool,
}

impl ChainComplex {
    /// Panics if the shapes are inconsistent.
    pub fn new(basis: Vec<Vec<BasisLabel>>, boundaries: Vec<IntMatrix>, complete: bool) -> Self {
        assert!(!basis.is_empty(), "a chain complex needs degree 0");
        assert_eq!(basis.len(), boundaries.len(), "one boundary per degree");
        assert_eq!(boundaries[0].cols(), basis[0].len());
        for d in 1..basis.len() {
            assert_eq!(boundaries[d].rows(), basis[d - 1].len(), "rows of boundary {d}");
            assert_eq!(boundaries[d].cols(), basis[d].len(), "cols of boundary {d}");
        }
        ChainComplex { basis, boundaries, complete }
    }

    pub fn max_dim(&self) -> usize {
        self.basis.len() - 1
    }

    pub fn is_complete(&self) -> bool {
        self.complete
    }

    pub fn rank(&self, d: usize) -> usize {
        self.basis.get(d).map_or(0, Vec::len)
    }

    pub fn ranks(&self) -> Vec<usize> {
        self.basis.iter().map(Vec::len).collect()
    }

    pub fn basis(&self, d: usize) -> &[BasisLabel] {
        &self.basis[d]
    }

    pub fn boundary(&self, d: usize) -> &IntMatrix {
        &self.boundaries[d]
    }

    /// Highest degree whose homology this complex determines.
    pub fn homology_top(&self) -> usize {
        if self.complete {
            self.max_dim()
        } else {
            self.max_dim().saturating_sub(1)
        }
    }

    /// True for a truncated complex with `max_dim = 0`, which determines no
    /// homology at all.
    pub(crate) fn is_empty_range(&self) -> bool {
        !self.complete && self.max_dim() == 0
    }

    /// Degrees `d` for which `∂_d ∘ ∂_{d+1} ≠ 0`.
    pub fn boundary_defects(&self) -> Vec<usize> {
        (1..self.max_dim())
            .filter(|&d| {
                let prod = self.boundaries[d].mul(&self.boundaries[d + 1]).expect("consecutive boundaries compose");
                !prod.is_zero()
            })
            .collect()
    }

    /// Text export: a header, one `degree d size` line per degree, then each
    /// boundary's nonzero entries as sorted `row col value` triplets.
    pub fn write_text<W: Write>(&self, mut w: W) -> io::Result<()> {
        writeln!(w, "chain-complex max-dim {} complete {}", self.max_dim(), self.complete)?;
        for (d, b) in self.basis.iter().enumerate() {
            writeln!(w, "degree {d} {}", b.len())?;
        }
        for d in 1..=self.max_dim() {
            let m = &self.boundaries[d];
            writeln!(w, "boundary {d} {} {} {}", m.rows(), m.cols(), m.nnz())?;
            for (r, c, v) in m.entries() {
                writeln!(w, "{r} {c} {v}")?;
            }
        }
        Ok(())
    }

    pub fn to_text(&self) -> String {
        let mut buf = Vec::new();
        self.write_text(&mut buf).expect("writing to a Vec");
        String::from_utf8(buf).expect("ascii output")
    }

    /// Parses [`write_text`](Self::write_text) output. Basis labels come back
    /// as [`BasisLabel::Index`].
    pub fn read_text<R: BufRead>(r: R) -> Result<ChainComplex> {
        let mut lines = r.lines().enumerate().map(|(i, l)| (i + 1, l));
        let mut next = |what: &str| -> Result<(usize, Vec<String>)> {
            loop {
                match lines.next() {
                    None => return Err(Error::Parse { line: 0, reason: format!("unexpected end, expected {what}") }),
                    Some((n, l)) => {
                        let l = l.map_err(|e| Error::Parse { line: n, reason: e.to_string() })?;
                        let toks: Vec<String> = l.split_whitespace().map(str::to_string).collect();
                        if !toks.is_empty() {
                            return Ok((n, toks));
                        }
                    }
                }
            }
        };
        let num = |n: usize, s: &str| -> Result<usize> {
            s.parse().map_err(|_| Error::Parse { line: n, reason: format!("bad number `{s}`") })
        };

        let (n, head) = next("header")?;
        if head.len() != 5 || head[0] != "chain-complex" || head[1] != "max-dim" || head[3] != "complete" {
            return Err(Error::Parse { line: n, reason: "bad header".into() });
        }
        let max_dim = num(n, &head[2])?;
        let complete = match head[4].as_str() {
            "true" => true,
            "false" => false,
            _ => return Err(Error::Parse { line: n, reason: "bad completeness flag".into() }),
        };
        let mut sizes = Vec::with_capacity(max_dim + 1);
        for d in 0..=max_dim {
            let (n, t) = next("degree line")?;
            if t.len() != 3 || t[0] != "degree" || num(n, &t[1])? != d {
                return Err(Error::Parse { line: n, reason: format!("expected `degree {d} <size>`") });
            }
            sizes.push(num(n, &t[2])?);
        }
        let mut boundaries = vec![IntMatrix::zeros(0, sizes[0])];
        for d in 1..=max_dim {
            let (n, t) = next("boundary line")?;
            if t.len() != 5 || t[0] != "boundary" || num(n, &t[1])? != d {
                return Err(Error::Parse { line: n, reason: format!("expected `boundary {d} …`") });
            }
            let (rows, cols, nnz) = (num(n, &t[2])?, num(n, &t[3])?, num(n, &t[4])?);
            if rows != sizes[d - 1] || cols != sizes[d] {
                return Err(Error::Parse { line: n, reason: "boundary shape mismatch".into() });
            }
            let mut trip = Vec::with_capacity(nnz);
            for _ in 0..nnz {
                let (n, t) = next("entry")?;
                if t.len() != 3 {
                    return Err(Error::Parse { line: n, reason: "expected `row col value`".into() });
                }
                let (r, c) = (num(n, &t[0])?, num(n, &t[1])?);
                let v: IBig =
                    t[2].parse().map_err(|_| Error::Parse { line: n, reason: format!("bad value `{}`", t[2]) })?;
                if r >= rows || c >= cols {
                    return Err(Error::Parse { line: n, reason: "entry out of range".into() });
                }
                trip.push((r, c, v));
            }
            boundaries.push(IntMatrix::from_triplets(rows, cols, trip));
        }
        let basis = sizes.iter().map(|&s| (0..s).map(BasisLabel::Index).collect()).collect();
        Ok(ChainComplex::new(basis, boundaries, complete))
    }
}
