use std::fmt;
use std::io::{self, Write};

use crate::error::{Error, Result};

/// A generator or its inverse.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter {
    pub generator: usize,
    pub inverse: bool,
}

impl Letter {
    pub fn new(generator: usize) -> Self {
        Letter { generator, inverse: false }
    }

    pub fn inv(self) -> Self {
        Letter { inverse: !self.inverse, ..self }
    }

    /// `+1` or `-1`.
    pub fn sign(self) -> i64 {
        if self.inverse {
            -1
        } else {
            1
        }
    }
}

pub type Word = Vec<Letter>;

pub fn inverse_word(w: &[Letter]) -> Word {
    w.iter().rev().map(|l| l.inv()).collect()
}

/// Cancels adjacent inverse pairs.
pub fn free_reduce(w: &[Letter]) -> Word {
    let mut out: Word = Vec::with_capacity(w.len());
    for &l in w {
        if out.last() == Some(&l.inv()) {
            out.pop();
        } else {
            out.push(l);
        }
    }
    out
}

/// Free reduction followed by cancelling inverse pairs at the two ends.
pub fn cyclic_reduce(w: &[Letter]) -> Word {
    let w = free_reduce(w);
    let mut lo = 0;
    let mut hi = w.len();
    while hi - lo >= 2 && w[lo] == w[hi - 1].inv() {
        lo += 1;
        hi -= 1;
    }
    w[lo..hi].to_vec()
}

/// Least word among all rotations of `w` and of its inverse. Two relators
/// with the same canonical form define the same normal closure.
pub fn canonical_rotation(w: &[Letter]) -> Word {
    let inv = inverse_word(w);
    let mut best: Option<Word> = None;
    for cand in [w, &inv[..]] {
        for r in 0..cand.len().max(1) {
            let rot: Word = cand[r..].iter().chain(&cand[..r]).copied().collect();
            if best.as_ref().is_none_or(|b| rot < *b) {
                best = Some(rot);
            }
        }
    }
    best.unwrap_or_default()
}

/// A finite presentation `⟨generators | relators⟩`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Presentation {
    generators: Vec<String>,
    relators: Vec<Word>,
}

impl Presentation {
    /// Fails on an empty relator or an out-of-range generator reference.
    pub fn new(generators: Vec<String>, relators: Vec<Word>) -> Result<Self> {
        for (i, r) in relators.iter().enumerate() {
            if r.is_empty() {
                return Err(Error::InvalidInput(format!("relator {i} is empty")));
            }
            if let Some(l) = r.iter().find(|l| l.generator >= generators.len()) {
                return Err(Error::InvalidInput(format!(
                    "relator {i} references generator {} of {}",
                    l.generator,
                    generators.len()
                )));
            }
        }
        Ok(Presentation { generators, relators })
    }

    pub(crate) fn new_unchecked(generators: Vec<String>, relators: Vec<Word>) -> Self {
        debug_assert!(Presentation::new(generators.clone(), relators.clone()).is_ok());
        Presentation { generators, relators }
    }

    /// Parses relators written as space-separated symbols, each optionally
    /// followed by `^-1`, e.g. `a b a^-1 b^-1`. Empty relator strings are
    /// skipped.
    pub fn parse<S: AsRef<str>, T: AsRef<str>>(generators: &[S], relators: &[T]) -> Result<Self> {
        let generators: Vec<String> = generators.iter().map(|s| s.as_ref().to_string()).collect();
        let mut words = Vec::new();
        for r in relators {
            let mut w = Word::new();
            for tok in r.as_ref().split_whitespace() {
                let (name, inverse) = match tok.strip_suffix("^-1") {
                    Some(n) => (n, true),
                    None => (tok, false),
                };
                let generator = generators
                    .iter()
                    .position(|g| g == name)
                    .ok_or_else(|| Error::InvalidInput(format!("unknown generator `{name}`")))?;
                w.push(Letter { generator, inverse });
            }
            if !w.is_empty() {
                words.push(w);
            }
        }
        Presentation::new(generators, words)
    }

    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    pub fn num_generators(&self) -> usize {
        self.generators.len()
    }

    /// No generators and no relators.
    pub fn is_empty(&self) -> bool {
        self.generators.is_empty() && self.relators.is_empty()
    }

    pub fn word_to_string(&self, w: &[Letter]) -> String {
        let parts: Vec<String> = w
            .iter()
            .map(|l| {
                let g = &self.generators[l.generator];
                if l.inverse {
                    format!("{g}^-1")
                } else {
                    g.clone()
                }
            })
            .collect();
        parts.join(" ")
    }

    /// `generators` line with all symbols, then `relators N` and one relator
    /// per line.
    pub fn write_text<W: Write>(&self, mut w: W) -> io::Result<()> {
        writeln!(w, "generators {}", self.generators.len())?;
        writeln!(w, "{}", self.generators.join(" "))?;
        writeln!(w, "relators {}", self.relators.len())?;
        for r in &self.relators {
            writeln!(w, "{}", self.word_to_string(r))?;
        }
        Ok(())
    }

    pub fn to_text(&self) -> String {
        let mut buf = Vec::new();
        self.write_text(&mut buf).expect("writing to a Vec");
        String::from_utf8(buf).expect("utf-8 symbols")
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rels: Vec<String> = self.relators.iter().map(|r| self.word_to_string(r)).collect();
        write!(f, "< {} | {} >", self.generators.join(", "), rels.join(", "))
    }
}
