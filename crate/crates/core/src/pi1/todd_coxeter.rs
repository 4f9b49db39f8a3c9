//! Coset enumeration of the trivial subgroup (HLT strategy with coincidence
//! processing).

use super::presentation::{Letter, Presentation};

/// Default cap on coset table rows.
pub const DEFAULT_COSET_ROWS: usize = 1_000_000;

/// Cap on `rows × columns` so wide presentations stay within memory.
const MAX_CELLS: usize = 50_000_000;

const NONE: u32 = u32::MAX;

struct Table {
    cols: usize,
    cells: Vec<u32>,
    /// Union-find forwarding for coincident cosets.
    rep: Vec<u32>,
    max_rows: usize,
}

#[derive(Debug)]
struct Overflow;

impl Table {
    fn get(&self, c: u32, x: usize) -> u32 {
        self.cells[c as usize * self.cols + x]
    }

    fn set(&mut self, c: u32, x: usize, v: u32) {
        self.cells[c as usize * self.cols + x] = v;
    }

    fn alive(&self, c: u32) -> bool {
        self.rep[c as usize] == c
    }

    fn define(&mut self, c: u32, x: usize) -> Result<u32, Overflow> {
        let n = self.rep.len();
        if n >= self.max_rows {
            return Err(Overflow);
        }
        let d = n as u32;
        self.rep.push(d);
        self.cells.extend(std::iter::repeat_n(NONE, self.cols));
        self.set(c, x, d);
        self.set(d, x ^ 1, c);
        Ok(d)
    }

    fn find(&mut self, c: u32) -> u32 {
        let mut r = c;
        while self.rep[r as usize] != r {
            r = self.rep[r as usize];
        }
        let mut c = c;
        while self.rep[c as usize] != r {
            let next = self.rep[c as usize];
            self.rep[c as usize] = r;
            c = next;
        }
        r
    }

    fn merge(&mut self, a: u32, b: u32, queue: &mut Vec<u32>) {
        let (a, b) = (self.find(a), self.find(b));
        if a != b {
            let (lo, hi) = (a.min(b), a.max(b));
            self.rep[hi as usize] = lo;
            queue.push(hi);
        }
    }

    fn coincidence(&mut self, a: u32, b: u32) {
        let mut queue = Vec::new();
        self.merge(a, b, &mut queue);
        let mut i = 0;
        while i < queue.len() {
            let g = queue[i];
            i += 1;
            for x in 0..self.cols {
                let d = self.get(g, x);
                if d == NONE {
                    continue;
                }
                self.set(d, x ^ 1, NONE);
                let mu = self.find(g);
                let nu = self.find(d);
                let mx = self.get(mu, x);
                if mx != NONE {
                    self.merge(nu, mx, &mut queue);
                } else {
                    let nx = self.get(nu, x ^ 1);
                    if nx != NONE {
                        self.merge(mu, nx, &mut queue);
                    } else {
                        self.set(mu, x, nu);
                        self.set(nu, x ^ 1, mu);
                    }
                }
            }
        }
    }

    /// Traces `word` from `c` forwards and backwards, defining new cosets
    /// until the two ends meet.
    fn scan_and_fill(&mut self, c: u32, word: &[usize]) -> Result<(), Overflow> {
        let (mut f, mut b) = (c, c);
        let (mut i, mut j) = (0usize, word.len());
        loop {
            while i < j && self.get(f, word[i]) != NONE {
                f = self.get(f, word[i]);
                i += 1;
            }
            if i == j {
                if f != b {
                    self.coincidence(f, b);
                }
                return Ok(());
            }
            while j > i && self.get(b, word[j - 1] ^ 1) != NONE {
                b = self.get(b, word[j - 1] ^ 1);
                j -= 1;
            }
            if j == i {
                self.coincidence(f, b);
                return Ok(());
            }
            if j == i + 1 {
                self.set(f, word[i], b);
                self.set(b, word[i] ^ 1, f);
                return Ok(());
            }
            self.define(f, word[i])?;
        }
    }
}

fn column(l: Letter) -> usize {
    2 * l.generator + usize::from(l.inverse)
}

/// Index of the trivial subgroup, i.e. the group order, if the enumeration
/// closes within `max_rows` cosets.
pub fn enumerate_cosets(p: &Presentation, max_rows: usize) -> Option<usize> {
    let cols = 2 * p.num_generators();
    if cols == 0 {
        return Some(1);
    }
    let max_rows = max_rows.min(MAX_CELLS / cols).max(1);
    let words: Vec<Vec<usize>> = p.relators().iter().map(|r| r.iter().map(|&l| column(l)).collect()).collect();
    let mut t = Table { cols, cells: vec![NONE; cols], rep: vec![0], max_rows };
    let mut c = 0u32;
    while (c as usize) < t.rep.len() {
        if t.alive(c) {
            for w in &words {
                t.scan_and_fill(c, w).ok()?;
                if !t.alive(c) {
                    break;
                }
            }
            if t.alive(c) {
                for x in 0..cols {
                    if t.get(c, x) == NONE {
                        t.define(c, x).ok()?;
                    }
                }
            }
        }
        c += 1;
    }
    Some((0..t.rep.len() as u32).filter(|&c| t.alive(c)).count())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn order(gens: &[&str], rels: &[&str]) -> Option<usize> {
        enumerate_cosets(&Presentation::parse(gens, rels).unwrap(), 100_000)
    }

    #[test]
    fn cyclic() {
        assert_eq!(order(&["a"], &["a a a"]), Some(3));
        assert_eq!(order(&["a"], &["a"]), Some(1));
        assert_eq!(order(&[] as &[&str], &[] as &[&str]), Some(1));
    }

    #[test]
    fn small_nonabelian() {
        assert_eq!(order(&["a", "b"], &["a a", "b b", "a b a b a b"]), Some(6));
        assert_eq!(order(&["a", "b"], &["a a a a", "b b", "a b a b"]), Some(8));
        // Quaternion group.
        assert_eq!(order(&["a", "b"], &["a a a a", "a a b^-1 b^-1", "a b a b^-1"]), Some(8));
        // A5 as the (2,3,5) triangle group.
        assert_eq!(order(&["a", "b"], &["a a", "b b b", "a b a b a b a b a b"]), Some(60));
    }

    #[test]
    fn trivial_by_coincidence() {
        // ⟨a, b | a b a^-1 b^-2, b a b^-1 a^-2⟩ is trivial.
        assert_eq!(order(&["a", "b"], &["a b a^-1 b^-1 b^-1", "b a b^-1 a^-1 a^-1"]), Some(1));
    }

    #[test]
    fn infinite_group_hits_the_cap() {
        assert_eq!(order(&["a"], &[] as &[&str]), None);
        assert_eq!(order(&["a", "b"], &["a b a^-1 b^-1"]), None);
    }
}
