//! Smith normal form by sparse elimination over ℤ.
//!
//! Only the diagonal is kept. Pivots are chosen by smallest magnitude; among
//! unit pivots the sparsest column and then the shortest row win, which keeps
//! fill low on boundary matrices where nearly every pivot is ±1.

use std::collections::BTreeSet;

use ibig::ops::Abs;
use ibig::IBig;

use super::IntMatrix;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SnfResult {
    /// Nonzero invariant factors `d_1 | d_2 | …`, all positive.
    pub diagonal: Vec<IBig>,
    pub rank: usize,
}

impl SnfResult {
    /// Invariant factors greater than one.
    pub fn torsion(&self) -> Vec<IBig> {
        let one = IBig::from(1u8);
        self.diagonal.iter().filter(|d| **d != one).cloned().collect()
    }
}

pub fn smith_normal_form(m: &IntMatrix) -> SnfResult {
    let mut elim = Eliminator::new(m);
    elim.run();
    let diagonal = normalize_diagonal(elim.diagonal);
    SnfResult { rank: diagonal.len(), diagonal }
}

/// Turns a list of nonzero diagonal entries into invariant factors by
/// repeated `(a, b) -> (gcd, lcm)`.
fn normalize_diagonal(diag: Vec<IBig>) -> Vec<IBig> {
    let one = IBig::from(1u8);
    let units = diag.iter().filter(|d| **d == one).count();
    let mut rest: Vec<IBig> = diag.into_iter().filter(|d| *d != one).collect();
    for i in 0..rest.len() {
        for j in i + 1..rest.len() {
            let g = rest[i].gcd(&rest[j]);
            if g != rest[i] {
                let l = &rest[i] / &g * &rest[j];
                rest[i] = g;
                rest[j] = l;
            }
        }
    }
    let mut out = vec![one; units];
    out.extend(rest);
    out.sort();
    out
}

struct Eliminator {
    rows: Vec<Vec<(u32, IBig)>>,
    cols: Vec<BTreeSet<u32>>,
    /// `(count, col)` for every nonempty column.
    by_count: BTreeSet<(u32, u32)>,
    diagonal: Vec<IBig>,
    zero: IBig,
    one: IBig,
}

impl Eliminator {
    fn new(m: &IntMatrix) -> Self {
        let rows = m.to_rows();
        let mut cols = vec![BTreeSet::new(); m.cols()];
        for (r, row) in rows.iter().enumerate() {
            for (c, _) in row {
                cols[*c as usize].insert(r as u32);
            }
        }
        let by_count =
            cols.iter().enumerate().filter(|(_, s)| !s.is_empty()).map(|(c, s)| (s.len() as u32, c as u32)).collect();
        Eliminator { rows, cols, by_count, diagonal: Vec::new(), zero: IBig::from(0u8), one: IBig::from(1u8) }
    }

    fn col_insert(&mut self, c: u32, r: u32) {
        let set = &mut self.cols[c as usize];
        let old = set.len() as u32;
        if set.insert(r) {
            if old > 0 {
                self.by_count.remove(&(old, c));
            }
            self.by_count.insert((old + 1, c));
        }
    }

    fn col_remove(&mut self, c: u32, r: u32) {
        let set = &mut self.cols[c as usize];
        let old = set.len() as u32;
        if set.remove(&r) {
            self.by_count.remove(&(old, c));
            if old > 1 {
                self.by_count.insert((old - 1, c));
            }
        }
    }

    fn value(&self, r: u32, c: u32) -> &IBig {
        let row = &self.rows[r as usize];
        match row.binary_search_by_key(&c, |e| e.0) {
            Ok(i) => &row[i].1,
            Err(_) => &self.zero,
        }
    }

    fn is_unit(&self, v: &IBig) -> bool {
        v.clone().abs() == self.one
    }

    fn select_pivot(&self) -> Option<(u32, u32)> {
        for &(_, c) in &self.by_count {
            let best = self.cols[c as usize]
                .iter()
                .filter(|&&r| self.is_unit(self.value(r, c)))
                .min_by_key(|&&r| self.rows[r as usize].len());
            if let Some(&r) = best {
                return Some((r, c));
            }
        }
        // No unit left: smallest magnitude, then Markowitz cost.
        let mut best: Option<(IBig, usize, u32, u32)> = None;
        for &(count, c) in &self.by_count {
            for &r in &self.cols[c as usize] {
                let mag = self.value(r, c).clone().abs();
                let cost = (count as usize - 1) * (self.rows[r as usize].len() - 1);
                let better = match &best {
                    None => true,
                    Some((m, k, _, _)) => (&mag, cost) < (m, *k),
                };
                if better {
                    best = Some((mag, cost, r, c));
                }
            }
        }
        best.map(|(_, _, r, c)| (r, c))
    }

    /// `row[target] += factor · row[source]`.
    fn axpy(&mut self, target: u32, factor: &IBig, source: u32) {
        let src = std::mem::take(&mut self.rows[source as usize]);
        let dst = std::mem::take(&mut self.rows[target as usize]);
        let mut out = Vec::with_capacity(dst.len() + src.len());
        let mut added = Vec::new();
        let mut removed = Vec::new();
        let mut i = 0;
        let mut j = 0;
        while i < dst.len() || j < src.len() {
            let take_dst = j >= src.len() || (i < dst.len() && dst[i].0 < src[j].0);
            let take_src = i >= dst.len() || (j < src.len() && src[j].0 < dst[i].0);
            if take_dst {
                out.push(dst[i].clone());
                i += 1;
            } else if take_src {
                let v = factor * &src[j].1;
                if v != self.zero {
                    added.push(src[j].0);
                    out.push((src[j].0, v));
                }
                j += 1;
            } else {
                let v = &dst[i].1 + factor * &src[j].1;
                if v == self.zero {
                    removed.push(dst[i].0);
                } else {
                    out.push((dst[i].0, v));
                }
                i += 1;
                j += 1;
            }
        }
        self.rows[source as usize] = src;
        self.rows[target as usize] = out;
        for c in added {
            self.col_insert(c, target);
        }
        for c in removed {
            self.col_remove(c, target);
        }
    }

    fn drop_row(&mut self, r: u32) {
        let row = std::mem::take(&mut self.rows[r as usize]);
        for (c, _) in row {
            self.col_remove(c, r);
        }
    }

    fn run(&mut self) {
        while let Some((p, c)) = self.select_pivot() {
            let u = self.value(p, c).clone();
            let others: Vec<u32> = self.cols[c as usize].iter().copied().filter(|&r| r != p).collect();
            if self.is_unit(&u) {
                for r in others {
                    // u⁻¹ = u for a unit.
                    let f = -(self.value(r, c) * &u);
                    self.axpy(r, &f, p);
                }
                self.drop_row(p);
                self.diagonal.push(self.one.clone());
                continue;
            }

            let mut column_clear = true;
            for r in others {
                let q = self.value(r, c) / &u;
                if q != self.zero {
                    self.axpy(r, &-q, p);
                }
                if *self.value(r, c) != self.zero {
                    column_clear = false;
                }
            }
            if !column_clear {
                continue;
            }
            // Column c is now zero outside the pivot, so column operations
            // reduce the rest of the pivot row modulo u without touching
            // other rows.
            let row = std::mem::take(&mut self.rows[p as usize]);
            let mut reduced = Vec::with_capacity(row.len());
            let mut removed = Vec::new();
            for (col, v) in row {
                if col == c {
                    reduced.push((col, v));
                    continue;
                }
                let rem = &v % &u;
                if rem == self.zero {
                    removed.push(col);
                } else {
                    reduced.push((col, rem));
                }
            }
            self.rows[p as usize] = reduced;
            for col in removed {
                self.col_remove(col, p);
            }
            if self.rows[p as usize].len() == 1 {
                self.drop_row(p);
                self.diagonal.push(u.abs());
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn diag(m: &[Vec<i64>]) -> Vec<i64> {
        smith_normal_form(&IntMatrix::from_dense(m)).diagonal.iter().map(|d| i64::try_from(d).unwrap()).collect()
    }

    #[test]
    fn identity() {
        assert_eq!(diag(&[vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]), vec![1, 1, 1]);
    }

    #[test]
    fn zero_matrix() {
        let r = smith_normal_form(&IntMatrix::zeros(3, 4));
        assert!(r.diagonal.is_empty());
        assert_eq!(r.rank, 0);
    }

    #[test]
    fn two_by_two() {
        // d1 = gcd of entries = 2, d1·d2 = |det| = 8.
        assert_eq!(diag(&[vec![2, 4], vec![6, 8]]), vec![2, 4]);
    }

    #[test]
    fn coprime_diagonal_is_merged() {
        assert_eq!(diag(&[vec![2, 0], vec![0, 3]]), vec![1, 6]);
        assert_eq!(diag(&[vec![4, 0, 0], vec![0, 6, 0], vec![0, 0, 10]]), vec![2, 2, 60]);
    }

    #[test]
    fn rank_deficient() {
        assert_eq!(diag(&[vec![1, 2, 3], vec![2, 4, 6], vec![1, 1, 1]]), vec![1, 1]);
    }

    #[test]
    fn large_entries() {
        let big = 1i64 << 62;
        let r = diag(&[vec![big, big - 1], vec![big - 1, big - 2]]);
        // det = big(big-2) - (big-1)² = -1
        assert_eq!(r, vec![1, 1]);
    }
}
