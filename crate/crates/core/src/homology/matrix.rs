use ibig::IBig;

/// Integer matrix in coordinate form. Entries are kept sorted by
/// `(row, col)` with no zeros and no repeated coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<(usize, usize, IBig)>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, entries: Vec::new() }
    }

    /// Sums repeated coordinates and drops zeros. Panics on an out-of-range
    /// coordinate.
    pub fn from_triplets<I>(rows: usize, cols: usize, triplets: I) -> Self
    where
        I: IntoIterator<Item = (usize, usize, IBig)>,
    {
        let mut entries: Vec<(usize, usize, IBig)> = triplets.into_iter().collect();
        for (r, c, _) in &entries {
            assert!(*r < rows && *c < cols, "entry ({r}, {c}) outside {rows}x{cols}");
        }
        entries.sort_by_key(|a| (a.0, a.1));
        let zero = IBig::from(0u8);
        let mut merged: Vec<(usize, usize, IBig)> = Vec::with_capacity(entries.len());
        for (r, c, v) in entries {
            match merged.last_mut() {
                Some(last) if last.0 == r && last.1 == c => last.2 += v,
                _ => merged.push((r, c, v)),
            }
        }
        merged.retain(|e| e.2 != zero);
        IntMatrix { rows, cols, entries: merged }
    }

    pub fn from_dense(rows: &[Vec<i64>]) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        let triplets = rows.iter().enumerate().flat_map(|(i, row)| {
            assert_eq!(row.len(), ncols, "ragged rows");
            row.iter().enumerate().filter(|(_, &v)| v != 0).map(move |(j, &v)| (i, j, IBig::from(v)))
        });
        Self::from_triplets(nrows, ncols, triplets)
    }

    pub fn identity(n: usize) -> Self {
        Self::from_triplets(n, n, (0..n).map(|i| (i, i, IBig::from(1u8))))
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[(usize, usize, IBig)] {
        &self.entries
    }

    pub fn get(&self, row: usize, col: usize) -> IBig {
        self.entries
            .binary_search_by(|e| (e.0, e.1).cmp(&(row, col)))
            .map(|i| self.entries[i].2.clone())
            .unwrap_or_else(|_| IBig::from(0u8))
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn transpose(&self) -> Self {
        Self::from_triplets(self.cols, self.rows, self.entries.iter().map(|(r, c, v)| (*c, *r, v.clone())))
    }

    pub fn to_dense(&self) -> Vec<Vec<IBig>> {
        let mut out = vec![vec![IBig::from(0u8); self.cols]; self.rows];
        for (r, c, v) in &self.entries {
            out[*r][*c] = v.clone();
        }
        out
    }

    /// `self · other`, or `None` on a shape mismatch.
    pub fn mul(&self, other: &IntMatrix) -> Option<IntMatrix> {
        if self.cols != other.rows {
            return None;
        }
        // Row-start offsets of `other`.
        let mut starts = vec![0usize; other.rows + 1];
        for (r, _, _) in &other.entries {
            starts[r + 1] += 1;
        }
        for i in 0..other.rows {
            starts[i + 1] += starts[i];
        }
        let mut out = Vec::new();
        for (r, k, a) in &self.entries {
            for (_, c, b) in &other.entries[starts[*k]..starts[*k + 1]] {
                out.push((*r, *c, a * b));
            }
        }
        Some(IntMatrix::from_triplets(self.rows, other.cols, out))
    }

    /// Rows as sorted `(col, value)` lists.
    pub(crate) fn to_rows(&self) -> Vec<Vec<(u32, IBig)>> {
        let mut rows = vec![Vec::new(); self.rows];
        for (r, c, v) in &self.entries {
            rows[*r].push((*c as u32, v.clone()));
        }
        rows
    }
}
