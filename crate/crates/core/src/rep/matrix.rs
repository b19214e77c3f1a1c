use std::collections::BTreeMap;

use crate::ring::Ring;

/// A square sparse matrix stored column by column.
///
/// Column `c` lists `(row, value)` pairs sorted by row, zeros never stored.
/// Matrices act on column vectors: `M e_c = sum_r M[r][c] e_r`.
#[derive(Clone, Debug, PartialEq)]
pub struct SparseMatrix<S> {
    dim: usize,
    columns: Vec<Vec<(usize, S)>>,
}

impl<S: Ring> SparseMatrix<S> {
    pub fn zero(dim: usize) -> Self {
        SparseMatrix {
            dim,
            columns: vec![Vec::new(); dim],
        }
    }

    pub fn identity(dim: usize, one: &S) -> Self {
        Self::diagonal((0..dim).map(|_| one.clone()).collect())
    }

    pub fn diagonal(values: Vec<S>) -> Self {
        let dim = values.len();
        let columns = values
            .into_iter()
            .enumerate()
            .map(|(i, v)| if v.is_zero() { vec![] } else { vec![(i, v)] })
            .collect();
        SparseMatrix { dim, columns }
    }

    /// Builds from `(row, col, value)` triplets. Repeated positions are summed.
    ///
    /// Panics if an index is out of range.
    pub fn from_triplets<I: IntoIterator<Item = (usize, usize, S)>>(dim: usize, triplets: I) -> Self {
        let mut cols: Vec<BTreeMap<usize, S>> = vec![BTreeMap::new(); dim];
        for (r, c, v) in triplets {
            assert!(r < dim && c < dim, "entry ({r}, {c}) outside a {dim}x{dim} matrix");
            match cols[c].get_mut(&r) {
                Some(x) => x.add_assign_ref(&v),
                None => {
                    cols[c].insert(r, v);
                }
            }
        }
        let columns = cols
            .into_iter()
            .map(|m| m.into_iter().filter(|(_, v)| !v.is_zero()).collect())
            .collect();
        SparseMatrix { dim, columns }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn column(&self, c: usize) -> &[(usize, S)] {
        &self.columns[c]
    }

    pub fn get(&self, row: usize, col: usize) -> Option<&S> {
        let column = &self.columns[col];
        column
            .binary_search_by_key(&row, |(r, _)| *r)
            .ok()
            .map(|i| &column[i].1)
    }

    pub fn nnz(&self) -> usize {
        self.columns.iter().map(Vec::len).sum()
    }

    /// `(row, col, value)` in row-major order.
    pub fn triplets(&self) -> Vec<(usize, usize, &S)> {
        let mut v: Vec<(usize, usize, &S)> = self
            .columns
            .iter()
            .enumerate()
            .flat_map(|(c, col)| col.iter().map(move |(r, x)| (*r, c, x)))
            .collect();
        v.sort_by_key(|(r, c, _)| (*r, *c));
        v
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(Vec::is_empty)
    }

    pub fn transpose(&self) -> Self {
        Self::from_triplets(self.dim, self.triplets().into_iter().map(|(r, c, v)| (c, r, v.clone())))
    }

    pub fn map<T: Ring>(&self, f: impl Fn(&S) -> T) -> SparseMatrix<T> {
        SparseMatrix::from_triplets(self.dim, self.triplets().into_iter().map(|(r, c, v)| (r, c, f(v))))
    }

    pub fn scale(&self, s: &S) -> Self {
        self.map(|v| v.mul_ref(s))
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!(self.dim, rhs.dim);
        Self::from_triplets(
            self.dim,
            self.triplets()
                .into_iter()
                .chain(rhs.triplets())
                .map(|(r, c, v)| (r, c, v.clone())),
        )
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.map(|v| v.neg_ref()))
    }

    /// The composition `self ∘ rhs` (apply `rhs` first).
    pub fn compose(&self, rhs: &Self) -> Self {
        assert_eq!(self.dim, rhs.dim);
        let columns = rhs
            .columns
            .iter()
            .map(|col| {
                let mut acc: BTreeMap<usize, S> = BTreeMap::new();
                for (k, b) in col {
                    for (r, a) in &self.columns[*k] {
                        match acc.get_mut(r) {
                            Some(x) => x.add_mul_assign(a, b),
                            None => {
                                acc.insert(*r, a.mul_ref(b));
                            }
                        }
                    }
                }
                acc.into_iter().filter(|(_, v)| !v.is_zero()).collect()
            })
            .collect();
        SparseMatrix { dim: self.dim, columns }
    }

    /// `self ⊗ id_k` on `V ⊗ W`, `dim W = k`, basis index `i * k + x`.
    pub fn kron_identity_right(&self, k: usize, one: &S) -> Self {
        Self::from_triplets(
            self.dim * k,
            self.triplets()
                .into_iter()
                .flat_map(|(r, c, v)| (0..k).map(move |x| (r * k + x, c * k + x, v.clone())))
                .map(|(r, c, v)| (r, c, v.mul_ref(one))),
        )
    }

    /// `id_k ⊗ self`, basis index `x * dim + i`.
    pub fn kron_identity_left(&self, k: usize, one: &S) -> Self {
        let d = self.dim;
        Self::from_triplets(
            d * k,
            self.triplets()
                .into_iter()
                .flat_map(|(r, c, v)| (0..k).map(move |x| (x * d + r, x * d + c, v.clone())))
                .map(|(r, c, v)| (r, c, v.mul_ref(one))),
        )
    }

    /// Row-major grid of entry strings, `0` for missing entries.
    pub fn dump(&self) -> String {
        let mut grid = vec![vec!["0".to_string(); self.dim]; self.dim];
        for (r, c, v) in self.triplets() {
            grid[r][c] = v.to_string();
        }
        grid.into_iter()
            .map(|row| row.join("\t"))
            .collect::<Vec<_>>()
            .join("\n")
    }
}
