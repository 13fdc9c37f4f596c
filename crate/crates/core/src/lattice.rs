//! Integer column lattices and canonical coset representatives.

use alloc::vec::Vec;

/// A sublattice of `ℤ^n` kept as an echelon basis: pivot `k` sits in row
/// `rows[k]` with a positive entry, and every basis column is zero above
/// its pivot row.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub(crate) struct Lattice {
    dim: usize,
    basis: Vec<(usize, Vec<i64>)>,
}

impl Lattice {
    /// Lattice spanned by `columns`, each of length `dim`.
    pub(crate) fn span(dim: usize, columns: Vec<Vec<i64>>) -> Self {
        let mut pending: Vec<Vec<i64>> = columns.into_iter().filter(|c| c.iter().any(|&x| x != 0)).collect();
        let mut basis = Vec::new();
        for row in 0..dim {
            // Euclid across the columns that are nonzero in this row.
            loop {
                let mut live: Vec<usize> = (0..pending.len()).filter(|&k| pending[k][row] != 0).collect();
                if live.len() <= 1 {
                    break;
                }
                live.sort_by_key(|&k| pending[k][row].unsigned_abs());
                let p = live[0];
                let pivot = pending[p].clone();
                for &k in &live[1..] {
                    let q = pending[k][row].div_euclid(pivot[row]);
                    for (x, y) in pending[k].iter_mut().zip(&pivot) {
                        *x -= q * y;
                    }
                }
                pending.retain(|c| c.iter().any(|&x| x != 0));
            }
            if let Some(k) = pending.iter().position(|c| c[row] != 0) {
                let mut col = pending.swap_remove(k);
                if col[row] < 0 {
                    col.iter_mut().for_each(|x| *x = -*x);
                }
                basis.push((row, col));
            }
        }
        Lattice { dim, basis }
    }

    /// Canonical representative of `v + L`: each pivot row reduced into `[0, pivot)`.
    pub(crate) fn reduce(&self, v: &[i64]) -> Vec<i64> {
        debug_assert_eq!(v.len(), self.dim);
        let mut v = v.to_vec();
        for (row, col) in &self.basis {
            let q = v[*row].div_euclid(col[*row]);
            if q != 0 {
                for (x, y) in v.iter_mut().zip(col) {
                    *x -= q * y;
                }
            }
        }
        v
    }

    #[cfg(test)]
    pub(crate) fn rank(&self) -> usize {
        self.basis.len()
    }
}
