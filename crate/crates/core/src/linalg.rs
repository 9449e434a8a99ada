//! Row reduction over the rationals, used to identify affine flats.

use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::rational::Rational;

/// Reduced row echelon form of `rows` with zero rows dropped.
pub(crate) fn rref(mut rows: Vec<Vec<Rational>>) -> Vec<Vec<Rational>> {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut pivot_row = 0;
    for col in 0..ncols {
        let Some(found) = (pivot_row..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(pivot_row, found);
        let inv = Rational::one() / &rows[pivot_row][col];
        for v in rows[pivot_row].iter_mut() {
            *v = &*v * &inv;
        }
        let pivot = rows[pivot_row].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r == pivot_row || row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for (v, p) in row.iter_mut().zip(&pivot) {
                *v = &*v - &factor * p;
            }
        }
        pivot_row += 1;
        if pivot_row == rows.len() {
            break;
        }
    }
    rows.retain(|row| row.iter().any(|v| !v.is_zero()));
    rows
}

/// Canonical description of a nonempty affine subspace `{x : A x = b}`: the
/// reduced echelon form of the augmented matrix `[A | b]`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub(crate) struct FlatKey(pub(crate) Vec<Vec<Rational>>);

impl FlatKey {
    /// Intersects the given augmented rows. `None` when the system is inconsistent.
    pub(crate) fn from_rows(rows: Vec<Vec<Rational>>) -> Option<Self> {
        let reduced = rref(rows);
        let inconsistent = reduced.iter().any(|row| {
            let (coeffs, rhs) = row.split_at(row.len() - 1);
            coeffs.iter().all(Zero::is_zero) && !rhs[0].is_zero()
        });
        (!inconsistent).then_some(FlatKey(reduced))
    }

    pub(crate) fn codim(&self) -> usize {
        self.0.len()
    }

    /// Whether the augmented row `row` vanishes on the whole flat, i.e. lies
    /// in the row space.
    pub(crate) fn contains_row(&self, row: &[Rational]) -> bool {
        let mut rows = self.0.clone();
        rows.push(row.to_vec());
        rref(rows).len() == self.0.len()
    }

    pub(crate) fn with_row(&self, row: &[Rational]) -> Option<Self> {
        let mut rows = self.0.clone();
        rows.push(row.to_vec());
        Self::from_rows(rows)
    }
}
