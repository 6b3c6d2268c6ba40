use std::fmt;

use crate::exactalg::field::{FieldElement, FiniteField};

/// Dense row-major matrix over a finite field.
#[derive(Clone, PartialEq, Eq)]
pub struct FFMatrix {
    field: FiniteField,
    rows: usize,
    cols: usize,
    data: Vec<FieldElement>,
}

impl fmt::Debug for FFMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{:?} {}x{}", self.field, self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<u32> = self.row(r).iter().map(|x| x.value()).collect();
            writeln!(f, "  {row:?}")?;
        }
        Ok(())
    }
}

impl FFMatrix {
    pub fn zeros(field: &FiniteField, rows: usize, cols: usize) -> Self {
        FFMatrix {
            field: field.clone(),
            rows,
            cols,
            data: vec![FieldElement::ZERO; rows * cols],
        }
    }

    pub fn identity(field: &FiniteField, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, FieldElement::ONE);
        }
        m
    }

    /// Builds a matrix from encoded entries; all rows must have equal length.
    pub fn from_rows(field: &FiniteField, rows: &[Vec<u32>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        let mut m = Self::zeros(field, rows.len(), cols);
        for (r, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), cols, "ragged row {r}");
            for (c, &v) in row.iter().enumerate() {
                m.set(r, c, field.element(v));
            }
        }
        m
    }

    pub fn field(&self) -> &FiniteField {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> FieldElement {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: FieldElement) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[FieldElement] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<FieldElement> {
        (0..self.rows).map(|r| self.get(r, c)).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(&self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c));
            }
        }
        t
    }

    /// Matrix with the rows of `self` followed by the rows of `other`.
    pub fn stack(&self, other: &FFMatrix) -> Self {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        FFMatrix {
            field: self.field.clone(),
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn select_columns(&self, cols: &[usize]) -> Self {
        let mut m = Self::zeros(&self.field, self.rows, cols.len());
        for r in 0..self.rows {
            for (i, &c) in cols.iter().enumerate() {
                m.set(r, i, self.get(r, c));
            }
        }
        m
    }

    pub fn mul(&self, other: &FFMatrix) -> Self {
        assert_eq!(self.cols, other.rows);
        let f = &self.field;
        let mut out = Self::zeros(f, self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let v = f.add(out.get(r, c), f.mul(a, other.get(k, c)));
                    out.set(r, c, v);
                }
            }
        }
        out
    }

    /// Reduced row echelon form, rank and pivot columns.
    pub fn rref(&self) -> (FFMatrix, usize, Vec<usize>) {
        let f = &self.field;
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut rank = 0;
        for c in 0..m.cols {
            if rank == m.rows {
                break;
            }
            let Some(pr) = (rank..m.rows).find(|&r| !m.get(r, c).is_zero()) else {
                continue;
            };
            m.swap_rows(pr, rank);
            let inv = f.inv(m.get(rank, c));
            for cc in c..m.cols {
                let v = f.mul(m.get(rank, cc), inv);
                m.set(rank, cc, v);
            }
            for r in 0..m.rows {
                let factor = m.get(r, c);
                if r == rank || factor.is_zero() {
                    continue;
                }
                for cc in c..m.cols {
                    let v = f.sub(m.get(r, cc), f.mul(factor, m.get(rank, cc)));
                    m.set(r, cc, v);
                }
            }
            pivots.push(c);
            rank += 1;
        }
        (m, rank, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::make_field;

    #[test]
    fn identity_has_full_rank() {
        let f = make_field(5, 1).unwrap();
        assert_eq!(FFMatrix::identity(&f, 3).rank(), 3);
    }

    #[test]
    fn zero_matrix_has_rank_zero() {
        let f = make_field(5, 1).unwrap();
        let (_, rank, pivots) = FFMatrix::zeros(&f, 2, 4).rref();
        assert_eq!(rank, 0);
        assert!(pivots.is_empty());
    }

    #[test]
    fn rref_example_over_gf3() {
        let f = make_field(3, 1).unwrap();
        let m = FFMatrix::from_rows(&f, &[vec![1, 2, 0], vec![2, 1, 1]]);
        let (r, rank, pivots) = m.rref();
        assert_eq!(rank, 2);
        assert_eq!(pivots, vec![0, 2]);
        assert_eq!(r, FFMatrix::from_rows(&f, &[vec![1, 2, 0], vec![0, 0, 1]]));
    }
}
