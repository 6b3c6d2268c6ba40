//! Enumeration of r-dimensional subspaces of GF(q)^k through their reduced row
//! echelon forms: a pivot pattern plus an assignment of the free entries.
//!
//! A row vector `(a_0, ..., a_{k-1})` is encoded as `Σ a_c q^c`, matching the
//! message indexing of [`super::LinearCode::message_supports`].

use crate::exactalg::{FFMatrix, FiniteField};

/// All r-subsets of `0..k` in lexicographic order.
pub fn pivot_patterns(k: usize, r: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, k: usize, r: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == r {
            out.push(cur.clone());
            return;
        }
        for c in start..=k - (r - cur.len()) {
            cur.push(c);
            rec(c + 1, k, r, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if r <= k {
        rec(0, k, r, &mut Vec::new(), &mut out);
    }
    out
}

/// Free (row, column) slots of the RREF with the given pivots, row by row.
pub(crate) fn free_slots(k: usize, pivots: &[usize]) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for (i, &p) in pivots.iter().enumerate() {
        for c in p + 1..k {
            if !pivots.contains(&c) {
                out.push((i, c));
            }
        }
    }
    out
}

/// Calls `f` with the encoded rows of every r-dimensional subspace of GF(q)^k.
pub fn for_each_subspace<F: FnMut(&[usize])>(q: usize, k: usize, r: usize, mut f: F) {
    let powers: Vec<usize> = (0..k).map(|c| q.pow(c as u32)).collect();
    for pivots in pivot_patterns(k, r) {
        let slots = free_slots(k, &pivots);
        let mut rows: Vec<usize> = pivots.iter().map(|&p| powers[p]).collect();
        let mut digits = vec![0usize; slots.len()];
        loop {
            f(&rows);
            // odometer, last slot fastest
            let mut exhausted = true;
            for s in (0..slots.len()).rev() {
                let (row, col) = slots[s];
                if digits[s] + 1 < q {
                    digits[s] += 1;
                    rows[row] += powers[col];
                    exhausted = false;
                    break;
                }
                rows[row] -= digits[s] * powers[col];
                digits[s] = 0;
            }
            if exhausted {
                break;
            }
        }
    }
}

/// Iterator over canonical RREF generator matrices of the r-dimensional
/// subspaces of GF(q)^k.
pub struct SubcodeIterator {
    field: FiniteField,
    k: usize,
    r: usize,
    patterns: Vec<Vec<usize>>,
    pattern: usize,
    slots: Vec<(usize, usize)>,
    digits: Vec<u32>,
    fresh: bool,
}

impl SubcodeIterator {
    pub fn new(field: &FiniteField, k: usize, r: usize) -> Self {
        let patterns = pivot_patterns(k, r);
        let slots = patterns.first().map_or_else(Vec::new, |p| free_slots(k, p));
        SubcodeIterator {
            field: field.clone(),
            k,
            r,
            digits: vec![0; slots.len()],
            patterns,
            pattern: 0,
            slots,
            fresh: true,
        }
    }

    fn current(&self) -> FFMatrix {
        let pivots = &self.patterns[self.pattern];
        let mut m = FFMatrix::zeros(&self.field, self.r, self.k);
        for (i, &p) in pivots.iter().enumerate() {
            m.set(i, p, self.field.element(1));
        }
        for (&(row, col), &d) in self.slots.iter().zip(&self.digits) {
            m.set(row, col, self.field.element(d));
        }
        m
    }

    fn advance(&mut self) -> bool {
        let q = self.field.order();
        for s in (0..self.slots.len()).rev() {
            if self.digits[s] + 1 < q {
                self.digits[s] += 1;
                return true;
            }
            self.digits[s] = 0;
        }
        self.pattern += 1;
        if self.pattern >= self.patterns.len() {
            return false;
        }
        self.slots = free_slots(self.k, &self.patterns[self.pattern]);
        self.digits = vec![0; self.slots.len()];
        true
    }
}

impl Iterator for SubcodeIterator {
    type Item = FFMatrix;

    fn next(&mut self) -> Option<FFMatrix> {
        if self.pattern >= self.patterns.len() {
            return None;
        }
        if self.fresh {
            self.fresh = false;
        } else if !self.advance() {
            return None;
        }
        Some(self.current())
    }
}

#[cfg(test)]
mod tests {
    use std::collections::HashSet;

    use super::*;
    use crate::exactalg::{gaussian_binomial, make_field};

    #[test]
    fn iterator_counts_and_canonical_forms() {
        for (p, e, k, r) in [(2, 1, 4, 2), (3, 1, 4, 2), (2, 2, 3, 1), (3, 1, 3, 3), (5, 1, 3, 0)] {
            let f = make_field(p, e).unwrap();
            let mut seen = HashSet::new();
            for m in SubcodeIterator::new(&f, k, r) {
                assert_eq!(m.rref().0, m);
                let key: Vec<u32> = (0..r).flat_map(|i| m.row(i).iter().map(|x| x.value()).collect::<Vec<_>>()).collect();
                assert!(seen.insert(key));
            }
            let q = f.order() as u64;
            assert_eq!(seen.len().to_string(), gaussian_binomial(k as u32, r as u32, q).unwrap().to_string());
        }
    }

    #[test]
    fn callback_enumeration_matches_iterator() {
        let f = make_field(3, 1).unwrap();
        let q = 3usize;
        let mut from_cb = Vec::new();
        for_each_subspace(q, 4, 2, |rows| from_cb.push(rows.to_vec()));
        let from_iter: Vec<Vec<usize>> = SubcodeIterator::new(&f, 4, 2)
            .map(|m| {
                (0..2)
                    .map(|i| m.row(i).iter().enumerate().map(|(c, x)| x.value() as usize * q.pow(c as u32)).sum())
                    .collect()
            })
            .collect();
        assert_eq!(from_cb, from_iter);
    }
}
