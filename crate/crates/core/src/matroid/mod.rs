//! The parity-check matroid of a linear code, its elongations, cycles, Möbius
//! values and graded Betti numbers.
//!
//! Nullity is computed from the generator matrix: n(σ) = k − rank(G|E∖σ), the
//! dimension of the subcode supported inside σ.

mod betti;
mod inventory;
mod mobius;

use std::sync::Arc;

use crate::codes::{Budget, LinearCode};
use crate::error::{Error, Result};
use crate::exactalg::{FieldElement, FiniteField};
use crate::support::{self, Support, MAX_POINTS};

pub use betti::{betti_table, phi_profile, table_from_mobius, BettiTable, PhiProfile};
pub use inventory::{cycle_inventory, Cycle, CycleInventory, InventoryMethod};
pub use mobius::{euler_betti, mobius, MobiusStrategy, MobiusTable};

/// Message tables are only built up to this many codewords.
const SUPPORT_TABLE_LIMIT: u64 = 1 << 22;

struct Core {
    field: FiniteField,
    n: usize,
    k: usize,
    /// Generator rows, used to encode messages.
    rows: Vec<Vec<FieldElement>>,
    /// Generator columns, used for rank computations.
    columns: Vec<Vec<FieldElement>>,
    supports: Option<Vec<Support>>,
}

#[derive(Clone)]
pub struct Matroid {
    core: Arc<Core>,
    ell: usize,
}

impl std::fmt::Debug for Matroid {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Matroid(n={}, k={}, ell={})", self.core.n, self.core.k, self.ell)
    }
}

impl Matroid {
    pub fn from_code(c: &LinearCode) -> Result<Matroid> {
        let n = c.length();
        if n > MAX_POINTS {
            return Err(Error::TooLarge {
                what: format!("ground set of {n} points"),
                limit: MAX_POINTS as u64,
            });
        }
        let g = c.generator();
        let rows = (0..g.rows()).map(|r| g.row(r).to_vec()).collect();
        let columns = (0..n).map(|col| g.column(col)).collect();
        let table_budget = Budget {
            codewords: SUPPORT_TABLE_LIMIT,
            ..Budget::default()
        };
        let supports = c.message_supports(&table_budget).ok();
        Ok(Matroid {
            core: Arc::new(Core {
                field: c.field().clone(),
                n,
                k: c.dimension(),
                rows,
                columns,
                supports,
            }),
            ell: 0,
        })
    }

    /// The ℓ-th elongation of the underlying base matroid.
    pub fn elongate(&self, ell: usize) -> Result<Matroid> {
        if ell > self.core.k {
            return Err(Error::OutOfRange(format!(
                "elongation {ell} exceeds n(E) = {}",
                self.core.k
            )));
        }
        Ok(Matroid {
            core: self.core.clone(),
            ell,
        })
    }

    pub fn elongation(&self) -> usize {
        self.ell
    }

    pub fn ground_size(&self) -> usize {
        self.core.n
    }

    pub fn ground_set(&self) -> Support {
        support::full(self.core.n)
    }

    /// Dimension k of the backing code, the base nullity of E.
    pub fn code_dimension(&self) -> usize {
        self.core.k
    }

    pub fn field(&self) -> &FiniteField {
        &self.core.field
    }

    /// Nullity of σ at this matroid's elongation level.
    pub fn nullity(&self, sigma: Support) -> usize {
        self.base_nullity(sigma).saturating_sub(self.ell)
    }

    pub fn base_nullity(&self, sigma: Support) -> usize {
        self.core.k - self.column_rank(self.ground_set() & !sigma)
    }

    pub fn rank(&self, sigma: Support) -> usize {
        support::size(sigma) - self.nullity(sigma)
    }

    /// n(σ∪τ) + n(σ∩τ) ≥ n(σ) + n(τ).
    pub fn is_semimodular_on(&self, a: Support, b: Support) -> bool {
        self.nullity(a | b) + self.nullity(a & b) >= self.nullity(a) + self.nullity(b)
    }

    /// Rank of the generator columns indexed by `set`.
    pub fn column_rank(&self, set: Support) -> usize {
        let k = self.core.k;
        let f = &self.core.field;
        let mut basis: Vec<(usize, Vec<FieldElement>)> = Vec::with_capacity(k);
        for p in support::indices(set) {
            if basis.len() == k {
                break;
            }
            let mut v = self.core.columns[p].clone();
            for (pivot, b) in &basis {
                let c = v[*pivot];
                if !c.is_zero() {
                    for (x, &y) in v.iter_mut().zip(b) {
                        *x = f.sub(*x, f.mul(c, y));
                    }
                }
            }
            if let Some(pivot) = v.iter().position(|x| !x.is_zero()) {
                let inv = f.inv(v[pivot]);
                for x in v.iter_mut() {
                    *x = f.mul(*x, inv);
                }
                basis.push((pivot, v));
            }
        }
        basis.len()
    }

    /// Basis (as message vectors) of the subcode C(σ) of codewords supported in σ.
    pub fn subcode_basis(&self, sigma: Support) -> Vec<Vec<FieldElement>> {
        self.annihilator(self.ground_set() & !sigma)
    }

    /// Messages m with m·g_p = 0 for every column p in `set`.
    pub(crate) fn annihilator(&self, set: Support) -> Vec<Vec<FieldElement>> {
        let k = self.core.k;
        let f = &self.core.field;
        // RREF of the matrix whose rows are the selected columns
        let mut rows: Vec<Vec<FieldElement>> = Vec::new();
        let mut pivots: Vec<usize> = Vec::new();
        for p in support::indices(set) {
            if rows.len() == k {
                break;
            }
            let mut v = self.core.columns[p].clone();
            for (r, &pc) in rows.iter().zip(&pivots) {
                let c = v[pc];
                if !c.is_zero() {
                    for (x, &y) in v.iter_mut().zip(r) {
                        *x = f.sub(*x, f.mul(c, y));
                    }
                }
            }
            let Some(pc) = v.iter().position(|x| !x.is_zero()) else {
                continue;
            };
            let inv = f.inv(v[pc]);
            for x in v.iter_mut() {
                *x = f.mul(*x, inv);
            }
            for r in rows.iter_mut() {
                let c = r[pc];
                if !c.is_zero() {
                    for (x, &y) in r.iter_mut().zip(&v) {
                        *x = f.sub(*x, f.mul(c, y));
                    }
                }
            }
            rows.push(v);
            pivots.push(pc);
        }
        (0..k)
            .filter(|c| !pivots.contains(c))
            .map(|free| {
                let mut b = vec![FieldElement::ZERO; k];
                b[free] = FieldElement::ONE;
                for (r, &pc) in rows.iter().zip(&pivots) {
                    b[pc] = f.neg(r[free]);
                }
                b
            })
            .collect()
    }

    /// Support of the codeword with the given message.
    pub fn codeword_support(&self, msg: &[FieldElement]) -> Support {
        let core = &*self.core;
        if let Some(table) = &core.supports {
            let q = core.field.order() as usize;
            let idx = msg.iter().rev().fold(0usize, |acc, x| acc * q + x.value() as usize);
            return table[idx];
        }
        let f = &core.field;
        let mut s: Support = 0;
        for c in 0..core.n {
            let v = msg
                .iter()
                .zip(&core.rows)
                .fold(FieldElement::ZERO, |acc, (&m, row)| f.add(acc, f.mul(m, row[c])));
            if !v.is_zero() {
                s |= 1u128 << c;
            }
        }
        s
    }

    pub(crate) fn dot_column(&self, msg: &[FieldElement], p: usize) -> FieldElement {
        let f = &self.core.field;
        msg.iter()
            .zip(&self.core.columns[p])
            .fold(FieldElement::ZERO, |acc, (&a, &b)| f.add(acc, f.mul(a, b)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codes::build_rm22;
    use crate::support::from_indices;

    fn line_y0(q: usize) -> Support {
        // points (x, 0) sit at index x * q
        from_indices((0..q).map(|x| x * q))
    }

    #[test]
    fn c3_total_nullity() {
        let m = Matroid::from_code(&build_rm22(3).unwrap()).unwrap();
        assert_eq!(m.nullity(m.ground_set()), 6);
        assert_eq!(m.nullity(0), 0);
    }

    #[test]
    fn c2_is_all_loops() {
        let m = Matroid::from_code(&build_rm22(2).unwrap()).unwrap();
        for s in 0u128..16 {
            assert_eq!(m.nullity(s), s.count_ones() as usize);
        }
        let free = m.elongate(4).unwrap();
        assert!((0u128..16).all(|s| free.nullity(s) == 0));
    }

    #[test]
    fn line_complement_and_point_complement() {
        let m = Matroid::from_code(&build_rm22(3).unwrap()).unwrap();
        let sigma = m.ground_set() & !line_y0(3);
        assert_eq!(support::size(sigma), 6);
        assert_eq!(m.nullity(sigma), 3);
        assert_eq!(m.elongate(2).unwrap().nullity(sigma), 1);
        assert_eq!(m.nullity(m.ground_set() & !1), 5);
    }

    #[test]
    fn elongation_bounds() {
        let m = Matroid::from_code(&build_rm22(3).unwrap()).unwrap();
        assert!(m.elongate(7).is_err());
        let e0 = m.elongate(0).unwrap();
        for s in [0u128, 5, 0x1ff, 0x0f0] {
            assert_eq!(e0.nullity(s), m.nullity(s));
        }
    }

    #[test]
    fn subcode_basis_has_nullity_dimension() {
        let m = Matroid::from_code(&build_rm22(3).unwrap()).unwrap();
        for s in [0x1ffu128, 0x1f0, 0x0ff, 0x155] {
            let basis = m.subcode_basis(s);
            assert_eq!(basis.len(), m.nullity(s));
            for b in &basis {
                assert!(support::is_subset(m.codeword_support(b), s));
            }
        }
    }
}
