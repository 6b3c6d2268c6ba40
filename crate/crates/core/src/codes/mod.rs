//! Linear codes over GF(q), their construction, subcode enumeration and the
//! brute-force spectra oracle.

mod construct;
mod spectra;
mod subspace;

use std::collections::BTreeMap;

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::exactalg::{FFMatrix, FieldElement, FiniteField};
use crate::support::{Support, MAX_POINTS};

pub use construct::{build_prm, build_rm, build_rm1m, build_rm22, extend_code, monomials, projective_points};
pub use spectra::{brute_force_spectra, SpectrumTable};
pub use subspace::{for_each_subspace, pivot_patterns, SubcodeIterator};

/// Enumeration limits; defaults follow the documented budgets.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    /// Subspaces enumerated per dimension.
    pub subspaces: u64,
    /// Codewords enumerated per code.
    pub codewords: u64,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            subspaces: 100_000_000,
            codewords: 1 << 24,
        }
    }
}

#[derive(Clone, Debug)]
pub struct LinearCode {
    field: FiniteField,
    generator: FFMatrix,
    label: Option<String>,
    points: Vec<Vec<FieldElement>>,
}

impl LinearCode {
    /// Wraps a full-row-rank generator matrix. `points` may be empty for codes
    /// that are not evaluation codes.
    pub fn new(
        generator: FFMatrix,
        label: Option<String>,
        points: Vec<Vec<FieldElement>>,
    ) -> Result<Self> {
        if generator.rank() != generator.rows() {
            return Err(Error::OutOfRange("generator matrix must have full row rank".into()));
        }
        if !points.is_empty() && points.len() != generator.cols() {
            return Err(Error::OutOfRange("one evaluation point per coordinate".into()));
        }
        Ok(LinearCode {
            field: generator.field().clone(),
            generator,
            label,
            points,
        })
    }

    pub fn field(&self) -> &FiniteField {
        &self.field
    }

    pub fn generator(&self) -> &FFMatrix {
        &self.generator
    }

    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    pub fn points(&self) -> &[Vec<FieldElement>] {
        &self.points
    }

    pub fn length(&self) -> usize {
        self.generator.cols()
    }

    pub fn dimension(&self) -> usize {
        self.generator.rows()
    }

    /// Number of codewords, if it fits in a u64.
    pub fn size(&self) -> Option<u64> {
        (self.field.order() as u64).checked_pow(self.dimension() as u32)
    }

    pub fn encode(&self, msg: &[FieldElement]) -> Vec<FieldElement> {
        assert_eq!(msg.len(), self.dimension());
        let f = &self.field;
        (0..self.length())
            .map(|c| {
                msg.iter().enumerate().fold(FieldElement::ZERO, |acc, (r, &m)| {
                    f.add(acc, f.mul(m, self.generator.get(r, c)))
                })
            })
            .collect()
    }

    /// Message vector for index `Σ m_i q^i`.
    pub fn message(&self, mut idx: usize) -> Vec<FieldElement> {
        let q = self.field.order() as usize;
        (0..self.dimension())
            .map(|_| {
                let d = idx % q;
                idx /= q;
                self.field.element(d as u32)
            })
            .collect()
    }

    /// Support of every codeword, indexed by message index `Σ m_i q^i`.
    pub fn message_supports(&self, budget: &Budget) -> Result<Vec<Support>> {
        if self.length() > MAX_POINTS {
            return Err(Error::TooLarge {
                what: format!("code length {}", self.length()),
                limit: MAX_POINTS as u64,
            });
        }
        self.check_size(budget)?;
        let k = self.dimension();
        if k == 0 {
            return Ok(vec![0]);
        }
        let q = self.field.order() as usize;
        let block = q.pow(k as u32 - 1);
        let parts = self.scan(
            || vec![0 as Support; block],
            |out, idx, word| {
                out[idx] = word
                    .iter()
                    .enumerate()
                    .filter(|(_, x)| !x.is_zero())
                    .fold(0, |acc, (i, _)| acc | (1u128 << i));
            },
        );
        Ok(parts.into_iter().flatten().collect())
    }

    /// Codeword counts by Hamming weight.
    pub fn weight_distribution(&self, budget: &Budget) -> Result<BTreeMap<usize, BigInt>> {
        self.check_size(budget)?;
        if self.dimension() == 0 {
            return Ok(BTreeMap::from([(0, BigInt::from(1))]));
        }
        let n = self.length();
        let parts = self.scan(
            || vec![0u64; n + 1],
            |hist, _, word| hist[word.iter().filter(|x| !x.is_zero()).count()] += 1,
        );
        let mut total = vec![0u64; n + 1];
        for h in parts {
            for (t, v) in total.iter_mut().zip(h) {
                *t += v;
            }
        }
        Ok(total
            .into_iter()
            .enumerate()
            .filter(|&(_, c)| c > 0)
            .map(|(w, c)| (w, BigInt::from(c)))
            .collect())
    }

    fn check_size(&self, budget: &Budget) -> Result<()> {
        match self.size() {
            Some(s) if s <= budget.codewords => Ok(()),
            _ => Err(Error::TooLarge {
                what: format!("{}^{} codewords", self.field.order(), self.dimension()),
                limit: budget.codewords,
            }),
        }
    }

    /// Visits every codeword once, in parallel over the last message coordinate.
    /// The visitor receives the message index within its block of size q^(k-1).
    fn scan<T, I, V>(&self, init: I, visit: V) -> Vec<T>
    where
        T: Send,
        I: Fn() -> T + Sync,
        V: Fn(&mut T, usize, &[FieldElement]) + Sync,
    {
        let f = &self.field;
        let k = self.dimension();
        let n = self.length();
        let q = f.order() as usize;
        // multiples[r][a] = a · row_r
        let multiples: Vec<Vec<Vec<FieldElement>>> = (0..k)
            .map(|r| {
                f.elements()
                    .map(|a| self.generator.row(r).iter().map(|&g| f.mul(a, g)).collect())
                    .collect()
            })
            .collect();
        (0..q)
            .into_par_iter()
            .map(|top| {
                let mut state = init();
                let mut bufs = vec![vec![FieldElement::ZERO; n]; k];
                bufs[k - 1].clone_from(&multiples[k - 1][top]);
                fn rec<T>(
                    level: usize,
                    idx: usize,
                    q: usize,
                    f: &FiniteField,
                    multiples: &[Vec<Vec<FieldElement>>],
                    bufs: &mut [Vec<FieldElement>],
                    state: &mut T,
                    visit: &dyn Fn(&mut T, usize, &[FieldElement]),
                ) {
                    if level == 0 {
                        visit(state, idx, &bufs[0]);
                        return;
                    }
                    let l = level - 1;
                    let stride = q.pow(l as u32);
                    for a in 0..q {
                        let (lo, hi) = bufs.split_at_mut(level);
                        for ((dst, &src), &m) in lo[l].iter_mut().zip(&hi[0]).zip(&multiples[l][a]) {
                            *dst = f.add(src, m);
                        }
                        rec(l, idx + a * stride, q, f, multiples, bufs, state, visit);
                    }
                }
                rec(k - 1, 0, q, f, &multiples, &mut bufs, &mut state, &visit);
                state
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn weight_distribution_of_full_binary_space() {
        let c = build_rm22(2).unwrap();
        let wd = c.weight_distribution(&Budget::default()).unwrap();
        let expected: BTreeMap<usize, BigInt> =
            [(0, 1), (1, 4), (2, 6), (3, 4), (4, 1)].into_iter().map(|(w, c)| (w, BigInt::from(c))).collect();
        assert_eq!(wd, expected);
    }

    #[test]
    fn weight_five_words_of_c3() {
        let c = build_rm22(3).unwrap();
        let wd = c.weight_distribution(&Budget::default()).unwrap();
        assert_eq!(wd[&5], BigInt::from(2 * 54));
        assert_eq!(wd.keys().find(|&&w| w > 0), Some(&3));
    }

    #[test]
    fn rm1m_nonzero_weights() {
        let c = build_rm1m(2, 2).unwrap();
        let wd = c.weight_distribution(&Budget::default()).unwrap();
        assert_eq!(wd.keys().copied().collect::<Vec<_>>(), vec![0, 2, 4]);
        let c = build_rm1m(2, 3).unwrap();
        let wd = c.weight_distribution(&Budget::default()).unwrap();
        assert_eq!(wd.keys().find(|&&w| w > 0), Some(&4));
    }

    #[test]
    fn zero_dimensional_code() {
        let f = crate::exactalg::make_field(3, 1).unwrap();
        let c = LinearCode::new(FFMatrix::zeros(&f, 0, 5), None, vec![]).unwrap();
        let wd = c.weight_distribution(&Budget::default()).unwrap();
        assert_eq!(wd, BTreeMap::from([(0, BigInt::from(1))]));
    }

    #[test]
    fn supports_table_matches_encode() {
        let c = build_rm22(3).unwrap();
        let table = c.message_supports(&Budget::default()).unwrap();
        for idx in [0usize, 1, 7, 100, 728] {
            let word = c.encode(&c.message(idx));
            let s = crate::support::from_indices(
                word.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(i, _)| i),
            );
            assert_eq!(table[idx], s);
        }
    }

    #[test]
    fn budget_is_enforced() {
        let c = build_rm22(3).unwrap();
        let tight = Budget { codewords: 100, ..Budget::default() };
        assert!(matches!(c.weight_distribution(&tight), Err(Error::TooLarge { .. })));
    }
}
