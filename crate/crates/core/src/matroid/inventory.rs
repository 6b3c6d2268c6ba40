//! Inventories of cycles: the inclusion-minimal sets of each nullity.
//!
//! Cycles of nullity j are exactly the supports of the subcodes C(σ) of dimension
//! j, equivalently the complements of the rank-(k−j) flats of the generator
//! columns. Three independent constructions are provided.


use num_traits::ToPrimitive;
use rayon::prelude::*;

use crate::codes::{for_each_subspace, Budget};
use crate::error::{Error, Result};
use crate::exactalg::{gaussian_binomial, FieldElement};
use crate::support::{self, Support, SupportMap, SupportSet};

use super::Matroid;

const SUBSET_SCAN_LIMIT: usize = 25;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum InventoryMethod {
    /// Nullity of every subset; n ≤ 25.
    SubsetScan,
    /// Supports of every subcode; bounded by the subspace budget.
    SubcodeSupports,
    /// Complements of flats, grown rank by rank through closures.
    Flats,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cycle {
    pub support: Support,
    /// Nullity in the base matroid.
    pub nullity: usize,
}

impl Cycle {
    pub fn size(&self) -> usize {
        support::size(self.support)
    }
}

/// All nonempty cycles of a base matroid, sorted by (nullity, size, support).
#[derive(Clone, Debug)]
pub struct CycleInventory {
    n: usize,
    k: usize,
    cycles: Vec<Cycle>,
    index: SupportMap<usize>,
}

impl CycleInventory {
    pub fn from_cycles(n: usize, k: usize, mut cycles: Vec<Cycle>) -> Self {
        cycles.sort_by_key(|c| (c.nullity, c.size(), c.support));
        cycles.dedup();
        let index = cycles.iter().enumerate().map(|(i, c)| (c.support, i)).collect();
        CycleInventory { n, k, cycles, index }
    }

    pub fn ground_size(&self) -> usize {
        self.n
    }

    pub fn code_dimension(&self) -> usize {
        self.k
    }

    pub fn cycles(&self) -> &[Cycle] {
        &self.cycles
    }

    pub fn len(&self) -> usize {
        self.cycles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cycles.is_empty()
    }

    pub fn position(&self, s: Support) -> Option<usize> {
        self.index.get(&s).copied()
    }

    pub fn get(&self, s: Support) -> Option<&Cycle> {
        self.position(s).map(|i| &self.cycles[i])
    }

    /// Cycles of the given base nullity.
    pub fn of_nullity(&self, i: usize) -> &[Cycle] {
        let lo = self.cycles.partition_point(|c| c.nullity < i);
        let hi = self.cycles.partition_point(|c| c.nullity <= i);
        &self.cycles[lo..hi]
    }

    /// Index range of the cycles with base nullity in `lo..=hi`.
    pub fn range_of_nullity(&self, lo: usize, hi: usize) -> std::ops::Range<usize> {
        let a = self.cycles.partition_point(|c| c.nullity < lo);
        let b = self.cycles.partition_point(|c| c.nullity <= hi);
        a..b
    }

    /// Counts keyed by (base nullity, cardinality).
    pub fn census(&self) -> std::collections::BTreeMap<(usize, usize), u64> {
        let mut out = std::collections::BTreeMap::new();
        for c in &self.cycles {
            *out.entry((c.nullity, c.size())).or_insert(0) += 1;
        }
        out
    }

    /// Least cardinality of a cycle of base nullity i (the generalized Hamming weight d_i).
    pub fn min_size(&self, i: usize) -> Option<usize> {
        self.of_nullity(i).iter().map(Cycle::size).min()
    }

    /// Cycles contained in σ, including σ itself when it is a cycle.
    pub fn restricted_to(&self, sigma: Support) -> CycleInventory {
        let cycles = self
            .cycles
            .iter()
            .filter(|c| support::is_subset(c.support, sigma))
            .copied()
            .collect();
        CycleInventory::from_cycles(self.n, self.k, cycles)
    }
}

/// Cycle inventory of the base matroid behind `m`.
pub fn cycle_inventory(m: &Matroid, method: InventoryMethod, budget: &Budget) -> Result<CycleInventory> {
    let cycles = match method {
        InventoryMethod::SubsetScan => subset_scan(m)?,
        InventoryMethod::SubcodeSupports => subcode_supports(m, budget)?,
        InventoryMethod::Flats => flats(m),
    };
    Ok(CycleInventory::from_cycles(m.ground_size(), m.code_dimension(), cycles))
}

fn subset_scan(m: &Matroid) -> Result<Vec<Cycle>> {
    let n = m.ground_size();
    if n > SUBSET_SCAN_LIMIT {
        return Err(Error::TooLarge {
            what: format!("subset scan over {n} points"),
            limit: SUBSET_SCAN_LIMIT as u64,
        });
    }
    let total = 1usize << n;
    let nul: Vec<u8> = (0..total)
        .into_par_iter()
        .map(|s| m.base_nullity(s as Support) as u8)
        .collect();
    Ok((1..total)
        .into_par_iter()
        .filter_map(|s| {
            let i = nul[s];
            let minimal = i > 0 && support::indices(s as Support).all(|e| nul[s ^ (1 << e)] < i);
            minimal.then_some(Cycle {
                support: s as Support,
                nullity: i as usize,
            })
        })
        .collect())
}

fn subcode_supports(m: &Matroid, budget: &Budget) -> Result<Vec<Cycle>> {
    let k = m.code_dimension();
    let q = m.field().order() as usize;
    let mut seen = SupportSet::default();
    let unit: Vec<Support> = (0..q.pow(k as u32))
        .map(|idx| m.codeword_support(&message(idx, q, k)))
        .collect();
    for r in 1..=k {
        let count = gaussian_binomial(k as u32, r as u32, q as u64)?;
        if count.to_u64().is_none_or(|c| c > budget.subspaces) {
            return Err(Error::TooLarge {
                what: format!("subcodes of dimension {r}"),
                limit: budget.subspaces,
            });
        }
        for_each_subspace(q, k, r, |rows| {
            seen.insert(rows.iter().fold(0, |acc, &i| acc | unit[i]));
        });
    }
    let mut supports: Vec<Support> = seen.into_iter().collect();
    supports.sort_unstable();
    // every subcode support is a cycle whose nullity is dim C(support)
    Ok(supports
        .into_par_iter()
        .map(|s| Cycle {
            support: s,
            nullity: m.base_nullity(s),
        })
        .collect())
}

fn message(mut idx: usize, q: usize, k: usize) -> Vec<FieldElement> {
    (0..k)
        .map(|_| {
            let d = idx % q;
            idx /= q;
            FieldElement::from_raw(d as u32)
        })
        .collect()
}

/// Flats of the generator-column matroid, rank by rank: every rank-(t+1) flat is
/// the closure of a rank-t flat plus one point. The closure of a set F is the
/// complement of the support of the subcode vanishing on F.
fn flats(m: &Matroid) -> Vec<Cycle> {
    let k = m.code_dimension();
    let ground = m.ground_set();
    let f = m.field().clone();
    let closure_of_empty = ground & !m.codeword_support_span(&m.annihilator(0));
    let mut level: Vec<Support> = vec![closure_of_empty];
    let mut cycles = Vec::new();
    for t in 0..k {
        let nullity = k - t;
        cycles.extend(level.iter().map(|&fl| Cycle {
            support: ground & !fl,
            nullity,
        }));
        if t + 1 == k {
            break;
        }
        let next: SupportSet = level
            .par_chunks(256)
            .map(|chunk| {
                let mut local = SupportSet::default();
                for &flat in chunk {
                    let basis = m.annihilator(flat);
                    debug_assert_eq!(basis.len(), nullity);
                    let mut covered = flat;
                    let mut rest = ground & !covered;
                    while rest != 0 {
                        let p = rest.trailing_zeros() as usize;
                        let values: Vec<FieldElement> = basis.iter().map(|b| m.dot_column(b, p)).collect();
                        let pivot = values.iter().position(|v| !v.is_zero()).expect("p lies outside the flat");
                        let scale = f.inv(values[pivot]);
                        let reduced: Vec<Vec<FieldElement>> = basis
                            .iter()
                            .zip(&values)
                            .enumerate()
                            .filter(|&(i, _)| i != pivot)
                            .map(|(_, (b, &v))| {
                                let c = f.mul(v, scale);
                                b.iter()
                                    .zip(&basis[pivot])
                                    .map(|(&x, &y)| f.sub(x, f.mul(c, y)))
                                    .collect()
                            })
                            .collect();
                        let g = ground & !m.codeword_support_span(&reduced);
                        covered |= g;
                        rest &= !covered;
                        local.insert(g);
                    }
                }
                local
            })
            .reduce(SupportSet::default, |mut a, b| {
                if a.len() < b.len() {
                    return b.into_iter().chain(a).collect();
                }
                a.extend(b);
                a
            });
        level = next.into_iter().collect();
        level.sort_unstable();
    }
    cycles
}

impl Matroid {
    /// Union of the supports of the given messages.
    pub(crate) fn codeword_support_span(&self, basis: &[Vec<FieldElement>]) -> Support {
        basis.iter().fold(0, |acc, b| acc | self.codeword_support(b))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codes::{build_prm, build_rm1m, build_rm22};

    fn inventory(code: &crate::codes::LinearCode, method: InventoryMethod) -> CycleInventory {
        let m = Matroid::from_code(code).unwrap();
        cycle_inventory(&m, method, &Budget::default()).unwrap()
    }

    #[test]
    fn c3_nullity_counts() {
        let inv = inventory(&build_rm22(3).unwrap(), InventoryMethod::Flats);
        assert_eq!(inv.of_nullity(4).len(), 36);
        // 12 line complements plus 72 triangle complements: every 3-point complement
        let n3 = inv.of_nullity(3);
        assert_eq!(n3.len(), 84);
        assert!(n3.iter().all(|c| c.size() == 6));
        assert_eq!(inv.of_nullity(6).len(), 1);
        assert_eq!(inv.of_nullity(5).len(), 9);
    }

    #[test]
    fn methods_agree_on_small_codes() {
        for code in [
            build_rm22(2).unwrap(),
            build_rm22(3).unwrap(),
            build_prm(3, 2, 2).unwrap(),
            build_rm1m(3, 2).unwrap(),
        ] {
            let a = inventory(&code, InventoryMethod::SubsetScan);
            let b = inventory(&code, InventoryMethod::SubcodeSupports);
            let c = inventory(&code, InventoryMethod::Flats);
            assert_eq!(a.cycles(), b.cycles(), "{:?}", code.label());
            assert_eq!(a.cycles(), c.cycles(), "{:?}", code.label());
        }
    }

    #[test]
    fn subset_scan_limit() {
        let m = Matroid::from_code(&build_rm22(7).unwrap()).unwrap();
        assert!(matches!(
            cycle_inventory(&m, InventoryMethod::SubsetScan, &Budget::default()),
            Err(Error::TooLarge { .. })
        ));
    }

    #[test]
    fn hamming_weights_from_inventory() {
        let inv = inventory(&build_rm22(3).unwrap(), InventoryMethod::Flats);
        let d: Vec<usize> = (1..=6).map(|i| inv.min_size(i).unwrap()).collect();
        assert_eq!(d, vec![3, 5, 6, 7, 8, 9]);
    }
}
