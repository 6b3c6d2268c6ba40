//! Möbius values on the lattice of cycles: μ(∅) = 1 and
//! μ(σ) = −Σ_{τ ⊊ σ} μ(τ) over cycles τ of the elongated matroid.
//! |μ(σ)| is the local Betti number β_{i,σ}.

use num_bigint::BigInt;
use num_traits::Signed;
use rayon::prelude::*;

use crate::codes::for_each_subspace;
use crate::error::{Error, Result};
use crate::exactalg::{gaussian_binomial, FieldElement};
use crate::support::{self, Support};

use super::{CycleInventory, Matroid};

const EULER_LIMIT: usize = 20;

/// How the sub-cycles of σ are found.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MobiusStrategy {
    /// Per nullity level, whichever of the two below is cheaper.
    Auto,
    /// Enumerate subspaces of C(σ) and look their supports up in the inventory;
    /// detects incomplete inventories.
    Local,
    /// Scan every cycle of lower nullity for containment.
    Global,
}

/// μ for every cycle of an inventory at one elongation level.
#[derive(Clone, Debug)]
pub struct MobiusTable {
    ell: usize,
    values: Vec<i128>,
}

impl MobiusTable {
    /// Computes μ for the cycles of the inventory with base nullity above the
    /// matroid's elongation level, up to base nullity `max_nullity` (all if None).
    pub fn compute(
        m: &Matroid,
        inv: &CycleInventory,
        strategy: MobiusStrategy,
        max_nullity: Option<usize>,
    ) -> Result<MobiusTable> {
        let ell = m.elongation();
        let k = m.code_dimension();
        let top = max_nullity.unwrap_or(k).min(k);
        let q = m.field().order() as u64;
        let mut values = vec![0i128; inv.len()];
        for j in ell + 1..=top {
            let level = inv.range_of_nullity(j, j);
            if level.is_empty() {
                continue;
            }
            let lower = inv.range_of_nullity(ell + 1, j - 1);
            let use_local = match strategy {
                MobiusStrategy::Local => true,
                MobiusStrategy::Global => false,
                MobiusStrategy::Auto => local_cost(q, j, ell) < lower.len() as f64,
            };
            let cycles = &inv.cycles()[level.clone()];
            let done = &values;
            if j == ell + 1 {
                // circuits of the elongation
                values[level].fill(-1);
                continue;
            }
            let computed: Vec<i128> = cycles
                .par_iter()
                .map(|c| {
                    let below = if use_local {
                        local_sum(m, inv, done, c.support, j, ell)?
                    } else {
                        global_sum(inv, done, lower.clone(), c.support)?
                    };
                    below.checked_add(1).map(|s| -s).ok_or(Error::Overflow("mobius"))
                })
                .collect::<Result<_>>()?;
            values[level].copy_from_slice(&computed);
        }
        Ok(MobiusTable { ell, values })
    }

    pub fn elongation(&self) -> usize {
        self.ell
    }

    /// μ of the cycle at inventory position `idx` (0 for cycles below the level).
    pub fn value(&self, idx: usize) -> i128 {
        self.values[idx]
    }

    pub fn values(&self) -> &[i128] {
        &self.values
    }
}

fn local_cost(q: u64, j: usize, ell: usize) -> f64 {
    let mut cost = (q as f64).powi(j as i32);
    for r in ell + 1..j {
        let g = gaussian_binomial(j as u32, r as u32, q).map_or(f64::INFINITY, |g| {
            num_traits::ToPrimitive::to_f64(&g).unwrap_or(f64::INFINITY)
        });
        cost += g * r as f64;
    }
    cost
}

fn global_sum(inv: &CycleInventory, values: &[i128], lower: std::ops::Range<usize>, sigma: Support) -> Result<i128> {
    let cycles = inv.cycles();
    let mut sum: i128 = 0;
    for idx in lower {
        if support::is_subset(cycles[idx].support, sigma) {
            sum = sum.checked_add(values[idx]).ok_or(Error::Overflow("mobius"))?;
        }
    }
    Ok(sum)
}

fn local_sum(m: &Matroid, inv: &CycleInventory, values: &[i128], sigma: Support, j: usize, ell: usize) -> Result<i128> {
    let f = m.field();
    let q = f.order() as usize;
    let basis = m.subcode_basis(sigma);
    debug_assert_eq!(basis.len(), j);
    // supports of all combinations Σ a_c b_c, indexed by Σ a_c q^c
    let k = m.code_dimension();
    let mut combos: Vec<Support> = vec![0; q.pow(j as u32)];
    let mut vec = vec![vec![FieldElement::ZERO; k]; j + 1];
    fn fill(
        level: usize,
        idx: usize,
        q: usize,
        m: &Matroid,
        basis: &[Vec<FieldElement>],
        vec: &mut [Vec<FieldElement>],
        out: &mut [Support],
    ) {
        if level == 0 {
            out[idx] = m.codeword_support(&vec[0]);
            return;
        }
        let l = level - 1;
        let f = m.field();
        for a in 0..q {
            let coef = FieldElement::from_raw(a as u32);
            let (lo, hi) = vec.split_at_mut(level);
            for ((dst, &src), &b) in lo[l].iter_mut().zip(&hi[0]).zip(&basis[l]) {
                *dst = f.add(src, f.mul(coef, b));
            }
            fill(l, idx + a * q.pow(l as u32), q, m, basis, vec, out);
        }
    }
    fill(j, 0, q, m, &basis, &mut vec, &mut combos);
    let cycles = inv.cycles();
    let mut sum: i128 = 0;
    let mut missing = false;
    for r in ell + 1..j {
        for_each_subspace(q, j, r, |rows| {
            let s = rows.iter().fold(0, |acc, &i| acc | combos[i]);
            match inv.position(s) {
                Some(idx) if cycles[idx].nullity == r => sum += values[idx],
                Some(_) => {}
                None => missing = true,
            }
        });
    }
    if missing {
        return Err(Error::IncompleteInventory);
    }
    Ok(sum)
}

/// Möbius value of a single cycle σ at the matroid's elongation level.
pub fn mobius(m: &Matroid, sigma: Support, inv: &CycleInventory) -> Result<BigInt> {
    if sigma == 0 {
        return Ok(BigInt::from(1));
    }
    let c = inv.get(sigma).ok_or(Error::IncompleteInventory)?;
    if c.nullity <= m.elongation() {
        return Err(Error::OutOfRange(format!(
            "set of nullity {} is not a cycle at elongation {}",
            c.nullity,
            m.elongation()
        )));
    }
    let sub = inv.restricted_to(sigma);
    let table = MobiusTable::compute(m, &sub, MobiusStrategy::Auto, Some(c.nullity))?;
    let pos = sub.position(sigma).expect("σ lies in its own restriction");
    Ok(BigInt::from(table.value(pos)))
}

/// |Σ_{τ ⊆ σ dependent} (−1)^{|τ|}|, the local Betti number via the reduced Euler
/// characteristic of the independence complex on σ; |σ| ≤ 20.
pub fn euler_betti(m: &Matroid, sigma: Support) -> Result<BigInt> {
    if support::size(sigma) > EULER_LIMIT {
        return Err(Error::TooLarge {
            what: format!("Euler characteristic over {} points", support::size(sigma)),
            limit: EULER_LIMIT as u64,
        });
    }
    let mut sum: i64 = 0;
    let mut tau = sigma;
    loop {
        if m.nullity(tau) > 0 {
            sum += if tau.count_ones().is_multiple_of(2) { 1 } else { -1 };
        }
        if tau == 0 {
            break;
        }
        tau = (tau - 1) & sigma;
    }
    Ok(BigInt::from(sum).abs())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codes::{build_rm22, Budget};
    use crate::matroid::{cycle_inventory, InventoryMethod};

    #[test]
    fn circuits_have_mu_minus_one_and_signs_alternate() {
        let m = Matroid::from_code(&build_rm22(3).unwrap()).unwrap();
        let inv = cycle_inventory(&m, InventoryMethod::Flats, &Budget::default()).unwrap();
        let t = MobiusTable::compute(&m, &inv, MobiusStrategy::Auto, None).unwrap();
        for (idx, c) in inv.cycles().iter().enumerate() {
            let mu = t.value(idx);
            if c.nullity == 1 {
                assert_eq!(mu, -1);
            }
            assert_eq!(mu.signum(), if c.nullity % 2 == 0 { 1 } else { -1 });
        }
    }

    #[test]
    fn strategies_agree_and_match_euler() {
        let m = Matroid::from_code(&build_rm22(3).unwrap()).unwrap();
        let inv = cycle_inventory(&m, InventoryMethod::Flats, &Budget::default()).unwrap();
        for ell in 0..3 {
            let me = m.elongate(ell).unwrap();
            let a = MobiusTable::compute(&me, &inv, MobiusStrategy::Local, None).unwrap();
            let b = MobiusTable::compute(&me, &inv, MobiusStrategy::Global, None).unwrap();
            assert_eq!(a.values(), b.values());
            for (idx, c) in inv.cycles().iter().enumerate().filter(|(_, c)| c.nullity > ell).step_by(7) {
                assert_eq!(BigInt::from(a.value(idx)).abs(), euler_betti(&me, c.support).unwrap());
            }
        }
    }

    #[test]
    fn local_strategy_detects_missing_cycles() {
        let m = Matroid::from_code(&build_rm22(3).unwrap()).unwrap();
        let inv = cycle_inventory(&m, InventoryMethod::Flats, &Budget::default()).unwrap();
        let pruned = CycleInventory::from_cycles(9, 6, inv.cycles().iter().skip(1).copied().collect());
        let r = MobiusTable::compute(&m, &pruned, MobiusStrategy::Local, None);
        assert_eq!(r.unwrap_err(), Error::IncompleteInventory);
    }

    #[test]
    fn single_cycle_query() {
        let m = Matroid::from_code(&build_rm22(3).unwrap()).unwrap();
        let inv = cycle_inventory(&m, InventoryMethod::Flats, &Budget::default()).unwrap();
        let e = m.ground_set();
        assert_eq!(mobius(&m, e, &inv).unwrap(), BigInt::from(44));
        assert_eq!(mobius(&m, 0, &inv).unwrap(), BigInt::from(1));
    }
}
