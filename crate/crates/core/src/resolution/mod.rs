//! Boij–Söderberg and Herzog–Kühl machinery: checking the identities, solving
//! resolution shapes for their unknown Betti numbers, and the RM_q(2,2) shapes.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::codes::{build_rm22, Budget};
use crate::error::{Error, Result};
use crate::exactalg::{prime_power, solve_exact};
use crate::formulas::{rm22_census, Family};
use crate::matroid::{cycle_inventory, BettiTable, InventoryMethod, Matroid};

/// Residuals Σ_j j^s φ_j for s = 0..k−1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BsReport {
    pub residuals: Vec<BigInt>,
}

impl BsReport {
    pub fn passed(&self) -> bool {
        self.residuals.iter().all(Zero::is_zero)
    }
}

/// Checks the first `k` Boij–Söderberg identities of a table.
pub fn bs_verify(t: &BettiTable, k: usize) -> BsReport {
    BsReport {
        residuals: t.bs_residuals(k),
    }
}

/// Where a slot value comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Provenance {
    /// β_{0,0} = 1.
    Unit,
    /// Number of circuits of the size, each contributing 1.
    Circuits,
    /// Members of a family times their local Betti number.
    Local,
    /// Determined by the identities.
    Solved,
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Provenance::Unit => "unit",
            Provenance::Circuits => "circuits",
            Provenance::Local => "local",
            Provenance::Solved => "solved",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Slot {
    pub i: usize,
    pub j: usize,
    /// None for unknowns.
    pub value: Option<BigInt>,
    pub provenance: Provenance,
}

/// The possibly nonzero β_{i,j} of a resolution, some of them known.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResolutionShape {
    pub ell: usize,
    /// Homological length; also the number of identities available.
    pub length: usize,
    slots: BTreeMap<(usize, usize), Slot>,
}

impl ResolutionShape {
    /// The shape with only β_{0,0} = 1.
    pub fn new(ell: usize, length: usize) -> Self {
        let mut s = ResolutionShape {
            ell,
            length,
            slots: BTreeMap::new(),
        };
        s.slots.insert(
            (0, 0),
            Slot {
                i: 0,
                j: 0,
                value: Some(BigInt::one()),
                provenance: Provenance::Unit,
            },
        );
        s
    }

    /// Adds a slot, replacing any slot already at (i, j).
    pub fn with_slot(mut self, i: usize, j: usize, value: Option<BigInt>, provenance: Provenance) -> Self {
        self.slots.insert((i, j), Slot { i, j, value, provenance });
        self
    }

    pub fn with_unknown(self, i: usize, j: usize) -> Self {
        self.with_slot(i, j, None, Provenance::Solved)
    }

    pub fn with_known(self, i: usize, j: usize, value: BigInt, provenance: Provenance) -> Self {
        self.with_slot(i, j, Some(value), provenance)
    }

    pub fn slots(&self) -> impl Iterator<Item = &Slot> {
        self.slots.values()
    }

    pub fn slot(&self, i: usize, j: usize) -> Option<&Slot> {
        self.slots.get(&(i, j))
    }

    pub fn unknowns(&self) -> Vec<(usize, usize)> {
        self.slots.values().filter(|s| s.value.is_none()).map(|s| (s.i, s.j)).collect()
    }

    /// Internal degrees carrying at least one slot.
    pub fn columns(&self) -> BTreeSet<usize> {
        self.slots.keys().map(|&(_, j)| j).collect()
    }

    /// Shape with one slot per census entry (nullity, size) above the level: known
    /// circuit counts in homological degree 1, unknowns elsewhere.
    pub fn from_census(census: &BTreeMap<(usize, usize), BigInt>, ell: usize, k: usize) -> Self {
        let mut s = ResolutionShape::new(ell, k - ell);
        for (&(nullity, size), count) in census.range((ell + 1, 0)..) {
            s = if nullity == ell + 1 {
                s.with_known(1, size, count.clone(), Provenance::Circuits)
            } else {
                s.with_unknown(nullity - ell, size)
            };
        }
        s
    }
}

/// Solves for every unknown slot in φ-coordinates, one unknown per column.
pub fn bs_solve(shape: &ResolutionShape) -> Result<BettiTable> {
    let mut unknown_at: BTreeMap<usize, (usize, usize)> = BTreeMap::new();
    let mut known_phi: BTreeMap<usize, BigInt> = BTreeMap::new();
    for s in shape.slots() {
        match &s.value {
            Some(v) => {
                let e = known_phi.entry(s.j).or_default();
                if s.i % 2 == 0 {
                    *e += v;
                } else {
                    *e -= v;
                }
            }
            None => {
                if unknown_at.insert(s.j, (s.i, s.j)).is_some() {
                    return Err(Error::Underdetermined);
                }
            }
        }
    }
    let cols: Vec<usize> = unknown_at.keys().copied().collect();
    if cols.len() > shape.length {
        return Err(Error::Underdetermined);
    }
    // Σ_{j unknown} j^s φ_j = −Σ_{j known} j^s φ_j, for s = 0..length−1
    let pow = |j: usize, s: usize| BigRational::from_integer(num_traits::pow(BigInt::from(j), s));
    let a: Vec<Vec<BigRational>> = (0..shape.length)
        .map(|s| cols.iter().map(|&j| pow(j, s)).collect())
        .collect();
    let b: Vec<BigRational> = (0..shape.length)
        .map(|s| {
            let rhs: BigInt = known_phi
                .iter()
                .filter(|(j, _)| !unknown_at.contains_key(j))
                .map(|(&j, v)| num_traits::pow(BigInt::from(j), s) * v)
                .sum();
            BigRational::from_integer(-rhs)
        })
        .collect();
    let phi = if cols.is_empty() { Vec::new() } else { solve_exact(&a, &b)? };

    let mut table = BettiTable::new(shape.ell, shape.length);
    for s in shape.slots() {
        if let Some(v) = &s.value {
            table.set(s.i, s.j, v.clone());
        }
    }
    for (&j, x) in cols.iter().zip(&phi) {
        let (i, _) = unknown_at[&j];
        // φ_j = known_j + (−1)^i β_{i,j}
        let rest = BigRational::from_integer(known_phi.get(&j).cloned().unwrap_or_default());
        let signed = x - rest;
        let beta = if i % 2 == 0 { signed } else { -signed };
        if !beta.is_integer() {
            return Err(Error::NonIntegralSolution { i, j });
        }
        let beta = beta.to_integer();
        if beta.is_negative() {
            return Err(Error::NegativeBetti { i, j });
        }
        table.set(i, j, beta);
    }
    let report = bs_verify(&table, shape.length);
    if !report.passed() {
        return Err(Error::BsViolation {
            ell: shape.ell,
            residuals: report.residuals.iter().map(ToString::to_string).collect(),
        });
    }
    Ok(table)
}

/// Degree sequence d_0 < d_1 < … < d_p of a pure resolution.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PureType(Vec<usize>);

impl PureType {
    pub fn new(degrees: Vec<usize>) -> Result<Self> {
        if degrees.is_empty() || degrees.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::OutOfRange(format!("degrees {degrees:?} are not strictly increasing")));
        }
        Ok(PureType(degrees))
    }

    pub fn degrees(&self) -> &[usize] {
        &self.0
    }
}

/// β_{i,d_i} = β_{0,d_0} · Π_{j ∉ {0,i}} (d_j − d_0)/(d_j − d_i) in absolute value.
pub fn herzog_kuhl(pt: &PureType, beta00: &BigInt) -> Result<BettiTable> {
    let d = pt.degrees();
    let p = d.len() - 1;
    let mut t = BettiTable::new(0, p);
    t.set(0, d[0], beta00.clone());
    for i in 1..=p {
        let mut num = beta00.clone();
        let mut den = BigInt::one();
        for j in (1..=p).filter(|&j| j != i) {
            num *= d[j] - d[0];
            den *= (d[j] as i64 - d[i] as i64).abs();
        }
        let v = BigRational::new(num, den);
        if !v.is_integer() {
            return Err(Error::NonIntegralSolution { i, j: d[i] });
        }
        t.set(i, d[i], v.to_integer());
    }
    Ok(t)
}

/// Minimal sets of each (nullity, size) of the RM_q(2,2) matroid: enumerated for
/// q ≤ 5, from the counting formulas for q ≥ 7.
pub fn rm22_minimal_sets(q: u32) -> Result<BTreeMap<(usize, usize), BigInt>> {
    if prime_power(q as u64).is_none() {
        return Err(Error::NotPrimePower(q as u64));
    }
    if q >= 7 {
        return rm22_census(q);
    }
    let m = Matroid::from_code(&build_rm22(q)?)?;
    let inv = cycle_inventory(&m, InventoryMethod::Flats, &Budget::default())?;
    Ok(inv.census().into_iter().map(|(k, v)| (k, BigInt::from(v))).collect())
}

/// The resolution shape of the ℓ-th elongation of the RM_q(2,2) matroid.
pub fn rm22_shape(q: u32, ell: usize) -> Result<ResolutionShape> {
    let census = rm22_minimal_sets(q)?;
    rm22_shape_from(q, ell, &census)
}

/// As `rm22_shape`, reusing a census of minimal sets.
pub fn rm22_shape_from(q: u32, ell: usize, census: &BTreeMap<(usize, usize), BigInt>) -> Result<ResolutionShape> {
    if q == 6 || q > 16 {
        return Err(Error::UnsupportedQ(q));
    }
    let k = if q == 2 { 4 } else { 6 };
    if ell > k {
        return Err(Error::OutOfRange(format!("elongation {ell} exceeds {k}")));
    }
    let mut shape = ResolutionShape::from_census(census, ell, k);
    if ell == 0 && q >= 4 {
        let qq = q as usize;
        let n = qq * qq;
        // complements of a line plus a point: q per member
        let theta = census.get(&(2, n - qq - 1)).cloned().unwrap_or_default();
        shape = shape.with_known(2, n - qq - 1, theta * BigInt::from(q), Provenance::Local);
        if q == 4 {
            // γ and α share j = 12; the line complements are fixed independently
            let alpha = Family::Alpha;
            let local = BigInt::from(qq.pow(3) + 2) - BigInt::from(2 * qq * qq + qq);
            shape = shape.with_known(3, alpha.size(q), alpha.count(q) * local, Provenance::Local);
        }
    }
    Ok(shape)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formulas::{closed_betti, fixtures};

    fn b(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn verify_examples() {
        let t = fixtures(2).unwrap().betti(0).unwrap();
        assert!(bs_verify(&t, 4).passed());
        let mut t = fixtures(3).unwrap().betti(0).unwrap();
        assert!(bs_verify(&t, 6).passed());
        t.add(2, 5, &b(1));
        assert!(!bs_verify(&t, 6).passed());
    }

    #[test]
    fn herzog_kuhl_examples() {
        let t = herzog_kuhl(&PureType::new(vec![0, 4]).unwrap(), &b(1)).unwrap();
        assert_eq!(t.get(1, 4), b(1));
        let t = herzog_kuhl(&PureType::new(vec![0, 2, 3, 4]).unwrap(), &b(1)).unwrap();
        assert_eq!((t.get(1, 2), t.get(2, 3), t.get(3, 4)), (b(6), b(8), b(3)));
        let t = herzog_kuhl(&PureType::new(vec![0, 1]).unwrap(), &b(1)).unwrap();
        assert_eq!(t.get(1, 1), b(1));
        assert!(matches!(
            herzog_kuhl(&PureType::new(vec![0, 3, 5]).unwrap(), &b(1)),
            Err(Error::NonIntegralSolution { i: 1, j: 3 })
        ));
        assert!(PureType::new(vec![0, 2, 2]).is_err());
    }

    #[test]
    fn shapes_at_large_q() {
        let q = 7;
        let s = rm22_shape(q, 0).unwrap();
        let unknowns = s.unknowns();
        assert_eq!(unknowns, vec![(2, 45), (3, 42), (3, 46), (4, 47), (5, 48), (6, 49)]);
        assert_eq!(s.slot(2, 41).unwrap().value, Some(b(7 * (7i64.pow(4) - 49))));
        let s4 = rm22_shape(q, 4).unwrap();
        assert_eq!(s4.slot(1, 48).unwrap().value, Some(b(49)));
        assert_eq!(s4.unknowns(), vec![(2, 49)]);
        let t4 = bs_solve(&s4).unwrap();
        assert_eq!(t4.get(2, 49), b(48));
    }

    #[test]
    fn solved_tables_match_the_closed_forms_at_large_q() {
        for q in [7u32, 8, 9] {
            let census = rm22_census(q).unwrap();
            for ell in 0..=6 {
                let t = bs_solve(&rm22_shape_from(q, ell, &census).unwrap()).unwrap();
                assert_eq!(t, closed_betti(q, ell).unwrap(), "q={q} ell={ell}");
            }
        }
    }

    #[test]
    fn q_equals_5_merges_degree_21() {
        let s = rm22_shape(5, 0).unwrap();
        assert!(s.slot(2, 21).unwrap().value.is_none());
        assert!(s.slot(1, 21).is_none());
        let t = bs_solve(&s).unwrap();
        assert_eq!(t.get(3, 20), b(2160));
        let t1 = bs_solve(&rm22_shape(5, 1).unwrap()).unwrap();
        assert_eq!(t1.get(2, 20), b(570));
    }

    #[test]
    fn q_equals_4_uses_the_separate_line_value() {
        let s = rm22_shape(4, 0).unwrap();
        assert_eq!(s.slot(3, 12).unwrap().value, Some(b(600)));
        let t = bs_solve(&s).unwrap();
        assert_eq!(t, fixtures(4).unwrap().betti(0).unwrap());
        assert_eq!(bs_solve(&rm22_shape(4, 1).unwrap()).unwrap().get(2, 12), b(220));
    }

    #[test]
    fn underdetermined_shapes_are_rejected() {
        let s = ResolutionShape::new(0, 1).with_unknown(1, 2).with_unknown(2, 3);
        assert_eq!(bs_solve(&s).unwrap_err(), Error::Underdetermined);
        let s = ResolutionShape::new(0, 2).with_unknown(1, 2).with_unknown(2, 2);
        assert_eq!(bs_solve(&s).unwrap_err(), Error::Underdetermined);
        let s = ResolutionShape::new(0, 2).with_unknown(1, 3).with_unknown(2, 5);
        assert!(matches!(bs_solve(&s), Err(Error::NonIntegralSolution { .. })));
    }
}
