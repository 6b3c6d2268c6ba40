//! Conics of P²_q: enumeration, classification by point counting, the census
//! by affine category, and the inclusion-maximal affine zero sets.
//!
//! The line at infinity is L: z = 0. Affine point (x, y) has index x·q + y,
//! matching the coordinate order of the RM_q(2,2) codes.

mod pointset;

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::codes::projective_points;
use crate::error::{Error, Result};
use crate::exactalg::{field_of_order, FieldElement, FiniteField};
use crate::formulas::Family;
use crate::support::{self, Support};

pub use pointset::PointSet;

const MAX_Q: u32 = 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ConicClass {
    DoubleLine,
    LinePair,
    Irreducible,
    ConjugatePair,
}

impl ConicClass {
    pub const ALL: [ConicClass; 4] = [
        ConicClass::DoubleLine,
        ConicClass::LinePair,
        ConicClass::Irreducible,
        ConicClass::ConjugatePair,
    ];

    /// Number of points in P²_q.
    pub fn points(self, q: u32) -> usize {
        let q = q as usize;
        match self {
            ConicClass::DoubleLine | ConicClass::Irreducible => q + 1,
            ConicClass::LinePair => 2 * q + 1,
            ConicClass::ConjugatePair => 1,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            ConicClass::DoubleLine => "double-line",
            ConicClass::LinePair => "line-pair",
            ConicClass::Irreducible => "irreducible",
            ConicClass::ConjugatePair => "conjugate-pair",
        }
    }
}

/// Position of a conic relative to L.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum AffineCategory {
    /// The double line z² = 0.
    A,
    /// Double line other than L.
    B,
    /// Line pair containing L.
    C,
    /// Line pair meeting in an affine point.
    D,
    /// Parallel line pair, meeting on L.
    E,
    /// Irreducible, two points on L.
    F,
    /// Irreducible, tangent to L.
    G,
    /// Irreducible, disjoint from L.
    H,
    /// Conjugate pair with an affine real point.
    I,
    /// Conjugate pair with its real point on L.
    J,
}

impl AffineCategory {
    pub const ALL: [AffineCategory; 10] = [
        AffineCategory::A,
        AffineCategory::B,
        AffineCategory::C,
        AffineCategory::D,
        AffineCategory::E,
        AffineCategory::F,
        AffineCategory::G,
        AffineCategory::H,
        AffineCategory::I,
        AffineCategory::J,
    ];

    pub fn class(self) -> ConicClass {
        use AffineCategory::*;
        match self {
            A | B => ConicClass::DoubleLine,
            C | D | E => ConicClass::LinePair,
            F | G | H => ConicClass::Irreducible,
            I | J => ConicClass::ConjugatePair,
        }
    }

    /// Points of the conic on L.
    pub fn points_on_line_at_infinity(self, q: u32) -> usize {
        use AffineCategory::*;
        match self {
            A | C => q as usize + 1,
            D | F => 2,
            B | E | G | J => 1,
            H | I => 0,
        }
    }

    /// Number of zeros in A²_q.
    pub fn affine_zeros(self, q: u32) -> usize {
        self.class().points(q) - self.points_on_line_at_infinity(q)
    }

    pub fn letter(self) -> char {
        (b'a' + self as u8) as char
    }

    pub fn from_letter(c: char) -> Option<Self> {
        Self::ALL.into_iter().find(|cat| cat.letter() == c.to_ascii_lowercase())
    }
}

impl fmt::Display for AffineCategory {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

/// One conic a·x² + b·xy + c·xz + d·y² + e·yz + f·z², scaled so the first nonzero
/// coefficient is 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConicRecord {
    pub coeffs: [FieldElement; 6],
    pub class: ConicClass,
    pub category: AffineCategory,
    pub projective_points: usize,
    pub affine_points: usize,
    pub zeros: PointSet,
}

/// The projective plane over GF(q) with the quadratic monomials precomputed.
struct Plane {
    field: FiniteField,
    q: usize,
    points: Vec<[FieldElement; 3]>,
    monomials: Vec<[FieldElement; 6]>,
}

impl Plane {
    fn new(q: u32) -> Result<Plane> {
        if q > MAX_Q {
            return Err(Error::TooLarge {
                what: format!("conic enumeration over GF({q})"),
                limit: MAX_Q as u64,
            });
        }
        let field = field_of_order(q)?;
        let points: Vec<[FieldElement; 3]> =
            projective_points(&field, 2).into_iter().map(|p| [p[0], p[1], p[2]]).collect();
        let monomials = points
            .iter()
            .map(|&[x, y, z]| {
                let f = &field;
                [f.mul(x, x), f.mul(x, y), f.mul(x, z), f.mul(y, y), f.mul(y, z), f.mul(z, z)]
            })
            .collect();
        Ok(Plane {
            field,
            q: q as usize,
            points,
            monomials,
        })
    }

    fn affine_count(&self) -> usize {
        self.q * self.q
    }

    fn eval(&self, c: &[FieldElement; 6], p: usize) -> FieldElement {
        let f = &self.field;
        c.iter()
            .zip(&self.monomials[p])
            .fold(FieldElement::ZERO, |acc, (&a, &m)| f.add(acc, f.mul(a, m)))
    }

    fn cross(&self, a: [FieldElement; 3], b: [FieldElement; 3]) -> [FieldElement; 3] {
        let f = &self.field;
        [
            f.sub(f.mul(a[1], b[2]), f.mul(a[2], b[1])),
            f.sub(f.mul(a[2], b[0]), f.mul(a[0], b[2])),
            f.sub(f.mul(a[0], b[1]), f.mul(a[1], b[0])),
        ]
    }

    fn on_line(&self, line: [FieldElement; 3], p: [FieldElement; 3]) -> bool {
        let f = &self.field;
        (0..3).fold(FieldElement::ZERO, |acc, i| f.add(acc, f.mul(line[i], p[i]))).is_zero()
    }

    fn collinear(&self, idx: &[usize]) -> bool {
        if idx.len() < 3 {
            return true;
        }
        let line = self.cross(self.points[idx[0]], self.points[idx[1]]);
        idx[2..].iter().all(|&i| self.on_line(line, self.points[i]))
    }

    fn record(&self, coeffs: [FieldElement; 6]) -> Result<ConicRecord> {
        if coeffs.iter().all(|c| c.is_zero()) {
            return Err(Error::ZeroForm);
        }
        let zeros_idx: Vec<usize> = (0..self.points.len()).filter(|&p| self.eval(&coeffs, p).is_zero()).collect();
        let n_aff = self.affine_count();
        let at_infinity = zeros_idx.iter().filter(|&&p| p >= n_aff).count();
        let total = zeros_idx.len();
        let q = self.q;
        let class = if total == 2 * q + 1 {
            ConicClass::LinePair
        } else if total == 1 {
            ConicClass::ConjugatePair
        } else if total == q + 1 && self.collinear(&zeros_idx) {
            ConicClass::DoubleLine
        } else if total == q + 1 {
            ConicClass::Irreducible
        } else {
            return Err(Error::OutOfRange(format!("a conic with {total} points")));
        };
        use AffineCategory::*;
        let category = match (class, at_infinity) {
            (ConicClass::DoubleLine, t) if t == q + 1 => A,
            (ConicClass::DoubleLine, 1) => B,
            (ConicClass::LinePair, t) if t == q + 1 => C,
            (ConicClass::LinePair, 2) => D,
            (ConicClass::LinePair, 1) => E,
            (ConicClass::Irreducible, 2) => F,
            (ConicClass::Irreducible, 1) => G,
            (ConicClass::Irreducible, 0) => H,
            (ConicClass::ConjugatePair, 0) => I,
            (ConicClass::ConjugatePair, 1) => J,
            (c, t) => {
                return Err(Error::OutOfRange(format!("{} with {t} points on L", c.name())));
            }
        };
        let zeros = PointSet::from_indices(zeros_idx.iter().copied().filter(|&p| p < n_aff));
        Ok(ConicRecord {
            coeffs,
            class,
            category,
            projective_points: total,
            affine_points: total - at_infinity,
            zeros,
        })
    }

    /// Normalized coefficient vectors: lead position p, then (q)^(5−p) tails.
    fn normalized_forms(&self) -> Vec<[FieldElement; 6]> {
        let q = self.q;
        let mut out = Vec::new();
        for lead in 0..6 {
            let free = 5 - lead;
            for mut idx in 0..q.pow(free as u32) {
                let mut c = [FieldElement::ZERO; 6];
                c[lead] = FieldElement::ONE;
                for slot in c.iter_mut().skip(lead + 1) {
                    *slot = self.field.element((idx % q) as u32);
                    idx /= q;
                }
                out.push(c);
            }
        }
        out
    }
}

/// Every conic of P²_q, one per nonzero quadratic form up to scalars.
pub fn enumerate_conics(q: u32) -> Result<Vec<ConicRecord>> {
    let plane = Plane::new(q)?;
    plane
        .normalized_forms()
        .into_par_iter()
        .map(|c| plane.record(c))
        .collect()
}

/// Projective class and affine category of the conic with the given
/// coefficients (field elements by their integer encoding).
pub fn classify(coeffs: [u32; 6], q: u32) -> Result<(ConicClass, AffineCategory)> {
    let plane = Plane::new(q)?;
    if coeffs.iter().any(|&c| c >= q) {
        return Err(Error::OutOfRange(format!("coefficients must lie in 0..{q}")));
    }
    let r = plane.record(coeffs.map(|c| plane.field.element(c)))?;
    Ok((r.class, r.category))
}

/// Counts by class and category, and the first higher weight spectrum they imply.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConicCensus {
    pub q: u32,
    pub total: u64,
    pub by_class: BTreeMap<ConicClass, u64>,
    pub by_category: BTreeMap<AffineCategory, u64>,
    /// A_w^(1) = number of conics with q² − w affine zeros; absent for q = 2,
    /// where evaluation of quadrics on A²_2 is not injective.
    pub first_spectrum: Option<BTreeMap<usize, BigInt>>,
}

pub fn census(q: u32) -> Result<ConicCensus> {
    census_of(q, &enumerate_conics(q)?)
}

fn census_of(q: u32, records: &[ConicRecord]) -> Result<ConicCensus> {
    let mut by_class = BTreeMap::new();
    let mut by_category = BTreeMap::new();
    let mut by_weight: BTreeMap<usize, BigInt> = BTreeMap::new();
    let n = (q * q) as usize;
    for r in records {
        *by_class.entry(r.class).or_insert(0) += 1;
        *by_category.entry(r.category).or_insert(0) += 1;
        *by_weight.entry(n - r.affine_points).or_default() += 1;
    }
    Ok(ConicCensus {
        q,
        total: records.len() as u64,
        by_class,
        by_category,
        first_spectrum: (q > 2).then_some(by_weight),
    })
}

/// Categories all of whose conics have an affine zero set contained in no
/// strictly larger zero set of another conic.
pub fn maximal_zero_sets(q: u32) -> Result<BTreeSet<AffineCategory>> {
    let records = enumerate_conics(q)?;
    let maximal = maximal_flags(q, &records);
    let mut all_max: BTreeMap<AffineCategory, bool> = BTreeMap::new();
    for (r, &m) in records.iter().zip(&maximal) {
        let e = all_max.entry(r.category).or_insert(true);
        *e &= m;
    }
    Ok(all_max.into_iter().filter(|&(_, m)| m).map(|(c, _)| c).collect())
}

/// Per record: is its zero set inclusion-maximal among all conic zero sets?
fn maximal_flags(q: u32, records: &[ConicRecord]) -> Vec<bool> {
    let n = (q * q) as usize;
    let mut ids: HashMap<PointSet, usize> = HashMap::new();
    let mut sets: Vec<PointSet> = Vec::new();
    for r in records {
        ids.entry(r.zeros).or_insert_with(|| {
            sets.push(r.zeros);
            sets.len() - 1
        });
    }
    let mut containing: Vec<Vec<u32>> = vec![Vec::new(); n];
    for (id, s) in sets.iter().enumerate() {
        for p in s.iter() {
            containing[p].push(id as u32);
        }
    }
    let set_max: Vec<bool> = sets
        .par_iter()
        .enumerate()
        .map(|(id, s)| {
            let Some(best) = s.iter().min_by_key(|&p| containing[p].len()) else {
                return sets.len() == 1;
            };
            !containing[best]
                .iter()
                .any(|&o| o as usize != id && s.is_subset(&sets[o as usize]))
        })
        .collect();
    records.iter().map(|r| set_max[ids[&r.zeros]]).collect()
}

/// The RM_q(2,2) cycle family of a support of nullity at least 2, read off
/// from the shape of its complement in A²_q (q ≥ 3).
pub fn cycle_family(q: u32, sigma: Support) -> Result<Option<Family>> {
    let plane = Plane::new(q)?;
    let n = plane.affine_count();
    let comp: Vec<usize> = support::indices(support::full(n) & !sigma).collect();
    let qq = q as usize;
    let no_three_collinear = |pts: &[usize]| {
        (0..pts.len()).all(|a| {
            (a + 1..pts.len()).all(|b| (b + 1..pts.len()).all(|c| !plane.collinear(&[pts[a], pts[b], pts[c]])))
        })
    };
    let family = match comp.len() {
        0 => Some(Family::Whole),
        1 => Some(Family::Omega),
        2 => Some(Family::Epsilon),
        s if s == qq && plane.collinear(&comp) => Some(Family::Alpha),
        s if s == qq + 1 && line_plus_point(&plane, &comp) => Some(Family::Theta),
        3 if !plane.collinear(&comp) => Some(Family::Delta),
        4 if no_three_collinear(&comp) => Some(Family::Gamma),
        _ => None,
    };
    Ok(family)
}

fn line_plus_point(plane: &Plane, pts: &[usize]) -> bool {
    (0..pts.len()).any(|skip| {
        let rest: Vec<usize> = pts.iter().enumerate().filter(|&(i, _)| i != skip).map(|(_, &p)| p).collect();
        plane.collinear(&rest) && !plane.collinear(&[rest[0], rest[1], pts[skip]])
    })
}
