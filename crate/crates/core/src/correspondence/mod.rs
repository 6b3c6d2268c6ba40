//! Cycles of the PRM_q(d,m) matroid on P^m against those of the RM_q(d,m)
//! matroid on A^m, checked by exhaustive subset scans on both sides.

use std::collections::{BTreeMap, BTreeSet};

use crate::codes::{build_prm, build_rm, Budget};
use crate::error::{Error, Result};
use crate::matroid::{cycle_inventory, CycleInventory, InventoryMethod, Matroid};
use crate::support::Support;

/// Largest ground set scanned exhaustively.
pub const SCAN_LIMIT: usize = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    /// Affine cycles arise from projective cycles of the same nullity.
    AffineFromProjective,
    /// Projective cycles restrict to affine cycles of at least their nullity.
    ProjectiveRestricts,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample {
    pub direction: Direction,
    pub nullity: usize,
    pub support: Support,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorrespondenceReport {
    pub q: u32,
    pub d: u32,
    pub m: u32,
    /// |P^m| and |A^m|; the affine points are the first |A^m| projective indices.
    pub projective_size: usize,
    pub affine_size: usize,
    /// Code dimensions, i.e. the dual ranks of the two ground sets.
    pub projective_dual_rank: usize,
    pub affine_dual_rank: usize,
    /// Cycles by nullity.
    pub affine_cycles: BTreeMap<usize, Vec<Support>>,
    pub projective_cycles: BTreeMap<usize, Vec<Support>>,
    pub affine_from_projective: bool,
    pub projective_restricts: bool,
    /// (i, j) pairs realized by restricting nullity-i projective cycles to nullity-j affine ones.
    pub witnesses: BTreeSet<(usize, usize)>,
    pub counterexample: Option<Counterexample>,
}

impl CorrespondenceReport {
    pub fn passed(&self) -> bool {
        self.affine_from_projective && self.projective_restricts && self.projective_dual_rank == self.affine_dual_rank
    }
}

fn by_nullity(inv: &CycleInventory) -> BTreeMap<usize, Vec<Support>> {
    let mut out: BTreeMap<usize, Vec<Support>> = BTreeMap::new();
    for c in inv.cycles() {
        out.entry(c.nullity).or_default().push(c.support);
    }
    out
}

fn scanned(m: &Matroid) -> Result<CycleInventory> {
    if m.ground_size() > SCAN_LIMIT {
        return Err(Error::TooLarge {
            what: format!("subset scan over {} points", m.ground_size()),
            limit: SCAN_LIMIT as u64,
        });
    }
    cycle_inventory(m, InventoryMethod::SubsetScan, &Budget::default())
}

pub fn verify_correspondence(q: u32, d: u32, m: u32) -> Result<CorrespondenceReport> {
    let projective = Matroid::from_code(&build_prm(q, d, m)?)?;
    let affine = Matroid::from_code(&build_rm(q, d, m)?)?;
    let p_inv = scanned(&projective)?;
    let a_inv = scanned(&affine)?;
    let affine_size = affine.ground_size();
    let affine_mask: Support = affine.ground_set();

    let mut witnesses = BTreeSet::new();
    let mut counterexample = None;
    let mut restricted: BTreeSet<(usize, Support)> = BTreeSet::new();
    for c in p_inv.cycles() {
        let part = c.support & affine_mask;
        restricted.insert((c.nullity, part));
        match a_inv.get(part) {
            Some(a) if a.nullity >= c.nullity => {
                witnesses.insert((c.nullity, a.nullity));
            }
            _ => {
                counterexample.get_or_insert(Counterexample {
                    direction: Direction::ProjectiveRestricts,
                    nullity: c.nullity,
                    support: c.support,
                });
            }
        }
    }
    let projective_restricts = counterexample.is_none();

    let missing = a_inv
        .cycles()
        .iter()
        .find(|a| !restricted.contains(&(a.nullity, a.support)));
    if let Some(a) = missing {
        counterexample.get_or_insert(Counterexample {
            direction: Direction::AffineFromProjective,
            nullity: a.nullity,
            support: a.support,
        });
    }

    Ok(CorrespondenceReport {
        q,
        d,
        m,
        projective_size: projective.ground_size(),
        affine_size,
        projective_dual_rank: projective.code_dimension(),
        affine_dual_rank: affine.code_dimension(),
        affine_cycles: by_nullity(&a_inv),
        projective_cycles: by_nullity(&p_inv),
        affine_from_projective: missing.is_none(),
        projective_restricts,
        witnesses,
        counterexample,
    })
}
