//! Betti and φ tables of RM_q(2,2) for q ∈ {2,3,4,5}, embedded verbatim.
//!
//! Betti rows are stored as printed: row `r` lists β_{i,i+r} for i = 0, 1, ….

use std::collections::BTreeMap;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::matroid::{phi_profile, BettiTable, PhiProfile};

type Rows = &'static [(usize, &'static [i64])];

struct Source {
    q: u32,
    k: usize,
    /// One entry per ℓ = 0..k−1: (declared regularity, rows).
    betti: &'static [(usize, Rows)],
    /// Rows j → φ_j^(ℓ) for ℓ = 0..k−1.
    phi: Option<&'static [(usize, &'static [i64])]>,
    errata: &'static [Erratum],
}

/// A printed entry that disagrees with the rest of its own tables.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Erratum {
    pub ell: usize,
    pub i: usize,
    pub j: usize,
    pub printed: i64,
    pub corrected: i64,
    pub note: &'static str,
}

const Q5: Source = Source {
    q: 5,
    k: 6,
    betti: &[
        (
            19,
            &[
                (0, &[1]),
                (14, &[0, 60]),
                (15, &[0, 375]),
                (17, &[0, 0, 3000, 2160]),
                (18, &[0, 1000]),
                (19, &[0, 600, 31000, 100000, 127500, 73250, 15944]),
            ],
        ),
        (20, &[(0, &[1]), (18, &[0, 600, 570]), (20, &[0, 6500, 30000, 48000, 32725, 8196])]),
        (21, &[(0, &[1]), (19, &[0, 30]), (21, &[0, 2000, 6000, 5875, 1904])]),
        (22, &[(0, &[1]), (22, &[0, 300, 575, 276])]),
        (23, &[(0, &[1]), (23, &[0, 25, 24])]),
        (24, &[(0, &[1]), (24, &[0, 1])]),
    ],
    phi: Some(&[
        (15, &[-60, 0, 0, 0, 0, 0]),
        (16, &[-375, 0, 0, 0, 0, 0]),
        (19, &[2000, -600, 0, 0, 0, 0]),
        (20, &[-2760, 570, -30, 0, 0, 0]),
        (21, &[31000, -6500, 0, 0, 0, 0]),
        (22, &[-100000, 30000, -2000, 0, 0, 0]),
        (23, &[127500, -48000, 6000, -300, 0, 0]),
        (24, &[-73250, 32725, -5875, 575, -25, 0]),
        (25, &[15944, -8196, 1904, -276, 24, -1]),
    ]),
    errata: &[],
};

const Q4: Source = Source {
    q: 4,
    k: 6,
    betti: &[
        (
            10,
            &[
                (0, &[1]),
                (7, &[0, 30]),
                (8, &[0, 160]),
                (9, &[0, 0, 960, 600]),
                (10, &[0, 288, 1920, 10080, 12480, 6816, 1413]),
            ],
        ),
        (11, &[(0, &[1]), (10, &[0, 240, 220]), (11, &[0, 840, 4320, 6960, 4624, 1125])]),
        (12, &[(0, &[1]), (11, &[0, 20]), (12, &[0, 480, 1440, 1376, 435])]),
        (13, &[(0, &[1]), (13, &[0, 120, 224, 105])]),
        (14, &[(0, &[1]), (14, &[0, 16, 15])]),
        (15, &[(0, &[1]), (15, &[0, 1])]),
    ],
    phi: Some(&[
        (8, &[-30, 0, 0, 0, 0, 0]),
        (9, &[-160, 0, 0, 0, 0, 0]),
        (11, &[672, -240, 0, 0, 0, 0]),
        (12, &[2520, -620, -20, 0, 0, 0]),
        (13, &[-10080, 4320, -480, 0, 0, 0]),
        (14, &[12480, -6960, 1440, -120, 0, 0]),
        (15, &[-6816, 4624, -1376, 224, -16, 0]),
        (16, &[1413, -1125, 435, -105, 15, -1]),
    ]),
    errata: &[Erratum {
        ell: 0,
        i: 2,
        j: 12,
        printed: 1920,
        corrected: 3120,
        note: "phi_12 = 2520 with beta_{3,12} = 600 forces beta_{2,12} = 3120",
    }],
};

const Q3: Source = Source {
    q: 3,
    k: 6,
    betti: &[
        (3, &[(0, &[1]), (2, &[0, 12]), (3, &[0, 54, 324, 600, 540, 243, 44])]),
        (4, &[(0, &[1]), (4, &[0, 126, 420, 540, 315, 70])]),
        (5, &[(0, &[1]), (5, &[0, 84, 216, 189, 56])]),
        (6, &[(0, &[1]), (6, &[0, 36, 63, 28])]),
        (7, &[(0, &[1]), (7, &[0, 9, 8])]),
        (8, &[(0, &[1]), (8, &[0, 1])]),
    ],
    phi: Some(&[
        (3, &[-12, 0, 0, 0, 0, 0]),
        (4, &[-54, 0, 0, 0, 0, 0]),
        (5, &[324, -126, 0, 0, 0, 0]),
        (6, &[-600, 420, -84, 0, 0, 0]),
        (7, &[540, -540, 216, -36, 0, 0]),
        (8, &[-243, 315, -189, 63, -9, 0]),
        (9, &[44, -70, 56, -28, 8, -1]),
    ]),
    errata: &[],
};

const Q2: Source = Source {
    q: 2,
    k: 4,
    betti: &[
        (0, &[(0, &[1, 4, 6, 4, 1])]),
        (1, &[(0, &[1]), (1, &[0, 6, 8, 3])]),
        (2, &[(0, &[1]), (2, &[0, 4, 3])]),
        (3, &[(0, &[1]), (3, &[0, 1])]),
    ],
    phi: None,
    errata: &[],
};

/// Embedded tables for one q, with the errata applied on request.
#[derive(Clone, Debug)]
pub struct FixtureSet {
    pub q: u32,
    /// Dimension of the code, the number of elongation levels with a table.
    pub k: usize,
    verbatim: Vec<BettiTable>,
    regularity: Vec<usize>,
    phi: Option<BTreeMap<(usize, usize), BigInt>>,
    pub errata: Vec<Erratum>,
}

impl FixtureSet {
    /// Ground-set size q².
    pub fn length(&self) -> usize {
        (self.q * self.q) as usize
    }

    /// The Betti table for elongation ℓ exactly as printed.
    pub fn verbatim_betti(&self, ell: usize) -> Option<&BettiTable> {
        self.verbatim.get(ell)
    }

    /// The Betti table for elongation ℓ with the errata applied.
    pub fn betti(&self, ell: usize) -> Option<BettiTable> {
        let mut t = self.verbatim.get(ell)?.clone();
        for e in self.errata.iter().filter(|e| e.ell == ell) {
            t.set(e.i, e.j, BigInt::from(e.corrected));
        }
        Some(t)
    }

    pub fn regularity(&self, ell: usize) -> Option<usize> {
        self.regularity.get(ell).copied()
    }

    /// The printed φ table keyed by (ℓ, j), if the tables include one.
    pub fn verbatim_phi(&self) -> Option<&BTreeMap<(usize, usize), BigInt>> {
        self.phi.as_ref()
    }

    /// φ profile derived from the corrected Betti tables.
    pub fn phi_profile(&self) -> PhiProfile {
        let tables: Vec<BettiTable> = (0..self.k).filter_map(|l| self.betti(l)).collect();
        phi_profile(&tables, self.k).expect("embedded tables cover every elongation")
    }
}

fn build(src: &Source) -> FixtureSet {
    let mut verbatim = Vec::new();
    let mut regularity = Vec::new();
    for (ell, &(reg, rows)) in src.betti.iter().enumerate() {
        let mut t = BettiTable::new(ell, src.k - ell);
        for &(r, values) in rows {
            for (i, &v) in values.iter().enumerate() {
                if v != 0 {
                    t.set(i, i + r, BigInt::from(v));
                }
            }
        }
        verbatim.push(t);
        regularity.push(reg);
    }
    let phi = src.phi.map(|rows| {
        rows.iter()
            .flat_map(|&(j, vals)| {
                vals.iter()
                    .enumerate()
                    .filter(|(_, v)| **v != 0)
                    .map(move |(ell, &v)| ((ell, j), BigInt::from(v)))
            })
            .collect()
    });
    FixtureSet {
        q: src.q,
        k: src.k,
        verbatim,
        regularity,
        phi,
        errata: src.errata.to_vec(),
    }
}

/// Embedded tables for q ∈ {2,3,4,5}.
pub fn fixtures(q: u32) -> Result<FixtureSet> {
    let src = match q {
        2 => &Q2,
        3 => &Q3,
        4 => &Q4,
        5 => &Q5,
        _ => return Err(Error::NoFixtures(q)),
    };
    Ok(build(src))
}
