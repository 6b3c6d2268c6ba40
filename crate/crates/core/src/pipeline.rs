//! End-to-end computation: Betti tables of every elongation, the φ profile, the
//! weight polynomials and the inverted spectra.

use std::fmt;
use std::str::FromStr;

use crate::codes::{build_rm22, Budget, LinearCode, SpectrumTable};
use crate::error::{Error, Result};
use crate::gwp::{gwp_assemble, gwp_invert, WeightPolynomial};
use crate::matroid::{betti_table, cycle_inventory, phi_profile, BettiTable, InventoryMethod, Matroid, PhiProfile};
use crate::resolution::{bs_solve, rm22_minimal_sets, rm22_shape_from};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    /// Möbius values of every cycle of every elongation.
    FullMobius,
    /// Known slots of the RM_q(2,2) shapes plus the Boij–Söderberg identities.
    BsAssisted,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::FullMobius => "full-mobius",
            Method::BsAssisted => "bs-assisted",
        })
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "full-mobius" | "mobius" => Ok(Method::FullMobius),
            "bs-assisted" | "bs" => Ok(Method::BsAssisted),
            _ => Err(Error::OutOfRange(format!("unknown pipeline method {s:?}"))),
        }
    }
}

#[derive(Clone, Debug)]
pub struct PipelineResult {
    pub q: u32,
    pub k: usize,
    pub method: Method,
    /// Tables for ℓ = 0..=k.
    pub tables: Vec<BettiTable>,
    pub phi: PhiProfile,
    pub polys: Vec<WeightPolynomial>,
    pub spectra: SpectrumTable,
}

impl PipelineResult {
    pub fn table(&self, ell: usize) -> Option<&BettiTable> {
        self.tables.get(ell)
    }
}

fn finish(q: u32, k: usize, method: Method, mut tables: Vec<BettiTable>) -> Result<PipelineResult> {
    tables.push(BettiTable::new(k, 0));
    let phi = phi_profile(&tables, k)?;
    let polys = gwp_assemble(&phi)?;
    let spectra = gwp_invert(&polys, q, k)?;
    Ok(PipelineResult {
        q,
        k,
        method,
        tables,
        phi,
        polys,
        spectra,
    })
}

/// Full Möbius pipeline for any code.
pub fn run_code_pipeline(c: &LinearCode) -> Result<PipelineResult> {
    let m = Matroid::from_code(c)?;
    let k = m.code_dimension();
    let inv = cycle_inventory(&m, InventoryMethod::Flats, &Budget::default())?;
    let tables = (0..k)
        .map(|ell| betti_table(&m.elongate(ell)?, &inv))
        .collect::<Result<Vec<_>>>()?;
    finish(c.field().order(), k, Method::FullMobius, tables)
}

/// The pipeline for RM_q(2,2).
pub fn run_pipeline(q: u32, method: Method) -> Result<PipelineResult> {
    match method {
        Method::FullMobius => run_code_pipeline(&build_rm22(q)?),
        Method::BsAssisted => {
            let census = rm22_minimal_sets(q)?;
            let k = if q == 2 { 4 } else { 6 };
            let tables = (0..k)
                .map(|ell| bs_solve(&rm22_shape_from(q, ell, &census)?))
                .collect::<Result<Vec<_>>>()?;
            finish(q, k, method, tables)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formulas::{fallq_spectra, fixtures};

    #[test]
    fn both_methods_agree_for_small_q() {
        for q in [2u32, 3, 4] {
            let full = run_pipeline(q, Method::FullMobius).unwrap();
            let bs = run_pipeline(q, Method::BsAssisted).unwrap();
            assert_eq!(full.tables, bs.tables, "q = {q}");
            assert_eq!(full.spectra.entries(), fallq_spectra(q).unwrap().entries(), "q = {q}");
            let fx = fixtures(q).unwrap();
            for ell in 0..fx.k {
                assert_eq!(full.tables[ell], fx.betti(ell).unwrap(), "q = {q}, ell = {ell}");
            }
        }
    }

    #[test]
    fn method_names_round_trip() {
        for m in [Method::FullMobius, Method::BsAssisted] {
            assert_eq!(m.to_string().parse::<Method>().unwrap(), m);
        }
        assert!("nope".parse::<Method>().is_err());
    }
}
