//! Higher weight spectra, generalized weight polynomials and graded Betti numbers
//! of the matroids attached to Reed–Muller codes.

pub mod codes;
pub mod correspondence;
pub mod error;
pub mod exactalg;
pub mod formulas;
pub mod geometry;
pub mod gwp;
pub mod matroid;
pub mod pipeline;
pub mod resolution;
pub mod support;

pub use error::{Error, Result};
