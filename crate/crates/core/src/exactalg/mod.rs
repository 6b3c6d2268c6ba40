//! Finite-field arithmetic, matrices over GF(q), exact rational solving and
//! the counting primitives shared by the rest of the crate.

mod counting;
mod field;
mod matrix;
mod rational;

pub use counting::{binomial, gaussian_binomial, is_prime, prime_factors, prime_power, q_falling};
pub use field::{field_of_order, make_field, FieldElement, FiniteField, MAX_ORDER};
pub use matrix::FFMatrix;
pub use rational::{ratio, solve_exact};
