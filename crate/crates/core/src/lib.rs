//! Exact computation of vanishing entries in symmetric-group character
//! tables whose row index is an ℓ-core partition.
//!
//! The crate is organised bottom-up:
//!
//! - [`partition`]: partitions, hook lengths, `p(n)` and `p_A(n)`.
//! - [`abacus`]: ℓ-abaci for ℓ-cores, core enumeration and the extremal bound `N_ℓ`.
//! - [`characters`]: Murnaghan–Nakayama evaluation of `χ_λ(μ)`.
//! - [`numtheory`]: Legendre symbols, twisted divisor sums, `δ_ℓ`, `1/α_ℓ`.
//! - [`census`]: zero counts `Z_ℓ(n)`, `Z*_ℓ(n)`, sweeps, caching and verification suites.

pub mod abacus;
pub mod census;
pub mod characters;
mod error;
pub mod numtheory;
pub mod partition;
pub mod series;

pub use error::{Error, Result};
pub use partition::Partition;

/// Arbitrary-precision nonnegative count.
pub type BigCount = num_bigint::BigUint;

/// Arbitrary-precision signed character value.
pub type CharValue = num_bigint::BigInt;
