//! Exact combinatorics of complete symmetric varieties.
//!
//! Everything here is computed over exact rational arithmetic: root systems
//! and Weyl groups from a Cartan datum, involutions encoded by Satake
//! diagrams, restricted root systems, the spherical weight lattice and the
//! Picard lattice of the wonderful compactification, Lakshmibai-Seshadri
//! path crystals, standard monomials for the ring of sections, and PRV
//! witness search for tensor product decompositions.
//!
//! The crate is organized bottom-up:
//!
//! - [`cartan`] — root systems, Weyl groups, characters, dimension oracles
//! - [`satake`] — involutions from Satake diagrams, restricted roots,
//!   spherical and Picard lattices, section-space dimensions
//! - [`lspath`] — LS paths, root operators, crystal graphs
//! - [`smt`] — standard monomials and the monomial order
//! - [`prv`] — tensor decomposition engines and PRV witnesses
//! - [`acceptance`] — the self-check sweeps used by the CLI and test suite

pub mod acceptance;
pub mod cartan;
pub mod linalg;
pub mod lspath;
pub mod prv;
pub mod satake;
pub mod smt;

use thiserror::Error;

/// Exact rational scalar used throughout.
pub type Rat = num::BigRational;
/// Exact integer used for dimensions and multiplicities.
pub type Int = num::BigInt;

pub(crate) fn rat(n: i64) -> Rat {
    Rat::from_integer(Int::from(n))
}

/// Errors reported by the library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid Cartan datum: {0}")]
    InvalidCartan(String),
    #[error("Cartan datum is not of finite type: {0}")]
    NotFiniteType(String),
    #[error("not a valid Satake diagram: {0}")]
    InvalidSatake(String),
    #[error("invalid weight: {0}")]
    InvalidWeight(String),
    #[error("weight is not in the required lattice: {0}")]
    NotInLattice(String),
    #[error("group enumeration exceeds the configured cap of {cap} elements")]
    GroupTooLarge { cap: usize },
    #[error("crystal generation exceeds the configured cap of {cap} paths")]
    CrystalCapExceeded { cap: usize },
    #[error("internal consistency failure: {0}")]
    Inconsistent(String),
    #[error("verification failed: {0}")]
    VerificationFailed(String),
    #[error("unknown preset '{0}'")]
    UnknownPreset(String),
}

pub type Result<T> = std::result::Result<T, Error>;

/// Resource bounds for the enumerative algorithms.
#[derive(Debug, Clone)]
pub struct Limits {
    /// Hard cap on Weyl group enumeration.
    pub max_group: usize,
    /// Hard cap on root closure (guards non-finite data before the
    /// positive-definiteness check can fire).
    pub max_roots: usize,
    /// Hard cap on crystal closures.
    pub crystal_cap: usize,
    /// Side of the dominant box used to certify lattice bases.
    pub lattice_box: i64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_group: 1_000_000,
            max_roots: 100_000,
            crystal_cap: 100_000,
            lattice_box: 4,
        }
    }
}
