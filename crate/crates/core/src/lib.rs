//! Depth, projective dimension and sequential Cohen-Macaulayness of monomial
//! ideals, computed from Stanley-Reisner complexes and cross-checked against
//! a brute-force Hochster-formula oracle.
//!
//! The pipeline for a square-free ideal `I ⊂ k[x_1..x_n]` with `k = GF(p)`:
//!
//! * [`covers`]: minimal primes are the minimal vertex covers of the facet
//!   complex; their largest size is the big height `d`.
//! * [`scm`]: depth from the Cohen-Macaulay skeletons of `N(I)`, `pd = n - depth`,
//!   and the pure-skeleton test for sequential Cohen-Macaulayness.
//! * [`oracle`]: `pd` from the full multigraded Betti table.
//!
//! `depth ≤ n - d` and `pd ≥ d` hold for every ideal; both are equalities
//! when `R/I` is sequentially Cohen-Macaulay. General monomial ideals go
//! through [`polar`].

pub mod complex;
pub mod covers;
mod error;
pub mod families;
pub mod homology;
pub mod oracle;
pub mod polar;
pub mod scm;
pub mod subset;

#[cfg(test)]
mod testing;

pub use complex::{
    facet_complex, facet_ideal, stanley_reisner_complex, stanley_reisner_ideal, SimplicialComplex,
    SquareFreeIdeal, Variables,
};
pub use covers::{
    big_height, krull_dimension, minimal_primes, minimal_vertex_covers, PrimaryDecomposition,
};
pub use error::{Error, Result};
pub use homology::{is_cohen_macaulay, reduced_betti_numbers, BettiVector, GfMatrix, PrimeField};
pub use oracle::{depth_oracle, hochster_betti_table, pd_oracle, BettiTable, DEFAULT_ORACLE_CAP};
pub use polar::{big_height_general, pd_general, polarize, MonomialIdeal, PolarizationMap};
pub use scm::{
    depth, is_sequentially_cm, projective_dimension, verify_main_theorem, VerificationReport,
};
pub use subset::{Face, Subset};
