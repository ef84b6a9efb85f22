//! Mapping classes of Σ_{g,1} as endomorphisms of the free group on γ₁..γ_{2g}:
//! validation, the crossed homomorphism ξ and its reduction mod p, and the
//! resulting triviality checks on cellular chains.

mod candidate;
mod error;
mod triviality;
mod xi;

pub use candidate::{
    catalog_entry, identity, load_candidates, separating_candidate, symplectic_form, twist, twist_power, validate,
    MappingClassCandidate, ValidationReport,
};
pub use error::McgError;
pub use triviality::{check_chain_triviality, check_preconditions, check_umor_triviality};
pub use xi::{check_cocycle, check_equivariance, xi, xi_p, XiValue};
