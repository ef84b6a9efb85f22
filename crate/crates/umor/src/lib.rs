//! The weighted ring Λ(x₁..x_k) ⊗ Γ(y₁..y_k) of cellular chains on unordered
//! configurations in a bouquet of k circles, with its integral product and the
//! ring maps induced by free group homomorphisms.

mod element;
mod error;
mod induced;
mod shuffle;

pub use element::{
    exterior_degree, monomial_product_coeff, monomial_weight, monomials_of_weight, Monomial, UMorElement,
};
pub use error::UMorError;
pub use induced::{
    apply_induced, big_omega, exterior_divided_power, induced_map, linear_divided_power, omega, InducedMap,
};
pub use shuffle::{binomial, signed_shuffle_coeff};
