//! Ext over divided power algebras by free–narrow decomposition of the modules B_u,
//! and the assembly of homology dimensions of configuration spaces from it.

mod algebra;
mod barcode;
mod bu;
mod decompose;
mod error;
mod ext;
mod module;
mod sparse;
mod tame;

pub use algebra::TruncatedAlgebra;
pub use barcode::{barcode, Bar, Barcode};
pub use bu::build_bu;
pub use decompose::{
    adapted_generators, compute_nui, free_narrow, quotient_mod_variable, FreeNarrow, NuiResult, NuiStage,
};
pub use error::ExtError;
pub use ext::{
    assemble_ext, descriptor_series, ell, ext_mg, ext_of_barcode, ext_rational_bu, polynomial_series, shape_series,
    split_mg, structured_betti, Coefficients, ExtGenerator, ExtSummary, Shape,
};
pub use module::{Pairing, WeightedBasis, WeightedModule};
pub use sparse::{is_sparse, sparse_report, sparse_subsets, theta_matrix, SparseReport};
pub use tame::{check_tame, TameReport};
