//! Cellular chains on one-point compactified configuration spaces of Σ_{g,1}.
//!
//! A cell is indexed by a record (b, P, v); the complex splits by weight n and
//! its cohomology at bar-degree b is H_{n−b}(C_n(Σ_{g,1})).

mod action;
mod chain;
mod error;
mod homology;
mod record;
mod slice;
mod yoneda;

pub use action::act;
pub use chain::{deconcatenate, differential, product, record_product, Chain, DeconcatTerm};
pub use error::CellError;
pub use homology::{cohomology_at, homology, homology_table};
pub use record::{compositions, enumerate_records, records_with_bars, Record};
pub use slice::ChainSlice;
pub use yoneda::{cohomology_image_rank, eps_cochain, yoneda_left, FpCochains};
