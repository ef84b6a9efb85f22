//! Free groups on finitely many generators: reduced words, homomorphisms,
//! abelianization and the content classes c_i(w) in the exterior algebra on H.

mod content;
mod error;
mod exterior;
mod map;
mod parse;
mod word;

pub use content::{abelianize, content2, content_component};
pub use error::FreeGroupError;
pub use exterior::ExteriorClass;
pub use map::FreeGroupMap;
pub use parse::{parse_candidates, parse_word, NamedMap};
pub use word::{reduce, Word};
