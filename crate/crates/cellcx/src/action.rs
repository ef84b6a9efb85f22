use std::collections::HashMap;

use exactla::SparseMatrix;
use freegroup::FreeGroupMap;
use umor::{induced_map, UMorElement};

use crate::{CellError, ChainSlice, Record};

/// Matrices of ρ(φ) on each bar-degree: identity on the bars, the induced ring map on v.
pub fn act(phi: &FreeGroupMap, slice: &ChainSlice) -> Result<Vec<SparseMatrix>, CellError> {
    let rank = 2 * slice.genus();
    if phi.source_rank() != rank || phi.target_rank() != rank {
        return Err(CellError::MapRank {
            genus: slice.genus(),
            got: phi.source_rank(),
        });
    }
    let f = induced_map(phi);
    let mut cache: HashMap<Vec<u32>, UMorElement> = HashMap::new();
    let mut out = Vec::new();
    for b in 0..=slice.max_bar() {
        let mut entries = Vec::new();
        for (col, t) in slice.basis(b).iter().enumerate() {
            if !cache.contains_key(&t.v) {
                cache.insert(t.v.clone(), f.apply_monomial(&t.v)?);
            }
            for (w, &c) in cache[&t.v].terms() {
                let row = slice
                    .index_of(&Record::new(t.parts.clone(), w.clone()))
                    .expect("weight is preserved");
                entries.push((row, col, i64::try_from(c).map_err(|_| CellError::Overflow)?));
            }
        }
        out.push(SparseMatrix::new(slice.dim(b), slice.dim(b), entries)?);
    }
    Ok(out)
}
