use exactla::{rank, smith_normal_form, CoefficientRing};
use grading::{HomologyEntry, HomologyTable};

use crate::{CellError, ChainSlice};

/// Cohomology of the transposed slice at bar-degree b.
pub fn cohomology_at(slice: &ChainSlice, b: usize, ring: CoefficientRing) -> Result<HomologyEntry, CellError> {
    let dim = slice.dim(b) as u64;
    let into = slice.differential(b + 1).transpose(); // δ_b
    let from = slice.differential(b).transpose(); // δ_{b−1}
    match ring {
        CoefficientRing::Integers => {
            let out = smith_normal_form(&into);
            let inc = smith_normal_form(&from);
            let torsion = inc.torsion_u64().ok_or(CellError::Overflow)?;
            Ok(HomologyEntry {
                rank: dim - out.rank() as u64 - inc.rank() as u64,
                torsion,
            })
        }
        field => {
            let r_out = rank(&into, field)? as u64;
            let r_in = rank(&from, field)? as u64;
            Ok(HomologyEntry {
                rank: dim - r_out - r_in,
                torsion: Vec::new(),
            })
        }
    }
}

/// H_i(C_n) for i = 0..=n, read from bar-degree n − i.
pub fn homology(slice: &ChainSlice, ring: CoefficientRing) -> Result<Vec<HomologyEntry>, CellError> {
    let n = slice.n() as usize;
    (0..=n).map(|i| cohomology_at(slice, n - i, ring)).collect()
}

/// Slices n = 0..=max_n, one after another.
pub fn homology_table(genus: usize, max_n: u32, ring: CoefficientRing) -> Result<HomologyTable, CellError> {
    let mut table = HomologyTable::new(ring.label(), max_n);
    for n in 0..=max_n {
        let slice = ChainSlice::build_verified(genus, n)?;
        for (i, e) in homology(&slice, ring)?.into_iter().enumerate() {
            table.set(n, i as u32, e);
        }
    }
    Ok(table)
}
