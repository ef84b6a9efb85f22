//! Cochain-level products by classes of configurations in a disc, over F_p.
//!
//! A cochain on the disc complex is a combination of bar records e_Q^∨; its
//! product with e_s^∨ is (−1)^{b(s)·ΣQ} e_{(Q*P_s, v_s)}^∨, which is the
//! concatenation formula read through the coproduct.

use exactla::{FpMatrix, PrimeField, SparseMatrix};

use crate::{CellError, ChainSlice, Record};

/// Matrix of h ↦ f·h from C^b(source) to C^{b + b_f}(target), where f = Σ c_Q e_Q^∨.
pub fn yoneda_left(
    f: &[(Vec<u32>, i64)],
    source: &ChainSlice,
    b: usize,
    target: &ChainSlice,
) -> Result<SparseMatrix, CellError> {
    let bf = f.first().map_or(0, |t| t.0.len());
    let tb = b + bf;
    let mut terms = Vec::new();
    for (col, s) in source.basis(b).iter().enumerate() {
        for (q, c) in f {
            assert_eq!(q.len(), bf, "cochain must be homogeneous in bar-degree");
            let qsum: u32 = q.iter().sum();
            let sign = if (s.b() as u64 * qsum as u64).is_multiple_of(2) {
                1
            } else {
                -1
            };
            let mut parts = q.clone();
            parts.extend_from_slice(&s.parts);
            let t = Record::new(parts, s.v.clone());
            if let Some(row) = target.index_of(&t) {
                terms.push((row, col, sign * c));
            }
        }
    }
    Ok(SparseMatrix::from_accumulated(target.dim(tb), source.dim(b), terms)?)
}

/// ε·(−): C^b(n) → C^{b+1}(n+1), e_s^∨ ↦ (−1)^{b(s)} e_{(1)·s}^∨.
pub fn eps_cochain(source: &ChainSlice, b: usize, target: &ChainSlice) -> Result<SparseMatrix, CellError> {
    yoneda_left(&[(vec![1], 1)], source, b, target)
}

/// Cocycles, coboundaries and cohomology dimensions of one slice over F_p.
#[derive(Debug, Clone)]
pub struct FpCochains {
    field: PrimeField,
    cocycles: Vec<Vec<Vec<u64>>>,
    coboundaries: Vec<FpMatrix>,
    coboundary_rank: Vec<usize>,
}

impl FpCochains {
    pub fn new(slice: &ChainSlice, field: PrimeField) -> Self {
        let top = slice.max_bar();
        let mut cocycles = Vec::new();
        let mut coboundaries = Vec::new();
        let mut coboundary_rank = Vec::new();
        for b in 0..=top {
            let delta = slice.codifferential(b).to_fp(field);
            cocycles.push(delta.kernel());
            let prev = if b == 0 {
                FpMatrix::zeros(field, slice.dim(0), 0)
            } else {
                slice.codifferential(b - 1).to_fp(field)
            };
            coboundary_rank.push(prev.rank());
            coboundaries.push(prev);
        }
        FpCochains {
            field,
            cocycles,
            coboundaries,
            coboundary_rank,
        }
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn cocycles(&self, b: usize) -> &[Vec<u64>] {
        self.cocycles.get(b).map_or(&[], |v| v.as_slice())
    }

    pub fn dim_h(&self, b: usize) -> usize {
        self.cocycles(b).len() - self.coboundary_rank.get(b).copied().unwrap_or(0)
    }

    /// Dimension of the image in H^b of the span of the given cocycles.
    pub fn span_in_cohomology(&self, b: usize, vectors: &[Vec<u64>]) -> usize {
        let Some(bd) = self.coboundaries.get(b) else {
            return 0;
        };
        let mut cols: Vec<Vec<u64>> = (0..bd.cols()).map(|c| bd.column(c)).collect();
        cols.extend(vectors.iter().cloned());
        if cols.is_empty() {
            return 0;
        }
        FpMatrix::from_columns(self.field, bd.rows(), &cols).rank() - self.coboundary_rank[b]
    }

    /// Rank of the map H^b(self) → H^{b'}(target) induced by a cochain map.
    pub fn induced_rank(&self, b: usize, map: &SparseMatrix, target: &FpCochains, tb: usize) -> usize {
        let m = map.to_fp(self.field);
        let images: Vec<Vec<u64>> = self.cocycles(b).iter().map(|z| m.mul_vec(z)).collect();
        target.span_in_cohomology(tb, &images)
    }
}

/// Dimension of Σ_j im(H(E_j)) inside the target cohomology, from sparse ranks alone.
///
/// Each pair is a cochain map E_j into the target degree and the coboundary δ_j out of
/// its source degree; `into_target` is the coboundary δ′ arriving in the target degree.
/// The block matrix [E_1 ⋯ E_J δ′; diag(δ_j) 0] has rank Σ rank δ_j + rank δ′ plus the
/// dimension of the span of the images.
pub fn cohomology_image_rank(
    maps: &[(SparseMatrix, SparseMatrix)],
    into_target: &SparseMatrix,
    field: PrimeField,
) -> Result<usize, CellError> {
    let target_rows = into_target.rows();
    let mut entries = Vec::new();
    let (mut row, mut col) = (target_rows, 0);
    let mut subtract = exactla::rank_mod_p(into_target, field);
    for (e, delta) in maps {
        assert_eq!(e.rows(), target_rows, "map must land in the target degree");
        assert_eq!(e.cols(), delta.cols(), "map and coboundary share a source");
        entries.extend(e.entries().iter().map(|&(r, c, v)| (r, col + c, v)));
        entries.extend(delta.entries().iter().map(|&(r, c, v)| (row + r, col + c, v)));
        subtract += exactla::rank_mod_p(delta, field);
        row += delta.rows();
        col += e.cols();
    }
    entries.extend(into_target.entries().iter().map(|&(r, c, v)| (r, col + c, v)));
    let block = SparseMatrix::from_accumulated(row, col + into_target.cols(), entries)?;
    Ok(exactla::rank_mod_p(&block, field) - subtract)
}
