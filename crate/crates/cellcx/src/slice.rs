use std::collections::HashMap;

use exactla::SparseMatrix;

use crate::{differential, records_with_bars, CellError, Record};

/// All records of one weight, bucketed by bar-degree, with the differentials
/// `d[b]`: C_b → C_{b−1} (d[0] is the zero map to nothing).
#[derive(Debug, Clone)]
pub struct ChainSlice {
    genus: usize,
    n: u32,
    basis: Vec<Vec<Record>>,
    index: Vec<HashMap<Record, usize>>,
    d: Vec<SparseMatrix>,
}

impl ChainSlice {
    pub fn build(genus: usize, n: u32) -> Result<Self, CellError> {
        let basis: Vec<Vec<Record>> = (0..=n as usize).map(|b| records_with_bars(genus, n, b)).collect();
        let index: Vec<HashMap<Record, usize>> = basis
            .iter()
            .map(|bucket| bucket.iter().cloned().enumerate().map(|(i, r)| (r, i)).collect())
            .collect();
        let mut d = vec![SparseMatrix::zeros(0, basis[0].len())];
        for b in 1..basis.len() {
            let mut entries = Vec::new();
            for (col, t) in basis[b].iter().enumerate() {
                for (s, &c) in differential(t)?.terms() {
                    let row = index[b - 1][s];
                    entries.push((row, col, i64::try_from(c).map_err(|_| CellError::Overflow)?));
                }
            }
            d.push(SparseMatrix::new(basis[b - 1].len(), basis[b].len(), entries)?);
        }
        Ok(ChainSlice {
            genus,
            n,
            basis,
            index,
            d,
        })
    }

    /// Builds and checks ∂∘∂ = 0.
    pub fn build_verified(genus: usize, n: u32) -> Result<Self, CellError> {
        let s = Self::build(genus, n)?;
        s.verify_square_zero()?;
        Ok(s)
    }

    pub fn verify_square_zero(&self) -> Result<(), CellError> {
        for b in 2..self.d.len() {
            if !self.d[b - 1].mul(&self.d[b])?.is_zero() {
                return Err(CellError::NotAComplex {
                    g: self.genus,
                    n: self.n,
                    b,
                });
            }
        }
        Ok(())
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// Largest bar-degree, equal to n.
    pub fn max_bar(&self) -> usize {
        self.basis.len() - 1
    }

    pub fn basis(&self, b: usize) -> &[Record] {
        self.basis.get(b).map_or(&[], |v| v.as_slice())
    }

    pub fn dim(&self, b: usize) -> usize {
        self.basis(b).len()
    }

    pub fn index_of(&self, t: &Record) -> Option<usize> {
        self.index.get(t.b()).and_then(|m| m.get(t).copied())
    }

    /// ∂: C_b → C_{b−1}; zero matrices outside 1..=n.
    pub fn differential(&self, b: usize) -> SparseMatrix {
        if b == 0 || b >= self.d.len() {
            let rows = if b == 0 { 0 } else { self.dim(b - 1) };
            return SparseMatrix::zeros(rows, self.dim(b));
        }
        self.d[b].clone()
    }

    /// Coboundary δ: C^b → C^{b+1}, the transpose of ∂_{b+1}.
    pub fn codifferential(&self, b: usize) -> SparseMatrix {
        self.differential(b + 1).transpose()
    }

    pub fn total_dim(&self) -> usize {
        self.basis.iter().map(Vec::len).sum()
    }
}
