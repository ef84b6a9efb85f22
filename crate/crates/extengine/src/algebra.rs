use exactla::PrimeField;

use crate::ExtError;

/// A(d) = F_p[ŷ_0, ŷ_1, …]/(ŷ_k^{d_{k+1}}) with ŷ_k in weight −2D_k, D_k = d_0⋯d_k.
///
/// Only finitely many heights are stored; every later variable has height `tail`.
/// `first` is the global index of ŷ_0, so that A(p^i, p, p, …) can report its
/// first variable as ŷ_i.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedAlgebra {
    field: PrimeField,
    d0: u64,
    heights: Vec<u32>,
    tail: u32,
    first: usize,
}

impl TruncatedAlgebra {
    pub fn new(field: PrimeField, d0: u64, heights: Vec<u32>, tail: u32) -> Result<Self, ExtError> {
        if d0 == 0 || tail < 2 || heights.iter().any(|&h| h < 2) {
            return Err(ExtError::BadAlgebra);
        }
        Ok(TruncatedAlgebra {
            field,
            d0,
            heights,
            tail,
            first: 0,
        })
    }

    /// A(1, p, p, …), the divided power algebra Γ_{F_p}(y) with ŷ_k = y^{[p^k]}.
    pub fn divided_powers(field: PrimeField) -> Self {
        let p = field.modulus() as u32;
        TruncatedAlgebra {
            field,
            d0: 1,
            heights: Vec::new(),
            tail: p,
            first: 0,
        }
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn d0(&self) -> u64 {
        self.d0
    }

    pub fn first_index(&self) -> usize {
        self.first
    }

    /// Nilpotency order of ŷ_k, i.e. d_{k+1}.
    pub fn height(&self, k: usize) -> u32 {
        self.heights.get(k).copied().unwrap_or(self.tail)
    }

    /// D_k, saturating for variables far beyond any finite module.
    pub fn unit(&self, k: usize) -> u64 {
        (0..k).fold(self.d0, |acc, j| acc.saturating_mul(self.height(j) as u64))
    }

    /// Weight of ŷ_k, which is −2D_k.
    pub fn var_weight(&self, k: usize) -> i64 {
        -(2 * self.unit(k).min(i64::MAX as u64 / 4) as i64)
    }

    /// Number of variables whose weight step is at most `span`.
    pub fn variables_within(&self, span: i64) -> usize {
        (0..).take_while(|&k| -self.var_weight(k) <= span).count()
    }

    /// The algebra of the variables after ŷ_0: A(D_1, d_2, d_3, …).
    pub fn drop_first(&self) -> Self {
        TruncatedAlgebra {
            field: self.field,
            d0: self.unit(1),
            heights: self.heights.iter().skip(1).copied().collect(),
            tail: self.tail,
            first: self.first + 1,
        }
    }

    /// Exponent vectors over the first `vars` variables of monomials of weight −2s.
    pub fn monomials(&self, vars: usize, s: u64) -> Vec<Vec<u32>> {
        let mut out = Vec::new();
        let mut e = vec![0u32; vars];
        self.monomials_rec(vars, 0, s, &mut e, &mut out);
        out
    }

    fn monomials_rec(&self, vars: usize, k: usize, rest: u64, e: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if k == vars {
            if rest == 0 {
                out.push(e.clone());
            }
            return;
        }
        let unit = self.unit(k);
        let mut x = 0u32;
        while x < self.height(k) && x as u64 * unit <= rest {
            e[k] = x;
            self.monomials_rec(vars, k + 1, rest - x as u64 * unit, e, out);
            x += 1;
        }
        e[k] = 0;
    }
}
