use std::collections::BTreeMap;

use exactla::{FpMatrix, PrimeField};

use crate::{ExtError, TruncatedAlgebra};

/// Per-weight bases of a subspace, as coordinate vectors in the ambient module.
pub type WeightedBasis = BTreeMap<i64, Vec<Vec<u64>>>;

/// A symmetric invariant pairing M_w × M_{c−w} → F_p, ⟨x, y⟩ = xᵀ G_w y.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Pairing {
    pub center: i64,
    pub gram: BTreeMap<i64, FpMatrix>,
}

/// A finite weighted module over a truncated polynomial algebra, stored as
/// one dense matrix per variable and source weight.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedModule {
    algebra: TruncatedAlgebra,
    dims: BTreeMap<i64, usize>,
    mult: Vec<BTreeMap<i64, FpMatrix>>,
    pairing: Option<Pairing>,
}

impl WeightedModule {
    /// `mult[k][m]` is ŷ_k from weight m to weight m − 2D_k; missing entries are zero.
    pub fn new(
        algebra: TruncatedAlgebra,
        dims: BTreeMap<i64, usize>,
        mult: Vec<BTreeMap<i64, FpMatrix>>,
    ) -> Result<Self, ExtError> {
        let dims: BTreeMap<i64, usize> = dims.into_iter().filter(|&(_, d)| d > 0).collect();
        let span = match (dims.keys().next(), dims.keys().next_back()) {
            (Some(lo), Some(hi)) => hi - lo,
            _ => 0,
        };
        let vars = algebra.variables_within(span);
        let mut kept = Vec::with_capacity(vars);
        for k in 0..vars {
            let step = algebra.var_weight(k);
            let mut table = BTreeMap::new();
            if let Some(given) = mult.get(k) {
                for (&m, mat) in given {
                    let (src, tgt) = (dim_of(&dims, m), dim_of(&dims, m + step));
                    if mat.rows() != tgt || mat.cols() != src {
                        return Err(ExtError::Malformed(format!(
                            "variable {k} at weight {m} has the wrong shape"
                        )));
                    }
                    if mat.field() != algebra.field() {
                        return Err(ExtError::Malformed("matrix over the wrong field".into()));
                    }
                    if src > 0 && tgt > 0 && !mat.is_zero() {
                        table.insert(m, mat.clone());
                    }
                }
            }
            kept.push(table);
        }
        if mult.iter().skip(vars).any(|t| t.values().any(|m| !m.is_zero())) {
            return Err(ExtError::Malformed(
                "action by a variable beyond the weight span".into(),
            ));
        }
        let module = WeightedModule {
            algebra,
            dims,
            mult: kept,
            pairing: None,
        };
        module.validate()?;
        Ok(module)
    }

    pub fn zero(algebra: TruncatedAlgebra) -> Self {
        WeightedModule {
            algebra,
            dims: BTreeMap::new(),
            mult: Vec::new(),
            pairing: None,
        }
    }

    fn validate(&self) -> Result<(), ExtError> {
        for k in 0..self.variables() {
            let h = self.algebra.height(k);
            for &m in self.dims.keys() {
                if !self.power(k, h, m).is_zero() {
                    return Err(ExtError::NotNilpotent { var: k, weight: m });
                }
                for l in k + 1..self.variables() {
                    let kl = self.matrix(k, m + self.algebra.var_weight(l)).mul(&self.matrix(l, m))?;
                    let lk = self.matrix(l, m + self.algebra.var_weight(k)).mul(&self.matrix(k, m))?;
                    if kl != lk {
                        return Err(ExtError::NotCommuting { a: k, b: l, weight: m });
                    }
                }
            }
        }
        Ok(())
    }

    /// Attaches a pairing after checking symmetry, invariance and nondegeneracy.
    pub fn with_pairing(mut self, center: i64, gram: BTreeMap<i64, FpMatrix>) -> Result<Self, ExtError> {
        let f = self.field();
        let g = |w: i64| -> FpMatrix {
            gram.get(&w)
                .cloned()
                .unwrap_or_else(|| FpMatrix::zeros(f, self.dim(w), self.dim(center - w)))
        };
        for &w in self.dims.keys() {
            let gw = g(w);
            let d = self.dim(w);
            if gw.rows() != d || gw.cols() != self.dim(center - w) || d != gw.cols() || gw.rank() != d {
                return Err(ExtError::BadPairing { weight: w });
            }
            if gw.transpose() != g(center - w) {
                return Err(ExtError::BadPairing { weight: w });
            }
            for k in 0..self.variables() {
                // ⟨ŷx, y⟩ = ⟨x, ŷy⟩ for x ∈ M_w, y ∈ M_{c−w−step}
                let step = self.algebra.var_weight(k);
                let other = center - w - step;
                let left = self.matrix(k, w).transpose().mul(&g(w + step))?;
                let right = g(w).mul(&self.matrix(k, other))?;
                if left != right {
                    return Err(ExtError::BadPairing { weight: w });
                }
            }
        }
        self.pairing = Some(Pairing {
            center,
            gram: self.dims.keys().map(|&w| (w, g(w))).collect(),
        });
        Ok(self)
    }

    pub fn pairing(&self) -> Option<&Pairing> {
        self.pairing.as_ref()
    }

    pub fn algebra(&self) -> &TruncatedAlgebra {
        &self.algebra
    }

    pub fn field(&self) -> PrimeField {
        self.algebra.field()
    }

    /// Number of variables that can act nontrivially given the weight span.
    pub fn variables(&self) -> usize {
        self.mult.len()
    }

    pub fn dim(&self, w: i64) -> usize {
        dim_of(&self.dims, w)
    }

    pub fn dims(&self) -> &BTreeMap<i64, usize> {
        &self.dims
    }

    pub fn weights(&self) -> Vec<i64> {
        self.dims.keys().copied().collect()
    }

    pub fn total_dim(&self) -> usize {
        self.dims.values().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.dims.is_empty()
    }

    /// ŷ_k from weight m, as a dim(m − 2D_k) × dim(m) matrix.
    pub fn matrix(&self, k: usize, m: i64) -> FpMatrix {
        let step = self.algebra.var_weight(k);
        self.mult
            .get(k)
            .and_then(|t| t.get(&m))
            .cloned()
            .unwrap_or_else(|| FpMatrix::zeros(self.field(), self.dim(m + step), self.dim(m)))
    }

    /// ŷ_k^e from weight m.
    pub fn power(&self, k: usize, e: u32, m: i64) -> FpMatrix {
        self.monomial(&single(k, e), m)
    }

    /// Π ŷ_k^{e_k} from weight m.
    pub fn monomial(&self, exps: &[u32], m: i64) -> FpMatrix {
        let mut acc = FpMatrix::identity(self.field(), self.dim(m));
        let mut w = m;
        for (k, &e) in exps.iter().enumerate() {
            for _ in 0..e {
                acc = self.matrix(k, w).mul(&acc).expect("chained shapes agree");
                w += self.algebra.var_weight(k);
            }
        }
        acc
    }

    /// Weight of the monomial Π ŷ_k^{e_k}.
    pub fn monomial_weight(&self, exps: &[u32]) -> i64 {
        exps.iter()
            .enumerate()
            .map(|(k, &e)| e as i64 * self.algebra.var_weight(k))
            .sum()
    }

    pub fn dualize(&self) -> WeightedModule {
        let dims = self.dims.iter().map(|(&w, &d)| (-w, d)).collect();
        let mult = (0..self.variables())
            .map(|k| {
                let step = self.algebra.var_weight(k);
                // (ŷf)(x) = f(ŷx), so ŷ on Hom(M_{m+step}) is the transpose of ŷ on M_m
                self.mult[k]
                    .iter()
                    .map(|(&m, mat)| (-(m + step), mat.transpose()))
                    .collect()
            })
            .collect();
        WeightedModule::new(self.algebra.clone(), dims, mult).expect("dual of a valid module is valid")
    }

    /// M[s]: every weight raised by s.
    pub fn shift(&self, s: i64) -> WeightedModule {
        WeightedModule {
            algebra: self.algebra.clone(),
            dims: self.dims.iter().map(|(&w, &d)| (w + s, d)).collect(),
            mult: self
                .mult
                .iter()
                .map(|t| t.iter().map(|(&m, a)| (m + s, a.clone())).collect())
                .collect(),
            pairing: self.pairing.as_ref().map(|p| Pairing {
                center: p.center + 2 * s,
                gram: p.gram.iter().map(|(&w, g)| (w + s, g.clone())).collect(),
            }),
        }
    }

    /// The same module with ŷ_k replaced by c_k·ŷ_k.
    pub fn scale_variables(&self, factor: impl Fn(usize) -> u64) -> Result<WeightedModule, ExtError> {
        let mult = self
            .mult
            .iter()
            .enumerate()
            .map(|(k, t)| t.iter().map(|(&m, a)| (m, a.scale(factor(k)))).collect())
            .collect();
        WeightedModule::new(self.algebra.clone(), self.dims.clone(), mult)
    }

    /// Restriction to a subspace that must be stable under every variable.
    pub fn submodule(&self, basis: &WeightedBasis) -> Result<WeightedModule, ExtError> {
        let f = self.field();
        let dims: BTreeMap<i64, usize> = basis.iter().map(|(&w, b)| (w, b.len())).collect();
        let mut mult = Vec::new();
        for k in 0..self.variables() {
            let step = self.algebra.var_weight(k);
            let mut table = BTreeMap::new();
            for (&m, vecs) in basis {
                let tgt = basis.get(&(m + step)).map_or(&[][..], |v| v.as_slice());
                let a = self.matrix(k, m);
                let tmat = FpMatrix::from_columns(f, self.dim(m + step), tgt);
                let mut cols = Vec::new();
                for v in vecs {
                    let image = a.mul_vec(v);
                    let coords = if tgt.is_empty() {
                        image.iter().all(|&x| x == 0).then(Vec::new)
                    } else {
                        tmat.solve(&image)?
                    };
                    cols.push(coords.ok_or(ExtError::NotStable { weight: m })?);
                }
                table.insert(m, FpMatrix::from_columns(f, tgt.len(), &cols));
            }
            mult.push(table);
        }
        WeightedModule::new(self.algebra.clone(), dims, mult)
    }

    /// Gram matrices of the pairing restricted to a subspace with the same center.
    pub fn restricted_gram(&self, basis: &WeightedBasis) -> Result<BTreeMap<i64, FpMatrix>, ExtError> {
        let p = self.pairing.as_ref().ok_or(ExtError::MissingPairing)?;
        let f = self.field();
        let mut out = BTreeMap::new();
        for (&w, vecs) in basis {
            let other = basis.get(&(p.center - w)).map_or(&[][..], |v| v.as_slice());
            let a = FpMatrix::from_columns(f, self.dim(w), vecs);
            let b = FpMatrix::from_columns(f, self.dim(p.center - w), other);
            let g = p
                .gram
                .get(&w)
                .cloned()
                .unwrap_or_else(|| FpMatrix::zeros(f, self.dim(w), b.rows()));
            out.insert(w, a.transpose().mul(&g)?.mul(&b)?);
        }
        Ok(out)
    }

    /// Weight → dimension, as used by Poincaré polynomials in s with s^w ↔ weight w.
    pub fn poincare(&self) -> BTreeMap<i64, u64> {
        self.dims.iter().map(|(&w, &d)| (w, d as u64)).collect()
    }
}

pub(crate) fn dim_of(dims: &BTreeMap<i64, usize>, w: i64) -> usize {
    dims.get(&w).copied().unwrap_or(0)
}

pub(crate) fn single(k: usize, e: u32) -> Vec<u32> {
    let mut v = vec![0; k + 1];
    v[k] = e;
    v
}
