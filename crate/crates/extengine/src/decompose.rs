use std::collections::BTreeMap;

use exactla::FpMatrix;
use serde::{Deserialize, Serialize};

use crate::module::WeightedBasis;
use crate::{barcode, build_bu, check_tame, Bar, Barcode, ExtError, TameReport, WeightedModule};

/// Generators of a cyclic decomposition of M over ŷ_0, one per bar.
pub fn adapted_generators(module: &WeightedModule) -> Result<Vec<(Bar, Vec<u64>)>, ExtError> {
    let f = module.field();
    let code = barcode(module, 0)?;
    let step = code.step;
    let mut out = Vec::new();
    // every string ends in the socle ker ŷ_0; strings are independent iff their ends are
    for t in module.weights() {
        let mut ends: Vec<Vec<u64>> = Vec::new();
        for c in (1..=code.height).rev() {
            let m = t + (c as i64 - 1) * step;
            if module.dim(m) == 0 {
                continue;
            }
            let kernel = module.power(0, c, m).kernel();
            let down = module.power(0, c - 1, m);
            for v in kernel {
                let end = down.mul_vec(&v);
                if end.iter().all(|&x| x == 0) {
                    continue;
                }
                let before = rank_of(f, module.dim(t), &ends);
                ends.push(end);
                if rank_of(f, module.dim(t), &ends) > before {
                    out.push((Bar { start: m, size: c }, v));
                } else {
                    ends.pop();
                }
            }
        }
    }
    out.sort_by_key(|a| a.0);
    let found: Vec<Bar> = out.iter().map(|g| g.0).collect();
    if found != code.bars {
        return Err(ExtError::BarcodeMismatch { var: 0 });
    }
    Ok(out)
}

pub(crate) fn rank_of(f: exactla::PrimeField, rows: usize, cols: &[Vec<u64>]) -> usize {
    if cols.is_empty() || rows == 0 {
        0
    } else {
        FpMatrix::from_columns(f, rows, cols).rank()
    }
}

fn add(f: exactla::PrimeField, a: &[u64], b: &[u64]) -> Vec<u64> {
    a.iter().zip(b).map(|(&x, &y)| f.add(x, y)).collect()
}

fn sub(f: exactla::PrimeField, a: &[u64], b: &[u64]) -> Vec<u64> {
    a.iter().zip(b).map(|(&x, &y)| f.sub(x, y)).collect()
}

fn is_zero(v: &[u64]) -> bool {
    v.iter().all(|&x| x == 0)
}

/// M ≅ F ⊕ N over all variables, with F free over ŷ_0 and N narrow.
#[derive(Debug, Clone)]
pub struct FreeNarrow {
    pub free: WeightedModule,
    pub narrow: WeightedModule,
    /// Basis of M per weight: the F basis followed by the N basis.
    pub change_of_basis: BTreeMap<i64, FpMatrix>,
}

/// Corrects a narrow generator ν of bar size c to ν − w̄ with every ŷ_h, h ≥ 1, killing it:
/// w_h = w_{h−1} + ŷ_0^{d_1−c} ŷ_1^{d_2−1} ⋯ ŷ_{h−1}^{d_h−1} z′ where 𝔞z′ = ŷ_h(ν − w_{h−1}).
fn correct_generator(module: &WeightedModule, start: i64, size: u32, nu: &[u64]) -> Result<Vec<u64>, ExtError> {
    let f = module.field();
    let alg = module.algebra();
    let mut w = vec![0; nu.len()];
    for h in 1..module.variables() {
        let x = sub(f, nu, &w);
        let z = module.matrix(h, start).mul_vec(&x);
        if is_zero(&z) {
            continue;
        }
        let mut prefix: Vec<u32> = (0..h).map(|j| alg.height(j) - 1).collect();
        prefix[0] = alg.height(0) - size;
        let mut a = prefix.clone();
        a.push(1);
        let source = start + alg.var_weight(h) - module.monomial_weight(&a);
        let matrix = module.monomial(&a, source);
        let solution = if module.dim(source) == 0 {
            None
        } else {
            matrix.solve(&z)?
        };
        let z_prime = solution.ok_or_else(|| {
            ExtError::TamenessViolation(format!(
                "no preimage for the generator at weight {start} under variable {h}"
            ))
        })?;
        w = add(f, &w, &module.monomial(&prefix, source).mul_vec(&z_prime));
    }
    let corrected = sub(f, nu, &w);
    for h in 1..module.variables() {
        if !is_zero(&module.matrix(h, start).mul_vec(&corrected)) {
            return Err(ExtError::TamenessViolation(format!(
                "variable {h} does not kill the corrected generator at weight {start}"
            )));
        }
    }
    Ok(corrected)
}

/// Splits a self-dual M into a part free over ŷ_0 and a narrow part on which all
/// later variables vanish. The free part is the orthogonal complement of the span of
/// the corrected narrow strings; the narrow part lifts those strings to an
/// A-stable complement.
pub fn free_narrow(module: &WeightedModule) -> Result<FreeNarrow, ExtError> {
    let f = module.field();
    let pairing = module.pairing().ok_or(ExtError::MissingPairing)?.clone();
    let height = module.algebra().height(0);
    let step = module.algebra().var_weight(0);
    let mut narrow_gens = Vec::new();
    for (bar, v) in adapted_generators(module)? {
        if bar.size < height {
            narrow_gens.push((bar, correct_generator(module, bar.start, bar.size, &v)?));
        }
    }
    let strings = |gens: &[(Bar, Vec<u64>)]| -> WeightedBasis {
        let mut basis: WeightedBasis = BTreeMap::new();
        for (bar, v) in gens {
            for a in 0..bar.size {
                let w = bar.start + a as i64 * step;
                basis
                    .entry(w)
                    .or_default()
                    .push(module.power(0, a, bar.start).mul_vec(v));
            }
        }
        basis
    };
    let nbar = strings(&narrow_gens);

    let mut free_basis: WeightedBasis = BTreeMap::new();
    for w in module.weights() {
        let partners = nbar.get(&(pairing.center - w)).map_or(&[][..], |v| v.as_slice());
        let g = &pairing.gram[&w];
        let rows: Vec<Vec<i64>> = partners
            .iter()
            .map(|n| g.mul_vec(n).iter().map(|&x| x as i64).collect())
            .collect();
        let kernel = if rows.is_empty() {
            (0..module.dim(w)).map(|i| unit_vector(module.dim(w), i)).collect()
        } else {
            FpMatrix::from_rows(f, &rows).kernel()
        };
        if !kernel.is_empty() {
            free_basis.insert(w, kernel);
        }
    }
    let free = module.submodule(&free_basis)?;

    // lift each narrow generator x0 to x0 + φ, φ ∈ F, killed by ŷ_0^c and every later variable
    let mut lifted = Vec::new();
    for (bar, x0) in &narrow_gens {
        let fb = free_basis.get(&bar.start).map_or(&[][..], |v| v.as_slice());
        let mut ops = vec![module.power(0, bar.size, bar.start)];
        ops.extend((1..module.variables()).map(|h| module.matrix(h, bar.start)));
        let mut rows: Vec<Vec<i64>> = Vec::new();
        let mut rhs = Vec::new();
        for op in &ops {
            let target = op.mul_vec(x0);
            let images: Vec<Vec<u64>> = fb.iter().map(|v| op.mul_vec(v)).collect();
            for r in 0..op.rows() {
                rows.push(images.iter().map(|c| c[r] as i64).collect());
                rhs.push(f.neg(target[r]));
            }
        }
        let x = if fb.is_empty() || rows.is_empty() {
            if rhs.iter().any(|&v| v != 0) {
                return Err(ExtError::TamenessViolation(format!(
                    "narrow generator at weight {} has no lift",
                    bar.start
                )));
            }
            x0.clone()
        } else {
            let mut m = FpMatrix::zeros(f, rows.len(), fb.len());
            for (i, row) in rows.iter().enumerate() {
                for (j, &v) in row.iter().enumerate() {
                    m.set(i, j, v as u64);
                }
            }
            let phi = m.solve(&rhs)?.ok_or_else(|| {
                ExtError::TamenessViolation(format!("narrow generator at weight {} has no lift", bar.start))
            })?;
            let correction = fb.iter().zip(&phi).fold(vec![0; x0.len()], |acc, (v, &c)| {
                add(f, &acc, &v.iter().map(|&x| f.mul(x, c)).collect::<Vec<_>>())
            });
            add(f, x0, &correction)
        };
        lifted.push((*bar, x));
    }
    let narrow_basis = strings(&lifted);
    let narrow = module.submodule(&narrow_basis)?;

    let mut change_of_basis = BTreeMap::new();
    for w in module.weights() {
        let mut cols: Vec<Vec<u64>> = free_basis.get(&w).cloned().unwrap_or_default();
        cols.extend(narrow_basis.get(&w).cloned().unwrap_or_default());
        if cols.len() != module.dim(w) || rank_of(f, module.dim(w), &cols) != module.dim(w) {
            return Err(ExtError::TamenessViolation(format!(
                "F and N do not span M in weight {w}"
            )));
        }
        change_of_basis.insert(w, FpMatrix::from_columns(f, module.dim(w), &cols));
    }

    let gram = module.restricted_gram(&free_basis)?;
    let free = free.with_pairing(pairing.center, gram)?;
    let free_code = barcode(&free, 0)?;
    if free_code.free_count() != free_code.bars.len() {
        return Err(ExtError::TamenessViolation(
            "the orthogonal complement is not free".into(),
        ));
    }
    Ok(FreeNarrow {
        free,
        narrow,
        change_of_basis,
    })
}

fn unit_vector(n: usize, i: usize) -> Vec<u64> {
    let mut e = vec![0; n];
    e[i] = 1;
    e
}

/// F/ŷ_0F over the remaining variables, with the pairing ⟨[a], [b]⟩ = ⟨a, ŷ_0^{d_1−1} b⟩
/// centred 2d_0(d_1 − 1) higher.
pub fn quotient_mod_variable(module: &WeightedModule) -> Result<WeightedModule, ExtError> {
    let f = module.field();
    let alg = module.algebra().clone();
    let code = barcode(module, 0)?;
    if code.free_count() != code.bars.len() {
        return Err(ExtError::NotFree);
    }
    let step = alg.var_weight(0);
    let height = alg.height(0);
    // representatives of the quotient, and coordinates modulo ŷ_0F
    let mut reps: WeightedBasis = BTreeMap::new();
    let mut coords: BTreeMap<i64, FpMatrix> = BTreeMap::new();
    for w in module.weights() {
        let d = module.dim(w);
        let image = module.matrix(0, w - step);
        let mut cols: Vec<Vec<u64>> = (0..image.cols()).map(|c| image.column(c)).collect();
        let (_, pivots) = FpMatrix::from_columns(f, d, &{
            let mut all = cols.clone();
            all.extend((0..d).map(|i| unit_vector(d, i)));
            all
        })
        .rref();
        let n_img = cols.len();
        let sub_pivots: Vec<usize> = pivots.iter().filter(|&&c| c < n_img).copied().collect();
        let q: Vec<Vec<u64>> = pivots
            .iter()
            .filter(|&&c| c >= n_img)
            .map(|&c| unit_vector(d, c - n_img))
            .collect();
        if q.is_empty() {
            continue;
        }
        // [Q | image basis] is invertible; its inverse's first rows read off quotient coordinates
        let mut basis = q.clone();
        basis.extend(sub_pivots.iter().map(|&c| cols[c].clone()));
        cols.clear();
        let full = FpMatrix::from_columns(f, d, &basis);
        let mut inv_cols = Vec::new();
        for i in 0..d {
            inv_cols.push(full.solve(&unit_vector(d, i))?.expect("basis is invertible"));
        }
        let inverse = FpMatrix::from_columns(f, d, &inv_cols);
        let mut proj = FpMatrix::zeros(f, q.len(), d);
        for r in 0..q.len() {
            for c in 0..d {
                proj.set(r, c, inverse.get(r, c));
            }
        }
        coords.insert(w, proj);
        reps.insert(w, q);
    }
    let rest = alg.drop_first();
    let dims: BTreeMap<i64, usize> = reps.iter().map(|(&w, q)| (w, q.len())).collect();
    let mut mult = Vec::new();
    for k in 1..module.variables() {
        let s = alg.var_weight(k);
        let mut table = BTreeMap::new();
        for (&w, q) in &reps {
            let Some(proj) = coords.get(&(w + s)) else {
                continue;
            };
            let a = module.matrix(k, w);
            let cols: Vec<Vec<u64>> = q.iter().map(|v| proj.mul_vec(&a.mul_vec(v))).collect();
            table.insert(w, FpMatrix::from_columns(f, proj.rows(), &cols));
        }
        mult.push(table);
    }
    let quotient = WeightedModule::new(rest, dims, mult)?;
    let Some(pairing) = module.pairing() else {
        return Ok(quotient);
    };
    let center = pairing.center + 2 * alg.d0() as i64 * (height as i64 - 1);
    let mut gram = BTreeMap::new();
    for (&w, q) in &reps {
        let Some(other) = reps.get(&(center - w)) else {
            continue;
        };
        let top = module.power(0, height - 1, center - w);
        let g = &pairing.gram[&w];
        let a = FpMatrix::from_columns(f, module.dim(w), q);
        let b = top.mul(&FpMatrix::from_columns(f, module.dim(center - w), other))?;
        gram.insert(w, a.transpose().mul(g)?.mul(&b)?);
    }
    quotient.with_pairing(center, gram)
}

/// One step of the recursion: the module M_i = F_{u,i−1}/ŷ_{i−1}, its tameness shift and
/// report, and the narrow part N_{u,i} as a barcode over ŷ_i.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct NuiStage {
    pub index: usize,
    pub shift: i64,
    pub tame: TameReport,
    pub narrow: Barcode,
    pub free_dim: usize,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct NuiResult {
    pub u: usize,
    pub p: u64,
    pub stages: Vec<NuiStage>,
}

impl NuiResult {
    /// h with p^h − 1 ≤ u ≤ p^{h+1} − 2.
    pub fn expected_top(&self) -> usize {
        top_index(self.u, self.p)
    }

    pub fn barcode(&self, i: usize) -> Option<&Barcode> {
        self.stages.get(i).map(|s| &s.narrow)
    }

    /// (1+s⁻²)^u = Σ_i P_{N_{u,i}}(s)·(1 + s⁻² + ⋯ + s^{−2p^i+2}).
    pub fn poincare_identity_holds(&self) -> bool {
        let mut lhs: BTreeMap<i64, u64> = BTreeMap::new();
        for k in 0..=self.u {
            lhs.insert(-2 * k as i64, binomial(self.u as u64, k as u64));
        }
        let mut rhs: BTreeMap<i64, u64> = BTreeMap::new();
        for st in &self.stages {
            let len = self.p.pow(st.index as u32) as i64;
            for (w, d) in st.narrow.poincare() {
                for j in 0..len {
                    *rhs.entry(w - 2 * j).or_insert(0) += d;
                }
            }
        }
        rhs.retain(|_, d| *d > 0);
        lhs == rhs
    }

    /// Every N_{u,i} lies strictly inside ]−u−p^{i+1}+2p^i−1, −u+p^{i+1}−1[.
    pub fn narrow_window_holds(&self) -> bool {
        let u = self.u as i64;
        self.stages.iter().all(|st| {
            let (pi, pn) = (
                self.p.pow(st.index as u32) as i64,
                self.p.pow(st.index as u32 + 1) as i64,
            );
            st.narrow
                .poincare()
                .keys()
                .all(|&w| w > -u - pn + 2 * pi - 1 && w < -u + pn - 1)
        })
    }
}

pub(crate) fn top_index(u: usize, p: u64) -> usize {
    let mut h = 0;
    while p.pow(h as u32 + 1) - 2 < u as u64 {
        h += 1;
    }
    h
}

pub(crate) fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        0
    } else {
        num_integer::binomial(n, k)
    }
}

/// Alternates free–narrow splitting and quotienting, starting from B_u, until the free part vanishes.
pub fn compute_nui(u: usize, field: exactla::PrimeField, doubled: bool) -> Result<NuiResult, ExtError> {
    let p = field.modulus();
    let mut module = build_bu(u, field, doubled);
    let mut shift = u as i64;
    let mut stages = Vec::new();
    for index in 0.. {
        let tame = check_tame(&module, shift)?;
        if !tame.passes() {
            return Err(ExtError::TamenessViolation(format!("stage {index}: {tame:?}")));
        }
        let split = free_narrow(&module)?;
        let narrow = barcode(&split.narrow, 0)?;
        let free_dim = split.free.total_dim();
        stages.push(NuiStage {
            index,
            shift,
            tame,
            narrow,
            free_dim,
        });
        if free_dim == 0 {
            break;
        }
        module = quotient_mod_variable(&split.free)?;
        shift = u as i64 - p.pow(index as u32 + 1) as i64 + 1;
        if module.pairing().map(|q| q.center) != Some(-2 * shift) {
            return Err(ExtError::TamenessViolation(format!(
                "stage {} is centred away from −u",
                index + 1
            )));
        }
    }
    Ok(NuiResult { u, p, stages })
}
