//! Brute-force Ext over the divided power algebra Γ_{F_p}(y), read off the
//! reduced bar complex (Γ₊)^{⊗b} ⊗ M one weight at a time.

use std::collections::{BTreeMap, HashMap};

use exactla::{rank_mod_p, PrimeField, SparseMatrix};
use grading::BigradedSeries;
use rayon::prelude::*;

/// A finite weighted Γ(y)-module given by the action of every y^{[k]}, k ≥ 1, on basis elements.
#[derive(Debug, Clone)]
pub struct GammaModule {
    field: PrimeField,
    dims: BTreeMap<i64, usize>,
    /// (k, weight, basis index) ↦ image of y^{[k]}, as (index, coefficient) in weight − 2k
    action: HashMap<(u64, i64, usize), Vec<(usize, u64)>>,
}

impl GammaModule {
    /// The module F_p in weight 0 with y acting as zero.
    pub fn augmentation(field: PrimeField) -> Self {
        GammaModule {
            field,
            dims: BTreeMap::from([(0, 1)]),
            action: HashMap::new(),
        }
    }

    /// F_p[z_1..z_u]/(z_i²) with y^{[k]} z_S = c^k Σ z_{S∪T} over k-subsets T disjoint from S,
    /// where c = 2 for the doubled module and 1 otherwise.
    pub fn square_free(u: usize, field: PrimeField, doubled: bool) -> Self {
        let by_size: Vec<Vec<u32>> = (0..=u)
            .map(|s| (0u32..1 << u).filter(|m| m.count_ones() as usize == s).collect())
            .collect();
        let position: HashMap<u32, usize> = by_size
            .iter()
            .flat_map(|b| b.iter().enumerate().map(|(i, &m)| (m, i)))
            .collect();
        let dims = by_size
            .iter()
            .enumerate()
            .map(|(s, b)| (-2 * s as i64, b.len()))
            .collect();
        let mut action = HashMap::new();
        for k in 1..=u {
            let c = if doubled { field.pow(2, k as u64) } else { 1 };
            for (s, sets) in by_size.iter().enumerate().take(u - k + 1) {
                for (i, &set) in sets.iter().enumerate() {
                    let image: Vec<(usize, u64)> = by_size[k]
                        .iter()
                        .filter(|&&t| t & set == 0)
                        .map(|&t| (position[&(t | set)], c))
                        .filter(|&(_, c)| c != 0)
                        .collect();
                    action.insert((k as u64, -2 * s as i64, i), image);
                }
            }
        }
        GammaModule { field, dims, action }
    }

    /// Λ(x_1..x_{2g}) with x_i in weight −1 and y^{[k]} acting by wedging with
    /// Ω_{2k} = 2^k Σ over k-subsets of pairs of x_{2i−1}x_{2i}. The pairs have even degree,
    /// so no signs arise.
    pub fn symplectic_exterior(genus: usize, field: PrimeField) -> Self {
        let rank = 2 * genus;
        let by_size: Vec<Vec<u32>> = (0..=rank)
            .map(|s| (0u32..1 << rank).filter(|m| m.count_ones() as usize == s).collect())
            .collect();
        let position: HashMap<u32, usize> = by_size
            .iter()
            .flat_map(|b| b.iter().enumerate().map(|(i, &m)| (m, i)))
            .collect();
        let dims = by_size
            .iter()
            .enumerate()
            .map(|(s, b)| (-(s as i64), b.len()))
            .collect();
        let pair_sets: Vec<Vec<u32>> = (0..=genus)
            .map(|k| {
                (0u32..1 << genus)
                    .filter(|m| m.count_ones() as usize == k)
                    .map(|m| (0..genus).filter(|i| m >> i & 1 == 1).map(|i| 0b11 << (2 * i)).sum())
                    .collect()
            })
            .collect();
        let mut action = HashMap::new();
        for k in 1..=genus {
            let c = field.pow(2, k as u64);
            for (s, sets) in by_size.iter().enumerate() {
                for (i, &set) in sets.iter().enumerate() {
                    let image: Vec<(usize, u64)> = pair_sets[k]
                        .iter()
                        .filter(|&&t| t & set == 0)
                        .map(|&t| (position[&(t | set)], c))
                        .collect();
                    if !image.is_empty() {
                        action.insert((k as u64, -(s as i64), i), image);
                    }
                }
            }
        }
        GammaModule { field, dims, action }
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn dim(&self, w: i64) -> usize {
        self.dims.get(&w).copied().unwrap_or(0)
    }

    fn act(&self, k: u64, w: i64, i: usize) -> &[(usize, u64)] {
        self.action.get(&(k, w, i)).map_or(&[], |v| v.as_slice())
    }
}

/// Compositions of `total` into `parts` positive parts.
fn compositions(total: u64, parts: usize) -> Vec<Vec<u64>> {
    if parts == 0 {
        return if total == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for first in 1..=total {
        for mut rest in compositions(total - first, parts - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

fn binomial_mod(n: u64, k: u64, field: PrimeField) -> u64 {
    // Lucas: product of digit binomials in base p
    let p = field.modulus();
    let (mut n, mut k, mut acc) = (n, k, 1u64);
    while k > 0 || n > 0 {
        let (a, b) = (n % p, k % p);
        if b > a {
            return 0;
        }
        let mut c = 1u64;
        for j in 0..b {
            c = c * (a - j) / (j + 1);
        }
        acc = field.mul(acc, c % p);
        n /= p;
        k /= p;
    }
    acc
}

/// The bar complex at total weight −`weight` in degree b: basis (k_1|…|k_b|x).
struct BarDegree {
    basis: Vec<(Vec<u64>, i64, usize)>,
    index: HashMap<(Vec<u64>, i64, usize), usize>,
}

fn bar_degree(module: &GammaModule, weight: i64, b: usize) -> BarDegree {
    let mut basis = Vec::new();
    for (&w, &d) in &module.dims {
        // −2Σk + w = −weight
        let twice = w + weight;
        if twice < 0 || twice % 2 != 0 {
            continue;
        }
        for parts in compositions((twice / 2) as u64, b) {
            for i in 0..d {
                basis.push((parts.clone(), w, i));
            }
        }
    }
    let index = basis.iter().cloned().enumerate().map(|(i, t)| (t, i)).collect();
    BarDegree { basis, index }
}

fn differential(module: &GammaModule, source: &BarDegree, target: &BarDegree, b: usize) -> SparseMatrix {
    let f = module.field;
    let sign = |i: usize| if i.is_multiple_of(2) { 1 } else { f.modulus() - 1 };
    let mut terms = Vec::new();
    for (col, (parts, w, x)) in source.basis.iter().enumerate() {
        for i in 1..b {
            let (a, c) = (parts[i - 1], parts[i]);
            let coef = f.mul(sign(i), binomial_mod(a + c, a, f));
            if coef == 0 {
                continue;
            }
            let mut merged = parts[..i - 1].to_vec();
            merged.push(a + c);
            merged.extend_from_slice(&parts[i + 1..]);
            terms.push((target.index[&(merged, *w, *x)], col, coef as i64));
        }
        let last = parts[b - 1];
        let front = parts[..b - 1].to_vec();
        let tw = *w - 2 * last as i64;
        for &(y, c) in module.act(last, *w, *x) {
            terms.push((target.index[&(front.clone(), tw, y)], col, f.mul(sign(b), c) as i64));
        }
    }
    SparseMatrix::from_accumulated(target.basis.len(), source.basis.len(), terms)
        .expect("indices come from the target basis")
}

/// dim Ext^{−b}(M, F_p) in weight W for W ≤ `weight_bound` and b ≤ `bar_bound`.
pub fn cobar_ext_dims(module: &GammaModule, weight_bound: i64, bar_bound: i64) -> BigradedSeries {
    let lowest = -module.dims.keys().next_back().copied().unwrap_or(0);
    let weights: Vec<i64> = (lowest..=weight_bound).collect();
    let columns: Vec<Vec<(i64, i64, u64)>> = weights
        .par_iter()
        .map(|&weight| {
            let degrees: Vec<BarDegree> = (0..=bar_bound as usize + 1)
                .map(|b| bar_degree(module, weight, b))
                .collect();
            let ranks: Vec<usize> = (0..degrees.len())
                .map(|b| {
                    if b == 0 || degrees[b].basis.is_empty() || degrees[b - 1].basis.is_empty() {
                        0
                    } else {
                        rank_mod_p(&differential(module, &degrees[b], &degrees[b - 1], b), module.field)
                    }
                })
                .collect();
            (0..=bar_bound as usize)
                .map(|b| {
                    let d = degrees[b].basis.len() - ranks[b] - ranks[b + 1];
                    (weight, -(b as i64), d as u64)
                })
                .collect()
        })
        .collect();
    let mut out = BigradedSeries::new(weight_bound, bar_bound);
    for (w, b, d) in columns.into_iter().flatten() {
        out.add(w, b, d);
    }
    out
}

/// ∂∘∂ on the bar complex at one weight, for testing the complex itself.
pub fn bar_square_is_zero(module: &GammaModule, weight: i64, max_bar: usize) -> bool {
    let degrees: Vec<BarDegree> = (0..=max_bar).map(|b| bar_degree(module, weight, b)).collect();
    (2..=max_bar).all(|b| {
        let d1 = differential(module, &degrees[b - 1], &degrees[b - 2], b - 1);
        let d2 = differential(module, &degrees[b], &degrees[b - 1], b);
        let p = module.field.modulus() as i64;
        d1.mul(&d2)
            .expect("shapes agree")
            .entries()
            .iter()
            .all(|&(_, _, v)| v % p == 0)
    })
}
