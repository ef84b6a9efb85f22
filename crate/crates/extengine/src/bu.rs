use std::collections::{BTreeMap, HashMap};

use exactla::{FpMatrix, PrimeField};

use crate::{TruncatedAlgebra, WeightedModule};

/// Subsets of {0..u−1} of size s, as bitmasks in increasing order.
pub(crate) fn subsets(u: usize, s: usize) -> Vec<u32> {
    (0u32..1 << u).filter(|m| m.count_ones() as usize == s).collect()
}

/// B_u = F_p[z_1..z_u]/(z_i²) over Γ_{F_p}(y), y ↦ Σ z_i (or 2Σ z_i when doubled),
/// with basis z_S at weight −2|S| and the pairing ⟨z_S, z_{S^c}⟩ = 1 centred at −2u.
pub fn build_bu(u: usize, field: PrimeField, doubled: bool) -> WeightedModule {
    assert!(u < 31, "B_u is only built for small u");
    let algebra = TruncatedAlgebra::divided_powers(field);
    let bases: Vec<Vec<u32>> = (0..=u).map(|s| subsets(u, s)).collect();
    let index: Vec<HashMap<u32, usize>> = bases
        .iter()
        .map(|b| b.iter().enumerate().map(|(i, &m)| (m, i)).collect())
        .collect();
    let weight = |s: usize| -2 * s as i64;
    let dims: BTreeMap<i64, usize> = bases.iter().enumerate().map(|(s, b)| (weight(s), b.len())).collect();
    let vars = algebra.variables_within(2 * u as i64);
    let full = (1u32 << u) - 1;
    let mut mult = Vec::new();
    for k in 0..vars {
        let n = algebra.unit(k) as usize;
        let coef = if doubled { field.pow(2, n as u64) } else { 1 };
        let mut table = BTreeMap::new();
        for s in 0..=u.saturating_sub(n) {
            let mut a = FpMatrix::zeros(field, bases[s + n].len(), bases[s].len());
            for (col, &set) in bases[s].iter().enumerate() {
                for &t in &bases[n] {
                    if t & set == 0 {
                        a.set(index[s + n][&(set | t)], col, coef);
                    }
                }
            }
            table.insert(weight(s), a);
        }
        mult.push(table);
    }
    let module = WeightedModule::new(algebra, dims, mult).expect("B_u satisfies the module axioms");
    let mut gram = BTreeMap::new();
    for s in 0..=u {
        let mut g = FpMatrix::zeros(field, bases[s].len(), bases[u - s].len());
        for (i, &set) in bases[s].iter().enumerate() {
            g.set(i, index[u - s][&(full & !set)], 1);
        }
        gram.insert(weight(s), g);
    }
    module
        .with_pairing(-2 * u as i64, gram)
        .expect("complementary subsets pair invariantly")
}
