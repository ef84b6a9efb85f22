use freegroup::{abelianize, content2, FreeGroupMap};

use crate::{UMorElement, UMorError};

/// ω = x₁x₂ + x₃x₄ + … in rank 2g.
pub fn omega(genus: usize) -> UMorElement {
    let rank = 2 * genus;
    let mut out = UMorElement::zero(rank);
    for i in 0..genus {
        let mut v = vec![0; rank];
        v[2 * i] = 1;
        v[2 * i + 1] = 1;
        out.add_term(v, 1).expect("same rank");
    }
    out
}

/// Ω_P: zero for odd P, and for P = 2k the sum over k-subsets of symplectic pairs of
/// 2^k times their wedge.
pub fn big_omega(genus: usize, p: u32) -> UMorElement {
    let rank = 2 * genus;
    let mut out = UMorElement::zero(rank);
    if p % 2 == 1 {
        return out;
    }
    let k = (p / 2) as usize;
    if k > genus {
        return out;
    }
    let coeff = 1i128 << k;
    for subset in k_subsets(genus, k) {
        let mut v = vec![0; rank];
        for i in subset {
            v[2 * i] = 1;
            v[2 * i + 1] = 1;
        }
        out.add_term(v, coeff).expect("same rank");
    }
    out
}

fn k_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// (Σ n_t y_t)^{[j]} = Σ over j₁+…+j_k = j of Π n_t^{j_t} y_t^{[j_t]}.
pub fn linear_divided_power(coeffs: &[i64], j: u32) -> Result<UMorElement, UMorError> {
    let rank = coeffs.len();
    let mut out = UMorElement::zero(rank);
    let support: Vec<usize> = (0..rank).filter(|&t| coeffs[t] != 0).collect();
    if support.is_empty() {
        if j == 0 {
            return Ok(UMorElement::one(rank));
        }
        return Ok(out);
    }
    fn rec(
        support: &[usize],
        coeffs: &[i64],
        left: u32,
        v: &mut Vec<u32>,
        c: i128,
        out: &mut UMorElement,
    ) -> Result<(), UMorError> {
        let (&t, rest) = support.split_first().expect("nonempty");
        if rest.is_empty() {
            let pw = (coeffs[t] as i128)
                .checked_pow(left)
                .and_then(|x| x.checked_mul(c))
                .ok_or(UMorError::Overflow)?;
            v[t] = 2 * left;
            out.add_term(v.clone(), pw)?;
            v[t] = 0;
            return Ok(());
        }
        for a in 0..=left {
            let pw = (coeffs[t] as i128)
                .checked_pow(a)
                .and_then(|x| x.checked_mul(c))
                .ok_or(UMorError::Overflow)?;
            v[t] = 2 * a;
            rec(rest, coeffs, left - a, v, pw, out)?;
            v[t] = 0;
        }
        Ok(())
    }
    rec(&support, coeffs, j, &mut vec![0; rank], 1, &mut out)?;
    Ok(out)
}

/// B^{[r]} for B a sum of distinct quadratic exterior monomials: sum over r-subsets of
/// the monomials of the product of their coefficients times their product.
pub fn exterior_divided_power(b: &UMorElement, r: u32) -> Result<UMorElement, UMorError> {
    let terms: Vec<(&Vec<u32>, i128)> = b.terms().iter().map(|(v, c)| (v, *c)).collect();
    if terms
        .iter()
        .any(|(v, _)| v.iter().filter(|&&a| a == 1).count() != 2 || v.iter().any(|&a| a > 1))
    {
        return Err(UMorError::NotQuadraticExterior);
    }
    let mut out = UMorElement::zero(b.rank());
    for subset in k_subsets(terms.len(), r as usize) {
        let mut prod = UMorElement::one(b.rank());
        for i in subset {
            prod = prod.multiply(&UMorElement::monomial(terms[i].0.clone(), terms[i].1))?;
        }
        out = out.add(&prod)?;
    }
    Ok(out)
}

/// Images of the ring generators under the map induced by a free group homomorphism:
/// x_i ↦ [φ(γ_i)]_x and y_i ↦ [φ(γ_i)]_y + [c₂(φ(γ_i))]_x.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InducedMap {
    source_rank: usize,
    target_rank: usize,
    linear: Vec<Vec<i64>>,
    quadratic: Vec<UMorElement>,
}

pub fn induced_map(phi: &FreeGroupMap) -> InducedMap {
    let l = phi.target_rank();
    let mut linear = Vec::new();
    let mut quadratic = Vec::new();
    for w in phi.images() {
        linear.push(abelianize(w).to_vector());
        let mut q = UMorElement::zero(l);
        for (k, &c) in content2(w).terms() {
            let mut v = vec![0; l];
            v[k[0]] = 1;
            v[k[1]] = 1;
            q.add_term(v, c as i128).expect("same rank");
        }
        quadratic.push(q);
    }
    InducedMap {
        source_rank: phi.source_rank(),
        target_rank: l,
        linear,
        quadratic,
    }
}

impl InducedMap {
    pub fn source_rank(&self) -> usize {
        self.source_rank
    }

    pub fn target_rank(&self) -> usize {
        self.target_rank
    }

    pub fn x_image(&self, i: usize) -> UMorElement {
        let mut out = UMorElement::zero(self.target_rank);
        for (t, &n) in self.linear[i].iter().enumerate() {
            let mut v = vec![0; self.target_rank];
            v[t] = 1;
            out.add_term(v, n as i128).expect("same rank");
        }
        out
    }

    /// Image of y_i^{[m]} = Σ_j A^{[j]} B^{[m−j]}.
    pub fn y_image(&self, i: usize, m: u32) -> Result<UMorElement, UMorError> {
        let mut out = UMorElement::zero(self.target_rank);
        for j in 0..=m {
            let b = exterior_divided_power(&self.quadratic[i], m - j)?;
            if b.is_zero() {
                continue;
            }
            let a = linear_divided_power(&self.linear[i], j)?;
            out = out.add(&a.multiply(&b)?)?;
        }
        Ok(out)
    }

    /// Image of e_v = Π_i x_i^{ε_i} y_i^{[m_i]}.
    pub fn apply_monomial(&self, v: &[u32]) -> Result<UMorElement, UMorError> {
        if v.len() != self.source_rank {
            return Err(UMorError::RankMismatch {
                expected: self.source_rank,
                got: v.len(),
            });
        }
        let mut out = UMorElement::one(self.target_rank);
        for (i, &a) in v.iter().enumerate() {
            if a % 2 == 1 {
                out = out.multiply(&self.x_image(i))?;
            }
            if a >= 2 {
                out = out.multiply(&self.y_image(i, a / 2)?)?;
            }
            if out.is_zero() {
                break;
            }
        }
        Ok(out)
    }

    pub fn apply(&self, a: &UMorElement) -> Result<UMorElement, UMorError> {
        if a.rank() != self.source_rank {
            return Err(UMorError::RankMismatch {
                expected: self.source_rank,
                got: a.rank(),
            });
        }
        let mut out = UMorElement::zero(self.target_rank);
        for (v, &c) in a.terms() {
            out = out.add(&self.apply_monomial(v)?.scale(c)?)?;
        }
        Ok(out)
    }
}

pub fn apply_induced(map: &InducedMap, a: &UMorElement) -> Result<UMorElement, UMorError> {
    map.apply(a)
}
