use std::fmt;

use freegroup::{content2, ExteriorClass, FreeGroupMap};

use crate::{MappingClassCandidate, McgError};

/// A homomorphism H → Λ²H given on the basis [γ₁], …, [γ_{2g}].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct XiValue {
    pub images: Vec<ExteriorClass>,
    pub modulus: Option<u64>,
}

impl XiValue {
    pub fn is_zero(&self) -> bool {
        self.images.iter().all(ExteriorClass::is_zero)
    }

    /// Value on a vector of H given in coordinates.
    pub fn evaluate(&self, a: &[i64]) -> ExteriorClass {
        let rank = self.images.len();
        let mut out = ExteriorClass::zero(rank, 2);
        for (img, &c) in self.images.iter().zip(a) {
            out = out.add(&img.scale(c));
        }
        self.reduce(out)
    }

    fn reduce(&self, c: ExteriorClass) -> ExteriorClass {
        match self.modulus {
            Some(p) => c.reduce_mod(p as i64),
            None => c,
        }
    }

    pub fn add(&self, other: &XiValue) -> XiValue {
        let images = self
            .images
            .iter()
            .zip(&other.images)
            .map(|(a, b)| self.reduce(a.add(b)))
            .collect();
        XiValue {
            images,
            modulus: self.modulus,
        }
    }
}

impl fmt::Display for XiValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, img) in self.images.iter().enumerate() {
            if i > 0 {
                write!(f, "; ")?;
            }
            write!(f, "[{}] -> {img}", i + 1)?;
        }
        if let Some(p) = self.modulus {
            write!(f, " (mod {p})")?;
        }
        Ok(())
    }
}

fn xi_of_map(phi: &FreeGroupMap) -> XiValue {
    XiValue {
        images: phi.images().iter().map(content2).collect(),
        modulus: None,
    }
}

/// ξ(φ)([γᵢ]) = c₂(φ(γᵢ)).
pub fn xi(phi: &MappingClassCandidate) -> XiValue {
    xi_of_map(phi.map())
}

pub fn xi_p(phi: &MappingClassCandidate, p: u64) -> Result<XiValue, McgError> {
    if p < 2 {
        return Err(McgError::BadModulus(p));
    }
    let v = xi(phi);
    Ok(XiValue {
        images: v.images.iter().map(|c| c.reduce_mod(p as i64)).collect(),
        modulus: Some(p),
    })
}

/// [φ](a) for a in coordinates.
fn act_on_h(phi: &FreeGroupMap, a: &[i64]) -> Vec<i64> {
    phi.abelianization()
        .iter()
        .map(|row| row.iter().zip(a).map(|(x, y)| x * y).sum())
        .collect()
}

fn basis_vector(rank: usize, i: usize) -> Vec<i64> {
    (0..rank).map(|j| i64::from(j == i)).collect()
}

/// ξ(φψ)(a) = Λ²[φ] ξ(ψ)(a) + ξ(φ)([ψ]a) on every basis vector a.
pub fn check_cocycle(phi: &MappingClassCandidate, psi: &MappingClassCandidate) -> Result<bool, McgError> {
    let composite = xi_of_map(&phi.map().compose(psi.map())?);
    let (xphi, xpsi) = (xi(phi), xi(psi));
    let h = phi.map().abelian_images();
    let rank = 2 * phi.genus();
    Ok((0..rank).all(|i| {
        let a = basis_vector(rank, i);
        let rhs = xpsi
            .evaluate(&a)
            .apply_linear(&h)
            .add(&xphi.evaluate(&act_on_h(psi.map(), &a)));
        composite.evaluate(&a) == rhs
    }))
}

/// ξ(φψφ⁻¹)(a) = Λ²[φ] ξ(ψ)([φ]⁻¹a), with φ⁻¹ supplied by the caller.
pub fn check_equivariance(
    phi: &MappingClassCandidate,
    phi_inv: &MappingClassCandidate,
    psi: &MappingClassCandidate,
) -> Result<bool, McgError> {
    if !phi.map().compose(phi_inv.map())?.is_identity() || !phi_inv.map().compose(phi.map())?.is_identity() {
        return Err(McgError::NotAnInverse);
    }
    let conj = phi.compose(psi)?.compose(phi_inv)?;
    let lhs = xi(&conj);
    let xpsi = xi(psi);
    let h = phi.map().abelian_images();
    let rank = 2 * phi.genus();
    Ok((0..rank).all(|i| {
        let a = basis_vector(rank, i);
        lhs.evaluate(&a) == xpsi.evaluate(&act_on_h(phi_inv.map(), &a)).apply_linear(&h)
    }))
}
