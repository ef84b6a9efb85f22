use cellcx::{act, ChainSlice};
use exactla::is_prime;
use umor::{induced_map, monomials_of_weight, UMorElement};

use crate::{xi_p, MappingClassCandidate, McgError};

/// Errors unless [φ] ≡ id mod p and ξ^p(φ) = 0.
pub fn check_preconditions(phi: &MappingClassCandidate, p: u64) -> Result<(), McgError> {
    if !is_prime(p) {
        return Err(McgError::BadModulus(p));
    }
    let m = phi.map().abelianization();
    for (r, row) in m.iter().enumerate() {
        for (c, &x) in row.iter().enumerate() {
            if (x - i64::from(r == c)).rem_euclid(p as i64) != 0 {
                return Err(McgError::AbelianizationNontrivial { p });
            }
        }
    }
    if let Some(generator) = xi_p(phi, p)?.images.iter().position(|c| !c.is_zero()) {
        return Err(McgError::XiNonzero {
            p,
            generator: generator + 1,
        });
    }
    Ok(())
}

/// Whether UMor(φ) ≡ id mod p on every monomial of weight at most `weight_bound`.
pub fn check_umor_triviality(phi: &MappingClassCandidate, p: u64, weight_bound: u32) -> Result<bool, McgError> {
    check_preconditions(phi, p)?;
    let f = induced_map(phi.map());
    let rank = 2 * phi.genus();
    for n in 0..=weight_bound {
        for v in monomials_of_weight(rank, n) {
            let diff = f.apply_monomial(&v)?.sub(&UMorElement::monomial(v.clone(), 1))?;
            if !diff.reduce_mod(p as i128).is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Whether ρ(φ) ≡ id mod p on every chain slice of weight at most `max_n`.
pub fn check_chain_triviality(phi: &MappingClassCandidate, p: u64, max_n: u32) -> Result<bool, McgError> {
    check_preconditions(phi, p)?;
    let p = p as i64;
    for n in 0..=max_n {
        let slice = ChainSlice::build(phi.genus(), n)?;
        for m in act(phi.map(), &slice)? {
            let mut diag_seen = vec![false; m.rows()];
            for &(r, c, x) in m.entries() {
                let expected = if r == c {
                    diag_seen[r] = true;
                    1
                } else {
                    0
                };
                if (x - expected).rem_euclid(p) != 0 {
                    return Ok(false);
                }
            }
            if diag_seen.iter().any(|s| !s) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
