use std::fmt;

use freegroup::{parse_candidates, ExteriorClass, FreeGroupMap, Word};

use crate::McgError;

/// An endomorphism of the free group on γ₁..γ_{2g}, standing for a mapping class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MappingClassCandidate {
    pub label: String,
    genus: usize,
    map: FreeGroupMap,
}

impl MappingClassCandidate {
    pub fn new(label: impl Into<String>, genus: usize, map: FreeGroupMap) -> Result<Self, McgError> {
        let rank = 2 * genus;
        if map.source_rank() != rank || map.target_rank() != rank {
            return Err(McgError::RankMismatch {
                genus,
                rank: map.source_rank(),
                target: map.target_rank(),
            });
        }
        Ok(MappingClassCandidate {
            label: label.into(),
            genus,
            map,
        })
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn map(&self) -> &FreeGroupMap {
        &self.map
    }

    /// self ∘ inner.
    pub fn compose(&self, inner: &MappingClassCandidate) -> Result<MappingClassCandidate, McgError> {
        let map = self.map.compose(&inner.map)?;
        MappingClassCandidate::new(format!("{}*{}", self.label, inner.label), self.genus, map)
    }

    pub fn pow(&self, k: u32) -> Result<MappingClassCandidate, McgError> {
        MappingClassCandidate::new(format!("{}^{k}", self.label), self.genus, self.map.pow(k)?)
    }

    pub fn validate(&self) -> ValidationReport {
        validate(&self.map, self.genus).expect("rank checked on construction")
    }
}

impl fmt::Display for MappingClassCandidate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:", self.label)?;
        for (i, w) in self.map.images().iter().enumerate() {
            let sep = if i == 0 { " " } else { "; " };
            write!(f, "{sep}g{} -> {w}", i + 1)?;
        }
        Ok(())
    }
}

pub fn identity(genus: usize) -> MappingClassCandidate {
    MappingClassCandidate::new("id", genus, FreeGroupMap::identity(2 * genus)).expect("square")
}

/// γ_{2g} ↦ γ_{2g−1}γ_{2g}, other generators fixed.
pub fn twist(genus: usize) -> MappingClassCandidate {
    assert!(genus >= 1, "twist needs a handle");
    let k = 2 * genus;
    let a = Word::generator(k, k - 2).expect("in range");
    let b = Word::generator(k, k - 1).expect("in range");
    let map = FreeGroupMap::with_images(k, vec![(k - 1, a.mul(&b))]).expect("in range");
    MappingClassCandidate::new("Da", genus, map).expect("square")
}

pub fn twist_power(genus: usize, k: u32) -> MappingClassCandidate {
    twist(genus).pow(k).expect("square")
}

/// Conjugation by ζ' = [γ₁,γ₂] on γ₃..γ_{2g}, γ₁ and γ₂ fixed. In genus 1 there is
/// no second handle, so both generators are conjugated by ζ₁ instead.
pub fn separating_candidate(genus: usize) -> MappingClassCandidate {
    assert!(genus >= 1, "needs a handle");
    let k = 2 * genus;
    let g = |i| Word::generator(k, i).expect("in range");
    let (conj, first) = if genus == 1 {
        (Word::boundary(1), 0)
    } else {
        (Word::commutator(&g(0), &g(1)), 2)
    };
    let changes = (first..k).map(|j| (j, g(j).conjugate_by(&conj))).collect();
    let map = FreeGroupMap::with_images(k, changes).expect("in range");
    MappingClassCandidate::new("sep", genus, map).expect("square")
}

/// Catalog entries by name: `id`, `Da`, `Da^k`, `sep`.
pub fn catalog_entry(name: &str, genus: usize) -> Option<MappingClassCandidate> {
    match name {
        "id" => Some(identity(genus)),
        "Da" if genus >= 1 => Some(twist(genus)),
        "sep" if genus >= 1 => Some(separating_candidate(genus)),
        _ => {
            let k: u32 = name.strip_prefix("Da^")?.parse().ok()?;
            (genus >= 1).then(|| twist_power(genus, k))
        }
    }
}

/// Reads `name: g1 -> w; g2 -> w` lines.
pub fn load_candidates(genus: usize, text: &str) -> Result<Vec<MappingClassCandidate>, McgError> {
    let parsed = parse_candidates(2 * genus, text).map_err(|(line, source)| McgError::Parse { line, source })?;
    parsed
        .into_iter()
        .map(|c| MappingClassCandidate::new(c.name, genus, c.map))
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ValidationReport {
    /// φ(ζ_g) is conjugate to ζ_g.
    pub boundary_conjugate: bool,
    /// φ(ζ_g) = ζ_g as reduced words.
    pub boundary_exact: bool,
    /// Λ²[φ] fixes ω.
    pub symplectic: bool,
}

impl ValidationReport {
    pub fn passes(&self) -> bool {
        self.boundary_conjugate && self.symplectic
    }
}

/// ω = Σ [γ_{2i−1}]∧[γ_{2i}] as a degree-2 class.
pub fn symplectic_form(genus: usize) -> ExteriorClass {
    let rank = 2 * genus;
    (0..genus).fold(ExteriorClass::zero(rank, 2), |w, i| {
        w.add(&ExteriorClass::monomial(rank, &[2 * i, 2 * i + 1], 1).expect("in range"))
    })
}

pub fn validate(phi: &FreeGroupMap, genus: usize) -> Result<ValidationReport, McgError> {
    let rank = 2 * genus;
    if phi.source_rank() != rank || phi.target_rank() != rank {
        return Err(McgError::RankMismatch {
            genus,
            rank: phi.source_rank(),
            target: phi.target_rank(),
        });
    }
    let zeta = Word::boundary(genus);
    let image = phi.apply(&zeta)?;
    let omega = symplectic_form(genus);
    let symplectic = genus == 0 || omega.apply_linear(&phi.abelian_images()) == omega;
    Ok(ValidationReport {
        boundary_conjugate: image.is_conjugate_to(&zeta),
        boundary_exact: image == zeta,
        symplectic,
    })
}
