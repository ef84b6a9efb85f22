use crate::{LinAlgError, PrimeField};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CoefficientRing {
    PrimeField(u32),
    Rationals,
    Integers,
}

impl CoefficientRing {
    pub fn prime_field(p: u32) -> Result<Self, LinAlgError> {
        PrimeField::new(p as u64)?;
        Ok(CoefficientRing::PrimeField(p))
    }

    pub fn is_field(&self) -> bool {
        !matches!(self, CoefficientRing::Integers)
    }

    /// 0 for Q and Z.
    pub fn characteristic(&self) -> u32 {
        match self {
            CoefficientRing::PrimeField(p) => *p,
            _ => 0,
        }
    }

    pub fn label(&self) -> String {
        match self {
            CoefficientRing::PrimeField(p) => format!("F{p}"),
            CoefficientRing::Rationals => "Q".into(),
            CoefficientRing::Integers => "Z".into(),
        }
    }
}
