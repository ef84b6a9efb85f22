use crate::{ExteriorClass, FreeGroupError, Word};

/// Exponent-sum vector [w] ∈ H.
pub fn abelianize(w: &Word) -> ExteriorClass {
    let mut v = vec![0; w.rank()];
    for &(g, e) in w.runs() {
        v[g] += e;
    }
    ExteriorClass::from_vector(&v)
}

/// Quadratic part c₂(w) of the content, by one scan:
/// appending γ^e adds e·[w]∧[γ].
pub fn content2(w: &Word) -> ExteriorClass {
    let rank = w.rank();
    let mut ab = vec![0i64; rank];
    let mut c2 = ExteriorClass::zero(rank, 2);
    for &(g, e) in w.runs() {
        for (i, &a) in ab.iter().enumerate() {
            if a != 0 && i != g {
                let term = ExteriorClass::monomial(rank, &[i, g], a * e).expect("in range");
                c2 = c2.add(&term);
            }
        }
        ab[g] += e;
    }
    c2
}

/// Degree-i part of Π(1 ± [γ]) over the letters, truncated at degree i while multiplying.
pub fn content_component(w: &Word, degree: usize) -> Result<ExteriorClass, FreeGroupError> {
    let rank = w.rank();
    if degree > rank {
        return Err(FreeGroupError::DegreeOutOfRange { degree, rank });
    }
    let mut parts: Vec<ExteriorClass> = (0..=degree).map(|d| ExteriorClass::zero(rank, d)).collect();
    parts[0] = ExteriorClass::one(rank);
    for (g, s) in w.letters() {
        let gamma = ExteriorClass::monomial(rank, &[g], s)?;
        for d in (1..=degree).rev() {
            let t = parts[d - 1].wedge(&gamma);
            parts[d] = parts[d].add(&t);
        }
    }
    Ok(parts.pop().expect("degree + 1 parts"))
}
