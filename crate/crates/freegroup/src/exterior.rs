use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use crate::FreeGroupError;

/// Homogeneous element of Λ^degree of the free abelian group on `rank` generators,
/// keyed by strictly increasing index tuples.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ExteriorClass {
    rank: usize,
    degree: usize,
    terms: BTreeMap<Vec<usize>, i64>,
}

/// Sorts the indices, returning the permutation sign, or None on a repeat.
fn sort_with_sign(idx: &[usize]) -> Option<(Vec<usize>, i64)> {
    let mut v = idx.to_vec();
    let mut sign = 1;
    for i in 1..v.len() {
        let mut j = i;
        while j > 0 && v[j - 1] > v[j] {
            v.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
    }
    if v.windows(2).any(|w| w[0] == w[1]) {
        None
    } else {
        Some((v, sign))
    }
}

impl ExteriorClass {
    pub fn zero(rank: usize, degree: usize) -> Self {
        ExteriorClass {
            rank,
            degree,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(rank: usize) -> Self {
        let mut c = Self::zero(rank, 0);
        c.terms.insert(Vec::new(), 1);
        c
    }

    /// coeff · e_{i₁}∧…∧e_{i_d}, indices in any order.
    pub fn monomial(rank: usize, indices: &[usize], coeff: i64) -> Result<Self, FreeGroupError> {
        if let Some(&i) = indices.iter().find(|&&i| i >= rank) {
            return Err(FreeGroupError::GeneratorOutOfRange { index: i, rank });
        }
        let mut c = Self::zero(rank, indices.len());
        if let Some((key, sign)) = sort_with_sign(indices) {
            c.add_term(key, sign * coeff);
        }
        Ok(c)
    }

    /// Degree-1 class with the given coordinates.
    pub fn from_vector(coords: &[i64]) -> Self {
        let mut c = Self::zero(coords.len(), 1);
        for (i, &v) in coords.iter().enumerate() {
            c.add_term(vec![i], v);
        }
        c
    }

    fn add_term(&mut self, key: Vec<usize>, v: i64) {
        if v == 0 {
            return;
        }
        match self.terms.entry(key) {
            Entry::Occupied(mut o) => {
                *o.get_mut() += v;
                if *o.get() == 0 {
                    o.remove();
                }
            }
            Entry::Vacant(e) => {
                e.insert(v);
            }
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn terms(&self) -> &BTreeMap<Vec<usize>, i64> {
        &self.terms
    }

    pub fn coeff(&self, indices: &[usize]) -> i64 {
        match sort_with_sign(indices) {
            Some((k, s)) => s * self.terms.get(&k).copied().unwrap_or(0),
            None => 0,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coordinates of a degree-1 class.
    pub fn to_vector(&self) -> Vec<i64> {
        assert_eq!(self.degree, 1, "only degree-1 classes are vectors");
        let mut v = vec![0; self.rank];
        for (k, &c) in &self.terms {
            v[k[0]] = c;
        }
        v
    }

    pub fn add(&self, other: &ExteriorClass) -> ExteriorClass {
        assert_eq!((self.rank, self.degree), (other.rank, other.degree));
        let mut out = self.clone();
        for (k, &v) in &other.terms {
            out.add_term(k.clone(), v);
        }
        out
    }

    pub fn sub(&self, other: &ExteriorClass) -> ExteriorClass {
        self.add(&other.scale(-1))
    }

    pub fn scale(&self, s: i64) -> ExteriorClass {
        let mut out = Self::zero(self.rank, self.degree);
        for (k, &v) in &self.terms {
            out.add_term(k.clone(), v * s);
        }
        out
    }

    pub fn wedge(&self, other: &ExteriorClass) -> ExteriorClass {
        assert_eq!(self.rank, other.rank);
        let mut out = Self::zero(self.rank, self.degree + other.degree);
        for (a, &x) in &self.terms {
            for (b, &y) in &other.terms {
                let joined: Vec<usize> = a.iter().chain(b).copied().collect();
                if let Some((k, s)) = sort_with_sign(&joined) {
                    out.add_term(k, s * x * y);
                }
            }
        }
        out
    }

    /// Coefficients reduced into 0..p.
    pub fn reduce_mod(&self, p: i64) -> ExteriorClass {
        let mut out = Self::zero(self.rank, self.degree);
        for (k, &v) in &self.terms {
            out.add_term(k.clone(), v.rem_euclid(p));
        }
        out
    }

    /// Image under Λ^d of the linear map sending generator j to `images[j]` (degree-1 classes).
    pub fn apply_linear(&self, images: &[ExteriorClass]) -> ExteriorClass {
        assert_eq!(images.len(), self.rank);
        let target_rank = images.first().map_or(self.rank, |c| c.rank);
        let mut out = Self::zero(target_rank, self.degree);
        for (k, &v) in &self.terms {
            let mut t = Self::one(target_rank);
            for &i in k {
                t = t.wedge(&images[i]);
            }
            out = out.add(&t.scale(v));
        }
        out
    }
}

impl fmt::Display for ExteriorClass {
    /// e.g. `2*[1^2] - [3^4]`, indices 1-based.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (n, (k, &v)) in self.terms.iter().enumerate() {
            let body: Vec<String> = k.iter().map(|i| (i + 1).to_string()).collect();
            let (sign, mag) = if v < 0 { ("-", -v) } else { ("+", v) };
            match (n, sign) {
                (0, "+") => {}
                (0, _) => write!(f, "-")?,
                _ => write!(f, " {sign} ")?,
            }
            if mag != 1 {
                write!(f, "{mag}*")?;
            }
            write!(f, "[{}]", body.join("^"))?;
        }
        Ok(())
    }
}
