use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use crate::{signed_shuffle_coeff, UMorError};

/// Exponent vector v; coordinate v_i = 2m + ε stands for x_i^ε · y_i^{[m]}.
pub type Monomial = Vec<u32>;

/// Weight magnitude Σv.
pub fn monomial_weight(v: &[u32]) -> u64 {
    v.iter().map(|&x| x as u64).sum()
}

/// Number of odd coordinates, i.e. the exterior degree.
pub fn exterior_degree(v: &[u32]) -> u32 {
    v.iter().map(|&x| x % 2).sum()
}

/// All v ∈ Z≥0^rank with Σv = n, in lexicographic order.
pub fn monomials_of_weight(rank: usize, n: u32) -> Vec<Monomial> {
    fn rec(rank: usize, n: u32, prefix: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if prefix.len() + 1 == rank {
            prefix.push(n);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for a in 0..=n {
            prefix.push(a);
            rec(rank, n - a, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if rank == 0 {
        if n == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    rec(rank, n, &mut Vec::with_capacity(rank), &mut out);
    out
}

/// Structure constant of e_v · e_w = c · e_{v+w}.
pub fn monomial_product_coeff(v: &[u32], w: &[u32]) -> i128 {
    let mut coeff: i128 = 1;
    for i in 0..v.len() {
        let s = signed_shuffle_coeff(v[i] as u64, w[i] as u64);
        if s == 0 {
            return 0;
        }
        coeff = coeff.checked_mul(s).expect("structure constant overflow");
    }
    // Koszul sign: w_j moves past v_i for every i > j
    let mut parity = 0u64;
    let mut w_prefix = 0u64;
    for i in 0..v.len() {
        parity += v[i] as u64 * w_prefix;
        w_prefix += w[i] as u64;
    }
    if parity % 2 == 1 {
        -coeff
    } else {
        coeff
    }
}

/// Integral element of Λ(x₁..x_k) ⊗ Γ(y₁..y_k).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct UMorElement {
    rank: usize,
    terms: BTreeMap<Monomial, i128>,
}

impl UMorElement {
    pub fn zero(rank: usize) -> Self {
        UMorElement {
            rank,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(rank: usize) -> Self {
        Self::monomial(vec![0; rank], 1)
    }

    pub fn monomial(v: Monomial, coeff: i128) -> Self {
        let mut e = Self::zero(v.len());
        e.add_term(v, coeff).expect("single term");
        e
    }

    fn unit_vector(rank: usize, i: usize, value: u32) -> Monomial {
        let mut v = vec![0; rank];
        v[i] = value;
        v
    }

    pub fn x(rank: usize, i: usize) -> Self {
        Self::monomial(Self::unit_vector(rank, i, 1), 1)
    }

    pub fn y(rank: usize, i: usize) -> Self {
        Self::divided_y(rank, i, 1)
    }

    /// y_i^{[m]}.
    pub fn divided_y(rank: usize, i: usize, m: u32) -> Self {
        Self::monomial(Self::unit_vector(rank, i, 2 * m), 1)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, i128> {
        &self.terms
    }

    pub fn coeff(&self, v: &[u32]) -> i128 {
        self.terms.get(v).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, v: Monomial, c: i128) -> Result<(), UMorError> {
        if v.len() != self.rank {
            return Err(UMorError::RankMismatch {
                expected: self.rank,
                got: v.len(),
            });
        }
        if c == 0 {
            return Ok(());
        }
        match self.terms.entry(v) {
            Entry::Occupied(mut o) => {
                let s = o.get().checked_add(c).ok_or(UMorError::Overflow)?;
                if s == 0 {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
            Entry::Vacant(e) => {
                e.insert(c);
            }
        }
        Ok(())
    }

    fn check_rank(&self, other: &UMorElement) -> Result<(), UMorError> {
        if self.rank != other.rank {
            return Err(UMorError::RankMismatch {
                expected: self.rank,
                got: other.rank,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &UMorElement) -> Result<UMorElement, UMorError> {
        self.check_rank(other)?;
        let mut out = self.clone();
        for (v, &c) in &other.terms {
            out.add_term(v.clone(), c)?;
        }
        Ok(out)
    }

    pub fn sub(&self, other: &UMorElement) -> Result<UMorElement, UMorError> {
        self.add(&other.scale(-1)?)
    }

    pub fn scale(&self, s: i128) -> Result<UMorElement, UMorError> {
        let mut out = Self::zero(self.rank);
        for (v, &c) in &self.terms {
            out.add_term(v.clone(), c.checked_mul(s).ok_or(UMorError::Overflow)?)?;
        }
        Ok(out)
    }

    pub fn multiply(&self, other: &UMorElement) -> Result<UMorElement, UMorError> {
        self.check_rank(other)?;
        let mut out = Self::zero(self.rank);
        for (v, &a) in &self.terms {
            for (w, &b) in &other.terms {
                let s = monomial_product_coeff(v, w);
                if s == 0 {
                    continue;
                }
                let c = a
                    .checked_mul(b)
                    .and_then(|ab| ab.checked_mul(s))
                    .ok_or(UMorError::Overflow)?;
                let sum: Monomial = v.iter().zip(w).map(|(x, y)| x + y).collect();
                out.add_term(sum, c)?;
            }
        }
        Ok(out)
    }

    /// Coefficients reduced into 0..p.
    pub fn reduce_mod(&self, p: i128) -> UMorElement {
        let mut out = Self::zero(self.rank);
        for (v, &c) in &self.terms {
            out.add_term(v.clone(), c.rem_euclid(p)).expect("same rank");
        }
        out
    }

    /// Part of weight −n.
    pub fn weight_component(&self, n: u64) -> UMorElement {
        UMorElement {
            rank: self.rank,
            terms: self
                .terms
                .iter()
                .filter(|(v, _)| monomial_weight(v) == n)
                .map(|(v, c)| (v.clone(), *c))
                .collect(),
        }
    }

    /// Largest exterior-plus-divided-power dimension Σv among the terms.
    pub fn max_weight(&self) -> u64 {
        self.terms.keys().map(|v| monomial_weight(v)).max().unwrap_or(0)
    }
}

impl fmt::Display for UMorElement {
    /// e.g. `2*x1x2 + y1^[3]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (n, (v, &c)) in self.terms.iter().enumerate() {
            if n > 0 {
                write!(f, " {} ", if c < 0 { '-' } else { '+' })?;
            } else if c < 0 {
                write!(f, "-")?;
            }
            let mut body = String::new();
            for (i, &a) in v.iter().enumerate() {
                if a % 2 == 1 {
                    body.push_str(&format!("x{}", i + 1));
                }
            }
            for (i, &a) in v.iter().enumerate() {
                match a / 2 {
                    0 => {}
                    1 => body.push_str(&format!("y{}", i + 1)),
                    m => body.push_str(&format!("y{}^[{m}]", i + 1)),
                }
            }
            let mag = c.unsigned_abs();
            match (mag, body.is_empty()) {
                (_, true) => write!(f, "{mag}")?,
                (1, false) => write!(f, "{body}")?,
                _ => write!(f, "{mag}*{body}")?,
            }
        }
        Ok(())
    }
}
