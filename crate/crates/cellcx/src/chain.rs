use std::collections::btree_map::Entry;
use std::collections::BTreeMap;

use umor::{big_omega, monomial_product_coeff, signed_shuffle_coeff, UMorElement};

use crate::{CellError, Record};

/// Finite integral combination of records of a fixed genus.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Chain {
    terms: BTreeMap<Record, i128>,
}

impl Chain {
    pub fn zero() -> Self {
        Chain::default()
    }

    pub fn single(t: Record, c: i128) -> Self {
        let mut ch = Chain::zero();
        ch.add_term(t, c);
        ch
    }

    pub fn add_term(&mut self, t: Record, c: i128) {
        if c == 0 {
            return;
        }
        match self.terms.entry(t) {
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if *o.get() == 0 {
                    o.remove();
                }
            }
            Entry::Vacant(e) => {
                e.insert(c);
            }
        }
    }

    pub fn terms(&self) -> &BTreeMap<Record, i128> {
        &self.terms
    }

    pub fn coeff(&self, t: &Record) -> i128 {
        self.terms.get(t).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &Chain) -> Chain {
        let mut out = self.clone();
        for (t, &c) in &other.terms {
            out.add_term(t.clone(), c);
        }
        out
    }

    pub fn scale(&self, s: i128) -> Chain {
        let mut out = Chain::zero();
        for (t, &c) in &self.terms {
            out.add_term(t.clone(), c * s);
        }
        out
    }

    pub fn boundary(&self) -> Result<Chain, CellError> {
        let mut out = Chain::zero();
        for (t, &c) in &self.terms {
            for (s, &k) in differential(t)?.terms() {
                out.add_term(s.clone(), k * c);
            }
        }
        Ok(out)
    }
}

fn sign(parity: u64) -> i128 {
    if parity.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// ∂e_(b,P,v): adjacent bars merge with sign (−1)^i ss(P_i, P_{i+1}) for 1 ≤ i < b,
/// and the last bar collapses into the surface part, (−1)^b e_(b−1, P₁..P_{b−1}, Ω_{P_b}·e_v).
pub fn differential(t: &Record) -> Result<Chain, CellError> {
    let b = t.b();
    let genus = t.genus();
    let mut out = Chain::zero();
    for i in 1..b {
        let s = signed_shuffle_coeff(t.parts[i - 1] as u64, t.parts[i] as u64);
        if s == 0 {
            continue;
        }
        let mut parts = t.parts.clone();
        parts[i - 1] += parts[i];
        parts.remove(i);
        out.add_term(Record::new(parts, t.v.clone()), sign(i as u64) * s);
    }
    if b > 0 {
        let last = t.parts[b - 1];
        let omega = big_omega(genus, last);
        if !omega.is_zero() {
            let prod = omega.multiply(&UMorElement::monomial(t.v.clone(), 1))?;
            let prefix = t.parts[..b - 1].to_vec();
            for (w, &c) in prod.terms() {
                out.add_term(Record::new(prefix.clone(), w.clone()), sign(b as u64) * c);
            }
        }
    }
    Ok(out)
}

/// Twisted sign and merged parts for every shuffle of the bars of `p` and `q`.
fn bar_shuffles(p: &[u32], q: &[u32]) -> Vec<(Vec<u32>, i128)> {
    let (m, n) = (p.len(), q.len());
    let mut out = Vec::new();
    let mut positions = Vec::with_capacity(m);
    fn rec(start: usize, m: usize, total: usize, positions: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
        if positions.len() == m {
            f(positions);
            return;
        }
        for pos in start..=total - (m - positions.len()) {
            positions.push(pos);
            rec(pos + 1, m, total, positions, f);
            positions.pop();
        }
    }
    let mut emit = |pos: &[usize]| {
        let mut merged = Vec::with_capacity(m + n);
        let (mut a, mut c) = (0, 0);
        // N counts pairs (P_i, Q_j) with P_i placed after Q_j, weighted by 1 + P_i Q_j
        let mut parity = 0u64;
        for slot in 0..m + n {
            if a < m && pos[a] == slot {
                parity += (0..c).map(|j| 1 + p[a] as u64 * q[j] as u64).sum::<u64>();
                merged.push(p[a]);
                a += 1;
            } else {
                merged.push(q[c]);
                c += 1;
            }
        }
        out.push((merged, sign(parity)));
    };
    rec(0, m, m + n, &mut positions, &mut emit);
    out
}

/// Product of two records: (−1)^{|v|(ΣP' + b')} (−1)^{b'ΣP} Σ_σ sgn_{P*P'}(σ) e_(b+b', P*_σP', v·v').
pub fn record_product(s: &Record, t: &Record) -> Result<Chain, CellError> {
    if s.genus() != t.genus() {
        return Err(CellError::GenusMismatch {
            expected: s.genus(),
            got: t.genus(),
        });
    }
    let mut out = Chain::zero();
    let c = monomial_product_coeff(&s.v, &t.v);
    if c == 0 {
        return Ok(out);
    }
    let global =
        sign(s.v_sum() as u64 * (t.parts_sum() as u64 + t.b() as u64)) * sign(t.b() as u64 * s.parts_sum() as u64) * c;
    let v: Vec<u32> = s.v.iter().zip(&t.v).map(|(a, b)| a + b).collect();
    for (parts, sg) in bar_shuffles(&s.parts, &t.parts) {
        out.add_term(Record::new(parts, v.clone()), global * sg);
    }
    Ok(out)
}

pub fn product(a: &Chain, b: &Chain) -> Result<Chain, CellError> {
    let mut out = Chain::zero();
    for (s, &x) in a.terms() {
        for (t, &y) in b.terms() {
            for (r, &z) in record_product(s, t)?.terms() {
                out.add_term(r.clone(), x * y * z);
            }
        }
    }
    Ok(out)
}

/// One summand of the coproduct: a pure bar record on the left, a record on the right.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeconcatTerm {
    pub left: Vec<u32>,
    pub right: Record,
    pub sign: i64,
}

/// Splits after the i-th bar for i = 0..b, with sign (−1)^{(b−i)(P₁+…+P_i)}.
pub fn deconcatenate(t: &Record) -> Vec<DeconcatTerm> {
    let b = t.b();
    (0..=b)
        .map(|i| {
            let head: u32 = t.parts[..i].iter().sum();
            DeconcatTerm {
                left: t.parts[..i].to_vec(),
                right: Record::new(t.parts[i..].to_vec(), t.v.clone()),
                sign: if ((b - i) as u64 * head as u64).is_multiple_of(2) {
                    1
                } else {
                    -1
                },
            }
        })
        .collect()
}
