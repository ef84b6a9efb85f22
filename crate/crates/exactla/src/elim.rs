//! Sparse diagonalisation by row and column operations over a Euclidean domain.
//!
//! Unit pivots are taken first (no coefficient growth); what remains is
//! reduced by pivoting on an entry of minimal size until every row and column
//! has collapsed onto a single diagonal entry.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::PrimeField;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct Overflow;

pub(crate) trait Domain {
    type E: Clone + std::fmt::Debug;
    fn is_zero(&self, a: &Self::E) -> bool;
    fn is_unit(&self, a: &Self::E) -> bool;
    /// Size used to pick pivots among non-units.
    fn size(&self, a: &Self::E) -> u128;
    /// Quotient q with a − q·b small; exact when b is a unit.
    fn quo(&self, a: &Self::E, b: &Self::E) -> Self::E;
    /// a − q·b.
    fn sub_mul(&self, a: &Self::E, q: &Self::E, b: &Self::E) -> Result<Self::E, Overflow>;
    fn from_i64(&self, v: i64) -> Self::E;
}

pub(crate) struct FpDomain(pub PrimeField);

impl Domain for FpDomain {
    type E = u64;
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn is_unit(&self, a: &u64) -> bool {
        *a != 0
    }
    fn size(&self, _: &u64) -> u128 {
        1
    }
    fn quo(&self, a: &u64, b: &u64) -> u64 {
        self.0.mul(*a, self.0.inv(*b).expect("nonzero pivot"))
    }
    fn sub_mul(&self, a: &u64, q: &u64, b: &u64) -> Result<u64, Overflow> {
        Ok(self.0.sub(*a, self.0.mul(*q, *b)))
    }
    fn from_i64(&self, v: i64) -> u64 {
        self.0.reduce(v)
    }
}

pub(crate) struct I128Domain;

impl Domain for I128Domain {
    type E = i128;
    fn is_zero(&self, a: &i128) -> bool {
        *a == 0
    }
    fn is_unit(&self, a: &i128) -> bool {
        *a == 1 || *a == -1
    }
    fn size(&self, a: &i128) -> u128 {
        a.unsigned_abs()
    }
    fn quo(&self, a: &i128, b: &i128) -> i128 {
        a.div_euclid(*b)
    }
    fn sub_mul(&self, a: &i128, q: &i128, b: &i128) -> Result<i128, Overflow> {
        q.checked_mul(*b).and_then(|qb| a.checked_sub(qb)).ok_or(Overflow)
    }
    fn from_i64(&self, v: i64) -> i128 {
        v as i128
    }
}

pub(crate) struct BigDomain;

impl Domain for BigDomain {
    type E = BigInt;
    fn is_zero(&self, a: &BigInt) -> bool {
        a.is_zero()
    }
    fn is_unit(&self, a: &BigInt) -> bool {
        a.abs().is_one()
    }
    fn size(&self, a: &BigInt) -> u128 {
        // only the ordering matters; saturate huge values
        let bits = a.bits();
        if bits >= 127 {
            u128::MAX - (256 - bits.min(255)) as u128
        } else {
            a.abs().try_into().unwrap_or(u128::MAX)
        }
    }
    fn quo(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a.div_floor(b)
    }
    fn sub_mul(&self, a: &BigInt, q: &BigInt, b: &BigInt) -> Result<BigInt, Overflow> {
        Ok(a - q * b)
    }
    fn from_i64(&self, v: i64) -> BigInt {
        BigInt::from(v)
    }
}

pub(crate) struct Eliminator<'d, D: Domain> {
    dom: &'d D,
    rows: Vec<BTreeMap<usize, D::E>>,
    cols: Vec<BTreeSet<usize>>,
    diagonal: Vec<D::E>,
}

impl<'d, D: Domain> Eliminator<'d, D> {
    pub(crate) fn new(
        dom: &'d D,
        nrows: usize,
        ncols: usize,
        entries: impl IntoIterator<Item = (usize, usize, i64)>,
    ) -> Self {
        let mut rows = vec![BTreeMap::new(); nrows];
        let mut cols = vec![BTreeSet::new(); ncols];
        for (r, c, v) in entries {
            let e = dom.from_i64(v);
            if !dom.is_zero(&e) {
                rows[r].insert(c, e);
                cols[c].insert(r);
            }
        }
        Eliminator {
            dom,
            rows,
            cols,
            diagonal: Vec::new(),
        }
    }

    /// Nonzero diagonal entries of an equivalent diagonal matrix.
    pub(crate) fn run(mut self) -> Result<Vec<D::E>, Overflow> {
        self.unit_phase()?;
        self.general_phase()?;
        Ok(self.diagonal)
    }

    fn unit_phase(&mut self) -> Result<(), Overflow> {
        loop {
            let mut order: Vec<usize> = (0..self.rows.len()).filter(|&r| !self.rows[r].is_empty()).collect();
            order.sort_by_key(|&r| self.rows[r].len());
            let mut progress = false;
            for r in order {
                let best = self.rows[r]
                    .iter()
                    .filter(|(_, v)| self.dom.is_unit(v))
                    .min_by_key(|(c, _)| self.cols[**c].len())
                    .map(|(c, _)| *c);
                if let Some(c) = best {
                    self.clear_column(r, c)?;
                    self.retire(r, c);
                    progress = true;
                }
            }
            if !progress {
                return Ok(());
            }
        }
    }

    fn general_phase(&mut self) -> Result<(), Overflow> {
        loop {
            let mut best: Option<(u128, usize, usize)> = None;
            for (r, row) in self.rows.iter().enumerate() {
                for (c, v) in row {
                    let s = self.dom.size(v);
                    if best.is_none_or(|b| s < b.0) {
                        best = Some((s, r, *c));
                    }
                }
            }
            let Some((_, r, c)) = best else {
                return Ok(());
            };
            if self.dom.is_unit(&self.rows[r][&c]) {
                self.clear_column(r, c)?;
                self.retire(r, c);
                continue;
            }
            self.clear_column(r, c)?;
            if self.cols[c].len() > 1 {
                continue;
            }
            // column c now meets only row r, so column operations touch row r alone
            let pv = self.rows[r][&c].clone();
            let others: Vec<usize> = self.rows[r].keys().copied().filter(|&k| k != c).collect();
            for c2 in others {
                let a = self.rows[r][&c2].clone();
                let q = self.dom.quo(&a, &pv);
                let rem = self.dom.sub_mul(&a, &q, &pv)?;
                if self.dom.is_zero(&rem) {
                    self.rows[r].remove(&c2);
                    self.cols[c2].remove(&r);
                } else {
                    self.rows[r].insert(c2, rem);
                }
            }
            if self.rows[r].len() == 1 {
                self.retire(r, c);
            }
        }
    }

    /// Row operations reducing every other entry of column c modulo the pivot at (r, c).
    fn clear_column(&mut self, r: usize, c: usize) -> Result<(), Overflow> {
        let pv = self.rows[r][&c].clone();
        let pivot_row: Vec<(usize, D::E)> = self.rows[r].iter().map(|(k, v)| (*k, v.clone())).collect();
        let targets: Vec<usize> = self.cols[c].iter().copied().filter(|&k| k != r).collect();
        for r2 in targets {
            let a = self.rows[r2][&c].clone();
            let q = self.dom.quo(&a, &pv);
            if self.dom.is_zero(&q) {
                continue;
            }
            for (c2, v) in &pivot_row {
                let cur = self.rows[r2].get(c2).cloned().unwrap_or_else(|| self.dom.from_i64(0));
                let new = self.dom.sub_mul(&cur, &q, v)?;
                if self.dom.is_zero(&new) {
                    if self.rows[r2].remove(c2).is_some() {
                        self.cols[*c2].remove(&r2);
                    }
                } else {
                    if self.rows[r2].insert(*c2, new).is_none() {
                        self.cols[*c2].insert(r2);
                    }
                }
            }
        }
        Ok(())
    }

    /// Records the pivot and deletes its row; column c is assumed to meet only row r.
    fn retire(&mut self, r: usize, c: usize) {
        let row = std::mem::take(&mut self.rows[r]);
        for k in row.keys() {
            self.cols[*k].remove(&r);
        }
        debug_assert!(self.cols[c].is_empty());
        self.diagonal.push(row[&c].clone());
    }
}
