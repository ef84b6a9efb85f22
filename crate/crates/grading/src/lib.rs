//! Bigraded dimension tables shared by the cellular and structural pipelines.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

/// Nonnegative dimensions indexed by (weight, bar-degree), exact for
/// weight ≤ `weight_bound` and bar-degree ≥ −`bar_bound`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BigradedSeries {
    pub weight_bound: i64,
    pub bar_bound: i64,
    #[serde(with = "as_pairs")]
    entries: BTreeMap<(i64, i64), u64>,
}

impl BigradedSeries {
    pub fn new(weight_bound: i64, bar_bound: i64) -> Self {
        BigradedSeries {
            weight_bound,
            bar_bound,
            entries: BTreeMap::new(),
        }
    }

    pub fn in_window(&self, weight: i64, bar: i64) -> bool {
        weight <= self.weight_bound && bar >= -self.bar_bound
    }

    /// Adds to an entry; bidegrees outside the window are dropped.
    pub fn add(&mut self, weight: i64, bar: i64, dim: u64) {
        if dim == 0 || !self.in_window(weight, bar) {
            return;
        }
        *self.entries.entry((weight, bar)).or_insert(0) += dim;
    }

    pub fn get(&self, weight: i64, bar: i64) -> u64 {
        self.entries.get(&(weight, bar)).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = ((i64, i64), u64)> + '_ {
        self.entries.iter().map(|(k, v)| (*k, *v))
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn total(&self) -> u64 {
        self.entries.values().sum()
    }

    /// Same series viewed in a smaller window.
    pub fn restrict(&self, weight_bound: i64, bar_bound: i64) -> Self {
        let mut out = BigradedSeries::new(weight_bound, bar_bound);
        for ((w, b), d) in self.iter() {
            out.add(w, b, d);
        }
        out
    }

    /// Shifts every class, and the window with it, up in weight by `s`.
    pub fn shift_weight(&self, s: i64) -> Self {
        let mut out = BigradedSeries::new(self.weight_bound + s, self.bar_bound);
        for ((w, b), d) in self.iter() {
            out.add(w + s, b, d);
        }
        out
    }

    pub fn scaled(&self, k: u64) -> Self {
        let mut out = BigradedSeries::new(self.weight_bound, self.bar_bound);
        for ((w, b), d) in self.iter() {
            out.add(w, b, d * k);
        }
        out
    }

    pub fn add_series(&mut self, other: &BigradedSeries) {
        for ((w, b), d) in other.iter() {
            self.add(w, b, d);
        }
    }

    /// Tensor product of two series whose classes all sit in weight ≥ 0 and bar-degree ≤ 0,
    /// so the truncation of the product only needs the truncations of the factors.
    pub fn tensor(&self, other: &BigradedSeries) -> Self {
        let mut out = BigradedSeries::new(
            self.weight_bound.min(other.weight_bound),
            self.bar_bound.min(other.bar_bound),
        );
        for ((w1, b1), d1) in self.iter() {
            for ((w2, b2), d2) in other.iter() {
                out.add(w1 + w2, b1 + b2, d1 * d2);
            }
        }
        out
    }

    /// Bidegrees where the two series differ, with both values.
    pub fn differences(&self, other: &BigradedSeries) -> Vec<((i64, i64), u64, u64)> {
        let mut keys: Vec<(i64, i64)> = self.entries.keys().chain(other.entries.keys()).copied().collect();
        keys.sort_unstable();
        keys.dedup();
        keys.into_iter()
            .filter(|&(w, b)| self.in_window(w, b) && other.in_window(w, b))
            .filter_map(|(w, b)| {
                let (x, y) = (self.get(w, b), other.get(w, b));
                (x != y).then_some(((w, b), x, y))
            })
            .collect()
    }
}

/// One entry H_i(C_n): a rank, plus torsion orders over the integers.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize, Default)]
pub struct HomologyEntry {
    pub rank: u64,
    pub torsion: Vec<u64>,
}

/// H_i(C_n) for 0 ≤ i ≤ n ≤ `max_n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomologyTable {
    pub coefficients: String,
    pub max_n: u32,
    #[serde(with = "as_pairs")]
    entries: BTreeMap<(u32, u32), HomologyEntry>,
}

impl HomologyTable {
    pub fn new(coefficients: impl Into<String>, max_n: u32) -> Self {
        HomologyTable {
            coefficients: coefficients.into(),
            max_n,
            entries: BTreeMap::new(),
        }
    }

    pub fn set(&mut self, n: u32, i: u32, entry: HomologyEntry) {
        assert!(i <= n, "H_{i}(C_{n}) lies outside the vanishing range");
        if entry.rank != 0 || !entry.torsion.is_empty() {
            self.entries.insert((n, i), entry);
        }
    }

    pub fn get(&self, n: u32, i: u32) -> HomologyEntry {
        self.entries.get(&(n, i)).cloned().unwrap_or_default()
    }

    pub fn dim(&self, n: u32, i: u32) -> u64 {
        self.get(n, i).rank
    }

    /// Every (n, i) with 0 ≤ i ≤ n ≤ max_n, zero entries included.
    pub fn rows(&self) -> Vec<(u32, u32, HomologyEntry)> {
        let mut out = Vec::new();
        for n in 0..=self.max_n {
            for i in 0..=n {
                out.push((n, i, self.get(n, i)));
            }
        }
        out
    }

    pub fn merge(&mut self, other: HomologyTable) {
        self.max_n = self.max_n.max(other.max_n);
        self.entries.extend(other.entries);
    }

    /// Positions (n, i) where the tables disagree.
    pub fn differences(&self, other: &HomologyTable) -> Vec<(u32, u32, HomologyEntry, HomologyEntry)> {
        let max_n = self.max_n.min(other.max_n);
        let mut out = Vec::new();
        for n in 0..=max_n {
            for i in 0..=n {
                let (a, b) = (self.get(n, i), other.get(n, i));
                if a != b {
                    out.push((n, i, a, b));
                }
            }
        }
        out
    }
}

// JSON objects need string keys, so tuple-keyed maps go out as [key, value] lists
mod as_pairs {
    use std::collections::BTreeMap;

    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<K: Serialize, V: Serialize, S: Serializer>(map: &BTreeMap<K, V>, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(map.iter())
    }

    pub fn deserialize<'de, K, V, D>(d: D) -> Result<BTreeMap<K, V>, D::Error>
    where
        K: Deserialize<'de> + Ord,
        V: Deserialize<'de>,
        D: Deserializer<'de>,
    {
        Ok(Vec::<(K, V)>::deserialize(d)?.into_iter().collect())
    }
}
