use std::cmp::Ordering;
use std::fmt;

use umor::monomials_of_weight;

/// Cell index (b, P, v): P is a sequence of b positive parts, v has 2g entries.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Record {
    pub parts: Vec<u32>,
    pub v: Vec<u32>,
}

impl Record {
    pub fn new(parts: Vec<u32>, v: Vec<u32>) -> Self {
        debug_assert!(parts.iter().all(|&p| p > 0), "parts must be positive");
        debug_assert!(v.len().is_multiple_of(2), "v has even length");
        Record { parts, v }
    }

    pub fn empty(genus: usize) -> Self {
        Record {
            parts: Vec::new(),
            v: vec![0; 2 * genus],
        }
    }

    /// Bar-degree.
    pub fn b(&self) -> usize {
        self.parts.len()
    }

    pub fn genus(&self) -> usize {
        self.v.len() / 2
    }

    /// Weight magnitude ΣP + Σv.
    pub fn n(&self) -> u32 {
        self.parts.iter().sum::<u32>() + self.v.iter().sum::<u32>()
    }

    /// Cell dimension n + b.
    pub fn d(&self) -> u32 {
        self.n() + self.b() as u32
    }

    pub fn parts_sum(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn v_sum(&self) -> u32 {
        self.v.iter().sum()
    }
}

impl Ord for Record {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.parts.len(), &self.parts, &self.v).cmp(&(other.parts.len(), &other.parts, &other.v))
    }
}

impl PartialOrd for Record {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Record {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p: Vec<String> = self.parts.iter().map(u32::to_string).collect();
        let v: Vec<String> = self.v.iter().map(u32::to_string).collect();
        write!(f, "({}, ({}), ({}))", self.b(), p.join(","), v.join(","))
    }
}

/// Compositions of m into exactly b positive parts, lexicographic.
pub fn compositions(m: u32, b: usize) -> Vec<Vec<u32>> {
    fn rec(m: u32, b: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if b == 0 {
            if m == 0 {
                out.push(cur.clone());
            }
            return;
        }
        if (m as usize) < b {
            return;
        }
        for first in 1..=m - (b as u32 - 1) {
            cur.push(first);
            rec(m - first, b - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(m, b, &mut Vec::new(), &mut out);
    out
}

/// Records of genus g and weight n with exactly b bars, sorted.
pub fn records_with_bars(genus: usize, n: u32, b: usize) -> Vec<Record> {
    let mut out = Vec::new();
    for m in b as u32..=n {
        let vs = monomials_of_weight(2 * genus, n - m);
        for parts in compositions(m, b) {
            for v in &vs {
                out.push(Record::new(parts.clone(), v.clone()));
            }
        }
    }
    out.sort();
    out
}

/// All records of genus g and weight n, sorted by (b, P, v).
pub fn enumerate_records(genus: usize, n: u32) -> Vec<Record> {
    (0..=n as usize).flat_map(|b| records_with_bars(genus, n, b)).collect()
}
