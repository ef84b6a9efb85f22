use std::fmt;

use crate::FreeGroupError;

/// Freely reduced word in the free group on `rank` generators, stored as runs
/// (generator, nonzero exponent) with no two adjacent runs on the same generator.
/// Generators are 0-based: index `i` is γ_{i+1}.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    rank: usize,
    runs: Vec<(usize, i64)>,
}

impl Word {
    pub fn identity(rank: usize) -> Self {
        Word { rank, runs: Vec::new() }
    }

    pub fn generator(rank: usize, index: usize) -> Result<Self, FreeGroupError> {
        Self::from_letters(rank, [(index, 1)])
    }

    /// Reduces an arbitrary product of generator powers.
    pub fn from_letters<I>(rank: usize, letters: I) -> Result<Self, FreeGroupError>
    where
        I: IntoIterator<Item = (usize, i64)>,
    {
        let mut w = Word::identity(rank);
        for (g, e) in letters {
            if g >= rank {
                return Err(FreeGroupError::GeneratorOutOfRange { index: g, rank });
            }
            w.push_run(g, e);
        }
        Ok(w)
    }

    fn push_run(&mut self, g: usize, e: i64) {
        if e == 0 {
            return;
        }
        match self.runs.last_mut() {
            Some(last) if last.0 == g => {
                last.1 += e;
                if last.1 == 0 {
                    self.runs.pop();
                }
            }
            _ => self.runs.push((g, e)),
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn runs(&self) -> &[(usize, i64)] {
        &self.runs
    }

    /// Letters (generator, ±1) of the reduced word.
    pub fn letters(&self) -> Vec<(usize, i64)> {
        self.runs
            .iter()
            .flat_map(|&(g, e)| std::iter::repeat_n((g, e.signum()), e.unsigned_abs() as usize))
            .collect()
    }

    pub fn len(&self) -> usize {
        self.runs.iter().map(|r| r.1.unsigned_abs() as usize).sum()
    }

    pub fn is_identity(&self) -> bool {
        self.runs.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.is_identity()
    }

    /// Product `self · other`. Panics when the ranks differ.
    pub fn mul(&self, other: &Word) -> Word {
        assert_eq!(self.rank, other.rank, "multiplying words of different rank");
        let mut w = self.clone();
        for &(g, e) in &other.runs {
            w.push_run(g, e);
        }
        w
    }

    pub fn inverse(&self) -> Word {
        Word {
            rank: self.rank,
            runs: self.runs.iter().rev().map(|&(g, e)| (g, -e)).collect(),
        }
    }

    pub fn pow(&self, n: i64) -> Word {
        let base = if n < 0 { self.inverse() } else { self.clone() };
        let mut w = Word::identity(self.rank);
        for _ in 0..n.unsigned_abs() {
            w = w.mul(&base);
        }
        w
    }

    /// u·self·u⁻¹.
    pub fn conjugate_by(&self, u: &Word) -> Word {
        u.mul(self).mul(&u.inverse())
    }

    /// a·b·a⁻¹·b⁻¹.
    pub fn commutator(a: &Word, b: &Word) -> Word {
        a.mul(b).mul(&a.inverse()).mul(&b.inverse())
    }

    /// The boundary word ζ_g = [γ₁,γ₂]⋯[γ_{2g−1},γ_{2g}] in rank 2g.
    pub fn boundary(genus: usize) -> Word {
        let rank = 2 * genus;
        let mut w = Word::identity(rank);
        for i in 0..genus {
            let a = Word::generator(rank, 2 * i).expect("in range");
            let b = Word::generator(rank, 2 * i + 1).expect("in range");
            w = w.mul(&Word::commutator(&a, &b));
        }
        w
    }

    /// Cyclically reduced core; conjugate to `self`.
    pub fn cyclic_reduce(&self) -> Word {
        let mut letters = self.letters();
        while letters.len() >= 2 {
            let (f, l) = (letters[0], letters[letters.len() - 1]);
            if f.0 == l.0 && f.1 == -l.1 {
                letters.pop();
                letters.remove(0);
            } else {
                break;
            }
        }
        Word::from_letters(self.rank, letters).expect("letters already in range")
    }

    /// Whether the two words are conjugate: their cyclic reductions agree up to rotation.
    pub fn is_conjugate_to(&self, other: &Word) -> bool {
        if self.rank != other.rank {
            return false;
        }
        let a = self.cyclic_reduce().letters();
        let b = other.cyclic_reduce().letters();
        if a.len() != b.len() {
            return false;
        }
        if a.is_empty() {
            return true;
        }
        (0..a.len()).any(|s| (0..a.len()).all(|k| a[(k + s) % a.len()] == b[k]))
    }
}

impl fmt::Display for Word {
    /// Uses the input grammar: `g1 g2^3 G1`, identity as `1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.runs.is_empty() {
            return write!(f, "1");
        }
        for (k, &(g, e)) in self.runs.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            let letter = if e > 0 { 'g' } else { 'G' };
            write!(f, "{letter}{}", g + 1)?;
            if e.abs() > 1 {
                write!(f, "^{}", e.abs())?;
            }
        }
        Ok(())
    }
}

/// Free reduction of a letter sequence.
pub fn reduce<I>(rank: usize, letters: I) -> Result<Word, FreeGroupError>
where
    I: IntoIterator<Item = (usize, i64)>,
{
    Word::from_letters(rank, letters)
}
