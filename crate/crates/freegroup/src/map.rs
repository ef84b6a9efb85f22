use crate::{ExteriorClass, FreeGroupError, Word};

/// Homomorphism G_k → G_l given by the images of the generators.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FreeGroupMap {
    source_rank: usize,
    target_rank: usize,
    images: Vec<Word>,
}

impl FreeGroupMap {
    pub fn new(target_rank: usize, images: Vec<Word>) -> Result<Self, FreeGroupError> {
        if let Some(w) = images.iter().find(|w| w.rank() != target_rank) {
            return Err(FreeGroupError::RankMismatch {
                expected: target_rank,
                got: w.rank(),
            });
        }
        Ok(FreeGroupMap {
            source_rank: images.len(),
            target_rank,
            images,
        })
    }

    pub fn identity(rank: usize) -> Self {
        let images = (0..rank).map(|i| Word::generator(rank, i).expect("in range")).collect();
        FreeGroupMap {
            source_rank: rank,
            target_rank: rank,
            images,
        }
    }

    /// Identity except for the listed generators.
    pub fn with_images(rank: usize, changes: Vec<(usize, Word)>) -> Result<Self, FreeGroupError> {
        let mut images: Vec<Word> = Self::identity(rank).images;
        for (i, w) in changes {
            if i >= rank {
                return Err(FreeGroupError::GeneratorOutOfRange { index: i, rank });
            }
            images[i] = w;
        }
        Self::new(rank, images)
    }

    pub fn source_rank(&self) -> usize {
        self.source_rank
    }

    pub fn target_rank(&self) -> usize {
        self.target_rank
    }

    pub fn images(&self) -> &[Word] {
        &self.images
    }

    pub fn image(&self, i: usize) -> &Word {
        &self.images[i]
    }

    pub fn apply(&self, w: &Word) -> Result<Word, FreeGroupError> {
        if w.rank() != self.source_rank {
            return Err(FreeGroupError::RankMismatch {
                expected: self.source_rank,
                got: w.rank(),
            });
        }
        let mut out = Word::identity(self.target_rank);
        for &(g, e) in w.runs() {
            out = out.mul(&self.images[g].pow(e));
        }
        Ok(out)
    }

    /// self ∘ inner.
    pub fn compose(&self, inner: &FreeGroupMap) -> Result<FreeGroupMap, FreeGroupError> {
        let images = inner
            .images
            .iter()
            .map(|w| self.apply(w))
            .collect::<Result<Vec<_>, _>>()?;
        FreeGroupMap::new(self.target_rank, images)
    }

    /// n-fold composite, n ≥ 0.
    pub fn pow(&self, n: u32) -> Result<FreeGroupMap, FreeGroupError> {
        let mut out = FreeGroupMap::identity(self.source_rank);
        for _ in 0..n {
            out = self.compose(&out)?;
        }
        Ok(out)
    }

    pub fn is_identity(&self) -> bool {
        self.source_rank == self.target_rank && *self == FreeGroupMap::identity(self.source_rank)
    }

    /// Images of the generators in H: entry [r][c] is the γ_r-coordinate of [φ(γ_c)].
    pub fn abelianization(&self) -> Vec<Vec<i64>> {
        let mut m = vec![vec![0; self.source_rank]; self.target_rank];
        for (c, w) in self.images.iter().enumerate() {
            for (r, v) in crate::abelianize(w).to_vector().into_iter().enumerate() {
                m[r][c] = v;
            }
        }
        m
    }

    /// Abelianized images as degree-1 classes.
    pub fn abelian_images(&self) -> Vec<ExteriorClass> {
        self.images.iter().map(crate::abelianize).collect()
    }
}
