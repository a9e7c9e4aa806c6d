//! Internally graded vector spaces, linear maps and complexes of them.

use std::collections::{BTreeMap, HashSet};

use crate::error::{Error, Result};
use crate::linalg::SparseMatrix;

/// Finite basis labels per internal degree.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GradedVectorSpace {
    pub pieces: BTreeMap<i64, Vec<String>>,
}

impl GradedVectorSpace {
    pub fn new(pieces: BTreeMap<i64, Vec<String>>) -> Result<GradedVectorSpace> {
        for (d, labels) in &pieces {
            let mut seen = HashSet::new();
            for l in labels {
                if !seen.insert(l) {
                    return Err(Error::InvalidComplex(format!(
                        "duplicate label `{l}` in degree {d}"
                    )));
                }
            }
        }
        Ok(GradedVectorSpace { pieces })
    }

    pub fn dim(&self, degree: i64) -> usize {
        self.pieces.get(&degree).map_or(0, |v| v.len())
    }

    pub fn total_dim(&self) -> usize {
        self.pieces.values().map(|v| v.len()).sum()
    }

    pub fn degrees(&self) -> impl Iterator<Item = i64> + '_ {
        self.pieces.keys().copied()
    }
}

/// A degree-shifting linear map given blockwise: `blocks[d]` maps the degree-`d`
/// piece of the source to the degree-`d + shift` piece of the target.
#[derive(Clone, Debug)]
pub struct LinearMap {
    pub source: GradedVectorSpace,
    pub target: GradedVectorSpace,
    pub shift: i64,
    pub blocks: BTreeMap<i64, SparseMatrix>,
}

impl LinearMap {
    pub fn new(
        source: GradedVectorSpace,
        target: GradedVectorSpace,
        shift: i64,
        blocks: BTreeMap<i64, SparseMatrix>,
    ) -> Result<LinearMap> {
        for (d, m) in &blocks {
            if m.ncols() != source.dim(*d) || m.nrows() != target.dim(d + shift) {
                return Err(Error::InvalidComplex(format!(
                    "block in degree {d} has shape {}x{}, expected {}x{}",
                    m.nrows(),
                    m.ncols(),
                    target.dim(d + shift),
                    source.dim(*d)
                )));
            }
        }
        Ok(LinearMap {
            source,
            target,
            shift,
            blocks,
        })
    }

    pub fn zero(source: GradedVectorSpace, target: GradedVectorSpace) -> LinearMap {
        LinearMap {
            source,
            target,
            shift: 0,
            blocks: BTreeMap::new(),
        }
    }

    /// The block in source degree `d`, zero if absent.
    pub fn block(&self, d: i64) -> SparseMatrix {
        self.blocks.get(&d).cloned().unwrap_or_else(|| {
            SparseMatrix::zeros(self.target.dim(d + self.shift), self.source.dim(d))
        })
    }

    pub fn rank(&self, d: i64) -> usize {
        self.blocks.get(&d).map_or(0, |m| m.rank())
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &LinearMap) -> Result<LinearMap> {
        if self.target != other.source {
            return Err(Error::InvalidComplex("composition of incompatible maps".into()));
        }
        let mut blocks = BTreeMap::new();
        for d in self.source.degrees() {
            let m = other.block(d + self.shift).matmul(&self.block(d));
            blocks.insert(d, m);
        }
        LinearMap::new(
            self.source.clone(),
            other.target.clone(),
            self.shift + other.shift,
            blocks,
        )
    }

    pub fn is_zero(&self) -> bool {
        self.blocks.values().all(|m| m.is_zero())
    }
}

/// `spaces[i]` with differentials `maps[i]: spaces[i] -> spaces[i+1]`.
#[derive(Clone, Debug)]
pub struct ComplexOfGVS {
    pub spaces: Vec<GradedVectorSpace>,
    pub maps: Vec<LinearMap>,
}

impl ComplexOfGVS {
    /// Validates shapes and `d ∘ d = 0`.
    pub fn new(spaces: Vec<GradedVectorSpace>, maps: Vec<LinearMap>) -> Result<ComplexOfGVS> {
        if maps.len() + 1 != spaces.len() && !(spaces.is_empty() && maps.is_empty()) {
            return Err(Error::InvalidComplex(
                "need exactly one differential between consecutive spaces".into(),
            ));
        }
        for (i, m) in maps.iter().enumerate() {
            if m.source != spaces[i] || m.target != spaces[i + 1] {
                return Err(Error::InvalidComplex(format!(
                    "differential {i} has the wrong source or target"
                )));
            }
        }
        for i in 1..maps.len() {
            if !maps[i - 1].then(&maps[i])?.is_zero() {
                return Err(Error::InvalidComplex(format!(
                    "d∘d is nonzero at position {i}"
                )));
            }
        }
        Ok(ComplexOfGVS { spaces, maps })
    }

    /// Dimension of `ker(maps[i]) / im(maps[i-1])` for every index and internal degree.
    pub fn homology_dims(&self) -> BTreeMap<(usize, i64), usize> {
        let mut out = BTreeMap::new();
        for (i, space) in self.spaces.iter().enumerate() {
            for d in space.degrees() {
                let dim = space.dim(d);
                let rank_out = self.maps.get(i).map_or(0, |m| m.rank(d));
                let rank_in = if i == 0 {
                    0
                } else {
                    let m = &self.maps[i - 1];
                    m.rank(d - m.shift)
                };
                out.insert((i, d), dim - rank_out - rank_in);
            }
        }
        out
    }

    /// Total homology per index.
    pub fn homology_totals(&self) -> Vec<usize> {
        let dims = self.homology_dims();
        (0..self.spaces.len())
            .map(|i| {
                dims.iter()
                    .filter(|((j, _), _)| *j == i)
                    .map(|(_, v)| *v)
                    .sum()
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;

    fn line() -> GradedVectorSpace {
        GradedVectorSpace::new([(0, vec!["e".to_string()])].into_iter().collect()).unwrap()
    }

    #[test]
    fn single_space_has_its_own_homology() {
        let c = ComplexOfGVS::new(vec![line()], vec![]).unwrap();
        assert_eq!(c.homology_totals(), vec![1]);
    }

    #[test]
    fn identity_differential_kills_homology() {
        let id = LinearMap::new(
            line(),
            line(),
            0,
            [(0, SparseMatrix::identity(1))].into_iter().collect(),
        )
        .unwrap();
        let c = ComplexOfGVS::new(vec![line(), line()], vec![id]).unwrap();
        assert_eq!(c.homology_totals(), vec![0, 0]);
    }

    #[test]
    fn rejects_nonzero_square() {
        let id = LinearMap::new(
            line(),
            line(),
            0,
            [(0, SparseMatrix::from_dense(&[vec![int(1)]]))]
                .into_iter()
                .collect(),
        )
        .unwrap();
        assert!(matches!(
            ComplexOfGVS::new(vec![line(), line(), line()], vec![id.clone(), id]),
            Err(Error::InvalidComplex(_))
        ));
    }

    #[test]
    fn duplicate_labels_rejected() {
        let p = [(0, vec!["a".to_string(), "a".to_string()])].into_iter().collect();
        assert!(GradedVectorSpace::new(p).is_err());
    }
}
