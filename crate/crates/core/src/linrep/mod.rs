//! Representations of the quiver as vertex-indexed matrices, Hom-space
//! computation, direct sums, isomorphism testing, the Auslander-Reiten
//! translate and full decomposition into indecomposables.

mod decompose;
mod hom;
mod translate;

pub use decompose::{decompose, Decomposition, Summand};
pub use translate::{ar_translate, Direction};

use crate::error::{Error, Result};
use crate::exactnum::{Field, Mat, Scalar};
use crate::quiver::{DimVector, Quiver};

/// A finite-dimensional representation: a space per vertex, a matrix per
/// arrow mapping the source space into the target space.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Representation {
    pub quiver: Quiver,
    pub field: Field,
    pub dims: DimVector,
    /// `maps[i]` has shape dims(target of arrow i) x dims(source of arrow i).
    pub maps: Vec<Mat>,
}

/// A morphism of representations: one block per vertex, commuting with the
/// arrow maps.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Morphism {
    pub blocks: Vec<Mat>,
}

impl Representation {
    pub fn zero(quiver: &Quiver, field: Field) -> Representation {
        let dims = DimVector::zero(quiver.n_vertices);
        let maps = quiver
            .arrows
            .iter()
            .map(|_| Mat::zero(&field, 0, 0))
            .collect();
        Representation {
            quiver: quiver.clone(),
            field,
            dims,
            maps,
        }
    }

    pub fn new(quiver: &Quiver, field: Field, dims: DimVector, maps: Vec<Mat>) -> Result<Representation> {
        let rep = Representation {
            quiver: quiver.clone(),
            field,
            dims,
            maps,
        };
        rep.validate()?;
        Ok(rep)
    }

    pub fn validate(&self) -> Result<()> {
        self.quiver.validate()?;
        if self.dims.0.len() != self.quiver.n_vertices {
            return Err(Error::Dimension(
                "dimension vector length does not match the quiver".into(),
            ));
        }
        if self.maps.len() != self.quiver.n_arrows() {
            return Err(Error::Dimension(
                "one matrix per arrow is required".into(),
            ));
        }
        for (i, m) in self.maps.iter().enumerate() {
            let (s, t) = self.quiver.arrows[i];
            if m.rows != self.dims.at(t) || m.cols != self.dims.at(s) {
                return Err(Error::Dimension(format!(
                    "matrix for arrow {} must be {}x{}, got {}x{}",
                    i + 1,
                    self.dims.at(t),
                    self.dims.at(s),
                    m.rows,
                    m.cols
                )));
            }
        }
        Ok(())
    }

    pub fn total_dim(&self) -> usize {
        self.dims.total()
    }

    pub fn is_zero(&self) -> bool {
        self.total_dim() == 0
    }

    pub fn dim_at(&self, vertex: usize) -> usize {
        self.dims.at(vertex)
    }

    fn check_compatible(&self, other: &Representation) -> Result<()> {
        if self.quiver != other.quiver || self.field != other.field {
            return Err(Error::Incompatible(
                "representations live over different quivers or fields".into(),
            ));
        }
        Ok(())
    }

    /// Offset of a vertex block inside the total space.
    pub fn vertex_offset(&self, vertex: usize) -> usize {
        (1..vertex).map(|x| self.dims.at(x)).sum()
    }

    /// Change of basis: replace M by g^-1 M g vertex-wise, where g is an
    /// invertible block per vertex. Produces an isomorphic representation.
    pub fn conjugate(&self, g: &[Mat]) -> Representation {
        let f = &self.field;
        let mut maps = Vec::with_capacity(self.maps.len());
        for (i, m) in self.maps.iter().enumerate() {
            let (s, t) = self.quiver.arrows[i];
            let gt_inv = g[t - 1].inverse(f).expect("base change must be invertible");
            maps.push(gt_inv.mul(f, &m.mul(f, &g[s - 1])));
        }
        Representation {
            quiver: self.quiver.clone(),
            field: self.field,
            dims: self.dims.clone(),
            maps,
        }
    }
}

impl Morphism {
    pub fn identity(rep: &Representation) -> Morphism {
        Morphism {
            blocks: (1..=rep.quiver.n_vertices)
                .map(|x| Mat::identity(&rep.field, rep.dim_at(x)))
                .collect(),
        }
    }

    pub fn zero(source: &Representation, target: &Representation) -> Morphism {
        Morphism {
            blocks: (1..=source.quiver.n_vertices)
                .map(|x| Mat::zero(&source.field, target.dim_at(x), source.dim_at(x)))
                .collect(),
        }
    }

    /// Verify the commuting-square condition against explicit endpoints.
    pub fn commutes(&self, source: &Representation, target: &Representation) -> bool {
        let f = &source.field;
        source.quiver.arrows.iter().enumerate().all(|(i, &(s, t))| {
            let lhs = target.maps[i].mul(f, &self.blocks[s - 1]);
            let rhs = self.blocks[t - 1].mul(f, &source.maps[i]);
            lhs == rhs
        })
    }

    pub fn is_invertible(&self, field: &Field) -> bool {
        self.blocks.iter().all(|b| b.is_invertible(field))
    }

    pub fn is_zero(&self, field: &Field) -> bool {
        self.blocks.iter().all(|b| b.is_zero_mat(field))
    }

    pub fn compose(&self, field: &Field, first: &Morphism) -> Morphism {
        Morphism {
            blocks: self
                .blocks
                .iter()
                .zip(&first.blocks)
                .map(|(g, f)| g.mul(field, f))
                .collect(),
        }
    }

    pub fn add(&self, field: &Field, other: &Morphism) -> Morphism {
        Morphism {
            blocks: self
                .blocks
                .iter()
                .zip(&other.blocks)
                .map(|(a, b)| a.add(field, b))
                .collect(),
        }
    }

    pub fn scale(&self, field: &Field, s: &Scalar) -> Morphism {
        Morphism {
            blocks: self.blocks.iter().map(|b| b.scale(field, s)).collect(),
        }
    }
}

pub use hom::{direct_sum, hom_space, is_isomorphic, random_combination};

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shape_validation_catches_mismatch() {
        let q = Quiver::line_equioriented(2);
        let f = Field::fp(3);
        let bad = Representation::new(
            &q,
            f,
            DimVector(vec![1, 2]),
            vec![Mat::zero(&f, 1, 1)],
        );
        assert!(matches!(bad, Err(Error::Dimension(_))));
    }
}
