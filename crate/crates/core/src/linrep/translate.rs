//! The Auslander-Reiten translate, computed homologically: a minimal
//! projective presentation P1 -> P0 -> M -> 0 is transposed by applying
//! Hom(-, kQ) (which swaps the quiver for its opposite), the cokernel of the
//! transposed map is the transpose Tr M, and dualizing vertex-wise gives
//! tau M = D Tr M. The inverse translate is Tr D.
//!
//! This construction is kept independent of the geometric coordinate model
//! so the two can be checked against each other.

use std::collections::BTreeMap;

use super::Representation;
use crate::error::Result;
use crate::exactnum::{Field, Mat, Scalar};
use crate::quiver::{DimVector, Quiver};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Tau,
    TauInverse,
}

/// tau M (Direction::Tau) or tau^{-1} M (Direction::TauInverse).
///
/// Projective summands vanish under Tau, injective summands under
/// TauInverse; the construction handles decomposable inputs directly.
pub fn ar_translate(m: &Representation, direction: Direction) -> Result<Representation> {
    m.validate()?;
    match direction {
        Direction::Tau => Ok(dual(&transpose_rep(m)?)),
        Direction::TauInverse => transpose_rep(&dual(m)),
    }
}

/// Vertex-wise k-dual, a representation of the opposite quiver.
pub fn dual(m: &Representation) -> Representation {
    let f = &m.field;
    let op = m.quiver.opposite();
    let maps = m.maps.iter().map(|a| a.transpose()).collect();
    Representation {
        quiver: op,
        field: *f,
        dims: m.dims.clone(),
        maps,
    }
}

/// A path in the quiver: the slot sequence of arrows traversed, source first.
type Path = Vec<usize>;

/// A finite direct sum of indecomposable projectives, with its path basis.
struct ProjSum<'a> {
    quiver: &'a Quiver,
    /// Generating vertex of each summand.
    gens: Vec<usize>,
    /// Per vertex (0-indexed): ordered basis of (summand, path from generator).
    basis: Vec<Vec<(usize, Path)>>,
    /// Lookup from (summand, path) to position, per vertex.
    index: Vec<BTreeMap<(usize, Path), usize>>,
}

impl<'a> ProjSum<'a> {
    fn new(quiver: &'a Quiver, gens: Vec<usize>) -> ProjSum<'a> {
        let nv = quiver.n_vertices;
        let mut basis: Vec<Vec<(usize, Path)>> = vec![Vec::new(); nv];
        for (i, &g) in gens.iter().enumerate() {
            for (path, end) in paths_from(quiver, g) {
                basis[end - 1].push((i, path));
            }
        }
        let index = basis
            .iter()
            .map(|b| {
                b.iter()
                    .enumerate()
                    .map(|(pos, key)| (key.clone(), pos))
                    .collect()
            })
            .collect();
        ProjSum {
            quiver,
            gens,
            basis,
            index,
        }
    }

    fn dim_at(&self, vertex: usize) -> usize {
        self.basis[vertex - 1].len()
    }

    /// The 0/1 matrix of arrow slot `a` (0-indexed), appending the arrow.
    fn arrow_map(&self, field: &Field, a: usize) -> Mat {
        let (s, t) = self.quiver.arrows[a];
        let mut m = Mat::zero(field, self.dim_at(t), self.dim_at(s));
        for (col, (i, path)) in self.basis[s - 1].iter().enumerate() {
            let mut longer = path.clone();
            longer.push(a);
            let row = self.index[t - 1][&(*i, longer)];
            m[(row, col)] = field.one();
        }
        m
    }

}

/// All paths out of `start`, the trivial path first, in DFS order.
/// The quivers here are acyclic so the enumeration is finite.
fn paths_from(quiver: &Quiver, start: usize) -> Vec<(Path, usize)> {
    let mut out = Vec::new();
    let mut stack = vec![(Vec::new(), start)];
    while let Some((path, at)) = stack.pop() {
        out.push((path.clone(), at));
        for (a, &(s, t)) in quiver.arrows.iter().enumerate().rev() {
            if s == at {
                let mut next = path.clone();
                next.push(a);
                stack.push((next, t));
            }
        }
    }
    out
}

/// Top generators of M: per vertex, standard basis vectors of M_x that
/// complement the radical (the sum of images of incoming arrows).
fn top_generators(m: &Representation) -> Vec<(usize, Vec<Scalar>)> {
    let f = &m.field;
    let mut gens = Vec::new();
    for x in 1..=m.quiver.n_vertices {
        let dx = m.dim_at(x);
        if dx == 0 {
            continue;
        }
        let incoming: Vec<&Mat> = m
            .quiver
            .arrows
            .iter()
            .enumerate()
            .filter(|(_, &(_, t))| t == x)
            .map(|(a, _)| &m.maps[a])
            .collect();
        let rad = if incoming.is_empty() {
            Mat::zero(f, dx, 0)
        } else {
            Mat::hcat(f, &incoming)
        };
        // Greedily extend the radical column space by standard basis vectors.
        let mut span = rad;
        let mut rank = span.rank(f);
        for i in 0..dx {
            let mut e = Mat::zero(f, dx, 1);
            e[(i, 0)] = f.one();
            let cand = Mat::hcat(f, &[&span, &e]);
            let r = cand.rank(f);
            if r > rank {
                rank = r;
                span = cand;
                gens.push((x, e.col(0)));
            }
        }
    }
    gens
}

/// Apply the composition of maps along a path to a vector at its source.
fn apply_path(m: &Representation, path: &Path, v: &[Scalar]) -> Vec<Scalar> {
    let f = &m.field;
    let mut acc = v.to_vec();
    for &a in path {
        acc = m.maps[a].mul_vec(f, &acc);
    }
    acc
}

/// The transpose Tr M, a representation of the opposite quiver.
fn transpose_rep(m: &Representation) -> Result<Representation> {
    let f = m.field;
    let op = m.quiver.opposite();
    if m.is_zero() {
        return Ok(Representation::zero(&op, f));
    }

    // Minimal projective presentation P1 --fmap--> P0 --cover--> M -> 0.
    let gens0 = top_generators(m);
    let p0 = ProjSum::new(&m.quiver, gens0.iter().map(|(x, _)| *x).collect());
    // cover matrices per vertex
    let cover: Vec<Mat> = (1..=m.quiver.n_vertices)
        .map(|y| {
            Mat::from_fn(m.dim_at(y), p0.dim_at(y), |r, c| {
                let (i, path) = &p0.basis[y - 1][c];
                let (_, v) = &gens0[*i];
                apply_path(m, path, v)[r].clone()
            })
        })
        .collect();

    // Kernel K of the cover, as per-vertex embeddings U_y into P0_y.
    let kernels: Vec<Mat> = cover.iter().map(|c| c.kernel(&f)).collect();
    let k_rep = {
        // Arrow maps of K: restrict P0's maps to the kernel bases.
        let dims = DimVector(kernels.iter().map(|k| k.cols).collect());
        let maps = (0..m.quiver.n_arrows())
            .map(|a| {
                let (s, t) = m.quiver.arrows[a];
                let big = p0.arrow_map(&f, a);
                let moved = big.mul(&f, &kernels[s - 1]);
                kernels[t - 1]
                    .solve_mat(&f, &moved)
                    .expect("kernel is a subrepresentation")
            })
            .collect();
        Representation {
            quiver: m.quiver.clone(),
            field: f,
            dims,
            maps,
        }
    };

    // P1 covers K; its generators, pushed into P0 coordinates, carry the
    // path coefficients of the presentation map.
    let gens1 = top_generators(&k_rep);
    // fcoef[i][j]: coefficients of generator j's image on P0 summand i,
    // recorded as (path from a_i to b_j, coefficient).
    let mut fcoef: Vec<Vec<Vec<(Path, Scalar)>>> =
        vec![vec![Vec::new(); gens1.len()]; p0.gens.len()];
    for (j, (bj, v)) in gens1.iter().enumerate() {
        let in_p0 = kernels[bj - 1].mul_vec(&f, v);
        for (pos, coeff) in in_p0.iter().enumerate() {
            if f.is_zero(coeff) {
                continue;
            }
            let (i, path) = &p0.basis[bj - 1][pos];
            fcoef[*i][j].push((path.clone(), coeff.clone()));
        }
    }

    // Opposite-side projective sums and the transposed map between them.
    let op_a = ProjSum::new(&op, p0.gens.clone());
    let op_b = ProjSum::new(&op, gens1.iter().map(|(x, _)| *x).collect());
    let transposed: Vec<Mat> = (1..=op.n_vertices)
        .map(|y| {
            let mut mat = Mat::zero(&f, op_b.dim_at(y), op_a.dim_at(y));
            for (col, (i, upath)) in op_a.basis[y - 1].iter().enumerate() {
                for (j, entries) in fcoef[*i].iter().enumerate() {
                    for (w, c) in entries {
                        // w traverses a_i -> b_j in the original quiver; its
                        // reversal traverses b_j -> a_i in the opposite.
                        let mut full: Path = w.iter().rev().copied().collect();
                        full.extend(upath.iter().copied());
                        let row = op_b.index[y - 1][&(j, full)];
                        mat[(row, col)] = f.add(&mat[(row, col)], c);
                    }
                }
            }
            mat
        })
        .collect();

    // Tr M = coker(transposed), with induced opposite-quiver maps.
    let projectors: Vec<Mat> = transposed.iter().map(|t| t.left_kernel(&f)).collect();
    let right_inverses: Vec<Mat> = projectors
        .iter()
        .map(|p| {
            if p.rows == 0 {
                Mat::zero(&f, p.cols, 0)
            } else {
                p.solve_mat(&f, &Mat::identity(&f, p.rows))
                    .expect("projector has full row rank")
            }
        })
        .collect();

    let dims = DimVector(projectors.iter().map(|p| p.rows).collect());
    let maps = (0..op.n_arrows())
        .map(|a| {
            let (s, t) = op.arrows[a];
            let g = op_b.arrow_map(&f, a);
            projectors[t - 1]
                .mul(&f, &g)
                .mul(&f, &right_inverses[s - 1])
        })
        .collect();
    let out = Representation {
        quiver: op,
        field: f,
        dims,
        maps,
    };
    debug_assert!(out.validate().is_ok());
    Ok(out)
}
