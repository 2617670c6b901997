//! Exact simplicial homology over the active field and assembly of
//! level-set zigzag diagrams into cycle-quiver representations.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactnum::{Field, Mat};
use crate::linrep::Representation;
use crate::quiver::{DimVector, Quiver};

/// A finite simplicial complex: sorted vertex tuples closed under faces.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SimplicialComplex {
    simplices: BTreeSet<Vec<usize>>,
}

impl SimplicialComplex {
    /// Build from maximal simplices, closing under faces.
    pub fn from_maximal(maximal: &[Vec<usize>]) -> Result<SimplicialComplex> {
        let mut simplices = BTreeSet::new();
        for s in maximal {
            let mut sorted = s.clone();
            sorted.sort_unstable();
            sorted.dedup();
            if sorted.is_empty() {
                return Err(Error::Domain("empty simplex".into()));
            }
            // all nonempty subsets
            let n = sorted.len();
            for mask in 1u32..(1 << n) {
                let face: Vec<usize> = (0..n)
                    .filter(|i| mask & (1 << i) != 0)
                    .map(|i| sorted[i])
                    .collect();
                simplices.insert(face);
            }
        }
        Ok(SimplicialComplex { simplices })
    }

    pub fn max_dim(&self) -> usize {
        self.simplices.iter().map(|s| s.len() - 1).max().unwrap_or(0)
    }

    /// Sorted list of k-simplices.
    pub fn simplices_of_dim(&self, k: usize) -> Vec<&Vec<usize>> {
        self.simplices.iter().filter(|s| s.len() == k + 1).collect()
    }

    pub fn simplex_count(&self, k: usize) -> usize {
        self.simplices_of_dim(k).len()
    }

    pub fn contains(&self, s: &[usize]) -> bool {
        self.simplices.contains(s)
    }

    /// Boundary matrix from k-chains to (k-1)-chains, signed.
    pub fn boundary(&self, field: &Field, k: usize) -> Mat {
        if k == 0 {
            return Mat::zero(field, 0, self.simplex_count(0));
        }
        let rows = self.simplices_of_dim(k - 1);
        let cols = self.simplices_of_dim(k);
        let row_idx: BTreeMap<&Vec<usize>, usize> =
            rows.iter().enumerate().map(|(i, s)| (*s, i)).collect();
        let mut m = Mat::zero(field, rows.len(), cols.len());
        for (c, s) in cols.iter().enumerate() {
            for omit in 0..s.len() {
                let face: Vec<usize> = s
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| *i != omit)
                    .map(|(_, v)| *v)
                    .collect();
                let r = row_idx[&face];
                let sign = if omit % 2 == 0 { 1 } else { -1 };
                m[(r, c)] = field.from_i64(sign);
            }
        }
        m
    }
}

/// A basis of H_k: the dimension and a matrix whose columns are cycle
/// representatives in the sorted k-simplex basis.
pub fn homology_basis(complex: &SimplicialComplex, k: usize, field: &Field) -> (usize, Mat) {
    let d_k = complex.boundary(field, k);
    let d_k1 = complex.boundary(field, k + 1);
    let cycles = if k == 0 {
        Mat::identity(field, complex.simplex_count(0))
    } else {
        d_k.kernel(field)
    };
    // Representatives: kernel columns extending the boundary column space,
    // chosen greedily in elimination order for reproducibility.
    let mut span = d_k1.clone();
    let mut rank = span.rank(field);
    let mut reps: Vec<usize> = Vec::new();
    for c in 0..cycles.cols {
        let col = cycles.select_cols(&[c]);
        let cand = Mat::hcat(field, &[&span, &col]);
        let r = cand.rank(field);
        if r > rank {
            span = cand;
            rank = r;
            reps.push(c);
        }
    }
    (reps.len(), cycles.select_cols(&reps))
}

/// A simplicial inclusion given by an injective vertex map.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexMap(pub BTreeMap<usize, usize>);

impl VertexMap {
    pub fn identity(complex: &SimplicialComplex) -> VertexMap {
        VertexMap(
            complex
                .simplices_of_dim(0)
                .iter()
                .map(|s| (s[0], s[0]))
                .collect(),
        )
    }

    fn validate(&self, source: &SimplicialComplex, target: &SimplicialComplex) -> Result<()> {
        let mut seen = BTreeSet::new();
        for v in self.0.values() {
            if !seen.insert(*v) {
                return Err(Error::Domain("inclusion vertex map is not injective".into()));
            }
        }
        for s in &source.simplices {
            let image = self.apply(s)?;
            if !target.contains(&image.1) {
                return Err(Error::Domain(format!(
                    "image of simplex {s:?} is not a simplex of the target"
                )));
            }
        }
        Ok(())
    }

    /// Image simplex, sorted, with the sign of the sorting permutation.
    fn apply(&self, s: &[usize]) -> Result<(i64, Vec<usize>)> {
        let mut image: Vec<usize> = Vec::with_capacity(s.len());
        for v in s {
            image.push(*self.0.get(v).ok_or_else(|| {
                Error::Domain(format!("vertex {v} has no image under the inclusion"))
            })?);
        }
        // parity of the permutation sorting the image
        let mut sign = 1i64;
        let mut arr = image.clone();
        for i in 0..arr.len() {
            for j in (i + 1)..arr.len() {
                if arr[i] > arr[j] {
                    arr.swap(i, j);
                    sign = -sign;
                }
            }
        }
        Ok((sign, arr))
    }
}

/// The matrix of H_k(source) -> H_k(target) induced by an inclusion,
/// in the bases chosen by [`homology_basis`].
pub fn induced_map(
    source: &SimplicialComplex,
    target: &SimplicialComplex,
    map: &VertexMap,
    k: usize,
    field: &Field,
) -> Result<Mat> {
    map.validate(source, target)?;
    let (dim_s, reps_s) = homology_basis(source, k, field);
    let (dim_t, reps_t) = homology_basis(target, k, field);
    let src_simplices = source.simplices_of_dim(k);
    let tgt_simplices = target.simplices_of_dim(k);
    let tgt_idx: BTreeMap<&Vec<usize>, usize> = tgt_simplices
        .iter()
        .enumerate()
        .map(|(i, s)| (*s, i))
        .collect();
    let boundaries = target.boundary(field, k + 1);
    let mut out = Mat::zero(field, dim_t, dim_s);
    for c in 0..dim_s {
        // push the representative cycle forward
        let mut pushed = vec![field.zero(); tgt_simplices.len()];
        for (r, s) in src_simplices.iter().enumerate() {
            let coeff = reps_s[(r, c)].clone();
            if field.is_zero(&coeff) {
                continue;
            }
            let (sign, image) = map.apply(s)?;
            let idx = tgt_idx[&image];
            let signed = field.mul(&coeff, &field.from_i64(sign));
            pushed[idx] = field.add(&pushed[idx], &signed);
        }
        // express in (boundaries | representatives)
        let sys = Mat::hcat(field, &[&boundaries, &reps_t]);
        let sol = sys.solve(field, &pushed).ok_or_else(|| {
            Error::Domain("pushed cycle failed to express in the target homology".into())
        })?;
        for r in 0..dim_t {
            out[(r, c)] = sol[boundaries.cols + r].clone();
        }
    }
    Ok(out)
}

/// A level-set zigzag diagram: r singular slabs X_i, r regular fibers R_i,
/// and inclusions a_i: R_i -> X_i, b_{i-1}: R_i -> X_{i-1 mod r}.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ZigzagDiagram {
    pub singular: Vec<SimplicialComplex>,
    pub regular: Vec<SimplicialComplex>,
    /// `a[i]: regular[i] -> singular[i]`
    pub a_maps: Vec<VertexMap>,
    /// `b[i]: regular[i] -> singular[(i + r - 1) % r]`
    pub b_maps: Vec<VertexMap>,
}

impl ZigzagDiagram {
    pub fn r(&self) -> usize {
        self.singular.len()
    }

    pub fn validate(&self) -> Result<()> {
        let r = self.r();
        if r == 0
            || self.regular.len() != r
            || self.a_maps.len() != r
            || self.b_maps.len() != r
        {
            return Err(Error::Domain(
                "diagram needs r >= 1 with matching singular/regular/map counts".into(),
            ));
        }
        for i in 0..r {
            self.a_maps[i].validate(&self.regular[i], &self.singular[i])?;
            self.b_maps[i].validate(&self.regular[i], &self.singular[(i + r - 1) % r])?;
        }
        Ok(())
    }

    /// The zigzag cycle quiver on 2r vertices this diagram realizes:
    /// odd positions carry the X_i (sinks), even positions the R's.
    pub fn quiver(&self) -> Quiver {
        let r = self.r();
        let n = 2 * r;
        let mut arrows = Vec::with_capacity(n);
        for i in 1..=r {
            // arc 2i-1 joins (X_i, R) with the arrow pointing into X_i
            arrows.push((2 * i, 2 * i - 1));
            // arc 2i joins (R, X_{i+1}) with the arrow pointing into X_{i+1}
            let next = if i == r { 1 } else { 2 * i + 1 };
            arrows.push((2 * i, next));
        }
        Quiver::cycle(arrows)
    }
}

/// The level-set representation: vertex spaces H_k of the slabs and fibers,
/// arrow maps induced by the inclusions.
pub fn levelset_representation(
    diagram: &ZigzagDiagram,
    k: usize,
    field: Field,
) -> Result<Representation> {
    diagram.validate()?;
    let r = diagram.r();
    let quiver = diagram.quiver();
    // Vertex 2i-1 is X_i; vertex 2i is R_{i+1 mod r} (the fiber mapping
    // into X_i and X_{i+1}).
    let fiber_at = |pos: usize| -> usize {
        // pos = 2i; its fiber is regular[(i % r)] in 0-based indexing
        let i = pos / 2;
        i % r
    };
    let mut dims = vec![0usize; 2 * r];
    for i in 1..=r {
        dims[2 * i - 2] = homology_basis(&diagram.singular[i - 1], k, &field).0;
        dims[2 * i - 1] = homology_basis(&diagram.regular[fiber_at(2 * i)], k, &field).0;
    }
    let mut maps = Vec::with_capacity(2 * r);
    for i in 1..=r {
        let fiber = fiber_at(2 * i);
        // arc 2i-1: b-map of regular[fiber] into X_i = singular[i-1]
        maps.push(induced_map(
            &diagram.regular[fiber],
            &diagram.singular[i - 1],
            &diagram.b_maps[fiber],
            k,
            &field,
        )?);
        // arc 2i: a-map of regular[fiber] into X_{i+1}
        let next_singular = i % r;
        maps.push(induced_map(
            &diagram.regular[fiber],
            &diagram.singular[next_singular],
            &diagram.a_maps[fiber],
            k,
            &field,
        )?);
    }
    Representation::new(&quiver, field, DimVector(dims), maps)
}

/// Euler characteristic from homology, for consistency checks.
pub fn euler_characteristic_homology(complex: &SimplicialComplex, field: &Field) -> i64 {
    let mut chi = 0i64;
    for k in 0..=complex.max_dim() {
        let (dim, _) = homology_basis(complex, k, field);
        chi += if k % 2 == 0 { dim as i64 } else { -(dim as i64) };
    }
    chi
}

pub fn euler_characteristic_counts(complex: &SimplicialComplex) -> i64 {
    let mut chi = 0i64;
    for k in 0..=complex.max_dim() {
        let c = complex.simplex_count(k) as i64;
        chi += if k % 2 == 0 { c } else { -c };
    }
    chi
}

/// Helper: one circle as a cycle graph on `n >= 3` vertices, labels offset.
pub fn circle_complex(n: usize, offset: usize) -> SimplicialComplex {
    let maximal: Vec<Vec<usize>> = (0..n)
        .map(|i| vec![offset + i, offset + (i + 1) % n])
        .collect();
    SimplicialComplex::from_maximal(&maximal).unwrap()
}
