//! Hom-space bases, direct sums and isomorphism testing.

use rand::Rng;

use super::{Morphism, Representation};
use crate::error::{Error, Result};
use crate::exactnum::{Field, Mat};
use crate::quiver::DimVector;

/// A basis of Hom(M, N), solved from the commutation linear system.
///
/// Unknowns are the entries of the per-vertex blocks phi_x; for every arrow
/// a: x -> y the constraint is N_a phi_x - phi_y M_a = 0.
pub fn hom_space(m: &Representation, n: &Representation) -> Result<Vec<Morphism>> {
    m.check_compatible(n)?;
    let f = &m.field;
    let nv = m.quiver.n_vertices;

    // Column layout: blocks phi_1, ..., phi_nv flattened row-major.
    let block_size: Vec<usize> = (1..=nv).map(|x| n.dim_at(x) * m.dim_at(x)).collect();
    let block_off: Vec<usize> = block_size
        .iter()
        .scan(0, |acc, s| {
            let off = *acc;
            *acc += s;
            Some(off)
        })
        .collect();
    let total_cols: usize = block_size.iter().sum();

    let total_rows: usize = m
        .quiver
        .arrows
        .iter()
        .map(|&(s, t)| n.dim_at(t) * m.dim_at(s))
        .sum();

    let mut sys = Mat::zero(f, total_rows, total_cols);
    let mut row_base = 0;
    for (a, &(s, t)) in m.quiver.arrows.iter().enumerate() {
        let (ms, mt) = (m.dim_at(s), m.dim_at(t));
        let (ns, nt) = (n.dim_at(s), n.dim_at(t));
        // Constraint rows indexed by (i, j) in nt x ms:
        //   sum_k N_a[i,k] phi_s[k,j] - sum_k phi_t[i,k] M_a[k,j] = 0
        for i in 0..nt {
            for j in 0..ms {
                let row = row_base + i * ms + j;
                for k in 0..ns {
                    let col = block_off[s - 1] + k * ms + j;
                    let v = n.maps[a][(i, k)].clone();
                    sys[(row, col)] = f.add(&sys[(row, col)], &v);
                }
                for k in 0..mt {
                    let col = block_off[t - 1] + i * mt + k;
                    let v = f.neg(&m.maps[a][(k, j)]);
                    sys[(row, col)] = f.add(&sys[(row, col)], &v);
                }
            }
        }
        row_base += nt * ms;
    }

    let kernel = sys.kernel(f);
    let mut basis = Vec::with_capacity(kernel.cols);
    for b in 0..kernel.cols {
        let mut blocks = Vec::with_capacity(nv);
        for x in 1..=nv {
            let (rows, cols) = (n.dim_at(x), m.dim_at(x));
            blocks.push(Mat::from_fn(rows, cols, |i, j| {
                kernel[(block_off[x - 1] + i * cols + j, b)].clone()
            }));
        }
        basis.push(Morphism { blocks });
    }
    Ok(basis)
}

/// Block-diagonal direct sum; the empty sum is the zero representation.
pub fn direct_sum(parts: &[Representation]) -> Result<Representation> {
    let Some(first) = parts.first() else {
        return Err(Error::Incompatible(
            "direct_sum of no parts needs a quiver; use Representation::zero".into(),
        ));
    };
    for p in parts {
        first.check_compatible(p)?;
    }
    let f = &first.field;
    let nv = first.quiver.n_vertices;
    let dims = DimVector(
        (1..=nv)
            .map(|x| parts.iter().map(|p| p.dim_at(x)).sum())
            .collect(),
    );
    let maps = first
        .quiver
        .arrows
        .iter()
        .enumerate()
        .map(|(a, _)| {
            let blocks: Vec<&Mat> = parts.iter().map(|p| &p.maps[a]).collect();
            Mat::block_diag(f, &blocks)
        })
        .collect();
    Ok(Representation {
        quiver: first.quiver.clone(),
        field: first.field,
        dims,
        maps,
    })
}

/// A random field-coefficient combination of a morphism basis.
pub fn random_combination(
    field: &Field,
    basis: &[Morphism],
    rng: &mut impl Rng,
) -> Option<Morphism> {
    let first = basis.first()?;
    let mut acc = Morphism {
        blocks: first
            .blocks
            .iter()
            .map(|b| Mat::zero(field, b.rows, b.cols))
            .collect(),
    };
    for m in basis {
        let c = field.random(rng);
        if field.is_zero(&c) {
            continue;
        }
        acc = acc.add(field, &m.scale(field, &c));
    }
    Some(acc)
}

/// An explicit isomorphism M -> N if one exists.
///
/// Strategy: equal dimension vectors are necessary; then random elements of
/// Hom(M, N) are sampled for invertibility, with a deterministic sweep over
/// all coefficient vectors as a fallback over small prime fields.
pub fn is_isomorphic(
    m: &Representation,
    n: &Representation,
    rng: &mut impl Rng,
) -> Result<Option<Morphism>> {
    m.check_compatible(n)?;
    if m.dims != n.dims {
        return Ok(None);
    }
    if m.is_zero() {
        return Ok(Some(Morphism::zero(m, n)));
    }
    let f = &m.field;
    let basis = hom_space(m, n)?;
    if basis.is_empty() {
        return Ok(None);
    }
    let attempts = 24 + 4 * basis.len();
    for _ in 0..attempts {
        if let Some(cand) = random_combination(f, &basis, rng) {
            if cand.is_invertible(f) {
                debug_assert!(cand.commutes(m, n));
                return Ok(Some(cand));
            }
        }
    }
    // Deterministic sweep for small search spaces.
    if let Some(elems) = f.elements() {
        let k = basis.len();
        if (elems.len() as f64).powi(k as i32) <= 600_000.0 {
            let mut idx = vec![0usize; k];
            loop {
                let mut acc = Morphism::zero(m, n);
                for (i, &e) in idx.iter().enumerate() {
                    if e > 0 {
                        acc = acc.add(f, &basis[i].scale(f, &elems[e]));
                    }
                }
                if !acc.is_zero(f) && acc.is_invertible(f) {
                    return Ok(Some(acc));
                }
                // odometer
                let mut pos = 0;
                loop {
                    if pos == k {
                        return Ok(None);
                    }
                    idx[pos] += 1;
                    if idx[pos] < elems.len() {
                        break;
                    }
                    idx[pos] = 0;
                    pos += 1;
                }
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::Quiver;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn kronecker() -> Quiver {
        Quiver::cycle(vec![(1, 2), (1, 2)])
    }

    fn rep(q: &Quiver, f: Field, dims: Vec<usize>, maps: Vec<Vec<Vec<i64>>>) -> Representation {
        let dv = DimVector(dims);
        let mats = maps
            .iter()
            .enumerate()
            .map(|(i, rows)| {
                let (s, t) = q.arrows[i];
                if rows.is_empty() {
                    Mat::zero(&f, dv.at(t), dv.at(s))
                } else {
                    Mat::from_rows_i64(&f, rows)
                }
            })
            .collect();
        Representation::new(q, f, dv, mats).unwrap()
    }

    #[test]
    fn end_of_simple_is_one_dimensional() {
        let q = Quiver::cycle(vec![(1, 2), (3, 2), (3, 4), (1, 4)]);
        let f = Field::fp(3);
        let s1 = rep(
            &q,
            f,
            vec![1, 0, 0, 0],
            vec![vec![], vec![], vec![], vec![]],
        );
        let basis = hom_space(&s1, &s1).unwrap();
        assert_eq!(basis.len(), 1);
    }

    #[test]
    fn distinct_tubes_are_orthogonal() {
        let q = kronecker();
        let f = Field::Rational;
        let band1 = rep(&q, f, vec![1, 1], vec![vec![vec![1]], vec![vec![1]]]);
        let band_neg = rep(&q, f, vec![1, 1], vec![vec![vec![-1]], vec![vec![1]]]);
        assert!(hom_space(&band1, &band_neg).unwrap().is_empty());
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        assert!(is_isomorphic(&band1, &band_neg, &mut rng).unwrap().is_none());
    }

    #[test]
    fn direct_sum_unit_laws() {
        let q = kronecker();
        let f = Field::fp(2);
        let band = rep(&q, f, vec![1, 1], vec![vec![vec![1]], vec![vec![1]]]);
        let zero = Representation::zero(&q, f);
        let sum = direct_sum(&[band.clone(), zero]).unwrap();
        assert_eq!(sum.dims, band.dims);
        assert_eq!(sum.maps, band.maps);
        let two = direct_sum(&[band.clone(), band.clone()]).unwrap();
        assert_eq!(two.dims, DimVector(vec![2, 2]));
        assert_eq!(two.maps[0], Mat::identity(&f, 2));
    }

    #[test]
    fn identity_is_an_isomorphism() {
        let q = kronecker();
        let f = Field::fp(3);
        let band = rep(&q, f, vec![1, 1], vec![vec![vec![2]], vec![vec![1]]]);
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let iso = is_isomorphic(&band, &band, &mut rng).unwrap().unwrap();
        assert!(iso.is_invertible(&f));
        assert!(iso.commutes(&band, &band));
    }
}
