//! Canonical representations for geometric objects: string modules from
//! lifted intervals, band modules from companion-block Jordan matrices.

use super::{GeomObject, Model};
use crate::error::{Error, Result};
use crate::exactnum::{Field, Mat, Poly};
use crate::linrep::Representation;
use crate::quiver::{DimVector, Quiver, QuiverKind};

/// The canonical string module of an arc or disc interval.
///
/// For the cycle, basis vectors are indexed by the lifted interval of
/// vertices on the covering line and arrow maps are 0/1 partial identities
/// along the walk. Bridge coordinates that have left the heart yield the
/// zero representation.
pub fn string_module(quiver: &Quiver, field: Field, g: &GeomObject) -> Result<Representation> {
    match g {
        GeomObject::IntervalA { a, b } => {
            if quiver.kind != QuiverKind::LineA {
                return Err(Error::Incompatible(
                    "disc intervals live on line quivers".into(),
                ));
            }
            let n = quiver.n_vertices;
            if !(1 <= *a && a < b && *b <= n + 1) {
                return Err(Error::Domain(format!("invalid interval [{a},{b})")));
            }
            let dims = DimVector((1..=n).map(|x| usize::from(*a <= x && x < *b)).collect());
            let maps = quiver
                .arrows
                .iter()
                .map(|&(s, t)| {
                    let (ds, dt) = (dims.at(s), dims.at(t));
                    let mut m = Mat::zero(&field, dt, ds);
                    if ds == 1 && dt == 1 {
                        m[(0, 0)] = field.one();
                    }
                    m
                })
                .collect();
            Representation::new(quiver, field, dims, maps)
        }
        GeomObject::BandObj { .. } => band_module(quiver, field, g),
        GeomObject::TubeArc { a, b, .. } if a <= b => {
            Err(Error::Domain(format!("tube arc needs a > b, got a={a}, b={b}")))
        }
        GeomObject::BridgeArc { .. } | GeomObject::TubeArc { .. } => {
            let model = Model::new(quiver)?;
            let iv = model.interval_of(g)?;
            if iv.a >= iv.b {
                // Over-translated bridge coordinates: the zero object.
                return Ok(Representation::zero(quiver, field));
            }
            Ok(model.cover.interval_rep(field, model.cover.normalize_interval(iv)))
        }
    }
}

/// The canonical band module: dimension l * deg(minpoly) at every vertex,
/// identity on every arrow except one designated clockwise arrow, which
/// carries the l-fold companion-block Jordan matrix of the minimal
/// polynomial.
pub fn band_module(quiver: &Quiver, field: Field, g: &GeomObject) -> Result<Representation> {
    let GeomObject::BandObj { minpoly, l } = g else {
        return Err(Error::Domain("band_module expects a band".into()));
    };
    if quiver.kind != QuiverKind::CycleAtilde {
        return Err(Error::Incompatible("bands live on cycle quivers".into()));
    }
    if field.is_zero(&minpoly.coeff(&field, 0)) {
        return Err(Error::Domain("band parameter must be nonzero".into()));
    }
    if *l == 0 || minpoly.degree() == 0 || !minpoly.is_monic(&field) {
        return Err(Error::Domain(
            "band needs a monic nonconstant minimal polynomial and length >= 1".into(),
        ));
    }
    let deg = minpoly.degree();
    let size = l * deg;
    // The designated arrow: the last clockwise slot, so the clockwise
    // monodromy from the base vertex is exactly the Jordan matrix.
    let designated = (1..=quiver.n_arrows())
        .rev()
        .find(|&i| quiver.is_clockwise(i))
        .expect("validated cycles have a clockwise arrow");
    let jordan = companion_jordan(&field, minpoly, *l);
    let maps = (1..=quiver.n_arrows())
        .map(|i| {
            if i == designated {
                jordan.clone()
            } else {
                Mat::identity(&field, size)
            }
        })
        .collect();
    Representation::new(
        quiver,
        field,
        DimVector(vec![size; quiver.n_vertices]),
        maps,
    )
}

/// Block upper bidiagonal matrix with companion blocks of f on the diagonal
/// and identities on the superdiagonal: the generalized Jordan block of f^l.
fn companion_jordan(field: &Field, f: &Poly, l: usize) -> Mat {
    let d = f.degree();
    let comp = companion(field, f);
    let mut m = Mat::zero(field, l * d, l * d);
    for blk in 0..l {
        m.paste(&comp, blk * d, blk * d);
        if blk + 1 < l {
            m.paste(&Mat::identity(field, d), blk * d, (blk + 1) * d);
        }
    }
    m
}

/// Companion matrix of a monic polynomial.
fn companion(field: &Field, f: &Poly) -> Mat {
    let d = f.degree();
    debug_assert!(f.is_monic(field) && d >= 1);
    let mut m = Mat::zero(field, d, d);
    for i in 1..d {
        m[(i, i - 1)] = field.one();
    }
    for i in 0..d {
        m[(i, d - 1)] = field.neg(&f.coeff(field, i));
    }
    m
}

/// The nilpotent shift commuting with the band structure; its k-th power is
/// the canonical Phi^k of the band.
pub(crate) fn band_shift(field: &Field, deg: usize, l: usize, k: usize) -> Mat {
    let size = l * deg;
    let mut m = Mat::zero(field, size, size);
    for blk in k..l {
        m.paste(&Mat::identity(field, deg), (blk - k) * deg, blk * deg);
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::{Tag, TubeKind};

    fn kronecker() -> Quiver {
        Quiver::cycle(vec![(1, 2), (1, 2)])
    }

    #[test]
    fn split_bands_on_the_kronecker_quiver() {
        let q = kronecker();
        let f = Field::Rational;
        let b1 = band_module(
            &q,
            f,
            &GeomObject::BandObj {
                minpoly: Poly::from_i64(&f, &[-1, 1]),
                l: 1,
            },
        )
        .unwrap();
        assert_eq!(b1.dims, DimVector(vec![1, 1]));
        assert!(f.is_one(&b1.maps[0][(0, 0)]));
        assert!(f.is_one(&b1.maps[1][(0, 0)]));

        let bneg = band_module(
            &q,
            f,
            &GeomObject::BandObj {
                minpoly: Poly::from_i64(&f, &[1, 1]),
                l: 1,
            },
        )
        .unwrap();
        let vals: Vec<String> = bneg.maps.iter().map(|m| m[(0, 0)].to_string()).collect();
        assert!(vals.contains(&"-1".to_string()) && vals.contains(&"1".to_string()));
    }

    #[test]
    fn jordan_block_of_length_two() {
        let q = kronecker();
        let f = Field::Rational;
        let b = band_module(
            &q,
            f,
            &GeomObject::BandObj {
                minpoly: Poly::from_i64(&f, &[-1, 1]),
                l: 2,
            },
        )
        .unwrap();
        let designated = &b.maps[0]; // slot 1 is the last clockwise arrow? see below
        // One of the two maps is [[1,1],[0,1]], the other the identity.
        let jord = Mat::from_rows_i64(&f, &[vec![1, 1], vec![0, 1]]);
        let id = Mat::identity(&f, 2);
        assert!(
            (b.maps[0] == jord && b.maps[1] == id) || (b.maps[1] == jord && b.maps[0] == id),
            "unexpected maps {designated}"
        );
    }

    #[test]
    fn projective_string_at_base_vertex() {
        // A~_{2,2} zigzag: P(1) is the simple at the sink 1.
        let q = Quiver::cycle(vec![(2, 1), (2, 3), (4, 3), (4, 1)]);
        let f = Field::fp(3);
        let g = GeomObject::BridgeArc {
            tag: Tag::Preprojective,
            u: 0,
            v: 0,
        };
        let rep = string_module(&q, f, &g).unwrap();
        assert_eq!(rep.dims, q.projective_dims(1));
    }

    #[test]
    fn tube_mouth_is_a_short_string() {
        let q = Quiver::cycle(vec![(2, 1), (2, 3), (4, 3), (4, 1)]);
        let f = Field::fp(3);
        for b in 0..2 {
            let g = GeomObject::TubeArc {
                tube: TubeKind::RankP,
                a: b + 1,
                b,
            };
            let rep = string_module(&q, f, &g).unwrap();
            assert_eq!(rep.total_dim(), 2);
            assert_eq!(q.defect(&rep.dims).unwrap(), 0);
        }
    }
}
