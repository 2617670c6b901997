//! The canonical morphisms Phi^k: M -> tau^{-k} M.
//!
//! For strings Phi^k is the partial identity on the overlap of the defining
//! lifted intervals; for bands it is the k-th power of the canonical
//! nilpotent shift in the standard band basis. Both are particular
//! representatives of the through-mesh composite, which is only defined up
//! to a nonzero scalar.

use super::canonical::{band_module, band_shift, string_module};
use super::{tau_inverse_coord, GeomObject, LiftedInterval, Model};
use crate::error::{Error, Result};
use crate::exactnum::{Field, Mat};
use crate::linrep::{Morphism, Representation};
use crate::quiver::Quiver;

/// A Phi morphism together with its canonical endpoints.
pub struct Phi {
    pub source: Representation,
    pub target: Representation,
    pub map: Morphism,
}

impl Phi {
    pub fn rank(&self, field: &Field) -> usize {
        self.map.blocks.iter().map(|b| b.rank(field)).sum()
    }
}

pub fn phi_map(quiver: &Quiver, field: Field, g: &GeomObject, k: usize) -> Result<Phi> {
    match g {
        GeomObject::BandObj { minpoly, l } => {
            let rep = band_module(quiver, field, g)?;
            let shift = band_shift(&field, minpoly.degree(), *l, k.min(*l));
            let blocks = (1..=quiver.n_vertices)
                .map(|_| {
                    if k >= *l {
                        Mat::zero(&field, rep.dims.at(1), rep.dims.at(1))
                    } else {
                        shift.clone()
                    }
                })
                .collect();
            let map = Morphism { blocks };
            debug_assert!(map.commutes(&rep, &rep));
            Ok(Phi {
                source: rep.clone(),
                target: rep,
                map,
            })
        }
        GeomObject::IntervalA { a, b } => {
            let source = string_module(quiver, field, g)?;
            if k == 0 {
                let map = Morphism::identity(&source);
                return Ok(Phi {
                    source: source.clone(),
                    target: source,
                    map,
                });
            }
            if *a <= k {
                return Err(Error::LeavesHeart);
            }
            let (ta, tb) = (a - k, b - k);
            let target = string_module(quiver, field, &GeomObject::IntervalA { a: ta, b: tb })?;
            let blocks = (1..=quiver.n_vertices)
                .map(|x| {
                    let (rows, cols) = (target.dim_at(x), source.dim_at(x));
                    let mut m = Mat::zero(&field, rows, cols);
                    // overlap [a, b-k)
                    if rows == 1 && cols == 1 && *a <= x && x < tb {
                        m[(0, 0)] = field.one();
                    }
                    m
                })
                .collect();
            let map = Morphism { blocks };
            debug_assert!(map.commutes(&source, &target));
            Ok(Phi {
                source,
                target,
                map,
            })
        }
        GeomObject::BridgeArc { .. } | GeomObject::TubeArc { .. } => {
            let model = Model::new(quiver)?;
            let src_iv = model.cover.normalize_interval(model.interval_of(g)?);
            let source = model.cover.interval_rep(field, src_iv);
            // Both ends advance k marked points in the positive direction.
            let moved = LiftedInterval {
                a: model.cover.advance_edge(src_iv.left_edge(), k as i64) + 1,
                b: model.cover.advance_edge(src_iv.right_edge(), k as i64) + 1,
            };
            if moved.a >= moved.b {
                // The target object died (over-translated preinjective or a
                // tube object of length <= k): Phi^k is the zero map to 0.
                let target = Representation::zero(quiver, field);
                let map = Morphism::zero(&source, &target);
                return Ok(Phi {
                    source,
                    target,
                    map,
                });
            }
            let tgt_iv = model.cover.normalize_interval(moved);
            let deck_shift = moved.a - tgt_iv.a; // multiple of n
            let target = model.cover.interval_rep(field, tgt_iv);
            // Consistency with the coordinate-level translate.
            debug_assert_eq!(
                {
                    let mut cur = g.clone();
                    for _ in 0..k {
                        cur = tau_inverse_coord(&model, &cur).unwrap();
                    }
                    cur
                },
                model.object_of_interval(tgt_iv)
            );
            let pos = |iv: LiftedInterval, x: usize, j: i64| -> usize {
                (iv.a..j)
                    .filter(|&jj| model.cover.vertex_of(jj) == x)
                    .count()
            };
            let blocks = (1..=quiver.n_vertices)
                .map(|x| {
                    let mut m = Mat::zero(&field, target.dim_at(x), source.dim_at(x));
                    for j in src_iv.a..src_iv.b {
                        if model.cover.vertex_of(j) != x {
                            continue;
                        }
                        if moved.a <= j && j < moved.b {
                            let col = pos(src_iv, x, j);
                            let row = pos(tgt_iv, x, j - deck_shift);
                            m[(row, col)] = field.one();
                        }
                    }
                    m
                })
                .collect();
            let map = Morphism { blocks };
            debug_assert!(map.commutes(&source, &target));
            Ok(Phi {
                source,
                target,
                map,
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::Poly;
    use crate::geom::{Tag, TubeKind};

    fn zigzag22() -> Quiver {
        Quiver::cycle(vec![(2, 1), (2, 3), (4, 3), (4, 1)])
    }

    #[test]
    fn phi_zero_is_identity() {
        let q = zigzag22();
        let f = Field::fp(3);
        let g = GeomObject::TubeArc {
            tube: TubeKind::RankP,
            a: 2,
            b: 0,
        };
        let phi = phi_map(&q, f, &g, 0).unwrap();
        assert_eq!(phi.map, Morphism::identity(&phi.source));
    }

    #[test]
    fn phi_vanishes_at_twice_the_length() {
        let q = zigzag22();
        let f = Field::fp(2);
        let g = GeomObject::TubeArc {
            tube: TubeKind::RankP,
            a: 2,
            b: 0,
        };
        // length 2: Phi^2 must be zero, Phi^1 not.
        let phi1 = phi_map(&q, f, &g, 1).unwrap();
        assert!(phi1.rank(&f) > 0);
        let phi2 = phi_map(&q, f, &g, 2).unwrap();
        assert_eq!(phi2.rank(&f), 0);
    }

    #[test]
    fn interval_phi_is_the_overlap() {
        let q = Quiver::line_equioriented(4);
        let f = Field::fp(5);
        let g = GeomObject::IntervalA { a: 2, b: 4 };
        let phi = phi_map(&q, f, &g, 1).unwrap();
        // overlap [2, 3): rank 1
        assert_eq!(phi.rank(&f), 1);
        assert!(phi.map.commutes(&phi.source, &phi.target));
    }

    #[test]
    fn band_phi_rank_counts_companion_blocks() {
        let q = zigzag22();
        let f = Field::fp(2);
        let g = GeomObject::BandObj {
            minpoly: Poly::from_i64(&f, &[1, 1, 1]),
            l: 3,
        };
        for k in 0..=4usize {
            let phi = phi_map(&q, f, &g, k).unwrap();
            let expect = 4 * 2 * (3usize.saturating_sub(k));
            assert_eq!(phi.rank(&f), expect);
        }
    }

    #[test]
    fn preprojective_phi_is_injective() {
        let q = zigzag22();
        let f = Field::fp(3);
        let g = GeomObject::BridgeArc {
            tag: Tag::Preprojective,
            u: 0,
            v: 0,
        };
        let phi = phi_map(&q, f, &g, 2).unwrap();
        assert_eq!(phi.rank(&f), phi.source.total_dim());
    }
}
