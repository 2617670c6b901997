//! Seeded generators for random representations and geometric objects,
//! shared by the property suites, the acceptance tests and the benchmarks.

use rand::Rng;

use crate::exactnum::{Field, Mat, Poly};
use crate::geom::{band_module, string_module, GeomObject, Tag, TubeKind};
use crate::linrep::{direct_sum, Representation};
use crate::quiver::{DimVector, Quiver, QuiverKind};

/// A random representation with per-vertex dimensions bounded by
/// `max_vertex_dim` and total dimension bounded by `total_cap`.
pub fn random_representation(
    quiver: &Quiver,
    field: Field,
    max_vertex_dim: usize,
    total_cap: usize,
    rng: &mut impl Rng,
) -> Representation {
    let n = quiver.n_vertices;
    let mut dims = vec![0usize; n];
    let mut total = 0usize;
    for d in dims.iter_mut() {
        let room = total_cap.saturating_sub(total).min(max_vertex_dim);
        *d = rng.gen_range(0..=room);
        total += *d;
    }
    let dims = DimVector(dims);
    let maps = quiver
        .arrows
        .iter()
        .map(|&(s, t)| {
            Mat::from_fn(dims.at(t), dims.at(s), |_, _| field.random(rng))
        })
        .collect();
    Representation {
        quiver: quiver.clone(),
        field,
        dims,
        maps,
    }
}

/// A random valid geometric object with bounded coordinates and lengths.
pub fn random_object(
    quiver: &Quiver,
    field: &Field,
    coord_window: i64,
    max_len: usize,
    rng: &mut impl Rng,
) -> GeomObject {
    debug_assert_eq!(quiver.kind, QuiverKind::CycleAtilde);
    match rng.gen_range(0..4) {
        0 => GeomObject::BridgeArc {
            tag: Tag::Preprojective,
            u: rng.gen_range(0..quiver.p() as i64),
            v: rng.gen_range(-coord_window..=coord_window),
        },
        1 => GeomObject::BridgeArc {
            tag: Tag::Preinjective,
            u: rng.gen_range(0..quiver.p() as i64),
            v: rng.gen_range(-coord_window..=coord_window),
        },
        2 => {
            let (tube, r) = if rng.gen_bool(0.5) {
                (TubeKind::RankP, quiver.p() as i64)
            } else {
                (TubeKind::RankQ, quiver.q() as i64)
            };
            let b = rng.gen_range(0..r);
            let len = rng.gen_range(1..=max_len as i64);
            GeomObject::TubeArc { tube, a: b + len, b }
        }
        _ => {
            // split band with a random nonzero eigenvalue
            let lambda = loop {
                let c = field.random(rng);
                if !field.is_zero(&c) {
                    break c;
                }
            };
            GeomObject::BandObj {
                minpoly: Poly::new(field, vec![field.neg(&lambda), field.one()]),
                l: rng.gen_range(1..=max_len),
            }
        }
    }
}

/// The canonical representation of a random object, conjugated by a random
/// base change so its structure is not syntactically visible.
pub fn random_indecomposable(
    quiver: &Quiver,
    field: Field,
    coord_window: i64,
    max_len: usize,
    rng: &mut impl Rng,
) -> (GeomObject, Representation) {
    loop {
        let g = random_object(quiver, &field, coord_window, max_len, rng);
        let rep = match &g {
            GeomObject::BandObj { .. } => band_module(quiver, field, &g).unwrap(),
            _ => string_module(quiver, field, &g).unwrap(),
        };
        if rep.is_zero() {
            continue;
        }
        return (g.clone(), scramble(&rep, rng));
    }
}

/// Conjugate by a random invertible base change at every vertex.
pub fn scramble(rep: &Representation, rng: &mut impl Rng) -> Representation {
    let f = &rep.field;
    let g: Vec<Mat> = (1..=rep.quiver.n_vertices)
        .map(|x| loop {
            let cand = Mat::from_fn(rep.dim_at(x), rep.dim_at(x), |_, _| f.random(rng));
            if cand.is_invertible(f) {
                break cand;
            }
        })
        .collect();
    rep.conjugate(&g)
}

/// A random module assembled from objects, scrambled.
pub fn random_module_from_objects(
    quiver: &Quiver,
    field: Field,
    objects: &[GeomObject],
    rng: &mut impl Rng,
) -> Representation {
    let parts: Vec<Representation> = objects
        .iter()
        .map(|g| match g {
            GeomObject::BandObj { .. } => band_module(quiver, field, g).unwrap(),
            _ => string_module(quiver, field, g).unwrap(),
        })
        .collect();
    if parts.is_empty() {
        return Representation::zero(quiver, field);
    }
    scramble(&direct_sum(&parts).unwrap(), rng)
}
