//! Classification of an indecomposable representation as a geometric object.

use super::{GeomObject, Model};
use crate::error::{Error, Result};
use crate::exactnum::{factor, Mat};
use crate::linrep::Representation;
use crate::quiver::QuiverKind;

/// Assign canonical coordinates to an indecomposable representation.
///
/// Constant dimension vector with all arrow maps invertible means a band,
/// keyed by the unique irreducible factor of the clockwise monodromy's
/// characteristic polynomial; any other case is a string whose lifted
/// interval is recovered from the per-vertex multiplicities.
pub fn classify(m: &Representation) -> Result<GeomObject> {
    m.validate()?;
    if m.is_zero() {
        return Err(Error::Domain("the zero module is not indecomposable".into()));
    }
    match m.quiver.kind {
        QuiverKind::LineA => classify_line(m),
        QuiverKind::CycleAtilde => classify_cycle(m),
    }
}

fn classify_line(m: &Representation) -> Result<GeomObject> {
    let support: Vec<usize> = (1..=m.quiver.n_vertices)
        .filter(|&x| m.dim_at(x) > 0)
        .collect();
    let a = support[0];
    let b = support[support.len() - 1] + 1;
    if support.len() != b - a || support.iter().any(|&x| m.dim_at(x) != 1) {
        return Err(Error::NotIndecomposable);
    }
    Ok(GeomObject::IntervalA { a, b })
}

fn classify_cycle(m: &Representation) -> Result<GeomObject> {
    let f = &m.field;
    let model = Model::new(&m.quiver)?;
    if let Some(k) = m.dims.is_constant() {
        debug_assert!(k > 0);
        let invertible: Vec<bool> = m.maps.iter().map(|a| a.is_invertible(f)).collect();
        if invertible.iter().all(|&b| b) {
            // Band: clockwise monodromy from the base vertex.
            let w = monodromy(m)?;
            let cp = w.char_poly(f)?;
            let factors = factor(f, &cp)?;
            if factors.len() != 1 {
                return Err(Error::NotIndecomposable);
            }
            let (minpoly, _) = factors.into_iter().next().unwrap();
            let deg = minpoly.degree();
            if k % deg != 0 {
                return Err(Error::NotIndecomposable);
            }
            return Ok(GeomObject::BandObj {
                minpoly,
                l: k / deg,
            });
        }
        // Constant-dimension string: exactly one arc map drops rank, and it
        // pins the interval start.
        let bad: Vec<usize> = invertible
            .iter()
            .enumerate()
            .filter(|(_, inv)| !**inv)
            .map(|(i, _)| i + 1)
            .collect();
        if bad.len() != 1 {
            return Err(Error::NotIndecomposable);
        }
        let iv = model.cover.interval_from_dims(&m.dims, Some(bad[0]))?;
        return Ok(model.object_of_interval(iv));
    }
    let iv = model.cover.interval_from_dims(&m.dims, None)?;
    Ok(model.object_of_interval(iv))
}

/// Composition of arrow maps (inverses on anticlockwise arrows) clockwise
/// around the cycle from the base vertex 1.
fn monodromy(m: &Representation) -> Result<Mat> {
    let f = &m.field;
    let n = m.quiver.n_vertices;
    let mut acc = Mat::identity(f, m.dim_at(1));
    for slot in 1..=n {
        let step = if m.quiver.is_clockwise(slot) {
            m.maps[slot - 1].clone()
        } else {
            m.maps[slot - 1]
                .inverse(f)
                .ok_or(Error::NotIndecomposable)?
        };
        acc = step.mul(f, &acc);
    }
    Ok(acc)
}
