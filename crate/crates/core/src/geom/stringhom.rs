//! Combinatorial Hom-space bases between canonical forms on the covering
//! line, with a canonical inverse-translate action on basis elements.
//!
//! A nonzero morphism between interval modules is a partial identity on the
//! overlap of the source interval with a deck translate of the target
//! interval, subject to orientation conditions at the overlap ends; one
//! basis element per valid deck offset. Between band modules of the same
//! minimal polynomial the basis elements are companion-twisted block shifts.
//! The translate moves every interval's ends one marked point positively and
//! keeps the deck offset, killing elements whose shifted overlap becomes
//! invalid; band elements are fixed. This presents the derived translate on
//! morphisms without any basis choices.

use super::canonical::band_module;
use super::cover::{Cover, LiftedInterval};
use super::GeomObject;
use crate::exactnum::{Field, Mat, Poly};
use crate::linrep::Representation;

/// A summand in the oracle's canonical presentation, at one translate level.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Piece {
    /// String summand with its absolute lifted interval.
    Str(LiftedInterval),
    /// A string summand that has left the heart (zero module).
    Dead,
    /// Band summand; translate-invariant.
    Band { minpoly: Poly, l: usize },
}

impl Piece {
    pub fn from_object(cover_model: &super::Model, g: &GeomObject) -> crate::error::Result<Piece> {
        Ok(match g {
            GeomObject::BandObj { minpoly, l } => Piece::Band {
                minpoly: minpoly.clone(),
                l: *l,
            },
            GeomObject::BridgeArc { .. } | GeomObject::TubeArc { .. } => {
                let iv = cover_model.interval_of(g)?;
                let iv = cover_model.cover.normalize_interval(iv);
                if iv.a < iv.b {
                    Piece::Str(iv)
                } else {
                    Piece::Dead
                }
            }
            GeomObject::IntervalA { .. } => {
                return Err(crate::error::Error::Unsupported(
                    "oracle pieces live on the annulus model".into(),
                ))
            }
        })
    }

    /// Advance both interval ends `k` marked points positively.
    pub fn translate(&self, cover: &Cover, k: i64) -> Piece {
        match self {
            Piece::Band { minpoly, l } => Piece::Band {
                minpoly: minpoly.clone(),
                l: *l,
            },
            Piece::Dead => Piece::Dead,
            Piece::Str(iv) => {
                let moved = LiftedInterval {
                    a: cover.advance_edge(iv.left_edge(), k) + 1,
                    b: cover.advance_edge(iv.right_edge(), k) + 1,
                };
                if moved.a < moved.b {
                    Piece::Str(moved)
                } else {
                    Piece::Dead
                }
            }
        }
    }

    pub fn rep(&self, cover: &Cover, field: Field) -> Representation {
        match self {
            Piece::Str(iv) => cover.interval_rep(field, *iv),
            Piece::Dead => Representation::zero(&cover.quiver, field),
            Piece::Band { minpoly, l } => band_module(
                &cover.quiver,
                field,
                &GeomObject::BandObj {
                    minpoly: minpoly.clone(),
                    l: *l,
                },
            )
            .expect("band pieces are valid"),
        }
    }
}

/// One basis morphism between two pieces.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HomElt {
    /// Partial identity onto the overlap of source with (target + offset*n).
    Overlap { deck_offset: i64 },
    /// C^twist o (block shift by r) between bands of the same minpoly.
    BandShift { twist: usize, r: usize },
}

/// Whether the overlap morphism source -> (target + offset*n) is valid, per
/// the end-orientation conditions.
fn overlap_valid(cover: &Cover, s: LiftedInterval, t: LiftedInterval, offset: i64) -> bool {
    let n = cover.n();
    let t = LiftedInterval {
        a: t.a + offset * n,
        b: t.b + offset * n,
    };
    let (ua, ub) = (s.a.max(t.a), s.b.min(t.b));
    if ua >= ub {
        return false;
    }
    // left end
    if s.a > t.a && !cover.edge_rightward(s.a - 1) {
        return false;
    }
    if t.a > s.a && cover.edge_rightward(t.a - 1) {
        return false;
    }
    // right end
    if s.b < t.b && cover.edge_rightward(s.b - 1) {
        return false;
    }
    if t.b < s.b && !cover.edge_rightward(t.b - 1) {
        return false;
    }
    true
}

/// All valid deck offsets between two intervals.
fn valid_offsets(cover: &Cover, s: LiftedInterval, t: LiftedInterval) -> Vec<i64> {
    let n = cover.n();
    // offsets where the translate of t meets s at all
    let lo = (s.a - t.b).div_euclid(n) - 1;
    let hi = (s.b - t.a).div_euclid(n) + 1;
    (lo..=hi)
        .filter(|&k| overlap_valid(cover, s, t, k))
        .collect()
}

/// Basis of Hom(source, target) between pieces.
pub fn hom_basis(cover: &Cover, source: &Piece, target: &Piece) -> Vec<HomElt> {
    match (source, target) {
        (Piece::Str(s), Piece::Str(t)) => valid_offsets(cover, *s, *t)
            .into_iter()
            .map(|deck_offset| HomElt::Overlap { deck_offset })
            .collect(),
        (Piece::Band { minpoly: f1, l: l1 }, Piece::Band { minpoly: f2, l: l2 }) => {
            if f1 != f2 {
                return Vec::new();
            }
            let d = f1.degree();
            let rmin = l1.saturating_sub(*l2);
            let mut out = Vec::new();
            for r in rmin..*l1 {
                for twist in 0..d {
                    out.push(HomElt::BandShift { twist, r });
                }
            }
            out
        }
        // Strings and bands lie in orthogonal tubes/components.
        _ => Vec::new(),
    }
}

/// Matrix blocks (one per vertex) of a basis element between piece reps.
pub fn hom_elt_matrix(
    cover: &Cover,
    field: &Field,
    source: &Piece,
    target: &Piece,
    elt: &HomElt,
) -> Vec<Mat> {
    let quiver = &cover.quiver;
    let nv = quiver.n_vertices;
    let srep = source.rep(cover, *field);
    let trep = target.rep(cover, *field);
    let mut blocks: Vec<Mat> = (1..=nv)
        .map(|x| Mat::zero(field, trep.dim_at(x), srep.dim_at(x)))
        .collect();
    match (source, target, elt) {
        (Piece::Str(s), Piece::Str(t), HomElt::Overlap { deck_offset }) => {
            let n = cover.n();
            let tsh = LiftedInterval {
                a: t.a + deck_offset * n,
                b: t.b + deck_offset * n,
            };
            let pos = |iv: LiftedInterval, x: usize, j: i64| -> usize {
                (iv.a..j).filter(|&jj| cover.vertex_of(jj) == x).count()
            };
            for j in s.a.max(tsh.a)..s.b.min(tsh.b) {
                let x = cover.vertex_of(j);
                let col = pos(*s, x, j);
                let row = pos(*t, x, j - deck_offset * n);
                blocks[x - 1][(row, col)] = field.one();
            }
            blocks
        }
        (
            Piece::Band { minpoly, l: l1 },
            Piece::Band { l: l2, .. },
            HomElt::BandShift { twist, r },
        ) => {
            let d = minpoly.degree();
            // companion matrix power for the twist
            let comp = {
                let mut m = Mat::zero(field, d, d);
                for i in 1..d {
                    m[(i, i - 1)] = field.one();
                }
                for i in 0..d {
                    m[(i, d - 1)] = field.neg(&minpoly.coeff(field, i));
                }
                m
            };
            let mut cpow = Mat::identity(field, d);
            for _ in 0..*twist {
                cpow = cpow.mul(field, &comp);
            }
            let mut block = Mat::zero(field, l2 * d, l1 * d);
            for i in 1..=*l1 {
                let tgt = i as i64 - *r as i64;
                if tgt >= 1 && tgt <= *l2 as i64 {
                    block.paste(&cpow, (tgt as usize - 1) * d, (i - 1) * d);
                }
            }
            (0..nv).map(|_| block.clone()).collect()
        }
        _ => blocks,
    }
}

/// The inverse-translate image of a basis element: the same deck offset
/// between the translated pieces, or zero if the shifted overlap is invalid.
/// Returns the element in the target bases of the translated pieces.
pub fn translate_elt(
    cover: &Cover,
    source: &Piece,
    target: &Piece,
    elt: &HomElt,
    k: i64,
) -> Option<HomElt> {
    match elt {
        HomElt::BandShift { .. } => Some(elt.clone()),
        HomElt::Overlap { deck_offset } => {
            let (Piece::Str(s), Piece::Str(t)) = (source.translate(cover, k), target.translate(cover, k))
            else {
                return None;
            };
            overlap_valid(cover, s, t, *deck_offset).then_some(elt.clone())
        }
    }
}

/// Hom-space dimension between pieces, for cross-checking against the
/// commutation-system solver.
pub fn hom_dim(cover: &Cover, source: &Piece, target: &Piece) -> usize {
    hom_basis(cover, source, target).len()
}
