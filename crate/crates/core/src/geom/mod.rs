//! Canonical coordinates for indecomposables on the geometric model: arcs
//! and bands on the annulus for cycle quivers, intervals on the disc for the
//! equioriented line. Provides the s/t boundary moves, lengths,
//! delta-equivalence, the coordinate-level AR translate, canonical module
//! constructors, classification and the standard Phi morphisms.

mod canonical;
mod classify;
mod cover;
mod knitting;
mod phi;
pub mod stringhom;

pub use canonical::{band_module, string_module};
pub use classify::classify;
pub use cover::{Boundary, Cover, LiftedInterval};
pub use knitting::{knit_equioriented_line, knit_preinjective, knit_preprojective, KnitNode};
pub use phi::{phi_map, Phi};

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exactnum::Poly;
use crate::quiver::{Quiver, QuiverKind};

/// Graded component of a bridging arc.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Tag {
    Preprojective,
    Preinjective,
}

/// Which exceptional tube a same-boundary arc lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TubeKind {
    RankP,
    RankQ,
}

/// Canonical coordinates of an indecomposable object.
///
/// Coordinates are stored in a normalized fundamental domain of the deck
/// action, so structural equality is object equality.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum GeomObject {
    /// Arc between the two boundary circles: `u` indexes a lifted marked
    /// point on the p-boundary, `v` one on the q-boundary.
    BridgeArc { tag: Tag, u: i64, v: i64 },
    /// Arc with both endpoints on one boundary circle; `a` is the lifted
    /// index at the top end, `b` at the socle-predecessor end, length a - b.
    TubeArc { tube: TubeKind, a: i64, b: i64 },
    /// Primitive closed curve with an invertible parameter: the monic
    /// irreducible minimal polynomial of lambda (nonzero), and a length.
    BandObj { minpoly: Poly, l: usize },
    /// Interval [a, b) on the equioriented line's disc model.
    IntervalA { a: usize, b: usize },
}

/// Result of a boundary move: the moved object, or the zero object.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Moved {
    Object(GeomObject),
    Trivial,
}

impl Moved {
    pub fn object(self) -> Option<GeomObject> {
        match self {
            Moved::Object(g) => Some(g),
            Moved::Trivial => None,
        }
    }
}

/// Coordinate model of one quiver: the covering line plus the offsets that
/// pin bridge coordinates so the base projective and injective sit at (0,0).
pub struct Model {
    pub cover: Cover,
    u_off_pp: i64,
    v_off_pp: i64,
    u_off_pi: i64,
    v_off_pi: i64,
}

impl Model {
    pub fn new(quiver: &Quiver) -> Result<Model> {
        let cover = Cover::new(quiver)?;
        // Interval of the projective at the base vertex 1: all arrows point
        // away from the lift.
        let proj = projective_interval(&cover, 1);
        let inj = injective_interval(&cover, 1);
        let model = |iv: LiftedInterval, preproj: bool| -> (i64, i64) {
            let (le, re) = (iv.left_edge(), iv.right_edge());
            if preproj {
                (cover.outer_index(le), cover.inner_index(re))
            } else {
                (cover.outer_index(re), cover.inner_index(le))
            }
        };
        let (u_off_pp, v_off_pp) = model(proj, true);
        let (u_off_pi, v_off_pi) = model(inj, false);
        Ok(Model {
            cover,
            u_off_pp,
            v_off_pp,
            u_off_pi,
            v_off_pi,
        })
    }

    pub fn quiver(&self) -> &Quiver {
        &self.cover.quiver
    }

    fn rank(&self, tube: TubeKind) -> i64 {
        match tube {
            TubeKind::RankP => self.cover.p(),
            TubeKind::RankQ => self.cover.q(),
        }
    }

    /// Reduce coordinates into the deck fundamental domain.
    pub fn normalize(&self, g: GeomObject) -> GeomObject {
        match g {
            GeomObject::BridgeArc { tag, u, v } => {
                // One full positive turn of the deck acts by (u+p, v-q).
                let k = u.div_euclid(self.cover.p());
                GeomObject::BridgeArc {
                    tag,
                    u: u - k * self.cover.p(),
                    v: v + k * self.cover.q(),
                }
            }
            GeomObject::TubeArc { tube, a, b } => {
                let r = self.rank(tube);
                let k = b.div_euclid(r);
                GeomObject::TubeArc {
                    tube,
                    a: a - k * r,
                    b: b - k * r,
                }
            }
            other => other,
        }
    }

    /// Interval of a string object, in unnormalized lifted coordinates.
    pub(crate) fn interval_of(&self, g: &GeomObject) -> Result<LiftedInterval> {
        let c = &self.cover;
        let (left_edge, right_edge) = match g {
            GeomObject::BridgeArc {
                tag: Tag::Preprojective,
                u,
                v,
            } => (c.outer_edge(u + self.u_off_pp), c.inner_edge(v + self.v_off_pp)),
            GeomObject::BridgeArc {
                tag: Tag::Preinjective,
                u,
                v,
            } => (c.inner_edge(v + self.v_off_pi), c.outer_edge(u + self.u_off_pi)),
            GeomObject::TubeArc {
                tube: TubeKind::RankP,
                a,
                b,
            } => (c.outer_edge(*a), c.outer_edge(*b)),
            GeomObject::TubeArc {
                tube: TubeKind::RankQ,
                a,
                b,
            } => (c.inner_edge(*b), c.inner_edge(*a)),
            _ => {
                return Err(Error::Domain(
                    "bands and disc intervals have no annulus interval".into(),
                ))
            }
        };
        Ok(LiftedInterval {
            a: left_edge + 1,
            b: right_edge + 1,
        })
    }

    /// Whether a bridge arc's coordinates describe a module (rather than a
    /// shifted object reached by over-translating).
    pub fn in_heart(&self, g: &GeomObject) -> bool {
        match g {
            GeomObject::BridgeArc { .. } => {
                let iv = self.interval_of(g).unwrap();
                iv.a < iv.b
            }
            _ => true,
        }
    }

    /// Extract coordinates from an interval: which object it denotes.
    pub(crate) fn object_of_interval(&self, iv: LiftedInterval) -> GeomObject {
        let c = &self.cover;
        let (le, re) = (iv.left_edge(), iv.right_edge());
        let g = match (c.boundary_of_edge(le), c.boundary_of_edge(re)) {
            (Boundary::Outer, Boundary::Inner) => GeomObject::BridgeArc {
                tag: Tag::Preprojective,
                u: c.outer_index(le) - self.u_off_pp,
                v: c.inner_index(re) - self.v_off_pp,
            },
            (Boundary::Inner, Boundary::Outer) => GeomObject::BridgeArc {
                tag: Tag::Preinjective,
                u: c.outer_index(re) - self.u_off_pi,
                v: c.inner_index(le) - self.v_off_pi,
            },
            (Boundary::Outer, Boundary::Outer) => GeomObject::TubeArc {
                tube: TubeKind::RankP,
                a: c.outer_index(le),
                b: c.outer_index(re),
            },
            (Boundary::Inner, Boundary::Inner) => GeomObject::TubeArc {
                tube: TubeKind::RankQ,
                a: c.inner_index(re),
                b: c.inner_index(le),
            },
        };
        self.normalize(g)
    }
}

/// Interval of the indecomposable projective at a vertex: all arrows point
/// away from the chosen lift.
fn projective_interval(cover: &Cover, vertex: usize) -> LiftedInterval {
    let lift = vertex as i64;
    let mut a = lift;
    while !cover.edge_rightward(a - 1) {
        a -= 1;
    }
    let mut b = lift + 1;
    while cover.edge_rightward(b - 1) {
        b += 1;
    }
    LiftedInterval { a, b }
}

/// Interval of the indecomposable injective at a vertex: arrows point toward
/// the lift.
fn injective_interval(cover: &Cover, vertex: usize) -> LiftedInterval {
    let lift = vertex as i64;
    let mut a = lift;
    while cover.edge_rightward(a - 1) {
        a -= 1;
    }
    let mut b = lift + 1;
    while !cover.edge_rightward(b - 1) {
        b += 1;
    }
    LiftedInterval { a, b }
}

/// Move the start of the arc one marked point in the positive direction.
///
/// Bridges and tube arcs never trivialize under s; bands gain length; disc
/// intervals grow leftward and leave the heart at a = 1.
pub fn s_move(model: &Model, g: &GeomObject) -> Result<Moved> {
    Ok(match g {
        GeomObject::BridgeArc { tag, u, v } => Moved::Object(model.normalize(GeomObject::BridgeArc {
            tag: *tag,
            u: u + 1,
            v: *v,
        })),
        GeomObject::TubeArc { tube, a, b } => Moved::Object(model.normalize(GeomObject::TubeArc {
            tube: *tube,
            a: a + 1,
            b: *b,
        })),
        GeomObject::BandObj { minpoly, l } => Moved::Object(GeomObject::BandObj {
            minpoly: minpoly.clone(),
            l: l + 1,
        }),
        GeomObject::IntervalA { a, b } => {
            if *a == 1 {
                return Err(Error::LeavesHeart);
            }
            Moved::Object(GeomObject::IntervalA { a: a - 1, b: *b })
        }
    })
}

/// Move the end of the arc one marked point in the positive direction.
/// Returns `Trivial` when the object dies (a value, not an error).
pub fn t_move(model: &Model, g: &GeomObject) -> Result<Moved> {
    Ok(match g {
        GeomObject::BridgeArc { tag, u, v } => Moved::Object(model.normalize(GeomObject::BridgeArc {
            tag: *tag,
            u: *u,
            v: v + 1,
        })),
        GeomObject::TubeArc { tube, a, b } => {
            if *a == b + 1 {
                Moved::Trivial
            } else {
                Moved::Object(model.normalize(GeomObject::TubeArc {
                    tube: *tube,
                    a: *a,
                    b: b + 1,
                }))
            }
        }
        GeomObject::BandObj { minpoly, l } => {
            if *l == 1 {
                Moved::Trivial
            } else {
                Moved::Object(GeomObject::BandObj {
                    minpoly: minpoly.clone(),
                    l: l - 1,
                })
            }
        }
        GeomObject::IntervalA { a, b } => {
            if b - 1 == *a {
                Moved::Trivial
            } else {
                Moved::Object(GeomObject::IntervalA { a: *a, b: b - 1 })
            }
        }
    })
}

/// Apply s `s_count` times then t `t_count` times; Trivial absorbs.
pub fn apply_st(model: &Model, g: &GeomObject, s_count: u32, t_count: u32) -> Result<Moved> {
    let mut cur = Moved::Object(g.clone());
    for _ in 0..s_count {
        cur = match cur {
            Moved::Trivial => Moved::Trivial,
            Moved::Object(g) => s_move(model, &g)?,
        };
    }
    for _ in 0..t_count {
        cur = match cur {
            Moved::Trivial => Moved::Trivial,
            Moved::Object(g) => t_move(model, &g)?,
        };
    }
    Ok(cur)
}

/// Length of the object; `None` is infinite (bridging arcs).
pub fn length(g: &GeomObject) -> Option<u64> {
    match g {
        GeomObject::BridgeArc { .. } => None,
        GeomObject::TubeArc { a, b, .. } => Some((a - b) as u64),
        GeomObject::BandObj { l, .. } => Some(*l as u64),
        GeomObject::IntervalA { a, b } => Some((b - a) as u64),
    }
}

/// Closed-form delta-equivalence: some shifts t^{m1}s^{m2}, t^{n1}s^{n2}
/// with all exponents in [0, delta] make the two objects equal and
/// nontrivial.
pub fn delta_equivalent(
    model: &Model,
    g1: &GeomObject,
    g2: &GeomObject,
    delta: u32,
) -> Result<bool> {
    let d = delta as i64;
    Ok(match (g1, g2) {
        (GeomObject::BandObj { minpoly: f1, l: l1 }, GeomObject::BandObj { minpoly: f2, l: l2 }) => {
            f1 == f2 && (*l1 as i64 - *l2 as i64).abs() <= 2 * d
        }
        (
            GeomObject::BridgeArc { tag: t1, u: u1, v: v1 },
            GeomObject::BridgeArc { tag: t2, u: u2, v: v2 },
        ) => {
            if t1 != t2 {
                return Ok(false);
            }
            let (p, q) = (model.cover.p(), model.cover.q());
            let range = (u1 - u2).abs() / p + (v1 - v2).abs() / q + 2;
            (-range..=range).any(|k| {
                (u1 - u2 - k * p).abs() <= d && (v1 - v2 + k * q).abs() <= d
            })
        }
        (
            GeomObject::TubeArc { tube: k1, a: a1, b: b1 },
            GeomObject::TubeArc { tube: k2, a: a2, b: b2 },
        ) => {
            if k1 != k2 {
                return Ok(false);
            }
            let r = model.rank(*k1);
            let len1 = a1 - b1;
            let range = (a1 - a2).abs() / r + (b1 - b2).abs() / r + 2;
            (-range..=range).any(|k| {
                let alpha = a1 - a2 - k * r;
                let beta = b1 - b2 - k * r;
                alpha.abs() <= d
                    && beta.abs() <= d
                    && len1 + (d - alpha.max(0)) - (-beta).max(0) >= 1
            })
        }
        (
            GeomObject::IntervalA { a: a1, b: b1 },
            GeomObject::IntervalA { a: a2, b: b2 },
        ) => {
            (*a1 as i64 - *a2 as i64).abs() <= d && (*b1 as i64 - *b2 as i64).abs() <= d
        }
        _ => false,
    })
}

/// Literal shift-quadruple search over [0, delta]^4, the guard for the
/// closed form above. Quadruples where a move is undefined are skipped.
pub fn delta_equivalent_brute(
    model: &Model,
    g1: &GeomObject,
    g2: &GeomObject,
    delta: u32,
) -> Result<bool> {
    for m2 in 0..=delta {
        for m1 in 0..=delta {
            let lhs = match apply_st(model, g1, m2, m1) {
                Ok(Moved::Object(g)) => g,
                _ => continue,
            };
            for n2 in 0..=delta {
                for n1 in 0..=delta {
                    match apply_st(model, g2, n2, n1) {
                        Ok(Moved::Object(rhs)) if rhs == lhs => return Ok(true),
                        _ => {}
                    }
                }
            }
        }
    }
    Ok(false)
}

/// Coordinate-level inverse AR translate: st applied to the arc.
pub fn tau_inverse_coord(model: &Model, g: &GeomObject) -> Result<GeomObject> {
    Ok(match g {
        GeomObject::BridgeArc { tag, u, v } => model.normalize(GeomObject::BridgeArc {
            tag: *tag,
            u: u + 1,
            v: v + 1,
        }),
        GeomObject::TubeArc { tube, a, b } => model.normalize(GeomObject::TubeArc {
            tube: *tube,
            a: a + 1,
            b: b + 1,
        }),
        GeomObject::BandObj { minpoly, l } => GeomObject::BandObj {
            minpoly: minpoly.clone(),
            l: *l,
        },
        GeomObject::IntervalA { a, b } => {
            if *a == 1 {
                return Err(Error::LeavesHeart);
            }
            GeomObject::IntervalA { a: a - 1, b: b - 1 }
        }
    })
}

/// Coordinate-level forward AR translate (the inverse of
/// [`tau_inverse_coord`]).
pub fn tau_coord(model: &Model, g: &GeomObject) -> Result<GeomObject> {
    Ok(match g {
        GeomObject::BridgeArc { tag, u, v } => model.normalize(GeomObject::BridgeArc {
            tag: *tag,
            u: u - 1,
            v: v - 1,
        }),
        GeomObject::TubeArc { tube, a, b } => model.normalize(GeomObject::TubeArc {
            tube: *tube,
            a: a - 1,
            b: b - 1,
        }),
        GeomObject::BandObj { minpoly, l } => GeomObject::BandObj {
            minpoly: minpoly.clone(),
            l: *l,
        },
        GeomObject::IntervalA { a, b } => {
            if *b as i64 > model.quiver().n_vertices as i64 {
                return Err(Error::LeavesHeart);
            }
            GeomObject::IntervalA { a: a + 1, b: b + 1 }
        }
    })
}

impl GeomObject {
    pub fn tag(&self) -> Option<Tag> {
        match self {
            GeomObject::BridgeArc { tag, .. } => Some(*tag),
            _ => None,
        }
    }

    /// Dictionary label relating this object to level-set barcode types.
    pub fn dictionary_label(&self) -> String {
        match self {
            GeomObject::BridgeArc {
                tag: Tag::Preprojective,
                ..
            } => "closed interval".into(),
            GeomObject::BridgeArc {
                tag: Tag::Preinjective,
                ..
            } => "open interval".into(),
            GeomObject::TubeArc { .. } => "half-open interval".into(),
            GeomObject::BandObj { minpoly, l } => match minpoly.eigenvalue_display() {
                // Display the eigenvalue for split bands, the minimal
                // polynomial otherwise.
                Some(lambda) => format!("Jordan block ({lambda}, {l})"),
                None => format!("Jordan block ({minpoly}, {l})"),
            },
            GeomObject::IntervalA { a, b } => format!("interval [{a},{b})"),
        }
    }
}

impl std::fmt::Display for GeomObject {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            GeomObject::BridgeArc { tag, u, v } => {
                let t = match tag {
                    Tag::Preprojective => "P",
                    Tag::Preinjective => "I",
                };
                write!(f, "bridge[{t}](u={u}, v={v})")
            }
            GeomObject::TubeArc { tube, a, b } => {
                let t = match tube {
                    TubeKind::RankP => "p",
                    TubeKind::RankQ => "q",
                };
                write!(f, "tube[{t}](a={a}, b={b})")
            }
            GeomObject::BandObj { minpoly, l } => write!(f, "band({minpoly}, {l})"),
            GeomObject::IntervalA { a, b } => write!(f, "[{a},{b})"),
        }
    }
}

impl Serialize for GeomObject {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            GeomObject::BandObj { minpoly, l } => {
                let mut s = ser.serialize_struct("band", 3)?;
                s.serialize_field("kind", "band")?;
                s.serialize_field("minpoly", &minpoly.to_string())?;
                s.serialize_field("l", l)?;
                s.end()
            }
            GeomObject::BridgeArc { tag, u, v } => {
                let mut s = ser.serialize_struct("bridge", 4)?;
                s.serialize_field("kind", "bridge")?;
                s.serialize_field(
                    "tag",
                    match tag {
                        Tag::Preprojective => "P",
                        Tag::Preinjective => "I",
                    },
                )?;
                s.serialize_field("u", u)?;
                s.serialize_field("v", v)?;
                s.end()
            }
            GeomObject::TubeArc { tube, a, b } => {
                let mut s = ser.serialize_struct("tube", 4)?;
                s.serialize_field("kind", "tube")?;
                s.serialize_field(
                    "tube",
                    match tube {
                        TubeKind::RankP => "p",
                        TubeKind::RankQ => "q",
                    },
                )?;
                s.serialize_field("a", a)?;
                s.serialize_field("b", b)?;
                s.end()
            }
            GeomObject::IntervalA { a, b } => {
                let mut s = ser.serialize_struct("interval", 3)?;
                s.serialize_field("kind", "interval")?;
                s.serialize_field("a", a)?;
                s.serialize_field("b", b)?;
                s.end()
            }
        }
    }
}

/// Quiver consistency check for barcode-level operations.
pub fn check_same_model(q1: &Quiver, q2: &Quiver) -> Result<()> {
    if q1 != q2 {
        return Err(Error::Incompatible(
            "objects come from different quivers' geometric models".into(),
        ));
    }
    Ok(())
}

/// Model guard for disc-model operations.
pub fn require_equioriented_line(q: &Quiver) -> Result<()> {
    if q.kind != QuiverKind::LineA || !q.is_equioriented_line() {
        return Err(Error::Unsupported(
            "disc-model intervals require the equioriented line quiver".into(),
        ));
    }
    Ok(())
}
