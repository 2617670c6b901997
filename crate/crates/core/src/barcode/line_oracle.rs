//! Brute-force interleaving oracle for the equioriented line.
//!
//! The general interleaving definition only matches the classical one after
//! embedding the line into a longer line so that nothing leaves the heart
//! within the tested shifts; the embedding margin is an explicit parameter.
//! Intervals on the line have at most one morphism between them up to
//! scalar, so the search spaces stay small.

use crate::error::{Error, Result};
use crate::exactnum::{Field, Mat, Scalar};
use crate::geom::GeomObject;
use crate::linrep::{decompose, Morphism, Representation};
use crate::quiver::{DimVector, Quiver, QuiverKind};

use super::oracle::OracleConfig;

/// An interval piece [a, b) on the embedded line, or a dead translate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum LinePiece {
    Alive { a: usize, b: usize },
    Dead,
}

impl LinePiece {
    fn translate(&self, k: usize) -> LinePiece {
        match self {
            LinePiece::Dead => LinePiece::Dead,
            LinePiece::Alive { a, b } => {
                if *a > k {
                    LinePiece::Alive { a: a - k, b: b - k }
                } else {
                    LinePiece::Dead
                }
            }
        }
    }

    fn dims(&self, n: usize) -> DimVector {
        match self {
            LinePiece::Dead => DimVector::zero(n),
            LinePiece::Alive { a, b } => {
                DimVector((1..=n).map(|x| usize::from(*a <= x && x < *b)).collect())
            }
        }
    }
}

/// Nonzero morphisms [a,b) -> [a',b') exist iff a' <= a < b' <= b.
fn has_hom(s: &LinePiece, t: &LinePiece) -> bool {
    match (s, t) {
        (LinePiece::Alive { a, b }, LinePiece::Alive { a: a2, b: b2 }) => {
            a2 <= a && a < b2 && b2 <= b
        }
        _ => false,
    }
}

struct LineAssembled {
    pieces: Vec<LinePiece>,
    sum: Representation,
    offsets: Vec<Vec<usize>>,
}

fn assemble(quiver: &Quiver, field: Field, pieces: Vec<LinePiece>) -> LineAssembled {
    let n = quiver.n_vertices;
    let mut dims = vec![0usize; n];
    let mut offsets = Vec::with_capacity(pieces.len());
    for p in &pieces {
        offsets.push(dims.clone());
        for (d, pd) in dims.iter_mut().zip(&p.dims(n).0) {
            *d += pd;
        }
    }
    let dv = DimVector(dims);
    let maps = (0..n - 1)
        .map(|i| {
            let (s, t) = (i + 1, i + 2);
            let mut m = Mat::zero(&field, dv.at(t), dv.at(s));
            for (pi, p) in pieces.iter().enumerate() {
                if let LinePiece::Alive { a, b } = p {
                    if *a <= s && t < *b {
                        m[(offsets[pi][t - 1], offsets[pi][s - 1])] = field.one();
                    }
                }
            }
            m
        })
        .collect();
    LineAssembled {
        pieces,
        sum: Representation {
            quiver: quiver.clone(),
            field,
            dims: dv,
            maps,
        },
        offsets,
    }
}

/// The overlap morphism between piece (i in src) and (j in tgt), embedded.
fn overlap_morphism(
    field: &Field,
    src: &LineAssembled,
    tgt: &LineAssembled,
    i: usize,
    j: usize,
) -> Morphism {
    let n = src.sum.quiver.n_vertices;
    let mut blocks: Vec<Mat> = (1..=n)
        .map(|x| Mat::zero(field, tgt.sum.dim_at(x), src.sum.dim_at(x)))
        .collect();
    if let (LinePiece::Alive { a, b }, LinePiece::Alive { a: a2, b: b2 }) =
        (&src.pieces[i], &tgt.pieces[j])
    {
        for x in *a.max(a2)..*b.min(b2) {
            blocks[x - 1][(tgt.offsets[j][x - 1], src.offsets[i][x - 1])] = field.one();
        }
    }
    Morphism { blocks }
}

/// Embed a line representation into a line with `margin` extra vertices on
/// each side, shifting the support.
pub fn embed_line(m: &Representation, margin: usize) -> Result<Representation> {
    if !m.quiver.is_equioriented_line() {
        return Err(Error::Unsupported(
            "embedding applies to the equioriented line".into(),
        ));
    }
    let n = m.quiver.n_vertices;
    let big = Quiver::line_equioriented(n + 2 * margin);
    let f = m.field;
    let dims = DimVector(
        (1..=n + 2 * margin)
            .map(|x| {
                if x > margin && x <= margin + n {
                    m.dim_at(x - margin)
                } else {
                    0
                }
            })
            .collect(),
    );
    let maps = (0..n + 2 * margin - 1)
        .map(|i| {
            let (s, t) = (i + 1, i + 2);
            if s > margin && t <= margin + n {
                m.maps[s - margin - 1].clone()
            } else {
                Mat::zero(&f, dims.at(t), dims.at(s))
            }
        })
        .collect();
    Representation::new(&big, f, dims, maps)
}

/// Whether two equioriented-line modules are delta-interleaved in the
/// derived sense, tested inside the line enlarged by `margin` vertices on
/// each side. With margin >= 2 delta this decides the classical notion.
pub fn brute_force_interleaved_line(
    m: &Representation,
    n: &Representation,
    delta: u32,
    margin: usize,
    config: &OracleConfig,
) -> Result<bool> {
    if m.quiver != n.quiver || m.field != n.field {
        return Err(Error::Incompatible(
            "oracle operands live over different quivers or fields".into(),
        ));
    }
    if m.quiver.kind != QuiverKind::LineA || !m.quiver.is_equioriented_line() {
        return Err(Error::Unsupported(
            "the line oracle needs the equioriented line".into(),
        ));
    }
    let field = m.field;
    if !matches!(field, Field::Prime(2) | Field::Prime(3)) {
        return Err(Error::Unsupported(
            "the oracle enumerates coefficients over F_2 or F_3".into(),
        ));
    }
    if m.total_dim() > config.dim_cap || n.total_dim() > config.dim_cap {
        return Err(Error::ResourceBound(format!(
            "oracle inputs must have total dimension <= {}",
            config.dim_cap
        )));
    }
    let me = embed_line(m, margin)?;
    let ne = embed_line(n, margin)?;
    let big = me.quiver.clone();
    let pieces = |rep: &Representation| -> Result<Vec<LinePiece>> {
        Ok(decompose(rep, config.seed)?
            .summands
            .into_iter()
            .flat_map(|s| {
                let piece = match s.object {
                    GeomObject::IntervalA { a, b } => LinePiece::Alive { a, b },
                    _ => unreachable!("line summands are intervals"),
                };
                std::iter::repeat_n(piece, s.multiplicity)
            })
            .collect())
    };
    let d = delta as usize;
    let m0p = pieces(&me)?;
    let n0p = pieces(&ne)?;
    let level = |ps: &[LinePiece], k: usize| -> Vec<LinePiece> {
        ps.iter().map(|p| p.translate(k)).collect()
    };
    let m0 = assemble(&big, field, m0p.clone());
    let md = assemble(&big, field, level(&m0p, d));
    let m2d = assemble(&big, field, level(&m0p, 2 * d));
    let n0 = assemble(&big, field, n0p.clone());
    let nd = assemble(&big, field, level(&n0p, d));
    let n2d = assemble(&big, field, level(&n0p, 2 * d));

    // Basis elements: one overlap morphism per compatible piece pair.
    let basis = |src: &LineAssembled, tgt: &LineAssembled| -> Vec<(usize, usize, Morphism)> {
        let mut out = Vec::new();
        for (i, s) in src.pieces.iter().enumerate() {
            for (j, t) in tgt.pieces.iter().enumerate() {
                if has_hom(s, t) {
                    out.push((i, j, overlap_morphism(&field, src, tgt, i, j)));
                }
            }
        }
        out
    };
    let f_basis = basis(&m0, &nd);
    let g_basis = basis(&n0, &md);
    // Translate image of a basis element: the same piece pair one level up.
    let shift = |src0: &LineAssembled,
                 tgt0: &LineAssembled,
                 srck: &LineAssembled,
                 tgtk: &LineAssembled,
                 elts: &[(usize, usize, Morphism)]|
     -> Vec<Morphism> {
        elts.iter()
            .map(|(i, j, _)| {
                let _ = (src0, tgt0);
                if has_hom(&srck.pieces[*i], &tgtk.pieces[*j]) {
                    overlap_morphism(&field, srck, tgtk, *i, *j)
                } else {
                    Morphism::zero(&srck.sum, &tgtk.sum)
                }
            })
            .collect()
    };
    let f_shift = shift(&m0, &nd, &md, &n2d, &f_basis);
    let g_shift = shift(&n0, &md, &nd, &m2d, &g_basis);

    let phi = |a0: &LineAssembled, a2: &LineAssembled| -> Vec<Morphism> {
        (0..a0.pieces.len())
            .map(|i| {
                if has_hom(&a0.pieces[i], &a2.pieces[i]) {
                    overlap_morphism(&field, a0, a2, i, i)
                } else {
                    Morphism::zero(&a0.sum, &a2.sum)
                }
            })
            .collect()
    };
    let phi_m = phi(&m0, &m2d);
    let phi_n = phi(&n0, &n2d);

    // Enumerate the smaller side, solve the other side linearly.
    let elems = field.elements().expect("small prime field");
    let nonzero = field.nonzero_elements().expect("small prime field");
    let (enum_f, enum_basis, solve_basis, enum_shift, solve_shift) =
        if f_basis.len() <= g_basis.len() {
            (true, &f_basis, &g_basis, &f_shift, &g_shift)
        } else {
            (false, &g_basis, &f_basis, &g_shift, &f_shift)
        };
    let combos = (elems.len() as f64).powi(enum_basis.len() as i32)
        * (nonzero.len() as f64).powi((phi_m.len() + phi_n.len()) as i32);
    if combos > config.enum_cap as f64 {
        return Err(Error::ResourceBound(format!(
            "line oracle enumeration of {combos} combinations exceeds the cap"
        )));
    }
    let flatten = |m: &Morphism| -> Vec<Scalar> {
        let mut v = Vec::new();
        for b in &m.blocks {
            for r in 0..b.rows {
                for c in 0..b.cols {
                    v.push(b[(r, c)].clone());
                }
            }
        }
        v
    };
    let mut scalar_idx = vec![0usize; phi_m.len() + phi_n.len()];
    loop {
        let mut rhs_m = Morphism::zero(&m0.sum, &m2d.sum);
        for (i, p) in phi_m.iter().enumerate() {
            rhs_m = rhs_m.add(&field, &p.scale(&field, &nonzero[scalar_idx[i]]));
        }
        let mut rhs_n = Morphism::zero(&n0.sum, &n2d.sum);
        for (j, p) in phi_n.iter().enumerate() {
            rhs_n = rhs_n.add(&field, &p.scale(&field, &nonzero[scalar_idx[phi_m.len() + j]]));
        }
        let mut coeff_idx = vec![0usize; enum_basis.len()];
        loop {
            // fixed enumerated morphism and its translate
            let (src_es, tgt_es) = if enum_f {
                (&md.sum, &n2d.sum)
            } else {
                (&nd.sum, &m2d.sum)
            };
            let mut fixed_shift = Morphism::zero(src_es, tgt_es);
            let (src_e, tgt_e) = if enum_f {
                (&m0.sum, &nd.sum)
            } else {
                (&n0.sum, &md.sum)
            };
            let mut fixed = Morphism::zero(src_e, tgt_e);
            for (slot, ((_, _, mat), s)) in enum_basis.iter().zip(enum_shift).enumerate() {
                let coeff = &elems[coeff_idx[slot]];
                if field.is_zero(coeff) {
                    continue;
                }
                fixed = fixed.add(&field, &mat.scale(&field, coeff));
                fixed_shift = fixed_shift.add(&field, &s.scale(&field, coeff));
            }
            // A: tau(g) o f = Phi_M; B: tau(f) o g = Phi_N
            let (cols_a, cols_b): (Vec<Morphism>, Vec<Morphism>) = if enum_f {
                (
                    solve_shift.iter().map(|tg| tg.compose(&field, &fixed)).collect(),
                    solve_basis
                        .iter()
                        .map(|(_, _, g)| fixed_shift.compose(&field, g))
                        .collect(),
                )
            } else {
                (
                    solve_basis
                        .iter()
                        .map(|(_, _, fm)| fixed_shift.compose(&field, fm))
                        .collect(),
                    solve_shift.iter().map(|tf| tf.compose(&field, &fixed)).collect(),
                )
            };
            let rows_a = flatten(&rhs_m).len();
            let rows_b = flatten(&rhs_n).len();
            let mut sys = Mat::zero(&field, rows_a + rows_b, solve_basis.len());
            for (col, (ca, cb)) in cols_a.iter().zip(&cols_b).enumerate() {
                for (row, v) in flatten(ca).into_iter().enumerate() {
                    sys[(row, col)] = v;
                }
                for (row, v) in flatten(cb).into_iter().enumerate() {
                    sys[(rows_a + row, col)] = v;
                }
            }
            let mut rhs = flatten(&rhs_m);
            rhs.extend(flatten(&rhs_n));
            if sys.solve(&field, &rhs).is_some() {
                return Ok(true);
            }
            if !super::oracle::odometer(&mut coeff_idx, elems.len()) {
                break;
            }
        }
        if !super::oracle::odometer(&mut scalar_idx, nonzero.len()) {
            break;
        }
    }
    Ok(false)
}
