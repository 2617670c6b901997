//! Mesh-additive knitting of Auslander-Reiten components: dimension vectors
//! are produced purely from the almost-split-sequence additivity, giving an
//! oracle that is independent of both the matrix-level translate and the
//! coordinate model.

use crate::error::{Error, Result};
use crate::quiver::{DimVector, Quiver, QuiverKind};

/// One knitted node tau^{-m} P(x) (or tau^{m} I(x) on the injective side).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KnitNode {
    pub level: usize,
    pub vertex: usize,
    pub dims: DimVector,
    /// Mesh successors as (level, vertex) keys.
    pub out: Vec<(usize, usize)>,
}

/// Knit the whole AR quiver of the equioriented line A_n from the
/// projective slice. Node (m, x) is tau^{-m} P(x); its mesh reads
/// dim tau^{-1}Z = sum(middles) - dim Z.
pub fn knit_equioriented_line(n: usize) -> Vec<KnitNode> {
    let q = Quiver::line_equioriented(n);
    let mut table: Vec<Vec<Option<DimVector>>> = vec![vec![None; n + 1]; n + 1];
    let mut nodes = Vec::new();
    for (x, slot) in table[0].iter_mut().enumerate().skip(1) {
        *slot = Some(q.projective_dims(x));
    }
    for m in 1..n {
        // Process x descending so (m, x+1) is ready before (m, x).
        for x in (1..=n).rev() {
            let Some(prev) = table[m - 1][x].clone() else {
                continue;
            };
            // middles: (m-1, x-1) one level back, (m, x+1) this level
            let mut total = vec![0i64; n];
            if x > 1 {
                if let Some(d) = &table[m - 1][x - 1] {
                    for (t, v) in total.iter_mut().zip(&d.0) {
                        *t += *v as i64;
                    }
                }
            }
            if x < n {
                if let Some(d) = &table[m][x + 1] {
                    for (t, v) in total.iter_mut().zip(&d.0) {
                        *t += *v as i64;
                    }
                }
            }
            for (t, v) in total.iter_mut().zip(&prev.0) {
                *t -= *v as i64;
            }
            if total.iter().all(|&v| v >= 0) && total.iter().any(|&v| v > 0) {
                table[m][x] = Some(DimVector(total.iter().map(|&v| v as usize).collect()));
            }
        }
    }
    for m in 0..=n {
        for x in 1..=n {
            let Some(dims) = &table[m][x] else { continue };
            let mut out = Vec::new();
            if x > 1 && table[m][x - 1].is_some() {
                out.push((m, x - 1));
            }
            if x < n && m < n && table[m + 1][x + 1].is_some() {
                out.push((m + 1, x + 1));
            }
            nodes.push(KnitNode {
                level: m,
                vertex: x,
                dims: dims.clone(),
                out,
            });
        }
    }
    nodes
}

fn topo_order(q: &Quiver) -> Vec<usize> {
    let n = q.n_vertices;
    let mut indeg = vec![0usize; n + 1];
    for &(_, t) in &q.arrows {
        indeg[t] += 1;
    }
    let mut queue: Vec<usize> = (1..=n).filter(|&x| indeg[x] == 0).collect();
    let mut order = Vec::new();
    while let Some(x) = queue.pop() {
        order.push(x);
        for &(s, t) in &q.arrows {
            if s == x {
                indeg[t] -= 1;
                if indeg[t] == 0 {
                    queue.push(t);
                }
            }
        }
    }
    order
}

/// Dimension vectors tau^{-m} P(x) for m = 0..levels, level-major.
///
/// Mesh recursion: dim(m+1, x) = sum over arrows v->x of dim(m, v)
/// + sum over arrows x->u of dim(m+1, u) - dim(m, x), with sinks first.
pub fn knit_preprojective(q: &Quiver, levels: usize) -> Result<Vec<Vec<DimVector>>> {
    if q.kind != QuiverKind::CycleAtilde {
        return Err(Error::Unsupported("knitting tables are for cycle quivers".into()));
    }
    let n = q.n_vertices;
    let mut out: Vec<Vec<DimVector>> = Vec::with_capacity(levels + 1);
    out.push((1..=n).map(|x| q.projective_dims(x)).collect());
    let reverse_topo: Vec<usize> = topo_order(q).into_iter().rev().collect();
    for m in 0..levels {
        let mut level: Vec<Option<DimVector>> = vec![None; n + 1];
        for &x in &reverse_topo {
            let mut total = vec![0i64; n];
            for &(s, t) in &q.arrows {
                if t == x {
                    for (tt, v) in total.iter_mut().zip(&out[m][s - 1].0) {
                        *tt += *v as i64;
                    }
                }
                if s == x {
                    let d = level[t].as_ref().expect("sinks processed first");
                    for (tt, v) in total.iter_mut().zip(&d.0) {
                        *tt += *v as i64;
                    }
                }
            }
            for (tt, v) in total.iter_mut().zip(&out[m][x - 1].0) {
                *tt -= *v as i64;
            }
            debug_assert!(total.iter().all(|&v| v >= 0));
            level[x] = Some(DimVector(total.iter().map(|&v| v as usize).collect()));
        }
        out.push((1..=n).map(|x| level[x].clone().unwrap()).collect());
    }
    Ok(out)
}

/// Dimension vectors tau^{m} I(x) for m = 0..levels, level-major.
pub fn knit_preinjective(q: &Quiver, levels: usize) -> Result<Vec<Vec<DimVector>>> {
    if q.kind != QuiverKind::CycleAtilde {
        return Err(Error::Unsupported("knitting tables are for cycle quivers".into()));
    }
    let n = q.n_vertices;
    let mut out: Vec<Vec<DimVector>> = Vec::with_capacity(levels + 1);
    out.push((1..=n).map(|x| q.injective_dims(x)).collect());
    let topo = topo_order(q);
    for m in 0..levels {
        let mut level: Vec<Option<DimVector>> = vec![None; n + 1];
        for &x in &topo {
            let mut total = vec![0i64; n];
            for &(s, t) in &q.arrows {
                if s == x {
                    for (tt, v) in total.iter_mut().zip(&out[m][t - 1].0) {
                        *tt += *v as i64;
                    }
                }
                if t == x {
                    let d = level[s].as_ref().expect("sources processed first");
                    for (tt, v) in total.iter_mut().zip(&d.0) {
                        *tt += *v as i64;
                    }
                }
            }
            for (tt, v) in total.iter_mut().zip(&out[m][x - 1].0) {
                *tt -= *v as i64;
            }
            debug_assert!(total.iter().all(|&v| v >= 0));
            level[x] = Some(DimVector(total.iter().map(|&v| v as usize).collect()));
        }
        out.push((1..=n).map(|x| level[x].clone().unwrap()).collect());
    }
    Ok(out)
}
