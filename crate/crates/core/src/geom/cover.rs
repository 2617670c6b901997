//! The universal cover of the cycle quiver: a line quiver with vertices in Z,
//! where string modules become intervals.
//!
//! Line vertex j covers cycle vertex ((j-1) mod n) + 1; the edge (j, j+1)
//! covers the arc slot of its left endpoint. Edges lifted from clockwise
//! arcs point rightward and carry the marked points of the p-boundary;
//! anticlockwise arcs point leftward and carry the q-boundary points.
//!
//! The positive direction along the p-boundary corresponds to decreasing j,
//! along the q-boundary to increasing j (the two boundary circles of the
//! annulus inherit opposite orientations). Boundary indices are chosen so
//! that one positive step adds 1 to the index on either boundary.

use crate::error::{Error, Result};
use crate::exactnum::{Field, Mat};
use crate::linrep::Representation;
use crate::quiver::{DimVector, Quiver, QuiverKind};

/// Index machinery for one cycle quiver's covering line.
pub struct Cover {
    pub quiver: Quiver,
    /// Sorted arc slots (1-indexed) that are clockwise (p-boundary).
    cw_slots: Vec<usize>,
    /// Sorted arc slots that are anticlockwise (q-boundary).
    acw_slots: Vec<usize>,
}

/// A nonempty interval of line vertices `[a, b)`, `a < b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LiftedInterval {
    pub a: i64,
    pub b: i64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Boundary {
    Outer, // p-boundary, clockwise arcs
    Inner, // q-boundary, anticlockwise arcs
}

impl Cover {
    pub fn new(quiver: &Quiver) -> Result<Cover> {
        if quiver.kind != QuiverKind::CycleAtilde {
            return Err(Error::Unsupported(
                "the annulus cover applies to cycle quivers".into(),
            ));
        }
        quiver.validate()?;
        let cw_slots = (1..=quiver.n_arrows())
            .filter(|&i| quiver.is_clockwise(i))
            .collect();
        let acw_slots = (1..=quiver.n_arrows())
            .filter(|&i| !quiver.is_clockwise(i))
            .collect();
        Ok(Cover {
            quiver: quiver.clone(),
            cw_slots,
            acw_slots,
        })
    }

    pub fn n(&self) -> i64 {
        self.quiver.n_vertices as i64
    }

    pub fn p(&self) -> i64 {
        self.cw_slots.len() as i64
    }

    pub fn q(&self) -> i64 {
        self.acw_slots.len() as i64
    }

    /// Cycle vertex covered by line vertex j.
    pub fn vertex_of(&self, j: i64) -> usize {
        ((j - 1).rem_euclid(self.n()) as usize) + 1
    }

    /// Arc slot covered by the edge (j, j+1).
    pub fn arc_of_edge(&self, j: i64) -> usize {
        self.vertex_of(j)
    }

    pub fn edge_rightward(&self, j: i64) -> bool {
        self.quiver.is_clockwise(self.arc_of_edge(j))
    }

    pub fn boundary_of_edge(&self, j: i64) -> Boundary {
        if self.edge_rightward(j) {
            Boundary::Outer
        } else {
            Boundary::Inner
        }
    }

    /// Boundary index of an outer edge; decreases with j, one positive
    /// boundary step per unit.
    pub fn outer_index(&self, j: i64) -> i64 {
        debug_assert!(self.edge_rightward(j));
        let t = (j - 1).div_euclid(self.n());
        let c = self.arc_of_edge(j);
        let r = self.cw_slots.iter().position(|&s| s == c).unwrap() as i64;
        -(t * self.p() + r)
    }

    pub fn outer_edge(&self, idx: i64) -> i64 {
        let t = (-idx).div_euclid(self.p());
        let r = (-idx).rem_euclid(self.p());
        t * self.n() + self.cw_slots[r as usize] as i64
    }

    /// Boundary index of an inner edge; increases with j.
    pub fn inner_index(&self, j: i64) -> i64 {
        debug_assert!(!self.edge_rightward(j));
        let t = (j - 1).div_euclid(self.n());
        let c = self.arc_of_edge(j);
        let r = self.acw_slots.iter().position(|&s| s == c).unwrap() as i64;
        t * self.q() + r
    }

    pub fn inner_edge(&self, idx: i64) -> i64 {
        let t = idx.div_euclid(self.q());
        let r = idx.rem_euclid(self.q());
        t * self.n() + self.acw_slots[r as usize] as i64
    }

    /// Move an edge `steps` marked points in the positive boundary
    /// direction (negative steps move backwards).
    pub fn advance_edge(&self, j: i64, steps: i64) -> i64 {
        match self.boundary_of_edge(j) {
            Boundary::Outer => self.outer_edge(self.outer_index(j) + steps),
            Boundary::Inner => self.inner_edge(self.inner_index(j) + steps),
        }
    }

    /// The canonical string representation of an interval: basis vectors are
    /// the interval's line vertices, arrow maps partial identities.
    pub fn interval_rep(&self, field: Field, iv: LiftedInterval) -> Representation {
        debug_assert!(iv.a < iv.b);
        let nv = self.quiver.n_vertices;
        // Basis at each cycle vertex: its lifts inside the interval, ascending.
        let mut basis: Vec<Vec<i64>> = vec![Vec::new(); nv];
        for j in iv.a..iv.b {
            basis[self.vertex_of(j) - 1].push(j);
        }
        let dims = DimVector(basis.iter().map(|b| b.len()).collect());
        let pos = |x: usize, j: i64| basis[x - 1].iter().position(|&jj| jj == j).unwrap();
        let mut maps: Vec<Mat> = (0..self.quiver.n_arrows())
            .map(|i| {
                let (s, t) = self.quiver.arrows[i];
                Mat::zero(&field, dims.at(t), dims.at(s))
            })
            .collect();
        for j in iv.a..iv.b - 1 {
            // internal edge (j, j+1)
            let slot = self.arc_of_edge(j);
            let (lo, hi) = (self.vertex_of(j), self.vertex_of(j + 1));
            if self.edge_rightward(j) {
                let (r, c) = (pos(hi, j + 1), pos(lo, j));
                maps[slot - 1][(r, c)] = field.one();
            } else {
                let (r, c) = (pos(lo, j), pos(hi, j + 1));
                maps[slot - 1][(r, c)] = field.one();
            }
        }
        Representation {
            quiver: self.quiver.clone(),
            field,
            dims,
            maps,
        }
    }

    /// Dimension vector of an interval.
    pub fn interval_dims(&self, iv: LiftedInterval) -> DimVector {
        let mut d = vec![0usize; self.quiver.n_vertices];
        for j in iv.a..iv.b {
            d[self.vertex_of(j) - 1] += 1;
        }
        DimVector(d)
    }

    /// Recover the interval (up to deck shift) from a dimension vector.
    /// Constant dimension vectors are ambiguous and need the arc slot whose
    /// map fails to be invertible in the module.
    pub fn interval_from_dims(
        &self,
        dims: &DimVector,
        noninvertible_slot: Option<usize>,
    ) -> Result<LiftedInterval> {
        let n = self.quiver.n_vertices;
        let total = dims.total() as i64;
        if total == 0 {
            return Err(Error::Domain("zero module has no interval".into()));
        }
        let start = if let Some(k) = dims.is_constant() {
            if k == 0 {
                return Err(Error::Domain("zero module has no interval".into()));
            }
            let slot = noninvertible_slot.ok_or(Error::NotIndecomposable)?;
            (slot % n) as i64 + 1
        } else {
            let k = dims.total() / n;
            let mut candidates = Vec::new();
            for c in 1..=n {
                let prev = if c == 1 { n } else { c - 1 };
                if dims.at(c) == k + 1 && dims.at(prev) == k {
                    candidates.push(c as i64);
                }
            }
            if candidates.len() != 1 {
                return Err(Error::NotIndecomposable);
            }
            candidates[0]
        };
        let iv = LiftedInterval {
            a: start,
            b: start + total,
        };
        if &self.interval_dims(iv) != dims {
            return Err(Error::NotIndecomposable);
        }
        Ok(iv)
    }

    /// Shift into the deck fundamental domain 1 <= a <= n.
    pub fn normalize_interval(&self, iv: LiftedInterval) -> LiftedInterval {
        let shift = (iv.a - 1).div_euclid(self.n()) * self.n();
        LiftedInterval {
            a: iv.a - shift,
            b: iv.b - shift,
        }
    }
}

impl LiftedInterval {
    // Intervals here are nonempty by construction, so no is_empty pairing.
    pub fn left_edge(&self) -> i64 {
        self.a - 1
    }

    pub fn right_edge(&self) -> i64 {
        self.b - 1
    }

    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> i64 {
        self.b - self.a
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zigzag22() -> Quiver {
        // arcs: 2->1 (acw), 2->3 (cw), 4->3 (acw), 4->1 (cw)
        Quiver::cycle(vec![(2, 1), (2, 3), (4, 3), (4, 1)])
    }

    #[test]
    fn boundary_indices_invert() {
        let cover = Cover::new(&zigzag22()).unwrap();
        for j in -9..9 {
            if cover.edge_rightward(j) {
                assert_eq!(cover.outer_edge(cover.outer_index(j)), j);
            } else {
                assert_eq!(cover.inner_edge(cover.inner_index(j)), j);
            }
        }
        // Deck periodicity: shifting an edge left one full turn adds p or q.
        for j in 0..4i64 {
            if cover.edge_rightward(j) {
                assert_eq!(cover.outer_index(j - 4), cover.outer_index(j) + 2);
            } else {
                assert_eq!(cover.inner_index(j - 4), cover.inner_index(j) - 2);
            }
        }
    }

    #[test]
    fn interval_rep_matches_hand_dims() {
        let cover = Cover::new(&zigzag22()).unwrap();
        let iv = LiftedInterval { a: 1, b: 5 };
        let rep = cover.interval_rep(Field::fp(3), iv);
        assert_eq!(rep.dims, DimVector(vec![1, 1, 1, 1]));
        // all maps nonzero except the slot of the boundary edges (slot 4)
        assert!(!rep.maps[0].is_zero_mat(&Field::fp(3)));
        assert!(!rep.maps[1].is_zero_mat(&Field::fp(3)));
        assert!(!rep.maps[2].is_zero_mat(&Field::fp(3)));
        assert!(rep.maps[3].is_zero_mat(&Field::fp(3)));
    }

    #[test]
    fn interval_recovery_round_trips() {
        let cover = Cover::new(&zigzag22()).unwrap();
        for a in 1..=4i64 {
            for len in 1..=9i64 {
                let iv = LiftedInterval { a, b: a + len };
                let dims = cover.interval_dims(iv);
                let slot = if dims.is_constant().is_some() {
                    Some(cover.arc_of_edge(iv.left_edge()))
                } else {
                    None
                };
                let got = cover.interval_from_dims(&dims, slot).unwrap();
                assert_eq!(cover.normalize_interval(got), cover.normalize_interval(iv));
            }
        }
    }
}
