//! Quivers of type A_n (a path) and type A~_{p,q} (a non-cyclically
//! oriented cycle), dimension vectors, the Euler form and the defect.
//!
//! Vertices are 1-indexed. Edge slots are positional: for a path on n
//! vertices, edge i joins vertices i and i+1 (i = 1..n-1); for a cycle,
//! edge i joins i and i+1 cyclically (i = 1..n, edge n joining n and 1).
//! Each arrow must be an orientation of its slot's edge; an arrow directed
//! i -> i+1 (cyclically) counts as clockwise, the reverse as anticlockwise.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum QuiverKind {
    LineA,
    CycleAtilde,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Quiver {
    pub kind: QuiverKind,
    pub n_vertices: usize,
    /// (source, target) per edge slot, in slot order.
    pub arrows: Vec<(usize, usize)>,
}

/// Vertex-indexed list of non-negative integers.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DimVector(pub Vec<usize>);

impl DimVector {
    pub fn zero(n: usize) -> DimVector {
        DimVector(vec![0; n])
    }

    pub fn ones(n: usize) -> DimVector {
        DimVector(vec![1; n])
    }

    pub fn unit(n: usize, vertex: usize) -> DimVector {
        let mut d = DimVector::zero(n);
        d.0[vertex - 1] = 1;
        d
    }

    /// Dimension at a 1-indexed vertex.
    pub fn at(&self, vertex: usize) -> usize {
        self.0[vertex - 1]
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn add(&self, other: &DimVector) -> DimVector {
        DimVector(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    pub fn is_constant(&self) -> Option<usize> {
        let k = *self.0.first()?;
        self.0.iter().all(|&d| d == k).then_some(k)
    }
}

impl Quiver {
    pub fn line(arrows: Vec<(usize, usize)>) -> Quiver {
        Quiver {
            kind: QuiverKind::LineA,
            n_vertices: arrows.len() + 1,
            arrows,
        }
    }

    /// The equioriented path 1 -> 2 -> ... -> n.
    pub fn line_equioriented(n: usize) -> Quiver {
        Quiver::line((1..n).map(|i| (i, i + 1)).collect())
    }

    pub fn cycle(arrows: Vec<(usize, usize)>) -> Quiver {
        Quiver {
            kind: QuiverKind::CycleAtilde,
            n_vertices: arrows.len(),
            arrows,
        }
    }

    pub fn n_arrows(&self) -> usize {
        self.arrows.len()
    }

    /// The unordered pair of vertices edge slot `i` (1-indexed) must join.
    fn slot_endpoints(&self, i: usize) -> (usize, usize) {
        match self.kind {
            QuiverKind::LineA => (i, i + 1),
            QuiverKind::CycleAtilde => (i, if i == self.n_vertices { 1 } else { i + 1 }),
        }
    }

    /// Whether the arrow in slot `i` (1-indexed) points i -> i+1 cyclically.
    pub fn is_clockwise(&self, i: usize) -> bool {
        let (a, _) = self.slot_endpoints(i);
        self.arrows[i - 1].0 == a
    }

    pub fn clockwise_count(&self) -> usize {
        (1..=self.n_arrows()).filter(|&i| self.is_clockwise(i)).count()
    }

    pub fn anticlockwise_count(&self) -> usize {
        self.n_arrows() - self.clockwise_count()
    }

    pub fn validate(&self) -> Result<()> {
        let n = self.n_vertices;
        match self.kind {
            QuiverKind::LineA => {
                if n < 1 || self.arrows.len() != n - 1 {
                    return Err(Error::MalformedQuiver(format!(
                        "a path on {n} vertices needs {} arrows, got {}",
                        n.saturating_sub(1),
                        self.arrows.len()
                    )));
                }
            }
            QuiverKind::CycleAtilde => {
                if n < 2 || self.arrows.len() != n {
                    return Err(Error::MalformedQuiver(format!(
                        "a cycle on {n} vertices needs {n} arrows, got {}",
                        self.arrows.len()
                    )));
                }
            }
        }
        for (i, &(s, t)) in self.arrows.iter().enumerate() {
            let slot = i + 1;
            let (a, b) = self.slot_endpoints(slot);
            if !(s == a && t == b || s == b && t == a) {
                return Err(Error::MalformedQuiver(format!(
                    "arrow {slot} is ({s},{t}) but its edge joins {a} and {b}"
                )));
            }
            if s == t {
                return Err(Error::MalformedQuiver(format!("arrow {slot} is a loop")));
            }
        }
        if self.kind == QuiverKind::CycleAtilde {
            let p = self.clockwise_count();
            if p == 0 || p == self.n_arrows() {
                return Err(Error::CyclicOrientation);
            }
        }
        Ok(())
    }

    /// Number of clockwise arrows; marked points on the p-boundary.
    pub fn p(&self) -> usize {
        debug_assert_eq!(self.kind, QuiverKind::CycleAtilde);
        self.clockwise_count()
    }

    /// Number of anticlockwise arrows; marked points on the q-boundary.
    pub fn q(&self) -> usize {
        debug_assert_eq!(self.kind, QuiverKind::CycleAtilde);
        self.anticlockwise_count()
    }

    pub fn is_equioriented_line(&self) -> bool {
        self.kind == QuiverKind::LineA && self.arrows.iter().enumerate().all(|(i, a)| *a == (i + 1, i + 2))
    }

    /// Euler form <d1, d2> = sum_x d1_x d2_x - sum_{x->y} d1_x d2_y.
    pub fn euler_form(&self, d1: &DimVector, d2: &DimVector) -> Result<i64> {
        if d1.0.len() != self.n_vertices || d2.0.len() != self.n_vertices {
            return Err(Error::Dimension(format!(
                "dimension vectors must have length {}",
                self.n_vertices
            )));
        }
        let mut acc: i64 = 0;
        for x in 1..=self.n_vertices {
            acc += (d1.at(x) * d2.at(x)) as i64;
        }
        for &(s, t) in &self.arrows {
            acc -= (d1.at(s) * d2.at(t)) as i64;
        }
        Ok(acc)
    }

    /// Defect <delta, d> against the all-ones null root. Indecomposable
    /// projectives come out negative, injectives positive, regulars zero.
    pub fn defect(&self, d: &DimVector) -> Result<i64> {
        if self.kind != QuiverKind::CycleAtilde {
            return Err(Error::Unsupported(
                "defect is defined for cycle quivers only".into(),
            ));
        }
        self.euler_form(&DimVector::ones(self.n_vertices), d)
    }

    /// Number of paths from x to y, for projective dimension vectors.
    pub fn path_count(&self, x: usize, y: usize) -> usize {
        // The quivers here are acyclic digraphs; count by DFS with memo.
        fn go(q: &Quiver, x: usize, y: usize, memo: &mut Vec<Option<usize>>) -> usize {
            if x == y {
                return 1;
            }
            if let Some(v) = memo[x - 1] {
                return v;
            }
            let mut total = 0;
            for &(s, t) in &q.arrows {
                if s == x {
                    total += go(q, t, y, memo);
                }
            }
            memo[x - 1] = Some(total);
            total
        }
        go(self, x, y, &mut vec![None; self.n_vertices])
    }

    /// Dimension vector of the indecomposable projective at `x`.
    pub fn projective_dims(&self, x: usize) -> DimVector {
        DimVector((1..=self.n_vertices).map(|y| self.path_count(x, y)).collect())
    }

    /// Dimension vector of the indecomposable injective at `x`.
    pub fn injective_dims(&self, x: usize) -> DimVector {
        DimVector((1..=self.n_vertices).map(|y| self.path_count(y, x)).collect())
    }

    pub fn opposite(&self) -> Quiver {
        Quiver {
            kind: self.kind,
            n_vertices: self.n_vertices,
            arrows: self.arrows.iter().map(|&(s, t)| (t, s)).collect(),
        }
    }
}
