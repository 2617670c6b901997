//! Shared fixtures: the worked winding, figure-eight and infinite-distance
//! examples, as representations and as level-set zigzag diagrams.

#![allow(dead_code)]

use arcband_core::homology::VertexMap;
use arcband_core::{
    DimVector, Field, Mat, Quiver, Representation, SimplicialComplex, ZigzagDiagram,
};

pub fn kronecker() -> Quiver {
    Quiver::cycle(vec![(1, 2), (1, 2)])
}

/// Two disjoint circles each mapping by degree 1: identity maps on k^2.
pub fn winding_left(f: Field) -> Representation {
    Representation::new(
        &kronecker(),
        f,
        DimVector(vec![2, 2]),
        vec![Mat::identity(&f, 2), Mat::identity(&f, 2)],
    )
    .unwrap()
}

/// One circle winding twice: a swap map and an identity.
pub fn winding_right(f: Field) -> Representation {
    Representation::new(
        &kronecker(),
        f,
        DimVector(vec![2, 2]),
        vec![
            Mat::from_rows_i64(&f, &[vec![0, 1], vec![1, 0]]),
            Mat::identity(&f, 2),
        ],
    )
    .unwrap()
}

/// The hexagonal zigzag cycle: odd vertices are sinks (slab spaces), even
/// vertices sources (fiber spaces).
pub fn hexagon() -> Quiver {
    Quiver::cycle(vec![(2, 1), (2, 3), (4, 3), (4, 5), (6, 5), (6, 1)])
}

/// Figure-eight with both loops wound once.
pub fn fig8_left(f: Field) -> Representation {
    Representation::new(
        &hexagon(),
        f,
        DimVector(vec![1, 2, 2, 2, 2, 2]),
        vec![
            Mat::from_rows_i64(&f, &[vec![1, 1]]),
            Mat::identity(&f, 2),
            Mat::identity(&f, 2),
            Mat::identity(&f, 2),
            Mat::identity(&f, 2),
            Mat::from_rows_i64(&f, &[vec![1, 1]]),
        ],
    )
    .unwrap()
}

/// Figure-eight with one loop wound, the other contractible.
pub fn fig8_right(f: Field) -> Representation {
    Representation::new(
        &hexagon(),
        f,
        DimVector(vec![2, 3, 2, 3, 2, 1]),
        vec![
            Mat::from_rows_i64(&f, &[vec![1, 0, 0], vec![0, 1, 1]]),
            Mat::from_rows_i64(&f, &[vec![1, 1, 0], vec![0, 0, 1]]),
            Mat::from_rows_i64(&f, &[vec![1, 1, 0], vec![0, 0, 1]]),
            Mat::from_rows_i64(&f, &[vec![1, 0, 0], vec![0, 1, 1]]),
            Mat::from_rows_i64(&f, &[vec![1], vec![0]]),
            Mat::from_rows_i64(&f, &[vec![1], vec![0]]),
        ],
    )
    .unwrap()
}

/// Expected summand dimension grids of the two figure-eight modules, in the
/// display order (s1, t1, s2, t2, s3, t3).
pub fn fig8_left_grids() -> Vec<Vec<usize>> {
    vec![vec![0, 1, 1, 1, 1, 1], vec![1, 1, 1, 1, 1, 1]]
}

pub fn fig8_right_grids() -> Vec<Vec<usize>> {
    vec![
        vec![0, 1, 1, 1, 0, 0],
        vec![0, 0, 0, 1, 1, 0],
        vec![1, 1, 0, 0, 0, 0],
        vec![1, 1, 1, 1, 1, 1],
    ]
}

/// The square zigzag cycle of the infinite-distance example.
pub fn zigzag22() -> Quiver {
    Quiver::cycle(vec![(2, 1), (2, 3), (4, 3), (4, 1)])
}

/// The identity circle map: every space a line, every map the identity.
pub fn identity_circle(f: Field) -> Representation {
    Representation::new(
        &zigzag22(),
        f,
        DimVector(vec![1, 1, 1, 1]),
        vec![
            Mat::identity(&f, 1),
            Mat::identity(&f, 1),
            Mat::identity(&f, 1),
            Mat::identity(&f, 1),
        ],
    )
    .unwrap()
}

/// The two-summand module infinitely far from the identity circle.
pub fn two_summand(f: Field) -> Representation {
    Representation::new(
        &zigzag22(),
        f,
        DimVector(vec![1, 2, 1, 1]),
        vec![
            Mat::from_rows_i64(&f, &[vec![1, 1]]),
            Mat::from_rows_i64(&f, &[vec![1, 1]]),
            Mat::identity(&f, 1),
            Mat::identity(&f, 1),
        ],
    )
    .unwrap()
}

fn complex(maximal: &[Vec<usize>]) -> SimplicialComplex {
    SimplicialComplex::from_maximal(maximal).unwrap()
}

fn vmap(pairs: &[(usize, usize)]) -> VertexMap {
    VertexMap(pairs.iter().copied().collect())
}

/// Level-set diagram of two disjoint circles, each mapped by degree one:
/// both fibers are two points, both inclusions the identity.
pub fn winding_left_diagram() -> ZigzagDiagram {
    let two_points = complex(&[vec![0], vec![1]]);
    ZigzagDiagram {
        singular: vec![two_points.clone()],
        regular: vec![two_points.clone()],
        a_maps: vec![vmap(&[(0, 0), (1, 1)])],
        b_maps: vec![vmap(&[(0, 0), (1, 1)])],
    }
}

/// Level-set diagram of the degree-two circle map: passing the singular
/// value swaps the two sheet points.
pub fn winding_right_diagram() -> ZigzagDiagram {
    let two_points = complex(&[vec![0], vec![1]]);
    ZigzagDiagram {
        singular: vec![two_points.clone()],
        regular: vec![two_points.clone()],
        a_maps: vec![vmap(&[(0, 0), (1, 1)])],
        b_maps: vec![vmap(&[(0, 1), (1, 0)])],
    }
}

/// Figure-eight, both loops wound once: three slabs, with the wedge point
/// in the first slab. Loop A runs through vertices 10, 11, 12; loop B
/// through 20, 21, 22; 0 is the wedge.
pub fn fig8_left_diagram() -> ZigzagDiagram {
    let x1 = complex(&[vec![0, 10], vec![0, 20], vec![0, 11], vec![0, 21]]);
    let x2 = complex(&[vec![11, 12], vec![21, 22]]);
    let x3 = complex(&[vec![12, 10], vec![22, 20]]);
    let r1 = complex(&[vec![10], vec![20]]);
    let r2 = complex(&[vec![11], vec![21]]);
    let r3 = complex(&[vec![12], vec![22]]);
    ZigzagDiagram {
        singular: vec![x1, x2, x3],
        regular: vec![r1, r2, r3],
        a_maps: vec![
            vmap(&[(10, 10), (20, 20)]),
            vmap(&[(11, 11), (21, 21)]),
            vmap(&[(12, 12), (22, 22)]),
        ],
        b_maps: vec![
            vmap(&[(10, 10), (20, 20)]),
            vmap(&[(11, 11), (21, 21)]),
            vmap(&[(12, 12), (22, 22)]),
        ],
    }
}

/// Figure-eight with loop A wound and loop B contractible: B turns around
/// inside the first and third slabs and passes the wedge (vertex 0) in the
/// second. Strands of B use vertices 2x and 3x.
pub fn fig8_right_diagram() -> ZigzagDiagram {
    let x1 = complex(&[vec![10, 11], vec![21, 31]]);
    let x2 = complex(&[vec![11, 0], vec![0, 12], vec![21, 0], vec![0, 22], vec![31, 32]]);
    let x3 = complex(&[vec![12, 10], vec![22, 32]]);
    let r1 = complex(&[vec![10]]);
    let r2 = complex(&[vec![11], vec![21], vec![31]]);
    let r3 = complex(&[vec![12], vec![22], vec![32]]);
    ZigzagDiagram {
        singular: vec![x1, x2, x3],
        regular: vec![r1, r2, r3],
        a_maps: vec![
            vmap(&[(10, 10)]),
            vmap(&[(11, 11), (21, 21), (31, 31)]),
            vmap(&[(12, 12), (22, 22), (32, 32)]),
        ],
        b_maps: vec![
            vmap(&[(10, 10)]),
            vmap(&[(11, 11), (21, 21), (31, 31)]),
            vmap(&[(12, 12), (22, 22), (32, 32)]),
        ],
    }
}

/// A single point mapped around the circle once.
pub fn point_diagram() -> ZigzagDiagram {
    let point = complex(&[vec![0]]);
    ZigzagDiagram {
        singular: vec![point.clone()],
        regular: vec![point.clone()],
        a_maps: vec![vmap(&[(0, 0)])],
        b_maps: vec![vmap(&[(0, 0)])],
    }
}

/// The triangle zigzag quiver A~_{1,2}.
pub fn tilde12() -> Quiver {
    // arcs: 1-2 clockwise, 2-3 anticlockwise, 3-1 anticlockwise
    Quiver::cycle(vec![(1, 2), (3, 2), (1, 3)])
}
