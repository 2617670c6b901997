//! Decomposition of persistence modules of type A and type A-tilde
//! (circle-valued persistence) into indecomposables, barcodes as arcs and
//! bands on the disc/annulus geometric model, and the bottleneck distance
//! between barcodes, which by the isometry theorem computes the interleaving
//! distance. Includes an independent brute-force interleaving oracle and a
//! level-set ingestion pipeline from simplicial zigzag diagrams.

pub mod barcode;
pub mod error;
pub mod exactnum;
pub mod geom;
pub mod homology;
pub mod linrep;
pub mod quiver;
pub mod random;

pub use barcode::{
    barcode, bottleneck, bottleneck_report, brute_force_interleaved, delta_matched,
    interleaving_distance, Barcode, BottleneckReport, ExtDistance, OracleConfig,
};
pub use error::{Error, Result};
pub use exactnum::{Field, Mat, Poly, Scalar};
pub use geom::{classify, string_module, band_module, GeomObject, Model, Tag, TubeKind};
pub use homology::{levelset_representation, SimplicialComplex, ZigzagDiagram};
pub use linrep::{
    ar_translate, decompose, direct_sum, hom_space, is_isomorphic, Decomposition, Direction,
    Morphism, Representation,
};
pub use quiver::{DimVector, Quiver, QuiverKind};
