//! Exact golden-field geometry for icosahedral rhombohedral tilings.
//!
//! The crate generates finite patches of the two-tile (oblate/prolate golden
//! rhombohedra) icosahedral tiling by cut-and-project, validates them exactly,
//! and computes for every tile the data of the nonrational Delzant
//! construction: facet normals in the quasilattice `Q`, the group `N` and its
//! discrete quotient, level-set radii, vertex chart groups and the volume
//! invariants that separate the two tile types.

pub mod cli;
pub mod delzant;
pub mod error;
pub mod exactlin;
pub mod golden;
pub mod quasilattice;
pub mod symmetry;
pub mod tiling;

pub use delzant::{compare, delzant, invariants, transport, DelzantResult, InvariantRecord, Verdict};
pub use error::{Error, GoldenError, Result};
pub use exactlin::{det3, solve, GMat, GVec, GVec3, GVec6, Solution};
pub use golden::GoldenRational;
pub use quasilattice::{star, IntCombination, LatticeTag, Quasilattice, StarData};
pub use symmetry::{canonicalize, group, Canonicalization, IcosahedralGroup, Isometry, RigidMotion};
pub use tiling::{Patch, PatchConfig, Rhombohedron, TileType};
