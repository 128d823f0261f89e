//! Golden rhombohedra and finite tiling patches.
//!
//! Patches are produced by cut-and-project from ℤ⁶: a lattice point is a
//! vertex when its internal-space image (the Galois-conjugate star) falls
//! strictly inside the rhombic triacontahedron window, and a 3-face of ℤ⁶ is
//! a tile when all eight of its vertices are.

mod generate;
mod io;
mod verify;
mod window;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactlin::{det3, GVec3};
use crate::golden::GoldenRational;
use crate::quasilattice::star;

pub use generate::{accept, generate_patch, Patch, PatchConfig, GENERATOR_VERSION};
pub use io::{read_patch, to_obj, write_patch};
pub use verify::{facet_incidence, stats, stats_of, verify_patch, PatchStats, VerifyReport, Violation};
pub use window::{internal_star, window, HalfSpace};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TileType {
    Oblate,
    Prolate,
}

impl fmt::Display for TileType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TileType::Oblate => write!(f, "oblate"),
            TileType::Prolate => write!(f, "prolate"),
        }
    }
}

/// `|det|` of the prolate edge triple, `2/φ = 2φ - 2`.
pub fn prolate_volume() -> GoldenRational {
    GoldenRational::from_ints(-2, 2)
}

/// `|det|` of the oblate edge triple, `2/φ² = 4 - 2φ`.
pub fn oblate_volume() -> GoldenRational {
    GoldenRational::from_ints(4, -2)
}

/// Classifies an edge triple by the absolute value of its determinant.
pub fn classify_edges(edges: &[GVec3; 3]) -> Result<TileType> {
    let vol = det3(&edges[0], &edges[1], &edges[2]).abs();
    if vol == prolate_volume() {
        Ok(TileType::Prolate)
    } else if vol == oblate_volume() {
        Ok(TileType::Oblate)
    } else {
        Err(Error::InvalidTile(format!("|det| = {vol} is not 2/φ or 2/φ²")))
    }
}

/// A parallelepiped tile: `anchor + Σ δₖ edgesₖ`, `δ ∈ {0,1}³`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Rhombohedron {
    pub anchor: GVec3,
    pub edges: [GVec3; 3],
    /// ℤ⁶ point the tile was lifted from (zero for hand-built tiles).
    pub lattice_origin: [i64; 6],
    /// 1-based star indices of the edges.
    pub axis_triple: [usize; 3],
}

impl Rhombohedron {
    pub fn new(anchor: GVec3, edges: [GVec3; 3]) -> Self {
        let s = star();
        let axis_triple = edges.clone().map(|e| s.signed_v_index(&e).map_or(0, |i| i % 6 + 1));
        Rhombohedron {
            anchor,
            edges,
            lattice_origin: [0; 6],
            axis_triple,
        }
    }

    /// The oblate tile with edges `V₄, V₅, V₆` at the origin.
    pub fn oblate_canonical() -> Self {
        let v = &star().v;
        Rhombohedron::new(GVec3::zero(), [v[3].clone(), v[4].clone(), v[5].clone()])
    }

    /// The prolate tile with edges `V₁, V₂, V₃` at the origin.
    pub fn prolate_canonical() -> Self {
        let v = &star().v;
        Rhombohedron::new(GVec3::zero(), [v[0].clone(), v[1].clone(), v[2].clone()])
    }

    pub fn canonical(kind: TileType) -> Self {
        match kind {
            TileType::Oblate => Rhombohedron::oblate_canonical(),
            TileType::Prolate => Rhombohedron::prolate_canonical(),
        }
    }

    /// Vertex for `δ = (δ₁, δ₂, δ₃)`.
    pub fn vertex(&self, delta: [bool; 3]) -> GVec3 {
        let mut p = self.anchor.clone();
        for (d, e) in delta.iter().zip(&self.edges) {
            if *d {
                p = &p + e;
            }
        }
        p
    }

    /// The eight vertices, `δ` in lexicographic order with `δ₁` most significant.
    pub fn vertices(&self) -> [GVec3; 8] {
        std::array::from_fn(|i| self.vertex(delta_of(i)))
    }

    pub fn det(&self) -> GoldenRational {
        det3(&self.edges[0], &self.edges[1], &self.edges[2])
    }

    pub fn classify(&self) -> Result<TileType> {
        classify_edges(&self.edges)
    }

    pub fn translated(&self, t: &GVec3) -> Self {
        Rhombohedron {
            anchor: &self.anchor + t,
            ..self.clone()
        }
    }
}

/// `δ` for vertex index `i` (`δ₁` is bit 2).
pub fn delta_of(i: usize) -> [bool; 3] {
    [i & 4 != 0, i & 2 != 0, i & 1 != 0]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_volumes() {
        let s = star();
        assert_eq!(det3(&s.v[0], &s.v[1], &s.v[2]), GoldenRational::from_ints(-2, 2));
        assert_eq!(det3(&s.v[3], &s.v[4], &s.v[5]), GoldenRational::from_ints(4, -2));
        assert_eq!(Rhombohedron::oblate_canonical().classify().unwrap(), TileType::Oblate);
        assert_eq!(Rhombohedron::prolate_canonical().classify().unwrap(), TileType::Prolate);
    }

    #[test]
    fn classification_ignores_edge_order() {
        let s = star();
        let e = [s.v[2].clone(), s.v[0].clone(), -&s.v[1]];
        assert_eq!(classify_edges(&e).unwrap(), TileType::Prolate);
    }

    #[test]
    fn degenerate_triple_is_invalid() {
        let s = star();
        let e = [s.v[0].clone(), s.v[0].clone(), s.v[1].clone()];
        assert!(matches!(classify_edges(&e), Err(Error::InvalidTile(_))));
    }

    #[test]
    fn vertices_are_distinct() {
        let t = Rhombohedron::oblate_canonical();
        let vs: std::collections::BTreeSet<_> = t.vertices().into_iter().collect();
        assert_eq!(vs.len(), 8);
        assert_eq!(t.axis_triple, [4, 5, 6]);
    }
}
