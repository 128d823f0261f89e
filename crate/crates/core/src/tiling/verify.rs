use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use serde::Serialize;

use super::{delta_of, generate::Patch, Rhombohedron, TileType};
use crate::exactlin::GVec3;
use crate::quasilattice::{star, Quasilattice};
use crate::symmetry::canonicalize;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    /// Check (a): a vertex outside the quasilattice `R`.
    VertexNotInR { tile: usize, vertex: usize },
    /// Check (b): an edge that is not `±Vᵢ`.
    EdgeNotInStar { tile: usize, edge: usize },
    /// Check (c): the tile cannot be carried to a canonical one.
    NotCanonicalizable { tile: usize, reason: String },
    /// Check (c): the canonicalizing translation is outside `R`.
    TranslationNotInR { tile: usize },
    /// Check (d): two tiles meet in something that is not a common face.
    NotFaceToFace { a: usize, b: usize, shared: usize },
    /// Two tiles with the same vertex set.
    DuplicateTile { a: usize, b: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::VertexNotInR { tile, vertex } => {
                write!(f, "tile {tile}: vertex {vertex} is not in R")
            }
            Violation::EdgeNotInStar { tile, edge } => {
                write!(f, "tile {tile}: edge {edge} is not a star vector")
            }
            Violation::NotCanonicalizable { tile, reason } => {
                write!(f, "tile {tile}: not canonicalizable ({reason})")
            }
            Violation::TranslationNotInR { tile } => {
                write!(f, "tile {tile}: canonicalizing translation is not in R")
            }
            Violation::NotFaceToFace { a, b, shared } => {
                write!(f, "tiles {a} and {b} share {shared} vertices that do not form a common face")
            }
            Violation::DuplicateTile { a, b } => write!(f, "tiles {a} and {b} coincide"),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub tiles: usize,
    pub distinct_vertices: usize,
    pub touching_pairs: usize,
    pub violations: Vec<Violation>,
}

impl VerifyReport {
    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Whether a set of vertex indices (0..8) of a parallelepiped is a face:
/// a vertex, an edge or a facet.
fn is_face(indices: &[usize]) -> bool {
    let k = match indices.len() {
        1 => 0,
        2 => 1,
        4 => 2,
        _ => return false,
    };
    let deltas: Vec<[bool; 3]> = indices.iter().map(|&i| delta_of(i)).collect();
    let fixed = (0..3)
        .filter(|&c| deltas.iter().all(|d| d[c] == deltas[0][c]))
        .count();
    // distinct δs with exactly 3 - k fixed coordinates span the full k-face
    fixed == 3 - k
}

/// Exact audit of a patch: vertices in `R`, edges in the star, every tile
/// canonicalizable with translation in `R`, and face-to-face contacts.
pub fn verify_patch(patch: &Patch) -> VerifyReport {
    let s = star();
    let r = Quasilattice::r();
    let mut report = VerifyReport {
        tiles: patch.tiles.len(),
        ..Default::default()
    };
    let mut in_r: HashMap<GVec3, bool> = HashMap::new();
    let mut incidence: HashMap<GVec3, Vec<(usize, usize)>> = HashMap::new();

    for (ti, tile) in patch.tiles.iter().enumerate() {
        for (vi, v) in tile.vertices().into_iter().enumerate() {
            let ok = *in_r.entry(v.clone()).or_insert_with(|| r.contains(&v));
            if !ok {
                report.violations.push(Violation::VertexNotInR { tile: ti, vertex: vi });
            }
            incidence.entry(v).or_default().push((ti, vi));
        }
        for (ei, e) in tile.edges.iter().enumerate() {
            if s.signed_v_index(e).is_none() {
                report.violations.push(Violation::EdgeNotInStar { tile: ti, edge: ei });
            }
        }
        match canonicalize(tile) {
            Ok(c) => {
                if !r.contains(&c.motion.t) {
                    report.violations.push(Violation::TranslationNotInR { tile: ti });
                }
            }
            Err(e) => report.violations.push(Violation::NotCanonicalizable {
                tile: ti,
                reason: e.to_string(),
            }),
        }
    }
    report.distinct_vertices = incidence.len();

    // shared vertex indices per touching pair, recorded on both sides
    let mut shared: BTreeMap<(usize, usize), (Vec<usize>, Vec<usize>)> = BTreeMap::new();
    for list in incidence.values() {
        for (x, &(ta, va)) in list.iter().enumerate() {
            for &(tb, vb) in &list[x + 1..] {
                if ta == tb {
                    continue;
                }
                let (key, pa, pb) = if ta < tb { ((ta, tb), va, vb) } else { ((tb, ta), vb, va) };
                let e = shared.entry(key).or_default();
                e.0.push(pa);
                e.1.push(pb);
            }
        }
    }
    report.touching_pairs = shared.len();
    for ((a, b), (ia, ib)) in shared {
        if ia.len() == 8 {
            report.violations.push(Violation::DuplicateTile { a, b });
        } else if !is_face(&ia) || !is_face(&ib) {
            report.violations.push(Violation::NotFaceToFace {
                a,
                b,
                shared: ia.len(),
            });
        }
    }
    report
}

/// How many tiles contain each facet (keyed by its sorted vertex quadruple).
pub fn facet_incidence(tiles: &[Rhombohedron]) -> BTreeMap<Vec<GVec3>, usize> {
    const FACETS: [[usize; 4]; 6] = [
        [0, 1, 2, 3],
        [4, 5, 6, 7],
        [0, 1, 4, 5],
        [2, 3, 6, 7],
        [0, 2, 4, 6],
        [1, 3, 5, 7],
    ];
    let mut out = BTreeMap::new();
    for t in tiles {
        let vs = t.vertices();
        for f in FACETS {
            let key: BTreeSet<GVec3> = f.iter().map(|&i| vs[i].clone()).collect();
            *out.entry(key.into_iter().collect()).or_insert(0) += 1;
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PatchStats {
    pub oblate: usize,
    pub prolate: usize,
    pub invalid: usize,
    /// `prolate / oblate`; infinite when there are no oblate tiles.
    pub ratio: f64,
}

pub fn stats(patch: &Patch) -> PatchStats {
    stats_of(&patch.tiles)
}

pub fn stats_of(tiles: &[Rhombohedron]) -> PatchStats {
    let (mut oblate, mut prolate, mut invalid) = (0, 0, 0);
    for t in tiles {
        match t.classify() {
            Ok(TileType::Oblate) => oblate += 1,
            Ok(TileType::Prolate) => prolate += 1,
            Err(_) => invalid += 1,
        }
    }
    let ratio = if oblate == 0 {
        f64::INFINITY
    } else {
        prolate as f64 / oblate as f64
    };
    PatchStats {
        oblate,
        prolate,
        invalid,
        ratio,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn faces_of_a_cube() {
        assert!(is_face(&[3]));
        assert!(is_face(&[0, 4]));
        assert!(!is_face(&[0, 3]));
        assert!(is_face(&[0, 1, 2, 3]));
        assert!(!is_face(&[0, 1, 2, 4]));
        assert!(!is_face(&[0, 1, 2]));
        assert!(!is_face(&[0, 3, 5, 6]));
    }

    #[test]
    fn counts_by_type() {
        let tiles = vec![Rhombohedron::oblate_canonical(), Rhombohedron::prolate_canonical()];
        let st = stats_of(&tiles);
        assert_eq!((st.oblate, st.prolate), (1, 1));
        assert_eq!(st.ratio, 1.0);
        let st = stats_of(&tiles[1..]);
        assert!(st.ratio.is_infinite());
    }
}
