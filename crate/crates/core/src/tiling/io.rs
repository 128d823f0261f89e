//! Patch JSON and Wavefront OBJ export.

use std::fmt::Write as _;
use std::io::{Read, Write};

use serde::{Deserialize, Serialize};

use super::generate::{Patch, PatchConfig};
use super::{Rhombohedron, TileType};
use crate::error::{Error, Result};
use crate::exactlin::GVec3;

#[derive(Serialize, Deserialize)]
struct TileRecord {
    lattice_origin: [i64; 6],
    axis_triple: [usize; 3],
    anchor: GVec3,
    edges: [GVec3; 3],
    #[serde(rename = "type")]
    tile_type: TileType,
}

#[derive(Serialize, Deserialize)]
struct PatchRecord {
    provenance: String,
    config: PatchConfig,
    tiles: Vec<TileRecord>,
}

impl Serialize for Patch {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let tiles = self
            .tiles
            .iter()
            .enumerate()
            .map(|(i, t)| {
                let tile_type = t.classify().map_err(|e| {
                    serde::ser::Error::custom(format!("tile {i} cannot be serialized: {e}"))
                })?;
                Ok(TileRecord {
                    lattice_origin: t.lattice_origin,
                    axis_triple: t.axis_triple,
                    anchor: t.anchor.clone(),
                    edges: t.edges.clone(),
                    tile_type,
                })
            })
            .collect::<std::result::Result<Vec<_>, S::Error>>()?;
        PatchRecord {
            provenance: self.provenance.clone(),
            config: self.config.clone(),
            tiles,
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Patch {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let rec = PatchRecord::deserialize(d)?;
        let mut tiles = Vec::with_capacity(rec.tiles.len());
        for (i, t) in rec.tiles.into_iter().enumerate() {
            let tile = Rhombohedron {
                anchor: t.anchor,
                edges: t.edges,
                lattice_origin: t.lattice_origin,
                axis_triple: t.axis_triple,
            };
            // malformed tiles load as-is so that `verify` can report them
            if let Ok(kind) = tile.classify() {
                if kind != t.tile_type {
                    return Err(serde::de::Error::custom(format!(
                        "tile {i} is declared {} but its volume says {kind}",
                        t.tile_type
                    )));
                }
            }
            tiles.push(tile);
        }
        Ok(Patch {
            tiles,
            config: rec.config,
            provenance: rec.provenance,
        })
    }
}

pub fn write_patch<W: Write>(patch: &Patch, mut out: W) -> Result<()> {
    serde_json::to_writer_pretty(&mut out, patch)?;
    out.write_all(b"\n")?;
    Ok(())
}

pub fn read_patch<R: Read>(input: R) -> Result<Patch> {
    serde_json::from_reader(input).map_err(Error::from)
}

/// One object per tile: 8 vertices, 6 quads, outward-oriented.
pub fn to_obj(patch: &Patch) -> String {
    // δ-indexed quads, counter-clockwise seen from outside when det > 0
    const QUADS: [[usize; 4]; 6] = [
        [0, 1, 3, 2],
        [4, 6, 7, 5],
        [0, 4, 5, 1],
        [2, 3, 7, 6],
        [0, 2, 6, 4],
        [1, 5, 7, 3],
    ];
    let mut s = String::new();
    let _ = writeln!(s, "# {}", patch.provenance);
    let _ = writeln!(s, "# {} tiles", patch.tiles.len());
    for (i, t) in patch.tiles.iter().enumerate() {
        let name = match t.classify() {
            Ok(k) => k.to_string(),
            Err(_) => "invalid".to_string(),
        };
        let _ = writeln!(s, "o {name}_{i}");
        for v in t.vertices() {
            let [x, y, z] = v.to_f64();
            let _ = writeln!(s, "v {x:.9} {y:.9} {z:.9}");
        }
        let base = 8 * i + 1;
        let flip = t.det().is_negative();
        for q in QUADS {
            let mut idx = q.map(|k| k + base);
            if flip {
                idx.reverse();
            }
            let _ = writeln!(s, "f {} {} {} {}", idx[0], idx[1], idx[2], idx[3]);
        }
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn obj_counts() {
        let patch = Patch {
            tiles: vec![Rhombohedron::oblate_canonical(), Rhombohedron::prolate_canonical()],
            config: PatchConfig::parse("1", ["0", "0", "0"]).unwrap(),
            provenance: "test".into(),
        };
        let obj = to_obj(&patch);
        assert_eq!(obj.lines().filter(|l| l.starts_with("v ")).count(), 16);
        assert_eq!(obj.lines().filter(|l| l.starts_with("f ")).count(), 12);
        assert!(obj.contains("o oblate_0"));
        assert!(obj.contains("o prolate_1"));
    }

    #[test]
    fn type_mismatch_is_rejected() {
        let patch = Patch {
            tiles: vec![Rhombohedron::oblate_canonical()],
            config: PatchConfig::parse("1", ["0", "0", "0"]).unwrap(),
            provenance: "test".into(),
        };
        let json = serde_json::to_string(&patch).unwrap();
        assert!(json.contains("\"type\":\"oblate\""));
        let tampered = json.replace("\"oblate\"", "\"prolate\"");
        assert!(serde_json::from_str::<Patch>(&tampered).is_err());
        let back: Patch = serde_json::from_str(&json).unwrap();
        assert_eq!(back, patch);
    }
}
