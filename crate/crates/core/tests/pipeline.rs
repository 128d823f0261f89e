//! Patch generation, audit, serialization and per-tile Delzant data.

use std::sync::OnceLock;

use quasitile::delzant::{self, halfspace_rep, level_radii, reconstruct_polytope, transport};
use quasitile::tiling::{facet_incidence, read_patch, stats, to_obj, verify_patch, write_patch};
use quasitile::{canonicalize, group, GVec3, Patch, PatchConfig, Quasilattice, Rhombohedron, RigidMotion, TileType};

const SHIFT: [&str; 3] = ["1/70", "1/110", "1/130"];

fn patch() -> &'static Patch {
    static P: OnceLock<Patch> = OnceLock::new();
    P.get_or_init(|| quasitile::tiling::generate_patch(&PatchConfig::parse("3", SHIFT).unwrap()).unwrap())
}

fn sorted(mut v: Vec<GVec3>) -> Vec<GVec3> {
    v.sort();
    v
}

#[test]
fn small_patch_is_clean() {
    let p = patch();
    let st = stats(p);
    assert!(st.oblate > 0 && st.prolate > 0, "{st:?}");
    assert_eq!(st.invalid, 0);
    let report = verify_patch(p);
    assert!(report.is_clean(), "{:?}", report.violations);
    assert!(facet_incidence(&p.tiles).values().all(|&n| n <= 2));
}

#[test]
fn json_round_trip() {
    let p = patch();
    let mut buf = Vec::new();
    write_patch(p, &mut buf).unwrap();
    let back = read_patch(buf.as_slice()).unwrap();
    assert_eq!(&back, p);
    let mut again = Vec::new();
    write_patch(&back, &mut again).unwrap();
    assert_eq!(buf, again);
}

#[test]
fn obj_has_eight_vertices_and_six_faces_per_tile() {
    let p = patch();
    let obj = to_obj(p);
    let n = p.tiles.len();
    assert_eq!(obj.lines().filter(|l| l.starts_with("v ")).count(), 8 * n);
    assert_eq!(obj.lines().filter(|l| l.starts_with("f ")).count(), 6 * n);
}

#[test]
fn tampered_vertex_is_reported() {
    let mut p = patch().clone();
    let half = quasitile::GoldenRational::from_ratios(1, 2, 0, 1);
    let off: GVec3 = quasitile::GVec([half.clone(), quasitile::GoldenRational::zero(), quasitile::GoldenRational::zero()]);
    p.tiles[0] = p.tiles[0].translated(&off);
    let report = verify_patch(&p);
    assert!(!report.is_clean());
}

#[test]
fn every_tile_satisfies_its_inequalities() {
    for tile in &patch().tiles {
        let rep = halfspace_rep(tile).unwrap();
        for v in tile.vertices() {
            assert!(rep.contains(&v));
            assert_eq!(rep.active(&v).len(), 3, "vertex {v}");
        }
        let rebuilt = sorted(reconstruct_polytope(&rep).unwrap().to_vec());
        assert_eq!(rebuilt, sorted(tile.vertices().to_vec()));
        let kernel = delzant::kernel_basis(&rep).unwrap();
        for k in &kernel {
            assert!(rep.apply_pi(k).is_zero());
        }
        assert_eq!(rep.pi().rank(), 3);
    }
}

#[test]
fn gamma_generators_project_into_q() {
    for tile in patch().tiles.iter().take(20) {
        let rep = halfspace_rep(tile).unwrap();
        let n = delzant::group_n(&rep).unwrap();
        for x in &n.gamma_generators {
            assert!(Quasilattice::q().contains(&rep.apply_pi(x)));
        }
    }
}

#[test]
fn translation_changes_only_offsets() {
    let t = Quasilattice::r().generators[2].clone() + Quasilattice::r().generators[4].clone();
    for tile in [Rhombohedron::oblate_canonical(), Rhombohedron::prolate_canonical(), patch().tiles[5].clone()] {
        let a = delzant::delzant(&tile).unwrap();
        let b = delzant::delzant(&tile.translated(&t)).unwrap();
        assert_eq!(a.rep.normals, b.rep.normals);
        assert_eq!(a.ndesc, b.ndesc);
        assert_eq!(a.radii_sq, b.radii_sq);
        assert_eq!(a.invariants, b.invariants);
        for (ca, cb) in a.chart_groups.iter().zip(&b.chart_groups) {
            assert_eq!(ca.generators, cb.generators);
            assert_eq!(&ca.vertex + &t, cb.vertex);
        }
        for j in 0..6 {
            assert_eq!(b.rep.offsets[j], &a.rep.offsets[j] + &t.dot(&a.rep.normals[j]));
        }
    }
}

#[test]
fn every_tile_transports_to_its_canonical_data() {
    let canon = |k: TileType| {
        let rep = halfspace_rep(&Rhombohedron::canonical(k)).unwrap();
        (delzant::group_n(&rep).unwrap(), level_radii(&rep).unwrap(), rep)
    };
    let (nb, rb, repb) = canon(TileType::Oblate);
    let (nr, rr, repr) = canon(TileType::Prolate);
    for tile in &patch().tiles {
        let tr = transport(tile).unwrap();
        let (n, r, rep) = match tr.canonicalization.tile_type {
            TileType::Oblate => (&nb, &rb, &repb),
            TileType::Prolate => (&nr, &rr, &repr),
        };
        assert_eq!(&tr.ndesc, n);
        assert_eq!(&tr.radii_sq, r);
        let t = &tr.canonicalization.motion.t;
        let g = &tr.canonicalization.motion.g;
        for j in 0..6 {
            assert_eq!(g.apply(&tr.rep.normals[j]), rep.normals[j]);
            // support values shift by the translation after the isometry
            assert_eq!(rep.offsets[j], &tr.rep.offsets[j] + &t.dot(&rep.normals[j]));
        }
    }
}

#[test]
fn icosahedral_images_of_canonical_tiles() {
    for kind in [TileType::Oblate, TileType::Prolate] {
        let base = Rhombohedron::canonical(kind);
        let base_rep = halfspace_rep(&base).unwrap();
        let base_n = delzant::group_n(&base_rep).unwrap();
        for g in group().elements() {
            let motion = RigidMotion { g: g.clone(), t: GVec3::zero() };
            let image = motion.apply_tile(&base);
            let rep = halfspace_rep(&image).unwrap();
            // normal set is an icosahedral image of the canonical one
            let moved: Vec<GVec3> = base_rep.normals.iter().map(|n| g.apply(n)).collect();
            assert_eq!(sorted(rep.normals.to_vec()), sorted(moved));
            let tr = transport(&image).unwrap();
            assert_eq!(tr.ndesc, base_n);
            assert_eq!(tr.radii_sq, level_radii(&base_rep).unwrap());
        }
    }
}

#[test]
fn same_type_tiles_share_reduction_data() {
    let p = patch();
    let b = Rhombohedron::oblate_canonical();
    let r = Rhombohedron::prolate_canonical();
    for tile in p.tiles.iter().take(25) {
        let base = if tile.classify().unwrap() == TileType::Oblate { &b } else { &r };
        let v = delzant::compare(base, tile).unwrap();
        assert!(v.same_reduction_data && v.same_diffeotype && v.same_symplectotype);
        assert_eq!(canonicalize(tile).unwrap().tile_type, tile.classify().unwrap());
    }
}

#[test]
fn smaller_radius_is_a_subpatch() {
    let cfg = PatchConfig::parse("2", SHIFT).unwrap();
    let a = quasitile::tiling::generate_patch(&cfg).unwrap();
    let b = quasitile::tiling::generate_patch(&cfg).unwrap();
    assert_eq!(a, b);
    assert!(a.tiles.len() < patch().tiles.len());
    for t in &a.tiles {
        assert!(patch().tiles.contains(t));
    }
}
