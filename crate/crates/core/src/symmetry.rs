//! The full icosahedral group as exact orthogonal matrices over ℚ(φ), and
//! rigid-motion canonicalization of tiles.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::exactlin::{GMat, GVec3};
use crate::golden::GoldenRational;
use crate::quasilattice::star;
use crate::tiling::{Rhombohedron, TileType};

/// An orthogonal 3×3 matrix over ℚ(φ).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Isometry {
    m: GMat,
}

impl Isometry {
    pub fn identity() -> Self {
        Isometry { m: GMat::identity(3) }
    }

    /// Wraps `m` if it is 3×3 with `mᵀm = I`.
    pub fn from_matrix(m: GMat) -> Option<Self> {
        if m.rows() != 3 || m.cols() != 3 || &m.transpose() * &m != GMat::identity(3) {
            return None;
        }
        Some(Isometry { m })
    }

    pub fn matrix(&self) -> &GMat {
        &self.m
    }

    pub fn apply(&self, v: &GVec3) -> GVec3 {
        self.m.apply(v)
    }

    pub fn compose(&self, other: &Isometry) -> Isometry {
        Isometry { m: &self.m * &other.m }
    }

    pub fn inverse(&self) -> Isometry {
        Isometry { m: self.m.transpose() }
    }

    pub fn det(&self) -> GoldenRational {
        self.m.det().expect("square")
    }

    pub fn is_rotation(&self) -> bool {
        self.det() == GoldenRational::one()
    }

    pub fn neg(&self) -> Isometry {
        let rows = (0..3).map(|i| self.m.row(i).iter().map(|x| -x).collect()).collect();
        Isometry { m: GMat::from_rows(rows) }
    }
}

impl PartialOrd for Isometry {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Isometry {
    /// Lexicographic on the row-major entries, each entry ordered by
    /// decreasing real value. The identity is the least orthogonal matrix.
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        other.m.entries().iter().cmp(self.m.entries().iter())
    }
}

impl fmt::Debug for Isometry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.m)
    }
}

/// `x ↦ g·x + t`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RigidMotion {
    pub g: Isometry,
    pub t: GVec3,
}

impl RigidMotion {
    pub fn apply(&self, x: &GVec3) -> GVec3 {
        &self.g.apply(x) + &self.t
    }

    pub fn apply_tile(&self, tile: &Rhombohedron) -> Rhombohedron {
        Rhombohedron {
            anchor: self.apply(&tile.anchor),
            edges: tile.edges.clone().map(|e| self.g.apply(&e)),
            ..tile.clone()
        }
    }
}

/// The 120 elements of the full icosahedral group in `Isometry` order
/// (identity first), with their action on the twelve signed star vectors.
pub struct IcosahedralGroup {
    elements: Vec<Isometry>,
    /// `perm[g][i]`: index in `signed_v` of `g·signed_v[i]`.
    perm: Vec<[usize; 12]>,
    index: HashMap<Isometry, usize>,
}

impl IcosahedralGroup {
    pub fn elements(&self) -> &[Isometry] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn rotations(&self) -> impl Iterator<Item = &Isometry> {
        self.elements.iter().filter(|g| g.is_rotation())
    }

    pub fn contains(&self, g: &Isometry) -> bool {
        self.index.contains_key(g)
    }

    pub fn position(&self, g: &Isometry) -> Option<usize> {
        self.index.get(g).copied()
    }

    pub fn star_permutation(&self, g: usize) -> &[usize; 12] {
        &self.perm[g]
    }

    /// Checks closure under products and inverses.
    pub fn is_closed(&self) -> bool {
        self.elements.iter().all(|g| {
            self.contains(&g.inverse())
                && self.elements.iter().all(|h| self.contains(&g.compose(h)))
        })
    }
}

/// Builds the group by frame extension: every orthogonal map is fixed by the
/// images of `V₁`, `V₂` and the sign of the image of `V₁ × V₂`, so candidate
/// images are all star pairs with the Gram data of `(V₁, V₂)`.
pub fn generate_group() -> Result<IcosahedralGroup> {
    let s = star();
    let signed = s.signed_v();
    let (v1, v2) = (&s.v[0], &s.v[1]);
    let gram = v1.dot(v2);
    let frame = GMat::from_columns(&[v1.clone(), v2.clone(), v1.cross(v2)]);
    let frame_inv = frame
        .inverse()
        .ok_or_else(|| Error::CorruptStar("V₁, V₂ are parallel".into()))?;
    let star_set: BTreeSet<&GVec3> = signed.iter().collect();

    let mut found = BTreeSet::new();
    for a in &signed {
        for b in &signed {
            if a.dot(b) != gram {
                continue;
            }
            let c = a.cross(b);
            for third in [c.clone(), -&c] {
                let image = GMat::from_columns(&[a.clone(), b.clone(), third]);
                let Some(g) = Isometry::from_matrix(&image * &frame_inv) else {
                    continue;
                };
                if signed.iter().all(|v| star_set.contains(&g.apply(v))) {
                    found.insert(g);
                }
            }
        }
    }
    if found.is_empty() {
        return Err(Error::CorruptStar("no symmetry of the star found".into()));
    }
    let elements: Vec<Isometry> = found.into_iter().collect();
    let perm = elements
        .iter()
        .map(|g| {
            std::array::from_fn(|i| {
                s.signed_v_index(&g.apply(&signed[i]))
                    .expect("group preserves the star")
            })
        })
        .collect();
    let index = elements.iter().cloned().enumerate().map(|(i, g)| (g, i)).collect();
    Ok(IcosahedralGroup {
        elements,
        perm,
        index,
    })
}

/// The shared group table.
pub fn group() -> &'static IcosahedralGroup {
    static GROUP: OnceLock<IcosahedralGroup> = OnceLock::new();
    GROUP.get_or_init(|| generate_group().expect("icosahedral star constants are intact"))
}

/// Orbit of `±U₁..±U₆` under the group.
pub fn q30_orbit() -> Vec<GVec3> {
    let s = star();
    let mut out = BTreeSet::new();
    for u in &s.u {
        for g in group().elements() {
            let w = g.apply(u);
            out.insert(-&w);
            out.insert(w);
        }
    }
    out.into_iter().collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Canonicalization {
    /// Maps the input tile onto the canonical tile of its type.
    pub motion: RigidMotion,
    pub tile_type: TileType,
    /// Whether some proper rotation (det +1) also does the job.
    pub rotation_suffices: bool,
    /// Number of group elements that work (the stabilizer size of the canonical tile).
    pub candidates: usize,
}

fn sorted_vertices(t: &Rhombohedron) -> Vec<GVec3> {
    let mut v = t.vertices().to_vec();
    v.sort();
    v
}

/// Finds `ρ = (g, t)` with `g` in the icosahedral group and `t` in `R` that
/// maps `tile` exactly onto `Δ_b°` or `Δ_r°`. Among all valid `g` the
/// least one in `Isometry` order is returned, so a tile that only needs a
/// translation gets the identity.
pub fn canonicalize(tile: &Rhombohedron) -> Result<Canonicalization> {
    let tile_type = tile.classify()?;
    let s = star();
    let grp = group();
    let mut edge_idx = [0usize; 3];
    for (slot, e) in edge_idx.iter_mut().zip(&tile.edges) {
        *slot = s.signed_v_index(e).ok_or(Error::NotCanonicalizable)?;
    }
    let target = Rhombohedron::canonical(tile_type);
    let target_axes: BTreeSet<usize> = match tile_type {
        TileType::Oblate => [3, 4, 5].into(),
        TileType::Prolate => [0, 1, 2].into(),
    };
    let target_vertices = sorted_vertices(&target);
    let signed = s.signed_v();

    let mut best: Option<RigidMotion> = None;
    let mut rotation_suffices = false;
    let mut candidates = 0;
    for (gi, g) in grp.elements().iter().enumerate() {
        let perm = grp.star_permutation(gi);
        let axes: BTreeSet<usize> = edge_idx.iter().map(|&i| perm[i] % 6).collect();
        if axes != target_axes {
            continue;
        }
        // Edges mapped to a negative star vector move the anchor to the far end.
        let mut anchor = g.apply(&tile.anchor);
        for &i in &edge_idx {
            if perm[i] >= 6 {
                anchor = &anchor + &signed[perm[i]];
            }
        }
        let motion = RigidMotion { g: g.clone(), t: -anchor };
        if sorted_vertices(&motion.apply_tile(tile)) != target_vertices {
            continue;
        }
        candidates += 1;
        rotation_suffices |= g.is_rotation();
        if best.is_none() {
            best = Some(motion);
        }
    }
    let motion = best.ok_or(Error::NotCanonicalizable)?;
    Ok(Canonicalization {
        motion,
        tile_type,
        rotation_suffices,
        candidates,
    })
}

/// Classifies the twenty edge triples of `V₁..V₆` by volume.
pub fn orbit_classes() -> (usize, usize) {
    let v = &star().v;
    let mut counts = (0, 0);
    for i in 0..6 {
        for j in i + 1..6 {
            for k in j + 1..6 {
                let t = [v[i].clone(), v[j].clone(), v[k].clone()];
                match crate::tiling::classify_edges(&t) {
                    Ok(TileType::Oblate) => counts.0 += 1,
                    Ok(TileType::Prolate) => counts.1 += 1,
                    Err(_) => {}
                }
            }
        }
    }
    counts
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quasilattice::Quasilattice;

    #[test]
    fn order_and_rotation_subgroup() {
        let grp = group();
        assert_eq!(grp.len(), 120);
        assert_eq!(grp.rotations().count(), 60);
        assert!(grp.contains(&Isometry::identity()));
        assert!(grp.contains(&Isometry::identity().neg()));
    }

    #[test]
    fn closure() {
        assert!(group().is_closed());
    }

    #[test]
    fn q30_paths_agree() {
        assert_eq!(q30_orbit(), star().q30);
    }

    #[test]
    fn canonical_tile_is_fixed() {
        let c = canonicalize(&Rhombohedron::oblate_canonical()).unwrap();
        assert_eq!(c.motion.g, Isometry::identity());
        assert!(c.motion.t.is_zero());
        assert_eq!(c.tile_type, TileType::Oblate);
        assert!(c.rotation_suffices);
    }

    #[test]
    fn pure_translation() {
        let v1 = star().v[0].clone();
        let t = Rhombohedron::oblate_canonical().translated(&v1);
        let c = canonicalize(&t).unwrap();
        assert_eq!(c.motion.g, Isometry::identity());
        assert_eq!(c.motion.t, -&v1);
        assert!(Quasilattice::r().contains(&c.motion.t));
    }

    #[test]
    fn orbit_count() {
        assert_eq!(orbit_classes(), (10, 10));
    }

    #[test]
    fn non_star_edges_are_rejected() {
        let mut t = Rhombohedron::prolate_canonical();
        let m = GMat::from_rows(vec![
            vec![GoldenRational::zero(), GoldenRational::one(), GoldenRational::zero()],
            vec![GoldenRational::one(), GoldenRational::zero(), GoldenRational::zero()],
            vec![GoldenRational::zero(), GoldenRational::zero(), GoldenRational::one()],
        ]);
        // a coordinate swap preserves volume but is not an icosahedral symmetry
        let swap = Isometry::from_matrix(m).unwrap();
        assert!(!group().contains(&swap));
        t.edges = t.edges.clone().map(|e| swap.apply(&e));
        assert!(matches!(canonicalize(&t), Err(Error::NotCanonicalizable)));
    }
}
