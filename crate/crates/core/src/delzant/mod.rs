//! Generalized Delzant data of a tile.
//!
//! For a rhombohedron `Δ = {μ : ⟨μ, Xⱼ⟩ ≥ λⱼ}` with normals `Xⱼ` taken in the
//! unit star of `Q`, the construction reduces `ℂ⁶` by the group
//! `N = exp{X ∈ ℝ⁶ : π(X) ∈ Q}` where `π(eⱼ) = Xⱼ`. This module computes that
//! data exactly: the half-space representation, `ker π`, a canonical
//! descriptor of `N` and its discrete part `Γ`, the radii of the level set
//! `Ψ⁻¹(0)` (a product of three 3-spheres), the eight vertex chart groups and
//! the volume invariants that tell the two tile types apart.
//!
//! Exponent vectors are considered modulo `ker π` and `ℤ⁶`. Because facets come
//! in opposite pairs `(j, j+3)`, `ker π` is always spanned by `eⱼ + eⱼ₊₃`, and
//! every class has a unique representative supported on the first facet of
//! each pair. Classes are collected into a ℤ-module whose Hermite normal form
//! (on rational `(φ, 1)` coordinates) is the canonical descriptor.

mod hnf;

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactlin::{det3, solve, GMat, GVec, GVec3, GVec6};
use crate::golden::GoldenRational;
use crate::quasilattice::{star, LatticeTag, Quasilattice};
use crate::symmetry::{canonicalize, Canonicalization};
use crate::tiling::{Rhombohedron, TileType};

pub use hnf::hermite_normal_form;

/// Opposite facet pairs `(j, j')` with `X_{j'} = -X_j` (0-based).
pub const PAIRING: [(usize, usize); 3] = [(0, 3), (1, 4), (2, 5)];

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HalfSpaceRep {
    /// Inward unit normals, members of the 30-vector star of `Q`.
    pub normals: [GVec3; 6],
    /// Support values: the tile is `{μ : ⟨μ, Xⱼ⟩ ≥ λⱼ}`.
    pub offsets: [GoldenRational; 6],
    /// Opposite facet pairs, 0-based.
    pub pairing: [(usize, usize); 3],
}

impl HalfSpaceRep {
    /// `π : ℝ⁶ → ℝ³`, `eⱼ ↦ Xⱼ`, as a 3×6 matrix.
    pub fn pi(&self) -> GMat {
        GMat::from_columns(&self.normals)
    }

    pub fn apply_pi(&self, x: &GVec6) -> GVec3 {
        self.normals
            .iter()
            .zip(&x.0)
            .fold(GVec3::zero(), |acc, (n, c)| &acc + &n.scale(c))
    }

    /// Whether `exp(X)` lies in `N`, i.e. `π(X) ∈ Q`.
    pub fn in_n(&self, x: &GVec6) -> bool {
        Quasilattice::q().contains(&self.apply_pi(x))
    }

    pub fn contains(&self, mu: &GVec3) -> bool {
        self.normals
            .iter()
            .zip(&self.offsets)
            .all(|(n, l)| &mu.dot(n) >= l)
    }

    /// Indices of the inequalities that hold with equality at `mu`.
    pub fn active(&self, mu: &GVec3) -> Vec<usize> {
        (0..6)
            .filter(|&j| mu.dot(&self.normals[j]) == self.offsets[j])
            .collect()
    }
}

/// For pair `k`, the facet through the anchor is spanned by edges `k` and
/// `k+2` (mod 3); its normal is positive on edge `k+1`. With this order the
/// canonical oblate tile gets `X = (U₁, U₂, U₃, -U₁, -U₂, -U₃)` and the
/// canonical prolate tile `X = (U₄, U₅, U₆, -U₄, -U₅, -U₆)`.
pub fn halfspace_rep(tile: &Rhombohedron) -> Result<HalfSpaceRep> {
    let q30 = &star().q30;
    let vertices = tile.vertices();
    let mut normals: [GVec3; 6] = std::array::from_fn(|_| GVec3::zero());
    let mut offsets: [GoldenRational; 6] = std::array::from_fn(|_| GoldenRational::zero());
    for (k, &(j, jp)) in PAIRING.iter().enumerate() {
        let a = &tile.edges[k];
        let b = &tile.edges[(k + 2) % 3];
        let c = &tile.edges[(k + 1) % 3];
        let n = q30
            .iter()
            .find(|n| n.dot(a).is_zero() && n.dot(b).is_zero() && n.dot(c).is_positive())
            .ok_or(Error::NotQuasirational { facet: j + 1 })?;
        normals[j] = n.clone();
        normals[jp] = -n;
        for idx in [j, jp] {
            offsets[idx] = vertices
                .iter()
                .map(|v| v.dot(&normals[idx]))
                .min()
                .expect("eight vertices");
        }
    }
    Ok(HalfSpaceRep {
        normals,
        offsets,
        pairing: PAIRING,
    })
}

/// Facet indices meeting at the vertex for choice `c` (bit 2 is pair 1):
/// `cₖ = 0` picks facet `k`, `cₖ = 1` picks its opposite.
pub fn vertex_facets(c: usize) -> [usize; 3] {
    std::array::from_fn(|k| {
        let (j, jp) = PAIRING[k];
        if c >> (2 - k) & 1 == 0 {
            j
        } else {
            jp
        }
    })
}

/// Solves `⟨μ, Xⱼ⟩ = λⱼ` for each of the eight facet triples.
pub fn reconstruct_polytope(rep: &HalfSpaceRep) -> Result<[GVec3; 8]> {
    let mut out: [GVec3; 8] = std::array::from_fn(|_| GVec3::zero());
    for (c, slot) in out.iter_mut().enumerate() {
        let f = vertex_facets(c);
        let a = GMat::from_row_vecs(&f.map(|j| rep.normals[j].clone()));
        let rhs: Vec<GoldenRational> = f.iter().map(|&j| rep.offsets[j].clone()).collect();
        let crate::exactlin::Solution::Unique(x) = solve(&a, &rhs) else {
            return Err(Error::MalformedRep(format!("facets {f:?} do not meet in a point")));
        };
        *slot = GVec::from_slice(&x).expect("three coordinates");
    }
    Ok(out)
}

/// Basis of `ker π` in reduced row echelon form.
pub fn kernel_basis(rep: &HalfSpaceRep) -> Result<[GVec6; 3]> {
    let k = rep.pi().kernel();
    if k.len() != 3 {
        return Err(Error::MalformedRep(format!(
            "ker π has dimension {}, expected 3",
            k.len()
        )));
    }
    Ok(std::array::from_fn(|i| GVec::from_slice(&k[i]).expect("six columns")))
}

/// Canonical descriptor of `N = exp{X : π(X) ∈ Q}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NDescriptor {
    /// `ker π`, the Lie algebra of `N`.
    pub kernel_basis: [GVec6; 3],
    /// Directions of the embedded 3-torus `{exp(r,s,t,r,s,t)}`; equal to `ker π`.
    pub continuous_basis: [GVec6; 3],
    /// Exponent vectors generating `Γ = N / T³` modulo `ker π + ℤ⁶`,
    /// supported on the first facet of each pair, in Hermite normal form.
    pub gamma_generators: Vec<GVec6>,
    /// Free rank of `Γ`.
    pub gamma_rank: usize,
}

/// Hermite-normal-form basis of the ℤ-module spanned by `gens` and `ℤ³`,
/// returned as (free generators, torsion generators) modulo `ℤ³`.
///
/// Coordinates are ordered `(b₁, b₂, b₃, a₁, a₂, a₃)` for `yᵢ = aᵢ + bᵢφ`,
/// so rows whose pivot is a φ-coordinate come first; those are the infinite
/// order classes.
fn canonical_classes(gens: &[GVec3]) -> (Vec<GVec3>, Vec<GVec3>) {
    let den = gens
        .iter()
        .flat_map(|v| v.0.iter())
        .flat_map(|x| [x.a().denom().clone(), x.b().denom().clone()])
        .fold(BigInt::one(), |acc, d| acc.lcm(&d));
    let d = BigRational::from_integer(den.clone());
    let to_int = |q: &BigRational| (q * &d).to_integer();
    let mut rows: Vec<Vec<BigInt>> = gens
        .iter()
        .map(|v| {
            let mut r: Vec<BigInt> = v.0.iter().map(|x| to_int(x.b())).collect();
            r.extend(v.0.iter().map(|x| to_int(x.a())));
            r
        })
        .collect();
    for i in 0..3 {
        let mut r = vec![BigInt::zero(); 6];
        r[3 + i] = den.clone();
        rows.push(r);
    }
    let h = hnf::hermite_normal_form(rows);
    let back = |row: &[BigInt]| -> GVec3 {
        GVec(std::array::from_fn(|i| {
            GoldenRational::new(
                BigRational::new(row[3 + i].clone(), den.clone()),
                BigRational::new(row[i].clone(), den.clone()),
            )
        }))
    };
    let mut free = Vec::new();
    let mut torsion = Vec::new();
    for row in &h {
        match hnf::pivot(row) {
            Some(p) if p < 3 => free.push(back(row)),
            // a φ-free row that is not a unit vector of ℤ³
            Some(p) if row[p] != den => torsion.push(back(row)),
            _ => {}
        }
    }
    (free, torsion)
}

fn embed(y: &GVec3, support: [usize; 3]) -> GVec6 {
    let mut x = GVec6::zero();
    for (i, &j) in support.iter().enumerate() {
        x[j] = y[i].clone();
    }
    x
}

/// Classes of `N ∩ (torus on the coordinates in `support`)` modulo `ℤ⁶`.
fn lattice_on(rep: &HalfSpaceRep, support: [usize; 3]) -> Result<(Vec<GVec6>, usize)> {
    let a = GMat::from_columns(&support.map(|j| rep.normals[j].clone()));
    let inv = a
        .inverse()
        .ok_or_else(|| Error::MalformedRep(format!("normals {support:?} are dependent")))?;
    let lifts: Vec<GVec3> = star().u.iter().map(|u| inv.apply(u)).collect();
    let (free, torsion) = canonical_classes(&lifts);
    let rank = free.len();
    let gens = free
        .iter()
        .chain(&torsion)
        .map(|y| embed(y, support))
        .collect();
    Ok((gens, rank))
}

pub fn group_n(rep: &HalfSpaceRep) -> Result<NDescriptor> {
    let kernel = kernel_basis(rep)?;
    let pi = rep.pi();
    // Lift each generator of Q through π, then move the lift onto the first
    // facet of each pair by subtracting kernel vectors.
    let mut reduced = Vec::with_capacity(6);
    for u in &star().u {
        let sol = solve(&pi, &u.0);
        let x = sol
            .any()
            .ok_or(Error::NotQuasirational { facet: 0 })?;
        let y: GVec3 = GVec(std::array::from_fn(|k| {
            let (j, jp) = rep.pairing[k];
            &x[j] - &x[jp]
        }));
        reduced.push(y);
    }
    let (free, torsion) = canonical_classes(&reduced);
    let support = rep.pairing.map(|(j, _)| j);
    Ok(NDescriptor {
        kernel_basis: kernel.clone(),
        continuous_basis: kernel,
        gamma_generators: free.iter().chain(&torsion).map(|y| embed(y, support)).collect(),
        gamma_rank: free.len(),
    })
}

/// Radii² of the three 3-spheres: `-(λⱼ + λⱼ')` per pair.
pub fn level_radii(rep: &HalfSpaceRep) -> Result<[GoldenRational; 3]> {
    let mut out: [GoldenRational; 3] = std::array::from_fn(|_| GoldenRational::zero());
    for (slot, &(j, jp)) in out.iter_mut().zip(&rep.pairing) {
        let r2 = -(&rep.offsets[j] + &rep.offsets[jp]);
        if !r2.is_positive() {
            return Err(Error::EmptyInterior(r2.to_string()));
        }
        *slot = r2;
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChartGroup {
    pub vertex: GVec3,
    /// Facets meeting at the vertex, 0-based.
    pub facets: [usize; 3],
    /// Generators of `N ∩ (S¹)³` on those facets' coordinates, modulo `ℤ⁶`.
    pub generators: Vec<GVec6>,
}

/// The discrete group of each of the eight vertex charts.
pub fn chart_groups(rep: &HalfSpaceRep) -> Result<Vec<ChartGroup>> {
    let vertices = reconstruct_polytope(rep)?;
    (0..8)
        .map(|c| {
            let facets = vertex_facets(c);
            let (generators, _) = lattice_on(rep, facets)?;
            Ok(ChartGroup {
                vertex: vertices[c].clone(),
                facets,
                generators,
            })
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InvariantRecord {
    /// Euclidean volume, `|det(edges)|`.
    pub polytope_volume: GoldenRational,
    pub cover_radii_sq: [GoldenRational; 3],
    /// `Π radii²`: the volume of `(S²)³` when a sphere cut from a radius-ρ
    /// 3-sphere has area ρ².
    pub cover_volume: GoldenRational,
    pub gamma_rank: usize,
    #[serde(rename = "type")]
    pub tile_type: TileType,
}

pub fn invariants(tile: &Rhombohedron) -> Result<InvariantRecord> {
    let rep = halfspace_rep(tile)?;
    invariants_from(tile, &rep, &group_n(&rep)?)
}

fn invariants_from(tile: &Rhombohedron, rep: &HalfSpaceRep, n: &NDescriptor) -> Result<InvariantRecord> {
    let radii = level_radii(rep)?;
    let cover_volume = radii.iter().fold(GoldenRational::one(), |acc, r| &acc * r);
    Ok(InvariantRecord {
        polytope_volume: det3(&tile.edges[0], &tile.edges[1], &tile.edges[2]).abs(),
        cover_radii_sq: radii,
        cover_volume,
        gamma_rank: n.gamma_rank,
        tile_type: tile.classify()?,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DelzantResult {
    pub quasilattice: LatticeTag,
    pub rep: HalfSpaceRep,
    pub ndesc: NDescriptor,
    pub radii_sq: [GoldenRational; 3],
    pub chart_groups: Vec<ChartGroup>,
    pub invariants: InvariantRecord,
}

pub fn delzant(tile: &Rhombohedron) -> Result<DelzantResult> {
    let rep = halfspace_rep(tile)?;
    let ndesc = group_n(&rep)?;
    let radii_sq = level_radii(&rep)?;
    let chart_groups = chart_groups(&rep)?;
    let invariants = invariants_from(tile, &rep, &ndesc)?;
    Ok(DelzantResult {
        quasilattice: LatticeTag::Q,
        rep,
        ndesc,
        radii_sq,
        chart_groups,
        invariants,
    })
}

/// A tile's Delzant data with its facets renumbered to match the canonical
/// tile of its type under the canonicalizing motion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Transported {
    pub canonicalization: Canonicalization,
    /// The tile's own rep, facets reordered so that `g·Xⱼ` is the canonical `Xⱼ`.
    pub rep: HalfSpaceRep,
    pub ndesc: NDescriptor,
    pub radii_sq: [GoldenRational; 3],
}

pub fn transport(tile: &Rhombohedron) -> Result<Transported> {
    let canon = canonicalize(tile)?;
    let own = halfspace_rep(tile)?;
    let target = halfspace_rep(&Rhombohedron::canonical(canon.tile_type))?;
    let g = &canon.motion.g;
    let moved: Vec<GVec3> = own.normals.iter().map(|n| g.apply(n)).collect();
    let mut normals = own.normals.clone();
    let mut offsets = own.offsets.clone();
    for &(j, jp) in &PAIRING {
        let want = &target.normals[j];
        let src = (0..6)
            .find(|&i| &moved[i] == want)
            .ok_or_else(|| Error::MalformedRep("transported normals do not match".into()))?;
        let opp = if src < 3 { src + 3 } else { src - 3 };
        normals[j] = own.normals[src].clone();
        normals[jp] = own.normals[opp].clone();
        offsets[j] = own.offsets[src].clone();
        offsets[jp] = own.offsets[opp].clone();
    }
    let rep = HalfSpaceRep {
        normals,
        offsets,
        pairing: PAIRING,
    };
    let ndesc = group_n(&rep)?;
    let radii_sq = level_radii(&rep)?;
    Ok(Transported {
        canonicalization: canon,
        rep,
        ndesc,
        radii_sq,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    /// Same `N` and the same level set after transport to canonical position.
    pub same_reduction_data: bool,
    /// Same `N`, same `Γ` rank and both quotients are `(S²)³/Γ`.
    pub same_diffeotype: bool,
    /// All volume invariants agree.
    pub same_symplectotype: bool,
}

fn sorted3(x: &[GoldenRational; 3]) -> Vec<GoldenRational> {
    let mut v = x.to_vec();
    v.sort_by(|a, b| a.partial_cmp(b).unwrap_or(Ordering::Equal));
    v
}

pub fn compare(a: &Rhombohedron, b: &Rhombohedron) -> Result<Verdict> {
    let ta = transport(a)?;
    let tb = transport(b)?;
    let ia = invariants(a)?;
    let ib = invariants(b)?;
    let same_n = ta.ndesc == tb.ndesc;
    let spheres = |r: &[GoldenRational; 3]| r.iter().all(GoldenRational::is_positive);
    Ok(Verdict {
        same_reduction_data: same_n && ta.radii_sq == tb.radii_sq,
        same_diffeotype: same_n
            && ia.gamma_rank == ib.gamma_rank
            && spheres(&ta.radii_sq)
            && spheres(&tb.radii_sq),
        same_symplectotype: ia.polytope_volume == ib.polytope_volume
            && sorted3(&ia.cover_radii_sq) == sorted3(&ib.cover_radii_sq)
            && ia.cover_volume == ib.cover_volume,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(a: i64, b: i64) -> GoldenRational {
        GoldenRational::from_ints(a, b)
    }

    fn phi_e(i: usize) -> GVec6 {
        let mut x = GVec6::zero();
        x[i] = GoldenRational::phi();
        x
    }

    fn pair_kernel() -> [GVec6; 3] {
        [
            GVec6::from_ints([1, 0, 0, 1, 0, 0]),
            GVec6::from_ints([0, 1, 0, 0, 1, 0]),
            GVec6::from_ints([0, 0, 1, 0, 0, 1]),
        ]
    }

    #[test]
    fn oblate_rep() {
        let rep = halfspace_rep(&Rhombohedron::oblate_canonical()).unwrap();
        let u = &star().u;
        assert_eq!(
            rep.normals,
            [u[0].clone(), u[1].clone(), u[2].clone(), -&u[0], -&u[1], -&u[2]]
        );
        assert_eq!(rep.offsets, [g(0, 0), g(0, 0), g(0, 0), g(1, -1), g(1, -1), g(1, -1)]);
    }

    #[test]
    fn prolate_rep() {
        let rep = halfspace_rep(&Rhombohedron::prolate_canonical()).unwrap();
        let u = &star().u;
        assert_eq!(
            rep.normals,
            [u[3].clone(), u[4].clone(), u[5].clone(), -&u[3], -&u[4], -&u[5]]
        );
        assert_eq!(rep.offsets, [g(0, 0), g(0, 0), g(0, 0), g(-1, 0), g(-1, 0), g(-1, 0)]);
    }

    #[test]
    fn translation_shifts_offsets() {
        let t = &star().v[0] + &star().v[3];
        let base = halfspace_rep(&Rhombohedron::oblate_canonical()).unwrap();
        let moved = halfspace_rep(&Rhombohedron::oblate_canonical().translated(&t)).unwrap();
        assert_eq!(moved.normals, base.normals);
        for j in 0..6 {
            assert_eq!(moved.offsets[j], &base.offsets[j] + &t.dot(&base.normals[j]));
        }
        assert_eq!(level_radii(&moved).unwrap(), level_radii(&base).unwrap());
    }

    #[test]
    fn reconstruction() {
        for tile in [Rhombohedron::oblate_canonical(), Rhombohedron::prolate_canonical()] {
            let rep = halfspace_rep(&tile).unwrap();
            let mut got = reconstruct_polytope(&rep).unwrap().to_vec();
            let mut want = tile.vertices().to_vec();
            got.sort();
            want.sort();
            assert_eq!(got, want);
        }
    }

    #[test]
    fn kernels() {
        for tile in [Rhombohedron::oblate_canonical(), Rhombohedron::prolate_canonical()] {
            let rep = halfspace_rep(&tile).unwrap();
            assert_eq!(kernel_basis(&rep).unwrap(), pair_kernel());
        }
    }

    #[test]
    fn gamma_of_oblate() {
        let rep = halfspace_rep(&Rhombohedron::oblate_canonical()).unwrap();
        let n = group_n(&rep).unwrap();
        assert_eq!(n.gamma_generators, vec![phi_e(0), phi_e(1), phi_e(2)]);
        assert_eq!(n.gamma_rank, 3);
        assert_eq!(n.continuous_basis, pair_kernel());
    }

    #[test]
    fn same_n_for_both_tiles() {
        let rb = halfspace_rep(&Rhombohedron::oblate_canonical()).unwrap();
        let rr = halfspace_rep(&Rhombohedron::prolate_canonical()).unwrap();
        let nb = group_n(&rb).unwrap();
        let nr = group_n(&rr).unwrap();
        assert_eq!(nb, nr);
        for x in &nb.gamma_generators {
            assert!(rr.in_n(x));
        }
        for x in &nr.gamma_generators {
            assert!(rb.in_n(x));
        }
    }

    #[test]
    fn radii() {
        let rb = halfspace_rep(&Rhombohedron::oblate_canonical()).unwrap();
        let rr = halfspace_rep(&Rhombohedron::prolate_canonical()).unwrap();
        assert_eq!(level_radii(&rb).unwrap(), [g(-1, 1), g(-1, 1), g(-1, 1)]);
        assert_eq!(level_radii(&rr).unwrap(), [g(1, 0), g(1, 0), g(1, 0)]);
    }

    #[test]
    fn empty_slab_is_rejected() {
        let mut rep = halfspace_rep(&Rhombohedron::oblate_canonical()).unwrap();
        rep.offsets[3] = g(0, 0);
        assert!(matches!(level_radii(&rep), Err(Error::EmptyInterior(_))));
    }

    #[test]
    fn chart_group_at_origin() {
        let rep = halfspace_rep(&Rhombohedron::oblate_canonical()).unwrap();
        let charts = chart_groups(&rep).unwrap();
        assert_eq!(charts.len(), 8);
        assert!(charts[0].vertex.is_zero());
        assert_eq!(charts[0].facets, [0, 1, 2]);
        assert_eq!(charts[0].generators, vec![phi_e(0), phi_e(1), phi_e(2)]);
        for c in &charts {
            let mut want: Vec<GVec6> = c.facets.iter().map(|&j| phi_e(j)).collect();
            want.sort_by_key(|x| std::cmp::Reverse(x.0.iter().position(|e| !e.is_zero())));
            let mut got = c.generators.clone();
            got.sort_by_key(|x| std::cmp::Reverse(x.0.iter().position(|e| !e.is_zero())));
            assert_eq!(got, want, "vertex {}", c.vertex);
        }
    }

    #[test]
    fn invariant_values() {
        let ib = invariants(&Rhombohedron::oblate_canonical()).unwrap();
        let ir = invariants(&Rhombohedron::prolate_canonical()).unwrap();
        assert_eq!(ib.polytope_volume, g(4, -2));
        assert_eq!(ib.cover_volume, g(-3, 2));
        assert_eq!(ir.polytope_volume, g(-2, 2));
        assert_eq!(ir.cover_volume, g(1, 0));
        let phi = GoldenRational::phi();
        assert_eq!(ir.polytope_volume.checked_div(&ib.polytope_volume).unwrap(), phi);
        assert_eq!(
            ir.cover_volume.checked_div(&ib.cover_volume).unwrap(),
            GoldenRational::phi_pow(3)
        );
    }

    #[test]
    fn verdicts() {
        let b = Rhombohedron::oblate_canonical();
        let r = Rhombohedron::prolate_canonical();
        let v = compare(&b, &r).unwrap();
        assert!(v.same_diffeotype);
        assert!(!v.same_symplectotype);
        assert!(!v.same_reduction_data);
        let v = compare(&b, &b).unwrap();
        assert!(v.same_reduction_data && v.same_diffeotype && v.same_symplectotype);
    }
}
