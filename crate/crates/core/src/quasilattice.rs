//! The icosahedral star vectors and the two quasilattices built from them.
//!
//! `R` is the ℤ-span of the six edge vectors `V₁..V₆` (norm σ, σ² = 3 - φ);
//! `Q` is the ℤ-span of six unit vectors `U₁..U₆` chosen among the thirty
//! vertices of an icosidodecahedron. Membership is decided exactly by
//! lifting each Cartesian coordinate to its rational `(1, φ)` coordinates,
//! which turns the question into a 6×6 rational system.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::exactlin::{GMat, GVec, GVec3};
use crate::golden::GoldenRational;

fn g(a: i64, b: i64) -> GoldenRational {
    GoldenRational::from_ints(a, b)
}

fn half(a: i64, b: i64) -> GoldenRational {
    GoldenRational::from_ratios(a, 2, b, 2)
}

#[derive(Clone, Debug)]
pub struct StarData {
    /// `V₁..V₆`: half of the twelve icosahedron vertices, norm σ.
    pub v: [GVec3; 6],
    /// `U₁..U₆`: the chosen unit generators of `Q`.
    pub u: [GVec3; 6],
    /// All thirty unit vectors of `Q` (icosidodecahedron vertices), sorted.
    pub q30: Vec<GVec3>,
}

impl StarData {
    fn build() -> Self {
        let v = [
            GVec3::new(g(-1, 1), g(1, 0), g(0, 0)),
            GVec3::new(g(0, 0), g(-1, 1), g(1, 0)),
            GVec3::new(g(1, 0), g(0, 0), g(-1, 1)),
            GVec3::new(g(1, -1), g(1, 0), g(0, 0)),
            GVec3::new(g(0, 0), g(1, -1), g(1, 0)),
            GVec3::new(g(1, 0), g(0, 0), g(1, -1)),
        ];
        let u = [
            GVec3::new(half(1, 0), half(-1, 1), half(0, 1)),
            GVec3::new(half(0, 1), half(1, 0), half(-1, 1)),
            GVec3::new(half(-1, 1), half(0, 1), half(1, 0)),
            GVec3::new(half(-1, 0), half(-1, 1), half(0, 1)),
            GVec3::new(half(0, 1), half(-1, 0), half(-1, 1)),
            GVec3::new(half(-1, 1), half(0, 1), half(-1, 0)),
        ];
        StarData {
            v,
            u,
            q30: icosidodecahedron(),
        }
    }

    /// `±V₁..±V₆` in the order `V₁..V₆, -V₁..-V₆`.
    pub fn signed_v(&self) -> Vec<GVec3> {
        self.v.iter().cloned().chain(self.v.iter().map(|x| -x)).collect()
    }

    /// Index into `signed_v` of an exact star vector.
    pub fn signed_v_index(&self, x: &GVec3) -> Option<usize> {
        self.v
            .iter()
            .position(|v| v == x)
            .or_else(|| self.v.iter().position(|v| &-v == x).map(|i| i + 6))
    }
}

/// The thirty unit vectors `(±1,0,0)` (with permutations) and
/// `½(±1, ±1/φ, ±φ)` (with cyclic permutations).
fn icosidodecahedron() -> Vec<GVec3> {
    let mut out = BTreeSet::new();
    for axis in 0..3 {
        for s in [1, -1] {
            let mut c = [g(0, 0), g(0, 0), g(0, 0)];
            c[axis] = g(s, 0);
            out.insert(GVec(c));
        }
    }
    let base = [half(1, 0), half(-1, 1), half(0, 1)];
    for shift in 0..3 {
        for signs in 0..8 {
            let c: [GoldenRational; 3] = std::array::from_fn(|i| {
                let x = &base[(i + 3 - shift) % 3];
                if signs >> i & 1 == 1 {
                    -x
                } else {
                    x.clone()
                }
            });
            out.insert(GVec(c));
        }
    }
    out.into_iter().collect()
}

pub fn star() -> &'static StarData {
    static STAR: OnceLock<StarData> = OnceLock::new();
    STAR.get_or_init(StarData::build)
}

/// The relation `(U₄,U₅,U₆)ᵀ = M·(U₁,U₂,U₃)ᵀ`.
pub fn relation_matrix() -> GMat {
    GMat::from_rows(vec![
        vec![g(1, 0), g(0, -1), g(1, 0)],
        vec![g(1, 0), g(1, 0), g(0, -1)],
        vec![g(0, -1), g(1, 0), g(1, 0)],
    ])
}

/// The inverse relation `(U₁,U₂,U₃)ᵀ = M⁻¹·(U₄,U₅,U₆)ᵀ`, entries in `{1, 1/φ}`.
pub fn inverse_relation_matrix() -> GMat {
    let inv = GoldenRational::phi_inv();
    GMat::from_rows(vec![
        vec![g(1, 0), g(1, 0), inv.clone()],
        vec![inv.clone(), g(1, 0), g(1, 0)],
        vec![g(1, 0), inv, g(1, 0)],
    ])
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum LatticeTag {
    R,
    Q,
}

impl fmt::Display for LatticeTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LatticeTag::R => write!(f, "R"),
            LatticeTag::Q => write!(f, "Q"),
        }
    }
}

/// Integer coefficients on a quasilattice's six generators.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntCombination(pub [BigInt; 6]);

impl IntCombination {
    pub fn from_i64(c: [i64; 6]) -> Self {
        IntCombination(c.map(BigInt::from))
    }

    pub fn to_i64(&self) -> Option<[i64; 6]> {
        let v: Vec<i64> = self.0.iter().map(|x| x.to_i64()).collect::<Option<_>>()?;
        v.try_into().ok()
    }
}

#[derive(Clone, Debug)]
pub struct Quasilattice {
    pub tag: LatticeTag,
    pub generators: [GVec3; 6],
    /// Column `i` holds the rational `(1, φ)` coordinates of generator `i`,
    /// ordered `(x₁, x_φ, y₁, y_φ, z₁, z_φ)`.
    pub lift_matrix: GMat,
    lift_inverse: GMat,
}

/// Rational `(1, φ)` coordinates of a vector, as six field elements with zero φ-part.
pub fn lift_coords(v: &GVec3) -> [GoldenRational; 6] {
    std::array::from_fn(|k| {
        let c = &v[k / 2];
        let part = if k % 2 == 0 { c.a() } else { c.b() };
        GoldenRational::from_rational(part.clone())
    })
}

impl Quasilattice {
    fn build(tag: LatticeTag, generators: [GVec3; 6]) -> Self {
        let cols: Vec<GVec<6>> = generators
            .iter()
            .map(|v| GVec(lift_coords(v)))
            .collect();
        let lift_matrix = GMat::from_columns(&cols);
        let lift_inverse = lift_matrix
            .inverse()
            .expect("quasilattice generators are Z-independent");
        Quasilattice {
            tag,
            generators,
            lift_matrix,
            lift_inverse,
        }
    }

    /// The quasilattice generated by `V₁..V₆`.
    pub fn r() -> &'static Quasilattice {
        static R: OnceLock<Quasilattice> = OnceLock::new();
        R.get_or_init(|| Quasilattice::build(LatticeTag::R, star().v.clone()))
    }

    /// The quasilattice generated by `U₁..U₆`.
    pub fn q() -> &'static Quasilattice {
        static Q: OnceLock<Quasilattice> = OnceLock::new();
        Q.get_or_init(|| Quasilattice::build(LatticeTag::Q, star().u.clone()))
    }

    pub fn get(tag: LatticeTag) -> &'static Quasilattice {
        match tag {
            LatticeTag::R => Quasilattice::r(),
            LatticeTag::Q => Quasilattice::q(),
        }
    }

    /// Unique rational coefficients of `v` on the generators.
    pub fn rational_coefficients(&self, v: &GVec3) -> [BigRational; 6] {
        let x = self.lift_inverse.mul_vec(&lift_coords(v));
        std::array::from_fn(|i| x[i].a().clone())
    }

    /// Integer decomposition of `v`, or `None` when `v` is not in the quasilattice.
    pub fn member(&self, v: &GVec3) -> Option<IntCombination> {
        let c = self.rational_coefficients(v);
        if c.iter().all(|q| q.is_integer()) {
            Some(IntCombination(c.map(|q| q.to_integer())))
        } else {
            None
        }
    }

    pub fn contains(&self, v: &GVec3) -> bool {
        self.member(v).is_some()
    }

    pub fn combine(&self, c: &IntCombination) -> GVec3 {
        self.generators
            .iter()
            .zip(&c.0)
            .fold(GVec3::zero(), |acc, (gen, k)| {
                let k = GoldenRational::from_rational(BigRational::from_integer(k.clone()));
                &acc + &gen.scale(&k)
            })
    }

    /// All vectors `Σ cᵢ genᵢ` with `cᵢ ∈ [-bound, bound]` and norm² exactly `target`.
    ///
    /// The search runs on integer `(1, φ)` coordinates scaled by the common
    /// denominator of the generators, so each candidate costs a few machine
    /// multiplications and stays exact.
    pub fn norm_search(&self, bound: i64, target: &GoldenRational) -> Vec<GVec3> {
        assert!(bound >= 1, "search bound must be positive");
        let den = self
            .generators
            .iter()
            .flat_map(|v| v.0.iter())
            .flat_map(|c| [c.a().denom().clone(), c.b().denom().clone()])
            .fold(BigInt::from(1), |acc, d| acc.lcm(&d));
        let den_i = den.to_i64().expect("small denominator");
        // scaled generator coordinates: [axis][(a, b)]
        let gens: Vec<[[i64; 2]; 3]> = self
            .generators
            .iter()
            .map(|v| {
                std::array::from_fn(|k| {
                    let s = |q: &BigRational| {
                        (q * BigRational::from_integer(den.clone()))
                            .to_integer()
                            .to_i64()
                            .expect("small coordinate")
                    };
                    [s(v[k].a()), s(v[k].b())]
                })
            })
            .collect();
        // target · den², which must be a golden integer for any hit
        let scaled_target = target.scale_int(den_i * den_i);
        if !scaled_target.is_golden_integer() {
            return Vec::new();
        }
        let ta = scaled_target.a().to_integer().to_i64().expect("small target");
        let tb = scaled_target.b().to_integer().to_i64().expect("small target");

        let side = (2 * bound + 1) as usize;
        let total = side.pow(6);
        let mut hits = BTreeSet::new();
        let mut coeff = [0i64; 6];
        for idx in 0..total {
            let mut r = idx;
            for c in coeff.iter_mut() {
                *c = (r % side) as i64 - bound;
                r /= side;
            }
            let mut na = 0i64;
            let mut nb = 0i64;
            for axis in 0..3 {
                let mut a = 0i64;
                let mut b = 0i64;
                for (c, gen) in coeff.iter().zip(&gens) {
                    a += c * gen[axis][0];
                    b += c * gen[axis][1];
                }
                // (a + bφ)² = a² + b² + (2ab + b²)φ
                na += a * a + b * b;
                nb += 2 * a * b + b * b;
            }
            if na == ta && nb == tb {
                hits.insert(self.combine(&IntCombination::from_i64(coeff)));
            }
        }
        hits.into_iter().collect()
    }
}

/// Vectors of `R` with coefficients in `[-bound, bound]` and norm exactly σ.
pub fn norm_sigma_search(bound: i64) -> Vec<GVec3> {
    Quasilattice::r().norm_search(bound, &g(3, -1))
}

/// Vectors of `Q` with coefficients in `[-bound, bound]` and unit norm.
pub fn unit_norm_search(bound: i64) -> Vec<GVec3> {
    Quasilattice::q().norm_search(bound, &g(1, 0))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn star_constants() {
        let s = star();
        assert_eq!(s.v[0], GVec3::new(g(-1, 1), g(1, 0), g(0, 0)));
        assert_eq!(s.u[0], GVec3::new(half(1, 0), half(-1, 1), half(0, 1)));
        for v in &s.v {
            assert_eq!(v.norm_sq(), g(3, -1));
        }
        for u in &s.u {
            assert_eq!(u.norm_sq(), g(1, 0));
            assert!(s.q30.contains(u));
        }
        assert_eq!(s.q30.len(), 30);
        for w in &s.q30 {
            assert_eq!(w.norm_sq(), g(1, 0));
            assert!(s.q30.contains(&-w));
        }
        let signed: BTreeSet<GVec3> = s.signed_v().into_iter().collect();
        assert_eq!(signed.len(), 12);
    }

    #[test]
    fn membership_examples() {
        let s = star();
        let r = Quasilattice::r();
        let q = Quasilattice::q();
        assert_eq!(
            r.member(&(&s.v[0] + &s.v[1])),
            Some(IntCombination::from_i64([1, 1, 0, 0, 0, 0]))
        );
        let x = &s.u[0].scale_int(2) - &s.u[4].scale_int(3);
        assert_eq!(q.member(&x), Some(IntCombination::from_i64([2, 0, 0, 0, -3, 0])));
        let third = s.u[0].scale(&GoldenRational::from_ratios(1, 3, 0, 1));
        assert_eq!(q.member(&third), None);
        assert_eq!(
            r.member(&s.v[0]),
            Some(IntCombination::from_i64([1, 0, 0, 0, 0, 0]))
        );
    }

    #[test]
    fn every_unit_vector_lies_in_q() {
        for w in &star().q30 {
            assert!(Quasilattice::q().contains(w), "{w} not in Q");
        }
    }

    #[test]
    fn half_x_is_not_in_r() {
        let v = GVec3::new(half(1, 0), g(0, 0), g(0, 0));
        assert!(!Quasilattice::r().contains(&v));
    }

    #[test]
    fn relations_hold_and_invert() {
        let s = star();
        let m = relation_matrix();
        for i in 0..3 {
            let combo = (0..3).fold(GVec3::zero(), |acc, k| &acc + &s.u[k].scale(&m[(i, k)]));
            assert_eq!(combo, s.u[3 + i]);
        }
        let minv = inverse_relation_matrix();
        for i in 0..3 {
            let combo = (0..3).fold(GVec3::zero(), |acc, k| &acc + &s.u[3 + k].scale(&minv[(i, k)]));
            assert_eq!(combo, s.u[i]);
        }
        assert_eq!(&m * &minv, GMat::identity(3));
    }

    #[test]
    fn small_search() {
        let found = norm_sigma_search(1);
        let expected: BTreeSet<GVec3> = star().signed_v().into_iter().collect();
        assert_eq!(found.into_iter().collect::<BTreeSet<_>>(), expected);
    }
}
