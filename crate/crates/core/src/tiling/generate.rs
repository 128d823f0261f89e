use std::collections::{BTreeSet, HashMap, VecDeque};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::window::{internal_star, window, HalfSpace};
use super::Rhombohedron;
use crate::error::{Error, Result};
use crate::exactlin::GVec3;
use crate::golden::GoldenRational;
use crate::quasilattice::star;

pub const GENERATOR_VERSION: &str = concat!("quasitile ", env!("CARGO_PKG_VERSION"), " cut-and-project");

/// Physical radius of the neighbourhood explored beyond the cutoff, in units
/// of σ. Tiles have diameter below 2.4σ.
const SEARCH_MARGIN: i64 = 3;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PatchConfig {
    /// Physical cutoff on tile anchors, in units of σ.
    #[serde(with = "rational_as_golden")]
    pub radius: BigRational,
    /// Internal-space offset γ; rational coordinates.
    pub shift: GVec3,
    pub window: Vec<HalfSpace>,
}

impl PatchConfig {
    pub fn new(radius: BigRational, shift: GVec3) -> Result<Self> {
        if radius.is_negative() {
            return Err(Error::Format("radius must be non-negative".into()));
        }
        if !shift.0.iter().all(GoldenRational::is_rational) {
            return Err(Error::Format("shift coordinates must be rational".into()));
        }
        Ok(PatchConfig {
            radius,
            shift,
            window: window()?,
        })
    }

    /// Radius `r` (in σ) and shift given as exact rational strings.
    pub fn parse(radius: &str, shift: [&str; 3]) -> Result<Self> {
        let r = crate::golden::parse_rational(radius)?;
        let mut s = [GoldenRational::zero(), GoldenRational::zero(), GoldenRational::zero()];
        for (slot, txt) in s.iter_mut().zip(shift) {
            *slot = GoldenRational::parse_rational(txt)?;
        }
        PatchConfig::new(r, crate::exactlin::GVec(s))
    }
}

mod rational_as_golden {
    use super::*;

    pub fn serialize<S: Serializer>(q: &BigRational, s: S) -> std::result::Result<S::Ok, S::Error> {
        GoldenRational::from_rational(q.clone()).serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<BigRational, D::Error> {
        let g = GoldenRational::deserialize(d)?;
        if !g.is_rational() {
            return Err(serde::de::Error::custom("radius must be rational"));
        }
        Ok(g.a().clone())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Patch {
    pub tiles: Vec<Rhombohedron>,
    pub config: PatchConfig,
    pub provenance: String,
}

/// Precomputed acceptance test: for each window facet, `slack(p) = base - Σ pₖ·coeffₖ`.
///
/// When every constant fits, the same test runs on `(a, b)` integer pairs
/// scaled by a common denominator, which is exact and avoids big-rational
/// allocation in the inner loop.
struct Acceptor {
    coeffs: Vec<[GoldenRational; 6]>,
    base: Vec<GoldenRational>,
    scaled: Option<Vec<ScaledFacet>>,
}

struct ScaledFacet {
    base: [i128; 2],
    coeffs: [[i128; 2]; 6],
}

fn scaled_pair(x: &GoldenRational, den: &BigInt) -> Option<[i128; 2]> {
    let d = BigRational::from_integer(den.clone());
    let a = x.a() * &d;
    let b = x.b() * &d;
    if !a.is_integer() || !b.is_integer() {
        return None;
    }
    Some([a.to_integer().to_i128()?, b.to_integer().to_i128()?])
}

/// Exact sign of `a + bφ` for integers, `None` on overflow.
fn sign_pair([a, b]: [i128; 2]) -> Option<i8> {
    let p = a.checked_mul(2)?.checked_add(b)?;
    let q = b;
    let sp = p.signum() as i8;
    let sq = q.signum() as i8;
    Some(match (sp, sq) {
        (0, 0) => 0,
        (s, 0) | (0, s) => s,
        (1, 1) => 1,
        (-1, -1) => -1,
        _ => {
            let lhs = p.checked_mul(p)?;
            let rhs = q.checked_mul(q)?.checked_mul(5)?;
            if lhs > rhs {
                sp
            } else {
                sq
            }
        }
    })
}

impl Acceptor {
    fn new(cfg: &PatchConfig) -> Self {
        let vs = internal_star();
        let coeffs: Vec<[GoldenRational; 6]> = cfg
            .window
            .iter()
            .map(|h| std::array::from_fn(|k| h.normal.dot(&vs[k])))
            .collect();
        let base: Vec<GoldenRational> = cfg.window.iter().map(|h| h.slack(&cfg.shift)).collect();
        let den = base
            .iter()
            .chain(coeffs.iter().flatten())
            .flat_map(|x| [x.a().denom(), x.b().denom()])
            .fold(BigInt::from(1), |acc, d| acc.lcm(d));
        let scaled = base
            .iter()
            .zip(&coeffs)
            .map(|(b, c)| {
                let mut sc = [[0i128; 2]; 6];
                for (slot, x) in sc.iter_mut().zip(c) {
                    *slot = scaled_pair(x, &den)?;
                }
                Some(ScaledFacet {
                    base: scaled_pair(b, &den)?,
                    coeffs: sc,
                })
            })
            .collect();
        Acceptor {
            coeffs,
            base,
            scaled,
        }
    }

    fn accept(&self, p: &[i64; 6]) -> Result<bool> {
        if let Some(verdict) = self.accept_scaled(p) {
            return verdict;
        }
        let mut on_boundary = false;
        for (c, b) in self.coeffs.iter().zip(&self.base) {
            let mut s = b.clone();
            for (k, ck) in p.iter().zip(c) {
                if *k != 0 {
                    s -= &ck.scale_int(*k);
                }
            }
            match s.signum() {
                -1 => return Ok(false),
                0 => on_boundary = true,
                _ => {}
            }
        }
        if on_boundary {
            return Err(Error::NonGenericShift { point: *p });
        }
        Ok(true)
    }

    fn accept_scaled(&self, p: &[i64; 6]) -> Option<Result<bool>> {
        let facets = self.scaled.as_ref()?;
        let mut on_boundary = false;
        for f in facets {
            let mut s = f.base;
            for (&k, c) in p.iter().zip(&f.coeffs) {
                let k = k as i128;
                s[0] = s[0].checked_sub(k.checked_mul(c[0])?)?;
                s[1] = s[1].checked_sub(k.checked_mul(c[1])?)?;
            }
            match sign_pair(s)? {
                -1 => return Some(Ok(false)),
                0 => on_boundary = true,
                _ => {}
            }
        }
        if on_boundary {
            return Some(Err(Error::NonGenericShift { point: *p }));
        }
        Some(Ok(true))
    }
}

/// Whether lattice point `p` is a vertex: `Σ pᵢ V'ᵢ + γ` strictly inside the window.
///
/// A point exactly on the window boundary is an error: the shift is not
/// generic and must be changed.
pub fn accept(p: &[i64; 6], cfg: &PatchConfig) -> Result<bool> {
    Acceptor::new(cfg).accept(p)
}

fn physical(p: &[i64; 6]) -> GVec3 {
    star()
        .v
        .iter()
        .zip(p)
        .fold(GVec3::zero(), |acc, (v, &k)| &acc + &v.scale_int(k))
}

/// `|x|² ≤ r²σ²` with `σ² = 3 - φ`.
fn within(x: &GVec3, radius: &BigRational) -> bool {
    let bound = GoldenRational::from_ints(3, -1).scale(&(radius * radius));
    x.norm_sq() <= bound
}

const TRIPLES: [[usize; 3]; 20] = {
    let mut out = [[0; 3]; 20];
    let mut n = 0;
    let mut i = 0;
    while i < 6 {
        let mut j = i + 1;
        while j < 6 {
            let mut k = j + 1;
            while k < 6 {
                out[n] = [i, j, k];
                n += 1;
                k += 1;
            }
            j += 1;
        }
        i += 1;
    }
    out
};

/// Cut-and-project patch around the origin.
///
/// Vertices are discovered by breadth-first search along `±eᵢ` from accepted
/// points near the origin, within the cutoff plus a margin. Every accepted
/// point with anchor inside the cutoff contributes the 3-faces `(p; i<j<k)`
/// whose eight corners are all accepted. Output order is lexicographic on
/// `(p, triple)`.
pub fn generate_patch(cfg: &PatchConfig) -> Result<Patch> {
    let acc = Acceptor::new(cfg);
    let outer = &cfg.radius + BigRational::from_integer(BigInt::from(SEARCH_MARGIN));
    let mut memo: HashMap<[i64; 6], bool> = HashMap::new();
    let test = |p: [i64; 6], memo: &mut HashMap<[i64; 6], bool>| -> Result<bool> {
        if let Some(&b) = memo.get(&p) {
            return Ok(b);
        }
        let b = acc.accept(&p)?;
        memo.insert(p, b);
        Ok(b)
    };

    let mut visited: BTreeSet<[i64; 6]> = BTreeSet::new();
    let mut queue = VecDeque::new();
    for idx in 0..729usize {
        let mut r = idx;
        let p: [i64; 6] = std::array::from_fn(|_| {
            let d = (r % 3) as i64 - 1;
            r /= 3;
            d
        });
        if within(&physical(&p), &outer) && test(p, &mut memo)? && visited.insert(p) {
            queue.push_back(p);
        }
    }
    while let Some(p) = queue.pop_front() {
        for k in 0..6 {
            for d in [1, -1] {
                let mut q = p;
                q[k] += d;
                if visited.contains(&q) || !within(&physical(&q), &outer) {
                    continue;
                }
                if test(q, &mut memo)? {
                    visited.insert(q);
                    queue.push_back(q);
                }
            }
        }
    }

    let v = &star().v;
    let mut tiles = Vec::new();
    for p in &visited {
        let anchor = physical(p);
        if !within(&anchor, &cfg.radius) {
            continue;
        }
        'triple: for t in TRIPLES {
            for mask in 1..8usize {
                let mut q = *p;
                for (bit, &axis) in t.iter().enumerate() {
                    if mask >> (2 - bit) & 1 == 1 {
                        q[axis] += 1;
                    }
                }
                if !test(q, &mut memo)? {
                    continue 'triple;
                }
            }
            tiles.push(Rhombohedron {
                anchor: anchor.clone(),
                edges: t.map(|i| v[i].clone()),
                lattice_origin: *p,
                axis_triple: t.map(|i| i + 1),
            });
        }
    }
    Ok(Patch {
        tiles,
        config: cfg.clone(),
        provenance: GENERATOR_VERSION.to_string(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg(radius: &str) -> PatchConfig {
        PatchConfig::parse(radius, ["1/70", "1/110", "1/130"]).unwrap()
    }

    #[test]
    fn origin_is_accepted() {
        assert!(accept(&[0; 6], &cfg("2")).unwrap());
    }

    #[test]
    fn far_points_are_rejected() {
        assert!(!accept(&[40, 0, 0, 0, 0, 0], &cfg("2")).unwrap());
    }

    #[test]
    fn boundary_hit_is_fatal() {
        // γ at the centre of the facet with normal V'₁ × V'₂. That point is
        // not rational, so the config is assembled by hand.
        let vs = internal_star();
        let n = vs[0].cross(&vs[1]);
        let half = GoldenRational::from_ratios(1, 2, 0, 1);
        let centre = (2..6).fold(GVec3::zero(), |acc, k| {
            let s = if n.dot(&vs[k]).is_positive() { half.clone() } else { -&half };
            &acc + &vs[k].scale(&s)
        });
        let bad = PatchConfig {
            shift: centre,
            ..cfg("1")
        };
        assert!(matches!(
            accept(&[0; 6], &bad),
            Err(Error::NonGenericShift { .. })
        ));
    }

    #[test]
    fn integer_and_rational_paths_agree() {
        let c = cfg("2");
        let acc = Acceptor::new(&c);
        assert!(acc.scaled.is_some());
        let slow = Acceptor {
            scaled: None,
            ..Acceptor::new(&c)
        };
        for idx in 0..4096usize {
            let p: [i64; 6] = std::array::from_fn(|k| ((idx >> (2 * k)) & 3) as i64 - 1);
            assert_eq!(acc.accept(&p).unwrap(), slow.accept(&p).unwrap(), "{p:?}");
        }
    }

    #[test]
    fn empty_radius_is_not_an_error() {
        let p = generate_patch(&cfg("0")).unwrap();
        assert!(p.tiles.len() <= 20);
        for t in &p.tiles {
            assert!(t.anchor.is_zero());
        }
    }

    #[test]
    fn small_patch_edges_from_star() {
        let p = generate_patch(&cfg("2")).unwrap();
        assert!(!p.tiles.is_empty());
        let s = star();
        for t in &p.tiles {
            for e in &t.edges {
                assert!(s.signed_v_index(e).is_some());
            }
            assert!(t.classify().is_ok());
        }
    }

    #[test]
    fn deterministic_order() {
        let a = generate_patch(&cfg("2")).unwrap();
        let b = generate_patch(&cfg("2")).unwrap();
        assert_eq!(a, b);
        let keys: Vec<_> = a.tiles.iter().map(|t| (t.lattice_origin, t.axis_triple)).collect();
        let mut sorted = keys.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(keys, sorted);
    }
}
