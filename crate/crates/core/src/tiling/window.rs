use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactlin::GVec3;
use crate::golden::GoldenRational;
use crate::quasilattice::star;

/// Open half-space `{x : normal·x < offset}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HalfSpace {
    pub normal: GVec3,
    pub offset: GoldenRational,
}

impl HalfSpace {
    /// `offset - normal·x`; positive strictly inside.
    pub fn slack(&self, x: &GVec3) -> GoldenRational {
        &self.offset - &self.normal.dot(x)
    }
}

/// Galois conjugates of `V₁..V₆`: the star of internal space.
pub fn internal_star() -> [GVec3; 6] {
    star().v.clone().map(|v| v.conj())
}

/// The rhombic triacontahedron `Σₖ [-½, ½]·V'ₖ` as 30 half-spaces.
///
/// Each pair `i < j` of internal star vectors spans a facet direction with
/// normal `V'ᵢ × V'ⱼ`; the support value along it is `½ Σₖ |n·V'ₖ|`. The
/// list holds `+n` then `-n` for each pair, pairs in lexicographic order.
pub fn window() -> Result<Vec<HalfSpace>> {
    let vs = internal_star();
    let mut out = Vec::with_capacity(30);
    for i in 0..6 {
        for j in i + 1..6 {
            let n = vs[i].cross(&vs[j]);
            if n.is_zero() {
                return Err(Error::CorruptStar(format!(
                    "internal star vectors {} and {} are parallel",
                    i + 1,
                    j + 1
                )));
            }
            let h = vs
                .iter()
                .map(|v| n.dot(v).abs())
                .sum::<GoldenRational>()
                .scale(&num_rational::BigRational::new(1.into(), 2.into()));
            out.push(HalfSpace {
                normal: n.clone(),
                offset: h.clone(),
            });
            out.push(HalfSpace { normal: -n, offset: h });
        }
    }
    Ok(out)
}
