//! Exact arithmetic in the golden field ℚ(φ).
//!
//! Every element is stored as `a + bφ` with `a`, `b` arbitrary-precision
//! rationals in lowest terms. Products are reduced with `φ² = φ + 1`, so two
//! values are equal exactly when their coefficients are.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::Error as _;
use serde::ser::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::GoldenError;

/// Positive root of `x² = x + 1`.
pub const PHI_F64: f64 = 1.618_033_988_749_895;
/// The other root, `(1 - √5) / 2`.
pub const PHI_CONJ_F64: f64 = -0.618_033_988_749_894_9;

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct GoldenRational {
    a: BigRational,
    b: BigRational,
}

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

impl GoldenRational {
    pub fn new(a: BigRational, b: BigRational) -> Self {
        // `BigRational` keeps itself reduced with a positive denominator.
        GoldenRational { a, b }
    }

    /// `a_num/a_den + (b_num/b_den) φ`. Panics on a zero denominator.
    pub fn from_ratios(a_num: i64, a_den: i64, b_num: i64, b_den: i64) -> Self {
        GoldenRational::new(rat(a_num, a_den), rat(b_num, b_den))
    }

    /// `a + bφ` with integer coefficients.
    pub fn from_ints(a: i64, b: i64) -> Self {
        GoldenRational::from_ratios(a, 1, b, 1)
    }

    pub fn from_rational(q: BigRational) -> Self {
        GoldenRational::new(q, BigRational::zero())
    }

    pub fn int(n: i64) -> Self {
        GoldenRational::from_ints(n, 0)
    }

    pub fn zero() -> Self {
        GoldenRational::default()
    }

    pub fn one() -> Self {
        GoldenRational::int(1)
    }

    pub fn phi() -> Self {
        GoldenRational::from_ints(0, 1)
    }

    /// `1/φ = φ - 1`.
    pub fn phi_inv() -> Self {
        GoldenRational::from_ints(-1, 1)
    }

    /// Coefficient of 1.
    pub fn a(&self) -> &BigRational {
        &self.a
    }

    /// Coefficient of φ.
    pub fn b(&self) -> &BigRational {
        &self.b
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    /// True when both coefficients are integers, i.e. the value lies in ℤ[φ].
    pub fn is_golden_integer(&self) -> bool {
        self.a.is_integer() && self.b.is_integer()
    }

    /// Galois conjugation `φ ↦ 1 - φ`: `a + bφ ↦ (a + b) - bφ`.
    pub fn conj(&self) -> Self {
        GoldenRational::new(&self.a + &self.b, -&self.b)
    }

    /// Field norm `x · conj(x) = a² + ab - b²`, a rational.
    pub fn norm(&self) -> BigRational {
        &self.a * &self.a + &self.a * &self.b - &self.b * &self.b
    }

    pub fn recip(&self) -> Result<Self, GoldenError> {
        if self.is_zero() {
            return Err(GoldenError::DivisionByZero);
        }
        // The norm of a nonzero element is nonzero because √5 is irrational.
        let n = self.norm();
        let c = self.conj();
        Ok(GoldenRational::new(c.a / &n, c.b / &n))
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self, GoldenError> {
        Ok(self * &rhs.recip()?)
    }

    pub fn scale(&self, q: &BigRational) -> Self {
        GoldenRational::new(&self.a * q, &self.b * q)
    }

    pub fn scale_int(&self, n: i64) -> Self {
        let n = BigRational::from_integer(BigInt::from(n));
        self.scale(&n)
    }

    /// Sign of the real value under `φ ≈ 1.618`, decided with rationals only.
    ///
    /// `a + bφ = (p + q√5) / 2` with `p = 2a + b`, `q = b`.
    pub fn signum(&self) -> i8 {
        let p: BigRational = &self.a + &self.a + &self.b;
        let q = &self.b;
        let sp = sign_of(&p);
        let sq = sign_of(q);
        match (sp, sq) {
            (0, 0) => 0,
            (s, 0) | (0, s) => s,
            (1, 1) => 1,
            (-1, -1) => -1,
            _ => {
                // Opposite signs: compare p² with 5q².
                let lhs = &p * &p;
                let rhs = q * q * BigRational::from_integer(BigInt::from(5));
                match lhs.cmp(&rhs) {
                    Ordering::Greater => sp,
                    Ordering::Less => sq,
                    Ordering::Equal => unreachable!("√5 is irrational"),
                }
            }
        }
    }

    pub fn is_positive(&self) -> bool {
        self.signum() > 0
    }

    pub fn is_negative(&self) -> bool {
        self.signum() < 0
    }

    pub fn abs(&self) -> Self {
        if self.is_negative() {
            -self
        } else {
            self.clone()
        }
    }

    /// Values at `φ = (1+√5)/2` and at `φ = (1-√5)/2`. For display and export only.
    pub fn embed(&self) -> (f64, f64) {
        let a = ratio_to_f64(&self.a);
        let b = ratio_to_f64(&self.b);
        (a + b * PHI_F64, a + b * PHI_CONJ_F64)
    }

    pub fn to_f64(&self) -> f64 {
        self.embed().0
    }

    /// `φⁿ` for any integer `n`.
    pub fn phi_pow(n: i32) -> Self {
        let base = if n >= 0 {
            GoldenRational::phi()
        } else {
            GoldenRational::phi_inv()
        };
        let mut acc = GoldenRational::one();
        for _ in 0..n.unsigned_abs() {
            acc = &acc * &base;
        }
        acc
    }

    /// The four-integer wire form `[a_num, a_den, b_num, b_den]`.
    pub fn to_wire(&self) -> [BigInt; 4] {
        [
            self.a.numer().clone(),
            self.a.denom().clone(),
            self.b.numer().clone(),
            self.b.denom().clone(),
        ]
    }

    pub fn from_wire(w: [BigInt; 4]) -> Result<Self, GoldenError> {
        let [an, ad, bn, bd] = w;
        if !ad.is_positive() || !bd.is_positive() {
            return Err(GoldenError::BadDenominator);
        }
        Ok(GoldenRational::new(
            BigRational::new(an, ad),
            BigRational::new(bn, bd),
        ))
    }

    /// Parses an exact rational such as `"8"`, `"-3/2"` into a field element.
    pub fn parse_rational(s: &str) -> Result<Self, GoldenError> {
        parse_rational(s).map(GoldenRational::from_rational)
    }

    /// Human-readable exact form, e.g. `4 - 2φ`, `-1/2 + 3/5φ`.
    pub fn exact_string(&self) -> String {
        self.to_string()
    }

    /// Recognizes `±φⁿ` and `±2φⁿ` for small `n`, rendering e.g. `-1/φ` or `2/φ²`.
    pub fn closed_form(&self) -> Option<String> {
        if self.is_zero() {
            return None;
        }
        let sign = if self.is_negative() { "-" } else { "" };
        let mag = self.abs();
        for coef in [1i64, 2] {
            for n in -6i32..=6 {
                if GoldenRational::phi_pow(n).scale_int(coef) == mag {
                    let c = if coef == 1 { String::new() } else { coef.to_string() };
                    let sup = |k: u32| match k {
                        1 => String::new(),
                        2 => "²".to_string(),
                        3 => "³".to_string(),
                        k => format!("^{k}"),
                    };
                    let s = match n.cmp(&0) {
                        Ordering::Equal => {
                            if coef == 1 {
                                "1".to_string()
                            } else {
                                c
                            }
                        }
                        Ordering::Greater => format!("{c}φ{}", sup(n as u32)),
                        Ordering::Less => {
                            let num = if coef == 1 { "1".to_string() } else { c };
                            format!("{num}/φ{}", sup(n.unsigned_abs()))
                        }
                    };
                    return Some(format!("{sign}{s}"));
                }
            }
        }
        None
    }
}

fn sign_of(q: &BigRational) -> i8 {
    if q.is_positive() {
        1
    } else if q.is_negative() {
        -1
    } else {
        0
    }
}

fn ratio_to_f64(q: &BigRational) -> f64 {
    match (q.numer().to_f64(), q.denom().to_f64()) {
        (Some(n), Some(d)) => n / d,
        _ => f64::NAN,
    }
}

pub fn parse_rational(s: &str) -> Result<BigRational, GoldenError> {
    let bad = || GoldenError::Parse(s.to_string());
    let s = s.trim();
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = n.parse().map_err(|_| bad())?;
    let d: BigInt = d.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(bad());
    }
    Ok(BigRational::new(n, d))
}

impl Ord for GoldenRational {
    /// Order of the real values.
    fn cmp(&self, other: &Self) -> Ordering {
        match (self - other).signum() {
            1 => Ordering::Greater,
            -1 => Ordering::Less,
            _ => Ordering::Equal,
        }
    }
}

impl PartialOrd for GoldenRational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for GoldenRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let a0 = self.a.is_zero();
        let b0 = self.b.is_zero();
        if a0 && b0 {
            return write!(f, "0");
        }
        if !a0 {
            write!(f, "{}", self.a)?;
        }
        if !b0 {
            let mag = self.b.abs();
            let coef = if mag.is_one() {
                String::new()
            } else {
                mag.to_string()
            };
            match (a0, self.b.is_negative()) {
                (true, true) => write!(f, "-{coef}φ")?,
                (true, false) => write!(f, "{coef}φ")?,
                (false, true) => write!(f, " - {coef}φ")?,
                (false, false) => write!(f, " + {coef}φ")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for GoldenRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl From<i64> for GoldenRational {
    fn from(n: i64) -> Self {
        GoldenRational::int(n)
    }
}

impl From<BigRational> for GoldenRational {
    fn from(q: BigRational) -> Self {
        GoldenRational::from_rational(q)
    }
}

impl<'a> Add<&'a GoldenRational> for &'a GoldenRational {
    type Output = GoldenRational;
    fn add(self, rhs: &GoldenRational) -> GoldenRational {
        GoldenRational::new(&self.a + &rhs.a, &self.b + &rhs.b)
    }
}

impl<'a> Sub<&'a GoldenRational> for &'a GoldenRational {
    type Output = GoldenRational;
    fn sub(self, rhs: &GoldenRational) -> GoldenRational {
        GoldenRational::new(&self.a - &rhs.a, &self.b - &rhs.b)
    }
}

impl<'a> Mul<&'a GoldenRational> for &'a GoldenRational {
    type Output = GoldenRational;
    fn mul(self, rhs: &GoldenRational) -> GoldenRational {
        // (a + bφ)(c + dφ) = ac + bd + (ad + bc + bd)φ
        let bd = &self.b * &rhs.b;
        GoldenRational::new(
            &self.a * &rhs.a + &bd,
            &self.a * &rhs.b + &self.b * &rhs.a + bd,
        )
    }
}

impl Neg for &GoldenRational {
    type Output = GoldenRational;
    fn neg(self) -> GoldenRational {
        GoldenRational::new(-&self.a, -&self.b)
    }
}

impl Neg for GoldenRational {
    type Output = GoldenRational;
    fn neg(self) -> GoldenRational {
        GoldenRational::new(-self.a, -self.b)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<GoldenRational> for GoldenRational {
            type Output = GoldenRational;
            fn $m(self, rhs: GoldenRational) -> GoldenRational {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a GoldenRational> for GoldenRational {
            type Output = GoldenRational;
            fn $m(self, rhs: &GoldenRational) -> GoldenRational {
                (&self).$m(rhs)
            }
        }
        impl<'a> $tr<GoldenRational> for &'a GoldenRational {
            type Output = GoldenRational;
            fn $m(self, rhs: GoldenRational) -> GoldenRational {
                self.$m(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl AddAssign<&GoldenRational> for GoldenRational {
    fn add_assign(&mut self, rhs: &GoldenRational) {
        self.a += &rhs.a;
        self.b += &rhs.b;
    }
}

impl SubAssign<&GoldenRational> for GoldenRational {
    fn sub_assign(&mut self, rhs: &GoldenRational) {
        self.a -= &rhs.a;
        self.b -= &rhs.b;
    }
}

impl std::iter::Sum for GoldenRational {
    fn sum<I: Iterator<Item = GoldenRational>>(iter: I) -> Self {
        iter.fold(GoldenRational::zero(), |mut acc, x| {
            acc += &x;
            acc
        })
    }
}

impl Serialize for GoldenRational {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut out = [0i128; 4];
        for (slot, v) in out.iter_mut().zip(self.to_wire()) {
            *slot = v
                .to_i128()
                .ok_or_else(|| S::Error::custom("golden coefficient exceeds 128 bits"))?;
        }
        out.serialize(s)
    }
}

impl<'de> Deserialize<'de> for GoldenRational {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let w = <[i128; 4]>::deserialize(d)?;
        GoldenRational::from_wire(w.map(BigInt::from)).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(a: i64, b: i64) -> GoldenRational {
        GoldenRational::from_ints(a, b)
    }

    #[test]
    fn phi_squared() {
        let phi = GoldenRational::phi();
        assert_eq!(&phi * &phi, g(1, 1));
    }

    #[test]
    fn identities() {
        let x = GoldenRational::from_ratios(3, 7, -2, 5);
        assert_eq!(&x + &GoldenRational::zero(), x);
        assert_eq!(&x * &GoldenRational::one(), x);
    }

    #[test]
    fn reciprocal_of_phi() {
        assert_eq!(GoldenRational::phi().recip().unwrap(), g(-1, 1));
        let inv = GoldenRational::phi_inv();
        assert_eq!(&inv * &inv, g(2, -1));
    }

    #[test]
    fn division_by_zero_is_an_error() {
        assert_eq!(
            GoldenRational::one().checked_div(&GoldenRational::zero()),
            Err(GoldenError::DivisionByZero)
        );
    }

    #[test]
    fn conjugation() {
        assert_eq!(GoldenRational::phi().conj(), g(1, -1));
        let x = GoldenRational::phi();
        let y = g(1, 1);
        assert_eq!((&x * &y), g(1, 2));
        assert_eq!((&x * &y).conj(), g(3, -2));
        assert_eq!(x.conj() * y.conj(), g(3, -2));
    }

    #[test]
    fn signs() {
        assert_eq!(g(-1, 1).signum(), 1);
        assert_eq!(GoldenRational::zero().signum(), 0);
        assert_eq!(g(2, -1).signum(), 1);
        assert_eq!(g(1, -1).signum(), -1);
        // 55/34 < φ < 34/21 (Fibonacci convergents)
        assert_eq!((GoldenRational::phi() - GoldenRational::from_ratios(55, 34, 0, 1)).signum(), 1);
        assert_eq!((GoldenRational::phi() - GoldenRational::from_ratios(34, 21, 0, 1)).signum(), -1);
    }

    #[test]
    fn embeddings() {
        let (p, c) = GoldenRational::phi().embed();
        assert!((p - 1.618_033_9).abs() < 1e-7);
        assert!((c + 0.618_033_9).abs() < 1e-7);
        let s2 = g(3, -1).embed().0;
        assert!((s2 - 1.381_966_0).abs() < 1e-7);
        let x = GoldenRational::from_ratios(5, 3, -7, 2);
        assert!((x.embed().0 - x.conj().embed().1).abs() < 1e-12);
    }

    #[test]
    fn display_and_closed_forms() {
        assert_eq!(g(4, -2).to_string(), "4 - 2φ");
        assert_eq!(g(0, -1).to_string(), "-φ");
        assert_eq!(GoldenRational::from_ratios(-1, 2, 3, 5).to_string(), "-1/2 + 3/5φ");
        assert_eq!(g(1, -1).closed_form().as_deref(), Some("-1/φ"));
        assert_eq!(g(4, -2).closed_form().as_deref(), Some("2/φ²"));
        assert_eq!(g(-3, 2).closed_form().as_deref(), Some("1/φ³"));
        assert_eq!(g(3, 0).closed_form(), None);
    }

    #[test]
    fn wire_form() {
        let x = GoldenRational::from_ratios(-3, 6, 5, 10);
        let json = serde_json::to_string(&x).unwrap();
        assert_eq!(json, "[-1,2,1,2]");
        let back: GoldenRational = serde_json::from_str(&json).unwrap();
        assert_eq!(back, x);
        assert!(serde_json::from_str::<GoldenRational>("[1,0,1,1]").is_err());
        assert!(serde_json::from_str::<GoldenRational>("[1,-2,1,1]").is_err());
    }

    #[test]
    fn rational_parsing() {
        assert_eq!(GoldenRational::parse_rational("8").unwrap(), g(8, 0));
        assert_eq!(
            GoldenRational::parse_rational(" -3/2 ").unwrap(),
            GoldenRational::from_ratios(-3, 2, 0, 1)
        );
        assert!(GoldenRational::parse_rational("1.5").is_err());
        assert!(GoldenRational::parse_rational("1/0").is_err());
    }
}
