//! Commutative coefficient rings with identity.
//!
//! A ring is presented as a small context object ([`CoefficientRing`]) whose
//! elements live in an associated type, the usual arrangement when the ring
//! carries runtime parameters (a modulus, a tolerance). Four scalar backends
//! are provided: exact rationals, integers modulo m, and approximate real and
//! complex floats. The group ring in [`crate::groupring`] implements the same
//! trait, so anything generic over `CoefficientRing` works just as well with
//! nested group rings as coefficients.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use rand::{Rng, RngCore};
use serde_json::{json, Value};

use crate::error::{Error, Result};

/// A commutative ring with identity, exposed through a context value.
///
/// Equality comes in two flavours: exact backends compare verbatim, while
/// approximate backends accept `|x - y| <= tol * max(1, |x|, |y|)`. The
/// [`residual`](Self::residual) of a pair is the relative defect
/// `|x - y| / max(1, |x|, |y|)`, which reports use for diagnostics; for
/// approximate rings `eq` holds exactly when the residual is within
/// tolerance.
pub trait CoefficientRing: Clone + PartialEq + fmt::Debug {
    type Elem: Clone + fmt::Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }

    fn eq_elem(&self, a: &Self::Elem, b: &Self::Elem) -> bool;

    /// Relative size of `a - b`, as a plain float for reporting.
    fn residual(&self, a: &Self::Elem, b: &Self::Elem) -> f64;

    fn is_zero(&self, a: &Self::Elem) -> bool {
        self.eq_elem(a, &self.zero())
    }

    /// Whether equality is exact (no tolerance involved).
    fn is_exact(&self) -> bool;

    /// Comparison tolerance; zero for exact backends.
    fn tolerance(&self) -> f64 {
        0.0
    }

    /// Canonical image of an integer under `Z -> R`.
    #[allow(clippy::wrong_self_convention)]
    fn from_i64(&self, n: i64) -> Self::Elem;

    /// Draws a random element, used by the property suites.
    fn sample(&self, rng: &mut dyn RngCore) -> Self::Elem;

    /// The ring spec string, e.g. `q` or `zmod:7`.
    fn spec_name(&self) -> String;

    fn format_elem(&self, e: &Self::Elem) -> String;

    fn elem_to_json(&self, e: &Self::Elem) -> Value;
    fn elem_from_json(&self, v: &Value) -> Result<Self::Elem>;
}

fn rel_scale(a: f64, b: f64) -> f64 {
    1.0f64.max(a).max(b)
}

/// Exact arbitrary-precision rationals.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct RationalRing;

impl CoefficientRing for RationalRing {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }

    fn one(&self) -> BigRational {
        BigRational::from_integer(BigInt::from(1))
    }

    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }

    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }

    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }

    fn eq_elem(&self, a: &BigRational, b: &BigRational) -> bool {
        a == b
    }

    fn residual(&self, a: &BigRational, b: &BigRational) -> f64 {
        if a == b {
            return 0.0;
        }
        let diff = (a - b).abs().to_f64().unwrap_or(f64::INFINITY);
        let (fa, fb) = (
            a.abs().to_f64().unwrap_or(f64::INFINITY),
            b.abs().to_f64().unwrap_or(f64::INFINITY),
        );
        diff / rel_scale(fa, fb)
    }

    fn is_exact(&self) -> bool {
        true
    }

    fn from_i64(&self, n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    fn sample(&self, rng: &mut dyn RngCore) -> BigRational {
        let numer: i64 = rng.random_range(-8..=8);
        let denom: i64 = rng.random_range(1..=8);
        BigRational::new(BigInt::from(numer), BigInt::from(denom))
    }

    fn spec_name(&self) -> String {
        "q".into()
    }

    fn format_elem(&self, e: &BigRational) -> String {
        if e.denom() == &BigInt::from(1) {
            e.numer().to_string()
        } else {
            format!("{}/{}", e.numer(), e.denom())
        }
    }

    fn elem_to_json(&self, e: &BigRational) -> Value {
        Value::String(format!("{}/{}", e.numer(), e.denom()))
    }

    fn elem_from_json(&self, v: &Value) -> Result<BigRational> {
        match v {
            Value::String(s) => {
                let (num, den) = match s.split_once('/') {
                    Some((n, d)) => (n, d),
                    None => (s.as_str(), "1"),
                };
                let numer = BigInt::from_str(num.trim())
                    .map_err(|_| Error::Decode(format!("bad rational {s:?}")))?;
                let denom = BigInt::from_str(den.trim())
                    .map_err(|_| Error::Decode(format!("bad rational {s:?}")))?;
                if denom.is_zero() {
                    return Err(Error::Decode(format!("zero denominator in {s:?}")));
                }
                Ok(BigRational::new(numer, denom))
            }
            Value::Number(n) => n
                .as_i64()
                .map(|i| self.from_i64(i))
                .ok_or_else(|| Error::Decode(format!("bad rational {v}"))),
            _ => Err(Error::Decode(format!("expected rational, got {v}"))),
        }
    }
}

/// Integers modulo `m` (a ring for any `m >= 2`, a field only for prime `m`).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ModRing {
    modulus: u64,
}

impl ModRing {
    pub fn new(modulus: u64) -> Result<Self> {
        if modulus < 2 {
            return Err(Error::InvalidRingSpec(format!(
                "zmod modulus must be at least 2, got {modulus}"
            )));
        }
        Ok(ModRing { modulus })
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }
}

impl CoefficientRing for ModRing {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }

    fn one(&self) -> u64 {
        1 % self.modulus
    }

    fn add(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 + *b as u128) % self.modulus as u128) as u64
    }

    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.modulus - a
        }
    }

    fn mul(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 * *b as u128) % self.modulus as u128) as u64
    }

    fn eq_elem(&self, a: &u64, b: &u64) -> bool {
        a == b
    }

    fn residual(&self, a: &u64, b: &u64) -> f64 {
        if a == b {
            0.0
        } else {
            1.0
        }
    }

    fn is_exact(&self) -> bool {
        true
    }

    fn from_i64(&self, n: i64) -> u64 {
        let m = self.modulus as i128;
        (((n as i128 % m) + m) % m) as u64
    }

    fn sample(&self, rng: &mut dyn RngCore) -> u64 {
        rng.random_range(0..self.modulus)
    }

    fn spec_name(&self) -> String {
        format!("zmod:{}", self.modulus)
    }

    fn format_elem(&self, e: &u64) -> String {
        e.to_string()
    }

    fn elem_to_json(&self, e: &u64) -> Value {
        json!(e)
    }

    fn elem_from_json(&self, v: &Value) -> Result<u64> {
        v.as_u64()
            .map(|x| x % self.modulus)
            .ok_or_else(|| Error::Decode(format!("expected residue, got {v}")))
    }
}

/// 64-bit floats with relative-tolerance equality.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RealRing {
    tolerance: f64,
}

impl RealRing {
    pub fn new(tolerance: f64) -> Result<Self> {
        if tolerance.is_nan() || tolerance < 0.0 {
            return Err(Error::InvalidRingSpec(format!(
                "tolerance must be non-negative, got {tolerance}"
            )));
        }
        Ok(RealRing { tolerance })
    }
}

impl CoefficientRing for RealRing {
    type Elem = f64;

    fn zero(&self) -> f64 {
        0.0
    }

    fn one(&self) -> f64 {
        1.0
    }

    fn add(&self, a: &f64, b: &f64) -> f64 {
        a + b
    }

    fn neg(&self, a: &f64) -> f64 {
        -a
    }

    fn mul(&self, a: &f64, b: &f64) -> f64 {
        a * b
    }

    fn eq_elem(&self, a: &f64, b: &f64) -> bool {
        self.residual(a, b) <= self.tolerance
    }

    fn residual(&self, a: &f64, b: &f64) -> f64 {
        (a - b).abs() / rel_scale(a.abs(), b.abs())
    }

    fn is_exact(&self) -> bool {
        false
    }

    fn tolerance(&self) -> f64 {
        self.tolerance
    }

    fn from_i64(&self, n: i64) -> f64 {
        n as f64
    }

    fn sample(&self, rng: &mut dyn RngCore) -> f64 {
        rng.random::<f64>() * 2.0 - 1.0
    }

    fn spec_name(&self) -> String {
        "f64".into()
    }

    fn format_elem(&self, e: &f64) -> String {
        format!("{e}")
    }

    fn elem_to_json(&self, e: &f64) -> Value {
        json!(e)
    }

    fn elem_from_json(&self, v: &Value) -> Result<f64> {
        v.as_f64()
            .ok_or_else(|| Error::Decode(format!("expected float, got {v}")))
    }
}

/// Complex numbers as pairs of 64-bit floats, relative-tolerance equality.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ComplexRing {
    tolerance: f64,
}

impl ComplexRing {
    pub fn new(tolerance: f64) -> Result<Self> {
        if tolerance.is_nan() || tolerance < 0.0 {
            return Err(Error::InvalidRingSpec(format!(
                "tolerance must be non-negative, got {tolerance}"
            )));
        }
        Ok(ComplexRing { tolerance })
    }
}

impl CoefficientRing for ComplexRing {
    type Elem = Complex64;

    fn zero(&self) -> Complex64 {
        Complex64::new(0.0, 0.0)
    }

    fn one(&self) -> Complex64 {
        Complex64::new(1.0, 0.0)
    }

    fn add(&self, a: &Complex64, b: &Complex64) -> Complex64 {
        a + b
    }

    fn neg(&self, a: &Complex64) -> Complex64 {
        -a
    }

    fn mul(&self, a: &Complex64, b: &Complex64) -> Complex64 {
        a * b
    }

    fn eq_elem(&self, a: &Complex64, b: &Complex64) -> bool {
        self.residual(a, b) <= self.tolerance
    }

    fn residual(&self, a: &Complex64, b: &Complex64) -> f64 {
        (a - b).norm() / rel_scale(a.norm(), b.norm())
    }

    fn is_exact(&self) -> bool {
        false
    }

    fn tolerance(&self) -> f64 {
        self.tolerance
    }

    fn from_i64(&self, n: i64) -> Complex64 {
        Complex64::new(n as f64, 0.0)
    }

    fn sample(&self, rng: &mut dyn RngCore) -> Complex64 {
        let re = rng.random::<f64>() * 2.0 - 1.0;
        let im = rng.random::<f64>() * 2.0 - 1.0;
        Complex64::new(re, im)
    }

    fn spec_name(&self) -> String {
        "c64".into()
    }

    fn format_elem(&self, e: &Complex64) -> String {
        if e.im >= 0.0 {
            format!("{}+{}i", e.re, e.im)
        } else {
            format!("{}-{}i", e.re, -e.im)
        }
    }

    fn elem_to_json(&self, e: &Complex64) -> Value {
        json!([e.re, e.im])
    }

    fn elem_from_json(&self, v: &Value) -> Result<Complex64> {
        let arr = v
            .as_array()
            .filter(|a| a.len() == 2)
            .ok_or_else(|| Error::Decode(format!("expected [re, im], got {v}")))?;
        let re = arr[0]
            .as_f64()
            .ok_or_else(|| Error::Decode(format!("bad real part in {v}")))?;
        let im = arr[1]
            .as_f64()
            .ok_or_else(|| Error::Decode(format!("bad imaginary part in {v}")))?;
        Ok(Complex64::new(re, im))
    }
}

/// A scalar ring selected at runtime, as the CLI sees it.
#[derive(Debug, Clone, PartialEq)]
pub enum RingHandle {
    Rational(RationalRing),
    Mod(ModRing),
    Real(RealRing),
    Complex(ComplexRing),
}

pub const DEFAULT_TOLERANCE: f64 = 1e-9;

/// Parses a ring spec string: `q`, `zmod:<m>`, `f64` or `c64`.
///
/// `tolerance` applies to the approximate kinds and defaults to `1e-9`.
pub fn make_ring(spec: &str, tolerance: Option<f64>) -> Result<RingHandle> {
    let tol = tolerance.unwrap_or(DEFAULT_TOLERANCE);
    let lower = spec.trim().to_ascii_lowercase();
    match lower.as_str() {
        "q" => Ok(RingHandle::Rational(RationalRing)),
        "f64" => Ok(RingHandle::Real(RealRing::new(tol)?)),
        "c64" => Ok(RingHandle::Complex(ComplexRing::new(tol)?)),
        _ => {
            if let Some(m) = lower.strip_prefix("zmod:") {
                let modulus: u64 = m
                    .parse()
                    .map_err(|_| Error::InvalidRingSpec(spec.to_string()))?;
                Ok(RingHandle::Mod(ModRing::new(modulus)?))
            } else {
                Err(Error::InvalidRingSpec(spec.to_string()))
            }
        }
    }
}

impl RingHandle {
    pub fn spec_name(&self) -> String {
        match self {
            RingHandle::Rational(r) => r.spec_name(),
            RingHandle::Mod(r) => r.spec_name(),
            RingHandle::Real(r) => r.spec_name(),
            RingHandle::Complex(r) => r.spec_name(),
        }
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, RingHandle::Rational(_) | RingHandle::Mod(_))
    }

    /// Whether the fast transform path is available for this ring.
    pub fn supports_transform(&self) -> bool {
        !self.is_exact()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn assert_ring_axioms<R: CoefficientRing>(ring: &R, samples: usize, seed: u64) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..samples {
            let a = ring.sample(&mut rng);
            let b = ring.sample(&mut rng);
            let c = ring.sample(&mut rng);
            // additive group
            assert!(ring.eq_elem(
                &ring.add(&ring.add(&a, &b), &c),
                &ring.add(&a, &ring.add(&b, &c))
            ));
            assert!(ring.eq_elem(&ring.add(&a, &b), &ring.add(&b, &a)));
            assert!(ring.eq_elem(&ring.add(&a, &ring.zero()), &a));
            assert!(ring.eq_elem(&ring.add(&a, &ring.neg(&a)), &ring.zero()));
            // multiplicative monoid, commutative
            assert!(ring.eq_elem(
                &ring.mul(&ring.mul(&a, &b), &c),
                &ring.mul(&a, &ring.mul(&b, &c))
            ));
            assert!(ring.eq_elem(&ring.mul(&a, &b), &ring.mul(&b, &a)));
            assert!(ring.eq_elem(&ring.mul(&a, &ring.one()), &a));
            // distributivity
            assert!(ring.eq_elem(
                &ring.mul(&a, &ring.add(&b, &c)),
                &ring.add(&ring.mul(&a, &b), &ring.mul(&a, &c))
            ));
        }
    }

    #[test]
    fn axioms_all_kinds() {
        assert_ring_axioms(&RationalRing, 1000, 11);
        assert_ring_axioms(&ModRing::new(7).unwrap(), 1000, 12);
        assert_ring_axioms(&ModRing::new(12).unwrap(), 1000, 13);
        assert_ring_axioms(&RealRing::new(DEFAULT_TOLERANCE).unwrap(), 1000, 14);
        assert_ring_axioms(&ComplexRing::new(DEFAULT_TOLERANCE).unwrap(), 1000, 15);
    }

    #[test]
    fn make_ring_examples() {
        let zm = match make_ring("zmod:7", None).unwrap() {
            RingHandle::Mod(r) => r,
            other => panic!("expected zmod, got {other:?}"),
        };
        assert_eq!(zm.add(&1, &6), 0);

        let q = RationalRing;
        let two_thirds = BigRational::new(BigInt::from(2), BigInt::from(3));
        let one_sixth = BigRational::new(BigInt::from(1), BigInt::from(6));
        let five_sixths = BigRational::new(BigInt::from(5), BigInt::from(6));
        assert_eq!(q.add(&two_thirds, &one_sixth), five_sixths);

        let f = match make_ring("f64", Some(1e-9)).unwrap() {
            RingHandle::Real(r) => r,
            other => panic!("expected f64, got {other:?}"),
        };
        assert!(f.eq_elem(&(0.1 + 0.2), &0.3));
        assert!(!f.eq_elem(&1.0, &1.1));
    }

    #[test]
    fn make_ring_rejects_bad_specs() {
        assert!(matches!(
            make_ring("zmod:1", None),
            Err(Error::InvalidRingSpec(_))
        ));
        assert!(matches!(
            make_ring("octonions", None),
            Err(Error::InvalidRingSpec(_))
        ));
        assert!(matches!(
            make_ring("zmod:x", None),
            Err(Error::InvalidRingSpec(_))
        ));
        assert!(make_ring("f64", Some(-1.0)).is_err());
    }

    #[test]
    fn mod_ring_from_i64_reduces() {
        let r = ModRing::new(5).unwrap();
        assert_eq!(r.from_i64(-3), 2);
        assert_eq!(r.from_i64(12), 2);
    }

    #[test]
    fn json_round_trips() {
        let q = RationalRing;
        let x = BigRational::new(BigInt::from(-7), BigInt::from(3));
        assert_eq!(q.elem_from_json(&q.elem_to_json(&x)).unwrap(), x);

        let c = ComplexRing::new(1e-9).unwrap();
        let z = Complex64::new(1.25, -0.5);
        let back = c.elem_from_json(&c.elem_to_json(&z)).unwrap();
        assert!(c.eq_elem(&back, &z));
    }
}
