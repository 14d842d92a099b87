//! The group ring R[G]: formal sums `sum_g a_g |g>` over a finite abelian
//! group with coefficients in a commutative ring.
//!
//! Addition is componentwise and multiplication is the convolution induced
//! by the group law,
//!
//! ```text
//! (a * b)_k = sum_{g h = k} a_g b_h,
//! ```
//!
//! which makes R[G] a commutative ring with identity `1_R |1_G>` whenever R
//! is commutative with identity and G is abelian.
//!
//! [`GroupRing`] itself implements [`CoefficientRing`], so a group ring may
//! serve as the coefficient ring of another group ring. Nesting to depth d
//! yields the order-d tensor ring: an element of `(R[G])[H]` is a matrix of
//! scalars indexed by `H x G`, an element of `((R[G])[H])[K]` a third-order
//! coefficient cube, and so on, with the same convolution code running at
//! every level (outer products multiply coefficients with the inner ring's
//! multiplication, which is itself a convolution).

use rand::RngCore;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::group::{FiniteAbelianGroup, GroupElement};
use crate::ring::CoefficientRing;

/// The ring context for `R[G]`: a group together with a coefficient ring.
#[derive(Debug, Clone, PartialEq)]
pub struct GroupRing<R: CoefficientRing> {
    group: FiniteAbelianGroup,
    coeff: R,
}

/// An element of `R[G]`, stored as a dense coefficient table in canonical
/// group-index order.
#[derive(Debug, Clone)]
pub struct GroupRingElement<R: CoefficientRing> {
    ring: GroupRing<R>,
    coeffs: Vec<R::Elem>,
}

impl<R: CoefficientRing> GroupRing<R> {
    pub fn new(group: FiniteAbelianGroup, coeff: R) -> Self {
        GroupRing { group, coeff }
    }

    pub fn group(&self) -> &FiniteAbelianGroup {
        &self.group
    }

    pub fn coeff(&self) -> &R {
        &self.coeff
    }

    pub fn zero_element(&self) -> GroupRingElement<R> {
        GroupRingElement {
            ring: self.clone(),
            coeffs: vec![self.coeff.zero(); self.group.order()],
        }
    }

    /// The multiplicative identity `1_R |1_G>`.
    pub fn identity_element(&self) -> GroupRingElement<R> {
        self.embed_scalar(&self.coeff.one())
    }

    /// Embeds a scalar `r` as `r |1_G>`. Convolving `embed_scalar(r)` with
    /// any element scales every coefficient by `r`.
    pub fn embed_scalar(&self, r: &R::Elem) -> GroupRingElement<R> {
        let mut coeffs = vec![self.coeff.zero(); self.group.order()];
        coeffs[0] = r.clone();
        GroupRingElement {
            ring: self.clone(),
            coeffs,
        }
    }

    /// The basis element `|g>` (coefficient `1_R` at `g`).
    pub fn basis_element(&self, g: &GroupElement) -> Result<GroupRingElement<R>> {
        let idx = self.group.index_of(g)?;
        let mut coeffs = vec![self.coeff.zero(); self.group.order()];
        coeffs[idx] = self.coeff.one();
        Ok(GroupRingElement {
            ring: self.clone(),
            coeffs,
        })
    }

    pub fn from_coeffs(&self, coeffs: Vec<R::Elem>) -> Result<GroupRingElement<R>> {
        if coeffs.len() != self.group.order() {
            return Err(Error::Mismatch(format!(
                "coefficient table length {} does not match group order {}",
                coeffs.len(),
                self.group.order()
            )));
        }
        Ok(GroupRingElement {
            ring: self.clone(),
            coeffs,
        })
    }

    /// Convenience constructor from integer coefficients.
    pub fn from_ints(&self, ints: &[i64]) -> Result<GroupRingElement<R>> {
        self.from_coeffs(ints.iter().map(|&n| self.coeff.from_i64(n)).collect())
    }

    pub fn sample_element(&self, rng: &mut dyn RngCore) -> GroupRingElement<R> {
        GroupRingElement {
            ring: self.clone(),
            coeffs: (0..self.group.order())
                .map(|_| self.coeff.sample(rng))
                .collect(),
        }
    }
}

fn check_same<R: CoefficientRing>(a: &GroupRingElement<R>, b: &GroupRingElement<R>) -> Result<()> {
    if a.ring == b.ring {
        Ok(())
    } else {
        Err(Error::Mismatch(format!(
            "elements of {} and {} cannot be combined",
            a.ring.spec_name(),
            b.ring.spec_name()
        )))
    }
}

impl<R: CoefficientRing> GroupRingElement<R> {
    pub fn ring(&self) -> &GroupRing<R> {
        &self.ring
    }

    pub fn group(&self) -> &FiniteAbelianGroup {
        &self.ring.group
    }

    pub fn coeffs(&self) -> &[R::Elem] {
        &self.coeffs
    }

    pub fn coeff_at_index(&self, i: usize) -> &R::Elem {
        &self.coeffs[i]
    }

    pub fn coeff_at(&self, g: &GroupElement) -> Result<&R::Elem> {
        Ok(&self.coeffs[self.ring.group.index_of(g)?])
    }

    /// Componentwise sum.
    pub fn add(&self, other: &Self) -> Result<Self> {
        check_same(self, other)?;
        let r = &self.ring.coeff;
        Ok(GroupRingElement {
            ring: self.ring.clone(),
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| r.add(a, b))
                .collect(),
        })
    }

    pub fn neg(&self) -> Self {
        let r = &self.ring.coeff;
        GroupRingElement {
            ring: self.ring.clone(),
            coeffs: self.coeffs.iter().map(|a| r.neg(a)).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    /// Convolution product over all `|G|^2` pairs,
    /// `c_k = sum_{g h = k} a_g b_h`. Exact for exact coefficient rings.
    pub fn convolve_naive(&self, other: &Self) -> Result<Self> {
        check_same(self, other)?;
        let group = &self.ring.group;
        let r = &self.ring.coeff;
        let mut coeffs = vec![r.zero(); group.order()];
        for (i, a) in self.coeffs.iter().enumerate() {
            if r.is_exact() && r.eq_elem(a, &r.zero()) {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                let k = group.compose_idx(i, j);
                let term = r.mul(a, b);
                coeffs[k] = r.add(&coeffs[k], &term);
            }
        }
        Ok(GroupRingElement {
            ring: self.ring.clone(),
            coeffs,
        })
    }

    /// Scales every coefficient by `r`; equal to convolving with
    /// `embed_scalar(r)`.
    pub fn scale(&self, r: &R::Elem) -> Self {
        let ring = &self.ring.coeff;
        GroupRingElement {
            ring: self.ring.clone(),
            coeffs: self.coeffs.iter().map(|a| ring.mul(r, a)).collect(),
        }
    }

    /// The ring anti-isomorphism `phi`: moves the coefficient of `g` to
    /// `g^{-1}`. Satisfies `phi(phi(a)) = a` and
    /// `phi(a * b) = phi(b) * phi(a)`.
    pub fn anti_involution(&self) -> Self {
        let group = &self.ring.group;
        let zero = self.ring.coeff.zero();
        let mut coeffs = vec![zero; group.order()];
        for (i, a) in self.coeffs.iter().enumerate() {
            coeffs[group.inverse_idx(i)] = a.clone();
        }
        GroupRingElement {
            ring: self.ring.clone(),
            coeffs,
        }
    }

    pub fn eq_elem(&self, other: &Self) -> Result<bool> {
        check_same(self, other)?;
        let r = &self.ring.coeff;
        Ok(self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .all(|(a, b)| r.eq_elem(a, b)))
    }

    /// Largest coefficient-wise relative defect against `other`.
    pub fn residual(&self, other: &Self) -> Result<f64> {
        check_same(self, other)?;
        let r = &self.ring.coeff;
        Ok(self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| r.residual(a, b))
            .fold(0.0, f64::max))
    }

    pub fn is_zero(&self) -> bool {
        let r = &self.ring.coeff;
        self.coeffs.iter().all(|a| r.is_zero(a))
    }

    /// Serializes as `{"group": ..., "ring": ..., "coeffs": [...]}` with the
    /// coefficients in canonical index order.
    pub fn to_json(&self) -> Value {
        json!({
            "group": self.ring.group.to_string(),
            "ring": self.ring.coeff.spec_name(),
            "coeffs": Value::Array(
                self.coeffs.iter().map(|c| self.ring.coeff.elem_to_json(c)).collect()
            ),
        })
    }

    /// Parses an element serialized by [`to_json`](Self::to_json). The
    /// header must match the expected ring context.
    pub fn from_json(ring: &GroupRing<R>, v: &Value) -> Result<Self> {
        let obj = v
            .as_object()
            .ok_or_else(|| Error::Decode("expected an element object".into()))?;
        let group_name = obj.get("group").and_then(Value::as_str).unwrap_or("");
        if group_name != ring.group.to_string() {
            return Err(Error::Mismatch(format!(
                "element group {group_name:?} does not match {}",
                ring.group
            )));
        }
        let ring_name = obj.get("ring").and_then(Value::as_str).unwrap_or("");
        if ring_name != ring.coeff.spec_name() {
            return Err(Error::Mismatch(format!(
                "element ring {ring_name:?} does not match {}",
                ring.coeff.spec_name()
            )));
        }
        let coeffs = obj
            .get("coeffs")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::Decode("missing coeffs array".into()))?;
        let parsed: Result<Vec<R::Elem>> = coeffs
            .iter()
            .map(|c| ring.coeff.elem_from_json(c))
            .collect();
        ring.from_coeffs(parsed?)
    }

    pub fn format(&self) -> String {
        self.ring.format_elem(self)
    }
}

impl<R: CoefficientRing> CoefficientRing for GroupRing<R> {
    type Elem = GroupRingElement<R>;

    fn zero(&self) -> Self::Elem {
        self.zero_element()
    }

    fn one(&self) -> Self::Elem {
        self.identity_element()
    }

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        a.add(b).expect("group ring context mismatch")
    }

    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        a.neg()
    }

    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        a.convolve_naive(b).expect("group ring context mismatch")
    }

    fn eq_elem(&self, a: &Self::Elem, b: &Self::Elem) -> bool {
        a.eq_elem(b).expect("group ring context mismatch")
    }

    fn residual(&self, a: &Self::Elem, b: &Self::Elem) -> f64 {
        a.residual(b).expect("group ring context mismatch")
    }

    fn is_exact(&self) -> bool {
        self.coeff.is_exact()
    }

    fn tolerance(&self) -> f64 {
        self.coeff.tolerance()
    }

    fn from_i64(&self, n: i64) -> Self::Elem {
        self.embed_scalar(&self.coeff.from_i64(n))
    }

    fn sample(&self, rng: &mut dyn RngCore) -> Self::Elem {
        self.sample_element(rng)
    }

    fn spec_name(&self) -> String {
        format!("{}[{}]", self.coeff.spec_name(), self.group)
    }

    fn format_elem(&self, e: &Self::Elem) -> String {
        let parts: Vec<String> = e.coeffs.iter().map(|c| self.coeff.format_elem(c)).collect();
        format!("({})", parts.join(", "))
    }

    fn elem_to_json(&self, e: &Self::Elem) -> Value {
        Value::Array(
            e.coeffs
                .iter()
                .map(|c| self.coeff.elem_to_json(c))
                .collect(),
        )
    }

    fn elem_from_json(&self, v: &Value) -> Result<Self::Elem> {
        let arr = v
            .as_array()
            .ok_or_else(|| Error::Decode("expected coefficient array".into()))?;
        let parsed: Result<Vec<R::Elem>> =
            arr.iter().map(|c| self.coeff.elem_from_json(c)).collect();
        self.from_coeffs(parsed?)
    }
}
