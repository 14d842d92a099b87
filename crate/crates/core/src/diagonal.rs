//! Diagonal tensors, lateral slices and tubes, and the eigen-equation they
//! satisfy.
//!
//! A tensor is diagonal when every frontal slice is a diagonal matrix. From
//! a tensor equation `T * X = X * L` with `L` diagonal one can read off, for
//! every group element `k`, an eigenvalue-eigenvector pair where both sides
//! are group-ring objects: the lateral slice
//! `X^(k) = sum_g X_g(|k>) |g>` (column `k` of every frontal slice) and the
//! tube `L_{k,k} = sum_g d_{g,k} |g>` (the diagonal entries at position
//! `k`), which satisfy `T * X^(k) = L_{k,k} o X^(k)`.
//!
//! [`generate_diag_instance`] manufactures triples satisfying the premise by
//! conjugation: draw a diagonal `L` and a transform-invertible `X`, set
//! `T = (X * L) * X^{-1}`.

use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::group::{FiniteAbelianGroup, GroupElement};
use crate::groupring::{GroupRing, GroupRingElement};
use crate::report::{DiagCheck, DiagReport};
use crate::ring::CoefficientRing;
use crate::tower::{
    scalar_product, tensor_matrix_product, tensor_tensor_product, GroupMatrix, GroupTensor,
};
use crate::transform::{tensor_t_inverse, TransformRing};

/// A diagonal tensor, stored as its diagonal table: slice `g` is the
/// diagonal matrix with entries `d_{g,k}`.
#[derive(Debug, Clone)]
pub struct DiagonalTensor<R: CoefficientRing> {
    group: FiniteAbelianGroup,
    ring: R,
    /// `d[g * n + k]`: diagonal entry `k` of slice `g`.
    d: Vec<R::Elem>,
}

impl<R: CoefficientRing> DiagonalTensor<R> {
    pub fn from_entries(group: &FiniteAbelianGroup, ring: &R, d: Vec<R::Elem>) -> Result<Self> {
        let n = group.order();
        if d.len() != n * n {
            return Err(Error::Mismatch(format!(
                "diagonal table has {} entries, expected {}",
                d.len(),
                n * n
            )));
        }
        Ok(DiagonalTensor {
            group: group.clone(),
            ring: ring.clone(),
            d,
        })
    }

    /// The identity tensor, which is diagonal.
    pub fn identity(group: &FiniteAbelianGroup, ring: &R) -> Self {
        let n = group.order();
        let mut d = vec![ring.zero(); n * n];
        for slot in d.iter_mut().take(n) {
            *slot = ring.one();
        }
        DiagonalTensor {
            group: group.clone(),
            ring: ring.clone(),
            d,
        }
    }

    pub fn sample(group: &FiniteAbelianGroup, ring: &R, rng: &mut dyn RngCore) -> Self {
        let n = group.order();
        DiagonalTensor {
            group: group.clone(),
            ring: ring.clone(),
            d: (0..n * n).map(|_| ring.sample(rng)).collect(),
        }
    }

    pub fn group(&self) -> &FiniteAbelianGroup {
        &self.group
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn entry(&self, g: usize, k: usize) -> &R::Elem {
        &self.d[g * self.group.order() + k]
    }

    /// Replaces one diagonal entry; handy for negative controls.
    pub fn with_entry(mut self, g: usize, k: usize, value: R::Elem) -> Self {
        let n = self.group.order();
        self.d[g * n + k] = value;
        self
    }

    /// Materializes the full tensor (off-diagonal entries identically zero).
    pub fn to_tensor(&self) -> GroupTensor<R> {
        let n = self.group.order();
        let slices = (0..n)
            .map(|g| {
                let mut m = GroupMatrix::zero(&self.group, &self.ring);
                for k in 0..n {
                    m.set_entry(k, k, self.entry(g, k).clone());
                }
                m
            })
            .collect();
        GroupTensor::from_slices(slices).expect("slice count matches order")
    }

    /// The tube at `k`: the `V`-element `sum_g d_{g,k} |g>`.
    pub fn tube(&self, k: &GroupElement) -> Result<GroupRingElement<R>> {
        let ki = self.group.index_of(k)?;
        let vring = GroupRing::new(self.group.clone(), self.ring.clone());
        vring.from_coeffs(
            (0..self.group.order())
                .map(|g| self.entry(g, ki).clone())
                .collect(),
        )
    }
}

/// The lateral slice `X^(k)`: column `g` of the result is column `k` of the
/// frontal slice `X_g`.
pub fn lateral_slice<R: CoefficientRing>(
    x: &GroupTensor<R>,
    k: &GroupElement,
) -> Result<GroupMatrix<R>> {
    let ki = x.group().index_of(k)?;
    let n = x.group().order();
    let mut out = GroupMatrix::zero(x.group(), x.ring());
    for g in 0..n {
        for j in 0..n {
            out.set_entry(j, g, x.slice(g).entry(j, ki).clone());
        }
    }
    Ok(out)
}

/// Checks the hypothesis `T * X = X * L` and, for every `k`, the
/// eigen-equation `T * X^(k) = L_{k,k} o X^(k)`. Hypothesis failure is
/// reported, not assumed away; the per-`k` conclusions are still evaluated
/// for diagnostics.
pub fn verify_diagonalization<R: CoefficientRing>(
    t: &GroupTensor<R>,
    x: &GroupTensor<R>,
    l: &DiagonalTensor<R>,
) -> Result<DiagReport> {
    let lhs = tensor_tensor_product(t, x)?;
    let rhs = tensor_tensor_product(x, &l.to_tensor())?;
    let hypothesis_residual = lhs.residual(&rhs)?;
    let hypothesis_ok = lhs.eq_tensor(&rhs)?;

    let group = x.group().clone();
    let mut checks = Vec::with_capacity(group.order());
    for k in group.elements() {
        let xk = lateral_slice(x, &k)?;
        let eigen_lhs = tensor_matrix_product(t, &xk)?;
        let eigen_rhs = scalar_product(&l.tube(&k)?, &xk)?;
        let eigen_residual = eigen_lhs.residual(&eigen_rhs)?;
        let pass = eigen_lhs.eq_mat(&eigen_rhs)?;
        checks.push(DiagCheck {
            k: group.index_of(&k)?,
            hypothesis_residual,
            eigen_residual,
            pass,
        });
    }
    let pass = hypothesis_ok && checks.iter().all(|c| c.pass);
    Ok(DiagReport {
        hypothesis_ok,
        hypothesis_residual,
        checks,
        pass,
    })
}

/// How many random draws the instance generator may spend before giving up
/// on finding a transform-invertible `X`.
pub const GENERATION_DRAW_LIMIT: usize = 16;

/// Draws a random diagonal `L` and a random transform-invertible `X`, and
/// returns `(T, X, L)` with `T = (X * L) * X^{-1}`, so the diagonalization
/// hypothesis holds by construction.
pub fn generate_diag_instance<R: TransformRing>(
    group: &FiniteAbelianGroup,
    ring: &R,
    seed: u64,
) -> Result<(GroupTensor<R>, GroupTensor<R>, DiagonalTensor<R>)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let l = DiagonalTensor::sample(group, ring, &mut rng);
    let mut last_reason = String::new();
    for _ in 0..GENERATION_DRAW_LIMIT {
        let x = GroupTensor::sample(group, ring, &mut rng);
        match tensor_t_inverse(&x) {
            Ok(x_inv) => {
                let t = tensor_tensor_product(&tensor_tensor_product(&x, &l.to_tensor())?, &x_inv)?;
                return Ok((t, x, l));
            }
            Err(Error::NotInvertible { reason, .. }) => last_reason = reason,
            Err(other) => return Err(other),
        }
    }
    Err(Error::GenerationFailed(format!(
        "no transform-invertible draw in {GENERATION_DRAW_LIMIT} attempts ({last_reason})"
    )))
}
