//! Character transform over finite abelian groups, fast convolution, and
//! transform-domain tensor inversion.
//!
//! For `G = Z_{n1} x ... x Z_{nk}` the characters are indexed by the same
//! mixed-radix scheme as the elements, with
//! `chi_q(g) = prod_j exp(-2 pi i q_j g_j / n_j)`. The forward transform
//! evaluates `a_hat(chi) = sum_g a_g chi(g)`, which turns convolution into
//! the pointwise product of spectra; that is what diagonalizes every
//! circulant in the tower. Only the approximate coefficient rings support
//! this path; exact rings use the naive convolution.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::fft;
use crate::group::FiniteAbelianGroup;
use crate::groupring::{GroupRing, GroupRingElement};
use crate::ring::{CoefficientRing, ComplexRing, RealRing};
use crate::tower::{GroupMatrix, GroupTensor};

/// Condition-number guard applied to every transform-domain slice before it
/// is declared invertible.
pub const CONDITION_LIMIT: f64 = 1e12;

/// Coefficient rings that embed in the complex numbers, enabling the
/// transform path.
pub trait TransformRing: CoefficientRing {
    fn to_complex(&self, e: &Self::Elem) -> Complex64;
    #[allow(clippy::wrong_self_convention)]
    fn from_complex(&self, z: Complex64) -> Self::Elem;
}

impl TransformRing for RealRing {
    fn to_complex(&self, e: &f64) -> Complex64 {
        Complex64::new(*e, 0.0)
    }

    fn from_complex(&self, z: Complex64) -> f64 {
        z.re
    }
}

impl TransformRing for ComplexRing {
    fn to_complex(&self, e: &Complex64) -> Complex64 {
        *e
    }

    fn from_complex(&self, z: Complex64) -> Complex64 {
        z
    }
}

/// The character-side table of an element: one complex value per character,
/// in canonical index order.
#[derive(Debug, Clone)]
pub struct GroupSpectrum {
    group: FiniteAbelianGroup,
    values: Vec<Complex64>,
}

impl GroupSpectrum {
    pub fn group(&self) -> &FiniteAbelianGroup {
        &self.group
    }

    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    /// Pointwise product, the transform-domain image of convolution.
    pub fn pointwise_mul(&self, other: &Self) -> Result<Self> {
        if self.group != other.group {
            return Err(Error::Mismatch("spectrum group mismatch".into()));
        }
        Ok(GroupSpectrum {
            group: self.group.clone(),
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| a * b)
                .collect(),
        })
    }
}

/// Forward transform `a_hat(chi) = sum_g a_g chi(g)`.
pub fn gft_forward<R: TransformRing>(a: &GroupRingElement<R>) -> GroupSpectrum {
    let ring = a.ring().coeff();
    let mut values: Vec<Complex64> = a.coeffs().iter().map(|c| ring.to_complex(c)).collect();
    fft::fft_multi(&mut values, a.group().factors(), false);
    GroupSpectrum {
        group: a.group().clone(),
        values,
    }
}

/// Inverse transform, normalized by `1/|G|`; a round trip reproduces the
/// input within tolerance.
pub fn gft_inverse<R: TransformRing>(
    ring: &GroupRing<R>,
    spectrum: &GroupSpectrum,
) -> Result<GroupRingElement<R>> {
    if ring.group() != &spectrum.group {
        return Err(Error::Mismatch("spectrum group mismatch".into()));
    }
    let mut values = spectrum.values.clone();
    fft::fft_multi(&mut values, spectrum.group.factors(), true);
    ring.from_coeffs(
        values
            .iter()
            .map(|z| ring.coeff().from_complex(*z))
            .collect(),
    )
}

/// Convolution via the transform: forward both factors, multiply pointwise,
/// transform back. Agrees with the naive double loop within tolerance at
/// `O(n log n)` cost per cyclic factor.
pub fn convolve_fast<R: TransformRing>(
    a: &GroupRingElement<R>,
    b: &GroupRingElement<R>,
) -> Result<GroupRingElement<R>> {
    if a.ring() != b.ring() {
        return Err(Error::Mismatch("element structure mismatch".into()));
    }
    let sa = gft_forward(a);
    let sb = gft_forward(b);
    gft_inverse(a.ring(), &sa.pointwise_mul(&sb)?)
}

/// Inverts a tensor in the transform domain: transform the slices along the
/// group mode, invert every character slice by partial-pivot elimination,
/// transform back. Fails with the offending character index when a slice is
/// singular or its 1-norm condition estimate exceeds [`CONDITION_LIMIT`].
pub fn tensor_t_inverse<R: TransformRing>(x: &GroupTensor<R>) -> Result<GroupTensor<R>> {
    let group = x.group().clone();
    let ring = x.ring().clone();
    let n = group.order();
    let factors = group.factors().to_vec();

    // spectral slices: mats[c][j*n + k] = sum_g X_g[j][k] chi_c(g)
    let mut mats: Vec<Vec<Complex64>> = vec![vec![Complex64::default(); n * n]; n];
    let mut tube = vec![Complex64::default(); n];
    for j in 0..n {
        for k in 0..n {
            for (g, t) in tube.iter_mut().enumerate() {
                *t = ring.to_complex(x.slice(g).entry(j, k));
            }
            fft::fft_multi(&mut tube, &factors, false);
            for (c, t) in tube.iter().enumerate() {
                mats[c][j * n + k] = *t;
            }
        }
    }

    let mut inverses: Vec<Vec<Complex64>> = Vec::with_capacity(n);
    for (c, m) in mats.iter().enumerate() {
        let inv = invert_complex(n, m).map_err(|reason| Error::NotInvertible {
            char_index: c,
            reason,
        })?;
        inverses.push(inv);
    }

    let mut slices: Vec<GroupMatrix<R>> =
        (0..n).map(|_| GroupMatrix::zero(&group, &ring)).collect();
    for j in 0..n {
        for k in 0..n {
            for (c, t) in tube.iter_mut().enumerate() {
                *t = inverses[c][j * n + k];
            }
            fft::fft_multi(&mut tube, &factors, true);
            for (g, t) in tube.iter().enumerate() {
                slices[g].set_entry(j, k, ring.from_complex(*t));
            }
        }
    }
    GroupTensor::from_slices(slices)
}

fn norm1(n: usize, m: &[Complex64]) -> f64 {
    (0..n)
        .map(|k| (0..n).map(|j| m[j * n + k].norm()).sum::<f64>())
        .fold(0.0, f64::max)
}

/// Gauss-Jordan inversion with partial pivoting; returns the inverse or a
/// description of why the matrix was rejected (singular pivot or condition
/// estimate above the guard).
fn invert_complex(n: usize, m: &[Complex64]) -> std::result::Result<Vec<Complex64>, String> {
    let norm_a = norm1(n, m);
    let mut a = m.to_vec();
    let mut inv = vec![Complex64::default(); n * n];
    for i in 0..n {
        inv[i * n + i] = Complex64::new(1.0, 0.0);
    }
    for col in 0..n {
        let (pivot_row, pivot_mag) = (col..n)
            .map(|r| (r, a[r * n + col].norm()))
            .max_by(|x, y| x.1.total_cmp(&y.1))
            .expect("non-empty column");
        if pivot_mag == 0.0 || !pivot_mag.is_finite() {
            return Err(format!("singular slice (pivot magnitude {pivot_mag})"));
        }
        if pivot_row != col {
            for k in 0..n {
                a.swap(col * n + k, pivot_row * n + k);
                inv.swap(col * n + k, pivot_row * n + k);
            }
        }
        let pivot = a[col * n + col];
        for k in 0..n {
            a[col * n + k] /= pivot;
            inv[col * n + k] /= pivot;
        }
        for r in 0..n {
            if r == col {
                continue;
            }
            let factor = a[r * n + col];
            if factor.norm() == 0.0 {
                continue;
            }
            for k in 0..n {
                let (ac, ic) = (a[col * n + k], inv[col * n + k]);
                a[r * n + k] -= factor * ac;
                inv[r * n + k] -= factor * ic;
            }
        }
    }
    let cond = norm_a * norm1(n, &inv);
    if !cond.is_finite() || cond > CONDITION_LIMIT {
        return Err(format!(
            "condition estimate {cond:.3e} exceeds guard {CONDITION_LIMIT:.0e}"
        ));
    }
    Ok(inv)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::DEFAULT_TOLERANCE;
    use crate::tower::tensor_tensor_product;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn real_ring() -> RealRing {
        RealRing::new(DEFAULT_TOLERANCE).unwrap()
    }

    fn vring(moduli: &[usize]) -> GroupRing<RealRing> {
        GroupRing::new(FiniteAbelianGroup::new(moduli).unwrap(), real_ring())
    }

    #[test]
    fn delta_transforms_to_constant() {
        let v = vring(&[4]);
        let delta = v.from_ints(&[1, 0, 0, 0]).unwrap();
        let s = gft_forward(&delta);
        for z in s.values() {
            assert!((z - Complex64::new(1.0, 0.0)).norm() < 1e-12);
        }
    }

    #[test]
    fn two_point_transform() {
        let v = vring(&[2]);
        let a = v.from_ints(&[1, 1]).unwrap();
        let s = gft_forward(&a);
        assert!((s.values()[0] - Complex64::new(2.0, 0.0)).norm() < 1e-12);
        assert!(s.values()[1].norm() < 1e-12);
    }

    #[test]
    fn forward_inverse_round_trip() {
        let mut rng = ChaCha8Rng::seed_from_u64(31);
        for moduli in [vec![6usize], vec![17], vec![3, 2], vec![4, 2, 2]] {
            let v = vring(&moduli);
            let a = v.sample_element(&mut rng);
            let back = gft_inverse(&v, &gft_forward(&a)).unwrap();
            assert!(back.residual(&a).unwrap() < 1e-9);
        }
    }

    #[test]
    fn convolution_theorem_and_parseval() {
        let mut rng = ChaCha8Rng::seed_from_u64(32);
        for moduli in [vec![8usize], vec![12], vec![5, 3], vec![4, 4, 4], vec![63]] {
            let v = vring(&moduli);
            let n = v.group().order() as f64;
            for _ in 0..40 {
                let a = v.sample_element(&mut rng);
                let b = v.sample_element(&mut rng);
                let lhs = gft_forward(&a.convolve_naive(&b).unwrap());
                let rhs = gft_forward(&a).pointwise_mul(&gft_forward(&b)).unwrap();
                for (x, y) in lhs.values().iter().zip(rhs.values()) {
                    assert!((x - y).norm() <= 1e-9 * (1.0 + y.norm()));
                }

                let time_energy: f64 = a.coeffs().iter().map(|c| c * c).sum();
                let freq_energy: f64 = gft_forward(&a)
                    .values()
                    .iter()
                    .map(|z| z.norm_sqr())
                    .sum::<f64>()
                    / n;
                assert!((time_energy - freq_energy).abs() < 1e-9 * (1.0 + time_energy));
            }
        }
    }

    #[test]
    fn fast_convolution_matches_naive() {
        let mut rng = ChaCha8Rng::seed_from_u64(33);
        for moduli in [vec![12usize], vec![17], vec![64], vec![4, 2], vec![3, 3, 2]] {
            let v = vring(&moduli);
            for _ in 0..20 {
                let a = v.sample_element(&mut rng);
                let b = v.sample_element(&mut rng);
                let fast = convolve_fast(&a, &b).unwrap();
                let naive = a.convolve_naive(&b).unwrap();
                assert!(fast.residual(&naive).unwrap() <= 1e-9);
            }
        }
    }

    #[test]
    fn fast_convolution_identity_and_shifts() {
        let mut rng = ChaCha8Rng::seed_from_u64(34);
        let v = vring(&[8]);
        let a = v.sample_element(&mut rng);
        assert!(
            convolve_fast(&a, &v.identity_element())
                .unwrap()
                .residual(&a)
                .unwrap()
                < 1e-12
        );

        let g = v.group().clone();
        let d3 = v.basis_element(&g.element(3).unwrap()).unwrap();
        let d7 = v.basis_element(&g.element(7).unwrap()).unwrap();
        let expect = v.basis_element(&g.element(2).unwrap()).unwrap();
        assert!(convolve_fast(&d3, &d7).unwrap().residual(&expect).unwrap() < 1e-9);
    }

    #[test]
    fn complex_ring_convolution() {
        let ring = ComplexRing::new(DEFAULT_TOLERANCE).unwrap();
        let v = GroupRing::new(FiniteAbelianGroup::new(&[6]).unwrap(), ring);
        let mut rng = ChaCha8Rng::seed_from_u64(35);
        let a = v.sample_element(&mut rng);
        let b = v.sample_element(&mut rng);
        let fast = convolve_fast(&a, &b).unwrap();
        let naive = a.convolve_naive(&b).unwrap();
        assert!(fast.residual(&naive).unwrap() <= 1e-9);
    }

    #[test]
    fn t_inverse_identity_and_scalar_slice() {
        let v = vring(&[3]);
        let (g, r) = (v.group(), v.coeff());
        let e = GroupTensor::identity(g, r);
        let inv = tensor_t_inverse(&e).unwrap();
        assert!(inv.residual(&e).unwrap() < 1e-12);

        // X with X_{1_G} = 2I, other slices zero: inverse has I/2 there
        let mut two_i = GroupMatrix::zero(g, r);
        for i in 0..3 {
            two_i.set_entry(i, i, 2.0);
        }
        let slices = vec![two_i, GroupMatrix::zero(g, r), GroupMatrix::zero(g, r)];
        let x = GroupTensor::from_slices(slices).unwrap();
        let inv = tensor_t_inverse(&x).unwrap();
        for i in 0..3 {
            assert!((inv.slice(0).entry(i, i) - 0.5).abs() < 1e-12);
        }
        let prod = tensor_tensor_product(&x, &inv).unwrap();
        assert!(prod.residual(&GroupTensor::identity(g, r)).unwrap() < 1e-12);
    }

    #[test]
    fn t_inverse_random_seeded() {
        let v = vring(&[3]);
        let mut rng = ChaCha8Rng::seed_from_u64(42);
        let x = GroupTensor::sample(v.group(), v.coeff(), &mut rng);
        let inv = tensor_t_inverse(&x).unwrap();
        let prod = tensor_tensor_product(&x, &inv).unwrap();
        let e = GroupTensor::identity(v.group(), v.coeff());
        assert!(prod.residual(&e).unwrap() <= 1e-8);
    }

    #[test]
    fn t_inverse_rejects_singular() {
        let v = vring(&[2]);
        let zero = GroupTensor::zero(v.group(), v.coeff());
        match tensor_t_inverse(&zero) {
            Err(Error::NotInvertible { char_index, .. }) => assert_eq!(char_index, 0),
            other => panic!("expected NotInvertible, got {other:?}"),
        }
    }
}
