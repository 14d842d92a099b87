//! Module homomorphisms of the matrix module, and their correspondence with
//! tensors.
//!
//! A homomorphism is stored extensionally by its action on the transposed
//! basis: `L(B_h) = sum_g alpha_{g,h} o B_g` with `alpha_{g,h}` in `V`. That
//! table determines `L` on everything via `L(X) = sum_h x_h o L(B_h)` for
//! `X = sum_h x_h o B_h`, keeps equality of homomorphisms decidable, and
//! converts to and from tensors without loss:
//!
//! * `tensor_from_hom`: slice `T_k` has entry `(j, h) = (alpha_{j,h})_k`,
//! * `hom_from_tensor`: `(alpha_{g,h})_k` = entry `(g, h)` of `T_k`,
//!
//! and under these maps applying the homomorphism agrees with the
//! tensor-matrix product, composition agrees with the tensor-tensor
//! product.

use rand::RngCore;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::free_module::{decompose, transposed_basis};
use crate::group::FiniteAbelianGroup;
use crate::groupring::{GroupRing, GroupRingElement};
use crate::ring::CoefficientRing;
use crate::tower::{scalar_product, GroupMatrix, GroupTensor};

/// A module homomorphism of the matrix module, given by its `alpha` table.
#[derive(Debug, Clone)]
pub struct ModuleHom<R: CoefficientRing> {
    vring: GroupRing<R>,
    /// `alpha[g * n + h]` is the coefficient of `B_g` in `L(B_h)`.
    alpha: Vec<GroupRingElement<R>>,
}

impl<R: CoefficientRing> ModuleHom<R> {
    pub fn from_alpha(vring: GroupRing<R>, alpha: Vec<GroupRingElement<R>>) -> Result<Self> {
        let n = vring.group().order();
        if alpha.len() != n * n {
            return Err(Error::Mismatch(format!(
                "alpha table has {} entries, expected {}",
                alpha.len(),
                n * n
            )));
        }
        for a in &alpha {
            if a.ring() != &vring {
                return Err(Error::Mismatch("alpha entry ring mismatch".into()));
            }
        }
        Ok(ModuleHom { vring, alpha })
    }

    /// The identity homomorphism: `alpha_{g,h} = delta_{g,h} 1_V`.
    pub fn identity(group: &FiniteAbelianGroup, ring: &R) -> Self {
        let vring = GroupRing::new(group.clone(), ring.clone());
        let n = group.order();
        let alpha = (0..n * n)
            .map(|i| {
                if i / n == i % n {
                    vring.identity_element()
                } else {
                    vring.zero_element()
                }
            })
            .collect();
        ModuleHom { vring, alpha }
    }

    pub fn sample(group: &FiniteAbelianGroup, ring: &R, rng: &mut dyn RngCore) -> Self {
        let vring = GroupRing::new(group.clone(), ring.clone());
        let n = group.order();
        let alpha = (0..n * n).map(|_| vring.sample_element(rng)).collect();
        ModuleHom { vring, alpha }
    }

    pub fn vring(&self) -> &GroupRing<R> {
        &self.vring
    }

    pub fn group(&self) -> &FiniteAbelianGroup {
        self.vring.group()
    }

    pub fn alpha(&self, g: usize, h: usize) -> &GroupRingElement<R> {
        &self.alpha[g * self.vring.group().order() + h]
    }

    /// The image of the basis element `B_h`: `sum_g alpha_{g,h} o B_g`.
    pub fn basis_image(&self, h: usize) -> Result<GroupMatrix<R>> {
        let group = self.vring.group().clone();
        let ring = self.vring.coeff().clone();
        let mut acc = GroupMatrix::zero(&group, &ring);
        for g in 0..group.order() {
            let basis = transposed_basis(&group, &ring, &group.element(g)?)?;
            acc = acc.add(&scalar_product(self.alpha(g, h), &basis.matrix)?)?;
        }
        Ok(acc)
    }

    /// Applies the homomorphism: decompose the argument, push it through the
    /// basis images, recombine with scalar products.
    pub fn apply(&self, a: &GroupMatrix<R>) -> Result<GroupMatrix<R>> {
        if a.group() != self.vring.group() || a.ring() != self.vring.coeff() {
            return Err(Error::Mismatch("hom/matrix structure mismatch".into()));
        }
        let coords = decompose(a);
        let mut acc = GroupMatrix::zero(a.group(), a.ring());
        for h in 0..a.order() {
            let image = self.basis_image(h)?;
            acc = acc.add(&scalar_product(coords.coord(h), &image)?)?;
        }
        Ok(acc)
    }

    /// Composition `(self . other)(X) = self(other(X))`, returned in table
    /// form.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.vring != other.vring {
            return Err(Error::Mismatch("hom structure mismatch".into()));
        }
        let n = self.vring.group().order();
        let mut alpha = Vec::with_capacity(n * n);
        // column h of the new table = coordinates of self(other(B_h))
        let mut columns: Vec<Vec<GroupRingElement<R>>> = Vec::with_capacity(n);
        for h in 0..n {
            let image = self.apply(&other.basis_image(h)?)?;
            columns.push(decompose(&image).coords().to_vec());
        }
        for g in 0..n {
            for column in columns.iter() {
                alpha.push(column[g].clone());
            }
        }
        Self::from_alpha(self.vring.clone(), alpha)
    }

    pub fn eq_hom(&self, other: &Self) -> Result<bool> {
        if self.vring != other.vring {
            return Err(Error::Mismatch("hom structure mismatch".into()));
        }
        for (a, b) in self.alpha.iter().zip(&other.alpha) {
            if !a.eq_elem(b)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Serializes the alpha table as an `n x n` JSON matrix of `V`-elements.
    pub fn to_json(&self) -> Value {
        let n = self.vring.group().order();
        let coeff = self.vring.coeff();
        let rows: Vec<Value> = (0..n)
            .map(|g| {
                Value::Array(
                    (0..n)
                        .map(|h| {
                            Value::Array(
                                self.alpha(g, h)
                                    .coeffs()
                                    .iter()
                                    .map(|c| coeff.elem_to_json(c))
                                    .collect(),
                            )
                        })
                        .collect(),
                )
            })
            .collect();
        json!({
            "group": self.vring.group().to_string(),
            "ring": coeff.spec_name(),
            "alpha": rows,
        })
    }
}

/// Converts a homomorphism to the tensor realizing it: slice `T_k` has
/// entry `(j, h) = (alpha_{j,h})_k`.
pub fn tensor_from_hom<R: CoefficientRing>(l: &ModuleHom<R>) -> GroupTensor<R> {
    let group = l.group().clone();
    let ring = l.vring().coeff().clone();
    let n = group.order();
    let slices = (0..n)
        .map(|k| {
            let mut m = GroupMatrix::zero(&group, &ring);
            for j in 0..n {
                for h in 0..n {
                    m.set_entry(j, h, l.alpha(j, h).coeff_at_index(k).clone());
                }
            }
            m
        })
        .collect();
    GroupTensor::from_slices(slices).expect("slice count matches order")
}

/// Inverse of [`tensor_from_hom`]: reads the alpha table out of the slices.
pub fn hom_from_tensor<R: CoefficientRing>(t: &GroupTensor<R>) -> ModuleHom<R> {
    let group = t.group().clone();
    let ring = t.ring().clone();
    let vring = GroupRing::new(group.clone(), ring);
    let n = group.order();
    let mut alpha = Vec::with_capacity(n * n);
    for g in 0..n {
        for h in 0..n {
            let coeffs = (0..n).map(|k| t.slice(k).entry(g, h).clone()).collect();
            alpha.push(
                vring
                    .from_coeffs(coeffs)
                    .expect("tube length matches order"),
            );
        }
    }
    ModuleHom { vring, alpha }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::RationalRing;
    use crate::tower::{tensor_matrix_product, tensor_tensor_product};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn zn(n: usize) -> FiniteAbelianGroup {
        FiniteAbelianGroup::new(&[n]).unwrap()
    }

    #[test]
    fn identity_hom_is_identity_tensor_and_map() {
        let g = zn(3);
        let q = RationalRing;
        let l = ModuleHom::identity(&g, &q);
        let t = tensor_from_hom(&l);
        assert!(t.eq_tensor(&GroupTensor::identity(&g, &q)).unwrap());

        let mut rng = ChaCha8Rng::seed_from_u64(51);
        let x = GroupMatrix::sample(&g, &q, &mut rng);
        assert!(l.apply(&x).unwrap().eq_mat(&x).unwrap());
    }

    #[test]
    fn apply_agrees_with_tensor_product() {
        let mut rng = ChaCha8Rng::seed_from_u64(52);
        for moduli in [vec![2usize], vec![3], vec![2, 2]] {
            let g = FiniteAbelianGroup::new(&moduli).unwrap();
            let q = RationalRing;
            let l = ModuleHom::sample(&g, &q, &mut rng);
            let t = tensor_from_hom(&l);
            for _ in 0..50 {
                let a = GroupMatrix::sample(&g, &q, &mut rng);
                let via_hom = l.apply(&a).unwrap();
                let via_tensor = tensor_matrix_product(&t, &a).unwrap();
                assert!(via_hom.eq_mat(&via_tensor).unwrap());
            }
        }
    }

    #[test]
    fn action_on_basis_is_the_defining_sum() {
        let g = zn(3);
        let q = RationalRing;
        let mut rng = ChaCha8Rng::seed_from_u64(53);
        let l = ModuleHom::sample(&g, &q, &mut rng);
        for h in 0..3 {
            let b_h = transposed_basis(&g, &q, &g.element(h).unwrap()).unwrap();
            let applied = l.apply(&b_h.matrix).unwrap();
            assert!(applied.eq_mat(&l.basis_image(h).unwrap()).unwrap());
        }
    }

    #[test]
    fn delta_alpha_gives_scalar_slices() {
        // alpha_{g,h} = delta_{g,h} v  =>  T_k = v_k I
        let g = zn(3);
        let q = RationalRing;
        let vring = GroupRing::new(g.clone(), q);
        let v = vring.from_ints(&[2, 5, 7]).unwrap();
        let n = 3;
        let alpha = (0..n * n)
            .map(|i| {
                if i / n == i % n {
                    v.clone()
                } else {
                    vring.zero_element()
                }
            })
            .collect();
        let l = ModuleHom::from_alpha(vring.clone(), alpha).unwrap();
        let t = tensor_from_hom(&l);
        for k in 0..n {
            for j in 0..n {
                for h in 0..n {
                    let expect = if j == h {
                        v.coeff_at_index(k).clone()
                    } else {
                        RationalRing.zero()
                    };
                    assert_eq!(t.slice(k).entry(j, h), &expect);
                }
            }
        }
    }

    #[test]
    fn conversion_round_trips() {
        let mut rng = ChaCha8Rng::seed_from_u64(54);
        for moduli in [vec![2usize], vec![4], vec![2, 2], vec![8], vec![4, 2]] {
            let g = FiniteAbelianGroup::new(&moduli).unwrap();
            let q = RationalRing;

            let l = ModuleHom::sample(&g, &q, &mut rng);
            let back = hom_from_tensor(&tensor_from_hom(&l));
            assert!(back.eq_hom(&l).unwrap());

            let t = GroupTensor::sample(&g, &q, &mut rng);
            let back = tensor_from_hom(&hom_from_tensor(&t));
            assert!(back.eq_tensor(&t).unwrap());
        }
    }

    #[test]
    fn converted_homs_satisfy_module_laws() {
        let g = zn(3);
        let q = RationalRing;
        let mut rng = ChaCha8Rng::seed_from_u64(55);
        let vring = GroupRing::new(g.clone(), q);
        let t = GroupTensor::sample(&g, &q, &mut rng);
        let l = hom_from_tensor(&t);
        for _ in 0..500 {
            let a = GroupMatrix::sample(&g, &q, &mut rng);
            let b = GroupMatrix::sample(&g, &q, &mut rng);
            let v = vring.sample_element(&mut rng);

            let additive = l.apply(&a.add(&b).unwrap()).unwrap();
            let split = l.apply(&a).unwrap().add(&l.apply(&b).unwrap()).unwrap();
            assert!(additive.eq_mat(&split).unwrap());

            let linear = l.apply(&scalar_product(&v, &a).unwrap()).unwrap();
            let pulled = scalar_product(&v, &l.apply(&a).unwrap()).unwrap();
            assert!(linear.eq_mat(&pulled).unwrap());
        }
    }

    #[test]
    fn composition_matches_tensor_product() {
        let g = zn(3);
        let q = RationalRing;
        let mut rng = ChaCha8Rng::seed_from_u64(56);
        for _ in 0..10 {
            let l1 = ModuleHom::sample(&g, &q, &mut rng);
            let l2 = ModuleHom::sample(&g, &q, &mut rng);
            let composed = l1.compose(&l2).unwrap();
            let t = tensor_from_hom(&composed);
            let prod = tensor_tensor_product(&tensor_from_hom(&l1), &tensor_from_hom(&l2)).unwrap();
            assert!(t.eq_tensor(&prod).unwrap());
        }
    }

    #[test]
    fn json_shape() {
        let g = zn(2);
        let q = RationalRing;
        let l = ModuleHom::identity(&g, &q);
        let j = l.to_json();
        assert_eq!(j["group"], "Z2");
        assert_eq!(j["alpha"].as_array().unwrap().len(), 2);
        assert_eq!(j["alpha"][0].as_array().unwrap().len(), 2);
        assert_eq!(j["alpha"][0][0].as_array().unwrap().len(), 2);
    }
}
