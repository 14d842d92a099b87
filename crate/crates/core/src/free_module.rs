//! The matrix ring as a free unitary left module over `V = R[G]`.
//!
//! Under the scalar product `a o X` the matrices form a free module whose
//! basis is the *transposed* family `B_g = |g><1_G|` (a single 1 at row `g`,
//! column `1_G`). Coordinates are closed-form: the coordinate of `X` at `g`
//! is row `g` of `X` read as a `V`-element, so decomposition is exact over
//! every coefficient ring and `X = sum_g (row_g) o B_g` reconstructs.
//!
//! The more obvious "natural" family `Bt_g = |1_G><g|` fails: every
//! combination `sum_g a_g o Bt_g` has support confined to the identity row,
//! so no matrix with a nonzero entry elsewhere is reachable. That
//! confinement is checked constructively by
//! [`natural_basis_degeneracy_witness`].

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::group::{FiniteAbelianGroup, GroupElement};
use crate::groupring::{GroupRing, GroupRingElement};
use crate::report::{AxiomReport, AxiomTally, DegeneracyReport};
use crate::ring::CoefficientRing;
use crate::tower::{scalar_product, tensor_matrix_product, GroupMatrix, GroupTensor};

/// A module basis element together with its label.
#[derive(Debug, Clone)]
pub struct BasisElement<R: CoefficientRing> {
    pub label: GroupElement,
    pub matrix: GroupMatrix<R>,
}

/// The transposed basis element `B_g = |g><1_G|`.
pub fn transposed_basis<R: CoefficientRing>(
    group: &FiniteAbelianGroup,
    ring: &R,
    g: &GroupElement,
) -> Result<BasisElement<R>> {
    let row = group.index_of(g)?;
    Ok(BasisElement {
        label: g.clone(),
        matrix: GroupMatrix::unit(group, ring, row, 0)?,
    })
}

/// The natural basis element `Bt_g = |1_G><g|` of the plain group ring view.
pub fn natural_basis<R: CoefficientRing>(
    group: &FiniteAbelianGroup,
    ring: &R,
    g: &GroupElement,
) -> Result<BasisElement<R>> {
    let col = group.index_of(g)?;
    Ok(BasisElement {
        label: g.clone(),
        matrix: GroupMatrix::unit(group, ring, 0, col)?,
    })
}

/// The coordinates of a matrix in the transposed basis: one `V`-element per
/// group element.
#[derive(Debug, Clone)]
pub struct Coordinates<R: CoefficientRing> {
    ring: GroupRing<R>,
    coords: Vec<GroupRingElement<R>>,
}

impl<R: CoefficientRing> Coordinates<R> {
    pub fn new(ring: GroupRing<R>, coords: Vec<GroupRingElement<R>>) -> Result<Self> {
        if coords.len() != ring.group().order() {
            return Err(Error::Mismatch(format!(
                "expected {} coordinates, got {}",
                ring.group().order(),
                coords.len()
            )));
        }
        for c in &coords {
            if c.ring() != &ring {
                return Err(Error::Mismatch("coordinate ring mismatch".into()));
            }
        }
        Ok(Coordinates { ring, coords })
    }

    pub fn ring(&self) -> &GroupRing<R> {
        &self.ring
    }

    pub fn coords(&self) -> &[GroupRingElement<R>] {
        &self.coords
    }

    pub fn coord(&self, g: usize) -> &GroupRingElement<R> {
        &self.coords[g]
    }

    pub fn eq_coords(&self, other: &Self) -> Result<bool> {
        if self.ring != other.ring {
            return Err(Error::Mismatch("coordinate ring mismatch".into()));
        }
        for (a, b) in self.coords.iter().zip(&other.coords) {
            if !a.eq_elem(b)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Closed-form coordinates: the coordinate at `g` is row `g` of `X`.
pub fn decompose<R: CoefficientRing>(x: &GroupMatrix<R>) -> Coordinates<R> {
    let ring = x.vector_ring();
    let coords = (0..x.order()).map(|j| x.row_element(j)).collect();
    Coordinates { ring, coords }
}

/// Evaluates `sum_g coords_g o B_g` literally, one scalar product per basis
/// element. Inverse of [`decompose`], exactly so over exact rings.
pub fn reconstruct<R: CoefficientRing>(c: &Coordinates<R>) -> Result<GroupMatrix<R>> {
    let group = c.ring.group().clone();
    let ring = c.ring.coeff().clone();
    let mut acc = GroupMatrix::zero(&group, &ring);
    for (g, coord) in c.coords.iter().enumerate() {
        let basis = transposed_basis(&group, &ring, &group.element(g)?)?;
        acc = acc.add(&scalar_product(coord, &basis.matrix)?)?;
    }
    Ok(acc)
}

/// Runs the four module axioms and the two convolution lemmas on random
/// instances, one report per law.
pub fn check_module_axioms<R: CoefficientRing>(
    group: &FiniteAbelianGroup,
    ring: &R,
    samples: u64,
    seed: u64,
) -> Vec<AxiomReport> {
    let vring = GroupRing::new(group.clone(), ring.clone());
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut dist_matrix = AxiomTally::new("scalar_distributes_over_matrix_sum");
    let mut dist_scalar = AxiomTally::new("scalar_distributes_over_scalar_sum");
    let mut scalar_assoc = AxiomTally::new("scalar_associativity");
    let mut unitary = AxiomTally::new("unitary_identity");
    let mut triple = AxiomTally::new("tensor_commutes_with_scalar");

    let one = vring.identity_element();
    for _ in 0..samples {
        let a = vring.sample_element(&mut rng);
        let b = vring.sample_element(&mut rng);
        let x = GroupMatrix::sample(group, ring, &mut rng);
        let y = GroupMatrix::sample(group, ring, &mut rng);
        let t = GroupTensor::sample(group, ring, &mut rng);

        // a o (X + Y) = a o X + a o Y
        let lhs = scalar_product(&a, &x.add(&y).unwrap()).unwrap();
        let rhs = scalar_product(&a, &x)
            .unwrap()
            .add(&scalar_product(&a, &y).unwrap())
            .unwrap();
        dist_matrix.record(lhs.eq_mat(&rhs).unwrap(), lhs.residual(&rhs).unwrap());

        // (a + b) o X = a o X + b o X
        let lhs = scalar_product(&a.add(&b).unwrap(), &x).unwrap();
        let rhs = scalar_product(&a, &x)
            .unwrap()
            .add(&scalar_product(&b, &x).unwrap())
            .unwrap();
        dist_scalar.record(lhs.eq_mat(&rhs).unwrap(), lhs.residual(&rhs).unwrap());

        // (a * b) o X = a o (b o X)
        let lhs = scalar_product(&a.convolve_naive(&b).unwrap(), &x).unwrap();
        let rhs = scalar_product(&a, &scalar_product(&b, &x).unwrap()).unwrap();
        scalar_assoc.record(lhs.eq_mat(&rhs).unwrap(), lhs.residual(&rhs).unwrap());

        // 1_V o X = X
        let lhs = scalar_product(&one, &x).unwrap();
        unitary.record(lhs.eq_mat(&x).unwrap(), lhs.residual(&x).unwrap());

        // T * (a o X) = a o (T * X)
        let lhs = tensor_matrix_product(&t, &scalar_product(&a, &x).unwrap()).unwrap();
        let rhs = scalar_product(&a, &tensor_matrix_product(&t, &x).unwrap()).unwrap();
        triple.record(lhs.eq_mat(&rhs).unwrap(), lhs.residual(&rhs).unwrap());
    }

    vec![
        dist_matrix.finish(),
        dist_scalar.finish(),
        scalar_assoc.finish(),
        unitary.finish(),
        triple.finish(),
    ]
}

/// Demonstrates why the natural basis fails: every `a o Bt_g` has support
/// confined to the identity row, so the given `X` (which must have a
/// nonzero entry in some other row) is unreachable by natural-basis
/// combinations.
pub fn natural_basis_degeneracy_witness<R: CoefficientRing>(
    x: &GroupMatrix<R>,
    samples: u64,
    seed: u64,
) -> Result<DegeneracyReport> {
    let group = x.group().clone();
    let ring = x.ring().clone();
    let n = group.order();

    let witness = (1..n)
        .flat_map(|j| (0..n).map(move |k| (j, k)))
        .find(|&(j, k)| !ring.is_zero(x.entry(j, k)));
    let (witness_row, witness_col) = witness.ok_or_else(|| {
        Error::InapplicableWitness(
            "target matrix has no nonzero entry outside the identity row".into(),
        )
    })?;

    let vring = GroupRing::new(group.clone(), ring.clone());
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut combinations = 0u64;
    let mut confined = 0u64;
    for _ in 0..samples {
        let a = vring.sample_element(&mut rng);
        for g in group.elements() {
            let basis = natural_basis(&group, &ring, &g)?;
            let m = scalar_product(&a, &basis.matrix)?;
            combinations += 1;
            let ok = (1..n).all(|j| (0..n).all(|k| ring.is_zero(m.entry(j, k))));
            if ok {
                confined += 1;
            }
        }
    }
    let support_confined = confined == combinations;
    Ok(DegeneracyReport {
        witness_row,
        witness_col,
        combinations,
        confined,
        support_confined,
        // confinement plus the out-of-row witness entry rules reachability out
        target_reachable: !support_confined,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{RationalRing, RealRing, DEFAULT_TOLERANCE};
    use rand::SeedableRng;

    fn zn(n: usize) -> FiniteAbelianGroup {
        FiniteAbelianGroup::new(&[n]).unwrap()
    }

    #[test]
    fn decompose_reads_rows() {
        let g = zn(2);
        let q = RationalRing;
        let x = GroupMatrix::from_ints(&g, &q, &[1, 2, 3, 4]).unwrap();
        let c = decompose(&x);
        let v = GroupRing::new(g, q);
        assert!(c.coord(0).eq_elem(&v.from_ints(&[1, 2]).unwrap()).unwrap());
        assert!(c.coord(1).eq_elem(&v.from_ints(&[3, 4]).unwrap()).unwrap());
        assert!(reconstruct(&c).unwrap().eq_mat(&x).unwrap());
    }

    #[test]
    fn basis_coordinates_are_deltas() {
        let g = zn(3);
        let q = RationalRing;
        let v = GroupRing::new(g.clone(), q);
        for elem in g.elements() {
            let b = transposed_basis(&g, &q, &elem).unwrap();
            let c = decompose(&b.matrix);
            let gi = g.index_of(&elem).unwrap();
            for j in 0..3 {
                if j == gi {
                    assert!(c.coord(j).eq_elem(&v.identity_element()).unwrap());
                } else {
                    assert!(c.coord(j).is_zero());
                }
            }
        }

        let zero = GroupMatrix::zero(&g, &q);
        assert!(decompose(&zero).coords().iter().all(|c| c.is_zero()));
    }

    #[test]
    fn reconstruct_round_trips() {
        let q = RationalRing;
        let mut rng = ChaCha8Rng::seed_from_u64(41);
        for moduli in [
            vec![1usize],
            vec![4],
            vec![8],
            vec![2, 2],
            vec![4, 2],
            vec![3, 3],
            vec![16],
        ] {
            let g = FiniteAbelianGroup::new(&moduli).unwrap();
            let id = GroupMatrix::identity(&g, &q);
            assert!(reconstruct(&decompose(&id)).unwrap().eq_mat(&id).unwrap());
            for _ in 0..20 {
                let x = GroupMatrix::sample(&g, &q, &mut rng);
                assert!(reconstruct(&decompose(&x)).unwrap().eq_mat(&x).unwrap());
            }
        }

        // exactness holds over every exact backend, not just q
        let m = crate::ring::ModRing::new(6).unwrap();
        let g = FiniteAbelianGroup::new(&[4, 2]).unwrap();
        for _ in 0..20 {
            let x = GroupMatrix::sample(&g, &m, &mut rng);
            assert!(reconstruct(&decompose(&x)).unwrap().eq_mat(&x).unwrap());
        }
    }

    #[test]
    fn single_coordinate_reconstruction() {
        let g = zn(2);
        let q = RationalRing;
        let v = GroupRing::new(g.clone(), q);
        let a0 = v.from_ints(&[0, 1]).unwrap();
        let coords = Coordinates::new(v.clone(), vec![a0.clone(), v.zero_element()]).unwrap();
        let built = reconstruct(&coords).unwrap();
        let b0 = transposed_basis(&g, &q, &g.identity()).unwrap();
        let direct = scalar_product(&a0, &b0.matrix).unwrap();
        assert!(built.eq_mat(&direct).unwrap());
    }

    #[test]
    fn decompose_is_injective_on_random_coordinates() {
        let q = RationalRing;
        let g = zn(4);
        let v = GroupRing::new(g.clone(), q);
        let mut rng = ChaCha8Rng::seed_from_u64(43);
        for _ in 0..30 {
            let coords = Coordinates::new(
                v.clone(),
                (0..4).map(|_| v.sample_element(&mut rng)).collect(),
            )
            .unwrap();
            let x = reconstruct(&coords).unwrap();
            // round trip back to the same coordinates
            assert!(decompose(&x).eq_coords(&coords).unwrap());
            // zero matrix only from zero coordinates
            if coords.coords().iter().any(|c| !c.is_zero()) {
                assert!(!x.is_zero());
            }
        }
    }

    #[test]
    fn module_axioms_exact_and_float() {
        let reports = check_module_axioms(&zn(4), &RationalRing, 200, 7);
        for r in &reports {
            assert_eq!(r.failures, 0, "{} failed", r.axiom);
            assert_eq!(r.max_residual, 0.0);
        }

        let f = RealRing::new(DEFAULT_TOLERANCE).unwrap();
        let g = FiniteAbelianGroup::new(&[3, 2]).unwrap();
        let reports = check_module_axioms(&g, &f, 500, 8);
        for r in &reports {
            assert_eq!(r.failures, 0, "{} failed", r.axiom);
            assert!(r.max_residual <= 1e-9);
        }

        // trivial group: everything collapses to ring laws
        let reports = check_module_axioms(&zn(1), &RationalRing, 50, 9);
        assert!(reports.iter().all(|r| r.failures == 0));
    }

    #[test]
    fn degeneracy_support_confinement() {
        let g = zn(2);
        let q = RationalRing;
        let v = GroupRing::new(g.clone(), q);

        // a o Bt_0 lands entirely in row 0
        let a = v.from_ints(&[1, 2]).unwrap();
        let bt0 = natural_basis(&g, &q, &g.identity()).unwrap();
        let m = scalar_product(&a, &bt0.matrix).unwrap();
        let expect = GroupMatrix::from_ints(&g, &q, &[1, 2, 0, 0]).unwrap();
        assert!(m.eq_mat(&expect).unwrap());

        // |1><0| is unreachable
        let target = GroupMatrix::unit(&g, &q, 1, 0).unwrap();
        let report = natural_basis_degeneracy_witness(&target, 100, 10).unwrap();
        assert_eq!((report.witness_row, report.witness_col), (1, 0));
        assert!(report.support_confined);
        assert!(!report.target_reachable);
        assert_eq!(report.confined, report.combinations);
    }

    #[test]
    fn degeneracy_witness_requires_out_of_row_support() {
        let g = zn(3);
        let q = RationalRing;
        let row0_only = GroupMatrix::from_ints(&g, &q, &[1, 2, 3, 0, 0, 0, 0, 0, 0]).unwrap();
        assert!(matches!(
            natural_basis_degeneracy_witness(&row0_only, 10, 11),
            Err(Error::InapplicableWitness(_))
        ));
    }
}
