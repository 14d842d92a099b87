//! Suite selection for `gring verify`.

use gring::{
    diag_suite, groupring_axiom_suite, iso_suite, module_suite, nested_axiom_suite, products_suite,
    transform_suite, CoefficientRing, FiniteAbelianGroup, SuiteReport, TransformRing,
};

/// The suites every ring kind supports: products against their circulant
/// oracles, group-ring axioms (flat and depth-3 nested), the free-module
/// laws, and the tensor/homomorphism correspondence.
pub(crate) fn exact_suites<R: CoefficientRing>(
    group: &FiniteAbelianGroup,
    ring: &R,
    samples: u64,
    seed: u64,
) -> Vec<SuiteReport> {
    vec![
        products_suite(group, ring, samples, seed),
        groupring_axiom_suite(group, ring, samples, seed.wrapping_add(1)),
        nested_axiom_suite(ring, samples, seed.wrapping_add(2)),
        module_suite(group, ring, samples, seed.wrapping_add(3)),
        iso_suite(group, ring, samples, seed.wrapping_add(4)),
    ]
}

/// Approximate rings additionally run the transform checks and the
/// generated diagonalization instances.
pub(crate) fn transform_suites<R: TransformRing>(
    group: &FiniteAbelianGroup,
    ring: &R,
    samples: u64,
    seed: u64,
) -> Vec<SuiteReport> {
    let mut suites = exact_suites(group, ring, samples, seed);
    suites.push(transform_suite(group, ring, samples, seed.wrapping_add(5)));
    suites.push(diag_suite(
        group,
        ring,
        samples.clamp(1, 20),
        seed.wrapping_add(6),
    ));
    suites
}
