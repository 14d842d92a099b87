//! Convolution algebra over finite abelian group rings.
//!
//! Vectors, matrices and third-order tensors are modelled as elements of a
//! tower of group rings over a finite abelian group G and a commutative
//! coefficient ring R:
//!
//! * vectors live in `V = R[G]`,
//! * `n x n` matrices carry a second view as elements of `V[G]` (the
//!   coefficient of `|s>` is column `s`),
//! * tensors are formal sums of matrix slices, elements of `M[G]`.
//!
//! Every product in sight (vector times vector, vector times matrix, tensor
//! times matrix, tensor times tensor) is the convolution of the relevant
//! group ring, and for the cyclic group these specialize to the familiar
//! circulant and block-circulant matrix products. On top of the arithmetic
//! the crate provides the free-module structure of matrices over vectors,
//! the constructive correspondence between tensors and module
//! homomorphisms, tensor diagonalization with tube eigenvalues, a fast
//! character-transform path for float coefficients, and runnable property
//! suites for all of it.
//!
//! ```
//! use gring::{circulant_matrix, FiniteAbelianGroup, GroupRing, RationalRing};
//!
//! let z3 = FiniteAbelianGroup::parse("Z3")?;
//! let v = GroupRing::new(z3, RationalRing);
//! let a = v.from_ints(&[1, 2, 3])?;
//! let b = v.from_ints(&[4, 5, 6])?;
//!
//! // the convolution product equals the circulant matrix acting on b
//! let conv = a.convolve_naive(&b)?;
//! let circ = circulant_matrix(&a).matvec(&b)?;
//! assert!(conv.eq_elem(&circ)?);
//! # Ok::<(), gring::Error>(())
//! ```

pub mod diagonal;
pub mod error;
pub(crate) mod fft;
pub mod free_module;
pub mod group;
pub mod groupring;
pub mod hom;
pub mod report;
pub mod ring;
pub mod tower;
pub mod transform;
pub mod verify;

pub use diagonal::{
    generate_diag_instance, lateral_slice, verify_diagonalization, DiagonalTensor,
    GENERATION_DRAW_LIMIT,
};
pub use error::{Error, Result};
pub use free_module::{
    check_module_axioms, decompose, natural_basis, natural_basis_degeneracy_witness, reconstruct,
    transposed_basis, BasisElement, Coordinates,
};
pub use group::{FiniteAbelianGroup, GroupElement};
pub use groupring::{GroupRing, GroupRingElement};
pub use hom::{hom_from_tensor, tensor_from_hom, ModuleHom};
pub use report::{AxiomReport, AxiomTally, DegeneracyReport, DiagCheck, DiagReport, SuiteReport};
pub use ring::{
    make_ring, CoefficientRing, ComplexRing, ModRing, RationalRing, RealRing, RingHandle,
    DEFAULT_TOLERANCE,
};
pub use tower::{
    block_circulant_tensor_matrix, block_circulant_tensor_tensor, circulant_matrix, scalar_product,
    tensor_matrix_product, tensor_tensor_product, GroupMatrix, GroupTensor,
};
pub use transform::{
    convolve_fast, gft_forward, gft_inverse, tensor_t_inverse, GroupSpectrum, TransformRing,
    CONDITION_LIMIT,
};
pub use verify::{
    diag_suite, groupring_axiom_suite, iso_suite, module_suite, nested_axiom_suite, products_suite,
    seeded_rng, transform_suite, DIAG_EIGEN_TOLERANCE, DIAG_HYPOTHESIS_TOLERANCE, RNG_SCHEME,
    T_INVERSE_TOLERANCE,
};
