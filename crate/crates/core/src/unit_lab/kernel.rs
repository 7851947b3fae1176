use crate::algebra::{kernel_on_subspace, AlgebraError, GroupAlgebra, SubspaceBasis};

/// W = {z : augmentation(z) = 0, z^2 in L(KG)}. Every square-zero element
/// lies in W. The map z -> z^2 + L(KG) is additive, so W is a subspace.
pub fn square_zero_kernel(alg: &GroupAlgebra) -> Result<SubspaceBasis, AlgebraError> {
    let l = alg.commutator_subspace();
    kernel_on_subspace(alg.flat_dim(), &alg.augmentation_zero_basis(), |z| {
        l.reduce(&alg.mul_bits(z, z))
    })
}
