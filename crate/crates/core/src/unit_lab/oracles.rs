use crate::algebra::{kernel_of_additive_map, BitVec, Field, GroupAlgebra, SubspaceBasis};
use crate::group::FiniteGroup;
use crate::presentation::Builtin;

use super::UnitLabError;

/// Largest flat dimension scanned element by element.
const EXHAUSTIVE_BITS: usize = 16;

/// For abelian G: the square-zero elements of KG are exactly I(Omega(G)).
/// Small algebras are scanned element by element; larger ones compare the
/// kernel of the (additive, since KG is commutative) squaring map.
pub fn lemma4_oracle(g: &FiniteGroup, field: Field) -> Result<bool, UnitLabError> {
    if !g.is_abelian() {
        return Err(UnitLabError::NotAbelian);
    }
    let alg = GroupAlgebra::new(g, field);
    let ideal = alg.augmentation_ideal(&g.omega_subgroup());
    let n = alg.flat_dim();
    if n <= EXHAUSTIVE_BITS {
        Ok((0u64..1 << n).all(|m| {
            let z = BitVec::from_indices(n, (0..n).filter(|i| m >> i & 1 == 1));
            alg.mul_bits(&z, &z).is_zero() == ideal.contains(&z)
        }))
    } else {
        let kernel = kernel_of_additive_map(n, |z| alg.mul_bits(z, z))?;
        Ok(kernel == ideal)
    }
}

/// In KH for H = <c> cyclic of order 2^n over GF(2): whenever v^2 lies in
/// the span of the v c^i (1 + c^(2^(n-1))), v^2 = 0. Checked for every v.
pub fn lemma5_oracle(n: u32) -> Result<bool, UnitLabError> {
    if !(2..=4).contains(&n) {
        return Err(UnitLabError::OutOfRange(format!(
            "cyclic exponent n = {n}, expected 2..=4"
        )));
    }
    let h = FiniteGroup::from_presentation(&Builtin::Cyclic(1 << n).presentation()?)?;
    let alg = GroupAlgebra::new(&h, Field::Gf2);
    let order = h.order();
    let c = h.generators()[0];
    let half = h.pow(c, 1 << (n - 1));
    let one_plus_half = BitVec::from_indices(order, [h.identity(), half]);
    let powers: Vec<BitVec> = (0..order)
        .map(|i| BitVec::unit(order, h.pow(c, i as i64)))
        .collect();
    for m in 0u64..1 << order {
        let v = BitVec::from_indices(order, (0..order).filter(|i| m >> i & 1 == 1));
        let sq = alg.mul_bits(&v, &v);
        if sq.is_zero() {
            continue;
        }
        let w = alg.mul_bits(&v, &one_plus_half);
        let span = SubspaceBasis::spanned_by(order, powers.iter().map(|p| alg.mul_bits(&w, p)));
        if span.contains(&sq) {
            return Ok(false);
        }
    }
    Ok(true)
}
