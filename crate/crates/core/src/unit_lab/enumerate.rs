use crate::algebra::{AlgebraElement, BitVec, GroupAlgebra};

use super::{square_zero_kernel, UnitLabError};

/// Iterator over the involutions `1 + z` of V(KG), walking every z in W in
/// Gray-code order. Each step updates z^2 through
/// (z + b)^2 = z^2 + b^2 + (zb + bz), with zb + bz kept per basis vector.
pub struct Involutions<'a> {
    alg: GroupAlgebra<'a>,
    basis: Vec<BitVec>,
    /// b_k^2.
    p: Vec<BitVec>,
    /// b_i b_k + b_k b_i, indexed [k][i].
    cross: Vec<Vec<BitVec>>,
    z: BitVec,
    sq: BitVec,
    /// z b_k + b_k z.
    r: Vec<BitVec>,
    step: u64,
    end: u64,
}

pub fn enumerate_involutions<'a>(
    alg: &GroupAlgebra<'a>,
    max_dim: usize,
) -> Result<Involutions<'a>, UnitLabError> {
    let w = square_zero_kernel(alg)?;
    if w.dim() > max_dim {
        return Err(UnitLabError::DimensionExceeded {
            dim: w.dim(),
            max_dim,
        });
    }
    let basis = w.rows().to_vec();
    let n = alg.flat_dim();
    let anti = |x: &BitVec, y: &BitVec| alg.mul_bits(x, y).xor(&alg.mul_bits(y, x));
    Ok(Involutions {
        alg: *alg,
        p: basis.iter().map(|b| alg.mul_bits(b, b)).collect(),
        cross: basis
            .iter()
            .map(|a| basis.iter().map(|b| anti(a, b)).collect())
            .collect(),
        r: vec![BitVec::zeros(n); basis.len()],
        z: BitVec::zeros(n),
        sq: BitVec::zeros(n),
        step: 0,
        end: 1u64 << basis.len(),
        basis,
    })
}

impl Involutions<'_> {
    pub fn kernel_dim(&self) -> usize {
        self.basis.len()
    }
}

impl Iterator for Involutions<'_> {
    type Item = AlgebraElement;

    fn next(&mut self) -> Option<AlgebraElement> {
        while self.step + 1 < self.end {
            self.step += 1;
            let k = self.step.trailing_zeros() as usize;
            self.z.xor_assign(&self.basis[k]);
            self.sq.xor_assign(&self.p[k]);
            self.sq.xor_assign(&self.r[k]);
            for (ri, d) in self.r.iter_mut().zip(&self.cross[k]) {
                ri.xor_assign(d);
            }
            if self.sq.is_zero() {
                let z = self.alg.from_bits(self.z.clone()).expect("same algebra");
                return Some(&self.alg.one() + &z);
            }
        }
        None
    }
}
