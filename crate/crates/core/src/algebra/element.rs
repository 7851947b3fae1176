use std::ops::Add;

use super::{AlgebraError, BitVec, Field, Gf4, SubspaceBasis};
use crate::group::{FiniteGroup, Subgroup};

/// Element of KG stored as `degree` bit planes of length |G|, laid out one
/// after another in a single GF(2) vector of length `degree * |G|`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AlgebraElement {
    field: Field,
    order: usize,
    bits: BitVec,
}

impl AlgebraElement {
    pub fn field(&self) -> Field {
        self.field
    }

    pub fn bits(&self) -> &BitVec {
        &self.bits
    }

    pub fn into_bits(self) -> BitVec {
        self.bits
    }

    pub fn is_zero(&self) -> bool {
        self.bits.is_zero()
    }

    pub fn coeff(&self, g: usize) -> Gf4 {
        let b1 = self.field == Field::Gf4 && self.bits.get(self.order + g);
        Gf4::from_bits(self.bits.get(g), b1)
    }

    /// Group elements with nonzero coefficient, in index order.
    pub fn support(&self) -> Vec<usize> {
        (0..self.order).filter(|&g| !self.coeff(g).is_zero()).collect()
    }

    fn compatible(&self, other: &AlgebraElement) -> Result<(), AlgebraError> {
        if self.field != other.field || self.order != other.order {
            return Err(AlgebraError::Mismatch);
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &AlgebraElement) -> Result<AlgebraElement, AlgebraError> {
        self.compatible(other)?;
        Ok(AlgebraElement {
            field: self.field,
            order: self.order,
            bits: self.bits.xor(&other.bits),
        })
    }
}

impl Add for &AlgebraElement {
    type Output = AlgebraElement;

    fn add(self, other: &AlgebraElement) -> AlgebraElement {
        self.checked_add(other).expect("operands from the same algebra")
    }
}

/// The group algebra KG for a finite group G and K = GF(2) or GF(4).
#[derive(Debug, Clone, Copy)]
pub struct GroupAlgebra<'g> {
    group: &'g FiniteGroup,
    field: Field,
}

impl<'g> GroupAlgebra<'g> {
    pub fn new(group: &'g FiniteGroup, field: Field) -> Self {
        GroupAlgebra { group, field }
    }

    pub fn group(&self) -> &'g FiniteGroup {
        self.group
    }

    pub fn field(&self) -> Field {
        self.field
    }

    /// Dimension of KG as a GF(2)-space.
    pub fn flat_dim(&self) -> usize {
        self.field.degree() * self.group.order()
    }

    pub fn zero(&self) -> AlgebraElement {
        self.from_bits_unchecked(BitVec::zeros(self.flat_dim()))
    }

    pub fn one(&self) -> AlgebraElement {
        self.basis_element(self.group.identity())
    }

    pub fn basis_element(&self, g: usize) -> AlgebraElement {
        self.scaled_basis_element(Gf4::ONE, g)
    }

    pub fn scaled_basis_element(&self, c: Gf4, g: usize) -> AlgebraElement {
        let mut x = self.zero();
        for plane in 0..self.field.degree() {
            if c.bit(plane) {
                x.bits.set(plane * self.group.order() + g, true);
            }
        }
        x
    }

    pub fn from_bits(&self, bits: BitVec) -> Result<AlgebraElement, AlgebraError> {
        if bits.len() != self.flat_dim() {
            return Err(AlgebraError::Mismatch);
        }
        Ok(self.from_bits_unchecked(bits))
    }

    fn from_bits_unchecked(&self, bits: BitVec) -> AlgebraElement {
        AlgebraElement {
            field: self.field,
            order: self.group.order(),
            bits,
        }
    }

    /// Sum of `c * g` over the given terms.
    pub fn from_terms(&self, terms: &[(Gf4, usize)]) -> Result<AlgebraElement, AlgebraError> {
        let mut x = self.zero();
        for &(c, g) in terms {
            if !self.field.contains(c) {
                return Err(AlgebraError::CoefficientOutsideField(c.to_string()));
            }
            x = &x + &self.scaled_basis_element(c, g);
        }
        Ok(x)
    }

    fn owns(&self, x: &AlgebraElement) -> Result<(), AlgebraError> {
        if x.field != self.field || x.order != self.group.order() {
            return Err(AlgebraError::Mismatch);
        }
        Ok(())
    }

    pub fn add(&self, x: &AlgebraElement, y: &AlgebraElement) -> Result<AlgebraElement, AlgebraError> {
        self.owns(x)?;
        self.owns(y)?;
        Ok(x + y)
    }

    pub fn mul(&self, x: &AlgebraElement, y: &AlgebraElement) -> Result<AlgebraElement, AlgebraError> {
        self.owns(x)?;
        self.owns(y)?;
        Ok(self.from_bits_unchecked(self.mul_bits(&x.bits, &y.bits)))
    }

    pub fn square(&self, x: &AlgebraElement) -> Result<AlgebraElement, AlgebraError> {
        self.mul(x, x)
    }

    /// Convolution on flat GF(2) vectors. Over GF(4), with x = x0 + w x1,
    /// xy = (x0y0 + x1y1) + w (x0y1 + x1y0 + x1y1).
    pub fn mul_bits(&self, x: &BitVec, y: &BitVec) -> BitVec {
        let n = self.group.order();
        let mut out = BitVec::zeros(self.flat_dim());
        match self.field {
            Field::Gf2 => {
                let ys: Vec<usize> = y.ones().collect();
                for g in x.ones() {
                    for &h in &ys {
                        out.flip(self.group.mul(g, h));
                    }
                }
            }
            Field::Gf4 => {
                let split = |v: &BitVec| -> (Vec<usize>, Vec<usize>) {
                    let (lo, hi): (Vec<usize>, Vec<usize>) = v.ones().partition(|&i| i < n);
                    (lo, hi.into_iter().map(|i| i - n).collect())
                };
                let (x0, x1) = split(x);
                let (y0, y1) = split(y);
                let mut conv = |a: &[usize], b: &[usize], planes: &[usize]| {
                    for &g in a {
                        for &h in b {
                            let gh = self.group.mul(g, h);
                            for &p in planes {
                                out.flip(p * n + gh);
                            }
                        }
                    }
                };
                conv(&x0, &y0, &[0]);
                conv(&x1, &y1, &[0, 1]);
                conv(&x0, &y1, &[1]);
                conv(&x1, &y0, &[1]);
            }
        }
        out
    }

    /// Sum of coefficients.
    pub fn augmentation(&self, x: &AlgebraElement) -> Gf4 {
        let n = self.group.order();
        let plane = |p: usize| x.bits.ones().filter(|&i| i / n == p).count() % 2 == 1;
        let b1 = self.field == Field::Gf4 && plane(1);
        Gf4::from_bits(plane(0), b1)
    }

    /// Augmentation as a flat GF(2) vector with one bit per plane.
    pub fn augmentation_bits(&self, x: &BitVec) -> BitVec {
        let n = self.group.order();
        let mut out = BitVec::zeros(self.field.degree());
        for i in x.ones() {
            out.flip(i / n);
        }
        out
    }

    /// Sum of the distinct powers of `g`.
    pub fn bar(&self, g: usize) -> AlgebraElement {
        let mut x = self.zero();
        let mut p = self.group.identity();
        loop {
            x.bits.flip(p);
            p = self.group.mul(p, g);
            if p == self.group.identity() {
                return x;
            }
        }
    }

    /// Inverse of an augmentation-1 element as the finite sum of
    /// `(1 + u)^i`; `1 + u` lies in the nilpotent augmentation ideal.
    pub fn unit_inverse(&self, u: &AlgebraElement) -> Result<AlgebraElement, AlgebraError> {
        self.owns(u)?;
        if self.augmentation(u) != Gf4::ONE {
            return Err(AlgebraError::NotNormalized);
        }
        let t = &self.one() + u;
        let mut term = self.one();
        let mut sum = self.one();
        for _ in 0..=self.group.order() {
            term = self.mul(&term, &t)?;
            if term.is_zero() {
                return Ok(sum);
            }
            sum = &sum + &term;
        }
        Err(AlgebraError::NotNilpotent)
    }

    /// `x^k` for `k >= 0`, and for negative `k` when `x` is a unit.
    pub fn pow(&self, x: &AlgebraElement, k: i64) -> Result<AlgebraElement, AlgebraError> {
        let base = if k < 0 {
            self.unit_inverse(x)?
        } else {
            x.clone()
        };
        let mut acc = self.one();
        for _ in 0..k.unsigned_abs() {
            acc = self.mul(&acc, &base)?;
        }
        Ok(acc)
    }

    pub fn commute(&self, x: &AlgebraElement, y: &AlgebraElement) -> Result<bool, AlgebraError> {
        Ok(self.mul(x, y)? == self.mul(y, x)?)
    }

    /// Copies of a GF(2) vector of length |G| in every plane, scaled by each
    /// GF(2)-basis element of the field.
    fn plane_copies(&self, v: &[usize]) -> Vec<BitVec> {
        let n = self.group.order();
        (0..self.field.degree())
            .map(|p| BitVec::from_indices(self.flat_dim(), v.iter().map(|&i| p * n + i)))
            .collect()
    }

    /// L(KG): span of all `xy + yx`. Spanned by `x + s x s^-1` over group
    /// elements x and generators s, since conjugation by generators moves
    /// through every conjugacy class.
    pub fn commutator_subspace(&self) -> SubspaceBasis {
        let g = self.group;
        let mut basis = SubspaceBasis::zero(self.flat_dim());
        for x in g.elements() {
            for &s in g.generators() {
                let y = g.mul(g.mul(s, x), g.inv(s));
                if y != x {
                    for v in self.plane_copies(&[x, y]) {
                        basis.insert(v);
                    }
                }
            }
        }
        basis
    }

    /// I(N): span of `g(n + 1)` for g in G and n in a generating set of N.
    pub fn augmentation_ideal(&self, n: &Subgroup) -> SubspaceBasis {
        let g = self.group;
        let mut basis = SubspaceBasis::zero(self.flat_dim());
        for m in n.generators(g) {
            for x in g.elements() {
                for v in self.plane_copies(&[x, g.mul(x, m)]) {
                    basis.insert(v);
                }
            }
        }
        basis
    }

    /// Vectors of augmentation zero.
    pub fn augmentation_zero_basis(&self) -> Vec<BitVec> {
        let g = self.group;
        g.elements()
            .filter(|&x| x != g.identity())
            .flat_map(|x| self.plane_copies(&[g.identity(), x]))
            .collect()
    }
}
