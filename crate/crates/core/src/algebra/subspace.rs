use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use super::{AlgebraError, BitVec};

/// Subspace of GF(2)^n in reduced row-echelon form. The pivot of a row is
/// its lowest set bit, and every other row is zero in that column.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubspaceBasis {
    ambient: usize,
    rows: Vec<BitVec>,
    pivots: Vec<usize>,
}

impl SubspaceBasis {
    pub fn zero(ambient: usize) -> Self {
        SubspaceBasis {
            ambient,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Self::spanned_by(ambient, (0..ambient).map(|i| BitVec::unit(ambient, i)))
    }

    pub fn spanned_by(ambient: usize, vectors: impl IntoIterator<Item = BitVec>) -> Self {
        let mut b = Self::zero(ambient);
        for v in vectors {
            b.insert(v);
        }
        b
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[BitVec] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Residue of `v` modulo the subspace; zero iff `v` is a member.
    pub fn reduce(&self, v: &BitVec) -> BitVec {
        let mut r = v.clone();
        self.reduce_in_place(&mut r);
        r
    }

    pub fn reduce_in_place(&self, v: &mut BitVec) {
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if v.get(p) {
                v.xor_assign(row);
            }
        }
    }

    pub fn contains(&self, v: &BitVec) -> bool {
        self.reduce(v).is_zero()
    }

    /// Adds `v` to the span; returns false if it was already a member.
    pub fn insert(&mut self, v: BitVec) -> bool {
        assert_eq!(v.len(), self.ambient, "vector length does not match subspace");
        let r = self.reduce(&v);
        let Some(p) = r.lowest_one() else {
            return false;
        };
        for row in &mut self.rows {
            if row.get(p) {
                row.xor_assign(&r);
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.rows.insert(at, r);
        self.pivots.insert(at, p);
        true
    }

    pub fn is_subspace_of(&self, other: &SubspaceBasis) -> bool {
        self.rows.iter().all(|r| other.contains(r))
    }

    /// Coordinates of a member in terms of `rows()`; `None` for non-members.
    pub fn coordinates(&self, v: &BitVec) -> Option<Vec<bool>> {
        let coords: Vec<bool> = self.pivots.iter().map(|&p| v.get(p)).collect();
        let mut back = BitVec::zeros(self.ambient);
        for (row, &c) in self.rows.iter().zip(&coords) {
            if c {
                back.xor_assign(row);
            }
        }
        (back == *v).then_some(coords)
    }

    pub fn intersect(&self, other: &SubspaceBasis) -> SubspaceBasis {
        assert_eq!(self.ambient, other.ambient);
        kernel_on_span(self.ambient, &self.rows, |v| other.reduce(v))
    }

    /// Vectors from `wider`, taken in order, that extend `self` to a basis
    /// of `self + span(wider)`.
    pub fn complement_in(&self, wider: &[BitVec]) -> Vec<BitVec> {
        let mut acc = self.clone();
        wider
            .iter()
            .filter(|v| acc.insert((*v).clone()))
            .cloned()
            .collect()
    }
}

/// Kernel of an additive map on GF(2)^`domain_dim`, given as a function.
/// The matrix is read off from the images of the standard basis vectors,
/// and additivity is spot-checked on seeded random pairs.
pub fn kernel_of_additive_map<F>(domain_dim: usize, f: F) -> Result<SubspaceBasis, AlgebraError>
where
    F: Fn(&BitVec) -> BitVec,
{
    let basis: Vec<BitVec> = (0..domain_dim).map(|i| BitVec::unit(domain_dim, i)).collect();
    check_additive(&basis, domain_dim, &f)?;
    Ok(kernel_on_span(domain_dim, &basis, f))
}

/// Kernel of an additive map restricted to the span of `domain` (vectors in
/// an ambient space of dimension `ambient`).
pub fn kernel_on_subspace<F>(
    ambient: usize,
    domain: &[BitVec],
    f: F,
) -> Result<SubspaceBasis, AlgebraError>
where
    F: Fn(&BitVec) -> BitVec,
{
    check_additive(domain, ambient, &f)?;
    Ok(kernel_on_span(ambient, domain, f))
}

const ADDITIVITY_TRIALS: usize = 16;

fn check_additive<F>(domain: &[BitVec], ambient: usize, f: &F) -> Result<(), AlgebraError>
where
    F: Fn(&BitVec) -> BitVec,
{
    if domain.is_empty() {
        return Ok(());
    }
    let mut rng = StdRng::seed_from_u64(0x5eed_add1);
    let zero = BitVec::zeros(ambient);
    if !f(&zero).is_zero() {
        return Err(AlgebraError::NonAdditive);
    }
    let random = |rng: &mut StdRng| {
        let mut v = BitVec::zeros(ambient);
        for b in domain {
            if rng.gen::<bool>() {
                v.xor_assign(b);
            }
        }
        v
    };
    for _ in 0..ADDITIVITY_TRIALS {
        let u = random(&mut rng);
        let v = random(&mut rng);
        if f(&u.xor(&v)) != f(&u).xor(&f(&v)) {
            return Err(AlgebraError::NonAdditive);
        }
    }
    Ok(())
}

/// Gaussian elimination on `(f(b_i) | b_i)`, pivoting on the image part.
/// Rows whose image reduces to zero span the kernel.
fn kernel_on_span<F>(ambient: usize, domain: &[BitVec], f: F) -> SubspaceBasis
where
    F: Fn(&BitVec) -> BitVec,
{
    let mut echelon: Vec<(usize, BitVec, BitVec)> = Vec::new();
    let mut kernel = SubspaceBasis::zero(ambient);
    for b in domain {
        let mut img = f(b);
        let mut src = b.clone();
        for (p, row_img, row_src) in &echelon {
            if img.get(*p) {
                img.xor_assign(row_img);
                src.xor_assign(row_src);
            }
        }
        match img.lowest_one() {
            None => {
                kernel.insert(src);
            }
            Some(p) => {
                for (_, row_img, row_src) in &mut echelon {
                    if row_img.get(p) {
                        row_img.xor_assign(&img);
                        row_src.xor_assign(&src);
                    }
                }
                echelon.push((p, img, src));
            }
        }
    }
    kernel
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn vecs(n: usize, sets: &[&[usize]]) -> Vec<BitVec> {
        sets.iter()
            .map(|s| BitVec::from_indices(n, s.iter().copied()))
            .collect()
    }

    #[test]
    fn rref_invariants() {
        let b = SubspaceBasis::spanned_by(5, vecs(5, &[&[1, 2], &[0, 1], &[0, 2], &[3]]));
        assert_eq!(b.dim(), 3);
        assert_eq!(b.pivots(), &[0, 1, 3]);
        for (i, row) in b.rows().iter().enumerate() {
            assert_eq!(row.lowest_one(), Some(b.pivots()[i]));
            for (j, &p) in b.pivots().iter().enumerate() {
                assert_eq!(row.get(p), i == j);
            }
        }
        assert!(b.contains(&BitVec::from_indices(5, [0, 2, 3])));
        assert!(!b.contains(&BitVec::unit(5, 4)));
    }

    #[test]
    fn kernels_of_zero_and_identity() {
        let k = kernel_of_additive_map(7, |_| BitVec::zeros(3)).unwrap();
        assert_eq!(k, SubspaceBasis::full(7));
        let k = kernel_of_additive_map(7, |v| v.clone()).unwrap();
        assert_eq!(k.dim(), 0);
    }

    #[test]
    fn non_additive_map_detected() {
        let r = kernel_of_additive_map(6, |v| {
            let mut out = BitVec::zeros(1);
            if v.count_ones() >= 2 {
                out.set(0, true);
            }
            out
        });
        assert!(matches!(r, Err(AlgebraError::NonAdditive)));
    }

    #[test]
    fn coordinates_round_trip() {
        let b = SubspaceBasis::spanned_by(6, vecs(6, &[&[0, 5], &[2, 3], &[3, 4]]));
        let v = b.rows()[0].xor(&b.rows()[2]);
        assert_eq!(b.coordinates(&v), Some(vec![true, false, true]));
        assert_eq!(b.coordinates(&BitVec::unit(6, 1)), None);
    }

    #[test]
    fn complement_extends_to_span() {
        let u = SubspaceBasis::spanned_by(4, vecs(4, &[&[0, 1]]));
        let wider = vecs(4, &[&[0, 1], &[0], &[1], &[2]]);
        let q = u.complement_in(&wider);
        assert_eq!(q, vecs(4, &[&[0], &[2]]));
    }

    fn brute_span(n: usize, rows: &[BitVec]) -> Vec<BitVec> {
        let mut out = Vec::new();
        for mask in 0u32..(1 << rows.len()) {
            let mut v = BitVec::zeros(n);
            for (i, r) in rows.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    v.xor_assign(r);
                }
            }
            out.push(v);
        }
        out.sort();
        out.dedup();
        out
    }

    fn arb_rows(n: usize) -> impl Strategy<Value = Vec<BitVec>> {
        proptest::collection::vec(
            proptest::collection::vec(any::<bool>(), n)
                .prop_map(move |bits| BitVec::from_indices(n, (0..n).filter(|&i| bits[i]))),
            0..6,
        )
    }

    proptest! {
        #[test]
        fn intersection_matches_brute_force(a in arb_rows(6), b in arb_rows(6)) {
            let sa = SubspaceBasis::spanned_by(6, a.clone());
            let sb = SubspaceBasis::spanned_by(6, b.clone());
            let inter = sa.intersect(&sb);
            let span_b = brute_span(6, &b);
            let expected: Vec<BitVec> = brute_span(6, &a)
                .into_iter()
                .filter(|v| span_b.contains(v))
                .collect();
            prop_assert_eq!(brute_span(6, inter.rows()), expected);
        }

        #[test]
        fn kernel_matches_brute_force(m in arb_rows(5)) {
            // f(v) = sum of rows m[i] for the set bits i < m.len() of v.
            let dom = m.len().max(1);
            let f = |v: &BitVec| {
                let mut out = BitVec::zeros(5);
                for i in v.ones() {
                    if i < m.len() {
                        out.xor_assign(&m[i]);
                    }
                }
                out
            };
            let k = kernel_of_additive_map(dom, f).unwrap();
            let count = (0u32..(1 << dom))
                .filter(|mask| f(&BitVec::from_indices(dom, (0..dom).filter(|i| mask >> i & 1 == 1))).is_zero())
                .count();
            prop_assert_eq!(1usize << k.dim(), count);
            for r in k.rows() {
                prop_assert!(f(r).is_zero());
            }
        }
    }
}
