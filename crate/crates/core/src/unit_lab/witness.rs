use std::collections::HashSet;

use serde::Serialize;

use crate::algebra::{AlgebraElement, BitVec, Gf4, GroupAlgebra};
use crate::group::{isomorphism_test, FiniteGroup};
use crate::presentation::Builtin;

use super::UnitLabError;

/// Two noncommuting involutions of V(KG).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WitnessPair {
    pub x: AlgebraElement,
    pub y: AlgebraElement,
    pub shape: WitnessShape,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum WitnessShape {
    /// Two noncommuting involutions of G.
    GroupInvolutions,
    /// Elements `1 + (a + 1)g` with `a` an involution of G.
    InvolutionTimesElement,
    /// `1 + (1 + c^2)(c + b)` and `1 + (1 + c^2)(c + cb)` with |c| = 8.
    OrderEight,
    /// `1 + g(1 + g^(|g|/4))(1 + b)` with `b` an involution.
    PowerCorrection,
    /// A known pair carried over from an isomorphic host group.
    Known,
    /// Found by the exhaustive scan.
    Scan,
}

/// Product computed coefficient by coefficient, independent of the packed
/// convolution used everywhere else.
pub fn naive_mul(alg: &GroupAlgebra, x: &AlgebraElement, y: &AlgebraElement) -> AlgebraElement {
    let g = alg.group();
    let mut coeffs = vec![Gf4::ZERO; g.order()];
    for a in g.elements() {
        let ca = x.coeff(a);
        if ca.is_zero() {
            continue;
        }
        for b in g.elements() {
            let ab = g.mul(a, b);
            coeffs[ab] = coeffs[ab].add(ca.mul(y.coeff(b)));
        }
    }
    let terms: Vec<(Gf4, usize)> = coeffs
        .into_iter()
        .enumerate()
        .map(|(i, c)| (c, i))
        .collect();
    alg.from_terms(&terms).expect("coefficients stay in the field")
}

/// True iff `x^2 = y^2 = 1` and `xy != yx`, using [`naive_mul`].
pub fn is_noncommuting_involution_pair(alg: &GroupAlgebra, x: &AlgebraElement, y: &AlgebraElement) -> bool {
    let one = alg.one();
    x != &one
        && y != &one
        && naive_mul(alg, x, x) == one
        && naive_mul(alg, y, y) == one
        && naive_mul(alg, x, y) != naive_mul(alg, y, x)
}

/// Parses two literals and checks they are noncommuting involutions.
pub fn verify_witness_pair(alg: &GroupAlgebra, x1: &str, x2: &str) -> Result<bool, UnitLabError> {
    let x = alg.parse(x1)?;
    let y = alg.parse(x2)?;
    for (text, v) in [(x1, &x), (x2, &y)] {
        if alg.augmentation(v) != Gf4::ONE {
            return Err(UnitLabError::NotNormalized(text.to_string()));
        }
    }
    Ok(is_noncommuting_involution_pair(alg, &x, &y))
}

/// A group with a known pair of noncommuting involutions, written over the
/// host presentation's generators.
#[derive(Debug, Clone, Copy)]
pub struct KnownWitness {
    pub host: Builtin,
    pub x: &'static str,
    pub y: &'static str,
}

pub const KNOWN_WITNESSES: [KnownWitness; 3] = [
    KnownWitness {
        host: Builtin::Q8xQ8,
        x: "1+a+bc^2+c+abc+a^2d+abd+acd+bcd",
        y: "1+b(1+c^2)",
    },
    KnownWitness {
        host: Builtin::H245b,
        x: "1+a+ab+d+a^2bd+f+bf+ab^2df+a^3b^3df",
        y: "1+(b+b^-1)",
    },
    KnownWitness {
        host: Builtin::S22oQ8,
        x: "1+d^2a+b+a^3d+bd+f+abf+df+abdf",
        y: "1+b(1+d^2)",
    },
];

/// Pair for a generalized quaternion group of order 16 with `c` of order 8
/// and `b` outside `<c>`.
pub fn quaternion_pair(alg: &GroupAlgebra, c: usize, b: usize) -> (AlgebraElement, AlgebraElement) {
    let g = alg.group();
    let e = |x: usize| alg.basis_element(x);
    let one = alg.one();
    let t = &one + &e(g.mul(c, c));
    let x = &one + &alg.mul(&t, &(&e(c) + &e(b))).expect("same algebra");
    let y = &one + &alg.mul(&t, &(&e(c) + &e(g.mul(c, b)))).expect("same algebra");
    (x, y)
}

const POOL_LIMIT: usize = 256;

/// Tries the constructive shapes in order and returns the first verified
/// pair. Finding nothing says nothing about the group.
pub fn witness_search(alg: &GroupAlgebra) -> Option<WitnessPair> {
    let g = alg.group();
    let e = |x: usize| alg.basis_element(x);
    let one = alg.one();
    let found = |x: AlgebraElement, y: AlgebraElement, shape| {
        is_noncommuting_involution_pair(alg, &x, &y).then_some(WitnessPair { x, y, shape })
    };

    let involutions = g.involutions();
    for (i, &a) in involutions.iter().enumerate() {
        for &b in &involutions[i + 1..] {
            if !g.commute(a, b) {
                if let Some(w) = found(e(a), e(b), WitnessShape::GroupInvolutions) {
                    return Some(w);
                }
            }
        }
    }

    let mut pool = Vec::new();
    'outer: for &a in &involutions {
        for x in g.elements() {
            let z = alg.mul(&(&e(a) + &one), &e(x)).expect("same algebra");
            if !z.is_zero() && alg.square(&z).expect("same algebra").is_zero() {
                pool.push(z);
                if pool.len() >= POOL_LIMIT {
                    break 'outer;
                }
            }
        }
    }
    if let Some(w) = noncommuting_in_pool(alg, &pool, WitnessShape::InvolutionTimesElement) {
        return Some(w);
    }

    for c in g.elements().filter(|&c| g.element_order(c) == 8) {
        let cyclic = g.subgroup_generated(&[c]);
        for b in g.elements().filter(|&b| !cyclic.contains(b)) {
            let (x, y) = quaternion_pair(alg, c, b);
            if let Some(w) = found(x, y, WitnessShape::OrderEight) {
                return Some(w);
            }
        }
    }

    let mut pool = Vec::new();
    'outer: for x in g.elements() {
        let order = g.element_order(x);
        if order < 4 {
            continue;
        }
        let quarter = g.pow(x, (order / 4) as i64);
        let head = alg
            .mul(&e(x), &(&one + &e(quarter)))
            .expect("same algebra");
        for &b in &involutions {
            let z = alg.mul(&head, &(&one + &e(b))).expect("same algebra");
            if !z.is_zero() && alg.square(&z).expect("same algebra").is_zero() {
                pool.push(z);
                if pool.len() >= POOL_LIMIT {
                    break 'outer;
                }
            }
        }
    }
    if let Some(w) = noncommuting_in_pool(alg, &pool, WitnessShape::PowerCorrection) {
        return Some(w);
    }

    known_pair_for(alg)
}

/// Square-zero `z`s whose involutions `1 + z` might not commute.
fn noncommuting_in_pool(alg: &GroupAlgebra, pool: &[AlgebraElement], shape: WitnessShape) -> Option<WitnessPair> {
    let mut seen = HashSet::new();
    let pool: Vec<&AlgebraElement> = pool.iter().filter(|z| seen.insert((*z).clone())).collect();
    let one = alg.one();
    for (i, z1) in pool.iter().enumerate() {
        for z2 in &pool[i + 1..] {
            if !alg.commute(z1, z2).expect("same algebra") {
                let x = &one + z1;
                let y = &one + z2;
                if is_noncommuting_involution_pair(alg, &x, &y) {
                    return Some(WitnessPair { x, y, shape });
                }
            }
        }
    }
    None
}

/// Carries a known pair into `alg` if the group is isomorphic to its host.
pub fn known_pair_for(alg: &GroupAlgebra) -> Option<WitnessPair> {
    let g = alg.group();
    if g.order() != 64 || g.is_abelian() {
        return None;
    }
    for known in KNOWN_WITNESSES {
        let host = FiniteGroup::from_presentation(&known.host.presentation().ok()?).ok()?;
        let Some(iso) = isomorphism_test(&host, g) else {
            continue;
        };
        let host_alg = GroupAlgebra::new(&host, alg.field());
        let carry = |text: &str| -> Option<AlgebraElement> {
            let v = host_alg.parse(text).ok()?;
            let indices = v.bits().ones().map(|i| {
                let (plane, h) = (i / host.order(), i % host.order());
                plane * g.order() + iso.apply(h)
            });
            alg.from_bits(BitVec::from_indices(alg.flat_dim(), indices)).ok()
        };
        let (x, y) = (carry(known.x)?, carry(known.y)?);
        if is_noncommuting_involution_pair(alg, &x, &y) {
            return Some(WitnessPair {
                x,
                y,
                shape: WitnessShape::Known,
            });
        }
    }
    None
}
