use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use serde::Serialize;

use super::ClassifierError;
use crate::group::{direct_product, isomorphism_test, FiniteGroup};
use crate::presentation::Builtin;

/// A family of nonabelian groups with commuting involutions in V(KG).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum Family {
    /// S(n, m), n, m >= 2.
    Metacyclic { n: u32, m: u32 },
    Quaternion,
    /// Q8 x C_(2^k), k >= 1.
    QuaternionTimesCyclic { k: u32 },
    /// The semidirect product of C_(2^n) by Q8 with [a,d] = d^(2^(n-1)).
    QuaternionActingOnCyclic { n: u32 },
    /// The order 32 group H32.
    H32,
}

impl Family {
    pub fn order(self) -> usize {
        match self {
            Family::Metacyclic { n, m } => 1 << (n + m),
            Family::Quaternion => 8,
            Family::QuaternionTimesCyclic { k } => 8 << k,
            Family::QuaternionActingOnCyclic { n } => 8 << n,
            Family::H32 => 32,
        }
    }

    /// Members of the given order, in the order they are tried.
    pub fn members_of_order(order: usize) -> Vec<Family> {
        if !order.is_power_of_two() || order < 8 {
            return Vec::new();
        }
        let e = order.trailing_zeros();
        let mut out: Vec<Family> = (2..=e.saturating_sub(2))
            .map(|n| Family::Metacyclic { n, m: e - n })
            .filter(|f| Builtin::from(*f).validate().is_ok())
            .collect();
        if e == 3 {
            out.push(Family::Quaternion);
        }
        if e >= 4 {
            out.push(Family::QuaternionTimesCyclic { k: e - 3 });
        }
        if e >= 5 && Builtin::TheoremIII(e - 3).validate().is_ok() {
            out.push(Family::QuaternionActingOnCyclic { n: e - 3 });
        }
        if e == 5 {
            out.push(Family::H32);
        }
        out
    }

    pub fn build(self) -> Result<FiniteGroup, ClassifierError> {
        let from = |b: Builtin| -> Result<FiniteGroup, ClassifierError> {
            Ok(FiniteGroup::from_presentation(&b.presentation()?)?)
        };
        match self {
            Family::QuaternionTimesCyclic { k } => {
                Ok(direct_product(&from(Builtin::Q8)?, &from(Builtin::Cyclic(1 << k))?)?)
            }
            other => from(Builtin::from(other)),
        }
    }
}

impl From<Family> for Builtin {
    /// The builtin presentation of a family member; for Q8 x C_(2^k), which
    /// is built as a product, the Q8 factor.
    fn from(f: Family) -> Builtin {
        match f {
            Family::Metacyclic { n, m } => Builtin::S(n, m),
            Family::Quaternion | Family::QuaternionTimesCyclic { .. } => Builtin::Q8,
            Family::QuaternionActingOnCyclic { n } => Builtin::TheoremIII(n),
            Family::H32 => Builtin::H32,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Metacyclic { n, m } => write!(f, "S({n},{m})"),
            Family::Quaternion => f.write_str("Q8"),
            Family::QuaternionTimesCyclic { k } => write!(f, "Q8xC{}", 1u32 << k),
            Family::QuaternionActingOnCyclic { n } => write!(f, "TheoremIII({n})"),
            Family::H32 => f.write_str("H32"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "class", rename_all = "snake_case")]
pub enum Classification {
    AbelianTriviallyGood,
    GoodByTheorem { member: Family },
    BadByTheorem,
}

impl Classification {
    pub fn is_good(self) -> bool {
        !matches!(self, Classification::BadByTheorem)
    }
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Classification::AbelianTriviallyGood => f.write_str("abelian (good)"),
            Classification::GoodByTheorem { member } => write!(f, "good: {member}"),
            Classification::BadByTheorem => f.write_str("bad"),
        }
    }
}

fn family_group(f: Family) -> Result<Arc<FiniteGroup>, ClassifierError> {
    static CACHE: OnceLock<Mutex<HashMap<Family, Arc<FiniteGroup>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(g) = cache.lock().expect("lock").get(&f) {
        return Ok(Arc::clone(g));
    }
    let g = Arc::new(f.build()?);
    cache.lock().expect("lock").insert(f, Arc::clone(&g));
    Ok(g)
}

/// Classifies a finite 2-group by testing isomorphism with every family
/// member of the same order.
pub fn theorem_classify(g: &FiniteGroup) -> Result<Classification, ClassifierError> {
    let order = g.order();
    if !order.is_power_of_two() {
        return Err(ClassifierError::NotATwoGroup(order));
    }
    if g.is_abelian() {
        return Ok(Classification::AbelianTriviallyGood);
    }
    for member in Family::members_of_order(order) {
        let h = family_group(member)?;
        if isomorphism_test(g, &h).is_some() {
            return Ok(Classification::GoodByTheorem { member });
        }
    }
    Ok(Classification::BadByTheorem)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::semidirect_product;

    fn build(b: Builtin) -> FiniteGroup {
        FiniteGroup::from_presentation(&b.presentation().unwrap()).unwrap()
    }

    #[test]
    fn members_by_order() {
        assert_eq!(Family::members_of_order(8), vec![Family::Quaternion]);
        assert_eq!(
            Family::members_of_order(16),
            vec![Family::Metacyclic { n: 2, m: 2 }, Family::QuaternionTimesCyclic { k: 1 }]
        );
        let m32 = Family::members_of_order(32);
        assert_eq!(m32.len(), 5);
        assert_eq!(m32[4], Family::H32);
        assert!(Family::members_of_order(4).is_empty());
        for order in [8, 16, 32, 64] {
            for f in Family::members_of_order(order) {
                assert_eq!(f.order(), order);
                assert_eq!(f.build().unwrap().order(), order, "{f}");
            }
        }
    }

    #[test]
    fn classify_builtins() {
        assert_eq!(
            theorem_classify(&build(Builtin::S(3, 2))).unwrap(),
            Classification::GoodByTheorem { member: Family::Metacyclic { n: 3, m: 2 } }
        );
        assert_eq!(theorem_classify(&build(Builtin::ModularS(3))).unwrap(), Classification::BadByTheorem);
        assert_eq!(
            theorem_classify(&build(Builtin::Cyclic(16))).unwrap(),
            Classification::AbelianTriviallyGood
        );
        assert_eq!(theorem_classify(&build(Builtin::H245)).unwrap(), Classification::BadByTheorem);
        assert!(theorem_classify(&build(Builtin::H32)).unwrap().is_good());
    }

    #[test]
    fn semidirect_c4_by_c4_is_s22() {
        let c4 = build(Builtin::Cyclic(4));
        let inv: Vec<usize> = c4.elements().map(|x| c4.inv(x)).collect();
        let g = semidirect_product(&c4, &c4, &[inv]).unwrap();
        assert_eq!(
            theorem_classify(&g).unwrap(),
            Classification::GoodByTheorem { member: Family::Metacyclic { n: 2, m: 2 } }
        );
    }

    /// Same group with elements shuffled and a random generating set.
    fn relabel(g: &FiniteGroup, seed: u64) -> FiniteGroup {
        use rand::rngs::StdRng;
        use rand::seq::SliceRandom;
        use rand::SeedableRng;
        let mut rng = StdRng::seed_from_u64(seed);
        let mut perm: Vec<usize> = g.elements().collect();
        perm.shuffle(&mut rng);
        let n = g.order();
        let mut table = vec![0; n * n];
        for a in g.elements() {
            for b in g.elements() {
                table[perm[a] * n + perm[b]] = perm[g.mul(a, b)];
            }
        }
        let mut gens = Vec::new();
        while g.subgroup_generated(&gens).order() < n {
            gens.push(*g.elements().collect::<Vec<_>>().choose(&mut rng).unwrap());
        }
        let images: Vec<usize> = gens.iter().map(|&x| perm[x]).collect();
        let names = (0..images.len()).map(|i| format!("x{i}")).collect();
        FiniteGroup::from_table(n, &table, perm[0], &images, names).unwrap()
    }

    #[test]
    fn invariant_under_relabelling() {
        for (seed, b) in [Builtin::S(2, 3), Builtin::DihedralPow(4), Builtin::TheoremIII(2), Builtin::Q8]
            .into_iter()
            .enumerate()
        {
            let g = build(b);
            let h = relabel(&g, seed as u64);
            assert_eq!(theorem_classify(&g).unwrap(), theorem_classify(&h).unwrap(), "{b}");
        }
    }

    #[test]
    fn rejects_non_two_groups() {
        let c3 = FiniteGroup::from_presentation(
            &crate::presentation::parse_presentation("gens: a; rels: a^3").unwrap(),
        )
        .unwrap();
        assert!(matches!(theorem_classify(&c3), Err(ClassifierError::NotATwoGroup(3))));
    }
}
