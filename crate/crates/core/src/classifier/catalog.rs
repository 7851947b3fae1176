use super::{Classification, ClassifierError, Family};
use crate::group::{central_product, direct_product, semidirect_product, FiniteGroup};
use crate::presentation::Builtin;

/// How a catalog group is constructed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Recipe {
    Builtin(Builtin),
    /// Direct product of the listed builtins, left to right.
    Product(&'static [Builtin]),
    /// C4 ⋊ C4 with the generator of the acting factor inverting.
    C4SemidirectC4,
    /// S(2,2) ∘ Q8 identifying a^2 b^2 with the central involution of Q8.
    S22CentralQ8,
}

impl Recipe {
    pub fn build(self) -> Result<FiniteGroup, ClassifierError> {
        let from = |b: Builtin| -> Result<FiniteGroup, ClassifierError> {
            Ok(FiniteGroup::from_presentation(&b.presentation()?)?)
        };
        Ok(match self {
            Recipe::Builtin(b) => from(b)?,
            Recipe::Product(parts) => {
                let mut acc = from(parts[0])?;
                for &p in &parts[1..] {
                    acc = direct_product(&acc, &from(p)?)?;
                }
                acc
            }
            Recipe::C4SemidirectC4 => {
                let c4 = from(Builtin::Cyclic(4))?;
                let inversion: Vec<usize> = c4.elements().map(|x| c4.inv(x)).collect();
                semidirect_product(&c4, &c4, &[inversion])?
            }
            Recipe::S22CentralQ8 => {
                let s22 = from(Builtin::S(2, 2))?;
                let q8 = from(Builtin::Q8)?;
                let (a, b) = (s22.generators()[0], s22.generators()[1]);
                let z = s22.mul(s22.pow(a, 2), s22.pow(b, 2));
                central_product(&s22, &q8, z, q8.pow(q8.generators()[0], 2))?
            }
        })
    }
}

#[derive(Debug, Clone, Copy)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub recipe: Recipe,
    pub expected_order: usize,
    pub expected: Classification,
    pub note: &'static str,
}

impl CatalogEntry {
    pub fn build(&self) -> Result<FiniteGroup, ClassifierError> {
        let g = self.recipe.build()?;
        if g.order() != self.expected_order {
            return Err(ClassifierError::CatalogOrder {
                name: self.name.to_string(),
                expected: self.expected_order,
                found: g.order(),
            });
        }
        Ok(g)
    }
}

const fn good(member: Family) -> Classification {
    Classification::GoodByTheorem { member }
}

const BAD: Classification = Classification::BadByTheorem;
const ABELIAN: Classification = Classification::AbelianTriviallyGood;

/// The groups checked end to end: the theorem's families, groups known to
/// have noncommuting involutions, and abelian controls.
pub fn builtin_catalog() -> Vec<CatalogEntry> {
    use Builtin as B;
    let entry = |name, recipe, expected_order, expected, note| CatalogEntry {
        name,
        recipe,
        expected_order,
        expected,
        note,
    };
    vec![
        entry("Q8", Recipe::Builtin(B::Q8), 8, good(Family::Quaternion), "quaternion group"),
        entry("S22", Recipe::Builtin(B::S(2, 2)), 16, good(Family::Metacyclic { n: 2, m: 2 }), "metacyclic S(2,2)"),
        entry("S23", Recipe::Builtin(B::S(2, 3)), 32, good(Family::Metacyclic { n: 2, m: 3 }), "metacyclic S(2,3)"),
        entry("S32", Recipe::Builtin(B::S(3, 2)), 32, good(Family::Metacyclic { n: 3, m: 2 }), "metacyclic S(3,2)"),
        entry("C4sdC4", Recipe::C4SemidirectC4, 16, good(Family::Metacyclic { n: 2, m: 2 }), "C4 ⋊ C4, isomorphic to S(2,2)"),
        entry("Q8xC2", Recipe::Product(&[B::Q8, B::Cyclic(2)]), 16, good(Family::QuaternionTimesCyclic { k: 1 }), "Hamiltonian group of order 16"),
        entry("Q8xC4", Recipe::Product(&[B::Q8, B::Cyclic(4)]), 32, good(Family::QuaternionTimesCyclic { k: 2 }), "Q8 x C4"),
        entry("TheoremIII2", Recipe::Builtin(B::TheoremIII(2)), 32, good(Family::QuaternionActingOnCyclic { n: 2 }), "C4 ⋊ Q8"),
        entry("TheoremIII3", Recipe::Builtin(B::TheoremIII(3)), 64, good(Family::QuaternionActingOnCyclic { n: 3 }), "C8 ⋊ Q8"),
        entry("H32", Recipe::Builtin(B::H32), 32, good(Family::H32), "three-generator group of order 32"),
        entry("D8", Recipe::Builtin(B::DihedralPow(3)), 8, BAD, "dihedral; reflections do not commute"),
        entry("Q16", Recipe::Builtin(B::GenQuaternion(4)), 16, BAD, "generalized quaternion of order 16"),
        entry("M16", Recipe::Builtin(B::ModularS(3)), 16, BAD, "modular group, S(3,1)"),
        entry("Q8xC2xC2", Recipe::Product(&[B::Q8, B::Cyclic(2), B::Cyclic(2)]), 32, BAD, "Omega of order 8"),
        entry("Q8xQ8", Recipe::Product(&[B::Q8, B::Q8]), 64, BAD, "exponent 4, Phi = Omega of order 4"),
        entry("H245", Recipe::Builtin(B::H245), 64, BAD, "Suzuki 2-group of order 64"),
        entry("S22oQ8", Recipe::S22CentralQ8, 64, BAD, "central product S(2,2) ∘ Q8"),
        entry("C4xC4", Recipe::Product(&[B::Cyclic(4), B::Cyclic(4)]), 16, ABELIAN, "abelian control"),
        entry("C2xC8", Recipe::Product(&[B::Cyclic(2), B::Cyclic(8)]), 16, ABELIAN, "abelian control"),
        entry("C16", Recipe::Builtin(B::Cyclic(16)), 16, ABELIAN, "abelian control"),
    ]
}

pub fn catalog_entry(name: &str) -> Option<CatalogEntry> {
    builtin_catalog()
        .into_iter()
        .find(|e| e.name.eq_ignore_ascii_case(name))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classifier::theorem_classify;

    #[test]
    fn entries_build_and_classify_as_expected() {
        let catalog = builtin_catalog();
        assert!(catalog.iter().filter(|e| e.expected_order <= 32).count() >= 13);
        for e in &catalog {
            let g = e.build().unwrap();
            assert_eq!(theorem_classify(&g).unwrap(), e.expected, "{}", e.name);
        }
    }

    #[test]
    fn lookup_by_name() {
        assert_eq!(catalog_entry("h245").unwrap().expected_order, 64);
        assert_eq!(catalog_entry("C4xC4").unwrap().expected, ABELIAN);
        assert!(catalog_entry("nope").is_none());
    }
}
