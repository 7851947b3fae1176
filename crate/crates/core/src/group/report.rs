use serde::{Deserialize, Serialize};

use super::FiniteGroup;

/// Subgroup-theoretic summary of a group, computed from its table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructuralReport {
    pub order: usize,
    pub exponent: usize,
    pub abelian: bool,
    pub center_order: usize,
    pub derived_order: usize,
    pub frattini_order: usize,
    pub omega_order: usize,
    pub class_count: usize,
    pub frattini_equals_omega: bool,
    pub omega_central: bool,
    pub involutions_central: bool,
    pub derived_in_omega: bool,
}

pub fn structural_report(g: &FiniteGroup) -> StructuralReport {
    let center = g.center();
    let derived = g.commutator_subgroup();
    let phi = g.frattini_subgroup();
    let omega = g.omega_subgroup();
    StructuralReport {
        order: g.order(),
        exponent: g.exponent(),
        abelian: g.is_abelian(),
        center_order: center.order(),
        derived_order: derived.order(),
        frattini_order: phi.order(),
        omega_order: omega.order(),
        class_count: g.class_count(),
        frattini_equals_omega: phi == omega,
        omega_central: omega.is_subset_of(&center),
        involutions_central: g.involutions().iter().all(|&x| center.contains(x)),
        derived_in_omega: derived.is_subset_of(&omega),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentation::Builtin;

    fn report(b: Builtin) -> StructuralReport {
        structural_report(&FiniteGroup::from_presentation(&b.presentation().unwrap()).unwrap())
    }

    #[test]
    fn quaternion() {
        let r = report(Builtin::Q8);
        assert_eq!(r.order, 8);
        assert_eq!(r.omega_order, 2);
        assert!(r.involutions_central);
        assert_eq!(r.class_count, 5);
        assert_eq!(r.exponent, 4);
    }

    #[test]
    fn suzuki_group() {
        let r = report(Builtin::H245);
        assert!(r.frattini_equals_omega);
        assert!(r.omega_central);
        assert_eq!(r.omega_order, 4);
    }

    #[test]
    fn dihedral_reflections_not_central() {
        let r = report(Builtin::DihedralPow(3));
        assert!(!r.involutions_central);
        assert!(!r.abelian);
    }

    #[test]
    fn center_index_never_cyclic_quotient() {
        // |G| = |Z| * |G/Z| and G/Z is not cyclic for nonabelian G.
        for b in [Builtin::Q8, Builtin::S(2, 3), Builtin::H32, Builtin::GenQuaternion(4)] {
            let g = FiniteGroup::from_presentation(&b.presentation().unwrap()).unwrap();
            let z = g.center();
            let q = crate::group::quotient(&g, &z).unwrap();
            assert_eq!(g.order(), z.order() * q.order());
            assert!(q.elements().all(|x| q.element_order(x) < q.order()), "{b}");
        }
    }
}
