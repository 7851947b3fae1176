use std::collections::VecDeque;

use super::FiniteGroup;

/// A subgroup of a [`FiniteGroup`], as a sorted member list plus a
/// membership mask over the parent's elements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subgroup {
    members: Vec<usize>,
    mask: Vec<bool>,
}

impl Subgroup {
    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.mask.get(x).copied().unwrap_or(false)
    }

    pub fn is_trivial(&self) -> bool {
        self.members.len() == 1
    }

    pub fn is_subset_of(&self, other: &Subgroup) -> bool {
        self.members.iter().all(|&x| other.contains(x))
    }

    pub fn intersection(&self, other: &Subgroup) -> Subgroup {
        let members: Vec<usize> = self
            .members
            .iter()
            .copied()
            .filter(|&x| other.contains(x))
            .collect();
        let mut mask = vec![false; self.mask.len()];
        for &x in &members {
            mask[x] = true;
        }
        Subgroup { members, mask }
    }

    /// A generating set picked greedily in index order.
    pub fn generators(&self, g: &FiniteGroup) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut current = g.subgroup_generated(&[]);
        for &x in &self.members {
            if !current.contains(x) {
                gens.push(x);
                current = g.subgroup_generated(&gens);
                if current.order() == self.order() {
                    break;
                }
            }
        }
        gens
    }
}

impl FiniteGroup {
    /// Closure of `gens` under multiplication (breadth-first).
    pub fn subgroup_generated(&self, gens: &[usize]) -> Subgroup {
        let mut mask = vec![false; self.order()];
        let mut members = vec![0usize];
        mask[0] = true;
        let mut queue = VecDeque::from([0usize]);
        while let Some(x) = queue.pop_front() {
            for &s in gens {
                let y = self.mul(x, s);
                if !mask[y] {
                    mask[y] = true;
                    members.push(y);
                    queue.push_back(y);
                }
            }
        }
        members.sort_unstable();
        Subgroup { members, mask }
    }

    /// Subgroup from an element set already known to be closed; returns
    /// `None` if it is not.
    pub fn subgroup_from_members(&self, members: &[usize]) -> Option<Subgroup> {
        let sub = self.subgroup_generated(members);
        (sub.order() == {
            let mut m = members.to_vec();
            m.sort_unstable();
            m.dedup();
            m.len()
        })
        .then_some(sub)
    }

    pub fn whole(&self) -> Subgroup {
        Subgroup {
            members: self.elements().collect(),
            mask: vec![true; self.order()],
        }
    }

    pub fn trivial_subgroup(&self) -> Subgroup {
        self.subgroup_generated(&[])
    }

    pub fn center(&self) -> Subgroup {
        let members: Vec<usize> = self.elements().filter(|&x| self.is_central(x)).collect();
        self.subgroup_generated(&members)
    }

    /// Elements commuting with every element of `set`.
    pub fn centralizer(&self, set: &[usize]) -> Subgroup {
        let members: Vec<usize> = self
            .elements()
            .filter(|&x| set.iter().all(|&s| self.commute(x, s)))
            .collect();
        self.subgroup_generated(&members)
    }

    /// Smallest normal subgroup containing `set`.
    pub fn normal_closure(&self, set: &[usize]) -> Subgroup {
        let mut gens: Vec<usize> = set.to_vec();
        loop {
            let sub = self.subgroup_generated(&gens);
            let extra: Vec<usize> = gens
                .iter()
                .flat_map(|&x| self.generators().iter().map(move |&g| (x, g)))
                .map(|(x, g)| self.conjugate(x, g))
                .filter(|&y| !sub.contains(y))
                .collect();
            if extra.is_empty() {
                return sub;
            }
            gens = sub.members().to_vec();
        }
    }

    pub fn is_normal(&self, n: &Subgroup) -> bool {
        n.members()
            .iter()
            .all(|&x| self.generators().iter().all(|&g| n.contains(self.conjugate(x, g))))
    }

    /// Derived subgroup: normal closure of commutators of generators.
    pub fn commutator_subgroup(&self) -> Subgroup {
        let gens = self.generators();
        let comms: Vec<usize> = gens
            .iter()
            .flat_map(|&a| gens.iter().map(move |&b| (a, b)))
            .map(|(a, b)| self.commutator(a, b))
            .collect();
        self.normal_closure(&comms)
    }

    /// `Ω(G)`: generated by all elements of order 2.
    pub fn omega_subgroup(&self) -> Subgroup {
        self.subgroup_generated(&self.involutions())
    }

    pub fn involutions(&self) -> Vec<usize> {
        self.elements()
            .filter(|&x| x != 0 && self.mul(x, x) == 0)
            .collect()
    }

    pub fn squares_subgroup(&self) -> Subgroup {
        let squares: Vec<usize> = self.elements().map(|x| self.mul(x, x)).collect();
        self.subgroup_generated(&squares)
    }

    /// `Φ(G)` as the subgroup generated by all squares and commutators,
    /// which is the Frattini subgroup for a 2-group.
    pub fn frattini_subgroup(&self) -> Subgroup {
        let mut gens: Vec<usize> = self.elements().map(|x| self.mul(x, x)).collect();
        gens.extend(self.commutator_subgroup().members());
        let phi = self.subgroup_generated(&gens);
        debug_assert!(
            self.order() > 64
                || !self.order().is_power_of_two()
                || phi == self.maximal_subgroup_intersection(),
            "Frattini subgroup disagrees with the intersection of maximal subgroups"
        );
        phi
    }

    /// Intersection of all maximal subgroups of a 2-group, found as the
    /// common kernel of the homomorphisms onto `C2`. Exponential in the
    /// number of generators; meant as a cross-check for small groups.
    pub fn maximal_subgroup_intersection(&self) -> Subgroup {
        let k = self.generators().len();
        assert!(k < 20, "too many generators for exhaustive search");
        let mut keep = vec![true; self.order()];
        for assignment in 1u32..(1 << k) {
            if let Some(parity) = self.homomorphism_to_c2(assignment) {
                for x in self.elements() {
                    if parity[x] {
                        keep[x] = false;
                    }
                }
            }
        }
        let members: Vec<usize> = self.elements().filter(|&x| keep[x]).collect();
        self.subgroup_generated(&members)
    }

    /// Extends the assignment `generator i -> bit i of assignment` to a
    /// homomorphism onto `C2`, if consistent.
    fn homomorphism_to_c2(&self, assignment: u32) -> Option<Vec<bool>> {
        let mut value: Vec<Option<bool>> = vec![None; self.order()];
        value[0] = Some(false);
        let mut queue = VecDeque::from([0usize]);
        while let Some(x) = queue.pop_front() {
            let vx = value[x].expect("visited");
            for (i, &g) in self.generators().iter().enumerate() {
                let y = self.mul(x, g);
                let vy = vx ^ (assignment >> i & 1 == 1);
                match value[y] {
                    None => {
                        value[y] = Some(vy);
                        queue.push_back(y);
                    }
                    Some(old) if old != vy => return None,
                    _ => {}
                }
            }
        }
        Some(value.into_iter().map(|v| v.expect("generators span")).collect())
    }

    /// `⟨g^(2^k) : g ∈ G⟩`.
    pub fn agemo_like(&self, k: u32) -> Subgroup {
        let e = 1i64 << k;
        let gens: Vec<usize> = self.elements().map(|x| self.pow(x, e)).collect();
        self.subgroup_generated(&gens)
    }

    /// `⟨g : g^(2^k) = 1⟩`.
    pub fn omega_like(&self, k: u32) -> Subgroup {
        let e = 1i64 << k;
        let gens: Vec<usize> = self.elements().filter(|&x| self.pow(x, e) == 0).collect();
        self.subgroup_generated(&gens)
    }
}
