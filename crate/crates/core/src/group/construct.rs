//! Direct, semidirect and central products, and quotients by normal
//! subgroups.

use std::collections::VecDeque;

use super::{FiniteGroup, GroupError, Subgroup};

/// Generator names for a product: the second factor's names are suffixed
/// with digits until they no longer clash with the first factor's.
fn merged_names(first: &[String], second: &[String]) -> Vec<String> {
    let mut names: Vec<String> = first.to_vec();
    for n in second {
        let mut candidate = n.clone();
        let mut k = 2;
        while names.contains(&candidate) {
            candidate = format!("{n}{k}");
            k += 1;
        }
        names.push(candidate);
    }
    names
}

/// `g × h` with generators `(s, 1)` for `s` in `g` followed by `(1, t)`.
pub fn direct_product(g: &FiniteGroup, h: &FiniteGroup) -> Result<FiniteGroup, GroupError> {
    let (m, n) = (g.order(), h.order());
    let order = m * n;
    if order > super::MAX_ORDER {
        return Err(GroupError::OrderTooLarge(order));
    }
    let idx = |a: usize, b: usize| a * n + b;
    let mut mul = vec![0usize; order * order];
    for a1 in 0..m {
        for b1 in 0..n {
            let row = idx(a1, b1) * order;
            for a2 in 0..m {
                let a = g.mul(a1, a2);
                for b2 in 0..n {
                    mul[row + idx(a2, b2)] = idx(a, h.mul(b1, b2));
                }
            }
        }
    }
    let mut gens: Vec<usize> = g.generators().iter().map(|&s| idx(s, 0)).collect();
    gens.extend(h.generators().iter().map(|&t| idx(0, t)));
    let names = merged_names(g.generator_names(), h.generator_names());
    FiniteGroup::from_table(order, &mul, 0, &gens, names)
}

/// Checks that `perm` is an automorphism of `n`.
fn check_automorphism(n: &FiniteGroup, perm: &[usize], generator: usize) -> Result<(), GroupError> {
    let bad = |reason: String| GroupError::NotAnAutomorphism { generator, reason };
    if perm.len() != n.order() {
        return Err(bad(format!("length {} for group of order {}", perm.len(), n.order())));
    }
    let mut hit = vec![false; n.order()];
    for &p in perm {
        if p >= n.order() || hit[p] {
            return Err(bad("not a bijection".into()));
        }
        hit[p] = true;
    }
    for x in n.elements() {
        for y in n.elements() {
            if perm[n.mul(x, y)] != n.mul(perm[x], perm[y]) {
                return Err(bad(format!("fails on the pair ({x}, {y})")));
            }
        }
    }
    Ok(())
}

/// `n ⋊ h` where `action[i]` is the automorphism of `n` by which the `i`-th
/// generator of `h` acts, and `(n1,h1)(n2,h2) = (n1 · h1(n2), h1 h2)`.
///
/// The generator assignment must extend to a homomorphism `h -> Aut(n)`;
/// this is checked on every edge of the Cayley graph of `h`, which is
/// equivalent to all defining relators of `h` acting trivially.
pub fn semidirect_product(
    n: &FiniteGroup,
    h: &FiniteGroup,
    action: &[Vec<usize>],
) -> Result<FiniteGroup, GroupError> {
    if action.len() != h.generators().len() {
        return Err(GroupError::Table(format!(
            "{} automorphisms given for {} generators",
            action.len(),
            h.generators().len()
        )));
    }
    for (i, perm) in action.iter().enumerate() {
        check_automorphism(n, perm, i)?;
    }
    let (nn, nh) = (n.order(), h.order());
    let order = nn * nh;
    if order > super::MAX_ORDER {
        return Err(GroupError::OrderTooLarge(order));
    }
    // act[x] is the automorphism for element x of h; act(x s) = act(x) ∘ act(s).
    let mut act: Vec<Option<Vec<usize>>> = vec![None; nh];
    act[0] = Some(n.elements().collect());
    let mut queue = VecDeque::from([0usize]);
    while let Some(x) = queue.pop_front() {
        let ax = act[x].clone().expect("visited");
        for (i, &s) in h.generators().iter().enumerate() {
            let y = h.mul(x, s);
            let composed: Vec<usize> = n.elements().map(|e| ax[action[i][e]]).collect();
            match &act[y] {
                None => {
                    act[y] = Some(composed);
                    queue.push_back(y);
                }
                Some(existing) if *existing != composed => {
                    return Err(GroupError::RelatorViolation {
                        relator: format!(
                            "action of {} is not well defined",
                            h.name(y)
                        ),
                    });
                }
                _ => {}
            }
        }
    }
    let act: Vec<Vec<usize>> = act.into_iter().map(|a| a.expect("generators span")).collect();
    let idx = |a: usize, b: usize| a * nh + b;
    let mut mul = vec![0usize; order * order];
    for n1 in 0..nn {
        for h1 in 0..nh {
            let row = idx(n1, h1) * order;
            for n2 in 0..nn {
                let left = n.mul(n1, act[h1][n2]);
                for h2 in 0..nh {
                    mul[row + idx(n2, h2)] = idx(left, h.mul(h1, h2));
                }
            }
        }
    }
    let mut gens: Vec<usize> = n.generators().iter().map(|&s| idx(s, 0)).collect();
    gens.extend(h.generators().iter().map(|&t| idx(0, t)));
    let names = merged_names(n.generator_names(), h.generator_names());
    FiniteGroup::from_table(order, &mul, 0, &gens, names)
}

/// `g / n` for a normal subgroup `n`; generators are the images of `g`'s.
pub fn quotient(g: &FiniteGroup, n: &Subgroup) -> Result<FiniteGroup, GroupError> {
    if !g.is_normal(n) {
        return Err(GroupError::NotNormal);
    }
    let mut coset_of = vec![usize::MAX; g.order()];
    let mut reps = Vec::new();
    for x in g.elements() {
        if coset_of[x] != usize::MAX {
            continue;
        }
        let id = reps.len();
        reps.push(x);
        for &m in n.members() {
            coset_of[g.mul(x, m)] = id;
        }
    }
    let k = reps.len();
    let mut mul = vec![0usize; k * k];
    for (i, &a) in reps.iter().enumerate() {
        for (j, &b) in reps.iter().enumerate() {
            mul[i * k + j] = coset_of[g.mul(a, b)];
        }
    }
    let gens: Vec<usize> = g.generators().iter().map(|&s| coset_of[s]).collect();
    FiniteGroup::from_table(k, &mul, coset_of[0], &gens, g.generator_names().to_vec())
}

/// `(g × h) / ⟨(z_g, z_h^-1)⟩`, identifying the central elements `z_g` and
/// `z_h`, which must have the same order.
pub fn central_product(
    g: &FiniteGroup,
    h: &FiniteGroup,
    z_g: usize,
    z_h: usize,
) -> Result<FiniteGroup, GroupError> {
    if !g.is_central(z_g) {
        return Err(GroupError::NonCentral(z_g));
    }
    if !h.is_central(z_h) {
        return Err(GroupError::NonCentral(z_h));
    }
    let (og, oh) = (g.element_order(z_g), h.element_order(z_h));
    if og != oh {
        return Err(GroupError::OrderMismatch(og, oh));
    }
    let d = direct_product(g, h)?;
    // Locate (z_g, z_h^-1) in the canonically renumbered product through the
    // factor generators' images.
    let ng = g.generators().len();
    let embed_g = embedding(g, &d, &d.generators()[..ng]);
    let embed_h = embedding(h, &d, &d.generators()[ng..]);
    let diag = d.mul(embed_g[z_g], embed_h[h.inv(z_h)]);
    let n = d.subgroup_generated(&[diag]);
    quotient(&d, &n)
}

/// Image of every element of `src` under the homomorphism sending its
/// generators to `images` in `dst`.
pub(crate) fn embedding(src: &FiniteGroup, dst: &FiniteGroup, images: &[usize]) -> Vec<usize> {
    let mut map = vec![usize::MAX; src.order()];
    map[0] = 0;
    let mut queue = VecDeque::from([0usize]);
    while let Some(x) = queue.pop_front() {
        for (i, &s) in src.generators().iter().enumerate() {
            let y = src.mul(x, s);
            if map[y] == usize::MAX {
                map[y] = dst.mul(map[x], images[i]);
                queue.push_back(y);
            }
        }
    }
    map
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::isomorphism_test;
    use crate::presentation::Builtin;

    fn build(b: Builtin) -> FiniteGroup {
        FiniteGroup::from_presentation(&b.presentation().unwrap()).unwrap()
    }

    /// Automorphism of the cyclic group `c` (canonical numbering c^i = i)
    /// raising to the power `k`.
    fn power_map(c: &FiniteGroup, k: i64) -> Vec<usize> {
        let gen = c.generators()[0];
        let mut perm = vec![0; c.order()];
        for i in 0..c.order() as i64 {
            perm[c.pow(gen, i)] = c.pow(gen, i * k);
        }
        perm
    }

    #[test]
    fn q8_times_c2() {
        let g = direct_product(&build(Builtin::Q8), &build(Builtin::Cyclic(2))).unwrap();
        assert_eq!(g.order(), 16);
        // Involutions: a^2, c, a^2 c.
        assert_eq!(g.involutions().len(), 3);
        assert_eq!(g.omega_subgroup().order(), 4);
        assert_eq!(g.generator_names(), &["a", "b", "c"]);
    }

    #[test]
    fn trivial_factor() {
        let q8 = build(Builtin::Q8);
        let g = direct_product(&q8, &build(Builtin::Cyclic(1))).unwrap();
        assert!(isomorphism_test(&g, &q8).is_some());
        let qq = direct_product(&q8, &q8).unwrap();
        assert_eq!(qq.order(), 64);
        assert_eq!(qq.generator_names(), &["a", "b", "a2", "b2"]);
    }

    #[test]
    fn c4_by_c4_is_s22() {
        let c4 = build(Builtin::Cyclic(4));
        let g = semidirect_product(&c4, &c4, &[power_map(&c4, 3)]).unwrap();
        assert_eq!(g.order(), 16);
        assert!(isomorphism_test(&g, &build(Builtin::S(2, 2))).is_some());
    }

    #[test]
    fn trivial_action_is_direct() {
        let c4 = build(Builtin::Cyclic(4));
        let c2 = build(Builtin::Cyclic(2));
        let g = semidirect_product(&c4, &c2, &[c4.elements().collect()]).unwrap();
        let d = direct_product(&c4, &c2).unwrap();
        assert_eq!(g, d);
    }

    #[test]
    fn theorem_iii_as_semidirect_product() {
        // Q8 acting on C8 with d^a = d^5 and b trivial.
        let c8 = build(Builtin::Cyclic(8));
        let q8 = build(Builtin::Q8);
        let g = semidirect_product(&c8, &q8, &[power_map(&c8, 5), c8.elements().collect()]).unwrap();
        assert_eq!(g.order(), 64);
        assert!(isomorphism_test(&g, &build(Builtin::TheoremIII(3))).is_some());
    }

    #[test]
    fn bad_actions_rejected() {
        let c4 = build(Builtin::Cyclic(4));
        let c2 = build(Builtin::Cyclic(2));
        // Swapping 1 and 2 in C4 is not a homomorphism.
        let mut perm: Vec<usize> = c4.elements().collect();
        perm.swap(1, 2);
        assert!(matches!(
            semidirect_product(&c4, &c2, &[perm]),
            Err(GroupError::NotAnAutomorphism { .. })
        ));
        // Inversion has order 2, so C3 cannot act by it.
        let c3 = FiniteGroup::from_presentation(
            &crate::presentation::parse_presentation("gens: t; rels: t^3").unwrap(),
        )
        .unwrap();
        assert!(matches!(
            semidirect_product(&c4, &c3, &[power_map(&c4, 3)]),
            Err(GroupError::RelatorViolation { .. })
        ));
    }

    #[test]
    fn central_product_of_s22_and_q8() {
        let s = build(Builtin::S22);
        let q = build(Builtin::Q8);
        let (a, b) = (s.generators()[0], s.generators()[1]);
        let z_s = s.mul(s.mul(a, a), s.mul(b, b));
        let qa = q.generators()[0];
        let z_q = q.mul(qa, qa);
        let g = central_product(&s, &q, z_s, z_q).unwrap();
        assert_eq!(g.order(), 64);
        assert_eq!(g.omega_subgroup().order(), 4);
        assert_eq!(g.frattini_subgroup().order(), 4);
        assert_eq!(g.omega_subgroup(), g.frattini_subgroup());
    }

    #[test]
    fn central_product_of_c2_with_itself() {
        let c2 = build(Builtin::Cyclic(2));
        let g = central_product(&c2, &c2, 1, 1).unwrap();
        assert_eq!(g.order(), 2);
    }

    #[test]
    fn central_product_errors() {
        let d8 = build(Builtin::DihedralPow(3));
        let q8 = build(Builtin::Q8);
        let b = d8.generators()[1];
        assert!(matches!(
            central_product(&d8, &q8, b, 1),
            Err(GroupError::NonCentral(_))
        ));
        let c4 = build(Builtin::Cyclic(4));
        let a2 = q8.mul(q8.generators()[0], q8.generators()[0]);
        assert!(matches!(
            central_product(&c4, &q8, 1, a2),
            Err(GroupError::OrderMismatch(4, 2))
        ));
    }
}
