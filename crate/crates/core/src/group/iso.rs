//! Isomorphism testing by backtracking over generator images.
//!
//! Elements are fingerprinted by (order, conjugacy class size, number of
//! square roots). A generating set of the source is chosen greedily, always
//! taking the element whose fingerprint is rarest in the target. Images are
//! then assigned generator by generator; after each choice the partial map is
//! extended over the subgroup generated so far, so any relation that fails
//! prunes the branch at once.

use std::collections::{HashMap, VecDeque};

use super::FiniteGroup;

/// A verified isomorphism `g -> h`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Isomorphism {
    /// Generators of the source that were mapped explicitly.
    pub source_generators: Vec<usize>,
    /// Their images in the target.
    pub images: Vec<usize>,
    /// Image of every source element.
    pub map: Vec<usize>,
}

impl Isomorphism {
    pub fn apply(&self, x: usize) -> usize {
        self.map[x]
    }

    pub fn inverse(&self) -> Vec<usize> {
        let mut inv = vec![0; self.map.len()];
        for (x, &y) in self.map.iter().enumerate() {
            inv[y] = x;
        }
        inv
    }
}

type Fingerprint = (usize, usize, usize);

fn fingerprints(g: &FiniteGroup) -> Vec<Fingerprint> {
    let mut roots = vec![0usize; g.order()];
    for x in g.elements() {
        roots[g.mul(x, x)] += 1;
    }
    let mut class_size = vec![0usize; g.order()];
    for class in g.conjugacy_classes() {
        for &x in &class {
            class_size[x] = class.len();
        }
    }
    g.elements()
        .map(|x| (g.element_order(x), class_size[x], roots[x]))
        .collect()
}

fn census(fp: &[Fingerprint]) -> HashMap<Fingerprint, usize> {
    let mut m = HashMap::new();
    for f in fp {
        *m.entry(*f).or_insert(0) += 1;
    }
    m
}

/// Returns an isomorphism `g -> h` or `None`. Any returned map has been
/// checked elementwise to be a bijective homomorphism.
pub fn isomorphism_test(g: &FiniteGroup, h: &FiniteGroup) -> Option<Isomorphism> {
    if g.order() != h.order() || g.is_abelian() != h.is_abelian() {
        return None;
    }
    if g.center().order() != h.center().order()
        || g.commutator_subgroup().order() != h.commutator_subgroup().order()
    {
        return None;
    }
    let fg = fingerprints(g);
    let fh = fingerprints(h);
    let census_h = census(&fh);
    if census(&fg) != census_h {
        return None;
    }

    // Greedy generating set: rarest fingerprint first among elements outside
    // the span of the chosen ones together with the Frattini subgroup, then
    // fill up without the Frattini subgroup for non-p-groups.
    let phi = g.frattini_subgroup();
    let mut chosen: Vec<usize> = Vec::new();
    let rarity = |x: usize| (census_h[&fg[x]], std::cmp::Reverse(fg[x].0), x);
    loop {
        let mut with_phi = chosen.clone();
        with_phi.extend(phi.members());
        let span = g.subgroup_generated(&with_phi);
        if span.order() == g.order() {
            break;
        }
        let pick = g.elements().filter(|&x| !span.contains(x)).min_by_key(|&x| rarity(x))?;
        chosen.push(pick);
    }
    loop {
        let span = g.subgroup_generated(&chosen);
        if span.order() == g.order() {
            break;
        }
        let pick = g.elements().filter(|&x| !span.contains(x)).min_by_key(|&x| rarity(x))?;
        chosen.push(pick);
    }

    let candidates: Vec<Vec<usize>> = chosen
        .iter()
        .map(|&s| h.elements().filter(|&y| fh[y] == fg[s]).collect())
        .collect();

    let mut search = Search {
        g,
        h,
        gens: &chosen,
        candidates: &candidates,
        images: Vec::new(),
    };
    let images = search.run()?;
    let map = extend(g, h, &chosen, &images).expect("search returns a consistent map");
    let iso = Isomorphism {
        source_generators: chosen,
        images,
        map,
    };
    verify(g, h, &iso.map).then_some(iso)
}

struct Search<'a> {
    g: &'a FiniteGroup,
    h: &'a FiniteGroup,
    gens: &'a [usize],
    candidates: &'a [Vec<usize>],
    images: Vec<usize>,
}

impl Search<'_> {
    fn run(&mut self) -> Option<Vec<usize>> {
        let depth = self.images.len();
        if depth == self.gens.len() {
            return Some(self.images.clone());
        }
        for &cand in &self.candidates[depth] {
            self.images.push(cand);
            if extend(self.g, self.h, &self.gens[..=depth], &self.images).is_some() {
                if let Some(found) = self.run() {
                    return Some(found);
                }
            }
            self.images.pop();
        }
        None
    }
}

/// Extends `gens[i] -> images[i]` to an injective homomorphism on the
/// subgroup the generators span. `None` if inconsistent. The result has
/// `usize::MAX` outside that subgroup.
fn extend(g: &FiniteGroup, h: &FiniteGroup, gens: &[usize], images: &[usize]) -> Option<Vec<usize>> {
    let mut map = vec![usize::MAX; g.order()];
    let mut used = vec![false; h.order()];
    map[0] = 0;
    used[0] = true;
    let mut queue = VecDeque::from([0usize]);
    while let Some(x) = queue.pop_front() {
        for (i, &s) in gens.iter().enumerate() {
            let y = g.mul(x, s);
            let fy = h.mul(map[x], images[i]);
            if map[y] == usize::MAX {
                if used[fy] {
                    return None;
                }
                used[fy] = true;
                map[y] = fy;
                queue.push_back(y);
            } else if map[y] != fy {
                return None;
            }
        }
    }
    Some(map)
}

fn verify(g: &FiniteGroup, h: &FiniteGroup, map: &[usize]) -> bool {
    let mut hit = vec![false; h.order()];
    for &y in map {
        if y >= h.order() || hit[y] {
            return false;
        }
        hit[y] = true;
    }
    g.elements()
        .all(|a| g.elements().all(|b| map[g.mul(a, b)] == h.mul(map[a], map[b])))
}
