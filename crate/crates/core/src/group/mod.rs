//! Finite groups as multiplication tables.
//!
//! Every constructor validates the group axioms and renumbers elements
//! canonically: the identity is 0 and the remaining elements follow the order
//! of first appearance in a breadth-first closure that right-multiplies by the
//! generators in order. Equal tables therefore serialize identically.

mod construct;
mod iso;
mod report;
mod subgroup;
mod table_io;
mod todd_coxeter;

use std::collections::VecDeque;

use thiserror::Error;

use crate::presentation::{Presentation, Word};

pub use construct::{central_product, direct_product, quotient, semidirect_product};
pub use iso::{isomorphism_test, Isomorphism};
pub use report::{structural_report, StructuralReport};
pub use subgroup::Subgroup;
pub use table_io::GroupTableFile;
pub use todd_coxeter::{todd_coxeter, DEFAULT_COSET_LIMIT};

/// Largest group order the engine materializes.
pub const MAX_ORDER: usize = 4096;

#[derive(Debug, Error)]
pub enum GroupError {
    #[error("table is not a group: {0}")]
    NotAGroup(String),
    #[error("group order {0} exceeds the supported maximum of {MAX_ORDER}")]
    OrderTooLarge(usize),
    #[error("generators span a subgroup of order {spanned}, not the whole group of order {order}")]
    GeneratorsDoNotSpan { spanned: usize, order: usize },
    #[error("coset enumeration exceeded the limit of {limit} cosets")]
    LimitExceeded { limit: usize },
    #[error("presentation has no relators (free group)")]
    FreeGroup,
    #[error("relator {relator} does not evaluate to the identity")]
    RelatorViolation { relator: String },
    #[error("permutation for generator {generator} is not an automorphism: {reason}")]
    NotAnAutomorphism { generator: usize, reason: String },
    #[error("element {0} is not central")]
    NonCentral(usize),
    #[error("central elements have different orders ({0} and {1})")]
    OrderMismatch(usize, usize),
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("{0}")]
    Table(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

/// An immutable finite group given by its multiplication table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    order: usize,
    table: Vec<u16>,
    inv: Vec<u16>,
    generators: Vec<usize>,
    generator_names: Vec<String>,
    names: Vec<String>,
}

impl FiniteGroup {
    /// Validates a row-major multiplication table and renumbers it
    /// canonically. `generators` must generate the group; `generator_names`
    /// label them for display and literal parsing.
    pub fn from_table(
        order: usize,
        mul: &[usize],
        identity: usize,
        generators: &[usize],
        generator_names: Vec<String>,
    ) -> Result<Self, GroupError> {
        if order == 0 {
            return Err(GroupError::NotAGroup("empty table".into()));
        }
        if order > MAX_ORDER {
            return Err(GroupError::OrderTooLarge(order));
        }
        if mul.len() != order * order {
            return Err(GroupError::NotAGroup(format!(
                "table has {} entries, expected {}",
                mul.len(),
                order * order
            )));
        }
        if let Some(&bad) = mul.iter().find(|&&x| x >= order) {
            return Err(GroupError::NotAGroup(format!("entry {bad} out of range")));
        }
        if identity >= order {
            return Err(GroupError::NotAGroup("identity out of range".into()));
        }
        if generator_names.len() != generators.len() {
            return Err(GroupError::Table(
                "one name per generator is required".into(),
            ));
        }
        if let Some(&g) = generators.iter().find(|&&g| g >= order) {
            return Err(GroupError::NotAGroup(format!("generator {g} out of range")));
        }
        let at = |a: usize, b: usize| mul[a * order + b];
        for x in 0..order {
            if at(identity, x) != x || at(x, identity) != x {
                return Err(GroupError::NotAGroup(format!(
                    "{identity} is not a two-sided identity for {x}"
                )));
            }
        }
        let mut seen = vec![0u32; order];
        for (round, x) in (0..order).enumerate() {
            for y in 0..order {
                let v = at(x, y);
                if seen[v] == 2 * round as u32 + 1 {
                    return Err(GroupError::NotAGroup(format!("row {x} repeats {v}")));
                }
                seen[v] = 2 * round as u32 + 1;
            }
            for y in 0..order {
                let v = at(y, x);
                if seen[v] == 2 * round as u32 + 2 {
                    return Err(GroupError::NotAGroup(format!("column {x} repeats {v}")));
                }
                seen[v] = 2 * round as u32 + 2;
            }
        }
        check_associative(order, mul, generators)?;

        // Canonical renumbering by breadth-first closure.
        let mut new_of = vec![usize::MAX; order];
        let mut old_of = Vec::with_capacity(order);
        let mut words: Vec<Word> = Vec::with_capacity(order);
        new_of[identity] = 0;
        old_of.push(identity);
        words.push(Word::identity());
        let mut head = 0;
        while head < old_of.len() {
            let x = old_of[head];
            for (i, &g) in generators.iter().enumerate() {
                let y = at(x, g);
                if new_of[y] == usize::MAX {
                    new_of[y] = old_of.len();
                    old_of.push(y);
                    words.push(words[head].mul(&Word::generator(i)));
                }
            }
            head += 1;
        }
        if old_of.len() != order {
            return Err(GroupError::GeneratorsDoNotSpan {
                spanned: old_of.len(),
                order,
            });
        }
        let mut table = vec![0u16; order * order];
        for a in 0..order {
            for b in 0..order {
                table[a * order + b] = new_of[at(old_of[a], old_of[b])] as u16;
            }
        }
        let mut inv = vec![0u16; order];
        for a in 0..order {
            for b in 0..order {
                if table[a * order + b] == 0 {
                    inv[a] = b as u16;
                    break;
                }
            }
        }
        let names = words.iter().map(|w| w.display(&generator_names)).collect();
        Ok(FiniteGroup {
            order,
            table,
            inv,
            generators: generators.iter().map(|&g| new_of[g]).collect(),
            generator_names,
            names,
        })
    }

    /// Materializes a presentation by coset enumeration with the default
    /// limit.
    pub fn from_presentation(p: &Presentation) -> Result<Self, GroupError> {
        todd_coxeter(p, DEFAULT_COSET_LIMIT)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        0
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a] as usize
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn generator_names(&self) -> &[String] {
        &self.generator_names
    }

    /// Display word of an element in the generators, e.g. `a*b^2`.
    pub fn name(&self, x: usize) -> &str {
        &self.names[x]
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    pub fn pow(&self, x: usize, k: i64) -> usize {
        let base = if k < 0 { self.inv(x) } else { x };
        let mut acc = 0;
        for _ in 0..k.unsigned_abs() {
            acc = self.mul(acc, base);
        }
        acc
    }

    pub fn element_order(&self, x: usize) -> usize {
        let mut y = x;
        let mut k = 1;
        while y != 0 {
            y = self.mul(y, x);
            k += 1;
        }
        k
    }

    /// `[a,b] = a^-1 b^-1 a b`.
    pub fn commutator(&self, a: usize, b: usize) -> usize {
        let ab = self.mul(a, b);
        let ba = self.mul(b, a);
        self.mul(self.inv(ba), ab)
    }

    /// `a^b = b^-1 a b`.
    pub fn conjugate(&self, a: usize, b: usize) -> usize {
        self.mul(self.mul(self.inv(b), a), b)
    }

    pub fn commute(&self, a: usize, b: usize) -> bool {
        self.mul(a, b) == self.mul(b, a)
    }

    pub fn is_abelian(&self) -> bool {
        self.generators
            .iter()
            .enumerate()
            .all(|(i, &a)| self.generators[i + 1..].iter().all(|&b| self.commute(a, b)))
    }

    pub fn is_central(&self, x: usize) -> bool {
        self.generators.iter().all(|&g| self.commute(x, g))
    }

    pub fn exponent(&self) -> usize {
        self.elements()
            .map(|x| self.element_order(x))
            .fold(1, lcm)
    }

    /// Evaluates a word whose generator indices refer to this group's
    /// generator list.
    pub fn evaluate(&self, w: &Word) -> usize {
        let mut acc = 0;
        for &(g, e) in w.syllables() {
            acc = self.mul(acc, self.pow(self.generators[g], e));
        }
        acc
    }

    /// Number of conjugacy classes.
    pub fn class_count(&self) -> usize {
        self.conjugacy_classes().len()
    }

    pub fn conjugacy_classes(&self) -> Vec<Vec<usize>> {
        let mut class_of = vec![usize::MAX; self.order];
        let mut classes = Vec::new();
        for x in self.elements() {
            if class_of[x] != usize::MAX {
                continue;
            }
            let id = classes.len();
            let mut class = vec![x];
            class_of[x] = id;
            let mut queue = VecDeque::from([x]);
            while let Some(y) = queue.pop_front() {
                for &g in &self.generators {
                    let z = self.conjugate(y, g);
                    if class_of[z] == usize::MAX {
                        class_of[z] = id;
                        class.push(z);
                        queue.push_back(z);
                    }
                }
            }
            class.sort_unstable();
            classes.push(class);
        }
        classes
    }

    /// Full associativity check, used by tests and the table reader.
    pub fn is_associative(&self) -> bool {
        let n = self.order;
        (0..n).all(|a| {
            (0..n).all(|b| {
                let ab = self.mul(a, b);
                (0..n).all(|c| self.mul(ab, c) == self.mul(a, self.mul(b, c)))
            })
        })
    }

    /// Row-major table as plain indices.
    pub fn table(&self) -> Vec<usize> {
        self.table.iter().map(|&x| x as usize).collect()
    }

    /// The same group with a different generating list. Elements are
    /// renumbered canonically for the new generators.
    pub fn with_generators(
        &self,
        generators: &[usize],
        names: Vec<String>,
    ) -> Result<FiniteGroup, GroupError> {
        FiniteGroup::from_table(self.order, &self.table(), 0, generators, names)
    }

    /// Renames the generators without changing the table.
    pub fn with_generator_names(mut self, names: Vec<String>) -> Result<FiniteGroup, GroupError> {
        if names.len() != self.generators.len() {
            return Err(GroupError::Table("one name per generator is required".into()));
        }
        self.generator_names = names;
        self.names = self
            .element_words()
            .iter()
            .map(|w| w.display(&self.generator_names))
            .collect();
        Ok(self)
    }

    /// Breadth-first words for every element, consistent with the canonical
    /// numbering.
    pub fn element_words(&self) -> Vec<Word> {
        let mut words: Vec<Option<Word>> = vec![None; self.order];
        words[0] = Some(Word::identity());
        let mut queue = VecDeque::from([0usize]);
        while let Some(y) = queue.pop_front() {
            for (i, &g) in self.generators.iter().enumerate() {
                let z = self.mul(y, g);
                if words[z].is_none() {
                    let w = words[y].as_ref().expect("visited").mul(&Word::generator(i));
                    words[z] = Some(w);
                    queue.push_back(z);
                }
            }
        }
        words.into_iter().map(|w| w.expect("generators span")).collect()
    }
}

fn check_associative(order: usize, mul: &[usize], generators: &[usize]) -> Result<(), GroupError> {
    let at = |a: usize, b: usize| mul[a * order + b];
    if order <= 256 {
        for a in 0..order {
            for b in 0..order {
                let ab = at(a, b);
                for c in 0..order {
                    if at(ab, c) != at(a, at(b, c)) {
                        return Err(GroupError::NotAGroup(format!(
                            "({a}*{b})*{c} != {a}*({b}*{c})"
                        )));
                    }
                }
            }
        }
    } else {
        // Light's test against a generating set.
        for &g in generators {
            for a in 0..order {
                let ag = at(a, g);
                for b in 0..order {
                    if at(ag, b) != at(a, at(g, b)) {
                        return Err(GroupError::NotAGroup(format!(
                            "({a}*{g})*{b} != {a}*({g}*{b})"
                        )));
                    }
                }
            }
        }
    }
    Ok(())
}

pub(crate) fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub(crate) fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}

#[cfg(test)]
mod tests {
    use super::*;

    fn klein() -> FiniteGroup {
        // x XOR y on {0,1,2,3}
        let mul: Vec<usize> = (0..16).map(|i| (i / 4) ^ (i % 4)).collect();
        FiniteGroup::from_table(4, &mul, 0, &[1, 2], vec!["a".into(), "b".into()]).unwrap()
    }

    #[test]
    fn canonical_numbering_is_breadth_first() {
        let g = klein();
        assert_eq!(g.generators(), &[1, 2]);
        assert_eq!(g.name(0), "1");
        assert_eq!(g.name(1), "a");
        assert_eq!(g.name(2), "b");
        assert_eq!(g.name(3), "a*b");
        assert!(g.is_abelian());
        assert_eq!(g.exponent(), 2);
    }

    #[test]
    fn rejects_non_group_tables() {
        // Constant row.
        let mul = vec![0, 1, 1, 1];
        assert!(matches!(
            FiniteGroup::from_table(2, &mul, 0, &[1], vec!["a".into()]),
            Err(GroupError::NotAGroup(_))
        ));
        // Latin square with identity but not associative (order 5 loop).
        let loop5 = [
            [0, 1, 2, 3, 4],
            [1, 0, 3, 4, 2],
            [2, 4, 0, 1, 3],
            [3, 2, 4, 0, 1],
            [4, 3, 1, 2, 0],
        ];
        let flat: Vec<usize> = loop5.iter().flatten().copied().collect();
        assert!(matches!(
            FiniteGroup::from_table(5, &flat, 0, &[1, 2], vec!["a".into(), "b".into()]),
            Err(GroupError::NotAGroup(_))
        ));
    }

    #[test]
    fn generators_must_span() {
        let mul: Vec<usize> = (0..16).map(|i| (i / 4) ^ (i % 4)).collect();
        assert!(matches!(
            FiniteGroup::from_table(4, &mul, 0, &[1], vec!["a".into()]),
            Err(GroupError::GeneratorsDoNotSpan { spanned: 2, order: 4 })
        ));
    }
}
