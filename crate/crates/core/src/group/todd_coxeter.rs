//! Coset enumeration over the trivial subgroup (HLT strategy with lookahead).
//!
//! Cosets are rows of a table with one column per generator and one per
//! inverse. Relators are scanned at every live coset in order, defining new
//! cosets to fill gaps. When the coset limit is reached, a lookahead pass scans
//! every relator at every coset without defining anything, which processes
//! pending deductions and coincidences; the table is then compacted. If that
//! frees nothing the enumeration gives up.

use super::{FiniteGroup, GroupError, MAX_ORDER};
use crate::presentation::Presentation;

/// Coset limit used when the caller has no better estimate.
pub const DEFAULT_COSET_LIMIT: usize = 100_000;

const NONE: u32 = u32::MAX;

struct CosetTable {
    cols: usize,
    table: Vec<u32>,
    /// Union-find parent; `rep[c] == c` for live cosets.
    rep: Vec<u32>,
    queue: Vec<u32>,
    limit: usize,
    live: usize,
}

/// A definition was needed but the table is full.
struct Full;

#[inline]
fn inv_col(c: usize) -> usize {
    c ^ 1
}

impl CosetTable {
    fn new(ngens: usize, limit: usize) -> Self {
        let cols = 2 * ngens;
        CosetTable {
            cols,
            table: vec![NONE; cols],
            rep: vec![0],
            queue: Vec::new(),
            limit,
            live: 1,
        }
    }

    fn len(&self) -> usize {
        self.rep.len()
    }

    #[inline]
    fn get(&self, c: usize, x: usize) -> u32 {
        self.table[c * self.cols + x]
    }

    #[inline]
    fn set(&mut self, c: usize, x: usize, v: u32) {
        self.table[c * self.cols + x] = v;
    }

    fn is_live(&self, c: usize) -> bool {
        self.rep[c] as usize == c
    }

    fn define(&mut self, c: usize, x: usize) -> Result<(), Full> {
        if self.len() >= self.limit {
            return Err(Full);
        }
        let d = self.len();
        self.rep.push(d as u32);
        self.table.extend(std::iter::repeat_n(NONE, self.cols));
        self.live += 1;
        self.set(c, x, d as u32);
        self.set(d, inv_col(x), c as u32);
        Ok(())
    }

    fn find(&mut self, c: u32) -> u32 {
        let mut root = c;
        while self.rep[root as usize] != root {
            root = self.rep[root as usize];
        }
        let mut c = c;
        while self.rep[c as usize] != root {
            let next = self.rep[c as usize];
            self.rep[c as usize] = root;
            c = next;
        }
        root
    }

    fn merge(&mut self, a: u32, b: u32) {
        let a = self.find(a);
        let b = self.find(b);
        if a != b {
            let (lo, hi) = if a < b { (a, b) } else { (b, a) };
            self.rep[hi as usize] = lo;
            self.queue.push(hi);
            self.live -= 1;
        }
    }

    fn coincidence(&mut self, a: u32, b: u32) {
        self.merge(a, b);
        let mut i = 0;
        while i < self.queue.len() {
            let dead = self.queue[i] as usize;
            i += 1;
            for x in 0..self.cols {
                let target = self.get(dead, x);
                if target == NONE {
                    continue;
                }
                let ix = inv_col(x);
                if self.get(target as usize, ix) == dead as u32 {
                    self.set(target as usize, ix, NONE);
                }
                let mu = self.find(dead as u32) as usize;
                let nu = self.find(target);
                let mu_x = self.get(mu, x);
                if mu_x != NONE {
                    self.merge(nu, mu_x);
                } else {
                    let nu_ix = self.get(nu as usize, ix);
                    if nu_ix != NONE {
                        self.merge(mu as u32, nu_ix);
                    } else {
                        self.set(mu, x, nu);
                        self.set(nu as usize, ix, mu as u32);
                    }
                }
            }
        }
        self.queue.clear();
    }

    /// Scans relator `w` (as column indices) at coset `c`. With `fill`, gaps
    /// are closed by defining new cosets.
    fn scan(&mut self, c: usize, w: &[usize], fill: bool) -> Result<(), Full> {
        if w.is_empty() {
            return Ok(());
        }
        loop {
            let mut f = c as u32;
            let mut i = 0usize;
            let mut b = c as u32;
            let mut j = w.len() as isize - 1;
            while i < w.len() {
                let next = self.get(f as usize, w[i]);
                if next == NONE {
                    break;
                }
                f = next;
                i += 1;
            }
            if i == w.len() {
                if f != c as u32 {
                    self.coincidence(f, c as u32);
                }
                return Ok(());
            }
            while j >= i as isize {
                let next = self.get(b as usize, inv_col(w[j as usize]));
                if next == NONE {
                    break;
                }
                b = next;
                j -= 1;
            }
            if j < i as isize {
                self.coincidence(f, b);
                return Ok(());
            }
            if j == i as isize {
                self.set(f as usize, w[i], b);
                self.set(b as usize, inv_col(w[i]), f);
                return Ok(());
            }
            if !fill {
                return Ok(());
            }
            self.define(f as usize, w[i])?;
        }
    }

    fn lookahead(&mut self, relators: &[Vec<usize>]) {
        let mut c = 0;
        while c < self.len() {
            for r in relators {
                if !self.is_live(c) {
                    break;
                }
                // Scanning without filling never defines.
                let _ = self.scan(c, r, false);
            }
            c += 1;
        }
    }

    /// Drops dead rows, renumbering live cosets in order. Returns the new
    /// index of each old live coset.
    fn compact(&mut self) -> Vec<u32> {
        let n = self.len();
        let mut new_of = vec![NONE; n];
        let mut next = 0u32;
        for c in 0..n {
            if self.is_live(c) {
                new_of[c] = next;
                next += 1;
            }
        }
        let mut table = Vec::with_capacity(next as usize * self.cols);
        for c in 0..n {
            if !self.is_live(c) {
                continue;
            }
            for x in 0..self.cols {
                let v = self.get(c, x);
                table.push(if v == NONE { NONE } else { new_of[v as usize] });
            }
        }
        self.table = table;
        self.rep = (0..next).collect();
        self.live = next as usize;
        new_of
    }
}

/// Enumerates the cosets of the trivial subgroup and returns the regular
/// representation as a multiplication table. Generators of the result are the
/// presentation's generators, in order, under their presentation names.
pub fn todd_coxeter(p: &Presentation, coset_limit: usize) -> Result<FiniteGroup, GroupError> {
    if p.is_free() {
        return Err(GroupError::FreeGroup);
    }
    let limit = coset_limit.max(1);
    let ngens = p.num_generators();
    let relators: Vec<Vec<usize>> = p
        .relators()
        .iter()
        .map(|w| {
            w.letters()
                .map(|(g, s)| 2 * g + usize::from(s < 0))
                .collect()
        })
        .collect();

    let mut t = CosetTable::new(ngens, limit);
    let mut c = 0usize;
    'outer: loop {
        if c >= t.len() {
            t.compact();
            // A complete table ends the enumeration; otherwise sweep again
            // from the first coset with an undefined entry.
            match t.table.iter().position(|&v| v == NONE) {
                None => break,
                Some(pos) => {
                    c = pos / t.cols;
                    continue;
                }
            }
        }
        if t.is_live(c) {
            let mut step = || -> Result<(), Full> {
                for r in &relators {
                    if !t.is_live(c) {
                        return Ok(());
                    }
                    t.scan(c, r, true)?;
                }
                for x in 0..t.cols {
                    if !t.is_live(c) {
                        return Ok(());
                    }
                    if t.get(c, x) == NONE {
                        t.define(c, x)?;
                    }
                }
                Ok(())
            };
            if step().is_err() {
                let before = t.len();
                t.lookahead(&relators);
                let new_of = t.compact();
                if t.len() >= before {
                    return Err(GroupError::LimitExceeded { limit });
                }
                // Resume at the first live coset at or after `c`.
                c = (c..before)
                    .map(|k| new_of[k])
                    .find(|&k| k != NONE)
                    .map_or(t.len(), |k| k as usize);
                continue 'outer;
            }
        }
        c += 1;
    }
    let n = t.len();
    if n > MAX_ORDER {
        return Err(GroupError::OrderTooLarge(n));
    }

    // Coset i is the group element reached from coset 0; multiplying g_i by
    // g_j walks a word for g_j from coset i. A breadth-first tree gives each
    // j a parent and a column with j = parent * column.
    let mut parent = vec![usize::MAX; n];
    let mut via = vec![0usize; n];
    let mut bfs = Vec::with_capacity(n);
    parent[0] = 0;
    bfs.push(0usize);
    let mut head = 0;
    while head < bfs.len() {
        let y = bfs[head];
        head += 1;
        for x in 0..t.cols {
            let z = t.get(y, x) as usize;
            if parent[z] == usize::MAX {
                parent[z] = y;
                via[z] = x;
                bfs.push(z);
            }
        }
    }
    let mut mul = vec![0usize; n * n];
    for i in 0..n {
        mul[i * n] = i;
        for &j in &bfs[1..] {
            let prev = mul[i * n + parent[j]];
            mul[i * n + j] = t.get(prev, via[j]) as usize;
        }
    }
    let generators: Vec<usize> = (0..ngens).map(|g| t.get(0, 2 * g) as usize).collect();
    let group = FiniteGroup::from_table(n, &mul, 0, &generators, p.generator_names().to_vec())?;
    for w in p.relators() {
        if group.evaluate(w) != group.identity() {
            return Err(GroupError::RelatorViolation {
                relator: w.display(p.generator_names()),
            });
        }
    }
    Ok(group)
}
