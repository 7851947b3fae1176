//! Search over the square-zero elements of KG.
//!
//! U is a subspace of W spanned by square-zero, pairwise commuting vectors,
//! so every u in U has u^2 = 0 and (z + u)^2 = z^2 + zu + uz. The scan walks
//! a complement Q of U in W in Gray-code order, keeping z^2, the vectors
//! zq_k + q_kz and T_j = zu_j + u_jz up to date with one XOR per term. For
//! each z it solves sum_j x_j T_j = z^2, which describes the whole fiber of
//! square-zero elements in z + U at once: one solution z + s0 plus the
//! kernel of u -> zu + uz, which lies inside U.
//!
//! The visitor sees one representative per nonempty fiber. Since U is kept
//! inside the running span of accepted elements, the representative is all
//! that needs checking.

use std::sync::atomic::{AtomicBool, AtomicUsize, Ordering};
use std::sync::Mutex;

use crate::algebra::{BitVec, GroupAlgebra, SubspaceBasis};

/// Limits for a scan.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ScanConfig {
    /// Largest dimension of W/U that will be walked.
    pub max_dim: usize,
    /// Worker threads; 0 means one per available CPU.
    pub workers: usize,
}

pub const DEFAULT_MAX_DIM: usize = 26;

impl Default for ScanConfig {
    fn default() -> Self {
        ScanConfig {
            max_dim: DEFAULT_MAX_DIM,
            workers: 0,
        }
    }
}

impl ScanConfig {
    pub fn with_max_dim(max_dim: usize) -> Self {
        ScanConfig {
            max_dim,
            ..Self::default()
        }
    }

    pub fn single_threaded(mut self) -> Self {
        self.workers = 1;
        self
    }

    fn worker_count(&self) -> usize {
        match self.workers {
            0 => std::thread::available_parallelism().map_or(1, |n| n.get()),
            n => n,
        }
    }
}

/// What the visitor decides about a new fiber representative.
pub(crate) enum Visit {
    /// Add the representative to the accepted set.
    Accept,
    /// Stop the scan, reporting the representative and an optional partner.
    Stop(Option<BitVec>),
}

pub(crate) enum ScanOutcome {
    Completed(ScanStats),
    Stopped {
        element: BitVec,
        partner: Option<BitVec>,
        stats: ScanStats,
    },
    TooLarge {
        search_dim: usize,
        stats: ScanStats,
    },
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ScanStats {
    pub kernel_dim: usize,
    pub subspace_dim: usize,
    pub search_dim: usize,
    pub visited: u64,
    /// Square-zero elements seen, including 0; saturates.
    pub square_zero_count: u128,
    /// Dimension of the span of all accepted square-zero elements.
    pub span_dim: usize,
}

/// Greedy choice of U: basis vectors of `candidates` that square to zero and
/// commute with every vector already chosen.
pub(crate) fn commuting_square_zero(alg: &GroupAlgebra, candidates: &[BitVec]) -> Vec<BitVec> {
    let mut chosen: Vec<BitVec> = Vec::new();
    for b in candidates {
        if !alg.mul_bits(b, b).is_zero() {
            continue;
        }
        if chosen
            .iter()
            .all(|u| alg.mul_bits(b, u) == alg.mul_bits(u, b))
        {
            chosen.push(b.clone());
        }
    }
    chosen
}

/// Shared state: the accepted square-zero vectors and their span.
struct Accepted {
    span: SubspaceBasis,
    vectors: Vec<BitVec>,
}

struct Shared<'a, V> {
    alg: &'a GroupAlgebra<'a>,
    u: &'a [BitVec],
    q: &'a [BitVec],
    /// q_k^2.
    p: Vec<BitVec>,
    /// q_i q_k + q_k q_i, indexed [i][k].
    qq: Vec<Vec<BitVec>>,
    /// q_k u_j + u_j q_k, indexed [k][j].
    m: Vec<Vec<BitVec>>,
    accepted: Mutex<Accepted>,
    stop: AtomicBool,
    result: Mutex<Option<(BitVec, Option<BitVec>)>>,
    next_block: AtomicUsize,
    visited: AtomicUsize,
    count: Mutex<u128>,
    visitor: V,
}

/// Walks every square-zero element of `W = span(u) + span(q)`; `u` must be
/// square-zero and pairwise commuting.
pub(crate) fn scan<V>(
    alg: &GroupAlgebra,
    kernel_dim: usize,
    u: &[BitVec],
    q: &[BitVec],
    config: ScanConfig,
    visitor: V,
) -> ScanOutcome
where
    V: Fn(&BitVec, &[BitVec]) -> Visit + Sync,
{
    let mut stats = ScanStats {
        kernel_dim,
        subspace_dim: u.len(),
        search_dim: q.len(),
        ..ScanStats::default()
    };
    if q.len() > config.max_dim {
        stats.span_dim = u.len();
        return ScanOutcome::TooLarge {
            search_dim: q.len(),
            stats,
        };
    }
    let anti = |x: &BitVec, y: &BitVec| alg.mul_bits(x, y).xor(&alg.mul_bits(y, x));
    let shared = Shared {
        alg,
        u,
        q,
        p: q.iter().map(|x| alg.mul_bits(x, x)).collect(),
        qq: q.iter().map(|a| q.iter().map(|b| anti(a, b)).collect()).collect(),
        m: q.iter().map(|a| u.iter().map(|b| anti(a, b)).collect()).collect(),
        accepted: Mutex::new(Accepted {
            span: SubspaceBasis::spanned_by(alg.flat_dim(), u.iter().cloned()),
            vectors: u.to_vec(),
        }),
        stop: AtomicBool::new(false),
        result: Mutex::new(None),
        next_block: AtomicUsize::new(0),
        visited: AtomicUsize::new(0),
        count: Mutex::new(0),
        visitor,
    };

    let workers = config.worker_count().max(1);
    let prefix_bits = if workers == 1 {
        0
    } else {
        (usize::BITS - (4 * workers - 1).leading_zeros()) as usize
    }
    .min(q.len());
    if workers == 1 {
        worker(&shared, prefix_bits);
    } else {
        std::thread::scope(|s| {
            for _ in 0..workers {
                s.spawn(|| worker(&shared, prefix_bits));
            }
        });
    }

    stats.visited = shared.visited.load(Ordering::Relaxed) as u64;
    stats.square_zero_count = *shared.count.lock().expect("lock");
    let accepted = shared.accepted.into_inner().expect("lock");
    stats.span_dim = accepted.span.dim();
    match shared.result.into_inner().expect("lock") {
        Some((element, partner)) => ScanOutcome::Stopped {
            element,
            partner,
            stats,
        },
        None => ScanOutcome::Completed(stats),
    }
}

/// Per-worker incremental state at the current point z of the walk.
struct State {
    z: BitVec,
    sq: BitVec,
    /// z q_k + q_k z.
    r: Vec<BitVec>,
    /// z u_j + u_j z.
    t: Vec<BitVec>,
}

impl State {
    fn at(shared: &Shared<'_, impl Sync>, coords: usize) -> State {
        let alg = shared.alg;
        let n = alg.flat_dim();
        let mut z = BitVec::zeros(n);
        for (k, qk) in shared.q.iter().enumerate() {
            if coords >> k & 1 == 1 {
                z.xor_assign(qk);
            }
        }
        let anti = |y: &BitVec| alg.mul_bits(&z, y).xor(&alg.mul_bits(y, &z));
        State {
            sq: alg.mul_bits(&z, &z),
            r: shared.q.iter().map(anti).collect(),
            t: shared.u.iter().map(anti).collect(),
            z,
        }
    }

    fn flip(&mut self, shared: &Shared<'_, impl Sync>, k: usize) {
        self.z.xor_assign(&shared.q[k]);
        self.sq.xor_assign(&shared.p[k]);
        self.sq.xor_assign(&self.r[k]);
        for (rm, d) in self.r.iter_mut().zip(&shared.qq[k]) {
            rm.xor_assign(d);
        }
        for (tj, d) in self.t.iter_mut().zip(&shared.m[k]) {
            tj.xor_assign(d);
        }
    }
}

/// Solves sum_j x_j t_j = target; returns (sum_j x_j u_j, rank of t).
struct Solver {
    rows: Vec<(usize, BitVec, BitVec)>,
}

impl Solver {
    fn solve(&mut self, t: &[BitVec], u: &[BitVec], target: &BitVec) -> (Option<BitVec>, usize) {
        self.rows.clear();
        for (tj, uj) in t.iter().zip(u) {
            let mut img = tj.clone();
            let mut comb = uj.clone();
            for (p, ri, rc) in &self.rows {
                if img.get(*p) {
                    img.xor_assign(ri);
                    comb.xor_assign(rc);
                }
            }
            if let Some(p) = img.lowest_one() {
                self.rows.push((p, img, comb));
            }
        }
        let rank = self.rows.len();
        let mut img = target.clone();
        let mut comb = BitVec::zeros(target.len());
        for (p, ri, rc) in &self.rows {
            if img.get(*p) {
                img.xor_assign(ri);
                comb.xor_assign(rc);
            }
        }
        (img.is_zero().then_some(comb), rank)
    }
}

fn worker<V>(shared: &Shared<'_, V>, prefix_bits: usize)
where
    V: Fn(&BitVec, &[BitVec]) -> Visit + Sync,
{
    let d = shared.q.len();
    let low = d - prefix_bits;
    let blocks = 1usize << prefix_bits;
    let mut solver = Solver { rows: Vec::new() };
    let mut local_span = shared.accepted.lock().expect("lock").span.clone();
    let mut local_count: u128 = 0;
    let mut local_visited = 0usize;
    loop {
        let block = shared.next_block.fetch_add(1, Ordering::Relaxed);
        if block >= blocks || shared.stop.load(Ordering::Relaxed) {
            break;
        }
        let mut state = State::at(shared, block << low);
        let steps = 1usize << low;
        for step in 0..steps {
            if step > 0 {
                state.flip(shared, step.trailing_zeros() as usize);
            }
            local_visited += 1;
            if step % 4096 == 0 && shared.stop.load(Ordering::Relaxed) {
                break;
            }
            let (s0, rank) = solver.solve(&state.t, shared.u, &state.sq);
            let Some(s0) = s0 else { continue };
            let free = shared.u.len() - rank;
            local_count = local_count.saturating_add(1u128.checked_shl(free as u32).unwrap_or(u128::MAX));
            let v = state.z.xor(&s0);
            if local_span.contains(&v) {
                continue;
            }
            let mut acc = shared.accepted.lock().expect("lock");
            if !acc.span.contains(&v) {
                match (shared.visitor)(&v, &acc.vectors) {
                    Visit::Accept => {
                        acc.span.insert(v.clone());
                        acc.vectors.push(v);
                    }
                    Visit::Stop(partner) => {
                        let mut result = shared.result.lock().expect("lock");
                        if result.is_none() {
                            *result = Some((v, partner));
                        }
                        shared.stop.store(true, Ordering::Relaxed);
                    }
                }
            }
            local_span = acc.span.clone();
            drop(acc);
            if shared.stop.load(Ordering::Relaxed) {
                break;
            }
        }
    }
    shared.visited.fetch_add(local_visited, Ordering::Relaxed);
    let mut count = shared.count.lock().expect("lock");
    *count = count.saturating_add(local_count);
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Field;
    use crate::group::FiniteGroup;
    use crate::presentation::Builtin;
    use crate::unit_lab::square_zero_kernel;

    fn build(b: Builtin) -> FiniteGroup {
        FiniteGroup::from_presentation(&b.presentation().unwrap()).unwrap()
    }

    fn count_square_zero(alg: &GroupAlgebra, u_from_ideal: bool, workers: usize) -> (u128, ScanStats) {
        let g = alg.group();
        let w = square_zero_kernel(alg).unwrap();
        let candidates = if u_from_ideal {
            alg.augmentation_ideal(&g.omega_subgroup()).intersect(&w).rows().to_vec()
        } else {
            Vec::new()
        };
        let u = commuting_square_zero(alg, &candidates);
        let span_u = SubspaceBasis::spanned_by(alg.flat_dim(), u.iter().cloned());
        let q = span_u.complement_in(w.rows());
        let config = ScanConfig {
            max_dim: 30,
            workers,
        };
        match scan(alg, w.dim(), &u, &q, config, |_, _| Visit::Accept) {
            ScanOutcome::Completed(stats) => (stats.square_zero_count, stats),
            _ => panic!("scan did not complete"),
        }
    }

    fn brute_count(alg: &GroupAlgebra) -> u128 {
        let n = alg.flat_dim();
        (0u64..1 << n)
            .filter(|m| {
                let z = BitVec::from_indices(n, (0..n).filter(|i| m >> i & 1 == 1));
                alg.mul_bits(&z, &z).is_zero()
            })
            .count() as u128
    }

    #[test]
    fn counts_match_brute_force() {
        for (b, field) in [
            (Builtin::Q8, Field::Gf2),
            (Builtin::DihedralPow(3), Field::Gf2),
            (Builtin::Cyclic(4), Field::Gf2),
            (Builtin::Cyclic(2), Field::Gf4),
            (Builtin::Cyclic(4), Field::Gf4),
            (Builtin::S(2, 2), Field::Gf2),
            (Builtin::ModularS(3), Field::Gf2),
        ] {
            let g = build(b);
            let alg = GroupAlgebra::new(&g, field);
            let expected = brute_count(&alg);
            for workers in [1, 3] {
                assert_eq!(count_square_zero(&alg, true, workers).0, expected, "{b} {field}");
            }
            assert_eq!(count_square_zero(&alg, false, 1).0, expected, "{b} {field} plain");
        }
    }

    #[test]
    fn quaternion_counts() {
        let g = build(Builtin::Q8);
        let alg = GroupAlgebra::new(&g, Field::Gf2);
        let (count, stats) = count_square_zero(&alg, true, 1);
        assert_eq!(count, 16);
        assert_eq!(stats.kernel_dim, 6);
        assert_eq!(stats.subspace_dim, 4);
        assert_eq!(stats.search_dim, 2);
        assert_eq!(stats.visited, 4);
        assert_eq!(stats.span_dim, 4);
    }

    #[test]
    fn too_large_is_reported() {
        let g = build(Builtin::Q8);
        let alg = GroupAlgebra::new(&g, Field::Gf2);
        let w = square_zero_kernel(&alg).unwrap();
        let out = scan(&alg, w.dim(), &[], w.rows(), ScanConfig::with_max_dim(5), |_, _| Visit::Accept);
        assert!(matches!(out, ScanOutcome::TooLarge { search_dim: 6, .. }));
    }
}
