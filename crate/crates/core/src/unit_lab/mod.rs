//! Involutions of the normalized unit group V(KG): enumeration, the
//! commutation decision, the comparison with 1 + I(Omega(G)), witnesses
//! and small exhaustive oracles.

mod enumerate;
mod kernel;
mod oracles;
mod scan;
mod witness;

use std::time::{Duration, Instant};

use serde::Serialize;
use thiserror::Error;

use crate::algebra::{AlgebraError, BitVec, Field, GroupAlgebra, SubspaceBasis};
use crate::group::GroupError;
use crate::presentation::PresentationError;

pub use enumerate::{enumerate_involutions, Involutions};
pub use kernel::square_zero_kernel;
pub use oracles::{lemma4_oracle, lemma5_oracle};
pub use scan::{ScanConfig, ScanStats, DEFAULT_MAX_DIM};
pub use witness::{
    is_noncommuting_involution_pair, known_pair_for, naive_mul, quaternion_pair,
    verify_witness_pair, witness_search, KnownWitness, WitnessPair, WitnessShape,
    KNOWN_WITNESSES,
};

use scan::{commuting_square_zero, scan, ScanOutcome, Visit};

#[derive(Debug, Error)]
pub enum UnitLabError {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Presentation(#[from] PresentationError),
    #[error("kernel dimension {dim} exceeds max_dim {max_dim}")]
    DimensionExceeded { dim: usize, max_dim: usize },
    #[error("`{0}` does not have augmentation 1")]
    NotNormalized(String),
    #[error("group is not abelian")]
    NotAbelian,
    #[error("{0}")]
    OutOfRange(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Good,
    Bad(WitnessPair),
    Unknown(String),
}

impl Verdict {
    pub fn tag(&self) -> &'static str {
        match self {
            Verdict::Good => "good",
            Verdict::Bad(_) => "bad",
            Verdict::Unknown(_) => "unknown",
        }
    }
}

/// Verdict plus the scan figures.
#[derive(Debug, Clone)]
pub struct CommutationResult {
    pub verdict: Verdict,
    pub stats: ScanStats,
    pub elapsed: Duration,
}

/// Machine-readable verdict.
#[derive(Debug, Clone, Serialize)]
pub struct VerdictReport {
    pub group: String,
    pub field: Field,
    pub verdict: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<[String; 2]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness_shape: Option<WitnessShape>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    pub kernel_dim: usize,
    pub search_dim: usize,
    pub elapsed: f64,
}

impl CommutationResult {
    pub fn report(&self, group: &str, alg: &GroupAlgebra) -> VerdictReport {
        let (witness, witness_shape, reason) = match &self.verdict {
            Verdict::Good => (None, None, None),
            Verdict::Bad(w) => (Some([alg.format(&w.x), alg.format(&w.y)]), Some(w.shape), None),
            Verdict::Unknown(why) => (None, None, Some(why.clone())),
        };
        VerdictReport {
            group: group.to_string(),
            field: alg.field(),
            verdict: self.verdict.tag(),
            witness,
            witness_shape,
            reason,
            kernel_dim: self.stats.kernel_dim,
            search_dim: self.stats.search_dim,
            elapsed: self.elapsed.as_secs_f64(),
        }
    }
}

/// W, the subspace U of W the scan quotients by, and a complement Q.
struct Setup {
    w: SubspaceBasis,
    ideal: SubspaceBasis,
    u: Vec<BitVec>,
    q: Vec<BitVec>,
}

fn setup(alg: &GroupAlgebra) -> Result<Setup, UnitLabError> {
    let w = square_zero_kernel(alg)?;
    let ideal = alg.augmentation_ideal(&alg.group().omega_subgroup());
    let u = commuting_square_zero(alg, ideal.intersect(&w).rows());
    let span_u = SubspaceBasis::spanned_by(alg.flat_dim(), u.iter().cloned());
    let q = span_u.complement_in(w.rows());
    Ok(Setup { w, ideal, u, q })
}

/// Decides whether all involutions of V(KG) commute. Good is returned only
/// after every square-zero element has been covered; Bad carries a pair
/// verified by [`naive_mul`]; Unknown means W/U was larger than `max_dim`.
pub fn all_involutions_commute(
    alg: &GroupAlgebra,
    config: ScanConfig,
) -> Result<CommutationResult, UnitLabError> {
    let start = Instant::now();
    let s = setup(alg)?;
    let visitor = |v: &BitVec, accepted: &[BitVec]| {
        match accepted
            .iter()
            .find(|b| alg.mul_bits(v, b) != alg.mul_bits(b, v))
        {
            Some(b) => Visit::Stop(Some(b.clone())),
            None => Visit::Accept,
        }
    };
    let outcome = scan(alg, s.w.dim(), &s.u, &s.q, config, visitor);
    let (verdict, stats) = match outcome {
        ScanOutcome::Completed(stats) => (Verdict::Good, stats),
        ScanOutcome::Stopped {
            element,
            partner,
            stats,
        } => {
            let one = alg.one();
            let lift = |v: BitVec| &one + &alg.from_bits(v).expect("same algebra");
            let x = lift(element);
            let y = lift(partner.expect("commutation failures carry a partner"));
            assert!(
                is_noncommuting_involution_pair(alg, &x, &y),
                "scan produced a witness that does not verify"
            );
            let pair = WitnessPair {
                x,
                y,
                shape: WitnessShape::Scan,
            };
            (Verdict::Bad(pair), stats)
        }
        ScanOutcome::TooLarge { search_dim, stats } => (
            Verdict::Unknown(format!(
                "search dimension {search_dim} exceeds max_dim {}",
                config.max_dim
            )),
            stats,
        ),
    };
    Ok(CommutationResult {
        verdict,
        stats,
        elapsed: start.elapsed(),
    })
}

/// Outcome of comparing Omega(V) with 1 + I(Omega(G)).
#[derive(Debug, Clone, Serialize)]
pub struct OmegaComparison {
    /// Both inclusions hold (only the first one when `partial`).
    pub holds: bool,
    /// 1 + I(Omega(G)) consists of involutions.
    pub ideal_in_omega: bool,
    /// Every involution lies in 1 + I(Omega(G)); `None` if not checked.
    pub omega_in_ideal: Option<bool>,
    /// The second inclusion was skipped because W/U exceeded max_dim.
    pub partial: bool,
    pub ideal_dim: usize,
    pub kernel_dim: usize,
    pub search_dim: usize,
    /// First failing element, as a literal.
    pub diagnostic: Option<String>,
}

/// Checks Omega(V) = 1 + I(Omega(G)).
///
/// First inclusion: a basis b_i of I(Omega(G)) with b_i^2 = 0 and
/// b_i b_j = b_j b_i makes every element of the span square to zero.
/// Second inclusion: every square-zero element of KG is in I(Omega(G)),
/// checked by the fiber scan.
pub fn omega_v_equals_ideal(alg: &GroupAlgebra, config: ScanConfig) -> Result<OmegaComparison, UnitLabError> {
    let s = setup(alg)?;
    let rows = s.ideal.rows();
    let element = |v: &BitVec| alg.format(&alg.from_bits(v.clone()).expect("same algebra"));
    let mut diagnostic = None;
    'check: for (i, b) in rows.iter().enumerate() {
        if !alg.mul_bits(b, b).is_zero() {
            diagnostic = Some(format!("({})^2 != 0 for an element of I(Omega(G))", element(b)));
            break;
        }
        for c in &rows[..i] {
            if alg.mul_bits(b, c) != alg.mul_bits(c, b) {
                diagnostic = Some(format!(
                    "({}) and ({}) in I(Omega(G)) do not commute",
                    element(b),
                    element(c)
                ));
                break 'check;
            }
        }
    }
    let ideal_in_omega = diagnostic.is_none();

    let outcome = scan(alg, s.w.dim(), &s.u, &s.q, config, |v, _| {
        if s.ideal.contains(v) {
            Visit::Accept
        } else {
            Visit::Stop(None)
        }
    });
    let (omega_in_ideal, search_dim) = match outcome {
        ScanOutcome::Completed(stats) => (Some(true), stats.search_dim),
        ScanOutcome::Stopped { element: v, stats, .. } => {
            if diagnostic.is_none() {
                diagnostic = Some(format!(
                    "({}) squares to zero but is not in I(Omega(G))",
                    element(&v)
                ));
            }
            (Some(false), stats.search_dim)
        }
        ScanOutcome::TooLarge { search_dim, .. } => (None, search_dim),
    };
    Ok(OmegaComparison {
        holds: ideal_in_omega && omega_in_ideal != Some(false),
        ideal_in_omega,
        omega_in_ideal,
        partial: omega_in_ideal.is_none(),
        ideal_dim: s.ideal.dim(),
        kernel_dim: s.w.dim(),
        search_dim,
        diagnostic,
    })
}
