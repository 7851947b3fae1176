use std::time::Instant;

use serde::Serialize;

use super::{builtin_catalog, theorem_classify, CatalogEntry, Classification, ClassifierError};
use crate::algebra::{Field, GroupAlgebra};
use crate::group::{structural_report, FiniteGroup, StructuralReport, Subgroup};
use crate::presentation::Builtin;
use crate::unit_lab::{
    all_involutions_commute, enumerate_involutions, is_noncommuting_involution_pair,
    lemma4_oracle, lemma5_oracle, omega_v_equals_ideal, quaternion_pair, verify_witness_pair,
    witness_search, ScanConfig, Verdict, VerdictReport, WitnessShape, KNOWN_WITNESSES,
};

#[derive(Debug, Clone)]
pub struct VerificationConfig {
    pub scan: ScanConfig,
    pub fields: Vec<Field>,
    /// GF(4) verdicts are computed for catalog groups up to this order.
    pub gf4_max_order: usize,
}

impl Default for VerificationConfig {
    fn default() -> Self {
        VerificationConfig {
            scan: ScanConfig::default(),
            fields: vec![Field::Gf2, Field::Gf4],
            gf4_max_order: 16,
        }
    }
}

/// Computed verdict for one catalog group over one field.
#[derive(Debug, Clone, Serialize)]
pub struct FieldVerdict {
    /// `scan` or `witness` (the scan was out of range and a constructed
    /// pair settled the question).
    pub method: &'static str,
    #[serde(flatten)]
    pub verdict: VerdictReport,
    /// The theorem's tag and the computed tag coincide; Unknown never agrees.
    pub agreement: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct EntryReport {
    pub name: String,
    pub order: usize,
    pub structure: StructuralReport,
    pub classification: Classification,
    pub expected: Classification,
    pub matches_expected: bool,
    pub verdicts: Vec<FieldVerdict>,
    pub classify_seconds: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckReport {
    pub name: String,
    pub passed: bool,
    pub detail: String,
    pub seconds: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub entries: Vec<EntryReport>,
    pub checks: Vec<CheckReport>,
    /// 0 full agreement, 1 a disagreement or failed check, 2 Unknown present.
    pub exit_status: i32,
}

/// Computed verdict: the exhaustive scan, falling back to a constructed
/// witness when the scan is out of range.
pub fn computed_verdict(alg: &GroupAlgebra, scan: ScanConfig) -> Result<(Verdict, VerdictReport, &'static str), ClassifierError> {
    let r = all_involutions_commute(alg, scan)?;
    let name = "";
    if let Verdict::Unknown(_) = r.verdict {
        if let Some(w) = witness_search(alg) {
            let mut report = r.report(name, alg);
            report.verdict = "bad";
            report.witness = Some([alg.format(&w.x), alg.format(&w.y)]);
            report.witness_shape = Some(w.shape);
            report.reason = None;
            return Ok((Verdict::Bad(w), report, "witness"));
        }
    }
    let report = r.report(name, alg);
    Ok((r.verdict, report, "scan"))
}

fn agrees(c: Classification, v: &Verdict) -> bool {
    match v {
        Verdict::Good => c.is_good(),
        Verdict::Bad(_) => !c.is_good(),
        Verdict::Unknown(_) => false,
    }
}

pub fn verify_entry(entry: &CatalogEntry, config: &VerificationConfig) -> Result<EntryReport, ClassifierError> {
    let g = entry.build()?;
    let start = Instant::now();
    let classification = theorem_classify(&g)?;
    let classify_seconds = start.elapsed().as_secs_f64();
    let mut verdicts = Vec::new();
    for &field in &config.fields {
        if field == Field::Gf4 && g.order() > config.gf4_max_order {
            continue;
        }
        let alg = GroupAlgebra::new(&g, field);
        let (verdict, mut report, method) = computed_verdict(&alg, config.scan)?;
        report.group = entry.name.to_string();
        verdicts.push(FieldVerdict {
            method,
            agreement: agrees(classification, &verdict),
            verdict: report,
        });
    }
    Ok(EntryReport {
        name: entry.name.to_string(),
        order: g.order(),
        structure: structural_report(&g),
        classification,
        expected: entry.expected,
        matches_expected: classification == entry.expected,
        verdicts,
        classify_seconds,
    })
}

fn build(b: Builtin) -> Result<FiniteGroup, ClassifierError> {
    Ok(FiniteGroup::from_presentation(&b.presentation()?)?)
}

fn timed(name: &str, f: impl FnOnce() -> Result<(bool, String), ClassifierError>) -> CheckReport {
    let start = Instant::now();
    let (passed, detail) = f().unwrap_or_else(|e| (false, format!("error: {e}")));
    CheckReport {
        name: name.to_string(),
        passed,
        detail,
        seconds: start.elapsed().as_secs_f64(),
    }
}

/// Groups whose Omega(V) should be exactly 1 + I(Omega(G)).
pub const OMEGA_IDEAL_GROUPS: [&str; 8] = ["Q8", "S22", "S23", "S32", "Q8xC2", "Q8xC4", "TheoremIII2", "H32"];

/// Abelian groups for the square-zero check, as cyclic factor orders.
pub const SQUARE_ZERO_ABELIAN: [&[u32]; 6] = [&[4], &[8], &[2, 4], &[2, 8], &[4, 4], &[16]];

/// Catalog groups expected to have Phi = Omega, central, of order 4.
pub const PHI_EQUALS_OMEGA_GROUPS: [&str; 8] =
    ["C4xC4", "C4sdC4", "TheoremIII2", "Q8xC4", "Q8xQ8", "S22oQ8", "H245", "H32"];

pub fn abelian_group(factors: &[u32]) -> Result<FiniteGroup, ClassifierError> {
    let mut acc = build(Builtin::Cyclic(factors[0]))?;
    for &f in &factors[1..] {
        acc = crate::group::direct_product(&acc, &build(Builtin::Cyclic(f))?)?;
    }
    Ok(acc)
}

pub fn phi_equals_omega_central_of_order_4(g: &FiniteGroup) -> bool {
    let r = structural_report(g);
    r.frattini_equals_omega && r.omega_central && r.omega_order == 4
}

/// dim L(KG) = |G| - #classes and dim I(N) = |G| - [G:N] for the standard
/// normal subgroups of `g`.
pub fn dimension_identities_hold(g: &FiniteGroup) -> bool {
    let alg = GroupAlgebra::new(g, Field::Gf2);
    let normals: [Subgroup; 6] = [
        g.trivial_subgroup(),
        g.center(),
        g.commutator_subgroup(),
        g.omega_subgroup(),
        g.frattini_subgroup(),
        g.whole(),
    ];
    alg.commutator_subspace().dim() == g.order() - g.class_count()
        && normals.iter().all(|n| {
            g.is_normal(n) && alg.augmentation_ideal(n).dim() == g.order() - g.order() / n.order()
        })
}

/// Runs the catalog and every check. Entries are sorted by name.
pub fn run_paper_verification(config: &VerificationConfig) -> Result<VerificationReport, ClassifierError> {
    let catalog = builtin_catalog();
    let mut entries = Vec::new();
    for entry in &catalog {
        entries.push(verify_entry(entry, config)?);
    }
    entries.sort_by(|a, b| a.name.cmp(&b.name));

    let mut checks = Vec::new();
    checks.push(timed("known witness pairs", || {
        let mut details = Vec::new();
        let mut ok = true;
        for known in KNOWN_WITNESSES {
            let g = build(known.host)?;
            let alg = GroupAlgebra::new(&g, Field::Gf2);
            let good = verify_witness_pair(&alg, known.x, known.y)?;
            ok &= good;
            details.push(format!("{}: {}", known.host, if good { "verified" } else { "FAILED" }));
        }
        Ok((ok, details.join("; ")))
    }));
    checks.push(timed("generalized quaternion pair", || {
        let g = build(Builtin::GenQuaternion(4))?;
        let alg = GroupAlgebra::new(&g, Field::Gf2);
        let (c, b) = (g.generators()[0], g.generators()[1]);
        let ok = g.element_order(c) == 8 && {
            let (x, y) = quaternion_pair(&alg, c, b);
            is_noncommuting_involution_pair(&alg, &x, &y)
        };
        let found = witness_search(&alg).map(|w| w.shape);
        Ok((ok && found == Some(WitnessShape::OrderEight), format!("search shape {found:?}")))
    }));
    checks.push(timed("Omega(V) = 1 + I(Omega(G))", || {
        let mut ok = true;
        let mut details = Vec::new();
        for name in OMEGA_IDEAL_GROUPS {
            let entry = super::catalog_entry(name).expect("catalog name");
            let g = entry.build()?;
            let r = omega_v_equals_ideal(&GroupAlgebra::new(&g, Field::Gf2), config.scan)?;
            ok &= r.holds && !r.partial;
            details.push(format!("{name}: {}", if r.holds && !r.partial { "yes" } else { "no" }));
        }
        let q8 = build(Builtin::Q8)?;
        let count = enumerate_involutions(&GroupAlgebra::new(&q8, Field::Gf2), config.scan.max_dim)?.count();
        ok &= count == 15;
        details.push(format!("Q8 involutions: {count}"));
        Ok((ok, details.join("; ")))
    }));
    checks.push(timed("abelian square-zero elements = I(Omega(G))", || {
        let mut ok = true;
        for factors in SQUARE_ZERO_ABELIAN {
            ok &= lemma4_oracle(&abelian_group(factors)?, Field::Gf2)?;
        }
        Ok((ok, format!("{} groups", SQUARE_ZERO_ABELIAN.len())))
    }));
    checks.push(timed("cyclic square condition", || {
        let mut ok = true;
        for n in 2..=4 {
            ok &= lemma5_oracle(n)?;
        }
        Ok((ok, "n = 2, 3, 4".to_string()))
    }));
    if config.fields.contains(&Field::Gf2) && config.fields.contains(&Field::Gf4) {
        checks.push(timed("field independence", || {
            let mismatched: Vec<&str> = entries
                .iter()
                .filter(|e| e.verdicts.len() == 2 && e.verdicts[0].verdict.verdict != e.verdicts[1].verdict.verdict)
                .map(|e| e.name.as_str())
                .collect();
            Ok((mismatched.is_empty(), format!("mismatches: {mismatched:?}")))
        }));
    }
    checks.push(timed("Phi = Omega, central, order 4", || {
        let mut failed = Vec::new();
        for name in PHI_EQUALS_OMEGA_GROUPS {
            let g = super::catalog_entry(name).expect("catalog name").build()?;
            if !phi_equals_omega_central_of_order_4(&g) {
                failed.push(name);
            }
        }
        Ok((failed.is_empty(), format!("failed: {failed:?}")))
    }));
    checks.push(timed("exponent-4 order bound", || {
        let bounded = entries
            .iter()
            .filter(|e| {
                let s = &e.structure;
                s.exponent == 4 && s.frattini_equals_omega && s.omega_central && s.omega_order == 4
            })
            .all(|e| e.order <= 64);
        Ok((bounded, "|G| <= 64".to_string()))
    }));
    checks.push(timed("dimension identities", || {
        let mut failed = Vec::new();
        for e in &catalog {
            if !dimension_identities_hold(&e.build()?) {
                failed.push(e.name);
            }
        }
        Ok((failed.is_empty(), format!("failed: {failed:?}")))
    }));
    checks.push(timed("construction orders", || {
        let mut failed = Vec::new();
        let mut builtins = vec![Builtin::H32, Builtin::H245, Builtin::S22oQ8];
        builtins.extend([(2, 2), (2, 3), (3, 2), (3, 3), (2, 4)].map(|(n, m)| Builtin::S(n, m)));
        builtins.extend((2..=4).map(Builtin::TheoremIII));
        for b in builtins {
            let g = build(b)?;
            if g.order() != b.expected_order() || (g.order() <= 256 && !g.is_associative()) {
                failed.push(b.to_string());
            }
        }
        Ok((failed.is_empty(), format!("failed: {failed:?}")))
    }));

    let disagreement = entries
        .iter()
        .any(|e| !e.matches_expected || e.verdicts.iter().any(|v| v.verdict.verdict != "unknown" && !v.agreement))
        || checks.iter().any(|c| !c.passed);
    let unknown = entries
        .iter()
        .any(|e| e.verdicts.iter().any(|v| v.verdict.verdict == "unknown"));
    let exit_status = if disagreement {
        1
    } else if unknown {
        2
    } else {
        0
    };
    Ok(VerificationReport {
        entries,
        checks,
        exit_status,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classifier::catalog_entry;

    #[test]
    fn small_entry_agrees() {
        let config = VerificationConfig::default();
        for name in ["Q8", "D8", "C4sdC4"] {
            let r = verify_entry(&catalog_entry(name).unwrap(), &config).unwrap();
            assert!(r.matches_expected, "{name}");
            assert_eq!(r.verdicts.len(), 2);
            assert!(r.verdicts.iter().all(|v| v.agreement), "{name}");
        }
    }

    #[test]
    fn unknown_never_agrees() {
        let config = VerificationConfig {
            scan: ScanConfig::with_max_dim(0),
            fields: vec![Field::Gf2],
            gf4_max_order: 16,
        };
        let r = verify_entry(&catalog_entry("Q8").unwrap(), &config).unwrap();
        assert_eq!(r.verdicts[0].verdict.verdict, "unknown");
        assert!(!r.verdicts[0].agreement);
        // A bad group is still settled by a constructed witness.
        let r = verify_entry(&catalog_entry("D8").unwrap(), &config).unwrap();
        assert_eq!(r.verdicts[0].method, "witness");
        assert!(r.verdicts[0].agreement);
    }

    #[test]
    fn structure_helpers() {
        for name in PHI_EQUALS_OMEGA_GROUPS {
            let g = catalog_entry(name).unwrap().build().unwrap();
            assert!(phi_equals_omega_central_of_order_4(&g), "{name}");
        }
        let g = catalog_entry("TheoremIII3").unwrap().build().unwrap();
        assert!(!phi_equals_omega_central_of_order_4(&g));
        assert!(dimension_identities_hold(&catalog_entry("H32").unwrap().build().unwrap()));
    }
}
