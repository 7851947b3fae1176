use modalg::algebra::{Field, GroupAlgebra};
use modalg::classifier::{theorem_classify, Classification, Family};
use modalg::group::{isomorphism_test, FiniteGroup, GroupTableFile};
use modalg::presentation::parse_presentation;
use modalg::unit_lab::{all_involutions_commute, ScanConfig, Verdict};

#[test]
fn presentation_to_verdict() {
    let p = parse_presentation("gens: a, b; rels: a^8 = b^4 = 1, a^b = a^5").unwrap();
    let g = FiniteGroup::from_presentation(&p).unwrap();
    assert_eq!(g.order(), 32);
    assert_eq!(
        theorem_classify(&g).unwrap(),
        Classification::GoodByTheorem {
            member: Family::Metacyclic { n: 3, m: 2 }
        }
    );
    for field in [Field::Gf2, Field::Gf4] {
        let r = all_involutions_commute(&GroupAlgebra::new(&g, field), ScanConfig::default()).unwrap();
        assert_eq!(r.verdict, Verdict::Good);
    }
}

#[test]
fn table_file_round_trip_preserves_verdict() {
    let p = parse_presentation("gens: a, b; rels: a^8, b^2, a^b = a^3").unwrap();
    let g = FiniteGroup::from_presentation(&p).unwrap();
    let path = std::env::temp_dir().join(format!("modalg-sd16-{}.json", std::process::id()));
    GroupTableFile::write(&g, &path).unwrap();
    let back = GroupTableFile::read(&path).unwrap();
    std::fs::remove_file(&path).unwrap();
    assert!(isomorphism_test(&g, &back).is_some());
    assert_eq!(theorem_classify(&back).unwrap(), Classification::BadByTheorem);
    let alg = GroupAlgebra::new(&back, Field::Gf2);
    let r = all_involutions_commute(&alg, ScanConfig::default()).unwrap();
    assert_eq!(r.verdict.tag(), "bad");
}
