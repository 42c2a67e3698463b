use vogel_g4::chevalley::LieAlgebra;
use vogel_g4::rational::{q, qi};
use vogel_g4::udim::{Base, Catalog, Module, Provenance};
use vogel_g4::verify::{erratum_scan, measure, stabilizer_symmetric, verify_module, Budget, Verdict, VerifyError};
use vogel_g4::vparams::AlgebraId;

fn id(s: &str) -> AlgebraId {
    s.parse().unwrap()
}

#[test]
fn sl3_antisymmetric_fourth_power() {
    let r = verify_module(&id("sl3"), Module::Asym4, Provenance::Corrected, Budget::Standard).unwrap();
    assert_eq!(r.verdict, Verdict::Pass);
    let y2 = r.row_with_label("Y2").unwrap();
    assert_eq!(y2.eigenvalue, q(-2, 3));
    // B' shares the eigenvalue at sl3; each carries a 27
    assert_eq!(y2.labels, vec!["B'".to_string(), "Y2".to_string()]);
    assert_eq!((y2.predicted.clone(), y2.measured), (qi(54), 54));
    let pt = vogel_g4::vparams::algebra_point(&id("sl3")).unwrap();
    let cat = Catalog::new(Provenance::Corrected);
    assert_eq!(cat.dim(&"Y2".parse().unwrap(), &pt).unwrap(), qi(27));
    assert_eq!(r.measured_total, 70);
    assert!(r.annihilator.as_ref().unwrap().passed);
}

#[test]
fn g2_hook_211_passes_with_line_fallback() {
    let r = verify_module(&id("g2"), Module::Hook211, Provenance::Corrected, Budget::Standard).unwrap();
    assert!(r.passed(), "{}", vogel_g4::verify::fmt_report_pretty(&r));
    assert_eq!(r.predicted_total, r.closed_form_total);
    assert_eq!(r.closed_form_total, qi(r.measured_total as i64));
}

#[test]
fn as_printed_fails_only_in_the_y2_family() {
    let r = verify_module(&id("sl3"), Module::Sym2, Provenance::AsPrinted, Budget::Standard).unwrap();
    assert_eq!(r.verdict, Verdict::Fail);
    let y2 = r.row_with_label("Y2").unwrap();
    assert_eq!((y2.predicted.clone(), y2.measured), (q(27, 2), 27));
    assert!(r.failing_rows().all(|row| row.labels.iter().all(|l| l.starts_with("Y2"))));
}

#[test]
fn scan_finds_only_y2() {
    let g = LieAlgebra::build(&id("sl3")).unwrap();
    let measured: Vec<_> =
        Module::ALL.iter().map(|&m| measure(&id("sl3"), &g, m, Budget::Standard).unwrap()).collect();
    let found = erratum_scan(&measured, Provenance::AsPrinted).unwrap();
    assert_eq!(found.len(), 1);
    assert_eq!(found[0].family, "Y2");
    assert!(found[0].corrected_matches);
    assert_eq!(found[0].printed_stabilizer_symmetric, Some(false));
    assert_eq!(found[0].corrected_stabilizer_symmetric, Some(true));
    assert!(erratum_scan(&measured, Provenance::Corrected).unwrap().is_empty());
    assert!(erratum_scan(&[], Provenance::AsPrinted).unwrap().is_empty());
}

#[test]
fn stabilizer_symmetry_of_corrected_orbit_bases() {
    let cat = Catalog::new(Provenance::Corrected);
    for b in [Base::Y2, Base::B, Base::C] {
        assert_eq!(stabilizer_symmetric(&cat, b), Some(true), "{b:?}");
    }
}

#[test]
fn budget_limits() {
    assert!(Budget::Standard.check(&id("so8"), Module::Sym4).is_ok());
    let err = Budget::Standard.check(&id("so9"), Module::Sym4).unwrap_err();
    assert!(matches!(err, VerifyError::Budget(_)));
    assert!(err.to_string().contains("--budget stretch"));
    assert!(Budget::Stretch.check(&id("f4"), Module::Sym4).is_ok());
    assert!(Budget::Stretch.check(&id("e6"), Module::Sym2).is_err());
    assert!(Budget::Standard.check(&id("so9"), Module::Asym3).is_ok());
}
