use vogel_g4::rational::{fmt_q, q};
use vogel_g4::udim::{check_sum_identity, exceptional, Catalog, Module, Provenance};
use vogel_g4::vparams::{normalize, Exceptional, Family, FamilyLine};

#[test]
fn sums_hold_at_generic_points() {
    let cat = Catalog::new(Provenance::Corrected);
    let pts = [[q(3, 7), q(-2, 11), q(5, 13)], [q(1, 3), q(2, 5), q(-7, 9)], [q(-4, 17), q(9, 19), q(3, 23)]];
    for p in pts {
        let pt = normalize(p).unwrap();
        for m in Module::ALL {
            let r = check_sum_identity(&cat, m, &pt).unwrap();
            assert!(r.holds, "{m} at {pt}: lhs {} rhs {}", fmt_q(&r.lhs), fmt_q(&r.rhs));
        }
    }
}

#[test]
fn exceptional_relations_and_reductions() {
    let cat = Catalog::new(Provenance::Corrected);
    for e in Exceptional::ALL {
        for c in exceptional::check_relations(&cat, e).unwrap() {
            assert!(c.holds, "{} {:?} at {}: {}", e.name(), c.relation.terms, e.name(), fmt_q(&c.value));
        }
    }
    for m in Module::FOURTH {
        assert_eq!(exceptional::reduction_matches(m, Provenance::Corrected), Some(true), "{m}");
    }
}

#[test]
fn every_label_defined_on_lines() {
    let cat = Catalog::new(Provenance::Corrected);
    for fam in [Family::Sl, Family::So, Family::Sp, Family::Exceptional] {
        let line = FamilyLine::new(fam);
        for m in Module::ALL {
            for (l, _) in module_table(m).entries {
                if let Err(e) = cat.dim_line_function(&l, &line) {
                    println!("{fam} {l}: {e}");
                }
            }
        }
    }
}

fn module_table(m: Module) -> vogel_g4::udim::DecompositionTable {
    vogel_g4::udim::module_table(m, Provenance::Corrected)
}

