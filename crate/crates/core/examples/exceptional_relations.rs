//! Checks the vanishing relations at the exceptional points and prints
//! the reduced decompositions of the g⊗4 modules.

use vogel_g4::rational::fmt_q;
use vogel_g4::udim::exceptional::{expected_reduced, reduction_matches};
use vogel_g4::udim::{exceptional_relations, Catalog, Module, Provenance};
use vogel_g4::vparams::Exceptional;

fn main() {
    let cat = Catalog::new(Provenance::Corrected);
    for e in Exceptional::ALL {
        let rs = exceptional_relations(&cat, &e.table_point()).unwrap();
        let bad: Vec<_> = rs.iter().filter(|r| !r.holds).collect();
        println!("{:>3}: {} relations, {} failing", e.name(), rs.len(), bad.len());
        for r in bad {
            println!("     {} {:?} = {}", r.relation.group, r.relation.terms, fmt_q(&r.value));
        }
    }
    for m in Module::FOURTH {
        let list = expected_reduced(m, Provenance::Corrected).unwrap();
        let text: Vec<String> = list.iter().map(|(l, k)| if *k == 1 { l.to_string() } else { format!("{k}·{l}") }).collect();
        println!("{m:>9} = {}   [{}]", text.join(" + "), match reduction_matches(m, Provenance::Corrected) {
            Some(true) => "reduction agrees",
            _ => "reduction differs",
        });
    }
}
