//! Measures every module at sl3 and sl4 and looks for catalog formulas
//! that disagree with the measurements.

use vogel_g4::chevalley::LieAlgebra;
use vogel_g4::udim::{Module, Provenance};
use vogel_g4::verify::{erratum_scan, measure, Budget};
use vogel_g4::vparams::AlgebraId;

fn main() {
    let mut measured = Vec::new();
    for name in ["sl3", "sl4"] {
        let id: AlgebraId = name.parse().unwrap();
        let g = LieAlgebra::build(&id).unwrap();
        for m in Module::ALL {
            measured.push(measure(&id, &g, m, Budget::Standard).unwrap());
        }
    }
    for prov in [Provenance::AsPrinted, Provenance::Corrected] {
        let found = erratum_scan(&measured, prov).unwrap();
        println!("{prov}: {} finding(s)", found.len());
        for f in found {
            println!("  {}: {}", f.family, f.status);
            for e in &f.evidence {
                println!("    {} {} {:?}: predicted {} measured {}", e.algebra, e.module, e.labels, e.predicted, e.measured);
            }
        }
    }
}
