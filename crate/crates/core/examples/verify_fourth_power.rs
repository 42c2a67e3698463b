//! Verifies the five S4 modules of g⊗4 for the algebras given on the
//! command line (default: sl2 sl3 g2).

use std::time::Instant;
use vogel_g4::udim::{Module, Provenance};
use vogel_g4::verify::{fmt_report_pretty, verify_module, Budget};
use vogel_g4::vparams::AlgebraId;

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let names = if args.is_empty() { vec!["sl2".into(), "sl3".into(), "g2".into()] } else { args };
    for name in names {
        let id: AlgebraId = name.parse().expect("algebra name");
        for m in Module::FOURTH {
            let t = Instant::now();
            let r = verify_module(&id, m, Provenance::Corrected, Budget::Stretch).expect("measurement");
            print!("{}", fmt_report_pretty(&r));
            println!("  [{:.1}s]", t.elapsed().as_secs_f64());
        }
    }
}
