//! Cross-checks the moment-based spectrum against the exact characteristic
//! polynomial of the split Casimir on the full isotypic image.

use std::time::Instant;
use vogel_g4::chevalley::LieAlgebra;
use vogel_g4::rational::fmt_q;
use vogel_g4::splitcas::{oracle, Measurement, SplitCasimirOperator};
use vogel_g4::udim::{Catalog, Module, Provenance};
use vogel_g4::verify::{candidates, predict};
use vogel_g4::vparams::AlgebraId;

fn main() {
    let name = std::env::args().nth(1).unwrap_or_else(|| "sl2".into());
    let id: AlgebraId = name.parse().expect("algebra");
    let g = LieAlgebra::build(&id).unwrap();
    let cat = Catalog::new(Provenance::Corrected);
    for m in Module::ALL {
        let t = Instant::now();
        let c = candidates(&predict(&cat, &id, m).unwrap());
        let op = SplitCasimirOperator::new(&g, m.degree()).unwrap();
        let dense = oracle::dense_spectrum(&op, m, &c).unwrap();
        let s = Measurement::new(&g, m).unwrap().spectrum(&c).unwrap();
        let agree = dense.iter().all(|(e, k)| s.dim_at(e) == *k);
        let text: Vec<String> = dense.iter().filter(|(_, k)| *k > 0).map(|(e, k)| format!("{}:{k}", fmt_q(e))).collect();
        println!("{id} {m:>9}: {}  {}  [{:.2}s]", text.join(" "), if agree { "agree" } else { "DIFFER" }, t.elapsed().as_secs_f64());
    }
}
