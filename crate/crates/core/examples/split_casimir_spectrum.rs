//! Trace moments of the split Casimir on an S_n module and the spectrum
//! recovered from them.
//!
//!     cargo run --release --example split_casimir_spectrum -- so5 31

use vogel_g4::chevalley::LieAlgebra;
use vogel_g4::rational::fmt_q;
use vogel_g4::splitcas::Measurement;
use vogel_g4::udim::{Catalog, Module, Provenance};
use vogel_g4::verify::{candidates, predict};
use vogel_g4::vparams::AlgebraId;

fn main() {
    let mut args = std::env::args().skip(1);
    let id: AlgebraId = args.next().unwrap_or_else(|| "sl3".into()).parse().expect("algebra");
    let module: Module = args.next().unwrap_or_else(|| "sym2".into()).parse().expect("module");

    let g = LieAlgebra::build(&id).unwrap();
    let m = Measurement::new(&g, module).unwrap();
    println!("{id} {module}: {} weight blocks, multiplicity space of dim {}", m.blocks.blocks.len(), m.blocks.total());

    let tau = m.moments(6);
    for (k, t) in tau.iter().enumerate() {
        println!("  tr C^{k} = {}", fmt_q(t));
    }

    let cands = candidates(&predict(&Catalog::new(Provenance::Corrected), &id, module).unwrap());
    let s = m.spectrum(&cands).unwrap();
    for e in &s.entries {
        println!("  eigenvalue {:>6}  dim {:>6}  {}", fmt_q(&e.eigenvalue), e.dim, e.labels.join(" + "));
    }
    let a = m.annihilator_check(&s, 20, 1);
    println!("  product of (C - λ) kills {} random vectors: {}", a.vectors, a.passed);
}
