//! Prints the decomposition table of one module at one algebra with the
//! row dimensions, their sum and the closed-form total.
//!
//!     cargo run --example decomposition_table -- so7 22

use vogel_g4::rational::{fmt_q, qi};
use vogel_g4::udim::tables::eval_total;
use vogel_g4::udim::{casimir_eigenvalue, module_table, Catalog, Module, Provenance};
use vogel_g4::vparams::{algebra_point, AlgebraId};

fn main() {
    let mut args = std::env::args().skip(1);
    let id: AlgebraId = args.next().unwrap_or_else(|| "sl4".into()).parse().expect("algebra");
    let module: Module = args.next().unwrap_or_else(|| "4".into()).parse().expect("module");

    let cat = Catalog::new(Provenance::Corrected);
    let pt = algebra_point(&id).unwrap();
    let (line, n) = id.line();
    let table = module_table(module, Provenance::Corrected);
    let mut sum = qi(0);
    println!("{module} at {id} {pt}");
    for (l, mult) in &table.entries {
        let (v, via_line) = cat.dim_with_fallback(l, &pt, Some((&line, &n))).unwrap();
        let ev = casimir_eigenvalue(l, &pt, module.degree() as u32);
        println!("  {mult}×{:<6} eig {:>7}  dim {:>8}{}", l.to_string(), fmt_q(&ev), fmt_q(&v), if via_line { " (line)" } else { "" });
        sum += v * qi(*mult as i64);
    }
    let d = qi(id.classical_dim() as i64);
    println!("sum {}   closed form {}", fmt_q(&sum), fmt_q(&eval_total(module, &d)));
}
