//! Dimensions of a few labels at named algebras, at a raw point, and as
//! rational functions of N along the classical lines.

use vogel_g4::rational::{fmt_q, qi};
use vogel_g4::udim::{casimir_eigenvalue, Catalog, Label, Provenance};
use vogel_g4::vparams::{algebra_point, normalize, AlgebraId, Family, FamilyLine};

fn main() {
    let cat = Catalog::new(Provenance::Corrected);
    let labels: Vec<Label> = ["g", "X2", "Y2", "Y2'", "B", "C", "X4"].iter().map(|s| s.parse().unwrap()).collect();

    for name in ["sl3", "so8", "sp6", "g2", "e8"] {
        let id: AlgebraId = name.parse().unwrap();
        let pt = algebra_point(&id).unwrap();
        let (line, n) = id.line();
        print!("{name:>4} {pt}:");
        for l in &labels {
            match cat.dim_with_fallback(l, &pt, Some((&line, &n))) {
                Ok((v, via_line)) => print!("  {l}={}{}", fmt_q(&v), if via_line { "*" } else { "" }),
                Err(e) => print!("  {l}=({e})"),
            }
        }
        println!();
    }
    println!("(* evaluated through the family line)\n");

    let pt = normalize([qi(-2), qi(3), qi(7)]).unwrap();
    println!("at {pt}:");
    for l in &labels {
        let d = cat.dim(l, &pt).map(|v| fmt_q(&v)).unwrap_or_else(|e| e.to_string());
        println!("  {:<4} dim {d:<16} split-Casimir eigenvalue on g⊗4 {}", l.to_string(), fmt_q(&casimir_eigenvalue(l, &pt, 4)));
    }
    println!();

    for fam in [Family::Sl, Family::So, Family::Sp] {
        let line = FamilyLine::new(fam);
        println!("{fam} line:");
        for l in &labels[..4] {
            println!("  dim {l} = {}", cat.dim_line_function(l, &line).unwrap());
        }
    }
}
