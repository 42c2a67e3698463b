//! Builds Chevalley bases, runs the structural checks and shows the
//! weights of the basis of g2.

use vogel_g4::chevalley::LieAlgebra;
use vogel_g4::rational::fmt_q;
use vogel_g4::vparams::AlgebraId;

fn main() {
    for name in ["sl2", "sl4", "so7", "sp6", "so8", "g2", "f4"] {
        let id: AlgebraId = name.parse().unwrap();
        let g = LieAlgebra::build(&id).unwrap();
        let c = g.validate().expect("structure checks");
        println!("{name:>4}: dim {:>3} rank {}  Casimir on g = {}", g.dim(), g.rank(), fmt_q(&c));
    }

    let g = LieAlgebra::build(&"g2".parse().unwrap()).unwrap();
    println!("\ng2 basis:");
    for (a, l) in g.labels().iter().enumerate() {
        println!("  {l:<10} weight {:?}  Weyl orbit {}", g.weight(a), g.weyl_orbit_size(g.weight(a)));
    }
}
