use vogel_g4::chevalley::{classical, LieAlgebra};
use vogel_g4::rational::qi;
use vogel_g4::vparams::AlgebraId;

fn alg(s: &str) -> AlgebraId {
    s.parse().unwrap()
}

#[test]
fn every_type_satisfies_the_invariants() {
    for s in ["sl2", "sl3", "sl4", "sl5", "so5", "so7", "so8", "so9", "sp4", "sp6", "sp8", "g2", "f4"] {
        let a = alg(s);
        let g = LieAlgebra::build(&a).unwrap();
        assert_eq!(g.dim() as u64, a.classical_dim(), "{s}");
        assert_eq!(g.validate().unwrap(), qi(1), "{s}");
    }
}

#[test]
fn e_series_builds_with_unit_casimir() {
    for s in ["e6", "e7", "e8"] {
        let a = alg(s);
        let g = LieAlgebra::build(&a).unwrap();
        assert_eq!(g.dim() as u64, a.classical_dim());
        g.check_jacobi().unwrap();
        assert_eq!(g.quadratic_casimir_check().unwrap(), qi(1), "{s}");
    }
}

#[test]
fn g2_has_twelve_roots() {
    let g = LieAlgebra::build(&alg("g2")).unwrap();
    assert_eq!((g.dim(), g.rank(), g.roots.roots.len()), (14, 2, 12));
}

#[test]
fn matrix_realizations_agree() {
    for (s, c) in [("sl2", 4), ("sl3", 6), ("sl4", 8), ("so5", 3), ("so7", 5), ("so8", 6), ("sp4", 6), ("sp6", 8)] {
        let a = alg(s);
        let g = LieAlgebra::build(&a).unwrap();
        let cmp = classical::compare(&a, &g).unwrap();
        assert!(cmp.same_dimension && cmp.same_signature, "{s}");
        assert_eq!(cmp.proportionality, qi(c), "{s}");
    }
}
