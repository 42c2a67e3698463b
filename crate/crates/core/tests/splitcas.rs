use num_traits::Zero;
use vogel_g4::chevalley::LieAlgebra;
use vogel_g4::rational::{q, qi, Q};
use vogel_g4::splitcas::{checks, oracle, trace_moments, Candidate, Measurement, SplitCasimirOperator};
use vogel_g4::udim::Module;
use vogel_g4::verify::{candidates, predict};
use vogel_g4::udim::{Catalog, Provenance};
use vogel_g4::vparams::AlgebraId;

fn alg(name: &str) -> (AlgebraId, LieAlgebra) {
    let id: AlgebraId = name.parse().unwrap();
    (id, LieAlgebra::build(&id).unwrap())
}

fn cands(id: &AlgebraId, module: Module) -> Vec<Candidate> {
    candidates(&predict(&Catalog::new(Provenance::Corrected), id, module).unwrap())
}

#[test]
fn a1_highest_weight_and_invariant_vectors() {
    let (_, g) = alg("sl2");
    let op = SplitCasimirOperator::new(&g, 2).unwrap();
    let e = g.index_of("e(1)").unwrap();
    let mut v = vec![Q::zero(); 9];
    v[op.encode(&[e, e])] = qi(1);
    let cv = op.apply_casimir(&v).unwrap();
    assert_eq!(cv, v.iter().map(|x| x * q(1, 2)).collect::<Vec<_>>());

    // g^ab x_a ⊗ x_b
    let mut inv = vec![Q::zero(); 9];
    for (a, row) in g.killing_inverse().iter().enumerate() {
        for (b, c) in row {
            inv[op.encode(&[a, *b])] += c;
        }
    }
    let ci = op.apply_casimir(&inv).unwrap();
    assert_eq!(ci, inv.iter().map(|x| -x).collect::<Vec<_>>());
    assert!(op.apply_casimir(&vec![Q::zero(); 4]).is_err());
}

#[test]
fn a1_moments() {
    let (_, g) = alg("sl2");
    assert_eq!(trace_moments(&g, Module::Sym2, 1).unwrap(), vec![qi(6), q(3, 2)]);
    assert!(trace_moments(&g, Module::Asym4, 5).unwrap().iter().all(|t| t.is_zero()));
    // full g⊗2: Sym² + ∧² is traceless
    let s = &trace_moments(&g, Module::Sym2, 1).unwrap()[1] + &trace_moments(&g, Module::Asym2, 1).unwrap()[1];
    assert!(s.is_zero());
}

#[test]
fn a1_sym2_spectrum_and_annihilator() {
    let (id, g) = alg("sl2");
    let m = Measurement::new(&g, Module::Sym2).unwrap();
    let s = m.spectrum(&cands(&id, Module::Sym2)).unwrap();
    let got: Vec<(Q, u64)> = s.entries.iter().map(|e| (e.eigenvalue.clone(), e.dim)).collect();
    assert_eq!(got, vec![(qi(-1), 1), (q(1, 2), 5)]);
    assert!(m.annihilator_check(&s, 20, 1).passed);
}

#[test]
fn sl3_asym2_spectrum() {
    let (id, g) = alg("sl3");
    let s = Measurement::new(&g, Module::Asym2).unwrap().spectrum(&cands(&id, Module::Asym2)).unwrap();
    let got: Vec<(Q, u64)> = s.entries.iter().map(|e| (e.eigenvalue.clone(), e.dim)).collect();
    // n = 2 values; the n = 4 labels of the same spaces are −3/2 and −1
    assert_eq!(got, vec![(q(-1, 2), 8), (qi(0), 20)]);
}

#[test]
fn so5_asym2_spectrum() {
    let (id, g) = alg("so5");
    let s = Measurement::new(&g, Module::Asym2).unwrap().spectrum(&cands(&id, Module::Asym2)).unwrap();
    let dims: Vec<u64> = s.entries.iter().map(|e| e.dim).collect();
    assert_eq!(dims, vec![10, 35]);
}

#[test]
fn g2_asym4_total() {
    let (id, g) = alg("g2");
    let s = Measurement::new(&g, Module::Asym4).unwrap().spectrum(&cands(&id, Module::Asym4)).unwrap();
    assert_eq!(s.total(), 1001);
}

#[test]
fn incomplete_candidates_are_reported() {
    let (id, g) = alg("sl3");
    let mut c = cands(&id, Module::Sym2);
    c.retain(|x| x.eigenvalue != q(1, 3));
    let err = Measurement::new(&g, Module::Sym2).unwrap().spectrum(&c).unwrap_err();
    assert!(err.to_string().contains("incomplete"), "{err}");
}

#[test]
fn module_totals_add_up_to_the_tensor_power() {
    for name in ["sl2", "sl3", "g2"] {
        let (_, g) = alg(name);
        let d = g.dim() as u64;
        let total: u64 = Module::FOURTH
            .iter()
            .map(|&m| {
                let mb = Measurement::new(&g, m).unwrap().blocks;
                let r = vogel_g4::splitcas::symmetric::irrep_dim(m.partition()) as u64;
                r * mb.total()
            })
            .sum();
        assert_eq!(total, d.pow(4), "{name}");
    }
}

#[test]
fn operator_and_projector_checks() {
    for (name, n) in [("sl2", 4), ("sl3", 3), ("g2", 2), ("so5", 4)] {
        let (_, g) = alg(name);
        let op = SplitCasimirOperator::new(&g, n).unwrap();
        checks::check_projectors(&op, 5, 7).unwrap();
        checks::check_permutation_commutation(&op, 3, 8).unwrap();
        checks::check_diagonal_commutation(&op, 5, 9).unwrap();
    }
}

#[test]
fn dense_oracle_matches_on_sl2_fourth_power() {
    let (id, g) = alg("sl2");
    let op = SplitCasimirOperator::new(&g, 4).unwrap();
    for m in Module::FOURTH {
        let c = cands(&id, m);
        let dense = oracle::dense_spectrum(&op, m, &c).unwrap();
        let s = Measurement::new(&g, m).unwrap().spectrum(&c).unwrap();
        for (e, k) in dense {
            assert_eq!(s.dim_at(&e), k, "{m} at {e}");
        }
    }
}
