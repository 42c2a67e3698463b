use num_traits::{One, Zero};
use proptest::prelude::*;
use vogel_g4::rational::{q, qi, Q};
use vogel_g4::udim::catalog::x3_split;
use vogel_g4::udim::{casimir_eigenvalue, check_sum_identity, eig4, Base, Catalog, Label, Module, Provenance};
use vogel_g4::vparams::{apply_permutation, family_point, normalize, Family, FamilyLine, PermutationS3, VogelPoint};

fn rat() -> impl Strategy<Value = Q> {
    (-60i64..=60, 1i64..=17).prop_map(|(n, d)| q(n, d))
}

fn point() -> impl Strategy<Value = VogelPoint> {
    (rat(), rat(), rat()).prop_filter_map("coordinate sum vanishes", |(a, b, c)| normalize([a, b, c]).ok())
}

fn label() -> impl Strategy<Value = Label> {
    let all: Vec<Label> = Base::ALL.into_iter().flat_map(Label::orbit).collect();
    proptest::sample::select(all)
}

fn perm() -> impl Strategy<Value = PermutationS3> {
    proptest::sample::select(PermutationS3::all().to_vec())
}

fn cat() -> Catalog {
    Catalog::new(Provenance::Corrected)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn primed_copies_are_permuted_formulas(l in label(), pt in point()) {
        let c = cat();
        let base = Label::plain(l.base);
        let moved = apply_permutation(&l.prime.point_action(), &pt);
        if let (Ok(a), Ok(b)) = (c.dim(&l, &pt), c.dim(&base, &moved)) {
            prop_assert_eq!(a, b);
        }
        prop_assert_eq!(eig4(&l).eval(&pt), eig4(&base).eval(&moved));
    }

    #[test]
    fn orbit_dimensions_are_permuted_by_point_symmetries(l in label(), p in perm(), pt in point()) {
        let c = cat();
        let moved = apply_permutation(&p, &pt);
        let dims = |x: &VogelPoint| -> Option<Vec<Q>> {
            let mut v: Vec<Q> = Label::orbit(l.base).iter().map(|m| c.dim(m, x).ok()).collect::<Option<_>>()?;
            v.sort();
            Some(v)
        };
        if let (Some(a), Some(b)) = (dims(&pt), dims(&moved)) {
            prop_assert_eq!(a, b);
        }
    }

    #[test]
    fn adjoint_dimension_is_symmetric(p in perm(), pt in point()) {
        let g: Label = "g".parse().unwrap();
        let c = cat();
        if let (Ok(a), Ok(b)) = (c.dim(&g, &pt), c.dim(&g, &apply_permutation(&p, &pt))) {
            prop_assert_eq!(a, b);
        }
    }

    #[test]
    fn module_sums_match_closed_forms(pt in point()) {
        let c = cat();
        for m in Module::ALL {
            if let Ok(r) = check_sum_identity(&c, m, &pt) {
                prop_assert!(r.holds, "{} at {}: {}", m, pt, r.discrepancy);
            }
        }
    }

    #[test]
    fn x2_and_x3_are_polynomials_in_d(pt in point()) {
        let c = cat();
        let at = |s: &str| c.dim(&s.parse().unwrap(), &pt);
        if let (Ok(d), Ok(x2), Ok(x3)) = (at("g"), at("X2"), at("X3")) {
            prop_assert_eq!(x2, &d * (&d - qi(3)) / qi(2));
            prop_assert_eq!(x3, &d * (&d - qi(1)) * (&d - qi(8)) / qi(6));
        }
    }

    #[test]
    fn split_eigenvalues_shift_by_one_per_factor(l in label(), pt in point()) {
        for n in 2..=3 {
            prop_assert_eq!(casimir_eigenvalue(&l, &pt, n + 1) - casimir_eigenvalue(&l, &pt, n), -Q::one() / qi(2));
        }
        prop_assert_eq!(casimir_eigenvalue(&l, &pt, 4) - casimir_eigenvalue(&l, &pt, 2), -Q::one());
    }

    #[test]
    fn x3_splits_on_classical_lines(n in 5i64..200) {
        let c = cat();
        let x3: Label = "X3".parse().unwrap();
        for fam in [Family::Sl, Family::So] {
            let (hat, tilde) = x3_split(fam).unwrap();
            let nq = qi(n);
            let v = c.dim_on_line(&x3, &FamilyLine::new(fam), &nq).unwrap();
            prop_assert_eq!(hat.eval(&nq) + tilde.eval(&nq), v);
        }
    }

    #[test]
    fn diff_vanishes_on_family_points(n in 5i64..300) {
        let c = cat();
        for fam in [Family::Sl, Family::So, Family::Sp] {
            if let Ok(pt) = family_point(fam, n) {
                if let Ok(v) = vogel_g4::udim::diff(&c, &pt) {
                    prop_assert!(v.is_zero(), "{:?} N = {}", fam, n);
                }
            }
        }
    }

    #[test]
    fn normalization_ignores_scale(a in rat(), b in rat(), c in rat(), k in rat()) {
        prop_assume!(!k.is_zero());
        if let Ok(p) = normalize([a.clone(), b.clone(), c.clone()]) {
            prop_assert_eq!(normalize([&a * &k, &b * &k, &c * &k]).unwrap(), p);
        }
    }
}
