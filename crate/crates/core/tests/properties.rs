mod common;

use common::*;
use pentagon_core::group::Group;
use pentagon_core::hopf::{group_algebra, multiplicity_module, phi_from_hopf_module, sweedler};
use pentagon_core::pentagon::*;
use pentagon_core::phi_module::{check_phi_morphism, module_from_hopf, tensor_phi_modules};
use pentagon_core::reconstruction::{counit_certificate, reconstruct_hopf};
use pentagon_core::tensor::{eval_poly, random_invertible, FieldSpec, LegMap, Space};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn f5() -> FieldSpec {
    FieldSpec::prime(5).unwrap()
}

fn base(which: usize, field: FieldSpec) -> PentagonSolution {
    let h = match which {
        0 => group_algebra(&Group::cyclic(2), field).unwrap(),
        1 => group_algebra(&Group::cyclic(3), field).unwrap(),
        _ => sweedler(field).unwrap(),
    };
    phi_from_hopf_module(&multiplicity_module(&h, 1).unwrap()).unwrap()
}

fn conjugate(phi: &PentagonSolution, seed: u64) -> PentagonSolution {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let m = phi.m().clone();
    let n = Space::new("N", m.dim()).unwrap();
    let g = LegMap::new(
        vec![m.clone()],
        vec![n],
        random_invertible(phi.field(), m.dim(), &mut rng),
    )
    .unwrap();
    transport_phi(phi, &g).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn pentagon_count_matches_dense_oracle(seed in any::<u64>(), p in prop::sample::select(vec![2u64, 3, 5])) {
        let f = FieldSpec::prime(p).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let m = sp("M", 2);
        let x = LegMap::new(vec![m.clone(), m.clone()], vec![m.clone(), m], random_invertible(f, 4, &mut rng)).unwrap();
        let r = check_pentagon(&x).unwrap();
        prop_assert_eq!(r.violation("pentagon").unwrap_or(0), pentagon_residual(x.matrix(), 2));
    }

    #[test]
    fn mpe_count_matches_dense_oracle(seed in any::<u64>()) {
        let f = FieldSpec::prime(3).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let phi = base(0, f);
        let v = sp("V", 2);
        let fm = LegMap::new(vec![v.clone(), phi.m().clone()], vec![v.clone(), v], random_invertible(f, 4, &mut rng)).unwrap();
        let r = check_mpe(&fm, phi.phi()).unwrap();
        prop_assert_eq!(
            r.violation("modified_pentagon").unwrap_or(0),
            mpe_residual(fm.matrix(), phi.phi().matrix(), 2, 2)
        );
    }

    #[test]
    fn conjugation_preserves_solutions_and_dims(seed in any::<u64>(), which in 0usize..3) {
        let phi = base(which, f5());
        let moved = conjugate(&phi, seed);
        prop_assert!(moved.is_verified());
        let (a, b) = (reconstruct_hopf(&phi).unwrap(), reconstruct_hopf(&moved).unwrap());
        prop_assert!(b.pass());
        prop_assert_eq!(a.dim_h(), b.dim_h());
        prop_assert_eq!(a.dim_coinvariants(), b.dim_coinvariants());
    }

    #[test]
    fn counit_polynomial_after_conjugation(seed in any::<u64>(), which in 0usize..3) {
        let moved = conjugate(&base(which, f5()), seed);
        let f = counit_certificate(&moved).unwrap();
        prop_assert!(f[0].is_zero());
        prop_assert!(eval_poly(&f, moved.phi().matrix()).unwrap().is_identity());
    }

    #[test]
    fn transported_pairs_stay_solutions(seed in any::<u64>(), which in 0usize..2) {
        let phi = base(which, f5());
        let s = MpeSolution::diagonal(&phi).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n = s.v().dim();
        let f = LegMap::new(vec![s.v().clone()], vec![sp("W", n)], random_invertible(f5(), n, &mut rng)).unwrap();
        let g = LegMap::new(vec![s.m().clone()], vec![sp("N", n)], random_invertible(f5(), n, &mut rng)).unwrap();
        let t = transport(&s, &f, &g).unwrap();
        prop_assert!(t.is_verified());
        prop_assert!(check_equivalence(&s, &t, &f, &g).unwrap().pass());
        prop_assert!(flip_solution(&t).unwrap().is_verified());
        prop_assert!(extract_phi(t.f()).is_ok());
    }

    /// Multiples of H-linear maps between Hopf-derived modules are morphisms,
    /// and so are their composites.
    #[test]
    fn morphisms_compose(a in 0i64..5, b in 0i64..5, c in 0i64..5) {
        let h = group_algebra(&Group::cyclic(2), f5()).unwrap();
        let hm = multiplicity_module(&h, 1).unwrap();
        let reg = module_from_hopf(&hm, h.mu()).unwrap();
        let hs = h.space().clone();
        // a·I + b·R_g commutes with left multiplication
        let r = LegMap::new(vec![hs.clone()], vec![hs.clone()], perm_matrix(f5(), &[1, 0])).unwrap();
        let x = LegMap::identity(f5(), &[hs.clone()]).scale(&f5().from_i64(a)).add(&r.scale(&f5().from_i64(b))).unwrap();
        let y = r.scale(&f5().from_i64(c));
        prop_assert!(check_phi_morphism(&reg, &reg, &x).unwrap().pass());
        prop_assert!(check_phi_morphism(&reg, &reg, &y).unwrap().pass());
        prop_assert!(check_phi_morphism(&reg, &reg, &y.compose(&x).unwrap()).unwrap().pass());
        let rr = tensor_phi_modules(&reg, &reg).unwrap();
        prop_assert!(rr.is_verified());
    }
}
