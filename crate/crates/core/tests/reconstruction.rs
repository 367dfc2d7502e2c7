mod common;

use common::*;
use pentagon_core::galois::{galois_mpe, GroupSet};
use pentagon_core::group::Group;
use pentagon_core::hopf::*;
use pentagon_core::pentagon::*;
use pentagon_core::reconstruction::*;
use pentagon_core::tensor::{eval_poly, random_invertible, FieldSpec, LegMap, Matrix, Space};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn solution(h: &HopfAlgebra, d: usize) -> PentagonSolution {
    phi_from_hopf_module(&multiplicity_module(h, d).unwrap()).unwrap()
}

fn c2() -> HopfAlgebra {
    group_algebra(&Group::cyclic(2), Q).unwrap()
}

fn id_solution(n: usize) -> PentagonSolution {
    let m = sp("M", n);
    PentagonSolution::verified(LegMap::identity(Q, &[m.clone(), m])).unwrap()
}

fn mat(rows: &[&[i64]]) -> Matrix {
    Matrix::from_i64(Q, rows)
}

#[test]
fn images_of_identity() {
    let lr = lambda_rho_images(&id_solution(3)).unwrap();
    assert_eq!(lr.h_basis.len(), 1);
    assert_eq!(lr.h_basis[0].matrix(), &Matrix::identity(Q, 3));
    assert_eq!(lr.r_basis[0].matrix(), &Matrix::identity(Q, 3));
    assert_eq!(lr.pairing, mat(&[&[1]]));
    assert!(lr.report.pass());
}

#[test]
fn images_of_phi_c2() {
    let phi = PentagonSolution::verified(phi_c2()).unwrap();
    let lr = lambda_rho_images(&phi).unwrap();
    assert!(lr.report.pass());
    // span{I, L_a} and span{E_ee, E_aa}, in RREF
    let h: Vec<_> = lr.h_basis.iter().map(|x| x.matrix().clone()).collect();
    assert_eq!(h, vec![mat(&[&[1, 0], &[0, 1]]), mat(&[&[0, 1], &[1, 0]])]);
    let r: Vec<_> = lr.r_basis.iter().map(|x| x.matrix().clone()).collect();
    assert_eq!(r, vec![mat(&[&[1, 0], &[0, 0]]), mat(&[&[0, 0], &[0, 1]])]);
    assert!(lr.pairing.is_invertible());
}

#[test]
fn multiplicity_does_not_grow_h() {
    let phi = multiplicity(&PentagonSolution::verified(phi_c2()).unwrap(), 2).unwrap();
    let lr = lambda_rho_images(&phi).unwrap();
    assert_eq!(lr.h_basis.len(), 2);
    assert_eq!(lr.r_basis.len(), 2);
}

#[test]
fn reconstructs_k_z2_from_phi_c2() {
    let rec = reconstruct_hopf(&PentagonSolution::verified(phi_c2()).unwrap()).unwrap();
    assert!(rec.pass());
    let h = &rec.hopf;
    // basis (I, L_a): Δ(L_a) = L_a⊗L_a, ε(L_a) = 1, S(L_a) = L_a
    assert_eq!(
        h.delta().matrix().col(1),
        [0, 0, 0, 1].map(|x| Q.from_i64(x)).to_vec()
    );
    assert_eq!(h.counit().matrix(), &mat(&[&[1, 1]]));
    assert_eq!(h.antipode().matrix(), &Matrix::identity(Q, 2));
    assert_eq!(
        h.mu().matrix(),
        group_algebra(&Group::cyclic(2), Q).unwrap().mu().matrix()
    );
    assert_eq!(rec.dim_coinvariants(), 1);
    assert_eq!(rec.coinvariants.basis(), &[vec![Q.one(), Q.zero()]]);
}

#[test]
fn identity_reconstructs_the_ground_field() {
    let rec = reconstruct_hopf(&id_solution(5)).unwrap();
    assert!(rec.pass());
    assert_eq!(rec.dim_h(), 1);
    assert_eq!(rec.dim_coinvariants(), 5);
    assert!(roundtrip(&id_solution(5)).unwrap().pass());
}

#[test]
fn sweedler_reconstruction_keeps_antipode_order_four() {
    let rec = reconstruct_hopf(&solution(&sweedler(Q).unwrap(), 1)).unwrap();
    assert!(rec.pass(), "{:?}", rec.certificates);
    assert_eq!(rec.dim_h(), 4);
    let s = rec.hopf.antipode();
    let s2 = s.compose(s).unwrap();
    let id = LegMap::identity(Q, &[rec.hopf.space().clone()]);
    assert_ne!(s2, id);
    assert_eq!(s2.compose(&s2).unwrap(), id);
}

#[test]
fn coinvariants_phi_examples() {
    assert_eq!(coinvariants_phi(&id_solution(3)).unwrap().dim(), 3);
    let c2 = PentagonSolution::verified(phi_c2()).unwrap();
    assert_eq!(coinvariants_phi(&c2).unwrap().dim(), 1);
    assert_eq!(coinvariants_phi(&multiplicity(&c2, 3).unwrap()).unwrap().dim(), 3);
}

fn corpus() -> Vec<(String, HopfAlgebra)> {
    let gf = |p| FieldSpec::prime(p).unwrap();
    vec![
        ("c1".into(), group_algebra(&Group::cyclic(1), Q).unwrap()),
        ("c2".into(), c2()),
        ("c3".into(), group_algebra(&Group::cyclic(3), gf(7)).unwrap()),
        ("c4".into(), group_algebra(&Group::cyclic(4), Q).unwrap()),
        ("s3".into(), group_algebra(&Group::symmetric3(), Q).unwrap()),
        (
            "dual-c2".into(),
            dual_group_algebra(&Group::cyclic(2), Q).unwrap(),
        ),
        (
            "dual-c4".into(),
            dual_group_algebra(&Group::cyclic(4), gf(5)).unwrap(),
        ),
        ("sweedler".into(), sweedler(Q).unwrap()),
        ("sweedler-f3".into(), sweedler(gf(3)).unwrap()),
    ]
}

#[test]
fn roundtrip_on_corpus() {
    for (name, h) in corpus() {
        for d in 1..=3 {
            if h.dim() * d > 12 {
                continue;
            }
            let phi = solution(&h, d);
            let r = roundtrip(&phi).unwrap();
            assert!(r.pass(), "{name} x{d}: {r}");
            let rec = reconstruct_hopf(&phi).unwrap();
            assert_eq!((rec.dim_h(), rec.dim_coinvariants()), (h.dim(), d), "{name} x{d}");
            assert_eq!(rec.h_basis().len(), rec.r_basis().len());
        }
    }
}

#[test]
fn sweedler_times_two_roundtrip_dims() {
    let phi = solution(&sweedler(Q).unwrap(), 2);
    assert_eq!(phi.m().dim(), 8);
    let rec = reconstruct_hopf(&phi).unwrap();
    assert_eq!((rec.dim_h(), rec.dim_coinvariants()), (4, 2));
    assert!(roundtrip(&phi).unwrap().pass());
}

fn conjugation_round(h: &HopfAlgebra, d: usize, seed: u64) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let phi = solution(h, d);
    let m = phi.m().clone();
    let m2 = Space::new("N", m.dim()).unwrap();
    let g = LegMap::new(
        vec![m.clone()],
        vec![m2],
        random_invertible(phi.field(), m.dim(), &mut rng),
    )
    .unwrap();
    let moved = transport_phi(&phi, &g).unwrap();
    let r = roundtrip(&moved).unwrap();
    assert!(r.pass(), "{r}");
    let rec = reconstruct_hopf(&moved).unwrap();
    assert_eq!((rec.dim_h(), rec.dim_coinvariants()), (h.dim(), d));
}

#[test]
fn reconstruction_dims_survive_conjugation() {
    let f7 = FieldSpec::prime(7).unwrap();
    let algebras = [
        group_algebra(&Group::cyclic(2), f7).unwrap(),
        group_algebra(&Group::cyclic(3), f7).unwrap(),
        dual_group_algebra(&Group::cyclic(4), f7).unwrap(),
        sweedler(f7).unwrap(),
    ];
    for (i, h) in algebras.iter().enumerate() {
        for d in 1..=2 {
            conjugation_round(h, d, (10 * i + d) as u64);
        }
    }
    // dense rational entries grow quickly, so keep the rational case small
    conjugation_round(&c2(), 1, 3);
    conjugation_round(&group_algebra(&Group::cyclic(3), Q).unwrap(), 1, 4);
}

#[test]
fn counit_certificate_examples() {
    assert_eq!(
        counit_certificate(&id_solution(2)).unwrap(),
        vec![Q.zero(), Q.one()]
    );
    let c2 = PentagonSolution::verified(phi_c2()).unwrap();
    assert_eq!(
        counit_certificate(&c2).unwrap(),
        vec![Q.zero(), Q.zero(), Q.one()]
    );
    for (name, h) in corpus() {
        let phi = solution(&h, 2);
        let f = counit_certificate(&phi).unwrap();
        assert!(f[0].is_zero(), "{name}");
        assert!(eval_poly(&f, phi.phi().matrix()).unwrap().is_identity(), "{name}");
    }
}

#[test]
fn unverified_input_is_refused() {
    let m = sp("M", 2);
    let t = PentagonSolution::new(flip_map(Q, &m)).unwrap();
    assert!(!t.is_verified());
    assert!(lambda_rho_images(&t).is_err());
    assert!(reconstruct_hopf(&t).is_err());
    assert!(counit_certificate(&t).is_err());
}

fn mpe_corpus() -> Vec<(String, MpeSolution)> {
    let c2 = PentagonSolution::verified(phi_c2()).unwrap();
    let pair = MpeSolution::diagonal(&c2).unwrap();
    let m = sp("M", 2);
    let t_pair = MpeSolution::verified(flip_map(Q, &m), LegMap::identity(Q, &[m.clone(), m])).unwrap();
    let u = sp("U", 1);
    let unit = MpeSolution::verified(
        LegMap::identity(Q, &[u.clone(), u.clone()]),
        LegMap::identity(Q, &[u.clone(), u]),
    )
    .unwrap();
    let sw = solution(&sweedler(Q).unwrap(), 1);
    vec![
        ("c2".into(), pair.clone()),
        ("unit".into(), unit),
        ("flip-id".into(), t_pair.clone()),
        ("flip-c2".into(), flip_solution(&pair).unwrap()),
        ("op-c2".into(), op_solution(&c2).unwrap()),
        ("op-sweedler".into(), op_solution(&sw).unwrap()),
        ("sweedler".into(), MpeSolution::diagonal(&sw).unwrap()),
        ("tensor".into(), tensor_solutions(&pair, &t_pair).unwrap()),
        (
            "mult".into(),
            MpeSolution::diagonal(&multiplicity(&c2, 2).unwrap()).unwrap(),
        ),
        (
            "torsor-c3".into(),
            galois_mpe(&GroupSet::torsor(Group::cyclic(3)).coalgebra(Q).unwrap()).unwrap(),
        ),
    ]
}

#[test]
fn mpe_reconstruction_certificates() {
    for (name, s) in mpe_corpus() {
        let r = mpe_reconstruct(&s).unwrap();
        for c in &r.certificates {
            assert!(c.pass(), "{name}: {c}");
        }
        assert_eq!(r.certificates.len(), 6);
    }
}

#[test]
fn mpe_reconstruction_dims() {
    let c2 = PentagonSolution::verified(phi_c2()).unwrap();
    let r = mpe_reconstruct(&MpeSolution::diagonal(&c2).unwrap()).unwrap();
    assert_eq!(r.lf_basis.len(), 2);
    let all = mpe_corpus();
    let unit = &all.iter().find(|(n, _)| n == "unit").unwrap().1;
    let r = mpe_reconstruct(unit).unwrap();
    assert_eq!((r.lf_basis.len(), r.rf_basis.len()), (1, 1));
    let torsor = &all.iter().find(|(n, _)| n == "torsor-c3").unwrap().1;
    assert_eq!(torsor.v().dim(), 3);
}
