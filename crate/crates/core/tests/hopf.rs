mod common;

use common::*;
use pentagon_core::error::Error;
use pentagon_core::group::Group;
use pentagon_core::hopf::*;
use pentagon_core::pentagon::check_pentagon;
use pentagon_core::tensor::{FieldSpec, LegMap, Matrix};

fn gf(p: u64) -> FieldSpec {
    FieldSpec::prime(p).unwrap()
}

fn corpus() -> Vec<(String, HopfAlgebra)> {
    let mut out = Vec::new();
    for n in 1..=6 {
        out.push((format!("c{n}"), group_algebra(&Group::cyclic(n), Q).unwrap()));
    }
    out.push(("s3".into(), group_algebra(&Group::symmetric3(), Q).unwrap()));
    out.push(("v4".into(), group_algebra(&Group::klein_four(), gf(3)).unwrap()));
    out.push((
        "dual-c2".into(),
        dual_group_algebra(&Group::cyclic(2), Q).unwrap(),
    ));
    out.push((
        "dual-c4".into(),
        dual_group_algebra(&Group::cyclic(4), Q).unwrap(),
    ));
    out.push((
        "dual-s3".into(),
        dual_group_algebra(&Group::symmetric3(), gf(5)).unwrap(),
    ));
    out.push(("sweedler".into(), sweedler(Q).unwrap()));
    for p in [3, 5, 7] {
        out.push((format!("sweedler-f{p}"), sweedler(gf(p)).unwrap()));
    }
    out
}

#[test]
fn builtin_algebras_satisfy_every_axiom() {
    for (name, h) in corpus() {
        let r = check_hopf_axioms(&h).unwrap();
        assert!(r.pass(), "{name}: {r}");
    }
}

#[test]
fn sweedler_needs_odd_characteristic() {
    assert!(matches!(sweedler(gf(2)), Err(Error::CharTwoUnsupported)));
}

#[test]
fn sweedler_antipode_has_order_four() {
    let h = sweedler(Q).unwrap();
    let s = h.antipode();
    let id = LegMap::identity(Q, &[h.space().clone()]);
    let s2 = s.compose(s).unwrap();
    assert_ne!(s2, id);
    assert_eq!(s2.compose(&s2).unwrap(), id);
}

/// `g ↦ diag(1, −1)`, `x ↦ E_01`: a faithful representation of the
/// Sweedler algebra, used as an oracle for the product.
#[test]
fn sweedler_product_matches_matrix_representation() {
    let h = sweedler(Q).unwrap();
    let g = Matrix::from_i64(Q, &[&[1, 0], &[0, -1]]);
    let x = Matrix::from_i64(Q, &[&[0, 1], &[0, 0]]);
    let reps = [Matrix::identity(Q, 2), g.clone(), x.clone(), g.mul(&x).unwrap()];
    let rep = |coords: Vec<pentagon_core::Scalar>| {
        coords
            .iter()
            .zip(&reps)
            .fold(Matrix::zeros(Q, 2, 2), |acc, (c, m)| {
                acc.add(&m.scale(c)).unwrap()
            })
    };
    for a in 0..4 {
        for b in 0..4 {
            let prod = rep(h.mu().matrix().col(a * 4 + b));
            assert_eq!(prod, reps[a].mul(&reps[b]).unwrap(), "{a}·{b}");
        }
    }
}

#[test]
fn corrupted_antipode_fails() {
    let h = group_algebra(&Group::cyclic(3), Q).unwrap();
    let bad = h
        .with_antipode(LegMap::identity(Q, &[h.space().clone()]))
        .unwrap();
    let r = check_hopf_axioms(&bad).unwrap();
    assert!(r.violation("left_antipode").is_some());
    assert!(r.violation("right_antipode").is_some());
    assert_eq!(r.violations.len(), 2);
}

/// `k^G` is the dual of `k[G]`: each structure map is the transpose of its
/// partner in the delta-function / group-element bases.
#[test]
fn dual_group_algebra_is_transpose() {
    for g in [Group::cyclic(4), Group::symmetric3(), Group::klein_four()] {
        let h = group_algebra(&g, Q).unwrap();
        let d = dual_group_algebra(&g, Q).unwrap();
        assert_eq!(d.mu().matrix(), &h.delta().matrix().transpose());
        assert_eq!(d.delta().matrix(), &h.mu().matrix().transpose());
        assert_eq!(d.unit().matrix(), &h.counit().matrix().transpose());
        assert_eq!(d.counit().matrix(), &h.unit().matrix().transpose());
        assert_eq!(d.antipode().matrix(), &h.antipode().matrix().transpose());
    }
}

#[test]
fn builtin_modules_are_hopf_modules() {
    for (name, h) in corpus() {
        for d in 1..=2 {
            let hm = multiplicity_module(&h, d).unwrap();
            assert!(check_hopf_module(&hm).unwrap().pass(), "{name} x{d}");
        }
        assert!(check_hopf_module(&trivial_module(&h).unwrap()).unwrap().pass());
    }
}

#[test]
fn trivial_coaction_is_not_h_linear() {
    let h = group_algebra(&Group::cyclic(2), Q).unwrap();
    let hm = trivial_module(&h).unwrap();
    let hs = h.space().clone();
    // m ↦ m ⊗ 1
    let co = LegMap::identity(Q, &[hs.clone()]).kron(h.unit()).unwrap();
    let r = check_hopf_module(&hm.with_coaction(co).unwrap()).unwrap();
    assert!(r.violation("h_linearity").is_some());
    assert!(r.violation("comodule_coassociativity").is_none());
}

#[test]
fn phi_of_group_algebra_matches_oracle() {
    for n in 1..=5 {
        let h = group_algebra(&Group::cyclic(n), Q).unwrap();
        let phi = phi_from_hopf_module(&trivial_module(&h).unwrap()).unwrap();
        assert_eq!(phi.phi().matrix(), &phi_cyclic(Q, n));
        assert_eq!(pentagon_residual(phi.phi().matrix(), n), 0);
    }
}

#[test]
fn pentagon_and_antipode_inverse_on_corpus() {
    for (name, h) in corpus() {
        for d in 1..=3 {
            let hm = multiplicity_module(&h, d).unwrap();
            let phi = phi_from_hopf_module(&hm).unwrap();
            assert!(check_pentagon(phi.phi()).unwrap().pass(), "{name} x{d}");
            let inv = phi_inverse_via_antipode(&hm).unwrap();
            assert_eq!(inv.matrix(), &phi.phi().matrix().inverse().unwrap());
        }
    }
}

#[test]
fn coinvariants_and_fundamental_iso() {
    for (name, h) in corpus() {
        for d in 1..=3 {
            let hm = multiplicity_module(&h, d).unwrap();
            assert_eq!(coinvariants(&hm).unwrap().dim(), d);
            let iso = fundamental_iso(&hm).unwrap();
            assert!(iso.report.pass(), "{name} x{d}: {}", iso.report);
            assert_eq!(iso.mh.dim() * h.dim(), hm.space().dim());
        }
    }
}

#[test]
fn factorization_through_theta() {
    for (name, h) in corpus().into_iter().filter(|(_, h)| h.dim() <= 4) {
        let hm = multiplicity_module(&h, 2).unwrap();
        let phi = phi_from_hopf_module(&hm).unwrap();
        let iso = fundamental_iso(&hm).unwrap();
        let r = check_factorization(phi.phi(), &h, &iso.theta).unwrap();
        assert!(r.pass(), "{name}: {r}");
    }
}

#[test]
fn fundamental_iso_needs_invertible_antipode_and_hopf_module() {
    let h = group_algebra(&Group::cyclic(2), Q).unwrap();
    let hs = h.space().clone();
    let co = LegMap::identity(Q, &[hs.clone()]).kron(h.unit()).unwrap();
    let bad = trivial_module(&h).unwrap().with_coaction(co).unwrap();
    assert!(matches!(fundamental_iso(&bad), Err(Error::CheckFailed(_))));
}
