mod common;

use common::*;
use pentagon_core::error::Error;
use pentagon_core::galois::*;
use pentagon_core::group::Group;
use pentagon_core::hopf::{group_algebra, sweedler};
use pentagon_core::pentagon::{check_mpe, check_pentagon, extract_phi};
use pentagon_core::tensor::{FieldSpec, LegMap, Matrix};

fn groups() -> Vec<Group> {
    vec![
        Group::cyclic(1),
        Group::cyclic(2),
        Group::cyclic(3),
        Group::cyclic(4),
        Group::klein_four(),
    ]
}

#[test]
fn regular_module_coalgebras_are_galois() {
    for g in groups() {
        let h = group_algebra(&g, Q).unwrap();
        let mc = ModuleCoalgebra::regular(&h).unwrap();
        assert!(check_module_coalgebra(&mc).unwrap().pass());
        assert!(galois_check(&mc).unwrap().pass());
    }
    let sw = ModuleCoalgebra::regular(&sweedler(Q).unwrap()).unwrap();
    assert!(check_module_coalgebra(&sw).unwrap().pass());
    let s = galois_mpe(&sw).unwrap();
    assert!(s.is_verified());
}

#[test]
fn torsor_solutions() {
    for n in 2..=4 {
        let mc = GroupSet::torsor(Group::cyclic(n)).coalgebra(Q).unwrap();
        let s = galois_mpe(&mc).unwrap();
        assert_eq!(s.v().dim(), n);
        assert!(check_mpe(s.f(), s.phi()).unwrap().pass());
        assert_eq!(mpe_residual(s.f().matrix(), s.phi().matrix(), n, n), 0);
        let phi = extract_phi(s.f()).unwrap();
        assert!(check_pentagon(&phi).unwrap().pass());
    }
}

/// `F_L(x⊗g) = x⊗x·g` written out directly.
#[test]
fn torsor_galois_map_matches_oracle() {
    let g = Group::cyclic(3);
    let x = GroupSet::torsor(g.clone());
    let fl = x.coalgebra(Q).unwrap().galois_map().unwrap();
    let expected = perm_matrix(
        Q,
        &(0..9)
            .map(|k| (k / 3) * 3 + g.mul(k / 3, k % 3))
            .collect::<Vec<_>>(),
    );
    assert_eq!(fl.matrix(), &expected);
}

#[test]
fn two_point_trivial_action_is_not_galois() {
    let mc = GroupSet::trivial(Group::cyclic(2), 2).coalgebra(Q).unwrap();
    assert!(check_module_coalgebra(&mc).unwrap().pass());
    assert!(matches!(
        galois_mpe(&mc),
        Err(Error::NotGalois { rank: 2, needed: 4 })
    ));
    assert_eq!(galois_check(&mc).unwrap().violation("F_L_invertible"), Some(2));
}

#[test]
fn galois_iff_free_and_transitive() {
    let mut galois_seen = 0;
    for g in groups() {
        for n in 1..=4 {
            let sets = all_group_sets(&g, n);
            assert!(!sets.is_empty());
            for s in sets {
                let mc = s.coalgebra(FieldSpec::prime(5).unwrap()).unwrap();
                assert!(check_module_coalgebra(&mc).unwrap().pass());
                let galois = galois_check(&mc).unwrap().pass();
                assert_eq!(
                    galois,
                    s.is_free() && s.is_transitive(),
                    "|G|={} n={n}",
                    g.order()
                );
                galois_seen += usize::from(galois);
            }
        }
    }
    // at least the regular action of each group
    assert!(galois_seen >= 5);
}

#[test]
fn group_set_counts() {
    // actions of ℤ/2 on 3 points: identity plus the 3 transpositions
    assert_eq!(all_group_sets(&Group::cyclic(2), 3).len(), 4);
    // actions of the trivial group: exactly one
    assert_eq!(all_group_sets(&Group::cyclic(1), 4).len(), 1);
    // free transitive ℤ/3-sets on 3 points: the two 3-cycles
    let torsors = all_group_sets(&Group::cyclic(3), 3)
        .into_iter()
        .filter(|s| s.is_free() && s.is_transitive())
        .count();
    assert_eq!(torsors, 2);
}

#[test]
fn bad_action_is_rejected() {
    let g = Group::cyclic(2);
    assert!(matches!(
        GroupSet::new(g.clone(), vec![vec![1, 0], vec![1, 0]]),
        Err(Error::NotAnAction(_))
    ));
    assert!(matches!(
        GroupSet::new(g, vec![vec![0, 2]]),
        Err(Error::NotAnAction(_))
    ));
}

/// `ν(x⊗y) = g` with `x·g = y`.
fn torsor_nu(mc: &ModuleCoalgebra, g: &Group) -> LegMap {
    let n = g.order();
    let l = mc.space().clone();
    let h = mc.hopf().space().clone();
    let m = Matrix::from_fn(Q, n, n * n, |r, c| {
        let (x, y) = (c / n, c % n);
        Q.from_i64((g.mul(x, r) == y) as i64)
    });
    LegMap::new(vec![l.clone(), l], vec![h], m).unwrap()
}

#[test]
fn nu_inverts_fv() {
    for g in [Group::cyclic(3), Group::klein_four()] {
        let mc = GroupSet::torsor(g.clone()).coalgebra(Q).unwrap();
        let pd = PairedComoduleData::galois(&mc, Some(torsor_nu(&mc, &g))).unwrap();
        let r = check_paired_data(&pd).unwrap();
        assert!(r.pass(), "{r}");
        let s = build_fv(&pd).unwrap();
        assert_eq!(s.f(), &mc.galois_map().unwrap());
        let inv = pd.fv_inverse_via_nu().unwrap().unwrap();
        assert_eq!(inv.matrix(), &s.f().matrix().inverse().unwrap());
    }
}

#[test]
fn wrong_nu_is_caught() {
    let g = Group::cyclic(3);
    let mc = GroupSet::torsor(g.clone()).coalgebra(Q).unwrap();
    let nu = torsor_nu(&mc, &g);
    let l = mc.space().clone();
    let swapped = nu.compose(&LegMap::flip(Q, &l, &l)).unwrap();
    let pd = PairedComoduleData::galois(&mc, Some(swapped)).unwrap();
    let r = check_paired_data(&pd).unwrap();
    assert!(r.violation("nu_after_pi").is_some());
    assert!(matches!(build_fv(&pd), Err(Error::CheckFailed(_))));
}

#[test]
fn regular_paired_data_with_antipode_nu() {
    let h = sweedler(Q).unwrap();
    let mc = ModuleCoalgebra::regular(&h).unwrap();
    let hs = h.space().clone();
    let nu = h
        .mu()
        .compose(&h.antipode().kron(&LegMap::identity(Q, &[hs])).unwrap())
        .unwrap();
    let pd = PairedComoduleData::galois(&mc, Some(nu)).unwrap();
    assert!(check_paired_data(&pd).unwrap().pass());
    assert!(build_fv(&pd).unwrap().is_verified());
}
