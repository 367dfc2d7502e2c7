use crate::error::{Error, Result};
use crate::group::Group;
use crate::hopf::{HopfAlgebra, HopfModule};
use crate::tensor::{FieldSpec, LegMap, Scalar, Space};

fn h_space(dim: usize) -> Result<Space> {
    Space::new("H", dim)
}

/// `k[G]` with group-like basis `e_g`.
pub fn group_algebra(g: &Group, field: FieldSpec) -> Result<HopfAlgebra> {
    let h = h_space(g.order())?;
    let (one, hh, k) = (vec![h.clone()], vec![h.clone(), h.clone()], Vec::<Space>::new());
    let c1 = field.one();
    let mu = LegMap::from_basis_action(field, &hh, &one, |i| [(vec![g.mul(i[0], i[1])], c1.clone())]);
    let unit = LegMap::from_basis_action(field, &k, &one, |_| [(vec![g.identity()], c1.clone())]);
    let delta = LegMap::from_basis_action(field, &one, &hh, |i| [(vec![i[0], i[0]], c1.clone())]);
    let counit = LegMap::from_basis_action(field, &one, &k, |_| [(vec![], c1.clone())]);
    let antipode = LegMap::from_basis_action(field, &one, &one, |i| [(vec![g.inv(i[0])], c1.clone())]);
    HopfAlgebra::new(mu, unit, delta, counit, antipode)
}

/// `k^G`, the dual of `k[G]`, with idempotent basis `δ_g`.
pub fn dual_group_algebra(g: &Group, field: FieldSpec) -> Result<HopfAlgebra> {
    let n = g.order();
    let h = h_space(n)?;
    let (one, hh, k) = (vec![h.clone()], vec![h.clone(), h.clone()], Vec::<Space>::new());
    let c1 = field.one();
    let mu = LegMap::from_basis_action(field, &hh, &one, |i| {
        (i[0] == i[1]).then(|| (vec![i[0]], c1.clone()))
    });
    let unit = LegMap::from_basis_action(field, &k, &one, |_| (0..n).map(|a| (vec![a], c1.clone())));
    let delta = LegMap::from_basis_action(field, &one, &hh, |i| {
        let target = i[0];
        (0..n)
            .map(|a| (vec![a, g.mul(g.inv(a), target)], c1.clone()))
            .collect::<Vec<_>>()
    });
    let counit = LegMap::from_basis_action(field, &one, &k, |i| {
        (i[0] == g.identity()).then(|| (vec![], c1.clone()))
    });
    let antipode = LegMap::from_basis_action(field, &one, &one, |i| [(vec![g.inv(i[0])], c1.clone())]);
    HopfAlgebra::new(mu, unit, delta, counit, antipode)
}

/// Sweedler's four-dimensional algebra on the basis `1, g, x, gx` with
/// `g² = 1`, `x² = 0`, `xg = −gx`, `Δg = g⊗g`, `Δx = x⊗1 + g⊗x`,
/// `S(g) = g`, `S(x) = −gx`.
pub fn sweedler(field: FieldSpec) -> Result<HopfAlgebra> {
    if field.characteristic() == 2 {
        return Err(Error::CharTwoUnsupported);
    }
    let h = h_space(4)?;
    let (one, hh, k) = (vec![h.clone()], vec![h.clone(), h.clone()], Vec::<Space>::new());
    // Index 2b + a stands for g^a x^b.
    let parts = |i: usize| (i % 2, i / 2);
    let index = |a: usize, b: usize| 2 * b + a;
    let sign = |neg: bool| field.from_i64(if neg { -1 } else { 1 });
    let mu = LegMap::from_basis_action(field, &hh, &one, |i| {
        let ((a, b), (c, d)) = (parts(i[0]), parts(i[1]));
        (b + d < 2).then(|| (vec![index((a + c) % 2, b + d)], sign(b * c == 1)))
    });
    let unit = LegMap::from_basis_action(field, &k, &one, |_| [(vec![0], field.one())]);
    let delta = LegMap::from_basis_action(field, &one, &hh, |i| {
        let (a, b) = parts(i[0]);
        if b == 0 {
            vec![(vec![i[0], i[0]], field.one())]
        } else {
            // Δ(g^a x) = g^a x ⊗ g^a + g^(a+1) ⊗ g^a x
            vec![
                (vec![index(a, 1), index(a, 0)], field.one()),
                (vec![index((a + 1) % 2, 0), index(a, 1)], field.one()),
            ]
        }
    });
    let counit = LegMap::from_basis_action(field, &one, &k, |i| {
        (parts(i[0]).1 == 0).then(|| (vec![], field.one()))
    });
    let antipode = LegMap::from_basis_action(field, &one, &one, |i| -> Vec<(Vec<usize>, Scalar)> {
        match i[0] {
            0 | 1 => vec![(vec![i[0]], field.one())],
            2 => vec![(vec![3], field.from_i64(-1))],
            _ => vec![(vec![2], field.one())],
        }
    });
    HopfAlgebra::new(mu, unit, delta, counit, antipode)
}

/// `H` acting on itself by `μ` and coacting by `Δ`.
pub fn trivial_module(h: &HopfAlgebra) -> Result<HopfModule> {
    HopfModule::new(h.clone(), h.mu().clone(), h.delta().clone())
}

/// `H ⊗ k^d` with action and coaction on the left factor, presented on a
/// single space `M` of dimension `d · dim H`.
pub fn multiplicity_module(h: &HopfAlgebra, d: usize) -> Result<HopfModule> {
    if d == 0 {
        return Err(Error::ZeroMultiplicity);
    }
    let f = h.field();
    let hs = h.space().clone();
    let k = Space::new("K", d)?;
    let m = Space::new("M", hs.dim() * d)?;
    let idk = LegMap::identity(f, &[k.clone()]);
    let action = h
        .mu()
        .kron(&idk)?
        .regroup(vec![hs.clone(), m.clone()], vec![m.clone()])?;
    let t = LegMap::flip(f, &hs, &k);
    let coaction = LegMap::identity(f, &[hs.clone()])
        .kron(&t)?
        .compose(&h.delta().kron(&idk)?)?
        .regroup(vec![m.clone()], vec![m, hs])?;
    HopfModule::new(h.clone(), action, coaction)
}
