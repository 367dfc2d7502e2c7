//! Module coalgebras, comodules with pairings, the map
//! `F_V = (I⊗π)(Δ_V⊗I)`, and the Galois solution `(F_L, Φ_H)`.

use crate::error::{Error, Result};
use crate::group::Group;
use crate::hopf::{
    check_hopf_axioms, check_hopf_module, group_algebra, phi_from_hopf_module, trivial_module, HopfAlgebra,
    HopfModule,
};
use crate::pentagon::MpeSolution;
use crate::report::CheckReport;
use crate::tensor::{FieldSpec, LegMap, Space, Word};

/// A right `H`-module coalgebra `L`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleCoalgebra {
    hopf: HopfAlgebra,
    l: Space,
    delta: LegMap,
    counit: LegMap,
    action: LegMap,
}

fn legs_are(map: &LegMap, name: &str, domain: &[Space], codomain: &[Space]) -> Result<()> {
    if map.domain() != domain || map.codomain() != codomain {
        return Err(Error::LegMismatch(format!("{name} has unexpected legs")));
    }
    Ok(())
}

impl ModuleCoalgebra {
    pub fn new(hopf: HopfAlgebra, delta: LegMap, counit: LegMap, action: LegMap) -> Result<Self> {
        let l = match delta.domain() {
            [l] => l.clone(),
            _ => return Err(Error::LegMismatch("Δ_L must act on a single space L".into())),
        };
        let h = hopf.space().clone();
        legs_are(&delta, "delta_L", &[l.clone()], &[l.clone(), l.clone()])?;
        legs_are(&counit, "counit_L", &[l.clone()], &[])?;
        legs_are(&action, "mu_L", &[l.clone(), h], &[l.clone()])?;
        for m in [&delta, &counit, &action] {
            if m.field() != hopf.field() {
                return Err(Error::FieldMismatch(hopf.field(), m.field()));
            }
        }
        Ok(ModuleCoalgebra {
            hopf,
            l,
            delta,
            counit,
            action,
        })
    }

    /// `H` itself, with `Δ_L = Δ_H`, `ε_L = ε_H`, `μ_L = μ_H`.
    pub fn regular(hopf: &HopfAlgebra) -> Result<Self> {
        Self::new(
            hopf.clone(),
            hopf.delta().clone(),
            hopf.counit().clone(),
            hopf.mu().clone(),
        )
    }

    pub fn hopf(&self) -> &HopfAlgebra {
        &self.hopf
    }

    pub fn space(&self) -> &Space {
        &self.l
    }

    pub fn field(&self) -> FieldSpec {
        self.hopf.field()
    }

    pub fn delta(&self) -> &LegMap {
        &self.delta
    }

    pub fn counit(&self) -> &LegMap {
        &self.counit
    }

    pub fn action(&self) -> &LegMap {
        &self.action
    }

    /// `F_L = (I⊗μ_L)(Δ_L⊗I): L⊗H → L⊗L`.
    pub fn galois_map(&self) -> Result<LegMap> {
        Ok(Word::build(
            self.field(),
            &[self.l.clone(), self.hopf.space().clone()],
            &[(&self.action, &[1, 2]), (&self.delta, &[0])],
        )?
        .to_legmap())
    }
}

fn diff(
    field: FieldSpec,
    domain: &[Space],
    a: &[(&LegMap, &[usize])],
    b: &[(&LegMap, &[usize])],
) -> Result<usize> {
    Word::build(field, domain, a)?.residual(&Word::build(field, domain, b)?)
}

pub fn check_module_coalgebra(mc: &ModuleCoalgebra) -> Result<CheckReport> {
    let f = mc.field();
    let h = mc.hopf();
    let (l, hs) = (mc.space().clone(), h.space().clone());
    let (d, e, a) = (&mc.delta, &mc.counit, &mc.action);
    let id = LegMap::identity(f, &[l.clone()]);
    let t = LegMap::flip(f, &l, &hs);
    let iu = id.kron(h.unit())?;
    let mut r = CheckReport::new("module_coalgebra");
    r.record(
        "coassociativity",
        diff(f, &[l.clone()], &[(d, &[0]), (d, &[0])], &[(d, &[1]), (d, &[0])])?,
    );
    r.record(
        "left_counit",
        diff(f, &[l.clone()], &[(e, &[0]), (d, &[0])], &[(&id, &[0])])?,
    );
    r.record(
        "right_counit",
        diff(f, &[l.clone()], &[(e, &[1]), (d, &[0])], &[(&id, &[0])])?,
    );
    r.record(
        "action_law",
        diff(
            f,
            &[l.clone(), hs.clone(), hs.clone()],
            &[(a, &[0, 1]), (a, &[0, 1])],
            &[(a, &[0, 1]), (h.mu(), &[1, 2])],
        )?,
    );
    r.record(
        "action_unit",
        diff(f, &[l.clone()], &[(a, &[0, 1]), (&iu, &[0])], &[(&id, &[0])])?,
    );
    r.record(
        "compatibility",
        diff(
            f,
            &[l.clone(), hs],
            &[(d, &[0]), (a, &[0, 1])],
            &[
                (a, &[1, 2]),
                (a, &[0, 1]),
                (&t, &[1, 2]),
                (d, &[0]),
                (h.delta(), &[1]),
            ],
        )?,
    );
    Ok(r)
}

/// A right `L`-comodule `V` paired with a Hopf module `M` by `π: L⊗M → V`,
/// optionally with `ν: L⊗V → M`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairedComoduleData {
    pub mc: ModuleCoalgebra,
    pub hm: HopfModule,
    pub v: Space,
    pub delta_v: LegMap,
    pub pi: LegMap,
    pub nu: Option<LegMap>,
}

impl PairedComoduleData {
    pub fn new(
        mc: ModuleCoalgebra,
        hm: HopfModule,
        delta_v: LegMap,
        pi: LegMap,
        nu: Option<LegMap>,
    ) -> Result<Self> {
        if mc.hopf() != hm.hopf() {
            return Err(Error::LegMismatch(
                "module coalgebra and Hopf module over different Hopf algebras".into(),
            ));
        }
        let v = match delta_v.domain() {
            [v] => v.clone(),
            _ => return Err(Error::LegMismatch("Δ_V must act on a single space V".into())),
        };
        let (l, m) = (mc.space().clone(), hm.space().clone());
        legs_are(&delta_v, "delta_V", &[v.clone()], &[v.clone(), l.clone()])?;
        legs_are(&pi, "pi", &[l.clone(), m.clone()], &[v.clone()])?;
        if let Some(nu) = &nu {
            legs_are(nu, "nu", &[l, v.clone()], &[m])?;
        }
        Ok(PairedComoduleData {
            mc,
            hm,
            v,
            delta_v,
            pi,
            nu,
        })
    }

    /// `V = L`, `M = H` (trivial Hopf module), `Δ_V = Δ_L`, `π = μ_L`.
    pub fn galois(mc: &ModuleCoalgebra, nu: Option<LegMap>) -> Result<Self> {
        Self::new(
            mc.clone(),
            trivial_module(mc.hopf())?,
            mc.delta().clone(),
            mc.action().clone(),
            nu,
        )
    }

    pub fn field(&self) -> FieldSpec {
        self.mc.field()
    }

    /// `F_V = (I⊗π)(Δ_V⊗I): V⊗M → V⊗V`.
    pub fn fv(&self) -> Result<LegMap> {
        Ok(Word::build(
            self.field(),
            &[self.v.clone(), self.hm.space().clone()],
            &[(&self.pi, &[1, 2]), (&self.delta_v, &[0])],
        )?
        .to_legmap())
    }

    /// `(I⊗ν)(Δ_V⊗I): V⊗V → V⊗M`, when `ν` is given.
    pub fn fv_inverse_via_nu(&self) -> Result<Option<LegMap>> {
        let Some(nu) = &self.nu else {
            return Ok(None);
        };
        Ok(Some(
            Word::build(
                self.field(),
                &[self.v.clone(), self.v.clone()],
                &[(nu, &[1, 2]), (&self.delta_v, &[0])],
            )?
            .to_legmap(),
        ))
    }
}

pub fn check_paired_data(pd: &PairedComoduleData) -> Result<CheckReport> {
    let f = pd.field();
    let (l, m, v) = (pd.mc.space().clone(), pd.hm.space().clone(), pd.v.clone());
    let hs = pd.mc.hopf().space().clone();
    let (dv, pi, dl) = (&pd.delta_v, &pd.pi, pd.mc.delta());
    let idv = LegMap::identity(f, &[v.clone()]);
    let t = LegMap::flip(f, &l, &m);
    let mut r = CheckReport::new("paired_data");
    r.record(
        "comodule_coassociativity",
        diff(
            f,
            &[v.clone()],
            &[(dv, &[0]), (dv, &[0])],
            &[(dl, &[1]), (dv, &[0])],
        )?,
    );
    r.record(
        "comodule_counit",
        diff(
            f,
            &[v.clone()],
            &[(pd.mc.counit(), &[1]), (dv, &[0])],
            &[(&idv, &[0])],
        )?,
    );
    r.record(
        "balance",
        diff(
            f,
            &[l.clone(), hs, m.clone()],
            &[(pi, &[0, 1]), (pd.mc.action(), &[0, 1])],
            &[(pi, &[0, 1]), (pd.hm.action(), &[1, 2])],
        )?,
    );
    r.record(
        "colinearity",
        diff(
            f,
            &[l.clone(), m.clone()],
            &[(dv, &[0]), (pi, &[0, 1])],
            &[
                (pd.mc.action(), &[1, 2]),
                (pi, &[0, 1]),
                (&t, &[1, 2]),
                (dl, &[0]),
                (pd.hm.coaction(), &[1]),
            ],
        )?,
    );
    if let Some(nu) = &pd.nu {
        let idm = LegMap::identity(f, &[m.clone()]);
        r.record(
            "nu_after_pi",
            diff(
                f,
                &[l.clone(), m.clone()],
                &[(nu, &[0, 1]), (pi, &[1, 2]), (dl, &[0])],
                &[(&idm, &[0]), (pd.mc.counit(), &[0])],
            )?,
        );
        r.record(
            "pi_after_nu",
            diff(
                f,
                &[l, v],
                &[(pi, &[0, 1]), (nu, &[1, 2]), (dl, &[0])],
                &[(&idv, &[0]), (pd.mc.counit(), &[0])],
            )?,
        );
    }
    Ok(r)
}

fn require(report: CheckReport) -> Result<()> {
    if report.pass() {
        Ok(())
    } else {
        Err(Error::CheckFailed(report))
    }
}

/// `(V, M, F_V, Φ_M)`, verified; with `ν` the inverse formula is certified.
pub fn build_fv(pd: &PairedComoduleData) -> Result<MpeSolution> {
    require(check_hopf_axioms(pd.mc.hopf())?)?;
    require(check_module_coalgebra(&pd.mc)?)?;
    require(check_hopf_module(&pd.hm)?)?;
    require(check_paired_data(pd)?)?;
    let phi = phi_from_hopf_module(&pd.hm)?;
    let fv = pd.fv()?;
    match pd.fv_inverse_via_nu()? {
        Some(inv) => {
            let f = pd.field();
            let mut r = CheckReport::new("fv_inverse");
            r.record(
                "left_inverse",
                inv.compose(&fv)?.residual(&LegMap::identity(f, fv.domain()))?,
            );
            r.record(
                "right_inverse",
                fv.compose(&inv)?.residual(&LegMap::identity(f, fv.codomain()))?,
            );
            require(r)?;
        }
        None => {
            if !fv.is_invertible() {
                return Err(Error::SingularFv);
            }
        }
    }
    MpeSolution::verified(fv, phi.phi().clone())
}

/// Invertibility of `F_L`, recorded as the rank deficiency.
pub fn galois_check(mc: &ModuleCoalgebra) -> Result<CheckReport> {
    let fl = mc.galois_map()?;
    let needed = fl.matrix().rows().max(fl.matrix().cols());
    let rank = fl.matrix().rank();
    let mut r = CheckReport::new("galois");
    r.record("F_L_invertible", needed - rank);
    Ok(r)
}

/// `(F_L, Φ_H)` for a Galois module coalgebra.
pub fn galois_mpe(mc: &ModuleCoalgebra) -> Result<MpeSolution> {
    require(check_hopf_axioms(mc.hopf())?)?;
    require(check_module_coalgebra(mc)?)?;
    let fl = mc.galois_map()?;
    let needed = fl.matrix().rows().max(fl.matrix().cols());
    let rank = fl.matrix().rank();
    if rank != needed || !fl.matrix().is_square() {
        return Err(Error::NotGalois { rank, needed });
    }
    let phi = phi_from_hopf_module(&trivial_module(mc.hopf())?)?;
    MpeSolution::verified(fl, phi.phi().clone())
}

/// A right action of a group on `{0, …, n−1}`: `act[x][g] = x·g`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupSet {
    group: Group,
    act: Vec<Vec<usize>>,
}

impl GroupSet {
    pub fn new(group: Group, act: Vec<Vec<usize>>) -> Result<Self> {
        let (n, k) = (act.len(), group.order());
        if n == 0 {
            return Err(Error::NotAnAction("empty set".into()));
        }
        if act
            .iter()
            .any(|row| row.len() != k || row.iter().any(|&y| y >= n))
        {
            return Err(Error::NotAnAction("action table has the wrong shape".into()));
        }
        for x in 0..n {
            if act[x][group.identity()] != x {
                return Err(Error::NotAnAction(format!("{x}·e ≠ {x}")));
            }
            for g in 0..k {
                for h in 0..k {
                    if act[act[x][g]][h] != act[x][group.mul(g, h)] {
                        return Err(Error::NotAnAction(format!("({x}·{g})·{h} ≠ {x}·({g}{h})")));
                    }
                }
            }
        }
        Ok(GroupSet { group, act })
    }

    /// `G` acting on itself by right multiplication.
    pub fn torsor(group: Group) -> Self {
        let act = (0..group.order())
            .map(|x| (0..group.order()).map(|g| group.mul(x, g)).collect())
            .collect();
        GroupSet { group, act }
    }

    /// `n` points, every element acting trivially.
    pub fn trivial(group: Group, n: usize) -> Self {
        let act = (0..n).map(|x| vec![x; group.order()]).collect();
        GroupSet { group, act }
    }

    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn size(&self) -> usize {
        self.act.len()
    }

    pub fn act(&self, x: usize, g: usize) -> usize {
        self.act[x][g]
    }

    pub fn is_free(&self) -> bool {
        (0..self.size())
            .all(|x| (0..self.group.order()).all(|g| g == self.group.identity() || self.act[x][g] != x))
    }

    pub fn is_transitive(&self) -> bool {
        (0..self.size()).all(|y| self.act[0].contains(&y))
    }

    /// `k[X]` with `Δ(x) = x⊗x`, `ε(x) = 1`, `x ↦ x·g`, over `k[G]`.
    pub fn coalgebra(&self, field: FieldSpec) -> Result<ModuleCoalgebra> {
        let hopf = group_algebra(&self.group, field)?;
        let l = Space::new("L", self.size())?;
        let one = field.one();
        let delta = LegMap::from_basis_action(field, &[l.clone()], &[l.clone(), l.clone()], |i| {
            [(vec![i[0], i[0]], one.clone())]
        });
        let counit = LegMap::from_basis_action(field, &[l.clone()], &[], |_| [(vec![], one.clone())]);
        let action = LegMap::from_basis_action(field, &[l.clone(), hopf.space().clone()], &[l], |i| {
            [(vec![self.act[i[0]][i[1]]], one.clone())]
        });
        ModuleCoalgebra::new(hopf, delta, counit, action)
    }
}

/// Every right action of `group` on `{0, …, n−1}`, found by assigning a
/// permutation to each group element and keeping the assignments that
/// satisfy the action laws.
pub fn all_group_sets(group: &Group, n: usize) -> Vec<GroupSet> {
    let perms = permutations(n);
    let others: Vec<usize> = (0..group.order()).filter(|&g| g != group.identity()).collect();
    let mut found = Vec::new();
    let mut choice = vec![0usize; others.len()];
    loop {
        let act = (0..n)
            .map(|x| {
                (0..group.order())
                    .map(|g| match others.iter().position(|&o| o == g) {
                        Some(i) => perms[choice[i]][x],
                        None => x,
                    })
                    .collect()
            })
            .collect();
        if let Ok(s) = GroupSet::new(group.clone(), act) {
            found.push(s);
        }
        let mut i = 0;
        loop {
            if i == choice.len() {
                return found;
            }
            choice[i] += 1;
            if choice[i] < perms.len() {
                break;
            }
            choice[i] = 0;
            i += 1;
        }
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out.sort();
    out
}
