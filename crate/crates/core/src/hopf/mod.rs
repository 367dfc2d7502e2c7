//! Hopf algebras and Hopf modules as structure tensors, the solution
//! `Φ_M = (I⊗μ)(Δ⊗I)`, coinvariants and the fundamental isomorphism
//! `H ⊗ M_H ≅ M`.

mod builtin;

pub use builtin::{dual_group_algebra, group_algebra, multiplicity_module, sweedler, trivial_module};

use crate::error::{Error, Result};
use crate::pentagon::{interleave, PentagonSolution};
use crate::report::CheckReport;
use crate::tensor::{FieldSpec, LegMap, Space, Subspace, Word};

/// Structure maps `μ: H⊗H→H`, `u: k→H`, `Δ: H→H⊗H`, `ε: H→k`, `S: H→H`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HopfAlgebra {
    h: Space,
    mu: LegMap,
    unit: LegMap,
    delta: LegMap,
    counit: LegMap,
    antipode: LegMap,
}

fn expect_legs(map: &LegMap, name: &str, domain: &[Space], codomain: &[Space]) -> Result<()> {
    if map.domain() != domain || map.codomain() != codomain {
        return Err(Error::LegMismatch(format!(
            "{name} has legs {:?} -> {:?}, expected {:?} -> {:?}",
            labels(map.domain()),
            labels(map.codomain()),
            labels(domain),
            labels(codomain)
        )));
    }
    Ok(())
}

fn labels(legs: &[Space]) -> Vec<String> {
    legs.iter().map(|s| s.to_string()).collect()
}

fn same_field(maps: &[&LegMap]) -> Result<FieldSpec> {
    let field = maps[0].field();
    for m in maps {
        if m.field() != field {
            return Err(Error::FieldMismatch(field, m.field()));
        }
    }
    Ok(field)
}

impl HopfAlgebra {
    pub fn new(mu: LegMap, unit: LegMap, delta: LegMap, counit: LegMap, antipode: LegMap) -> Result<Self> {
        let h = match mu.codomain() {
            [h] => h.clone(),
            _ => return Err(Error::LegMismatch("μ must land in a single space H".into())),
        };
        let hh = [h.clone(), h.clone()];
        let one = [h.clone()];
        expect_legs(&mu, "mu", &hh, &one)?;
        expect_legs(&unit, "unit", &[], &one)?;
        expect_legs(&delta, "delta", &one, &hh)?;
        expect_legs(&counit, "counit", &one, &[])?;
        expect_legs(&antipode, "antipode", &one, &one)?;
        same_field(&[&mu, &unit, &delta, &counit, &antipode])?;
        Ok(HopfAlgebra {
            h,
            mu,
            unit,
            delta,
            counit,
            antipode,
        })
    }

    pub fn space(&self) -> &Space {
        &self.h
    }

    pub fn dim(&self) -> usize {
        self.h.dim()
    }

    pub fn field(&self) -> FieldSpec {
        self.mu.field()
    }

    pub fn mu(&self) -> &LegMap {
        &self.mu
    }

    pub fn unit(&self) -> &LegMap {
        &self.unit
    }

    pub fn delta(&self) -> &LegMap {
        &self.delta
    }

    pub fn counit(&self) -> &LegMap {
        &self.counit
    }

    pub fn antipode(&self) -> &LegMap {
        &self.antipode
    }

    /// Same structure with another antipode (used to build corrupted inputs).
    pub fn with_antipode(&self, antipode: LegMap) -> Result<Self> {
        Self::new(
            self.mu.clone(),
            self.unit.clone(),
            self.delta.clone(),
            self.counit.clone(),
            antipode,
        )
    }

    /// `x ↦ x⊗1` on a space `X`.
    fn right_unit_on(&self, x: &Space) -> Result<LegMap> {
        LegMap::identity(self.field(), std::slice::from_ref(x)).kron(&self.unit)
    }
}

pub(crate) fn diff(
    field: FieldSpec,
    domain: &[Space],
    a: &[(&LegMap, &[usize])],
    b: &[(&LegMap, &[usize])],
) -> Result<usize> {
    Word::build(field, domain, a)?.residual(&Word::build(field, domain, b)?)
}

/// Every bialgebra and antipode axiom, exactly.
pub fn check_hopf_axioms(h: &HopfAlgebra) -> Result<CheckReport> {
    let f = h.field();
    let hs = h.space().clone();
    let (mu, u, d, e, s) = (&h.mu, &h.unit, &h.delta, &h.counit, &h.antipode);
    let id = LegMap::identity(f, &[hs.clone()]);
    let id0 = LegMap::identity(f, &[]);
    let iu = h.right_unit_on(&hs)?;
    let t = LegMap::flip(f, &hs, &hs);
    let one = [hs.clone()];
    let two = [hs.clone(), hs.clone()];
    let three = [hs.clone(), hs.clone(), hs];
    let mut r = CheckReport::new("hopf_axioms");
    r.record(
        "associativity",
        diff(
            f,
            &three,
            &[(mu, &[0, 1]), (mu, &[0, 1])],
            &[(mu, &[0, 1]), (mu, &[1, 2])],
        )?,
    );
    r.record(
        "left_unit",
        diff(f, &one, &[(mu, &[0, 1]), (u, &[])], &[(&id, &[0])])?,
    );
    r.record(
        "right_unit",
        diff(f, &one, &[(mu, &[0, 1]), (&iu, &[0])], &[(&id, &[0])])?,
    );
    r.record(
        "coassociativity",
        diff(f, &one, &[(d, &[0]), (d, &[0])], &[(d, &[1]), (d, &[0])])?,
    );
    r.record(
        "left_counit",
        diff(f, &one, &[(e, &[0]), (d, &[0])], &[(&id, &[0])])?,
    );
    r.record(
        "right_counit",
        diff(f, &one, &[(e, &[1]), (d, &[0])], &[(&id, &[0])])?,
    );
    r.record(
        "comul_multiplicative",
        diff(
            f,
            &two,
            &[(d, &[0]), (mu, &[0, 1])],
            &[(mu, &[1, 2]), (mu, &[0, 1]), (&t, &[1, 2]), (d, &[0]), (d, &[1])],
        )?,
    );
    r.record(
        "comul_unit",
        diff(f, &[], &[(d, &[0]), (u, &[])], &[(u, &[]), (u, &[])])?,
    );
    r.record(
        "counit_multiplicative",
        diff(f, &two, &[(e, &[0]), (mu, &[0, 1])], &[(e, &[0]), (e, &[0])])?,
    );
    r.record(
        "counit_unit",
        diff(f, &[], &[(e, &[0]), (u, &[])], &[(&id0, &[])])?,
    );
    r.record(
        "left_antipode",
        diff(
            f,
            &one,
            &[(mu, &[0, 1]), (s, &[0]), (d, &[0])],
            &[(u, &[]), (e, &[0])],
        )?,
    );
    r.record(
        "right_antipode",
        diff(
            f,
            &one,
            &[(mu, &[0, 1]), (s, &[1]), (d, &[0])],
            &[(u, &[]), (e, &[0])],
        )?,
    );
    Ok(r)
}

/// A left `H`-module and right `H`-comodule `M` with action `H⊗M→M` and
/// coaction `M→M⊗H`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HopfModule {
    hopf: HopfAlgebra,
    m: Space,
    action: LegMap,
    coaction: LegMap,
}

impl HopfModule {
    pub fn new(hopf: HopfAlgebra, action: LegMap, coaction: LegMap) -> Result<Self> {
        let m = match action.codomain() {
            [m] => m.clone(),
            _ => {
                return Err(Error::LegMismatch(
                    "the action must land in a single space M".into(),
                ))
            }
        };
        let h = hopf.space().clone();
        expect_legs(&action, "action", &[h.clone(), m.clone()], &[m.clone()])?;
        expect_legs(&coaction, "coaction", &[m.clone()], &[m.clone(), h])?;
        same_field(&[hopf.mu(), &action, &coaction])?;
        Ok(HopfModule {
            hopf,
            m,
            action,
            coaction,
        })
    }

    pub fn hopf(&self) -> &HopfAlgebra {
        &self.hopf
    }

    pub fn space(&self) -> &Space {
        &self.m
    }

    pub fn field(&self) -> FieldSpec {
        self.action.field()
    }

    pub fn action(&self) -> &LegMap {
        &self.action
    }

    pub fn coaction(&self) -> &LegMap {
        &self.coaction
    }

    pub fn with_coaction(&self, coaction: LegMap) -> Result<Self> {
        Self::new(self.hopf.clone(), self.action.clone(), coaction)
    }
}

/// Module, comodule and `H`-linearity `Δ_M(hm) = Δ_H(h)Δ_M(m)`.
pub fn check_hopf_module(hm: &HopfModule) -> Result<CheckReport> {
    let f = hm.field();
    let h = hm.hopf();
    let (hs, ms) = (h.space().clone(), hm.space().clone());
    let (rho, co) = (&hm.action, &hm.coaction);
    let id = LegMap::identity(f, &[ms.clone()]);
    let t = LegMap::flip(f, &hs, &ms);
    let mut r = CheckReport::new("hopf_module");
    r.record(
        "module_associativity",
        diff(
            f,
            &[hs.clone(), hs.clone(), ms.clone()],
            &[(rho, &[0, 1]), (h.mu(), &[0, 1])],
            &[(rho, &[0, 1]), (rho, &[1, 2])],
        )?,
    );
    r.record(
        "module_unit",
        diff(
            f,
            &[ms.clone()],
            &[(rho, &[0, 1]), (h.unit(), &[])],
            &[(&id, &[0])],
        )?,
    );
    r.record(
        "comodule_coassociativity",
        diff(
            f,
            &[ms.clone()],
            &[(co, &[0]), (co, &[0])],
            &[(h.delta(), &[1]), (co, &[0])],
        )?,
    );
    r.record(
        "comodule_counit",
        diff(
            f,
            &[ms.clone()],
            &[(h.counit(), &[1]), (co, &[0])],
            &[(&id, &[0])],
        )?,
    );
    r.record(
        "h_linearity",
        diff(
            f,
            &[hs, ms],
            &[(co, &[0]), (rho, &[0, 1])],
            &[
                (h.mu(), &[1, 2]),
                (rho, &[0, 1]),
                (&t, &[1, 2]),
                (h.delta(), &[0]),
                (co, &[1]),
            ],
        )?,
    );
    Ok(r)
}

fn require_hopf_module(hm: &HopfModule) -> Result<()> {
    let axioms = check_hopf_axioms(hm.hopf())?;
    if !axioms.pass() {
        return Err(Error::CheckFailed(axioms));
    }
    let module = check_hopf_module(hm)?;
    if !module.pass() {
        return Err(Error::CheckFailed(module));
    }
    Ok(())
}

/// `Φ_M(m⊗n) = m_(0) ⊗ m_(1)n`, verified as a pentagon solution.
pub fn phi_from_hopf_module(hm: &HopfModule) -> Result<PentagonSolution> {
    require_hopf_module(hm)?;
    PentagonSolution::verified(phi_map(hm)?)
}

fn phi_map(hm: &HopfModule) -> Result<LegMap> {
    let ms = hm.space().clone();
    Ok(Word::build(
        hm.field(),
        &[ms.clone(), ms],
        &[(hm.action(), &[1, 2]), (hm.coaction(), &[0])],
    )?
    .to_legmap())
}

/// `Φ_M⁻¹(m⊗n) = m_(0) ⊗ S(m_(1))n`, certified as a two-sided inverse.
pub fn phi_inverse_via_antipode(hm: &HopfModule) -> Result<LegMap> {
    require_hopf_module(hm)?;
    let ms = hm.space().clone();
    let inv = Word::build(
        hm.field(),
        &[ms.clone(), ms.clone()],
        &[
            (hm.action(), &[1, 2]),
            (hm.hopf().antipode(), &[1]),
            (hm.coaction(), &[0]),
        ],
    )?
    .to_legmap();
    let phi = phi_map(hm)?;
    let id = LegMap::identity(hm.field(), &[ms.clone(), ms]);
    let mut r = CheckReport::new("antipode_inverse");
    r.record("left_inverse", inv.compose(&phi)?.residual(&id)?);
    r.record("right_inverse", phi.compose(&inv)?.residual(&id)?);
    if !r.pass() {
        return Err(Error::CheckFailed(r));
    }
    Ok(inv)
}

/// `M_H = {m : Δ_M(m) = m⊗1}` in canonical RREF form.
pub fn coinvariants(hm: &HopfModule) -> Result<Subspace> {
    let ms = hm.space().clone();
    let diff = hm.coaction().sub(&hm.hopf().right_unit_on(&ms)?)?;
    Ok(Subspace::kernel(diff.matrix()))
}

/// `θ: H ⊗ M_H → M`, `θ(h⊗m) = hm`, with its inverse
/// `m ↦ m_(2) ⊗ S⁻¹(m_(1))m_(0)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FundamentalIso {
    pub coinvariants: Subspace,
    pub mh: Space,
    pub theta: LegMap,
    pub theta_inv: LegMap,
    pub report: CheckReport,
}

pub fn fundamental_iso(hm: &HopfModule) -> Result<FundamentalIso> {
    require_hopf_module(hm)?;
    let f = hm.field();
    let h = hm.hopf();
    let (hs, ms) = (h.space().clone(), hm.space().clone());
    let coinv = coinvariants(hm)?;
    if coinv.dim() * hs.dim() != ms.dim() {
        return Err(Error::DimensionMismatch(format!(
            "dim H · dim M_H = {} · {} but dim M = {}",
            hs.dim(),
            coinv.dim(),
            ms.dim()
        )));
    }
    let mh = Space::new("M_H", coinv.dim())?;
    let incl = LegMap::new(vec![mh.clone()], vec![ms.clone()], coinv.inclusion())?;
    let coord = LegMap::new(vec![ms.clone()], vec![mh.clone()], coinv.coordinate_map())?;
    let s_inv = h.antipode().inverse().map_err(|_| Error::AntipodeNotInvertible)?;
    let theta = hm
        .action()
        .compose(&LegMap::identity(f, &[hs.clone()]).kron(&incl)?)?;
    let reverse = LegMap::permute_legs(f, &[2, 1, 0], &[ms.clone(), hs.clone(), hs.clone()])?;
    let theta_inv = Word::build(
        f,
        &[ms.clone()],
        &[
            (&coord, &[1]),
            (hm.action(), &[1, 2]),
            (&s_inv, &[1]),
            (&reverse, &[0, 1, 2]),
            (hm.coaction(), &[0]),
            (hm.coaction(), &[0]),
        ],
    )?
    .to_legmap();
    let mut r = CheckReport::new("fundamental_iso");
    r.record(
        "inverse_after_theta",
        theta_inv
            .compose(&theta)?
            .residual(&LegMap::identity(f, &[hs.clone(), mh.clone()]))?,
    );
    r.record(
        "theta_after_inverse",
        theta
            .compose(&theta_inv)?
            .residual(&LegMap::identity(f, &[ms.clone()]))?,
    );
    r.record(
        "h_linear",
        diff(
            f,
            &[hs.clone(), hs.clone(), mh.clone()],
            &[(&theta, &[0, 1]), (h.mu(), &[0, 1])],
            &[(hm.action(), &[0, 1]), (&theta, &[1, 2])],
        )?,
    );
    let t = LegMap::flip(f, &hs, &mh);
    r.record(
        "colinear",
        diff(
            f,
            &[hs.clone(), mh.clone()],
            &[(hm.coaction(), &[0]), (&theta, &[0, 1])],
            &[(&theta, &[0, 1]), (&t, &[1, 2]), (h.delta(), &[0])],
        )?,
    );
    Ok(FundamentalIso {
        coinvariants: coinv,
        mh,
        theta,
        theta_inv,
        report: r,
    })
}

/// Checks `Φ_M ∘ (θ⊗θ) = (θ⊗θ) ∘ t23(Φ_H ⊗ I)t23` with `Φ_H` the solution
/// of the trivial module over `H`.
pub fn check_factorization(phi: &LegMap, hopf: &HopfAlgebra, theta: &LegMap) -> Result<CheckReport> {
    let f = phi.field();
    let phi_h = phi_map(&trivial_module(hopf)?)?;
    let [hs, mh] = theta.domain() else {
        return Err(Error::LegMismatch("θ must map H⊗M_H".into()));
    };
    let combined = hs.tensor(mh);
    let ms = theta.codomain().to_vec();
    let th = theta.regroup(vec![combined.clone()], ms.clone())?;
    let tt = th.kron(&th)?;
    let rhs_phi = interleave(&phi_h, &LegMap::identity(f, &[mh.clone(), mh.clone()]))?;
    let mut r = CheckReport::new("factorization");
    r.record(
        "factorization",
        phi.compose(&tt)?.residual(&tt.compose(&rhs_phi)?)?,
    );
    Ok(r)
}
