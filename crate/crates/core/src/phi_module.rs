//! Modules over a pentagon solution: pairs `(X, Ψ)` with
//! `Φ12 Ψ13 Ψ23 = Ψ23 Φ12` on `M⊗M⊗X`.

use crate::error::{Error, Result};
use crate::hopf::{check_hopf_module, diff, phi_from_hopf_module, HopfModule};
use crate::pentagon::PentagonSolution;
use crate::report::CheckReport;
use crate::tensor::{LegMap, Space, Word};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PhiModule {
    base: PentagonSolution,
    x: Space,
    psi: LegMap,
    report: CheckReport,
}

impl PhiModule {
    pub fn new(base: PentagonSolution, psi: LegMap) -> Result<Self> {
        let report = check_phi_module(&base, &psi)?;
        let x = psi.domain()[1].clone();
        Ok(PhiModule { base, x, psi, report })
    }

    pub fn verified(base: PentagonSolution, psi: LegMap) -> Result<Self> {
        let m = Self::new(base, psi)?;
        if !m.report.pass() {
            return Err(Error::CheckFailed(m.report));
        }
        Ok(m)
    }

    /// `(M, Φ)` over itself.
    pub fn regular(base: &PentagonSolution) -> Result<Self> {
        Self::verified(base.clone(), base.phi().clone())
    }

    /// `(X, I)`.
    pub fn trivial(base: &PentagonSolution, x: Space) -> Result<Self> {
        let psi = LegMap::identity(base.field(), &[base.m().clone(), x]);
        Self::verified(base.clone(), psi)
    }

    pub fn base(&self) -> &PentagonSolution {
        &self.base
    }

    pub fn space(&self) -> &Space {
        &self.x
    }

    pub fn psi(&self) -> &LegMap {
        &self.psi
    }

    pub fn report(&self) -> &CheckReport {
        &self.report
    }

    pub fn is_verified(&self) -> bool {
        self.report.pass()
    }
}

pub fn check_phi_module(base: &PentagonSolution, psi: &LegMap) -> Result<CheckReport> {
    base.require_verified()?;
    let m = base.m().clone();
    let x = match psi.domain() {
        [a, x] if *a == m && psi.codomain() == psi.domain() => x.clone(),
        _ => return Err(Error::LegMismatch("Ψ must be an endomorphism of M⊗X".into())),
    };
    if base.field() != psi.field() {
        return Err(Error::FieldMismatch(base.field(), psi.field()));
    }
    if !psi.is_invertible() {
        return Err(Error::Singular("Ψ".into()));
    }
    let phi = base.phi();
    let mut r = CheckReport::new("phi_module");
    r.record(
        "module_pentagon",
        diff(
            base.field(),
            &[m.clone(), m, x],
            &[(phi, &[0, 1]), (psi, &[0, 2]), (psi, &[1, 2])],
            &[(psi, &[1, 2]), (phi, &[0, 1])],
        )?,
    );
    Ok(r)
}

/// `Ψ'(I⊗f) = (I⊗f)Ψ` for `f: X → X'`.
pub fn check_phi_morphism(a: &PhiModule, b: &PhiModule, f: &LegMap) -> Result<CheckReport> {
    if a.base != b.base {
        return Err(Error::BaseMismatch);
    }
    if f.domain() != [a.x.clone()] || f.codomain() != [b.x.clone()] {
        return Err(Error::LegMismatch(format!(
            "morphism must map {} to {}",
            a.x, b.x
        )));
    }
    let mut r = CheckReport::new("phi_morphism");
    r.record(
        "intertwines",
        diff(
            a.base.field(),
            &[a.base.m().clone(), a.x.clone()],
            &[(&b.psi, &[0, 1]), (f, &[1])],
            &[(f, &[1]), (&a.psi, &[0, 1])],
        )?,
    );
    Ok(r)
}

/// `(X⊗X', Ψ12 Ψ'13)`.
pub fn tensor_phi_modules(a: &PhiModule, b: &PhiModule) -> Result<PhiModule> {
    if a.base != b.base {
        return Err(Error::BaseMismatch);
    }
    for s in [a, b] {
        if !s.is_verified() {
            return Err(Error::CheckFailed(s.report.clone()));
        }
    }
    let m = a.base.m().clone();
    let joined = [m.clone(), a.x.tensor(&b.x)];
    let psi = Word::build(
        a.base.field(),
        &[m, a.x.clone(), b.x.clone()],
        &[(&a.psi, &[0, 1]), (&b.psi, &[0, 2])],
    )?
    .to_legmap()
    .regroup(joined.to_vec(), joined.to_vec())?;
    PhiModule::verified(a.base.clone(), psi)
}

/// `Ψ(m⊗x) = m_(0) ⊗ m_(1)x` over `Φ_M`, for a left `H`-module `X`.
pub fn module_from_hopf(hm: &HopfModule, rho_x: &LegMap) -> Result<PhiModule> {
    let f = hm.field();
    let h = hm.hopf();
    let hs = h.space().clone();
    let x = match (rho_x.domain(), rho_x.codomain()) {
        ([a, x], [y]) if *a == hs && x == y => x.clone(),
        _ => return Err(Error::LegMismatch("the action on X must map H⊗X to X".into())),
    };
    let module = check_hopf_module(hm)?;
    if !module.pass() {
        return Err(Error::CheckFailed(module));
    }
    let idx = LegMap::identity(f, &[x.clone()]);
    let mut law = CheckReport::new("action_law");
    law.record(
        "associativity",
        diff(
            f,
            &[hs.clone(), hs.clone(), x.clone()],
            &[(rho_x, &[0, 1]), (h.mu(), &[0, 1])],
            &[(rho_x, &[0, 1]), (rho_x, &[1, 2])],
        )?,
    )
    .record(
        "unit",
        diff(
            f,
            &[x.clone()],
            &[(rho_x, &[0, 1]), (h.unit(), &[])],
            &[(&idx, &[0])],
        )?,
    );
    if !law.pass() {
        return Err(Error::ActionLawViolation(law));
    }
    let base = phi_from_hopf_module(hm)?;
    let ms = hm.space().clone();
    let psi = Word::build(f, &[ms, x], &[(rho_x, &[1, 2]), (hm.coaction(), &[0])])?.to_legmap();
    PhiModule::verified(base, psi)
}
