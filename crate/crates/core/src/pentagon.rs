//! Pentagon and modified pentagon equations, extraction of `Φ` from `F`,
//! coproducts `Δ_F(x) = F(x⊗1)F⁻¹`, and the solution combinators.

use crate::error::{Error, Result};
use crate::report::CheckReport;
use crate::tensor::{FieldSpec, LegMap, Matrix, Scalar, Space, Subspace, Word};

/// `(M, Φ)` with the outcome of the pentagon check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PentagonSolution {
    m: Space,
    phi: LegMap,
    report: CheckReport,
}

impl PentagonSolution {
    /// Validates the shape of `phi` and records the pentagon check; the
    /// result may be unverified.
    pub fn new(phi: LegMap) -> Result<Self> {
        let m = pentagon_space(&phi)?;
        let report = check_pentagon(&phi)?;
        Ok(PentagonSolution { m, phi, report })
    }

    /// Like [`PentagonSolution::new`] but fails unless the check passes.
    pub fn verified(phi: LegMap) -> Result<Self> {
        let s = Self::new(phi)?;
        s.require_verified()?;
        Ok(s)
    }

    pub fn m(&self) -> &Space {
        &self.m
    }

    pub fn phi(&self) -> &LegMap {
        &self.phi
    }

    pub fn field(&self) -> FieldSpec {
        self.phi.field()
    }

    pub fn report(&self) -> &CheckReport {
        &self.report
    }

    pub fn is_verified(&self) -> bool {
        self.report.pass()
    }

    pub fn require_verified(&self) -> Result<()> {
        if self.is_verified() {
            Ok(())
        } else {
            Err(Error::CheckFailed(self.report.clone()))
        }
    }
}

/// `(V, M, F, Φ)` with the outcome of the modified pentagon check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MpeSolution {
    v: Space,
    m: Space,
    f: LegMap,
    phi: LegMap,
    report: CheckReport,
}

impl MpeSolution {
    pub fn new(f: LegMap, phi: LegMap) -> Result<Self> {
        let (v, m) = mpe_spaces(&f, &phi)?;
        let report = check_mpe(&f, &phi)?;
        Ok(MpeSolution { v, m, f, phi, report })
    }

    pub fn verified(f: LegMap, phi: LegMap) -> Result<Self> {
        let s = Self::new(f, phi)?;
        s.require_verified()?;
        Ok(s)
    }

    pub fn v(&self) -> &Space {
        &self.v
    }

    pub fn m(&self) -> &Space {
        &self.m
    }

    pub fn f(&self) -> &LegMap {
        &self.f
    }

    pub fn phi(&self) -> &LegMap {
        &self.phi
    }

    pub fn field(&self) -> FieldSpec {
        self.f.field()
    }

    pub fn report(&self) -> &CheckReport {
        &self.report
    }

    pub fn is_verified(&self) -> bool {
        self.report.pass()
    }

    pub fn require_verified(&self) -> Result<()> {
        if self.is_verified() {
            Ok(())
        } else {
            Err(Error::CheckFailed(self.report.clone()))
        }
    }

    /// The pair `(Φ, Φ)` for a pentagon solution.
    pub fn diagonal(phi: &PentagonSolution) -> Result<Self> {
        Self::new(phi.phi().clone(), phi.phi().clone())
    }
}

/// The space `M` of a map `Φ: M⊗M → M⊗M`.
pub fn pentagon_space(phi: &LegMap) -> Result<Space> {
    match (phi.domain(), phi.codomain()) {
        ([a, b], [c, d]) if a == b && b == c && c == d => Ok(a.clone()),
        _ => Err(Error::LegMismatch(
            "Φ must map M⊗M to M⊗M for a single space M".into(),
        )),
    }
}

/// The spaces `(V, M)` of `F: V⊗M → V⊗V` and `Φ: M⊗M → M⊗M`.
pub fn mpe_spaces(f: &LegMap, phi: &LegMap) -> Result<(Space, Space)> {
    let m = pentagon_space(phi)?;
    let v = f_spaces(f)?.0;
    if f.domain()[1] != m {
        return Err(Error::LegMismatch(format!(
            "F acts on {} but Φ acts on {m}",
            f.domain()[1]
        )));
    }
    if f.field() != phi.field() {
        return Err(Error::FieldMismatch(f.field(), phi.field()));
    }
    Ok((v, m))
}

fn f_spaces(f: &LegMap) -> Result<(Space, Space)> {
    match (f.domain(), f.codomain()) {
        ([v, m], [a, b]) if v == a && a == b => Ok((v.clone(), m.clone())),
        _ => Err(Error::LegMismatch("F must map V⊗M to V⊗V".into())),
    }
}

fn require_invertible(map: &LegMap, what: &str) -> Result<()> {
    if map.is_invertible() {
        Ok(())
    } else {
        Err(Error::Singular(what.into()))
    }
}

/// Exact check of `Φ12 Φ13 Φ23 = Φ23 Φ12`.
pub fn check_pentagon(phi: &LegMap) -> Result<CheckReport> {
    let m = pentagon_space(phi)?;
    require_invertible(phi, "Φ")?;
    let amb = [m.clone(), m.clone(), m];
    let lhs = Word::build(
        phi.field(),
        &amb,
        &[(phi, &[0, 1]), (phi, &[0, 2]), (phi, &[1, 2])],
    )?;
    let rhs = Word::build(phi.field(), &amb, &[(phi, &[1, 2]), (phi, &[0, 1])])?;
    let mut report = CheckReport::new("pentagon");
    report.record("pentagon", lhs.residual(&rhs)?);
    Ok(report)
}

/// Exact check of `F12 F13 Φ23 = F23 F12` on `V⊗M⊗M`.
pub fn check_mpe(f: &LegMap, phi: &LegMap) -> Result<CheckReport> {
    let (v, m) = mpe_spaces(f, phi)?;
    require_invertible(f, "F")?;
    require_invertible(phi, "Φ")?;
    let amb = [v, m.clone(), m];
    let lhs = Word::build(f.field(), &amb, &[(f, &[0, 1]), (f, &[0, 2]), (phi, &[1, 2])])?;
    let rhs = Word::build(f.field(), &amb, &[(f, &[1, 2]), (f, &[0, 1])])?;
    let mut report = CheckReport::new("modified_pentagon");
    report.record("modified_pentagon", lhs.residual(&rhs)?);
    Ok(report)
}

/// Recovers `Φ` from `F13⁻¹ F12⁻¹ F23 F12 = I ⊗ Φ`.
pub fn extract_phi(f: &LegMap) -> Result<LegMap> {
    let (v, m) = f_spaces(f)?;
    let field = f.field();
    let finv = f.inverse().map_err(|_| Error::Singular("F".into()))?;
    let amb = [v.clone(), m.clone(), m.clone()];
    let c = Word::build(
        field,
        &amb,
        &[(&finv, &[0, 2]), (&finv, &[0, 1]), (f, &[1, 2]), (f, &[0, 1])],
    )?;
    let mm = m.dim() * m.dim();
    // Columns with first V index 0 hold Φ in rows with first V index 0.
    let mut phi = Matrix::zeros(field, mm, mm);
    for col in 0..mm {
        for (row, x) in c.column(col) {
            if row < mm {
                phi.set(row, col, x);
            }
        }
    }
    let phi = LegMap::new(vec![m.clone(), m.clone()], vec![m.clone(), m.clone()], phi)?;
    let expected = Word::build(field, &amb, &[(&phi, &[1, 2])])?;
    if c.residual(&expected)? != 0 {
        return Err(Error::NotCongruent);
    }
    Ok(phi)
}

/// A linear map `End(V) → End(V) ⊗ End(V)` on the matrix-unit basis
/// (`E_ij` at index `i·dim V + j`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoproductMap {
    v: Space,
    delta: LegMap,
}

impl CoproductMap {
    pub fn new(v: Space, delta: LegMap) -> Result<Self> {
        let e = v.endomorphisms();
        if delta.domain() != [e.clone()] || delta.codomain() != [e.clone(), e.clone()] {
            return Err(Error::LegMismatch(format!(
                "a coproduct on {v} must map End(V) to End(V)⊗End(V)"
            )));
        }
        Ok(CoproductMap { v, delta })
    }

    pub fn v(&self) -> &Space {
        &self.v
    }

    pub fn delta(&self) -> &LegMap {
        &self.delta
    }

    pub fn field(&self) -> FieldSpec {
        self.delta.field()
    }

    /// `Δ(E_ij)` as an operator on `V⊗V`.
    pub fn image_operator(&self, i: usize, j: usize) -> Matrix {
        let n = self.v.dim();
        let col = self.delta.matrix().col(i * n + j);
        from_end_pair(self.field(), n, &col)
    }
}

/// Reads an operator on `V⊗V` as a vector of `End(V)⊗End(V)`.
fn to_end_pair(x: &Matrix, n: usize) -> Vec<Scalar> {
    let nn = n * n;
    let mut out = vec![x.field().zero(); nn * nn];
    for r in 0..nn {
        for c in 0..nn {
            let v = x.get(r, c);
            if v.is_zero() {
                continue;
            }
            let (a, b, cc, d) = (r / n, r % n, c / n, c % n);
            out[(a * n + cc) * nn + b * n + d] = v.clone();
        }
    }
    out
}

fn from_end_pair(field: FieldSpec, n: usize, v: &[Scalar]) -> Matrix {
    let nn = n * n;
    Matrix::from_fn(field, nn, nn, |r, c| {
        let (a, b, cc, d) = (r / n, r % n, c / n, c % n);
        v[(a * n + cc) * nn + b * n + d].clone()
    })
}

/// `Δ_F(x) = F(x⊗1)F⁻¹` without any check on `F` beyond invertibility.
pub fn coproduct_of(f: &LegMap) -> Result<CoproductMap> {
    let (v, m) = f_spaces(f)?;
    let field = f.field();
    let finv = f.inverse().map_err(|_| Error::Singular("F".into()))?;
    let (n, md) = (v.dim(), m.dim());
    let e = v.endomorphisms();
    let mut delta = Matrix::zeros(field, e.dim() * e.dim(), e.dim());
    for i in 0..n {
        for j in 0..n {
            // (E_ij ⊗ I_M) F⁻¹ moves the rows (j, ·) of F⁻¹ to rows (i, ·).
            let moved = Matrix::from_fn(field, n * md, n * n, |r, c| {
                if r / md == i {
                    finv.matrix().get(j * md + r % md, c).clone()
                } else {
                    field.zero()
                }
            });
            let x = f.matrix().mul(&moved)?;
            for (row, val) in to_end_pair(&x, n).into_iter().enumerate() {
                if !val.is_zero() {
                    delta.set(row, i * n + j, val);
                }
            }
        }
    }
    CoproductMap::new(v, LegMap::new(vec![e.clone()], vec![e.clone(), e], delta)?)
}

/// Unital algebra homomorphism and coassociativity, checked on matrix units.
pub fn check_coproduct(delta: &CoproductMap) -> Result<CheckReport> {
    let n = delta.v().dim();
    let field = delta.field();
    let mut report = CheckReport::new("coproduct");
    let images: Vec<Matrix> = (0..n * n).map(|k| delta.image_operator(k / n, k % n)).collect();
    let mut multiplicative = 0;
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                for l in 0..n {
                    let lhs = images[i * n + j].mul(&images[k * n + l])?;
                    let rhs = if j == k {
                        images[i * n + l].clone()
                    } else {
                        Matrix::zeros(field, n * n, n * n)
                    };
                    multiplicative += lhs.diff_count(&rhs)?;
                }
            }
        }
    }
    report.record("multiplicative", multiplicative);
    let mut unit = Matrix::zeros(field, n * n, n * n);
    for i in 0..n {
        unit = unit.add(&images[i * n + i])?;
    }
    report.record("unital", unit.diff_count(&Matrix::identity(field, n * n))?);
    let d = delta.delta();
    let e = [delta.v().endomorphisms()];
    let left = Word::build(field, &e, &[(d, &[0]), (d, &[0])])?;
    let right = Word::build(field, &e, &[(d, &[1]), (d, &[0])])?;
    report.record("coassociative", left.residual(&right)?);
    Ok(report)
}

/// `Δ_F` for an `F` satisfying the congruence, certified.
pub fn coproduct_from_solution(f: &LegMap) -> Result<CoproductMap> {
    extract_phi(f)?;
    let delta = coproduct_of(f)?;
    let report = check_coproduct(&delta)?;
    if !report.pass() {
        return Err(Error::CheckFailed(report));
    }
    Ok(delta)
}

/// Rebuilds `F` from a coproduct via the intertwiner space
/// `M = {T: V → V⊗V | Δ(x)T = Tx}` and the evaluation `F(v⊗T) = T(v)`.
pub fn solution_from_coproduct(delta: &CoproductMap) -> Result<MpeSolution> {
    let report = check_coproduct(delta)?;
    if report.violation("multiplicative").is_some() || report.violation("unital").is_some() {
        return Err(Error::NotUnitalHom(report));
    }
    if !report.pass() {
        return Err(Error::NotCoassociative(report));
    }
    let field = delta.field();
    let v = delta.v().clone();
    let n = v.dim();
    let nn = n * n;
    // Unknown T[s, c] at index s * n + c; one equation per (x, r, c).
    let mut system = Matrix::zeros(field, nn * nn * n, nn * n);
    for i in 0..n {
        for j in 0..n {
            let dx = delta.image_operator(i, j);
            let x = i * n + j;
            for r in 0..nn {
                for c in 0..n {
                    let eq = (x * nn + r) * n + c;
                    for s in 0..nn {
                        let a = dx.get(r, s);
                        if !a.is_zero() {
                            system.add_at(eq, s * n + c, a);
                        }
                    }
                    // (T E_ij)[r, c] = δ_{jc} T[r, i]
                    if c == j {
                        system.add_at(eq, r * n + i, &field.from_i64(-1));
                    }
                }
            }
        }
    }
    let intertwiners = Subspace::kernel(&system);
    let k = intertwiners.dim();
    if k == 0 || k != n {
        return Err(Error::EvaluationSingular {
            dim: n,
            intertwiners: k,
        });
    }
    let m = Space::new("M", k)?;
    let mut f = Matrix::zeros(field, nn, n * k);
    for (t, basis) in intertwiners.basis().iter().enumerate() {
        for vi in 0..n {
            for s in 0..nn {
                let x = &basis[s * n + vi];
                if !x.is_zero() {
                    f.set(s, vi * k + t, x.clone());
                }
            }
        }
    }
    let f = LegMap::new(vec![v.clone(), m], vec![v.clone(), v], f)?;
    if !f.is_invertible() {
        return Err(Error::EvaluationSingular {
            dim: n,
            intertwiners: k,
        });
    }
    let rebuilt = coproduct_of(&f)?;
    let mut cert = CheckReport::new("coproduct_roundtrip");
    cert.record("delta_F", rebuilt.delta().residual(delta.delta())?);
    if !cert.pass() {
        return Err(Error::CheckFailed(cert));
    }
    let phi = extract_phi(&f)?;
    MpeSolution::verified(f, phi)
}

/// `(tF, tΦ⁻¹t)`.
pub fn flip_solution(s: &MpeSolution) -> Result<MpeSolution> {
    s.require_verified()?;
    let field = s.field();
    let t_v = LegMap::flip(field, s.v(), s.v());
    let t_m = LegMap::flip(field, s.m(), s.m());
    let f = t_v.compose(s.f())?;
    let phi = LegMap::chain(&[&t_m, &s.phi().inverse()?, &t_m])?;
    MpeSolution::verified(f, phi)
}

/// `(Φ⁻¹t, Φ)` with `V = M`.
pub fn op_solution(phi: &PentagonSolution) -> Result<MpeSolution> {
    phi.require_verified()?;
    let t = LegMap::flip(phi.field(), phi.m(), phi.m());
    let f = phi.phi().inverse()?.compose(&t)?;
    MpeSolution::verified(f, phi.phi().clone())
}

/// `t23 (X ⊗ Y) t23` for `X: A⊗B → C⊗D`, `Y: A'⊗B' → C'⊗D'`, regrouped as a
/// map `(A⊗A')⊗(B⊗B') → (C⊗C')⊗(D⊗D')`.
pub fn interleave(x: &LegMap, y: &LegMap) -> Result<LegMap> {
    let (([a, b], [c, d]), ([a2, b2], [c2, d2])) = ((x.domain(), x.codomain()), (y.domain(), y.codomain()))
    else {
        return Err(Error::LegMismatch("interleave needs two-leg maps".into()));
    };
    let field = x.field();
    if field != y.field() {
        return Err(Error::FieldMismatch(field, y.field()));
    }
    let t_in = LegMap::permute_legs(
        field,
        &[0, 2, 1, 3],
        &[a.clone(), a2.clone(), b.clone(), b2.clone()],
    )?;
    let t_out = LegMap::permute_legs(
        field,
        &[0, 2, 1, 3],
        &[c.clone(), d.clone(), c2.clone(), d2.clone()],
    )?;
    let xy = x.kron(y)?;
    let m = LegMap::chain(&[&t_out, &xy, &t_in])?;
    m.regroup(vec![a.tensor(a2), b.tensor(b2)], vec![c.tensor(c2), d.tensor(d2)])
}

/// `(t23(F⊗F')t23, t23(Φ⊗Φ')t23)` on `(V⊗V', M⊗M')`.
pub fn tensor_solutions(s: &MpeSolution, s2: &MpeSolution) -> Result<MpeSolution> {
    s.require_verified()?;
    s2.require_verified()?;
    if s.field() != s2.field() {
        return Err(Error::FieldMismatch(s.field(), s2.field()));
    }
    MpeSolution::verified(interleave(s.f(), s2.f())?, interleave(s.phi(), s2.phi())?)
}

/// `t23 (Φ ⊗ I_{k^d ⊗ k^d}) t23` on `M ⊗ k^d`.
pub fn multiplicity(phi: &PentagonSolution, d: usize) -> Result<PentagonSolution> {
    phi.require_verified()?;
    if d == 0 {
        return Err(Error::ZeroMultiplicity);
    }
    let k = Space::new("K", d)?;
    let id = LegMap::identity(phi.field(), &[k.clone(), k]);
    PentagonSolution::verified(interleave(phi.phi(), &id)?)
}

fn check_transport_legs(map: &LegMap, from: &Space, what: &str) -> Result<Space> {
    match (map.domain(), map.codomain()) {
        ([a], [b]) if a == from => Ok(b.clone()),
        _ => Err(Error::LegMismatch(format!("{what} must be a map out of {from}"))),
    }
}

/// Checks `(f⊗f)F = F'(f⊗g)` and `(g⊗g)Φ = Φ'(g⊗g)`.
pub fn check_equivalence(s: &MpeSolution, s2: &MpeSolution, f: &LegMap, g: &LegMap) -> Result<CheckReport> {
    if check_transport_legs(f, s.v(), "f")? != *s2.v() {
        return Err(Error::LegMismatch("f must map V to V'".into()));
    }
    if check_transport_legs(g, s.m(), "g")? != *s2.m() {
        return Err(Error::LegMismatch("g must map M to M'".into()));
    }
    require_invertible(f, "f")?;
    require_invertible(g, "g")?;
    let ff = f.kron(f)?;
    let fg = f.kron(g)?;
    let gg = g.kron(g)?;
    let mut report = CheckReport::new("equivalence");
    report.record("F_transport", ff.compose(s.f())?.residual(&s2.f().compose(&fg)?)?);
    report.record(
        "phi_transport",
        gg.compose(s.phi())?.residual(&s2.phi().compose(&gg)?)?,
    );
    Ok(report)
}

/// `((f⊗f)F(f⊗g)⁻¹, (g⊗g)Φ(g⊗g)⁻¹)`.
pub fn transport(s: &MpeSolution, f: &LegMap, g: &LegMap) -> Result<MpeSolution> {
    check_transport_legs(f, s.v(), "f")?;
    check_transport_legs(g, s.m(), "g")?;
    let ff = f.kron(f)?;
    let fg = f.kron(g)?;
    let gg = g.kron(g)?;
    let new_f = LegMap::chain(&[&ff, s.f(), &fg.inverse()?])?;
    let new_phi = LegMap::chain(&[&gg, s.phi(), &gg.inverse()?])?;
    MpeSolution::new(new_f, new_phi)
}

/// `(g⊗g)Φ(g⊗g)⁻¹`.
pub fn transport_phi(phi: &PentagonSolution, g: &LegMap) -> Result<PentagonSolution> {
    check_transport_legs(g, phi.m(), "g")?;
    let gg = g.kron(g)?;
    PentagonSolution::new(LegMap::chain(&[&gg, phi.phi(), &gg.inverse()?])?)
}
