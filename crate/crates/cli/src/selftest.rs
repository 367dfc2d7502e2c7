//! The acceptance corpus, one report per criterion.

use pentagon_core::galois::{all_group_sets, galois_check, galois_mpe, GroupSet};
use pentagon_core::group::Group;
use pentagon_core::hopf::{
    check_hopf_axioms, dual_group_algebra, fundamental_iso, group_algebra, multiplicity_module,
    phi_from_hopf_module, phi_inverse_via_antipode, sweedler, HopfAlgebra, HopfModule,
};
use pentagon_core::pentagon::{
    check_mpe, check_pentagon, coproduct_from_solution, coproduct_of, extract_phi, flip_solution,
    multiplicity, op_solution, solution_from_coproduct, tensor_solutions, MpeSolution, PentagonSolution,
};
use pentagon_core::phi_module::{module_from_hopf, tensor_phi_modules, PhiModule};
use pentagon_core::reconstruction::{counit_certificate, mpe_reconstruct, reconstruct_hopf, roundtrip_with};
use pentagon_core::tensor::eval_poly;
use pentagon_core::{CheckReport, Error, FieldSpec, LegMap, Matrix, Result, Scalar, Space};

use crate::commands::{check_pe, conclude};
use crate::document::Document;
use crate::examples::{example, ExampleName};

pub const MAX_MULT: usize = 3;
/// Largest `dim V · dim M` sent through MPE reconstruction.
pub const MPE_LIMIT: usize = 144;
/// Largest `dim M` for the regular-module tensor checks.
pub const PHI_MODULE_LIMIT: usize = 8;

/// Titles of the criteria, in order.
pub const TITLES: [&str; 11] = [
    "pentagon_construction",
    "antipode_inverse",
    "fundamental_iso",
    "reconstruction_roundtrip",
    "counit_polynomial",
    "modified_pentagon",
    "coproduct_roundtrip",
    "galois_boundary",
    "mpe_reconstruction",
    "phi_modules",
    "cli",
];

pub fn corpus() -> Vec<(String, HopfAlgebra)> {
    let q = FieldSpec::Rational;
    let mut out = Vec::new();
    let mut push = |name: String, h: Result<HopfAlgebra>| out.push((name, h.expect("builtin Hopf algebra")));
    for n in 1..=6 {
        push(format!("c{n}"), group_algebra(&Group::cyclic(n), q));
    }
    push("s3".into(), group_algebra(&Group::symmetric3(), q));
    push("dual-c2".into(), dual_group_algebra(&Group::cyclic(2), q));
    push("dual-c4".into(), dual_group_algebra(&Group::cyclic(4), q));
    push("sweedler".into(), sweedler(q));
    for p in [3, 5, 7] {
        push(
            format!("sweedler-f{p}"),
            sweedler(FieldSpec::prime(p).expect("prime")),
        );
    }
    out
}

/// `(label, Hopf module)` for every corpus algebra and multiplicity.
pub fn modules() -> Vec<(String, HopfModule)> {
    let mut out = Vec::new();
    for (name, h) in corpus() {
        for d in 1..=MAX_MULT {
            let hm = multiplicity_module(&h, d).expect("multiplicity module");
            out.push((format!("{name} x{d}"), hm));
        }
    }
    out
}

fn renamed(label: &str, c: &CheckReport) -> CheckReport {
    CheckReport {
        name: label.to_string(),
        violations: c.violations.clone(),
    }
}

fn identity_residual(map: &LegMap) -> Result<usize> {
    map.residual(&LegMap::identity(map.field(), map.domain()))
}

/// Runs `f`, turning an error into a failing report.
fn guarded(title: &str, f: impl FnOnce(&mut CheckReport) -> Result<()>) -> CheckReport {
    let mut r = CheckReport::new(title);
    if let Err(e) = f(&mut r) {
        r.record(format!("error: {e}"), 1);
    }
    r
}

pub fn pentagon_construction() -> CheckReport {
    guarded(TITLES[0], |r| {
        for (label, hm) in modules() {
            let phi = phi_from_hopf_module(&hm)?;
            r.absorb(&renamed(&label, &check_pentagon(phi.phi())?));
        }
        Ok(())
    })
}

pub fn antipode_inverse() -> CheckReport {
    guarded(TITLES[1], |r| {
        for (label, hm) in modules() {
            let phi = phi_from_hopf_module(&hm)?;
            let inv = phi_inverse_via_antipode(&hm)?;
            r.record(
                format!("{label}.left"),
                identity_residual(&inv.compose(phi.phi())?)?,
            );
            r.record(
                format!("{label}.right"),
                identity_residual(&phi.phi().compose(&inv)?)?,
            );
        }
        Ok(())
    })
}

pub fn fundamental_iso_check() -> CheckReport {
    guarded(TITLES[2], |r| {
        for (label, hm) in modules() {
            let iso = fundamental_iso(&hm)?;
            r.absorb(&renamed(&label, &iso.report));
            r.record(
                format!("{label}.theta_theta_inv"),
                identity_residual(&iso.theta.compose(&iso.theta_inv)?)?,
            );
            r.record(
                format!("{label}.theta_inv_theta"),
                identity_residual(&iso.theta_inv.compose(&iso.theta)?)?,
            );
            r.require(
                format!("{label}.dimensions"),
                hm.hopf().dim() * iso.mh.dim() == hm.space().dim(),
            );
        }
        Ok(())
    })
}

pub fn reconstruction_roundtrip() -> CheckReport {
    guarded(TITLES[3], |r| {
        let mut dims = Vec::new();
        for (label, hm) in modules() {
            let d = hm.space().dim() / hm.hopf().dim();
            let phi = phi_from_hopf_module(&hm)?;
            let rec = reconstruct_hopf(&phi)?;
            for c in &rec.certificates {
                r.absorb(&renamed(&format!("{label}.{}", c.name), c));
            }
            r.absorb(&renamed(
                &format!("{label}.axioms"),
                &check_hopf_axioms(&rec.hopf)?,
            ));
            r.require(
                format!("{label}.dim_image"),
                rec.images.h.dim() == hm.hopf().dim(),
            );
            r.require(format!("{label}.dim_coinvariants"), rec.dim_coinvariants() == d);
            r.absorb(&renamed(
                &format!("{label}.factorization"),
                &roundtrip_with(&phi, &rec)?,
            ));
            dims.push((label, (rec.dim_h(), rec.dim_coinvariants())));
        }
        let lookup = |l: &str| dims.iter().find(|(x, _)| x == l).map(|(_, d)| *d);
        r.require("c2 x1 gives (2, 1)", lookup("c2 x1") == Some((2, 1)));
        r.require("sweedler x2 gives (4, 2)", lookup("sweedler x2") == Some((4, 2)));
        Ok(())
    })
}

pub fn counit_polynomial() -> CheckReport {
    guarded(TITLES[4], |r| {
        for (label, hm) in modules() {
            let phi = phi_from_hopf_module(&hm)?;
            let f = counit_certificate(&phi)?;
            let a = phi.phi().matrix();
            r.require(
                format!("{label}.zero_constant"),
                f.first().is_some_and(Scalar::is_zero),
            );
            r.record(
                format!("{label}.f_of_phi"),
                eval_poly(&f, a)?.diff_count(&Matrix::identity(a.field(), a.rows()))?,
            );
        }
        Ok(())
    })
}

fn flip_pair(field: FieldSpec, m: &Space) -> Result<MpeSolution> {
    MpeSolution::new(
        LegMap::flip(field, m, m),
        LegMap::identity(field, &[m.clone(), m.clone()]),
    )
}

/// Verified MPE solutions built from the corpus and the combinators.
pub fn mpe_corpus() -> Result<Vec<(String, MpeSolution)>> {
    let mut out = Vec::new();
    for (name, h) in corpus() {
        let phi = phi_from_hopf_module(&multiplicity_module(&h, 1)?)?;
        let pair = MpeSolution::diagonal(&phi)?;
        let t = flip_pair(h.field(), phi.m())?;
        out.push((format!("{name}.diagonal"), pair.clone()));
        out.push((format!("{name}.flip"), flip_solution(&pair)?));
        out.push((format!("{name}.op"), op_solution(&phi)?));
        out.push((
            format!("{name}.mult"),
            MpeSolution::diagonal(&multiplicity(&phi, 2)?)?,
        ));
        out.push((format!("{name}.tensor_t"), tensor_solutions(&pair, &t)?));
    }
    for n in 1..=3 {
        let m = Space::new("M", n)?;
        out.push((format!("t{n}"), flip_pair(FieldSpec::Rational, &m)?));
    }
    for n in 2..=4 {
        let mc = GroupSet::torsor(Group::cyclic(n)).coalgebra(FieldSpec::Rational)?;
        out.push((format!("torsor-c{n}"), galois_mpe(&mc)?));
    }
    let mc = GroupSet::torsor(Group::klein_four()).coalgebra(FieldSpec::Rational)?;
    out.push(("torsor-v4".into(), galois_mpe(&mc)?));
    Ok(out)
}

pub fn modified_pentagon() -> CheckReport {
    guarded(TITLES[5], |r| {
        for (label, s) in mpe_corpus()? {
            r.absorb(&renamed(&label, &check_mpe(s.f(), s.phi())?));
            let phi = extract_phi(s.f())?;
            r.absorb(&renamed(&format!("{label}.extracted"), &check_pentagon(&phi)?));
            r.record(format!("{label}.extracted_matches"), phi.residual(s.phi())?);
        }
        Ok(())
    })
}

fn coproduct_cases() -> Result<Vec<(String, LegMap)>> {
    let q = FieldSpec::Rational;
    let m = Space::new("M", 2)?;
    let c2 = phi_from_hopf_module(&multiplicity_module(&group_algebra(&Group::cyclic(2), q)?, 1)?)?;
    let sw = phi_from_hopf_module(&multiplicity_module(&sweedler(q)?, 1)?)?;
    Ok(vec![
        ("identity".into(), LegMap::identity(q, &[m.clone(), m.clone()])),
        ("flip".into(), LegMap::flip(q, &m, &m)),
        ("phi_c2".into(), c2.phi().clone()),
        ("phi_sweedler".into(), sw.phi().clone()),
    ])
}

/// Congruent corruptions must still give a coassociative coproduct, and at
/// least one of the first few single-entry corruptions must be rejected.
fn corruption_check(r: &mut CheckReport, label: &str, f: &LegMap) -> Result<()> {
    let cols = f.matrix().cols();
    let mut rejected = 0;
    for k in 0..f.matrix().data().len().min(16) {
        let mut m = f.matrix().clone();
        m.add_at(k / cols, k % cols, &f.field().one());
        let g = LegMap::new(f.domain().to_vec(), f.codomain().to_vec(), m)?;
        if !g.is_invertible() {
            continue;
        }
        match extract_phi(&g) {
            Ok(_) => {
                let d = coproduct_of(&g)?;
                let coassoc = pentagon_core::pentagon::check_coproduct(&d)?;
                r.absorb(&renamed(&format!("{label}.corrupt{k}.congruent_but"), &coassoc));
            }
            Err(Error::NotCongruent) => rejected += 1,
            Err(e) => return Err(e),
        }
    }
    r.require(format!("{label}.corruption_rejected"), rejected > 0);
    Ok(())
}

pub fn coproduct_roundtrip() -> CheckReport {
    guarded(TITLES[6], |r| {
        for (label, f) in coproduct_cases()? {
            let delta = coproduct_from_solution(&f)?;
            let s = solution_from_coproduct(&delta)?;
            r.absorb(&renamed(&format!("{label}.rebuilt"), s.report()));
            let again = coproduct_of(s.f())?;
            r.record(
                format!("{label}.same_coproduct"),
                again.delta().residual(delta.delta())?,
            );
            corruption_check(r, &label, &f)?;
        }
        Ok(())
    })
}

pub fn galois_boundary() -> CheckReport {
    guarded(TITLES[7], |r| {
        let groups = [
            ("c1", Group::cyclic(1)),
            ("c2", Group::cyclic(2)),
            ("c3", Group::cyclic(3)),
            ("c4", Group::cyclic(4)),
            ("v4", Group::klein_four()),
        ];
        for (gname, g) in groups {
            for n in 1..=4 {
                for (i, x) in all_group_sets(&g, n).into_iter().enumerate() {
                    let mc = x.coalgebra(FieldSpec::Rational)?;
                    let galois = galois_check(&mc)?.pass();
                    r.require(
                        format!("{gname} on {n} points #{i}"),
                        galois == (x.is_free() && x.is_transitive()),
                    );
                }
            }
        }
        let two = GroupSet::trivial(Group::cyclic(2), 2).coalgebra(FieldSpec::Rational)?;
        r.require(
            "trivial 2-point set is not Galois",
            matches!(galois_mpe(&two), Err(Error::NotGalois { .. })),
        );
        Ok(())
    })
}

pub fn mpe_reconstruction() -> CheckReport {
    guarded(TITLES[8], |r| {
        for (label, s) in mpe_corpus()? {
            if s.m().dim() * s.v().dim() > MPE_LIMIT {
                continue;
            }
            let rec = mpe_reconstruct(&s)?;
            r.require(format!("{label}.six_certificates"), rec.certificates.len() == 6);
            for c in &rec.certificates {
                r.absorb(&renamed(&format!("{label}.{}", c.name), c));
            }
        }
        Ok(())
    })
}

/// The character `g ↦ ζ^g` of `k[ℤ/n]` on a one-dimensional space.
fn character(h: &HopfAlgebra, zeta: i64) -> Result<LegMap> {
    let f = h.field();
    let x = Space::new("X", 1)?;
    Ok(LegMap::from_basis_action(
        f,
        &[h.space().clone(), x.clone()],
        &[x],
        |col| [(vec![0], f.from_i64(zeta.pow(col[0] as u32)))],
    ))
}

pub fn phi_modules() -> CheckReport {
    guarded(TITLES[9], |r| {
        for (label, hm) in modules() {
            let base = phi_from_hopf_module(&hm)?;
            let regular = module_from_hopf(&hm, hm.action())?;
            r.absorb(&renamed(&format!("{label}.regular"), regular.report()));
            r.record(
                format!("{label}.regular_is_phi"),
                regular.psi().residual(base.phi())?,
            );
            let triv = PhiModule::trivial(&base, Space::new("Y", 2)?)?;
            let t = tensor_phi_modules(&regular, &triv)?;
            r.absorb(&renamed(&format!("{label}.tensor_trivial"), t.report()));
            if hm.space().dim() <= PHI_MODULE_LIMIT {
                let t = tensor_phi_modules(&regular, &PhiModule::regular(&base)?)?;
                r.absorb(&renamed(&format!("{label}.tensor_regular"), t.report()));
            }
        }
        let gf7 = FieldSpec::prime(7)?;
        let h = group_algebra(&Group::cyclic(3), gf7)?;
        let hm = multiplicity_module(&h, 1)?;
        let chi = module_from_hopf(&hm, &character(&h, 2)?)?;
        r.absorb(&renamed("c3-gf7.character", chi.report()));
        let base: PentagonSolution = phi_from_hopf_module(&hm)?;
        let sq = tensor_phi_modules(&chi, &chi)?;
        r.absorb(&renamed("c3-gf7.character_squared", sq.report()));
        let triv = PhiModule::trivial(&base, Space::new("Y", 2)?)?;
        r.absorb(&renamed(
            "c3-gf7.character_trivial",
            tensor_phi_modules(&chi, &triv)?.report(),
        ));
        Ok(())
    })
}

pub fn cli_checks() -> CheckReport {
    let mut r = CheckReport::new(TITLES[10]);
    let names = [
        ExampleName::C1,
        ExampleName::C2,
        ExampleName::C3,
        ExampleName::S3,
        ExampleName::DualC2,
        ExampleName::Sweedler,
        ExampleName::TorsorC3,
        ExampleName::Nongalois2pt,
    ];
    for field in [FieldSpec::Rational, FieldSpec::Prime(5)] {
        for name in names {
            let label = format!("{} {field}", name.label());
            match example(name, 1, field) {
                Ok((doc, _)) => {
                    let text = doc.emit();
                    let again = Document::parse(&text).map(|d| d.emit());
                    r.require(
                        format!("{label}.emit_parse"),
                        again.as_deref().ok() == Some(text.as_str()),
                    );
                }
                Err(e) => {
                    r.record(format!("{label}.error: {e}"), 1);
                }
            }
        }
    }
    let malformed = Document::parse("{\"field\": {\"kind\": \"rational\"}, \"maps\": [").map(|_| ());
    r.require(
        "malformed JSON exits 2",
        matches!(&malformed, Err(e) if e.exit_code() == 2),
    );
    match example(ExampleName::C2, 1, FieldSpec::Rational) {
        Ok((mut doc, _)) => {
            let (code, _, _) = conclude("check-pe", check_pe(&doc));
            r.require("clean check-pe exits 0", code == 0);
            if let Some(phi) = doc.maps.get_mut("phi") {
                *phi = corrupt(phi);
            }
            let (code, report, _) = conclude("check-pe", check_pe(&doc));
            let counted = report
                .certificates
                .iter()
                .any(|c| c.violations.iter().any(|v| v.count > 0));
            r.require("corrupted check-pe exits 1", code == 1 && counted);
        }
        Err(e) => {
            r.record(format!("c2 example error: {e}"), 1);
        }
    }
    r
}

/// `map` with its first entry increased by one.
pub fn corrupt(map: &LegMap) -> LegMap {
    let mut m = map.matrix().clone();
    m.add_at(0, 0, &map.field().one());
    LegMap::new(map.domain().to_vec(), map.codomain().to_vec(), m).expect("same shape")
}

pub fn criterion(n: usize) -> CheckReport {
    match n {
        1 => pentagon_construction(),
        2 => antipode_inverse(),
        3 => fundamental_iso_check(),
        4 => reconstruction_roundtrip(),
        5 => counit_polynomial(),
        6 => modified_pentagon(),
        7 => coproduct_roundtrip(),
        8 => galois_boundary(),
        9 => mpe_reconstruction(),
        10 => phi_modules(),
        11 => cli_checks(),
        _ => panic!("no criterion {n}"),
    }
}

pub fn run_all() -> Vec<CheckReport> {
    (1..=TITLES.len()).map(criterion).collect()
}
