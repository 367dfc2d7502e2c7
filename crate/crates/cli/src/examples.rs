//! Named example documents.

use clap::ValueEnum;
use pentagon_core::galois::{check_module_coalgebra, galois_check, galois_mpe, GroupSet, ModuleCoalgebra};
use pentagon_core::group::Group;
use pentagon_core::hopf::{
    check_hopf_axioms, check_hopf_module, dual_group_algebra, group_algebra, multiplicity_module,
    phi_from_hopf_module, sweedler, trivial_module, HopfAlgebra, HopfModule,
};
use pentagon_core::{CheckReport, FieldSpec};
use serde_json::json;

use crate::document::Document;
use crate::error::{CliError, CliResult};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ExampleName {
    C1,
    C2,
    C3,
    C4,
    C6,
    S3,
    DualC2,
    DualC4,
    Sweedler,
    TorsorC3,
    #[value(name = "nongalois-2pt")]
    Nongalois2pt,
}

impl ExampleName {
    pub fn label(self) -> &'static str {
        match self {
            ExampleName::C1 => "c1",
            ExampleName::C2 => "c2",
            ExampleName::C3 => "c3",
            ExampleName::C4 => "c4",
            ExampleName::C6 => "c6",
            ExampleName::S3 => "s3",
            ExampleName::DualC2 => "dual-c2",
            ExampleName::DualC4 => "dual-c4",
            ExampleName::Sweedler => "sweedler",
            ExampleName::TorsorC3 => "torsor-c3",
            ExampleName::Nongalois2pt => "nongalois-2pt",
        }
    }
}

pub fn hopf_algebra(name: ExampleName, field: FieldSpec) -> CliResult<HopfAlgebra> {
    let h = match name {
        ExampleName::C1 => group_algebra(&Group::cyclic(1), field),
        ExampleName::C2 | ExampleName::Nongalois2pt => group_algebra(&Group::cyclic(2), field),
        ExampleName::C3 | ExampleName::TorsorC3 => group_algebra(&Group::cyclic(3), field),
        ExampleName::C4 => group_algebra(&Group::cyclic(4), field),
        ExampleName::C6 => group_algebra(&Group::cyclic(6), field),
        ExampleName::S3 => group_algebra(&Group::symmetric3(), field),
        ExampleName::DualC2 => dual_group_algebra(&Group::cyclic(2), field),
        ExampleName::DualC4 => dual_group_algebra(&Group::cyclic(4), field),
        ExampleName::Sweedler => sweedler(field),
    };
    Ok(h?)
}

pub fn put_hopf(doc: &mut Document, h: &HopfAlgebra) -> CliResult<()> {
    doc.insert("mu", h.mu())?;
    doc.insert("unit", h.unit())?;
    doc.insert("delta", h.delta())?;
    doc.insert("counit", h.counit())?;
    doc.insert("antipode", h.antipode())
}

pub fn put_module(doc: &mut Document, hm: &HopfModule) -> CliResult<()> {
    doc.insert("action", hm.action())?;
    doc.insert("coaction", hm.coaction())
}

pub fn put_coalgebra(doc: &mut Document, mc: &ModuleCoalgebra) -> CliResult<()> {
    doc.insert("delta_L", mc.delta())?;
    doc.insert("counit_L", mc.counit())?;
    doc.insert("mu_L", mc.action())
}

/// Builds the named example with its certificates.
pub fn example(name: ExampleName, mult: usize, field: FieldSpec) -> CliResult<(Document, Vec<CheckReport>)> {
    let h = hopf_algebra(name, field)?;
    let mut doc = Document::new(field);
    doc.meta.insert("example".into(), json!(name.label()));
    let mut certs = vec![check_hopf_axioms(&h)?];
    put_hopf(&mut doc, &h)?;
    match name {
        ExampleName::TorsorC3 | ExampleName::Nongalois2pt => {
            if mult != 1 {
                return Err(CliError::Usage(format!(
                    "--mult is not available for {}",
                    name.label()
                )));
            }
            let g = if name == ExampleName::TorsorC3 { 3 } else { 2 };
            let x = if name == ExampleName::TorsorC3 {
                GroupSet::torsor(Group::cyclic(g))
            } else {
                GroupSet::trivial(Group::cyclic(g), 2)
            };
            let mc = x.coalgebra(field)?;
            certs.push(check_module_coalgebra(&mc)?);
            put_coalgebra(&mut doc, &mc)?;
            // V = L with π = μ_L over the trivial Hopf module, ready for build-fv
            let hm = trivial_module(&h)?;
            put_module(&mut doc, &hm)?;
            doc.insert("delta_V", mc.delta())?;
            doc.insert("pi", mc.action())?;
            if name == ExampleName::TorsorC3 {
                let s = galois_mpe(&mc)?;
                certs.push(s.report().clone());
                doc.insert("F", s.f())?;
                doc.insert("phi", s.phi())?;
            } else {
                doc.meta.insert("galois".into(), json!(galois_check(&mc)?.pass()));
            }
        }
        _ => {
            let hm = multiplicity_module(&h, mult)?;
            certs.push(check_hopf_module(&hm)?);
            let phi = phi_from_hopf_module(&hm)?;
            certs.push(phi.report().clone());
            put_module(&mut doc, &hm)?;
            doc.insert("phi", phi.phi())?;
            // the diagonal pair (Φ, Φ)
            doc.insert("F", phi.phi())?;
            doc.meta.insert("multiplicity".into(), json!(mult));
        }
    }
    Ok((doc, certs))
}
