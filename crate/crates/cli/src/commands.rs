//! Command-line grammar and dispatch.

use std::ffi::OsString;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use pentagon_core::galois::{
    build_fv, check_module_coalgebra, check_paired_data, galois_check, galois_mpe, ModuleCoalgebra,
    PairedComoduleData,
};
use pentagon_core::hopf::{
    check_hopf_axioms, check_hopf_module, fundamental_iso, phi_from_hopf_module, phi_inverse_via_antipode,
    HopfAlgebra, HopfModule,
};
use pentagon_core::pentagon::{
    check_coproduct, check_equivalence, check_mpe, check_pentagon, coproduct_of, extract_phi, flip_solution,
    multiplicity, op_solution, solution_from_coproduct, tensor_solutions, CoproductMap, MpeSolution,
    PentagonSolution,
};
use pentagon_core::phi_module::{check_phi_module, tensor_phi_modules, PhiModule};
use pentagon_core::reconstruction::{counit_certificate, mpe_reconstruct, reconstruct_hopf, roundtrip_with};
use pentagon_core::{CheckReport, FieldSpec, LegMap, Space};

use crate::document::Document;
use crate::error::{CliError, CliResult};
use crate::examples::{example, put_hopf, put_module, ExampleName};
use crate::report::Report;
use crate::selftest;

#[derive(Parser, Debug)]
#[command(
    name = "pentagon",
    version,
    about = "Exact pentagon and modified pentagon equation computations"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Io {
    /// Input document.
    #[arg(long = "in", value_name = "FILE")]
    pub input: PathBuf,
    /// Where to write the produced document, if any.
    #[arg(long, value_name = "FILE")]
    pub out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum CombineOp {
    Flip,
    Op,
    Tensor,
    Mult,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check Φ12Φ13Φ23 = Φ23Φ12 for the map `phi`.
    CheckPe(Io),
    /// Check F12F13Φ23 = F23F12 for the maps `F` and `phi`.
    CheckMpe(Io),
    /// Recover Φ from `F`.
    ExtractPhi(Io),
    /// The coproduct Δ_F(x) = F(x⊗1)F⁻¹ of `F`, written as `delta`.
    Coproduct(Io),
    /// Rebuild (F, Φ) from a coproduct `delta` on End(V).
    ClassifyCoproduct(Io),
    /// Build a new solution from old ones.
    Combine {
        #[command(flatten)]
        io: Io,
        #[arg(long, value_enum)]
        op: CombineOp,
        /// Second solution, for `--op tensor`.
        #[arg(long, value_name = "FILE")]
        in2: Option<PathBuf>,
        #[arg(long = "mult-dim", default_value_t = 2)]
        mult_dim: usize,
    },
    /// Check that (f, g) from `--morph` carries the first pair to the second.
    Equiv {
        #[command(flatten)]
        io: Io,
        #[arg(long, value_name = "FILE")]
        in2: PathBuf,
        #[arg(long, value_name = "FILE")]
        morph: PathBuf,
    },
    /// Check the Hopf algebra axioms for mu, unit, delta, counit, antipode.
    HopfAxioms(Io),
    /// Check a Hopf module (action, coaction) and its fundamental isomorphism.
    HopfModule(Io),
    /// The pentagon solution of a Hopf module and its antipode inverse.
    HopfPhi(Io),
    /// Galois test for a module coalgebra (delta_L, counit_L, mu_L).
    Galois(Io),
    /// F_V = (I⊗π)(Δ_V⊗I) from paired comodule data.
    BuildFv(Io),
    /// Reconstruct a Hopf algebra and Hopf module from `phi`.
    Reconstruct(Io),
    /// Reconstruction data for the pair (`F`, `phi`).
    MpeReconstruct(Io),
    /// Check a module `psi` over `phi`.
    PhimodCheck(Io),
    /// Tensor the module `psi` with the module `psi` of `--in2`.
    PhimodTensor {
        #[command(flatten)]
        io: Io,
        #[arg(long, value_name = "FILE")]
        in2: PathBuf,
    },
    /// Write a named example.
    Example {
        #[arg(long, value_enum)]
        name: ExampleName,
        #[arg(long, default_value_t = 1)]
        mult: usize,
        #[arg(long, default_value = "Q")]
        field: String,
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
    },
    /// Run the acceptance corpus.
    Selftest,
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::CheckPe(_) => "check-pe",
            Command::CheckMpe(_) => "check-mpe",
            Command::ExtractPhi(_) => "extract-phi",
            Command::Coproduct(_) => "coproduct",
            Command::ClassifyCoproduct(_) => "classify-coproduct",
            Command::Combine { .. } => "combine",
            Command::Equiv { .. } => "equiv",
            Command::HopfAxioms(_) => "hopf-axioms",
            Command::HopfModule(_) => "hopf-module",
            Command::HopfPhi(_) => "hopf-phi",
            Command::Galois(_) => "galois",
            Command::BuildFv(_) => "build-fv",
            Command::Reconstruct(_) => "reconstruct",
            Command::MpeReconstruct(_) => "mpe-reconstruct",
            Command::PhimodCheck(_) => "phimod-check",
            Command::PhimodTensor { .. } => "phimod-tensor",
            Command::Example { .. } => "example",
            Command::Selftest => "selftest",
        }
    }

    fn out(&self) -> Option<&Path> {
        match self {
            Command::CheckPe(io)
            | Command::CheckMpe(io)
            | Command::ExtractPhi(io)
            | Command::Coproduct(io)
            | Command::ClassifyCoproduct(io)
            | Command::Combine { io, .. }
            | Command::Equiv { io, .. }
            | Command::HopfAxioms(io)
            | Command::HopfModule(io)
            | Command::HopfPhi(io)
            | Command::Galois(io)
            | Command::BuildFv(io)
            | Command::Reconstruct(io)
            | Command::MpeReconstruct(io)
            | Command::PhimodCheck(io)
            | Command::PhimodTensor { io, .. } => io.out.as_deref(),
            Command::Example { out, .. } => out.as_deref(),
            Command::Selftest => None,
        }
    }
}

/// Exit code and captured streams of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn read_document(path: &Path) -> CliResult<Document> {
    let text = fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    Document::parse(&text)
}

fn write_document(path: &Path, doc: &Document) -> CliResult<()> {
    fs::write(path, doc.emit()).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

/// Turns a command result into the printed report and exit code.
pub fn conclude(command: &str, result: CliResult<Report>) -> (i32, Report, Option<String>) {
    match result {
        Ok(r) => (if r.pass() { 0 } else { 1 }, r, None),
        Err(e) => {
            let mut r = Report::new(command);
            if let CliError::Core(core) = &e {
                if let Some(c) = core.report() {
                    r.cert(c.clone());
                }
            }
            r.error = Some(e.to_string());
            (e.exit_code(), r, Some(format!("error: {e}\n")))
        }
    }
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    code: 2,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Outcome {
                    code: 0,
                    stdout: text,
                    stderr: String::new(),
                }
            };
        }
    };
    let name = cli.command.name();
    let result = execute(&cli.command).and_then(|r| {
        if let (Some(path), Some(doc)) = (cli.command.out(), &r.outputs) {
            write_document(path, doc)?;
        }
        Ok(r)
    });
    let (code, report, err) = conclude(name, result);
    Outcome {
        code,
        stdout: report.render(),
        stderr: err.unwrap_or_default(),
    }
}

pub fn execute(cmd: &Command) -> CliResult<Report> {
    let name = cmd.name();
    match cmd {
        Command::CheckPe(io) => check_pe(&read_document(&io.input)?),
        Command::CheckMpe(io) => check_mpe_doc(&read_document(&io.input)?),
        Command::ExtractPhi(io) => extract(&read_document(&io.input)?),
        Command::Coproduct(io) => coproduct(&read_document(&io.input)?),
        Command::ClassifyCoproduct(io) => classify(&read_document(&io.input)?),
        Command::Combine {
            io,
            op,
            in2,
            mult_dim,
        } => {
            let doc = read_document(&io.input)?;
            let other = in2.as_deref().map(read_document).transpose()?;
            combine(&doc, *op, other.as_ref(), *mult_dim)
        }
        Command::Equiv { io, in2, morph } => equiv(
            &read_document(&io.input)?,
            &read_document(in2)?,
            &read_document(morph)?,
        ),
        Command::HopfAxioms(io) => hopf_axioms(&read_document(&io.input)?),
        Command::HopfModule(io) => hopf_module(&read_document(&io.input)?),
        Command::HopfPhi(io) => hopf_phi(&read_document(&io.input)?),
        Command::Galois(io) => galois(&read_document(&io.input)?),
        Command::BuildFv(io) => build_fv_doc(&read_document(&io.input)?),
        Command::Reconstruct(io) => reconstruct(&read_document(&io.input)?),
        Command::MpeReconstruct(io) => mpe_reconstruct_doc(&read_document(&io.input)?),
        Command::PhimodCheck(io) => phimod_check(&read_document(&io.input)?),
        Command::PhimodTensor { io, in2 } => phimod_tensor(&read_document(&io.input)?, &read_document(in2)?),
        Command::Example {
            name: ex,
            mult,
            field,
            out: _,
        } => {
            let field: FieldSpec = field.parse()?;
            let (doc, certs) = example(*ex, *mult, field)?;
            let mut r = Report::new(name);
            r.certificates = certs;
            r.note("example", ex.label()).note("field", field.to_string());
            r.outputs = Some(doc);
            Ok(r)
        }
        Command::Selftest => {
            let mut r = Report::new(name);
            for c in selftest::run_all() {
                r.cert(c);
            }
            Ok(r)
        }
    }
}

fn solution(doc: &Document) -> CliResult<MpeSolution> {
    Ok(MpeSolution::new(doc.get("F")?.clone(), doc.get("phi")?.clone())?)
}

fn pentagon(doc: &Document) -> CliResult<PentagonSolution> {
    Ok(PentagonSolution::new(doc.get("phi")?.clone())?)
}

fn verified(doc: &Document) -> CliResult<PentagonSolution> {
    let s = pentagon(doc)?;
    s.require_verified()?;
    Ok(s)
}

fn solution_doc(field: FieldSpec, s: &MpeSolution) -> CliResult<Document> {
    Document::new(field).with("F", s.f())?.with("phi", s.phi())
}

pub fn check_pe(doc: &Document) -> CliResult<Report> {
    let s = pentagon(doc)?;
    let mut r = Report::new("check-pe");
    r.note("dim_M", s.m().dim());
    r.cert(s.report().clone());
    Ok(r)
}

pub fn check_mpe_doc(doc: &Document) -> CliResult<Report> {
    let s = solution(doc)?;
    let mut r = Report::new("check-mpe");
    r.note("dim_V", s.v().dim()).note("dim_M", s.m().dim());
    r.cert(s.report().clone());
    Ok(r)
}

fn extract(doc: &Document) -> CliResult<Report> {
    let f = doc.get("F")?;
    let phi = extract_phi(f)?;
    let mut r = Report::new("extract-phi");
    r.cert(check_pentagon(&phi)?).cert(check_mpe(f, &phi)?);
    r.outputs = Some(Document::new(doc.field).with("F", f)?.with("phi", &phi)?);
    Ok(r)
}

fn coproduct(doc: &Document) -> CliResult<Report> {
    let d = coproduct_of(doc.get("F")?)?;
    let mut r = Report::new("coproduct");
    r.note("dim_V", d.v().dim());
    r.cert(check_coproduct(&d)?);
    r.outputs = Some(Document::new(doc.field).with("delta", d.delta())?);
    Ok(r)
}

/// `V` for a coproduct on `End_V`: the declared space `V` when present,
/// otherwise a fresh space of the square-root dimension.
fn base_space(doc: &Document, end: &Space) -> CliResult<Space> {
    let n = (1..=end.dim()).find(|k| k * k >= end.dim()).unwrap_or(1);
    if n * n != end.dim() {
        return Err(CliError::Document(format!("{end} is not an endomorphism space")));
    }
    let label = end.label().strip_prefix("End_").unwrap_or("V");
    match doc.spaces.get(label) {
        Some(&d) if d != n => Err(CliError::Document(format!(
            "space {label} has dimension {d}, expected {n}"
        ))),
        _ => Ok(Space::new(label, n)?),
    }
}

fn classify(doc: &Document) -> CliResult<Report> {
    let delta = doc.get("delta")?;
    let [end] = delta.domain() else {
        return Err(CliError::Document(
            "delta must act on a single space End_V".into(),
        ));
    };
    let v = base_space(doc, end)?;
    let d = CoproductMap::new(v, delta.clone())?;
    let mut r = Report::new("classify-coproduct");
    r.cert(check_coproduct(&d)?);
    let s = solution_from_coproduct(&d)?;
    r.cert(s.report().clone());
    r.note("dim_V", s.v().dim()).note("dim_M", s.m().dim());
    r.outputs = Some(solution_doc(doc.field, &s)?);
    Ok(r)
}

fn combine(doc: &Document, op: CombineOp, other: Option<&Document>, d: usize) -> CliResult<Report> {
    let mut r = Report::new("combine");
    let s = match op {
        CombineOp::Flip => {
            let s = solution(doc)?;
            s.require_verified()?;
            flip_solution(&s)?
        }
        CombineOp::Op => op_solution(&verified(doc)?)?,
        CombineOp::Tensor => {
            let other = other.ok_or_else(|| CliError::Usage("--op tensor needs --in2".into()))?;
            let (a, b) = (solution(doc)?, solution(other)?);
            a.require_verified()?;
            b.require_verified()?;
            tensor_solutions(&a, &b)?
        }
        CombineOp::Mult => {
            let m = multiplicity(&verified(doc)?, d)?;
            r.cert(m.report().clone());
            r.note("dim_M", m.m().dim());
            r.outputs = Some(Document::new(doc.field).with("phi", m.phi())?);
            return Ok(r);
        }
    };
    r.cert(s.report().clone());
    r.note("dim_V", s.v().dim()).note("dim_M", s.m().dim());
    r.outputs = Some(solution_doc(doc.field, &s)?);
    Ok(r)
}

fn equiv(a: &Document, b: &Document, morph: &Document) -> CliResult<Report> {
    let (s, t) = (solution(a)?, solution(b)?);
    let mut r = Report::new("equiv");
    r.cert(check_equivalence(&s, &t, morph.get("f")?, morph.get("g")?)?);
    Ok(r)
}

fn read_hopf(doc: &Document) -> CliResult<HopfAlgebra> {
    Ok(HopfAlgebra::new(
        doc.get("mu")?.clone(),
        doc.get("unit")?.clone(),
        doc.get("delta")?.clone(),
        doc.get("counit")?.clone(),
        doc.get("antipode")?.clone(),
    )?)
}

fn read_module(doc: &Document, h: &HopfAlgebra) -> CliResult<HopfModule> {
    Ok(HopfModule::new(
        h.clone(),
        doc.get("action")?.clone(),
        doc.get("coaction")?.clone(),
    )?)
}

fn read_coalgebra(doc: &Document, h: &HopfAlgebra) -> CliResult<ModuleCoalgebra> {
    Ok(ModuleCoalgebra::new(
        h.clone(),
        doc.get("delta_L")?.clone(),
        doc.get("counit_L")?.clone(),
        doc.get("mu_L")?.clone(),
    )?)
}

fn hopf_axioms(doc: &Document) -> CliResult<Report> {
    let h = read_hopf(doc)?;
    let mut r = Report::new("hopf-axioms");
    r.note("dim_H", h.dim());
    r.cert(check_hopf_axioms(&h)?);
    Ok(r)
}

fn hopf_module(doc: &Document) -> CliResult<Report> {
    let h = read_hopf(doc)?;
    let hm = read_module(doc, &h)?;
    let mut r = Report::new("hopf-module");
    let axioms = check_hopf_axioms(&h)?;
    let module = check_hopf_module(&hm)?;
    let ok = axioms.pass() && module.pass();
    r.cert(axioms).cert(module);
    r.note("dim_H", h.dim()).note("dim_M", hm.space().dim());
    if ok {
        let iso = fundamental_iso(&hm)?;
        r.note("dim_coinv", iso.mh.dim());
        r.cert(iso.report.clone());
        r.outputs = Some(
            Document::new(doc.field)
                .with("theta", &iso.theta)?
                .with("theta_inv", &iso.theta_inv)?,
        );
    }
    Ok(r)
}

fn hopf_phi(doc: &Document) -> CliResult<Report> {
    let h = read_hopf(doc)?;
    let hm = read_module(doc, &h)?;
    let phi = phi_from_hopf_module(&hm)?;
    let inv = phi_inverse_via_antipode(&hm)?;
    let mut r = Report::new("hopf-phi");
    let id = LegMap::identity(doc.field, phi.phi().domain());
    let mut inverse = CheckReport::new("antipode_inverse");
    inverse
        .record("left", phi.phi().compose(&inv)?.residual(&id)?)
        .record("right", inv.compose(phi.phi())?.residual(&id)?);
    r.cert(phi.report().clone()).cert(inverse);
    r.note("dim_M", phi.m().dim());
    r.outputs = Some(
        Document::new(doc.field)
            .with("phi", phi.phi())?
            .with("phi_inv", &inv)?,
    );
    Ok(r)
}

fn galois(doc: &Document) -> CliResult<Report> {
    let h = read_hopf(doc)?;
    let mc = read_coalgebra(doc, &h)?;
    let mut r = Report::new("galois");
    let checks = [
        check_hopf_axioms(&h)?,
        check_module_coalgebra(&mc)?,
        galois_check(&mc)?,
    ];
    let ok = checks.iter().all(CheckReport::pass);
    for c in checks {
        r.cert(c);
    }
    r.note("dim_L", mc.space().dim());
    if ok {
        let s = galois_mpe(&mc)?;
        r.cert(s.report().clone());
        r.outputs = Some(solution_doc(doc.field, &s)?);
    }
    Ok(r)
}

fn build_fv_doc(doc: &Document) -> CliResult<Report> {
    let h = read_hopf(doc)?;
    let pd = PairedComoduleData::new(
        read_coalgebra(doc, &h)?,
        read_module(doc, &h)?,
        doc.get("delta_V")?.clone(),
        doc.get("pi")?.clone(),
        doc.get_opt("nu").cloned(),
    )?;
    let mut r = Report::new("build-fv");
    r.cert(check_paired_data(&pd)?);
    let s = build_fv(&pd)?;
    r.cert(s.report().clone());
    r.note("dim_V", s.v().dim()).note("dim_M", s.m().dim());
    r.outputs = Some(solution_doc(doc.field, &s)?);
    Ok(r)
}

fn reconstruct(doc: &Document) -> CliResult<Report> {
    let phi = verified(doc)?;
    let rec = reconstruct_hopf(&phi)?;
    let mut r = Report::new("reconstruct");
    for c in &rec.certificates {
        r.cert(c.clone());
    }
    let mut out = Document::new(doc.field);
    put_hopf(&mut out, &rec.hopf)?;
    put_module(&mut out, &rec.module)?;
    if rec.iso.is_some() {
        r.cert(roundtrip_with(&phi, &rec)?);
    }
    if let Some(theta) = rec.theta() {
        out.insert("theta", theta)?;
    }
    // an Err here means the polynomial identity did not verify
    let poly = counit_certificate(&phi)?;
    r.note("dim_H", rec.dim_h())
        .note("dim_M", phi.m().dim())
        .note("dim_coinv", rec.dim_coinvariants())
        .note("dim_R", rec.r_basis().len())
        .note(
            "counit_polynomial",
            poly.iter().map(ToString::to_string).collect::<Vec<_>>(),
        );
    r.outputs = Some(out);
    Ok(r)
}

fn mpe_reconstruct_doc(doc: &Document) -> CliResult<Report> {
    let s = solution(doc)?;
    let rec = mpe_reconstruct(&s)?;
    let mut r = Report::new("mpe-reconstruct");
    for c in rec.hopf.certificates.iter().chain(&rec.certificates) {
        r.cert(c.clone());
    }
    r.note("dim_LF", rec.lf_basis.len())
        .note("dim_RF", rec.rf_basis.len())
        .note("dim_H", rec.hopf.dim_h());
    r.outputs = Some(
        Document::new(doc.field)
            .with("delta_FPhi", &rec.delta_fphi)?
            .with("coaction_V", &rec.coaction_v)?
            .with("mu_F", &rec.action)?,
    );
    Ok(r)
}

fn phimod_check(doc: &Document) -> CliResult<Report> {
    let base = verified(doc)?;
    let mut r = Report::new("phimod-check");
    r.cert(check_phi_module(&base, doc.get("psi")?)?);
    Ok(r)
}

fn phimod_tensor(a: &Document, b: &Document) -> CliResult<Report> {
    let base = verified(a)?;
    let x = PhiModule::verified(base.clone(), a.get("psi")?.clone())?;
    let y = PhiModule::verified(base.clone(), b.get("psi")?.clone())?;
    let t = tensor_phi_modules(&x, &y)?;
    let mut r = Report::new("phimod-tensor");
    r.cert(t.report().clone());
    r.note("dim_X", t.space().dim());
    r.outputs = Some(
        Document::new(a.field)
            .with("phi", base.phi())?
            .with("psi", t.psi())?,
    );
    Ok(r)
}
