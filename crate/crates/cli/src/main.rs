mod input;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgAction, Args, Parser, Subcommand};
use hopf_core::classify::{
    enumerate_structures, existence_warning, reproduce_case_table, CaseReport, EnumerateOptions,
    StructureJson, StructureRecord,
};
use hopf_core::group::GroupEltRecord;
use hopf_core::hopf::{BiholGroup, FunctionField, HopfSurface, SurfaceClass};
use hopf_core::normalform::normal_form;
use hopf_core::scalars::{EigenBasis, GaussRat};
use hopf_core::sections::{line_bundle_sections, proj_bundle_sections, Bundle, SectionFamily};
use hopf_core::verify::{
    check_action, check_completeness, check_equivariance, check_group_axioms, check_immersion,
    check_sections, CompletenessReport, VerifyConfig, VerifyReport,
};
use serde::{Deserialize, Serialize};

use input::{read_spec, SpecFile};

#[derive(Parser)]
#[command(
    name = "hopf",
    version,
    about = "Classify O(n)-structures on primary Hopf surfaces"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Class, function field and biholomorphism group of a surface.
    Classify(Common),
    /// All structures on a surface in a given degree.
    Structures(Common),
    /// Group axioms, equivariance, immersion, completeness and sections.
    Verify(Common),
    /// Conjugacy normal form of the spec's "element".
    NormalForm(Common),
    /// Meromorphic sections of the spec's "bundle".
    Sections(Common),
    /// The symbolic case table of hyperresonant developing maps.
    Cases(CaseArgs),
}

#[derive(Args)]
struct Common {
    /// JSON input file.
    #[arg(long)]
    spec: Option<PathBuf>,
    /// Degree of the model line bundle; overrides the spec.
    #[arg(long)]
    n: Option<usize>,
    /// Hyperresonant parameter lists as JSON, e.g. '[[[1,1,0,1],[2,1,0,1]]]'.
    #[arg(long)]
    params: Option<String>,
    /// Degree bound of the brute-force completeness search.
    #[arg(long)]
    deg_bound: Option<usize>,
    #[arg(long)]
    samples: Option<usize>,
    /// Equivariance and section residual tolerance.
    #[arg(long)]
    tol: Option<f64>,
    #[arg(long)]
    seed: Option<u64>,
    /// Run the numeric checks on emitted records.
    #[arg(long)]
    verify: bool,
    /// Emit JSON; `--json false` prints one `key: value` line per field.
    #[arg(long, default_value_t = true, action = ArgAction::Set)]
    json: bool,
}

#[derive(Args)]
struct CaseArgs {
    #[arg(long, default_value_t = 1)]
    n: i64,
    #[arg(long, default_value_t = 1)]
    m1: i64,
    #[arg(long, default_value_t = 1)]
    m2: i64,
    #[arg(long, default_value_t = true, action = ArgAction::Set)]
    json: bool,
}

enum Failure {
    Input(String),
    Verification,
}

impl From<String> for Failure {
    fn from(s: String) -> Self {
        Failure::Input(s)
    }
}

impl From<&str> for Failure {
    fn from(s: &str) -> Self {
        Failure::Input(s.to_string())
    }
}

fn input_err(context: &str) -> impl Fn(&dyn std::fmt::Display) -> Failure + '_ {
    move |e| Failure::Input(format!("{}: {}", context, e))
}

#[derive(Serialize, Deserialize)]
pub struct ClassifyOutput {
    #[serde(flatten)]
    pub class: SurfaceClass,
    pub function_field: FunctionField,
    pub bihol_group: BiholGroup,
}

#[derive(Serialize, Deserialize)]
pub struct StructureChecks {
    pub provenance: String,
    pub equivariance: VerifyReport,
    pub immersion: VerifyReport,
}

#[derive(Serialize, Deserialize)]
pub struct StructuresOutput {
    pub n: usize,
    pub class: SurfaceClass,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub warning: Option<String>,
    pub structures: Vec<StructureJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub verification: Option<Vec<StructureChecks>>,
}

#[derive(Serialize, Deserialize)]
pub struct VerifyOutput {
    pub passed: bool,
    pub n: usize,
    pub group_axioms: VerifyReport,
    pub action: VerifyReport,
    pub structures: Vec<StructureChecks>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub completeness: Option<CompletenessReport>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sections: Option<VerifyReport>,
}

#[derive(Serialize, Deserialize)]
pub struct CasesOutput {
    #[serde(flatten)]
    pub report: CaseReport,
    /// One rendered line per row.
    pub table: Vec<String>,
}

#[derive(Serialize, Deserialize)]
pub struct NormalFormOutput {
    pub input: GroupEltRecord,
    pub normal_form: GroupEltRecord,
    pub unique: bool,
    pub swap_applied: bool,
}

#[derive(Serialize, Deserialize)]
pub struct SectionsOutput {
    pub family: SectionFamily,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub verification: Option<VerifyReport>,
}

/// Group-axiom trials run by `verify`.
const AXIOM_TRIALS: usize = 200;
/// Random members per section row checked by `verify` and `sections --verify`.
const SECTION_INSTANTIATIONS: usize = 10;
const ACTION_TOL: f64 = 1e-10;

impl Common {
    fn spec(&self) -> Result<SpecFile, Failure> {
        Ok(match &self.spec {
            Some(p) => read_spec(p)?,
            None => SpecFile::default(),
        })
    }

    fn n(&self, spec: &SpecFile) -> Result<usize, Failure> {
        let n = self
            .n
            .or(spec.n)
            .ok_or("degree n not given (use --n or \"n\" in the spec)")?;
        if n == 0 {
            return Err("n must be positive".into());
        }
        Ok(n)
    }

    fn options(&self, spec: &SpecFile) -> Result<EnumerateOptions, Failure> {
        let params = match &self.params {
            Some(text) => serde_json::from_str::<Vec<Vec<GaussRat>>>(text)
                .map_err(|e| input_err("--params")(&e))?,
            None => spec.params.clone(),
        };
        Ok(EnumerateOptions {
            params,
            directions: spec.directions.clone(),
        })
    }

    fn config(&self, spec: &SpecFile) -> Result<VerifyConfig, Failure> {
        let mut cfg = spec.verify.clone().unwrap_or_default();
        if let Some(s) = self.samples {
            cfg.samples = s;
        }
        if let Some(t) = self.tol {
            cfg.tol_equiv = t;
        }
        if let Some(s) = self.seed {
            cfg.seed = s;
        }
        cfg.validate().map_err(|e| input_err("verify config")(&e))?;
        Ok(cfg)
    }
}

fn emit<T: Serialize>(value: &T, json: bool) {
    let v = serde_json::to_value(value).expect("output serializes");
    if json {
        println!(
            "{}",
            serde_json::to_string_pretty(&v).expect("output serializes")
        );
        return;
    }
    match v {
        serde_json::Value::Object(map) => {
            for (k, x) in map {
                println!("{}: {}", k, x);
            }
        }
        other => println!("{}", other),
    }
}

fn structure_checks(
    rec: &StructureRecord,
    s: &HopfSurface,
    cfg: &VerifyConfig,
) -> Result<StructureChecks, Failure> {
    Ok(StructureChecks {
        provenance: rec.provenance.clone(),
        equivariance: check_equivariance(rec, s, cfg).map_err(|e| input_err("verify")(&e))?,
        immersion: check_immersion(rec, Some(s), cfg).map_err(|e| input_err("verify")(&e))?,
    })
}

fn all_pass(checks: &[StructureChecks]) -> bool {
    checks
        .iter()
        .all(|c| c.equivariance.passed && c.immersion.passed)
}

fn warn(s: &HopfSurface, n: usize) -> Option<String> {
    let w = existence_warning(s, n);
    if let Some(w) = &w {
        eprintln!("warning: {}", w);
    }
    w
}

fn structures(args: &Common) -> Result<(), Failure> {
    let spec = args.spec()?;
    let s = spec.surface()?;
    let n = args.n(&spec)?;
    let warning = warn(&s, n);
    let recs = enumerate_structures(&s, n, &args.options(&spec)?)
        .map_err(|e| input_err("structures")(&e))?;
    let verification = if args.verify {
        let cfg = args.config(&spec)?;
        Some(
            recs.iter()
                .map(|r| structure_checks(r, &s, &cfg))
                .collect::<Result<Vec<_>, _>>()?,
        )
    } else {
        None
    };
    let ok = verification.as_deref().is_none_or(all_pass);
    let out = StructuresOutput {
        n,
        class: s.classify(),
        warning,
        structures: recs.iter().map(|r| r.to_json()).collect(),
        verification,
    };
    emit(&out, args.json);
    if ok {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}

fn verify(args: &Common) -> Result<(), Failure> {
    let spec = args.spec()?;
    let s = spec.surface()?;
    let n = args.n(&spec)?;
    let cfg = args.config(&spec)?;
    warn(&s, n);
    let vf = input_err("verify");
    let group_axioms = check_group_axioms(n, AXIOM_TRIALS, cfg.seed).map_err(|e| vf(&e))?;
    let action = check_action(n, AXIOM_TRIALS, cfg.seed, ACTION_TOL).map_err(|e| vf(&e))?;
    let opts = args.options(&spec)?;
    let recs = enumerate_structures(&s, n, &opts).map_err(|e| vf(&e))?;
    let structures = recs
        .iter()
        .map(|r| structure_checks(r, &s, &cfg))
        .collect::<Result<Vec<_>, _>>()?;
    let completeness = match args.deg_bound {
        Some(b) if s.is_diagonal() => {
            Some(check_completeness(&s, n, b, &opts).map_err(|e| vf(&e))?)
        }
        Some(_) => {
            eprintln!("warning: the completeness search covers diagonal surfaces only");
            None
        }
        None => None,
    };
    let sections = match &spec.bundle {
        Some(_) => {
            let bundle = spec.bundle(s.basis())?;
            let fam = solve_sections(&s, &bundle)?;
            Some(
                check_sections(&s, &bundle, &fam, SECTION_INSTANTIATIONS, &cfg)
                    .map_err(|e| vf(&e))?,
            )
        }
        None => None,
    };
    let passed = group_axioms.passed
        && action.passed
        && all_pass(&structures)
        && completeness.as_ref().is_none_or(|c| c.passed)
        && sections.as_ref().is_none_or(|r| r.passed);
    emit(
        &VerifyOutput {
            passed,
            n,
            group_axioms,
            action,
            structures,
            completeness,
            sections,
        },
        args.json,
    );
    if passed {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}

fn solve_sections(s: &HopfSurface, bundle: &Bundle) -> Result<SectionFamily, Failure> {
    let r = match bundle {
        Bundle::Line(a) => line_bundle_sections(s, a),
        Bundle::Projective(g) => proj_bundle_sections(s, g),
    };
    r.map_err(|e| input_err("sections")(&e))
}

fn sections(args: &Common) -> Result<(), Failure> {
    let spec = args.spec()?;
    let s = spec.surface()?;
    let bundle = spec.bundle(s.basis())?;
    let family = solve_sections(&s, &bundle)?;
    let verification = if args.verify {
        let cfg = args.config(&spec)?;
        Some(
            check_sections(&s, &bundle, &family, SECTION_INSTANTIATIONS, &cfg)
                .map_err(|e| input_err("sections")(&e))?,
        )
    } else {
        None
    };
    let ok = verification.as_ref().is_none_or(|r| r.passed);
    emit(
        &SectionsOutput {
            family,
            verification,
        },
        args.json,
    );
    if ok {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}

fn normal_form_cmd(args: &Common) -> Result<(), Failure> {
    let spec = args.spec()?;
    let basis = match &spec.surface {
        Some(_) => spec.surface()?.basis().clone(),
        None => EigenBasis::free(),
    };
    let x = spec.element(&basis)?;
    let nf = normal_form(&x).map_err(|e| input_err("normal-form")(&e))?;
    let out = NormalFormOutput {
        input: x.to_record(),
        normal_form: nf.element.to_record(),
        unique: nf.unique,
        swap_applied: nf.swap_applied,
    };
    emit(&out, args.json);
    Ok(())
}

fn classify(args: &Common) -> Result<(), Failure> {
    let s = args.spec()?.surface()?;
    let out = ClassifyOutput {
        class: s.classify(),
        function_field: s.function_field(),
        bihol_group: s.bihol_group(),
    };
    emit(&out, args.json);
    Ok(())
}

fn cases(args: &CaseArgs) -> Result<(), Failure> {
    if args.n < 1 || args.m1 < 1 || args.m2 < 1 {
        return Err("n, m1 and m2 must be positive".into());
    }
    let report = reproduce_case_table(args.n, args.m1, args.m2);
    let table = report.rows.iter().map(|r| r.to_string()).collect();
    let out = CasesOutput { report, table };
    if args.json {
        emit(&out, true);
    } else {
        println!("k1,l1 | k2~,l2~ | deg P1; deg Q1; deg P2 | conditions");
        for line in &out.table {
            println!("{}", line);
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Classify(a) => classify(a),
        Command::Structures(a) => structures(a),
        Command::Verify(a) => verify(a),
        Command::NormalForm(a) => normal_form_cmd(a),
        Command::Sections(a) => sections(a),
        Command::Cases(a) => cases(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => {
            eprintln!("verification failed");
            ExitCode::from(1)
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {}", msg);
            ExitCode::from(2)
        }
    }
}
