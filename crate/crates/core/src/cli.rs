//! Command front end shared by the `nochka` binary and the C interface.
//!
//! Exit codes: 0 pass, 1 inequality violation or internal invariant failure,
//! 2 hypothesis or position failure, 3 input error.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use num_rational::BigRational;
use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::exact::{fmt_rational, rational_str, rational_vec_str};
use crate::fixtures::{corpus, FixtureKind};
use crate::position::{check_subgeneral, BaseLocusProvenance, PositionReport};
use crate::scene::{Scene, Target};
use crate::smt::{
    one_based_nested, one_based_vec, ramification_check, sample_second_main_theorem, text_table,
    unicity_threshold, verify_genus0, verify_pointwise, SampleOptions, SmtConstants,
    UnicityThreshold, Verdict,
};
use crate::weights::{build_weights, NochkaWeights};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_VIOLATION: i32 = 1;
pub const EXIT_HYPOTHESIS: i32 = 2;
pub const EXIT_INPUT: i32 = 3;

pub fn exit_code_for(e: &Error) -> i32 {
    match e {
        Error::Parse(_)
        | Error::InvalidInput(_)
        | Error::ZeroInput
        | Error::IndexOutOfRange { .. }
        | Error::TooManyDivisors { .. }
        | Error::RequiresSplitFixture(_) => EXIT_INPUT,
        Error::TooFewDivisors { .. }
        | Error::NotSubgeneral { .. }
        | Error::Precondition(_)
        | Error::GenericitySamplingFailed { .. }
        | Error::DegenerateCurveForH(_)
        | Error::LinearlyDegenerate
        | Error::RootFinding(_)
        | Error::Quadrature(_) => EXIT_HYPOTHESIS,
        Error::ConstructionFailure(_) | Error::SelectionFailure(_) | Error::Internal(_) => {
            EXIT_VIOLATION
        }
    }
}

pub fn exit_code_for_verdict(v: Verdict) -> i32 {
    match v {
        Verdict::Pass | Verdict::VacuousPass => EXIT_PASS,
        Verdict::Violation => EXIT_VIOLATION,
        Verdict::HypothesisFailure => EXIT_HYPOTHESIS,
    }
}

/// Result of one command: an exit code plus the report in both renderings.
#[derive(Clone, Debug, PartialEq)]
pub struct CommandOutput {
    pub code: i32,
    pub json: Value,
    pub text: String,
}

impl CommandOutput {
    fn report<T: Serialize>(code: i32, report: &T, text: String) -> Self {
        Self {
            code,
            json: serde_json::to_value(report).expect("reports serialize"),
            text,
        }
    }

    pub fn from_error(e: &Error) -> Self {
        let mut err = json!({ "kind": e.kind(), "message": e.to_string() });
        match e {
            Error::NotSubgeneral {
                subset,
                rank,
                required,
            } => {
                err["subset"] = json!(subset.iter().map(|i| i + 1).collect::<Vec<_>>());
                err["rank"] = json!(rank);
                err["required"] = json!(required);
            }
            Error::TooFewDivisors { q, k_n } => {
                err["q"] = json!(q);
                err["kN"] = json!(k_n);
            }
            _ => {}
        }
        let code = exit_code_for(e);
        Self {
            code,
            json: json!({ "error": err, "exit_code": code }),
            text: format!("error: {e}\n"),
        }
    }

    pub fn json_string(&self) -> String {
        serde_json::to_string_pretty(&self.json).expect("values serialize") + "\n"
    }
}

fn run_or_error(f: impl FnOnce() -> Result<CommandOutput>) -> CommandOutput {
    f().unwrap_or_else(|e| CommandOutput::from_error(&e))
}

#[derive(Serialize)]
#[serde(tag = "status", rename_all = "kebab-case")]
enum PositionJson {
    Certified {
        subsets_checked: usize,
        base_locus: BaseLocusProvenance,
    },
    Violation {
        #[serde(serialize_with = "one_based_vec")]
        subset: Vec<usize>,
        rank: usize,
        required: i64,
    },
}

pub fn cmd_check_position(scene: &Scene) -> CommandOutput {
    run_or_error(|| {
        let report = check_subgeneral(&scene.family()?, &scene.context()?)?;
        Ok(match report {
            PositionReport::Certified {
                subsets_checked,
                provenance,
            } => CommandOutput::report(
                EXIT_PASS,
                &PositionJson::Certified {
                    subsets_checked,
                    base_locus: provenance,
                },
                format!("subgeneral position certified ({subsets_checked} subsets checked)\n"),
            ),
            PositionReport::Violation {
                subset,
                rank,
                required,
            } => {
                let text = format!(
                    "not in subgeneral position: hyperplanes {:?} have rank {rank} < {required}\n",
                    subset.iter().map(|i| i + 1).collect::<Vec<_>>()
                );
                CommandOutput::report(
                    EXIT_HYPOTHESIS,
                    &PositionJson::Violation {
                        subset,
                        rank,
                        required,
                    },
                    text,
                )
            }
        })
    })
}

#[derive(Serialize)]
struct FiltrationJson {
    #[serde(serialize_with = "one_based_nested")]
    chain: Vec<Vec<usize>>,
    #[serde(with = "rational_vec_str")]
    rho: Vec<BigRational>,
    #[serde(serialize_with = "one_based_vec")]
    completion: Vec<usize>,
}

#[derive(Serialize)]
struct WeightsJson {
    #[serde(with = "rational_vec_str")]
    omega: Vec<BigRational>,
    #[serde(with = "rational_str")]
    theta: BigRational,
    #[serde(rename = "kN")]
    k_n: i64,
    #[serde(rename = "sN")]
    s_n: usize,
    #[serde(rename = "tN", with = "rational_str")]
    t_n: BigRational,
    n: usize,
    filtration: FiltrationJson,
}

impl From<&NochkaWeights> for WeightsJson {
    fn from(w: &NochkaWeights) -> Self {
        Self {
            omega: w.omega.clone(),
            theta: w.theta.clone(),
            k_n: w.k_n,
            s_n: w.s_n,
            t_n: w.t_n.clone(),
            n: w.n,
            filtration: FiltrationJson {
                chain: w.filtration.index_chain(),
                rho: w.filtration.rho_values.clone(),
                completion: crate::position::indices_of(w.completion),
            },
        }
    }
}

fn weights_text(w: &NochkaWeights) -> String {
    let rows: Vec<Vec<String>> = w
        .omega
        .iter()
        .enumerate()
        .map(|(j, o)| vec![format!("H{}", j + 1), fmt_rational(o)])
        .collect();
    let mut out = format!(
        "Nochka weights: theta = {}, kN = {}, sN = {}, tN = {}\n",
        fmt_rational(&w.theta),
        w.k_n,
        w.s_n,
        fmt_rational(&w.t_n)
    );
    out.push_str(&text_table(&["divisor", "omega"], &rows));
    let chain: Vec<Vec<usize>> = w
        .filtration
        .index_chain()
        .iter()
        .map(|r| r.iter().map(|i| i + 1).collect())
        .collect();
    out.push_str(&format!("  filtration: {chain:?}\n"));
    out
}

pub fn cmd_weights(scene: &Scene) -> CommandOutput {
    run_or_error(|| {
        let w = build_weights(&scene.family()?, &scene.context()?)?;
        Ok(CommandOutput::report(
            EXIT_PASS,
            &WeightsJson::from(&w),
            weights_text(&w),
        ))
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mode {
    Exact,
    Numeric,
    Both,
}

/// Scalar overrides accepted on the command line.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct Overrides {
    pub radii: Option<Vec<f64>>,
    pub slack_c1: Option<f64>,
    pub slack_c2: Option<f64>,
    pub seed: Option<u64>,
}

impl Overrides {
    fn sample_options(&self, scene: &Scene) -> SampleOptions {
        let mut o = SampleOptions::default();
        if let Some(r) = self.radii.clone().or_else(|| scene.radii.clone()) {
            o.radii = r;
        }
        if let Some(c) = self.slack_c1 {
            o.slack_c1 = c;
        }
        if let Some(c) = self.slack_c2 {
            o.slack_c2 = c;
        }
        o
    }
}

pub fn cmd_verify(scene: &Scene, mode: Mode, overrides: &Overrides) -> CommandOutput {
    run_or_error(|| {
        let family = scene.family()?;
        let ctx = scene.context()?;
        let weights = build_weights(&family, &ctx)?;
        let (d, d_i) = (scene.d, scene.d_i());
        let mut out = json!({ "mode": mode });
        let mut text = String::new();
        let mut verdict = Verdict::Pass;
        if matches!(mode, Mode::Exact | Mode::Both) {
            let curve = scene.rational_curve()?.ok_or_else(|| {
                Error::InvalidInput("exact verification needs a \"curve\"".into())
            })?;
            let r = verify_genus0(&curve, &family, &ctx, &weights, d, &d_i)?;
            verdict = verdict.combine(r.verdict);
            text.push_str(&r.to_text());
            out["exact"] = serde_json::to_value(&r).expect("reports serialize");
            if scene.targets.contains(&Target::Pointwise) {
                let seed = overrides.seed.unwrap_or(scene.seed);
                let p = verify_pointwise(&curve, &family, &ctx, &weights, seed)?;
                verdict = verdict.combine(p.verdict);
                text.push_str(&p.to_text());
                out["pointwise"] = serde_json::to_value(&p).expect("reports serialize");
            }
        }
        if matches!(mode, Mode::Numeric | Mode::Both) {
            let curve = scene
                .numeric()?
                .ok_or_else(|| Error::InvalidInput("numeric verification needs a curve".into()))?;
            let r = sample_second_main_theorem(
                &curve,
                &family,
                &ctx,
                &weights,
                d,
                &d_i,
                &overrides.sample_options(scene),
            )?;
            verdict = verdict.combine(r.verdict);
            text.push_str(&r.to_text());
            out["numeric"] = serde_json::to_value(&r).expect("reports serialize");
        }
        out["verdict"] = json!(verdict);
        Ok(CommandOutput {
            code: exit_code_for_verdict(verdict),
            json: out,
            text,
        })
    })
}

pub fn cmd_ramification(scene: &Scene) -> CommandOutput {
    run_or_error(|| {
        let family = scene.family()?;
        let ctx = scene.context()?;
        let weights = build_weights(&family, &ctx)?;
        let curve = scene
            .rational_curve()?
            .ok_or_else(|| Error::InvalidInput("ramification needs a \"curve\"".into()))?;
        let r = ramification_check(&curve, &family, &ctx, &weights, scene.d, &scene.d_i())?;
        Ok(CommandOutput::report(
            exit_code_for_verdict(r.verdict),
            &r,
            r.to_text(),
        ))
    })
}

#[derive(Serialize)]
struct ThresholdJson {
    constants: SmtConstants,
    #[serde(flatten)]
    threshold: UnicityThreshold,
}

pub fn cmd_unicity_threshold(scene: &Scene) -> CommandOutput {
    run_or_error(|| {
        let family = scene.family()?;
        let ctx = scene.context()?;
        let weights = build_weights(&family, &ctx)?;
        let constants = SmtConstants::new(family.m(), &ctx, &weights, scene.genus);
        let threshold = unicity_threshold(&constants);
        let text = format!(
            "unicity threshold B + 2m(N+1) + 2A = {} (B = {}, A = {}); q = {} {}\n",
            fmt_rational(&threshold.threshold),
            fmt_rational(&constants.b_const),
            fmt_rational(&constants.a),
            threshold.q,
            if threshold.exceeded {
                "exceeds it"
            } else {
                "does not exceed it"
            }
        );
        Ok(CommandOutput::report(
            EXIT_PASS,
            &ThresholdJson {
                constants,
                threshold,
            },
            text,
        ))
    })
}

#[derive(Serialize)]
struct CorpusRow {
    name: String,
    kind: FixtureKind,
    target: Target,
    verdict: Option<Verdict>,
    exit_code: i32,
}

/// Runs every target of every bundled fixture. The degenerate fixture is
/// expected to fail its hypotheses and counts as a pass when it does.
pub fn cmd_corpus(overrides: &Overrides) -> CommandOutput {
    let mut rows = Vec::new();
    let mut worst = EXIT_PASS;
    for f in corpus() {
        for &target in &f.scene.targets {
            let out = match target {
                Target::Position => cmd_check_position(&f.scene),
                Target::Weights => cmd_weights(&f.scene),
                Target::Genus0 | Target::Pointwise => cmd_verify(&f.scene, Mode::Exact, overrides),
                Target::Sampled => cmd_verify(&f.scene, Mode::Numeric, overrides),
                Target::Ramification => cmd_ramification(&f.scene),
                Target::Unicity => cmd_unicity_threshold(&f.scene),
            };
            let verdict = out
                .json
                .get("verdict")
                .and_then(|v| serde_json::from_value::<String>(v.clone()).ok());
            let verdict = verdict.and_then(|v| match v.as_str() {
                "pass" => Some(Verdict::Pass),
                "vacuous-pass" => Some(Verdict::VacuousPass),
                "violation" => Some(Verdict::Violation),
                "hypothesis-failure" => Some(Verdict::HypothesisFailure),
                _ => None,
            });
            let expected = if f.kind == FixtureKind::Degenerate {
                EXIT_HYPOTHESIS
            } else {
                EXIT_PASS
            };
            if out.code != expected {
                worst = worst.max(if out.code == EXIT_PASS {
                    EXIT_VIOLATION
                } else {
                    out.code
                });
            }
            rows.push(CorpusRow {
                name: f.name().to_string(),
                kind: f.kind,
                target,
                verdict,
                exit_code: out.code,
            });
        }
    }
    let text_rows: Vec<Vec<String>> = rows
        .iter()
        .map(|r| {
            vec![
                r.name.clone(),
                serde_json::to_value(r.kind)
                    .unwrap()
                    .as_str()
                    .unwrap_or("")
                    .to_string(),
                serde_json::to_value(r.target)
                    .unwrap()
                    .as_str()
                    .unwrap_or("")
                    .to_string(),
                r.verdict.map_or("-".to_string(), |v| v.to_string()),
                r.exit_code.to_string(),
            ]
        })
        .collect();
    let text = text_table(
        &["fixture", "kind", "target", "verdict", "exit"],
        &text_rows,
    );
    CommandOutput::report(
        worst,
        &json!({ "fixtures": rows, "exit_code": worst }),
        text,
    )
}

#[derive(Parser, Debug)]
#[command(
    name = "nochka",
    version,
    about = "Exact Nochka weights and second-main-theorem checks"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Print JSON (the default).
    #[arg(long, global = true, conflicts_with = "text")]
    pub json: bool,
    /// Print human-readable tables instead of JSON.
    #[arg(long, global = true)]
    pub text: bool,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Certify subgeneral position of the scene's hyperplanes.
    CheckPosition { scene: PathBuf },
    /// Compute Nochka weights.
    Weights { scene: PathBuf },
    /// Check the second main theorem on the scene's curve.
    Verify {
        scene: PathBuf,
        #[arg(long, value_enum, default_value = "exact")]
        mode: Mode,
        /// Comma-separated radii for numeric mode.
        #[arg(long, value_delimiter = ',')]
        radii: Option<Vec<f64>>,
        #[arg(long)]
        slack_c1: Option<f64>,
        #[arg(long)]
        slack_c2: Option<f64>,
        /// Seed for the auxiliary hyperplanes of the pointwise check.
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Check the ramification bound.
    Ramification { scene: PathBuf },
    /// Compute the unicity threshold.
    UnicityThreshold { scene: PathBuf },
    /// Run every bundled fixture, or write them out as scene files.
    Corpus {
        /// Write each fixture scene to DIR/<name>.json instead of running it.
        #[arg(long, value_name = "DIR")]
        write_scenes: Option<PathBuf>,
    },
}

fn load(path: &PathBuf) -> Result<Scene> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::InvalidInput(format!("cannot read {}: {e}", path.display())))?;
    Scene::from_json(&text)
}

fn write_scenes(dir: &PathBuf) -> Result<CommandOutput> {
    std::fs::create_dir_all(dir)
        .map_err(|e| Error::InvalidInput(format!("{}: {e}", dir.display())))?;
    let mut names = Vec::new();
    for f in corpus() {
        let path = dir.join(format!("{}.json", f.name()));
        std::fs::write(&path, f.scene.to_json() + "\n")
            .map_err(|e| Error::InvalidInput(format!("{}: {e}", path.display())))?;
        names.push(path.display().to_string());
    }
    let text = names.iter().map(|n| format!("{n}\n")).collect();
    Ok(CommandOutput {
        code: EXIT_PASS,
        json: json!({ "written": names }),
        text,
    })
}

fn dispatch(command: Command) -> CommandOutput {
    let with_scene = |path: &PathBuf, f: &dyn Fn(&Scene) -> CommandOutput| match load(path) {
        Ok(s) => f(&s),
        Err(e) => CommandOutput::from_error(&e),
    };
    match command {
        Command::CheckPosition { scene } => with_scene(&scene, &cmd_check_position),
        Command::Weights { scene } => with_scene(&scene, &cmd_weights),
        Command::Verify {
            scene,
            mode,
            radii,
            slack_c1,
            slack_c2,
            seed,
        } => {
            let o = Overrides {
                radii,
                slack_c1,
                slack_c2,
                seed,
            };
            with_scene(&scene, &|s| cmd_verify(s, mode, &o))
        }
        Command::Ramification { scene } => with_scene(&scene, &cmd_ramification),
        Command::UnicityThreshold { scene } => with_scene(&scene, &cmd_unicity_threshold),
        Command::Corpus {
            write_scenes: Some(dir),
        } => run_or_error(|| write_scenes(&dir)),
        Command::Corpus { write_scenes: None } => cmd_corpus(&Overrides::default()),
    }
}

/// Parses arguments, runs the command and writes the report; returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() {
                EXIT_INPUT
            } else {
                EXIT_PASS
            };
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    let text = cli.text;
    let output = dispatch(cli.command);
    let rendered = if text {
        output.text.clone()
    } else {
        output.json_string()
    };
    let _ = out.write_all(rendered.as_bytes());
    output.code
}
