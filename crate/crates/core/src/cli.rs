//! The `pseudoisotopy` command line.

use std::fmt::Display;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use crate::format::{
    format_schedule, format_steinberg, format_wh1, format_word, parse_group_spec, parse_ring,
    parse_schedule, parse_steinberg, parse_word, ParsedSchedule,
};
use crate::json;
use crate::ring::CharacteristicData;
use crate::schedule::{
    check_circle_context, compute_sigma, compute_theta, double_schedule, dual_schedule,
    realize_sigma_word, realize_theta, theta_prime_of, EyeFamily, Schedule, ScheduleError,
    SigmaError, ValidSchedule,
};

pub mod exit {
    pub const IO: i32 = 1;
    pub const USAGE: i32 = 2;
    pub const PARSE: i32 = 3;
    pub const VALIDATION: i32 = 4;
    pub const REALISATION: i32 = 5;
    pub const CONTEXT: i32 = 6;
    pub const COMPUTATION: i32 = 7;
}

#[derive(Parser, Debug)]
#[command(
    name = "pseudoisotopy",
    version,
    about = "Obstructions of one-parameter families from event schedules"
)]
pub struct Cli {
    /// Emit JSON (the default)
    #[arg(long, global = true, conflicts_with = "text")]
    pub json: bool,
    /// Emit a human-readable report
    #[arg(long, global = true)]
    pub text: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug)]
pub struct ScheduleArgs {
    /// Group and coefficient specification
    #[arg(long)]
    pub group: PathBuf,
    /// Event schedule
    pub schedule: PathBuf,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Σ of a schedule, with Θ when it is an eye family
    Sigma(ScheduleArgs),
    /// Θ of an eye family
    Theta(ScheduleArgs),
    /// The dual schedule
    Dual(ScheduleArgs),
    /// The schedule followed by its dual
    Double(ScheduleArgs),
    /// Θ′ over the infinite cyclic group
    ThetaPrime(ScheduleArgs),
    /// An eye family with one circle carrying (σ, s, γ)
    RealizeTheta {
        #[arg(long)]
        group: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        sigma: String,
        #[arg(long, default_value_t = 0, value_parser = clap::value_parser!(u8).range(0..=1))]
        s: u8,
        #[arg(long, allow_hyphen_values = true, default_value = "1")]
        gamma: String,
        /// Allow one S²×S² summand when the gate fails
        #[arg(long)]
        stabilize: bool,
    },
    /// A slide schedule realizing a K₂ word read from a file
    RealizeSigma {
        #[arg(long)]
        group: PathBuf,
        word: PathBuf,
    },
    /// Conjugacy class data of one word, or whether two words are conjugate
    Conjclass {
        #[arg(long)]
        group: PathBuf,
        #[arg(required = true, num_args = 1..=2, allow_hyphen_values = true)]
        words: Vec<String>,
    },
    /// Check a schedule for well-formedness
    Validate(ScheduleArgs),
}

/// A failure with its exit code and a one-line diagnostic.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl Failure {
    fn new(code: i32, message: impl Display) -> Self {
        Self {
            code,
            message: message.to_string(),
        }
    }
}

struct Output {
    json: Value,
    text: String,
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path)
        .map_err(|e| Failure::new(exit::IO, format!("{}: {e}", path.display())))
}

fn load_group(path: &Path) -> Result<Arc<CharacteristicData>, Failure> {
    let text = read(path)?;
    parse_group_spec(&text).map(Arc::new).map_err(|e| {
        let loc = if e.line == 0 {
            String::new()
        } else {
            format!(":{}", e.line)
        };
        Failure::new(
            exit::PARSE,
            format!("{}{loc}: {}", path.display(), e.message),
        )
    })
}

struct Loaded {
    ctx: Arc<CharacteristicData>,
    parsed: ParsedSchedule,
    path: PathBuf,
}

impl Loaded {
    fn at(&self, index: Option<usize>) -> String {
        match index.and_then(|i| self.parsed.lines.get(i)) {
            Some(line) => format!("{}:{line}", self.path.display()),
            None => self.path.display().to_string(),
        }
    }

    fn schedule_failure(&self, e: ScheduleError) -> Failure {
        Failure::new(
            exit::VALIDATION,
            format!("{}: invalid schedule: {e}", self.at(e.index())),
        )
    }

    fn sigma_failure(&self, e: SigmaError) -> Failure {
        let (index, code) = match &e {
            SigmaError::DeathMismatch { index, .. } => (Some(*index), exit::VALIDATION),
            SigmaError::Residual { .. } => (None, exit::COMPUTATION),
            SigmaError::NonMonomial(_) => {
                let first_death = self
                    .parsed
                    .schedule
                    .events
                    .iter()
                    .position(|e| e.kind() == "death");
                (first_death, exit::VALIDATION)
            }
            _ => (None, exit::VALIDATION),
        };
        Failure::new(code, format!("{}: {e}", self.at(index)))
    }

    fn validate(&self) -> Result<ValidSchedule, Failure> {
        self.parsed
            .schedule
            .clone()
            .validate()
            .map_err(|e| self.schedule_failure(e))
    }
}

fn load(args: &ScheduleArgs) -> Result<Loaded, Failure> {
    let ctx = load_group(&args.group)?;
    let text = read(&args.schedule)?;
    let parsed = parse_schedule(ctx.clone(), &text).map_err(|e| {
        Failure::new(
            exit::PARSE,
            format!("{}:{}: {}", args.schedule.display(), e.line, e.message),
        )
    })?;
    Ok(Loaded {
        ctx,
        parsed,
        path: args.schedule.clone(),
    })
}

/// What a schedule report must contain; anything else is best effort.
#[derive(Clone, Copy, PartialEq, Eq)]
enum Need {
    Sigma,
    Theta,
    ThetaPrime,
}

fn report(l: &Loaded, v: &ValidSchedule, need: Need) -> Result<Output, Failure> {
    let group = &l.ctx.group;
    let mut diagnostics = Vec::new();
    let mut text = String::new();

    let sigma = match compute_sigma(v) {
        Ok(r) => {
            let verified = group.is_k2(&r.element.k2_word());
            text += &format!(
                "sigma: {}\n  w-correction: {}\n  k2 verified: {verified}\n",
                or_empty(format_steinberg(group, r.element.word())),
                or_empty(format_steinberg(group, r.element.w_correction())),
            );
            Some(json::wh2(group, &r.element, verified))
        }
        Err(e) if need == Need::Sigma => return Err(l.sigma_failure(e)),
        Err(e) => {
            diagnostics.push(format!("sigma: {e}"));
            None
        }
    };

    let (theta, theta_prime) = match EyeFamily::try_from(v.clone()) {
        Ok(eye) => {
            let th = compute_theta(&eye).map_err(|e| l.schedule_failure(e))?;
            text += &format!("theta: {}\n", format_wh1(group, &th));
            if !th.is_exact() {
                diagnostics.push("theta: free-module coefficients; reported in the q-image".into());
            }
            let tp = match theta_prime_of(&l.ctx, &th) {
                Ok(tp) => {
                    let parts: Vec<String> = tp.iter().map(|(a, n)| format!("{n}·t^{a}")).collect();
                    text += &format!(
                        "theta-prime: {}\n",
                        if parts.is_empty() {
                            "0".into()
                        } else {
                            parts.join(" + ")
                        }
                    );
                    Some(json::theta_prime(&tp))
                }
                Err(e) if need == Need::ThetaPrime => return Err(Failure::new(exit::CONTEXT, e)),
                Err(e) => {
                    diagnostics.push(format!("theta-prime: {e}"));
                    None
                }
            };
            (Some(json::wh1(group, &th)), tp)
        }
        Err(e) if need != Need::Sigma => return Err(l.schedule_failure(e)),
        Err(e) => {
            diagnostics.push(format!("theta: {e}"));
            (None, None)
        }
    };
    for d in &diagnostics {
        text += &format!("note: {d}\n");
    }
    Ok(Output {
        json: json::report(sigma, theta, theta_prime, &diagnostics),
        text,
    })
}

fn or_empty(s: String) -> String {
    if s.is_empty() {
        "(empty)".into()
    } else {
        s
    }
}

fn schedule_output(s: &Schedule, extra: Value) -> Output {
    let text = format_schedule(s);
    let mut obj = json!({
        "format": json::FORMAT,
        "dimension": s.dimension,
        "stabilizations": s.stabilizations,
        "schedule": text.lines().collect::<Vec<_>>(),
    });
    if let (Value::Object(o), Value::Object(e)) = (&mut obj, extra) {
        o.extend(e);
    }
    Output { json: obj, text }
}

fn theta_of(s: &Schedule) -> Option<Value> {
    let eye = EyeFamily::try_from(s.clone()).ok()?;
    compute_theta(&eye)
        .ok()
        .map(|th| json::wh1(&s.ctx.group, &th))
}

fn execute(cmd: &Command) -> Result<Output, Failure> {
    match cmd {
        Command::Sigma(a) => {
            let l = load(a)?;
            report(&l, &l.validate()?, Need::Sigma)
        }
        Command::Theta(a) => {
            let l = load(a)?;
            report(&l, &l.validate()?, Need::Theta)
        }
        Command::ThetaPrime(a) => {
            let l = load(a)?;
            let v = l.validate()?;
            if let Err(e) = check_circle_context(&l.ctx) {
                return Err(Failure::new(
                    exit::CONTEXT,
                    format!("{}: {e}", a.group.display()),
                ));
            }
            report(&l, &v, Need::ThetaPrime)
        }
        Command::Dual(a) | Command::Double(a) => {
            let l = load(a)?;
            let v = l.validate()?;
            let out = if matches!(cmd, Command::Dual(_)) {
                dual_schedule(&v)
            } else {
                double_schedule(&v)
            };
            let s = out.map_err(|e| l.sigma_failure(e))?;
            Ok(schedule_output(&s, json!({ "theta": theta_of(&s) })))
        }
        Command::RealizeTheta {
            group,
            sigma,
            s,
            gamma,
            stabilize,
        } => {
            let ctx = load_group(group)?;
            let arg = |what: &str, e: crate::format::ParseError| {
                Failure::new(exit::PARSE, format!("--{what}: {}", e.message))
            };
            let sigma = parse_ring(&ctx.group, sigma).map_err(|e| arg("sigma", e))?;
            let gamma = parse_word(&ctx.group, gamma).map_err(|e| arg("gamma", e))?;
            let sched = realize_theta(ctx, sigma, *s == 1, gamma, *stabilize)
                .map_err(|e| Failure::new(exit::REALISATION, e))?;
            Ok(schedule_output(
                &sched,
                json!({ "theta": theta_of(&sched) }),
            ))
        }
        Command::RealizeSigma { group, word } => {
            let ctx = load_group(group)?;
            let text = read(word)?;
            let w = parse_steinberg(&ctx.group, &text).map_err(|e| {
                Failure::new(exit::PARSE, format!("{}: {}", word.display(), e.message))
            })?;
            let sched =
                realize_sigma_word(ctx, &w).map_err(|e| Failure::new(exit::REALISATION, e))?;
            let g = &sched.ctx.group;
            let sigma = sched
                .clone()
                .validate()
                .ok()
                .and_then(|v| compute_sigma(&v).ok())
                .map(|r| json::wh2(g, &r.element, g.is_k2(&r.element.k2_word())));
            Ok(schedule_output(&sched, json!({ "sigma": sigma })))
        }
        Command::Conjclass { group, words } => {
            let ctx = load_group(group)?;
            let g = &ctx.group;
            let mut reps = Vec::new();
            let mut classes = Vec::new();
            let mut text = String::new();
            for w in words {
                let word = parse_word(g, w)
                    .map_err(|e| Failure::new(exit::PARSE, format!("`{w}`: {}", e.message)))?;
                let rep = g.conj_class_rep(&word);
                let len = g
                    .alternating_length(&rep)
                    .map_err(|e| Failure::new(exit::COMPUTATION, e))?;
                let inv = g.class_inverse(&rep);
                text += &format!(
                    "{w}: class {} (alternating length {len}{})\n",
                    format_word(g, rep.word()),
                    if inv == rep { ", self-inverse" } else { "" }
                );
                classes.push(json!({
                    "word": format_word(g, &word),
                    "class": format_word(g, rep.word()),
                    "alternating_length": len,
                    "self_inverse": inv == rep,
                }));
                reps.push(rep);
            }
            let mut obj = json!({ "format": json::FORMAT, "classes": classes });
            if let [a, b] = reps.as_slice() {
                let verdict = if a == b { "conjugate" } else { "non-conjugate" };
                text += verdict;
                text.push('\n');
                obj["conjugate"] = json!(a == b);
            }
            Ok(Output { json: obj, text })
        }
        Command::Validate(a) => {
            let l = load(a)?;
            let v = l.validate()?;
            let eye = EyeFamily::try_from(v.clone()).is_ok();
            let n = v.schedule().events.len();
            let labels = v.labels().len();
            Ok(Output {
                json: json!({ "format": json::FORMAT, "valid": true, "events": n, "labels": labels, "eye": eye }),
                text: format!(
                    "ok: {n} events, {labels} labels{}\n",
                    if eye { ", eye family" } else { "" }
                ),
            })
        }
    }
}

/// Runs one invocation and returns its exit status.
pub fn run<I, T>(args: I, out: &mut impl Write, err: &mut impl Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { exit::USAGE } else { 0 };
            let _ = if e.use_stderr() {
                write!(err, "{e}")
            } else {
                write!(out, "{e}")
            };
            return code;
        }
    };
    match execute(&cli.command) {
        Ok(o) => {
            let _ = if cli.text {
                write!(out, "{}", o.text)
            } else {
                writeln!(out, "{}", json::to_string(&o.json))
            };
            0
        }
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}
