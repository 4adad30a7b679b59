mod args;
mod output;

use args::{Cli, Command, ErrataArgs, EvalArgs, Function, Preset, SweepArgs, VerifyArgs};
use clap::Parser;
use gtsf_core::kernels::{bessel_k, kummer_1f1, whittaker_m, whittaker_w};
use gtsf_core::report::ReportDocument;
use gtsf_core::sweep::{expand, GridAxis};
use gtsf_core::verify::{presets, verify, verify_batch, Theorem, TransformCase};
use gtsf_core::{eval_gtsf, eval_h_pbc, eval_wright, GtsfParams, SeriesResult, WrightParams};
use std::path::Path;
use std::process::ExitCode;
use std::time::Instant;

#[derive(Debug)]
enum CliError {
    Core(gtsf_core::Error),
    Usage(String),
    Io(String),
}

impl From<gtsf_core::Error> for CliError {
    fn from(e: gtsf_core::Error) -> Self {
        CliError::Core(e)
    }
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(e) if !e.is_usage() => 1,
            _ => 2,
        }
    }

    fn line(&self) -> String {
        match self {
            CliError::Core(e) => format!("error: {}: {e}", e.kind()),
            CliError::Usage(msg) => format!("error: usage: {msg}"),
            CliError::Io(msg) => format!("error: io: {msg}"),
        }
    }
}

type CliResult = Result<ExitCode, CliError>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Eval(a) => cmd_eval(a),
        Command::Verify(a) => cmd_verify(a),
        Command::Sweep(a) => cmd_sweep(a),
        Command::Errata(a) => cmd_errata(a),
    };
    result.unwrap_or_else(|e| {
        eprintln!("{}", e.line());
        ExitCode::from(e.exit_code())
    })
}

fn required(name: &str, v: Option<f64>) -> Result<f64, CliError> {
    v.ok_or_else(|| CliError::Usage(format!("--{name} is required for this function")))
}

fn parse_pairs(flag: &str, items: &[String]) -> Result<Vec<(f64, f64)>, CliError> {
    items
        .iter()
        .map(|item| {
            let parsed = item
                .split_once(',')
                .and_then(|(a, b)| Some((a.trim().parse().ok()?, b.trim().parse().ok()?)));
            parsed.ok_or_else(|| {
                CliError::Usage(format!("--{flag} expects coeff,scale, got '{item}'"))
            })
        })
        .collect()
}

fn gtsf_params(a: &EvalArgs) -> Result<GtsfParams, CliError> {
    let f = &a.params;
    let order = f.a.unwrap_or(1.0);
    if !(order >= 1.0 && order.fract() == 0.0 && order <= u32::MAX as f64) {
        return Err(CliError::Usage(format!(
            "--a must be a positive integer, got {order}"
        )));
    }
    Ok(GtsfParams::new(
        order as u32,
        required("p", f.p)?,
        required("b", f.b)?,
        required("c", f.c)?,
        f.lambda.unwrap_or(1.0),
        f.mu.unwrap_or(1.5),
        f.xi.unwrap_or(1.0),
    )?)
}

fn cmd_eval(a: EvalArgs) -> CliResult {
    let f = &a.params;
    let r: SeriesResult<f64> = match a.function {
        Function::Gtsf => eval_gtsf(&gtsf_params(&a)?, a.z, a.tol)?,
        Function::StruveH => eval_h_pbc(
            required("p", f.p)?,
            required("b", f.b)?,
            required("c", f.c)?,
            a.z,
            a.tol,
        )?,
        Function::Wright => {
            let params = WrightParams::new(
                &parse_pairs("upper", &a.upper)?,
                &parse_pairs("lower", &a.lower)?,
            )?;
            eval_wright(&params, a.z, a.tol, gtsf_core::DEFAULT_MAX_TERMS)?
        }
        Function::Kummer => kummer_1f1(
            required("alpha", a.alpha)?,
            required("gamma", a.gamma)?,
            a.z,
            a.tol,
        )?,
        Function::WhittakerM => {
            whittaker_m(required("tau", f.tau)?, required("omega", f.omega)?, a.z)?
        }
        Function::WhittakerW => {
            whittaker_w(required("tau", f.tau)?, required("omega", f.omega)?, a.z)?
        }
        Function::BesselK => bessel_k(required("nu", f.nu)?, a.z)?,
    };
    let text = match a.format {
        args::Format::Json => {
            let v = serde_json::json!({
                "value": r.value,
                "terms_used": r.terms_used,
                "tail_estimate": r.tail_estimate,
            });
            serde_json::to_string_pretty(&v).expect("plain json value") + "\n"
        }
        args::Format::Csv => format!(
            "value,terms_used,tail_estimate\n{},{},{}\n",
            r.value, r.terms_used, r.tail_estimate
        ),
        args::Format::Text => format!(
            "value: {:.17e}\nterms_used: {}\ntail_estimate: {:e}\n",
            r.value, r.terms_used, r.tail_estimate
        ),
    };
    print!("{text}");
    Ok(ExitCode::SUCCESS)
}

fn emit(text: &str, output: Option<&Path>) -> Result<(), CliError> {
    match output {
        Some(path) => {
            std::fs::write(path, text).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
        }
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn finish(doc: &ReportDocument, format: args::Format, output: Option<&Path>) -> CliResult {
    let text = output::report(doc, format).map_err(CliError::Io)?;
    emit(&text, output)?;
    Ok(if doc.all_passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn cmd_verify(a: VerifyArgs) -> CliResult {
    let theorem: Theorem = a.theorem.into();
    let case = TransformCase::from_params(theorem, &a.params.to_map())?;
    case.validate()?;
    let start = Instant::now();
    let report = verify(&case, a.tol)?;
    let doc = ReportDocument::new(vec![report], start.elapsed().as_secs_f64());
    finish(&doc, a.format, a.output.as_deref())
}

fn cmd_sweep(a: SweepArgs) -> CliResult {
    let cases = match (a.preset, a.theorem) {
        (Some(Preset::Acceptance), _) => presets::acceptance_cases(),
        (None, Some(theorem)) => {
            let axes = a
                .grid
                .iter()
                .map(|g| g.parse::<GridAxis>())
                .collect::<Result<Vec<_>, _>>()?;
            expand(theorem.into(), &axes, &a.params.to_map(), a.cap)?
        }
        (None, None) => return Err(CliError::Usage("give a theorem or --preset".into())),
    };
    let start = Instant::now();
    let reports = verify_batch(&cases, a.tol)?;
    let doc = ReportDocument::new(reports, start.elapsed().as_secs_f64());
    finish(&doc, a.format, a.output.as_deref())
}

fn cmd_errata(a: ErrataArgs) -> CliResult {
    let text = output::errata(gtsf_core::errata::ERRATA, a.format).map_err(CliError::Io)?;
    print!("{text}");
    Ok(ExitCode::SUCCESS)
}
