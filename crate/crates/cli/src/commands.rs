use std::fs;
use std::io::Write;
use std::path::Path;
use std::process::ExitCode;

use genent_core::io::{self as gio, Format};
use genent_core::{
    run_suite, CheckConfig, EntropyFamily, Error, FamilyParams, OverallVerdict, Result,
};
use serde_json::json;

use crate::args::{
    CheckArgs, Cli, Command, FamilyArgs, InputArgs, InputFormat, OutputFormat, SweepArgs, TraceArgs,
};
use crate::output::format_value;
use crate::range::parse_range;

pub fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Compute(args) => compute(args),
        Command::Conditional(args) => joint_command(args, |f, j| f.conditional_entropy(j)),
        Command::Joint(args) => joint_command(args, |f, j| f.joint_entropy(j)),
        Command::Trace(args) => trace(args),
        Command::Check(args) => check(args),
        Command::Sweep(args) => sweep(args),
    }
}

fn scalar(flag: &str, text: &Option<String>) -> Result<Option<f64>> {
    text.as_deref()
        .map(|s| {
            s.trim()
                .parse::<f64>()
                .map_err(|_| Error::Parameter(format!("--{flag} expects a number, got {s:?}")))
        })
        .transpose()
}

fn family_params(args: &FamilyArgs) -> Result<FamilyParams> {
    Ok(FamilyParams {
        alpha: scalar("alpha", &args.alpha)?,
        tau: scalar("tau", &args.tau)?,
        lambda: scalar("lambda", &args.lambda)?,
    })
}

fn family(args: &FamilyArgs) -> Result<EntropyFamily> {
    EntropyFamily::from_name(&args.family, family_params(args)?)
}

fn input_format(flag: Option<InputFormat>) -> Option<Format> {
    flag.map(|f| match f {
        InputFormat::Csv => Format::Csv,
        InputFormat::Json => Format::Json,
    })
}

fn print_values(family: &EntropyFamily, values: &[f64], format: OutputFormat) {
    let mut out = std::io::stdout().lock();
    match format {
        OutputFormat::Csv => {
            for &v in values {
                let _ = writeln!(out, "{}", format_value(v));
            }
        }
        OutputFormat::Json => {
            let rounded: Vec<f64> = values
                .iter()
                .map(|&v| format_value(v).parse().unwrap_or(v))
                .collect();
            let doc = json!({
                "family": family.kind_name(),
                "params": family.params(),
                "values": rounded,
            });
            let _ = writeln!(out, "{doc}");
        }
    }
}

fn compute(args: InputArgs) -> Result<ExitCode> {
    let family = family(&args.family)?;
    let dists = gio::read_distributions(&args.input, input_format(args.input_format))?;
    let values = dists
        .iter()
        .map(|d| family.entropy(d))
        .collect::<Result<Vec<_>>>()?;
    print_values(&family, &values, args.format);
    Ok(ExitCode::SUCCESS)
}

fn joint_command(
    args: InputArgs,
    eval: impl Fn(&EntropyFamily, &genent_core::JointDistribution) -> Result<f64>,
) -> Result<ExitCode> {
    let family = family(&args.family)?;
    let joint = gio::read_joint(&args.input, input_format(args.input_format))?;
    let value = eval(&family, &joint)?;
    print_values(&family, &[value], args.format);
    Ok(ExitCode::SUCCESS)
}

fn trace(args: TraceArgs) -> Result<ExitCode> {
    let family = family(&args.family)?;
    let value = family.uniform_trace(args.n)?;
    print_values(&family, &[value], args.format);
    Ok(ExitCode::SUCCESS)
}

fn write_output(path: Option<&Path>, text: &str) -> Result<()> {
    match path {
        Some(path) => fs::write(path, text)
            .map_err(|e| Error::Config(format!("cannot write {}: {e}", path.display()))),
        None => {
            let _ = std::io::stdout().lock().write_all(text.as_bytes());
            Ok(())
        }
    }
}

fn check(args: CheckArgs) -> Result<ExitCode> {
    let family = family(&args.family)?;
    let cfg = CheckConfig {
        family,
        trials: args.trials,
        max_rows: args.max_rows,
        max_cols: args.max_cols,
        seed: args.seed,
        tolerance: args.tolerance,
    };
    let report = run_suite(&cfg)?;
    write_output(args.output.as_deref(), &(report.to_json() + "\n"))?;
    let expected = if args.expect_violation {
        OverallVerdict::Violation
    } else {
        OverallVerdict::Pass
    };
    if report.verdict == expected {
        Ok(ExitCode::SUCCESS)
    } else {
        eprintln!(
            "verdict {:?} differs from expected {:?}",
            report.verdict, expected
        );
        Ok(ExitCode::from(2))
    }
}

#[derive(Clone, Copy)]
enum Swept {
    Alpha,
    Tau,
    Lambda,
}

fn sweep(args: SweepArgs) -> Result<ExitCode> {
    let fa = &args.family;
    let ranged: Vec<(Swept, &String)> = [
        (Swept::Alpha, &fa.alpha),
        (Swept::Tau, &fa.tau),
        (Swept::Lambda, &fa.lambda),
    ]
    .into_iter()
    .filter_map(|(which, v)| v.as_ref().filter(|s| s.contains(':')).map(|s| (which, s)))
    .collect();
    let [(which, text)] = ranged[..] else {
        return Err(Error::Parse(format!(
            "sweep needs exactly one ranged parameter, got {}",
            ranged.len()
        )));
    };
    let grid = parse_range(text)?;
    let fixed = |flag: &str, v: &Option<String>, swept: bool| {
        if swept {
            Ok(None)
        } else {
            scalar(flag, v)
        }
    };
    let base = FamilyParams {
        alpha: fixed("alpha", &fa.alpha, matches!(which, Swept::Alpha))?,
        tau: fixed("tau", &fa.tau, matches!(which, Swept::Tau))?,
        lambda: fixed("lambda", &fa.lambda, matches!(which, Swept::Lambda))?,
    };
    let dists = gio::read_distributions(&args.input, input_format(args.input_format))?;
    let [dist] = &dists[..] else {
        return Err(Error::Parse(format!(
            "sweep needs exactly one distribution, got {}",
            dists.len()
        )));
    };

    let mut rows = Vec::with_capacity(grid.len());
    for &param in &grid {
        let mut params = base;
        match which {
            Swept::Alpha => params.alpha = Some(param),
            Swept::Tau => params.tau = Some(param),
            Swept::Lambda => params.lambda = Some(param),
        }
        let value = EntropyFamily::from_name(&fa.family, params).and_then(|f| f.entropy(dist));
        match value {
            Ok(v) => rows.push((param, v)),
            Err(err) => {
                eprintln!(
                    "warning: skipping {} = {}: {}: {}",
                    fa.family,
                    format_value(param),
                    err.name(),
                    err
                );
                rows.push((param, f64::NAN));
            }
        }
    }

    let text = match args.format {
        OutputFormat::Csv => {
            let mut s = String::from("param,entropy\n");
            for (p, v) in &rows {
                s.push_str(&format!("{},{}\n", format_value(*p), format_value(*v)));
            }
            s
        }
        OutputFormat::Json => {
            let items: Vec<_> = rows
                .iter()
                .map(|(p, v)| {
                    let entropy = if v.is_nan() {
                        serde_json::Value::Null
                    } else {
                        json!(format_value(*v).parse::<f64>().unwrap_or(*v))
                    };
                    json!({ "param": p, "entropy": entropy })
                })
                .collect();
            serde_json::to_string(&items).expect("sweep serializes") + "\n"
        }
    };
    write_output(args.output.as_deref(), &text)?;
    Ok(ExitCode::SUCCESS)
}
