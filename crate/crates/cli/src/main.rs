use std::process::ExitCode;

use anyhow::Result;
use clap::Parser;
use monocurve_cli::args::{Cli, Command, ResolveArgs, ScanArgs};
use monocurve_cli::commands::{self, field_name, ResolveOptions};
use monocurve_cli::config::Config;
use monocurve_cli::{with_field, CliError, EXIT_OK, EXIT_RESOURCE, EXIT_VERIFY_FAILED};

fn resolve(args: ResolveArgs, force_verify: bool) -> Result<u8, CliError> {
    let config = Config::load_optional(args.config.as_deref())?;
    let opts = ResolveOptions {
        method: args.method,
        verify: args.verify || force_verify,
        emit_matrices: args.emit_matrices,
        timing: args.timing,
        config,
    };
    let name = field_name(args.field);
    let s = &args.seq;
    let report = with_field!(args.field, F => commands::resolve::<F>(s.m0, s.d, s.n, &name, &opts))?;
    if args.json {
        println!("{}", report.to_json());
    } else {
        print!("{}", report.render_text());
    }
    Ok(if report.all_checks_passed() { EXIT_OK } else { EXIT_VERIFY_FAILED })
}

fn scan(args: ScanArgs) -> Result<u8, CliError> {
    let config = Config::load_optional(args.config.as_deref())?;
    let a = args.a_range().map_err(CliError::Invalid)?;
    let d = args.d_range().map_err(CliError::Invalid)?;
    let name = field_name(args.field);
    let report = with_field!(args.field, F => commands::scan::<F>(args.n, args.b, a.clone(), d.clone(), &name, &config))?;
    if args.json {
        println!("{}", report.to_json());
    } else {
        print!("{}", report.render_text());
    }
    for c in report.skipped() {
        eprintln!("skipped a={} d={}: {}", c.a, c.d, c.reason.as_deref().unwrap_or(""));
    }
    Ok(if report.skipped().next().is_some() { EXIT_RESOURCE } else { EXIT_OK })
}

fn run(cli: Cli) -> Result<u8, CliError> {
    match cli.command {
        Command::Gens(args) => {
            let r = commands::gens(args.seq.m0, args.seq.d, args.seq.n)?;
            if args.json {
                println!("{}", r.to_json());
            } else {
                print!("{}", r.render_text());
            }
            Ok(EXIT_OK)
        }
        Command::Resolve(args) => resolve(args, false),
        Command::Verify(args) => resolve(args, true),
        Command::Scan(args) => scan(args),
    }
}

fn main() -> Result<ExitCode> {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => Ok(ExitCode::from(code)),
        Err(e) => {
            eprintln!("error: {e}");
            Ok(ExitCode::from(e.exit_code()))
        }
    }
}
