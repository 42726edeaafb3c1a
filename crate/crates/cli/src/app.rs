//! Command definitions and dispatch.

use std::io::Write;

use clap::{Parser, Subcommand};
use serde::Serialize;
use spbw_core::automorphisms::{
    build_standard_autos, check_automorphism, check_pairwise_commute, check_respects_relations,
};
use spbw_core::{certify, classify_case, Algebra, CertifyOptions, ExtensionPresentation, Verdict};

use crate::document::PresentationDocument;
use crate::error::CliError;
use crate::{expr, report};

#[derive(Parser, Debug)]
#[command(name = "spbw", version, about = "Skew PBW extensions: normal forms and smoothness certificates")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check the shape of a presentation file.
    Validate {
        file: String,
        #[arg(long)]
        json: bool,
    },
    /// List the matching table rows.
    Classify {
        file: String,
        #[arg(long)]
        json: bool,
    },
    /// Print the normal form of an expression.
    Reduce { file: String, expr: String },
    /// Print the standard automorphisms and their residual reports.
    Autos { file: String },
    /// Run the staged smoothness certification.
    Certify {
        file: String,
        #[arg(long, env = "SPBW_DEGREE", default_value_t = 6)]
        degree: u32,
        #[arg(long, default_value_t = 200)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        json: bool,
    },
}

fn load(file: &str) -> Result<ExtensionPresentation, CliError> {
    PresentationDocument::load(file)?.to_presentation(file)
}

fn load_valid(file: &str) -> Result<ExtensionPresentation, CliError> {
    let pres = load(file)?;
    let v = pres.validate_shape();
    if v.is_empty() {
        Ok(pres)
    } else {
        Err(CliError::Semantic(report::violations(&v).trim_end().to_string()))
    }
}

fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

fn run_command(cmd: &Command, out: &mut dyn Write) -> Result<i32, CliError> {
    let mut emit = |s: String| {
        let _ = out.write_all(s.as_bytes());
    };
    match cmd {
        Command::Validate { file, json: as_json } => {
            let v = load(file)?.validate_shape();
            emit(if *as_json { json(&v) } else { report::violations(&v) });
            Ok(if v.is_empty() { 0 } else { 1 })
        }
        Command::Classify { file, json: as_json } => {
            let labels = classify_case(&load_valid(file)?);
            emit(if *as_json {
                json(&labels)
            } else {
                report::classification(&labels)
            });
            Ok(0)
        }
        Command::Reduce { file, expr: src } => {
            let alg = Algebra::new(load_valid(file)?).map_err(|e| CliError::Semantic(e.to_string()))?;
            let nf = expr::reduce(&alg, src)?;
            emit(format!("{nf}\n"));
            Ok(0)
        }
        Command::Autos { file } => {
            let alg = Algebra::new(load_valid(file)?).map_err(|e| CliError::Semantic(e.to_string()))?;
            let nus = build_standard_autos(&alg);
            let mut ok = true;
            for nu in &nus {
                emit(format!("{}\n", report::images(&alg, nu)));
                let rep = check_respects_relations(&alg, nu);
                ok &= rep.all_zero;
                emit(report::residuals("  respects relations", &rep));
                let auto = check_automorphism(&alg, nu);
                ok &= auto;
                emit(format!("  automorphism: {}\n", if auto { "ok" } else { "FAILED" }));
            }
            let rep = check_pairwise_commute(&alg, &nus);
            ok &= rep.all_zero;
            emit(report::residuals("pairwise commute", &rep));
            Ok(if ok { 0 } else { 1 })
        }
        Command::Certify {
            file,
            degree,
            trials,
            seed,
            json: as_json,
        } => {
            let pres = load_valid(file)?;
            let opts = CertifyOptions {
                degree_bound: *degree,
                trials: *trials,
                seed: *seed,
            };
            let cert = certify(&pres, &opts);
            emit(if *as_json {
                json(&cert)
            } else {
                report::certificate(&cert)
            });
            Ok(if cert.verdict == Verdict::Smooth { 0 } else { 1 })
        }
    }
}

/// Runs a command, writing results to `out` and diagnostics to `err`; returns the exit code.
pub fn execute(cmd: &Command, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    match run_command(cmd, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}
