//! Command line front end: `.linf` definition files, verification commands
//! and deterministic text or JSON reports.

pub mod builtin;
pub mod dsl;
mod commands;
pub mod report;

use std::panic::{catch_unwind, AssertUnwindSafe};

use linf_core::gca::{set_term_limit, TermLimitExceeded, DEFAULT_TERM_LIMIT};

pub use commands::{dispatch, CliError};
pub use report::{Report, Status};

/// Captured output and exit status of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

/// Bounds on intermediate polynomial size from `LINF_MAX_TERMS`.
fn term_limit_from_env() -> Result<usize, String> {
    match std::env::var("LINF_MAX_TERMS") {
        Err(_) => Ok(DEFAULT_TERM_LIMIT),
        Ok(v) => v
            .trim()
            .parse::<usize>()
            .ok()
            .filter(|&n| n > 0)
            .ok_or_else(|| format!("LINF_MAX_TERMS must be a positive integer, got `{v}`")),
    }
}

/// Runs one command. `args` excludes the program name.
pub fn run(args: &[String]) -> Outcome {
    let command = args.join(" ");
    let json = args.iter().any(|a| a == "--json");
    let report = match term_limit_from_env() {
        Err(e) => Err(CliError::Usage(e)),
        Ok(limit) => {
            set_term_limit(limit);
            match catch_unwind(AssertUnwindSafe(|| dispatch(args))) {
                Ok(r) => r,
                Err(payload) => match payload.downcast::<TermLimitExceeded>() {
                    Ok(t) => Ok(Report::error(
                        &command,
                        Status::Overflow,
                        &format!("term limit exceeded: {} terms > LINF_MAX_TERMS = {}", t.reached, t.limit),
                    )),
                    Err(other) => std::panic::resume_unwind(other),
                },
            }
        }
    };
    let report = match report {
        Ok(r) => r,
        Err(CliError::Clap(e)) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome { stdout: text, stderr: String::new(), code }
            } else {
                Outcome { stdout: String::new(), stderr: text, code }
            };
        }
        Err(e) => Report::error(&command, e.status(), &e.to_string()),
    };
    let code = report.status.exit_code();
    if json {
        Outcome { stdout: report.to_json(), stderr: String::new(), code }
    } else if matches!(report.status, Status::Error | Status::Overflow) {
        Outcome { stdout: String::new(), stderr: report.to_text(), code }
    } else {
        Outcome { stdout: report.to_text(), stderr: String::new(), code }
    }
}
