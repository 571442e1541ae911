use std::process::ExitCode;

fn main() -> ExitCode {
    ExitCode::from(rainbow_core::cli::run())
}
