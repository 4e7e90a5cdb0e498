use std::process::ExitCode;

fn main() -> ExitCode {
    ExitCode::from(rote_words::cli::run())
}
