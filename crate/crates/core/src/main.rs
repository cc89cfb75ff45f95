use std::process::ExitCode;

fn main() -> ExitCode {
    cyclorth::cli::main()
}
