use std::process::ExitCode;

fn main() -> ExitCode {
    djones::cli::main_with_args(std::env::args_os())
}
