use std::process::ExitCode;

fn main() -> ExitCode {
    fastmis::cli::main_with(std::env::args_os())
}
