use std::process::ExitCode;

fn main() -> ExitCode {
    let outcome = hyperq::cli::run(std::env::args_os());
    if outcome.exit_code == 2 {
        eprint!("{}", outcome.report);
    } else {
        print!("{}", outcome.report);
    }
    ExitCode::from(outcome.exit_code as u8)
}
