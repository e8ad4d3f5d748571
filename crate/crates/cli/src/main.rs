use std::io;
use std::process::ExitCode;

fn main() -> ExitCode {
    let code = pomlab::run(
        std::env::args_os(),
        &mut io::stdout(),
        &mut io::stderr().lock(),
    );
    ExitCode::from(code)
}
