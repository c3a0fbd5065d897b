use std::process::ExitCode;

fn main() -> ExitCode {
    let (code, out) = primgen_cli::run(std::env::args_os());
    if code == 1 {
        eprint!("{out}");
    } else {
        print!("{out}");
    }
    ExitCode::from(u8::try_from(code).unwrap_or(1))
}
