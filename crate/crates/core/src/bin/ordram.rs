use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let result = ordered_ramsey::cli::run(std::env::args_os());
    if !result.stderr.is_empty() {
        eprint!("{}", result.stderr);
        if !result.stderr.ends_with('\n') {
            eprintln!();
        }
    }
    let mut stdout = std::io::stdout().lock();
    let _ = stdout.write_all(result.stdout().as_bytes());
    ExitCode::from(result.exit_code as u8)
}
