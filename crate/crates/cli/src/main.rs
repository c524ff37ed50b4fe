use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let (code, out) = polymon_cli::run_args(std::env::args_os());
    // clap's own usage and help text is not JSON.
    let _ = if code == 2 && !out.starts_with('{') {
        write!(std::io::stderr(), "{out}")
    } else {
        writeln!(std::io::stdout(), "{out}")
    };
    ExitCode::from(code as u8)
}
