use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    let mut out = std::io::BufWriter::new(stdout.lock());
    let code = adlv::cli::main_with_args(std::env::args(), &mut out, &mut stderr.lock());
    let _ = out.flush();
    ExitCode::from(code)
}
