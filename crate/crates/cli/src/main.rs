use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let out = musynth::run(std::env::args_os());
    let mut stdout = std::io::stdout().lock();
    let _ = stdout.write_all(out.output.as_bytes());
    let _ = stdout.flush();
    ExitCode::from(out.code as u8)
}
