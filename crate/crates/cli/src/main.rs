use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let invocation = match lyabound_cli::parse_args(std::env::args_os()) {
        Ok(inv) => inv,
        Err(e) => {
            if e.code == 0 {
                print!("{}", e.message);
            } else {
                eprint!("{}", e.message.trim_end());
                eprintln!();
            }
            return ExitCode::from(e.code as u8);
        }
    };
    let outcome = lyabound_cli::run(&invocation);
    let mut stdout = std::io::stdout().lock();
    let _ = stdout.write_all(outcome.stdout.as_bytes());
    ExitCode::from(outcome.code as u8)
}
