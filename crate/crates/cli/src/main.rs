use std::io::{self, BufWriter, Write};
use std::process::ExitCode;

use asm_cli::{run, Cli, Failure};
use clap::Parser;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdin = io::stdin();
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let result = run(&cli, &mut stdin.lock(), &mut out).and_then(|()| out.flush().map_err(Failure::from));
    drop(out);
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            if let Some(m) = f.message().filter(|m| !m.is_empty()) {
                eprintln!("asmtool: {m}");
            }
            ExitCode::from(f.exit_code() as u8)
        }
    }
}
