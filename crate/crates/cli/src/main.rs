use clap::Parser;
use necklace_cli::{run, Cli};
use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = std::io::stdout();
    let mut out = std::io::BufWriter::new(stdout.lock());
    let result = run(&cli, &mut out);
    let flushed = out.flush();
    match result {
        Ok(()) => {
            // A closed pipe (e.g. `necklace list | head`) is not an error.
            let _ = flushed;
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("necklace: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
