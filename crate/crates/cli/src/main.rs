use std::io::Write;
use std::process::ExitCode;

use clap::Parser;

use adnil_cli::{run, RunConfig, EXIT_OK};

fn main() -> ExitCode {
    let config = RunConfig::parse();
    let (code, out) = run(&config);
    if code == EXIT_OK {
        print!("{out}");
    } else {
        eprint!("{out}");
    }
    let _ = std::io::stdout().flush();
    ExitCode::from(code as u8)
}
