use std::process::ExitCode;

use autocomm::cli::{run, Cli};
use clap::Parser;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = std::io::stdout();
    match run(&cli, &mut stdout.lock()) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            if e.exit_code() == 3 {
                eprintln!("hint: raise the limit with --aut-cap, --witness-cap or --quotient-cap");
            }
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
