use clap::Parser;

use evenscale::cli::{run, Cli};

fn main() {
    let cli = Cli::parse();
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    if let Err(error) = run(&cli, &mut out) {
        if error.exit_code != 0 {
            eprintln!("error: {}", error.message);
            std::process::exit(error.exit_code);
        }
    }
}
