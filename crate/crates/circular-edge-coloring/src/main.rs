use std::io::Write;

use clap::Parser;

use circular_edge_coloring::cli::{self, Cli};

fn main() {
    let cli = Cli::parse();
    let stdout = std::io::stdout();
    let mut handle = stdout.lock();
    if let Err(error) = cli::run(cli, &mut handle) {
        let _ = handle.flush();
        eprintln!("error: {error}");
        std::process::exit(error.exit_code());
    }
}
