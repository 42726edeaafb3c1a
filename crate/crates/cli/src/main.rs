use clap::Parser;
use spbw_cli::{execute, Cli};

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            std::process::exit(code);
        }
    };
    let code = execute(&cli.command, &mut std::io::stdout(), &mut std::io::stderr());
    std::process::exit(code);
}
