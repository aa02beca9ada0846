use std::process::ExitCode;
use std::time::Instant;

use clap::Parser;
use verifier_cli::{run, Args, Config, Format};

fn main() -> ExitCode {
    let args = Args::parse();
    let config = match Config::from_args(&args) {
        Ok(config) => config,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let start = Instant::now();
    let report = run(&config);
    match args.format {
        Format::Json => println!("{}", report.to_json()),
        Format::Text => {
            print!("{}", report.to_text());
            println!("elapsed {:.2?}", start.elapsed());
        }
    }
    ExitCode::from(report.exit_code() as u8)
}

