use clap::Parser;
use std::process::ExitCode;
use vogel_g4::cli::{run, RunConfig};

fn main() -> ExitCode {
    let cfg = RunConfig::parse();
    match run(&cfg) {
        Ok(out) => {
            for n in &out.notices {
                eprintln!("{n}");
            }
            match &cfg.out {
                Some(path) => {
                    if let Err(e) = std::fs::write(path, &out.text) {
                        eprintln!("error: cannot write {}: {e}", path.display());
                        return ExitCode::from(2);
                    }
                }
                None => print!("{}", out.text),
            }
            ExitCode::from(out.exit as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
