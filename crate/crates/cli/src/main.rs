use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use stressforge_cli::commands::{run, Cli};
use stressforge_cli::report::error_report;
use stressforge_cli::{thread_cap, EXIT_DOMAIN, EXIT_USAGE};

fn print(v: &serde_json::Value) {
    let mut out = std::io::stdout().lock();
    let _ = serde_json::to_writer_pretty(&mut out, v);
    let _ = out.write_all(b"\n");
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code as u8);
        }
    };
    match thread_cap() {
        Ok(Some(n)) => {
            if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
                eprintln!("stressforge: {e}");
                return ExitCode::from(EXIT_USAGE as u8);
            }
        }
        Ok(None) => {}
        Err(msg) => {
            eprintln!("stressforge: {msg}");
            return ExitCode::from(EXIT_USAGE as u8);
        }
    }
    match run(&cli.command) {
        Ok(report) => {
            print(&report);
            ExitCode::SUCCESS
        }
        Err(e) => {
            print(&error_report(&e));
            ExitCode::from(EXIT_DOMAIN as u8)
        }
    }
}
