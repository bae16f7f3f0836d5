use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use steinberg_lab::commands::{caps, run, Cli};
use steinberg_lab::{write_records, LabResult};

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match execute(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("steinberg-lab: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

fn execute(cli: &Cli) -> LabResult<bool> {
    let caps = caps(&cli.opts)?;
    let records = run(&cli.command, &cli.opts, &caps)?;
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    write_records(&mut out, &records, cli.opts.format)?;
    out.flush()?;
    let failed: Vec<_> = records.iter().filter(|r| !r.pass).collect();
    for r in &failed {
        for f in &r.failures {
            eprintln!("FAIL {} {}: {f}", r.task, r.params);
        }
    }
    Ok(failed.is_empty())
}
