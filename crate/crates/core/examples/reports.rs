//! Drive the command-line front end in process and render each format.

use binomeq::cli::{run, RunConfig};
use binomeq::report::Format;
use clap::Parser;

fn main() -> binomeq::Result<()> {
    let config = RunConfig::parse_from(["binomeq", "scan-hanson", "--n-max", "200"]);
    let env = run(&config)?;
    for format in [Format::Json, Format::Csv, Format::Text] {
        println!("--- {format:?}\n{}", env.render(format));
    }

    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = binomeq::cli::main_with_args(["binomeq", "solve", "--k", "9", "--a", "1"], &mut out, &mut err);
    println!("--- solve exit {code}\n{}", String::from_utf8_lossy(&out));
    Ok(())
}
