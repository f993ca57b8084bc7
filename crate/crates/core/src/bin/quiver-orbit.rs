use clap::Parser;
use quiver_orbit::cli::{run, Cli};

fn main() {
    let out = run(&Cli::parse());
    print!("{}", out.stdout);
    eprint!("{}", out.stderr);
    std::process::exit(out.code);
}
