use clap::Parser;

fn main() {
    let cfg = chromllt_cli::CliConfig::parse();
    std::process::exit(chromllt_cli::run(&cfg));
}
