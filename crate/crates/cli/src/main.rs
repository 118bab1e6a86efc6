use clap::Parser;

fn main() {
    let cli = qhcat_cli::Cli::parse();
    std::process::exit(qhcat_cli::run(&cli));
}
