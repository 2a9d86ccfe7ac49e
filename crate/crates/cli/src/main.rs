fn main() {
    std::process::exit(condlog_cli::run(std::env::args()));
}
