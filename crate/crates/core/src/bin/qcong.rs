fn main() {
    std::process::exit(qcongruence::cli::run(std::env::args()));
}
