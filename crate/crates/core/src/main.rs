fn main() {
    std::process::exit(mertenslab::cli::run(std::env::args().collect()));
}
