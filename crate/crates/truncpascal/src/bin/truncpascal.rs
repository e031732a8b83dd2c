fn main() {
    std::process::exit(truncpascal::cli::run());
}
