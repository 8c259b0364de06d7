fn main() {
    std::process::exit(unideck::cli::run());
}
