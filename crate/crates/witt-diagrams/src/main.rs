fn main() {
    std::process::exit(witt_diagrams::cli::run());
}
