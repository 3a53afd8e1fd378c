fn main() {
    std::process::exit(clifford_bloch::cli::run(std::env::args_os()));
}
