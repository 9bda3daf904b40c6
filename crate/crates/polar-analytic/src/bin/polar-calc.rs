fn main() {
    std::process::exit(polar_analytic::cli::run());
}
