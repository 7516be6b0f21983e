fn main() {
    std::process::exit(kummer_strata::cli::run());
}
