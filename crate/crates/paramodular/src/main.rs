fn main() {
    std::process::exit(paramodular::cli::run());
}
