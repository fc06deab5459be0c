fn main() {
    std::process::exit(minuscule_cli::run());
}
