fn main() {
    std::process::exit(edf_forge_cli::main_with_stdio());
}
