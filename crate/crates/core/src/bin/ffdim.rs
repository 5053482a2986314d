fn main() {
    std::process::exit(ffdim::cli::main());
}
