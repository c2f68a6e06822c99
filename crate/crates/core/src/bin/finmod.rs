fn main() {
    std::process::exit(finmod::cli::main());
}
