fn main() {
    std::process::exit(posettop::cli::main());
}
