fn main() {
    std::process::exit(unitequi::cli::main_with_args(std::env::args_os()));
}
