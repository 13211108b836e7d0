fn main() {
    std::process::exit(delannoy::cli::main_with_args(std::env::args_os()));
}
