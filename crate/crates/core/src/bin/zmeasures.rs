fn main() {
    std::process::exit(zmeasures::cli::main_with_args(std::env::args_os()));
}
