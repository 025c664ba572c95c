fn main() {
    std::process::exit(bloch_periods::cli::main_with_args(std::env::args_os()));
}
