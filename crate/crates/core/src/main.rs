fn main() {
    std::process::exit(tauscope::cli::main_with_args(std::env::args_os()));
}
