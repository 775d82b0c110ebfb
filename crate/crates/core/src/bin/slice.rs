fn main() {
    std::process::exit(johnson_slice::cli::run(std::env::args_os()));
}
