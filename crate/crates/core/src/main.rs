fn main() {
    std::process::exit(quotlab::cli::run(std::env::args_os()));
}
