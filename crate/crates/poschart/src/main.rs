fn main() {
    std::process::exit(poschart::cli::run(std::env::args_os()));
}
