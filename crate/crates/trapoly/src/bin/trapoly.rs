fn main() {
    std::process::exit(trapoly::cli::run(std::env::args_os()));
}
