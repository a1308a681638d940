fn main() {
    std::process::exit(weylcount::cli::run(std::env::args_os()));
}
