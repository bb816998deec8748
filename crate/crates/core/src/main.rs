fn main() {
    std::process::exit(airyherm::cli::run(std::env::args_os()));
}
