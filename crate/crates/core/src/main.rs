fn main() {
    std::process::exit(octoclif::cli::run(std::env::args_os()));
}
