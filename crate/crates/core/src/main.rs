fn main() {
    std::process::exit(gtface::cli::run(std::env::args_os()));
}
