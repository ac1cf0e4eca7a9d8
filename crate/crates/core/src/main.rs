fn main() {
    std::process::exit(semitrans::cli::run(std::env::args_os()));
}
