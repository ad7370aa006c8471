fn main() {
    std::process::exit(chibound::cli::run(std::env::args_os()));
}
