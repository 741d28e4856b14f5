fn main() {
    std::process::exit(surfinv_cli::run(std::env::args_os()));
}
