fn main() {
    std::process::exit(spverlinde_cli::run(std::env::args_os()));
}
