fn main() {
    std::process::exit(ortho_zeros_cli::run(std::env::args_os()));
}
