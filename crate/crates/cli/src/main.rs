fn main() {
    std::process::exit(psdg_cli::run(std::env::args_os()));
}
