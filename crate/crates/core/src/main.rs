fn main() {
    std::process::exit(quasitile::cli::run(std::env::args_os()));
}
