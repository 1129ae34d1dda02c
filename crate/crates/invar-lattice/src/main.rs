fn main() {
    std::process::exit(invar_lattice::cli::run(std::env::args_os()));
}
