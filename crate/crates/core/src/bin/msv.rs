fn main() {
    std::process::exit(msv::cli::run(std::env::args_os()));
}
