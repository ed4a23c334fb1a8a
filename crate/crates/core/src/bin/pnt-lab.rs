fn main() {
    std::process::exit(pnt_lab::cli::run(std::env::args_os()));
}
