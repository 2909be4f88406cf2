fn main() {
    std::process::exit(slt_core::cli::run(std::env::args_os()));
}
