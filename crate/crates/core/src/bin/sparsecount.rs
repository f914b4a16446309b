fn main() {
    std::process::exit(sparsecount::harness::run(std::env::args_os()));
}
