use std::process::exit;

fn main() {
    exit(coha::cli::run());
}
