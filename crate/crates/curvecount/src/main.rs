fn main() {
    std::process::exit(curvecount::cli::run());
}
