fn main() {
    std::process::exit(hdiff::cli::main_from_env());
}
