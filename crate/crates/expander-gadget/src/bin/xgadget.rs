fn main() {
    std::process::exit(expander_gadget::cli::run(std::env::args_os()));
}
