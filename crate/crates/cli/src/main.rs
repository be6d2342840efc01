fn main() {
    std::process::exit(dirac_verify::main_with(std::env::args_os()));
}
