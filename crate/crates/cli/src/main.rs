fn main() {
    std::process::exit(ising_kitchen::run(std::env::args_os()));
}
