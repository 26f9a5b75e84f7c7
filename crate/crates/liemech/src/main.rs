fn main() {
    std::process::exit(liemech::dispatch(std::env::args_os()));
}
