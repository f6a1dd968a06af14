fn main() {
    std::process::exit(wsn_datagen::cli::main_with(std::env::args_os()));
}
