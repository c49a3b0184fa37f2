fn main() {
    std::process::exit(position_centrality::cli::main_with_args(std::env::args_os()));
}
