fn main() {
    std::process::exit(neareq_cli::cli_main());
}
