fn main() -> std::process::ExitCode {
    adolg::cli::main()
}
