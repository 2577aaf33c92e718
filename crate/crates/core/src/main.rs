fn main() -> std::process::ExitCode {
    cyclesieve::cli::main()
}
