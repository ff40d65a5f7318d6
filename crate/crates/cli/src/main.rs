fn main() {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    let code = broken_stick_cli::run(
        std::env::args_os(),
        std::env::var(broken_stick_cli::config::SEED_VARIABLE).ok(),
        &mut stdout.lock(),
        &mut stderr.lock(),
    );
    std::process::exit(code);
}
