fn main() {
    let stdout = &mut std::io::stdout().lock();
    let stderr = &mut std::io::stderr().lock();
    std::process::exit(maxplus_walk::cli::run(std::env::args_os(), stdout, stderr));
}
