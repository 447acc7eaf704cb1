fn main() {
    let (code, out) = ringcoh::cli::run(std::env::args_os());
    print!("{out}");
    std::process::exit(code);
}
