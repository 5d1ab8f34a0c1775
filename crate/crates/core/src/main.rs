use std::io;

fn main() {
    let code = cosmic_bell::cli::run(std::env::args_os(), &mut io::stdout().lock(), &mut io::stderr().lock());
    std::process::exit(code);
}
