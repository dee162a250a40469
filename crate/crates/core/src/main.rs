use std::io::{self, BufWriter};

fn main() {
    let stdin = io::stdin();
    let code = extremal::cli::run(
        std::env::args_os(),
        &mut stdin.lock(),
        &mut BufWriter::new(io::stdout().lock()),
        &mut io::stderr().lock(),
    );
    std::process::exit(code);
}
