use std::io::Write;

fn main() {
    let (code, out) = ellsurf::cli::run(std::env::args_os());
    if !out.is_empty() {
        // A closed pipe (`ellsurf ... | head`) is not an error.
        let _ = if code == 0 {
            writeln!(std::io::stdout().lock(), "{out}")
        } else {
            writeln!(std::io::stderr().lock(), "{out}")
        };
    }
    std::process::exit(code);
}
