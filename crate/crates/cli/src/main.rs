use std::io::Write;
use std::panic;

fn main() {
    let outcome = panic::catch_unwind(|| spreadlab_cli::run(std::env::args_os()));
    let (code, out, err) = outcome.unwrap_or_else(|_| (1, String::new(), "error: internal failure\n".into()));
    std::io::stdout().write_all(out.as_bytes()).ok();
    std::io::stderr().write_all(err.as_bytes()).ok();
    std::process::exit(code);
}
