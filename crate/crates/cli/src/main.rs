use std::io::Write;

fn main() {
    let out = complicial_cli::commands::run(std::env::args_os());
    print!("{}", out.stdout);
    if !out.stderr.is_empty() {
        eprint!("{}", out.stderr);
        if !out.stderr.ends_with('\n') {
            eprintln!();
        }
    }
    let _ = std::io::stdout().flush();
    std::process::exit(out.code);
}
