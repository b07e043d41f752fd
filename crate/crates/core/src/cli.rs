//! Command-line driver. Full command tree lives here.

/// Run the CLI; returns the process exit code.
pub fn run(_argv: Vec<String>) -> i32 {
    eprintln!("not yet wired");
    2
}
