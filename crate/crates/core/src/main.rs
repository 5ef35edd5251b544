use std::process::ExitCode;

fn main() -> ExitCode {
    let out = faulhaber_core::cli::run(std::env::args_os());
    if out.exit_code == 0 {
        println!("{}", out.payload);
    } else {
        eprintln!("{}", out.payload);
    }
    ExitCode::from(out.exit_code as u8)
}
