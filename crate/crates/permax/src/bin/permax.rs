fn main() {
    // die quietly when output is piped into a closed reader
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    std::process::exit(permax::cli::run());
}
