fn main() {
    colorfan::init_thread_pool();
    std::process::exit(colorfan::cli::main());
}
