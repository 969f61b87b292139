fn main() {
    involutive::io::cli_main();
}
