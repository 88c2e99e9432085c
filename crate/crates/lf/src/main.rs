fn main() {
    println!("lf");
}
