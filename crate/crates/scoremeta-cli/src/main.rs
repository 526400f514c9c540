fn main() {
    println!("scoremeta");
}
