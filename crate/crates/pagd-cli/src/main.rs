fn main() { println!("pagd"); }
