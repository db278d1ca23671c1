fn main() {
    let t = std::time::Instant::now();
    match coarsecert::generate::generate_block(120, 9, 2024) {
        Ok(g) => println!("girth9 n=120 OK girth={} in {:?}", g.girth(), t.elapsed()),
        Err(e) => println!("FAILED: {e} after {:?}", t.elapsed()),
    }
}
