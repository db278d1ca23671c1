//! Writes a catalog block as a plain edge list on stdout.
//!
//! ```text
//! cargo run --release -p coarsecert --example dump_block -- girth14 > g14.edges
//! ```

use coarsecert::catalog;

fn main() {
    let name = std::env::args().nth(1).expect("usage: dump_block <catalog-name>");
    let g = catalog::by_name(&name).expect("catalog block");
    println!("# {} vertices, girth {}", g.n(), g.girth());
    for &(u, v) in g.edges() {
        println!("{u} {v}");
    }
}
