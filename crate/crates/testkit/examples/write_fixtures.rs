//! Regenerate the fixture corpus under `fixtures/` in canonical form:
//!
//! ```text
//! cargo run -p symflex-testkit --example write_fixtures
//! ```

use symflex_core::json::to_canonical_string;
use symflex_testkit::{corpus, fixtures_dir};

fn main() {
    let dir = fixtures_dir();
    std::fs::create_dir_all(&dir).expect("create fixtures directory");
    for (name, doc) in corpus::graph_fixtures() {
        let path = dir.join(name);
        std::fs::write(&path, to_canonical_string(&doc)).expect("write fixture");
        println!("wrote {}", path.display());
    }
    let colouring = corpus::triangle_ring12_c4_colouring();
    let path = dir.join("triangle_ring12_c4_colouring.json");
    std::fs::write(&path, to_canonical_string(&colouring)).expect("write fixture");
    println!("wrote {}", path.display());
}
