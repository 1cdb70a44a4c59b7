//! Regenerate the bundled corpus: `cargo run --example gen_corpus -- corpus`.

use std::path::PathBuf;

fn main() {
    let dir = PathBuf::from(std::env::args().nth(1).unwrap_or_else(|| "corpus".into()));
    std::fs::create_dir_all(&dir).expect("create corpus directory");
    for (name, table) in idemdim::corpus::generate(idemdim::core::sample::DEFAULT_SEED) {
        let path = dir.join(format!("{name}.json"));
        idemdim::corpus::save_table(&table, &path).expect("write table");
        println!("{} ({} elements)", path.display(), table.size());
    }
}
