//! Digraphs can be saved as JSON and loaded back; an engine built on a loaded digraph uses
//! dynamic programming for its matrix entries. This is how E6 data is supplied.

use shicone::cones::ConeEngine;
use shicone::digraph::{build_digraph, export_json, import_json};

fn main() -> shicone::Result<()> {
    let t = "F4".parse()?;
    let text = export_json(&build_digraph(t, None)?);
    let path = std::env::temp_dir().join("shicone-f4.json");
    std::fs::write(&path, &text).map_err(|source| shicone::Error::Io { path: path.clone(), source })?;
    println!("wrote {} ({} bytes)", path.display(), text.len());

    let loaded = import_json(&std::fs::read_to_string(&path).expect("just written"))?;
    let engine = ConeEngine::with_digraph(t, loaded)?;
    let w = engine.group.parse_element("1 2 3 4")?;
    let v = engine.verify(&w)?;
    println!("F4 w = 1 2 3 4: {} regions, oracle agrees: {}", v.determinant, v.passed());
    Ok(())
}
