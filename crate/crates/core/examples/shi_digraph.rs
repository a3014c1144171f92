//! Build a Shi digraph, check its path/antichain bijection and print it as DOT.
//!
//! ```text
//! cargo run --example shi_digraph -- B3 > b3.dot
//! ```

use shicone::digraph::{build_digraph, export_dot, validate_digraph};
use shicone::root_system::build_root_system;

fn main() -> shicone::Result<()> {
    let arg = std::env::args().nth(1).unwrap_or_else(|| "A3".into());
    let t = arg.parse()?;
    let sys = build_root_system(t);
    let g = build_digraph(t, None)?;
    let report = validate_digraph(&g, &sys)?;
    eprintln!(
        "{t}: {} vertices, {} edges, {} corners for {} roots, {} paths = {} antichains",
        g.vertices.len(),
        g.dag.edge_list().len(),
        report.corners,
        sys.num_positive(),
        report.paths,
        report.antichains
    );
    for c in &g.corners {
        let k = sys.index_of(&c.root).expect("corner roots are positive");
        let v = |i: usize| (g.vertices[i].x, g.vertices[i].y);
        eprintln!("  {:<10} {:?} -> {:?} -> {:?}", sys.label(k), v(c.bl), v(c.br), v(c.tr));
    }
    print!("{}", export_dot(&g));
    Ok(())
}
