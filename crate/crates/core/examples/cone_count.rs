//! Count the Shi regions in one Weyl cone and show the determinant behind the number.
//!
//! ```text
//! cargo run --example cone_count -- A5 "5 2 4 3 1"
//! ```

use shicone::cones::ConeEngine;

fn main() -> shicone::Result<()> {
    let mut args = std::env::args().skip(1);
    let t = args.next().unwrap_or_else(|| "B4".into()).parse()?;
    let word = args.next().unwrap_or_else(|| "2 3 4 1".into());

    let engine = ConeEngine::new(t, None)?;
    let w = engine.group.parse_element(&word)?;
    let res = engine.count(&w)?;
    let sys = engine.system();
    let labels: Vec<String> = res.inversions.iter().map(|&k| sys.label(k)).collect();
    println!("{t}, w = {word}: N(w^-1) = {{{}}}", labels.join(", "));
    for row in &res.matrix.rows {
        let cells: Vec<String> = row.iter().map(|x| format!("{x:>4}")).collect();
        println!("  {}", cells.join(""));
    }
    println!("regions in C_w: {}", res.value);
    Ok(())
}
