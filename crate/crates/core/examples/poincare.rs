//! Corner-weighted determinants: regions of a cone counted by number of separating walls.
//! For the identity this is the Narayana polynomial of the type.

use shicone::cones::ConeEngine;

fn main() -> shicone::Result<()> {
    for s in ["A2", "A3", "B3", "D4", "G2", "F4"] {
        let e = ConeEngine::new(s.parse()?, None)?;
        println!("{s:<3} identity: {}", e.poincare(&e.group.identity())?.value);
    }
    let e = ConeEngine::new("A2".parse()?, None)?;
    for w in ["", "1", "1 2", "1 2 1"] {
        let p = e.poincare(&e.group.parse_element(w)?)?.value;
        println!("A2  w = {:<6} {p}", if w.is_empty() { "e" } else { w });
    }
    Ok(())
}
