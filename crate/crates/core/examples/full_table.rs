//! Region counts for every cone of a group, in parallel. The counts add up to the
//! number of regions of the whole Shi arrangement.

use num_bigint::BigInt;
use shicone::cones::ConeEngine;
use shicone::root_system::WeylType;

fn main() -> shicone::Result<()> {
    let t: WeylType = std::env::args().nth(1).unwrap_or_else(|| "B3".into()).parse()?;
    let engine = ConeEngine::new(t, None)?;
    let rows = engine.table(false, 100_000)?;
    let mut by_length: Vec<(usize, BigInt)> = Vec::new();
    for r in &rows {
        match by_length.last_mut() {
            Some((l, s)) if *l == r.length => *s += &r.count,
            _ => by_length.push((r.length, r.count.clone())),
        }
    }
    for (l, s) in &by_length {
        println!("length {l:>2}: {s}");
    }
    let total: BigInt = rows.iter().map(|r| &r.count).sum();
    let expected = engine.system().invariants()?.shi_regions;
    println!("{t}: {} cones, {total} regions, (h+1)^rank = {expected}", rows.len());
    Ok(())
}
