//! Classical invariants of every supported Weyl type.
//!
//! ```text
//! cargo run --example root_invariants
//! ```

use shicone::root_system::build_root_system;

fn main() -> shicone::Result<()> {
    println!("{:<4} {:>4} {:>5} {:>4} {:>10} {:>8} {:>12}  exponents", "type", "rank", "|Φ+|", "h", "|W|", "catalan", "(h+1)^n");
    for s in ["A1", "A2", "A3", "A4", "B2", "B3", "C3", "D4", "D5", "G2", "F4", "E6", "E7", "E8"] {
        let sys = build_root_system(s.parse()?);
        let inv = sys.invariants()?;
        println!(
            "{:<4} {:>4} {:>5} {:>4} {:>10} {:>8} {:>12}  {:?}",
            s,
            sys.rank(),
            sys.num_positive(),
            inv.coxeter_number,
            inv.weyl_order,
            inv.catalan,
            inv.shi_regions,
            inv.exponents
        );
    }
    let b4 = build_root_system("B4".parse()?);
    let top = b4.index_of(b4.highest_root()).expect("highest root is positive");
    println!("\nB4 highest root {:?} = {}", b4.highest_root(), b4.label(top));
    Ok(())
}
