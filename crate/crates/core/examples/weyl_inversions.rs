//! Elements of a Weyl group: reduced words, lengths and inversion sets.

use std::sync::Arc;

use shicone::root_system::build_root_system;
use shicone::weyl::WeylGroup;

fn main() -> shicone::Result<()> {
    let group = WeylGroup::new(Arc::new(build_root_system("A5".parse()?)));
    let sys = &group.system;
    // A non-reduced spelling collapses: s1 s1 is the identity.
    let long = group.parse_element("5 2 4 3 1 1 1")?;
    println!("{} has length {}", long.word_string(), long.length());

    // The inversion sequence follows the word the element was spelled with.
    let w = group.parse_element("5 2 4 3 1")?;

    let labels = |set: &[usize]| set.iter().map(|&k| sys.label(k)).collect::<Vec<_>>().join(", ");
    println!("N(w)      = {{{}}}", labels(&w.inversion_set()));
    println!("N(w^-1)   = {{{}}}", labels(&w.inverse_inversion_set()));
    println!("in order  = {}", labels(&w.inversion_sequence()));

    let order = group.order()?;
    let by_length = group.elements(1_000)?.iter().fold(vec![0u32; 16], |mut acc, e| {
        acc[e.length()] += 1;
        acc
    });
    println!("\n|W(A5)| = {order}; elements by length: {:?}", &by_length[..=15]);
    Ok(())
}
