//! The determinant for paths avoiding a set of forbidden subpaths works on any DAG with any
//! edge weights, as long as the forbidden paths do not overlap.

use num_bigint::BigInt;
use shicone::dag::{check_nonoverlapping, forbidden_count, forbidden_count_unweighted, Dag, Path};
use shicone::oracle::weighted_path_sum;
use shicone::ring::Poly;

fn main() -> shicone::Result<()> {
    // 0 -> 1 -> 3 -> 5, 0 -> 2 -> 3 -> 4 -> 5, plus a few shortcuts.
    let dag = Dag::new(6, &[(0, 1), (0, 2), (1, 3), (2, 3), (3, 4), (4, 5), (3, 5), (1, 4), (2, 5)])?;
    let forbidden = [Path(vec![0, 1, 3]), Path(vec![3, 4])];
    check_nonoverlapping(&forbidden).expect("disjoint runs");

    let plain = forbidden_count_unweighted(&dag, 0, 5, &forbidden, false)?;
    println!("avoiding paths: {plain}");

    let w = |a: usize, b: usize| BigInt::from((a + 2 * b) as i64 % 5 + 1);
    let det = forbidden_count(&dag, 0, 5, &forbidden, &w, false)?;
    let brute = weighted_path_sum(&dag, 0, 5, &forbidden, &w)?;
    println!("weighted: determinant {det}, enumeration {brute}");

    // Weights can live in any ring; here each edge into vertex 5 carries t.
    let tw = |_: usize, b: usize| if b == 5 { Poly::t() } else { Poly::from_i64(&[1]) };
    println!("by last step: {}", forbidden_count(&dag, 0, 5, &forbidden, &tw, false)?);

    // Overlapping runs break the formula, so they are refused unless explicitly allowed.
    let bad = [Path(vec![0, 1, 3]), Path(vec![1, 3, 4])];
    match forbidden_count_unweighted(&dag, 0, 5, &bad, false) {
        Err(e) => println!("refused: {e}"),
        Ok(v) => println!("unexpectedly accepted: {v}"),
    }
    let forced = forbidden_count_unweighted(&dag, 0, 5, &bad, true)?;
    let truth = weighted_path_sum(&dag, 0, 5, &bad, &|_, _| BigInt::from(1))?;
    println!("forced determinant {forced} vs true count {truth}");
    Ok(())
}
