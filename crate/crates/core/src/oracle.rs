//! Brute-force references: antichain enumeration in the root poset and explicit path
//! enumeration in a digraph. Neither uses any determinant.

use std::collections::HashSet;

use num_bigint::BigInt;

use crate::dag::{Dag, Path};
use crate::digraph::ShiDigraph;
use crate::error::{Error, Result};
use crate::ring::{Poly, Ring};
use crate::root_system::RootSystem;

/// Largest restricted poset the bitmask enumerator accepts.
pub const MAX_POSET: usize = 128;
/// Largest number of paths the path enumerators will walk.
pub const MAX_PATHS: u64 = 10_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AntichainCount {
    pub total: u64,
    /// `by_size[k]` antichains have exactly `k` elements.
    pub by_size: Vec<u64>,
}

/// Counts antichains of `Phi^+` with the roots in `excluded` removed.
pub fn count_antichains(sys: &RootSystem, excluded: &[usize]) -> Result<AntichainCount> {
    let skip: HashSet<usize> = excluded.iter().copied().collect();
    // Index order is by height, hence a linear extension.
    let elems: Vec<usize> = (0..sys.num_positive()).filter(|k| !skip.contains(k)).collect();
    if elems.len() > MAX_POSET {
        return Err(Error::SizeLimit(format!(
            "{} roots exceed the antichain enumerator's {MAX_POSET}",
            elems.len()
        )));
    }
    let comp: Vec<u128> = elems
        .iter()
        .map(|&a| {
            elems.iter().enumerate().fold(0u128, |m, (j, &b)| {
                if sys.leq(a, b) || sys.leq(b, a) {
                    m | (1 << j)
                } else {
                    m
                }
            })
        })
        .collect();
    let mut by_size = vec![1u64];
    fn go(comp: &[u128], start: usize, blocked: u128, size: usize, by_size: &mut Vec<u64>) {
        for k in start..comp.len() {
            if blocked & (1 << k) == 0 {
                if by_size.len() <= size + 1 {
                    by_size.push(0);
                }
                by_size[size + 1] += 1;
                go(comp, k + 1, blocked | comp[k], size + 1, by_size);
            }
        }
    }
    go(&comp, 0, 0, 0, &mut by_size);
    Ok(AntichainCount {
        total: by_size.iter().sum(),
        by_size,
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct AvoidingPaths {
    pub total: BigInt,
    /// Paths counted by how many corners of the whole digraph they contain.
    pub by_corners: Poly,
}

/// Walks every source-to-sink path of `g` and keeps those containing no corner of a
/// root in `forbidden` (positive-root indices of `sys`).
pub fn count_avoiding_paths(
    g: &ShiDigraph,
    sys: &RootSystem,
    forbidden: &[usize],
) -> Result<AvoidingPaths> {
    let bad: HashSet<(usize, usize, usize)> = g
        .corners
        .iter()
        .filter(|c| sys.index_of(&c.root).is_some_and(|k| forbidden.contains(&k)))
        .map(|c| (c.bl, c.br, c.tr))
        .collect();
    let all = g.corner_triples();
    let mut by_corners: Vec<u64> = Vec::new();
    g.dag.for_each_path(g.source, g.sink, MAX_PATHS, |p| {
        let triples = p.windows(3).map(|w| (w[0], w[1], w[2]));
        if triples.clone().any(|t| bad.contains(&t)) {
            return;
        }
        let c = triples.filter(|t| all.contains(t)).count();
        if by_corners.len() <= c {
            by_corners.resize(c + 1, 0);
        }
        by_corners[c] += 1;
    })?;
    let by_corners = Poly::new(by_corners.iter().map(|&c| BigInt::from(c)).collect());
    Ok(AvoidingPaths {
        total: by_corners.eval(&BigInt::from(1)),
        by_corners,
    })
}

/// Sum of edge-weight products over `source -> sink` paths that contain no path of `forbidden`.
pub fn weighted_path_sum<R: Ring>(
    dag: &Dag,
    source: usize,
    sink: usize,
    forbidden: &[Path],
    weight: &impl Fn(usize, usize) -> R,
) -> Result<R> {
    let mut total = R::zero();
    dag.for_each_path(source, sink, MAX_PATHS, |p| {
        if forbidden.iter().any(|f| f.is_subpath_of(p)) {
            return;
        }
        let w = p
            .windows(2)
            .fold(R::one(), |acc, e| acc.times(&weight(e[0], e[1])));
        total = total.plus(&w);
    })?;
    Ok(total)
}
