//! Path counts between corner endpoints: closed forms for the classical digraphs and a
//! generic dynamic program that serves both as the exceptional-type counter and as the
//! reference the closed forms are tested against.

use std::collections::{HashMap, HashSet};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::digraph::{ShiDigraph, Vertex};
use crate::error::{Error, Result};
use crate::ring::{Poly, Ring};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct LatticePoint {
    pub x: i64,
    pub y: i64,
}

pub const fn pt(x: i64, y: i64) -> LatticePoint {
    LatticePoint { x, y }
}

impl From<Vertex> for LatticePoint {
    fn from(v: Vertex) -> Self {
        pt(v.x, v.y)
    }
}

/// `C(n, k)`, zero whenever `k < 0`, `k > n` or `n < 0`.
pub fn binom(n: i64, k: i64) -> BigInt {
    if k < 0 || n < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// North/east lattice paths from `p` to `q` that stay weakly above `y = x`.
pub fn ballot_count(p: LatticePoint, q: LatticePoint) -> BigInt {
    if p.x > q.x || p.y > q.y {
        return BigInt::zero();
    }
    let delta = (q.x - p.x) + (q.y - p.y);
    binom(delta, q.y - p.y) - binom(delta, q.y - p.x + 1)
}

/// Paths from `p` to the sink `(1, 2n)` of the rank-`n` type-B digraph.
///
/// Every such path meets the antidiagonal `x + y = 2n` exactly once and is then forced
/// along the top boundary. Both the direct sum over antidiagonal points and the shortened
/// telescoped form are evaluated; a disagreement is reported as an internal error.
pub fn diag_sum(p: LatticePoint, n: i64) -> Result<BigInt> {
    if p.y == 2 * n - p.x + 1 {
        return Ok(BigInt::one());
    }
    let raw: BigInt = (0..=n).map(|i| ballot_count(p, pt(i, 2 * n - i))).sum();
    let (a, b) = (p.x, p.y);
    let j = 2 * n - a - b;
    let m = n.min(2 * n - b);
    let c = b - a;
    let term = |i: i64| binom(j, j + a - i);
    let upper: BigInt = ((a.max(m - c))..=m).map(term).sum();
    let lower: BigInt = ((a - c - 1)..a.min(m - c)).map(term).sum();
    let short = upper - lower;
    if short != raw {
        return Err(Error::Internal(format!(
            "diagonal sum from ({a},{b}) in rank {n}: direct {raw}, shortened {short}"
        )));
    }
    Ok(raw)
}

/// Type-B entry: the diagonal sum when `q` is the sink, a ballot count otherwise.
pub fn gamma_b(p: LatticePoint, q: LatticePoint, n: i64) -> Result<BigInt> {
    if q == pt(1, 2 * n) {
        diag_sum(p, n)
    } else {
        Ok(ballot_count(p, q))
    }
}

/// Ballot paths from `(a, b)` to `(c, d)` counted by number of east-then-north corners.
pub fn corner_poly_a(p: LatticePoint, q: LatticePoint) -> Poly {
    if p.x > q.x || p.y > q.y {
        return Poly::zero();
    }
    let (a, b, c, d) = (p.x, p.y, q.x, q.y);
    let top = (c - a).min(d - b);
    Poly::new(
        (0..=top)
            .map(|l| {
                binom(d - b, l) * binom(c - a, l) - binom(d - a - 1, l - 1) * binom(c - b + 1, l + 1)
            })
            .collect(),
    )
}

/// Path counts between role vertices of the rank-`n` type-D digraph.
///
/// `v1` must be the source or the top-right vertex of a corner and `v2` the sink or the
/// bottom-left vertex of a corner.
pub fn gamma_d(v1: Vertex, v2: Vertex, n: i64) -> Result<BigInt> {
    check_d_roles(v1, v2, n)?;
    let m = n - 2;
    let gb = |i: i64| gamma_b(pt(i, m), pt(v2.x, v2.y), m);
    let p1 = pt(v1.x, v1.y);
    // Paths from v1 to the top-row sink (k, n-1) of the bottom staircase. That row has
    // no east edges, so the count is a ballot count to the row below, unless v1 already
    // sits on the top row.
    let to_top = |k: i64| -> BigInt {
        if v1.y == n - 1 {
            BigInt::from((v1.x == k) as i64)
        } else {
            ballot_count(p1, pt(k, n - 2))
        }
    };
    // Paths inside a strip of the third kind, with j - 1 east top edges, from the
    // bottom vertex (k, 0) to the top vertex (i, 1).
    let lambda = |i: i64, j: i64, k: i64| -> i64 {
        if i == j - 1 {
            j - k + (i == n - 2) as i64
        } else if i == n - 2 {
            2
        } else {
            1
        }
    };
    let mu = |j: i64| if j == n - 1 { 2 } else { 1 };

    Ok(match (v1.u, v2.u) {
        (1, 1) => ballot_count(p1, pt(v2.x, v2.y)),
        (1, 2) => to_top(v2.v as i64 - 1),
        (1, 3) => {
            let j = v2.v as i64;
            (0..=v2.x.min(j - 1)).map(|k| mu(j) * to_top(k)).sum()
        }
        (1, 4) => {
            let mut total = BigInt::zero();
            for i in 0..=m {
                let g = gb(i)?;
                if g.is_zero() {
                    continue;
                }
                for j in 1..=i + 1 {
                    for k in 0..j {
                        total += mu(j) * lambda(i, j, k) * to_top(k) * &g;
                    }
                }
            }
            total
        }
        (2, 3) => {
            let v = (v1.x + 1).min(n - 1);
            BigInt::from((v2.v as i64 == v && v2.x >= v1.v as i64 - 1) as i64)
        }
        (2, 4) => {
            let v = (v1.x + 1).min(n - 1);
            let k = v1.v as i64 - 1;
            let mut total = BigInt::zero();
            for i in v - 1..=m {
                total += lambda(i, v, k) * gb(i)?;
            }
            total
        }
        (3, 4) => {
            let start = if v1.x < v1.v as i64 {
                v1.v as i64 - 1
            } else {
                v1.x.min(n - 2)
            };
            gb(start)?
        }
        (4, 4) => gamma_b(p1, pt(v2.x, v2.y), m)?,
        _ => BigInt::zero(),
    })
}

fn check_d_roles(v1: Vertex, v2: Vertex, n: i64) -> Result<()> {
    let m = n - 2;
    let (vv1, vv2) = (v1.v as i64, v2.v as i64);
    let start_ok = match v1.u {
        1 => (v1.x, v1.y) == (0, 1) || (v1.x >= 1 && v1.x < v1.y && v1.y <= n - 1),
        2 => v1.y == 1 && (1..n).contains(&vv1) && v1.x >= vv1 && v1.x <= n - 1,
        3 => v1.y == 1 && (1..n).contains(&vv1) && (1..n).contains(&v1.x),
        4 => v1.x >= 1 && v1.x <= m && v1.y > m && v1.y <= 2 * m - v1.x + 1,
        _ => false,
    };
    let end_ok = match v2.u {
        1 => v2.x >= 0 && v2.x < v2.y && v2.y <= n - 2,
        2 => v2.y == 0 && (1..n).contains(&vv2) && v2.x >= vv2 - 1 && v2.x <= n - 2,
        3 => v2.y == 0 && (1..n).contains(&vv2) && (0..=n - 2).contains(&v2.x),
        4 => (v2.x, v2.y) == (1, 2 * m) || (v2.x >= 0 && v2.x < m && v2.y >= m && v2.y <= 2 * m - v2.x - 1),
        _ => false,
    };
    if start_ok && end_ok {
        Ok(())
    } else {
        Err(Error::Contract(format!(
            "({},{})_({},{}) -> ({},{})_({},{}) is not a source/corner-end to corner-start/sink pair in D{n}",
            v1.x, v1.y, v1.u, v1.v, v2.x, v2.y, v2.u, v2.v
        )))
    }
}

/// Number of directed paths between two vertices.
pub fn dp_count(g: &ShiDigraph, v1: usize, v2: usize) -> BigInt {
    g.dag.counts_from(v1)[v2].clone()
}

/// Corner-refined path sums from `src` to every vertex: a path contributes `t^c` where `c`
/// is the number of corners of `g` it passes through.
pub fn dp_corner_polys_from(g: &ShiDigraph, src: usize, corners: &HashSet<(usize, usize, usize)>) -> Vec<Poly> {
    let n = g.dag.len();
    // State: (vertex, predecessor), with `usize::MAX` standing for "path starts here".
    let mut states: Vec<HashMap<usize, Poly>> = vec![HashMap::new(); n];
    states[src].insert(usize::MAX, Poly::one());
    let t = Poly::t();
    for &v in g.dag.topo() {
        if states[v].is_empty() {
            continue;
        }
        let here = std::mem::take(&mut states[v]);
        for &w in g.dag.succ(v) {
            let mut acc = Poly::zero();
            for (&p, val) in &here {
                acc = if corners.contains(&(p, v, w)) {
                    acc.plus(&val.times(&t))
                } else {
                    acc.plus(val)
                };
            }
            let slot = states[w].entry(v).or_insert_with(Poly::zero);
            *slot = slot.plus(&acc);
        }
        states[v] = here;
    }
    states
        .into_iter()
        .map(|s| s.values().fold(Poly::zero(), |a, b| a.plus(b)))
        .collect()
}

pub fn dp_corner_poly(g: &ShiDigraph, v1: usize, v2: usize) -> Poly {
    dp_corner_polys_from(g, v1, &g.corner_triples())[v2].clone()
}
