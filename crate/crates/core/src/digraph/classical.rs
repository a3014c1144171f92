use super::{Builder, ShiDigraph, Vertex};
use crate::error::Result;
use crate::root_system::Root;

/// `alpha_i + ... + alpha_j` in rank `n`, one-based and inclusive.
pub(crate) fn interval(n: usize, i: usize, j: usize) -> Root {
    let mut r = vec![0; n];
    for c in &mut r[i - 1..j] {
        *c = 1;
    }
    r
}

fn plus(a: Root, b: Root) -> Root {
    a.iter().zip(&b).map(|(x, y)| x + y).collect()
}

/// Staircase above the diagonal with north and east edges, boxes `alpha_{ij}` at `(i-1, j)`.
pub fn build_digraph_a(n: usize) -> ShiDigraph {
    let mut b = Builder::default();
    let n = n as i64;
    let exists = |x: i64, y: i64| (0..=n).contains(&x) && y >= x.max(1) && y <= n + 1;
    for x in 0..=n {
        for y in x.max(1)..=n + 1 {
            if exists(x, y + 1) {
                b.edge(Vertex::new(x, y), Vertex::new(x, y + 1));
            }
            if exists(x + 1, y) {
                b.edge(Vertex::new(x, y), Vertex::new(x + 1, y));
            }
        }
    }
    let nu = n as usize;
    for i in 1..=nu {
        for j in i..=nu {
            b.corner(interval(nu, i, j), Vertex::new(i as i64 - 1, j as i64));
        }
    }
    b.finish(&format!("A{n}"), Vertex::new(0, 1), Vertex::new(n, n + 1))
        .expect("staircase digraph is well formed")
}

/// Raw type-B grid of rank `n`, optionally keeping only rows `y >= min_y`.
fn b_grid(b: &mut Builder, n: i64, min_y: i64, part: (u32, u32)) {
    let at = |x, y| Vertex::part(x, y, part.0, part.1);
    let top = |x: i64| if x == 0 { 2 * n } else { 2 * n - x + 1 };
    let exists = |x: i64, y: i64| (0..=n).contains(&x) && y >= x.max(1).max(min_y) && y <= top(x);
    for x in 0..=n {
        for y in x.max(1).max(min_y)..=top(x) {
            if exists(x, y + 1) {
                b.edge(at(x, y), at(x, y + 1));
            }
            if y <= 2 * n - x - 1 && exists(x + 1, y) {
                b.edge(at(x, y), at(x + 1, y));
            }
        }
        if x >= 2 && exists(x - 1, top(x)) {
            b.edge(at(x, top(x)), at(x - 1, top(x)));
        }
    }
    if exists(0, 2 * n) {
        b.edge(at(0, 2 * n), at(1, 2 * n));
    }
}

/// Row of the skew box `alpha_{in,kn}` in a rank-`n` type-B grid.
fn skew_row(n: usize, k: usize) -> i64 {
    (2 * n - k + 1) as i64
}

pub fn build_digraph_b(n: usize) -> ShiDigraph {
    let mut b = Builder::default();
    let ni = n as i64;
    b_grid(&mut b, ni, 1, (1, 0));
    for i in 1..=n {
        for j in i..=n {
            b.corner(interval(n, i, j), Vertex::new(i as i64 - 1, j as i64));
        }
        for k in i + 1..=n {
            let root = plus(interval(n, i, n), interval(n, k, n));
            b.corner(root, Vertex::new(i as i64 - 1, skew_row(n, k)));
        }
    }
    b.finish(&format!("B{n}"), Vertex::new(0, 1), Vertex::new(1, 2 * ni))
        .expect("type-B digraph is well formed")
}

/// The type-B digraph with each root replaced by its image under an order isomorphism
/// from the `B_n` root poset to the `C_n` root poset.
///
/// In the orthonormal basis the isomorphism fixes `e_i - e_j`, sends `e_i` to `e_i + e_n`
/// (and `e_n` to `2e_n`), and sends `e_i + e_k` to `e_i + e_{k-1}` (so `e_i + e_{i+1}` goes
/// to `2e_i`).
pub fn build_digraph_c(n: usize) -> ShiDigraph {
    build_digraph_b(n).relabel(&format!("C{n}"), |r| b_to_c(n, r))
}

fn b_to_c(n: usize, r: &Root) -> Root {
    if !r.contains(&2) {
        // e_i - e_j and e_i have the same coefficients in both systems.
        return r.clone();
    }
    let i = r.iter().position(|&c| c > 0).unwrap() + 1;
    let k = r.iter().position(|&c| c == 2).unwrap() + 1;
    let mut out = vec![0; n];
    for c in &mut out[i - 1..k - 2] {
        *c = 1;
    }
    for c in &mut out[k - 2..n - 1] {
        *c = 2;
    }
    out[n - 1] = 1;
    out
}

/// Four-part type-D digraph, `n >= 4`.
///
/// Part `(1, 0)` is an `A_{n-2}` staircase, parts `(2, i)` and `(3, j)` are strips of
/// `n - 1` boxes, and part `(4, 0)` is the upper half of a `B_{n-2}` grid.
pub fn build_digraph_d(n: usize) -> Result<ShiDigraph> {
    assert!(n >= 4, "type-D digraphs need rank at least 4");
    let m = n - 2;
    let (ni, mi) = (n as i64, m as i64);
    let mut b = Builder::default();
    let p = Vertex::part;

    // Bottom staircase without its top row of east edges.
    for x in 0..=mi {
        for y in x.max(1)..=ni - 1 {
            if y < ni - 1 {
                b.edge(p(x, y, 1, 0), p(x, y + 1, 1, 0));
                if x < mi && x + 1 <= y {
                    b.edge(p(x, y, 1, 0), p(x + 1, y, 1, 0));
                }
            }
        }
    }
    for i in 1..=m {
        for j in i..=m {
            b.corner(interval(n, i, j), p(i as i64 - 1, j as i64, 1, 0));
        }
    }
    for k in 0..=mi {
        b.edge(p(k, ni - 1, 1, 0), p(k, 0, 2, k as u32 + 1));
    }

    // Strips (2, i): boxes alpha_{k,n-1} for k >= i.
    for i in 1..n {
        let v = i as u32;
        let first = i as i64 - 1;
        for x in first..ni {
            b.edge(p(x, 0, 2, v), p(x, 1, 2, v));
        }
        for k in i..n {
            let k = k as i64;
            b.edge(p(k - 1, 0, 2, v), p(k, 0, 2, v));
            b.corner(interval(n, k as usize, n - 1), p(k - 1, 0, 2, v));
        }
        b.edge(p(ni - 1, 1, 2, v), p(ni - 2, 1, 2, v));
        for j in i..n {
            b.edge(p(j as i64 - 1, 1, 2, v), p(first, 0, 3, j as u32));
        }
    }

    // Strips (3, j): boxes alpha_{k,n-2} + alpha_n, then alpha_n.
    for j in 1..n {
        let v = j as u32;
        for x in 0..ni {
            b.edge(p(x, 0, 3, v), p(x, 1, 3, v));
        }
        for k in 1..n {
            let ki = k as i64;
            b.edge(p(ki - 1, 0, 3, v), p(ki, 0, 3, v));
            let root = if k <= m {
                plus(interval(n, k, m), interval(n, n, n))
            } else {
                interval(n, n, n)
            };
            b.corner(root, p(ki - 1, 0, 3, v));
        }
        for k in 1..j {
            b.edge(p(k as i64 - 1, 1, 3, v), p(k as i64, 1, 3, v));
        }
        b.edge(p(ni - 1, 1, 3, v), p(ni - 2, 1, 3, v));
        for x in j as i64 - 1..=mi {
            b.edge(p(x, 1, 3, v), p(x, mi, 4, 0));
        }
    }

    // Top: the rows y >= m of a B_m grid.
    b_grid(&mut b, mi, mi, (4, 0));
    for i in 1..=m {
        b.corner(interval(n, i, n), p(i as i64 - 1, mi, 4, 0));
        for k in i + 1..=m {
            let root = plus(interval(n, i, n), interval(n, k, m));
            b.corner(root, p(i as i64 - 1, skew_row(m, k), 4, 0));
        }
    }

    b.finish(&format!("D{n}"), p(0, 1, 1, 0), p(1, 2 * mi, 4, 0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    #[test]
    fn b_to_c_on_rank_three() {
        // e1 + e2 -> 2e1, e1 + e3 -> e1 + e2, e2 + e3 -> 2e2.
        assert_eq!(b_to_c(3, &vec![1, 2, 2]), vec![2, 2, 1]);
        assert_eq!(b_to_c(3, &vec![1, 1, 2]), vec![1, 2, 1]);
        assert_eq!(b_to_c(3, &vec![0, 1, 2]), vec![0, 2, 1]);
        assert_eq!(b_to_c(3, &vec![1, 1, 1]), vec![1, 1, 1]);
    }

    #[test]
    fn small_path_counts() {
        assert_eq!(build_digraph_a(1).path_count(), BigInt::from(2));
        assert_eq!(build_digraph_a(2).path_count(), BigInt::from(5));
        assert_eq!(build_digraph_b(2).path_count(), BigInt::from(6));
        assert_eq!(build_digraph_b(4).path_count(), BigInt::from(70));
        assert_eq!(build_digraph_d(4).unwrap().path_count(), BigInt::from(50));
    }
}
