//! Hand-transcribed digraphs for G2 and F4.
//!
//! Roots are written in the interval shorthand `"14,13,22"`, meaning
//! `alpha_{14} + alpha_{13} + alpha_{22}` with `alpha_{ij} = alpha_i + ... + alpha_j`.

use super::classical::interval;
use super::{Builder, ShiDigraph, Vertex};
use crate::error::Result;
use crate::root_system::Root;

fn shorthand(n: usize, s: &str) -> Root {
    let mut r = vec![0; n];
    for part in s.split(',') {
        let d: Vec<usize> = part.bytes().map(|c| (c - b'0') as usize).collect();
        for (acc, c) in r.iter_mut().zip(interval(n, d[0], d[1])) {
            *acc += c;
        }
    }
    r
}

pub fn build_digraph_g2() -> Result<ShiDigraph> {
    let mut b = Builder::default();
    let v = Vertex::new;
    let edges = [
        ((0, 1), (1, 1)),
        ((0, 1), (0, 2)),
        ((1, 1), (1, 2)),
        ((0, 2), (1, 2)),
        ((1, 2), (2, 2)),
        ((0, 2), (0, 3)),
        ((1, 2), (1, 3)),
        ((2, 2), (2, 3)),
        ((0, 3), (1, 3)),
        ((2, 3), (1, 3)),
        ((0, 3), (0, 4)),
        ((1, 3), (1, 4)),
        ((0, 4), (1, 4)),
        ((0, 4), (0, 5)),
        ((1, 4), (1, 5)),
        ((0, 5), (1, 5)),
        ((0, 5), (0, 6)),
        ((1, 5), (1, 6)),
        ((0, 6), (1, 6)),
    ];
    for ((a, c), (d, e)) in edges {
        b.edge(v(a, c), v(d, e));
    }
    for (label, x, y) in [
        ("11", 0, 1),
        ("12", 0, 2),
        ("22", 1, 2),
        ("12,11", 0, 3),
        ("12,11,11", 0, 4),
        ("12,12,11", 0, 5),
    ] {
        b.corner(shorthand(2, label), v(x, y));
    }
    b.finish("G2", v(0, 1), v(1, 6))
}

/// The F4 figure numbers the Dynkin nodes opposite to Bourbaki, so labels are reversed
/// after expansion. The second strip of the middle block sits at half-integer abscissae
/// in the figure; it is shifted right by one half here.
pub fn build_digraph_f4() -> Result<ShiDigraph> {
    let mut b = Builder::default();
    let p = Vertex::part;
    let root = |s: &str| {
        let mut r = shorthand(4, s);
        r.reverse();
        r
    };

    // Bottom: A3 staircase shifted down one row, without its top row of east edges.
    for x in 0..=3i64 {
        for y in (x - 1).max(0)..=3 {
            if y < 3 {
                b.edge(p(x, y, 1, 0), p(x, y + 1, 1, 0));
                if x < 3 && x <= y {
                    b.edge(p(x, y, 1, 0), p(x + 1, y, 1, 0));
                }
            }
        }
    }
    for (label, x, y) in [("11", 0, 0), ("12", 0, 1), ("13", 0, 2), ("22", 1, 1), ("23", 1, 2), ("33", 2, 2)] {
        b.corner(root(label), p(x, y, 1, 0));
    }
    for (x, (tx, v)) in [(0, 1), (6, 2), (11, 3), (12, 3)].into_iter().enumerate() {
        b.edge(p(x as i64, 3, 1, 0), p(tx, 5, 2, v));
    }

    // First middle block: three strips on rows 5 and 6.
    let strip = |b: &mut Builder, u: u32, v: u32, xs: &[i64], lo: i64| {
        for w in xs.windows(2) {
            b.edge(p(w[0], lo, u, v), p(w[1], lo, u, v));
        }
        for &x in xs {
            b.edge(p(x, lo, u, v), p(x, lo + 1, u, v));
        }
    };
    strip(&mut b, 2, 1, &[0, 1, 2, 3, 4], 5);
    for (a, c) in [(4, 3), (3, 2)] {
        b.edge(p(a, 6, 2, 1), p(c, 6, 2, 1));
    }
    for (label, x) in [("14", 0), ("24", 1), ("34", 2), ("44", 3)] {
        b.corner(root(label), p(x, 5, 2, 1));
    }
    strip(&mut b, 2, 2, &[6, 7, 8, 9], 5);
    for (a, c) in [(9, 8), (8, 7)] {
        b.edge(p(a, 6, 2, 2), p(c, 6, 2, 2));
    }
    for (label, x) in [("24", 6), ("34", 7), ("44", 8)] {
        b.corner(root(label), p(x, 5, 2, 2));
    }
    strip(&mut b, 2, 3, &[11, 12, 13], 5);
    for (a, c) in [(13, 12), (12, 11)] {
        b.edge(p(a, 6, 2, 3), p(c, 6, 2, 3));
    }
    for (label, x) in [("34", 11), ("44", 12)] {
        b.corner(root(label), p(x, 5, 2, 3));
    }
    for ((x, v), (tx, tv)) in [
        ((0, 1), (0, 1)),
        ((1, 1), (4, 2)),
        ((2, 1), (8, 3)),
        ((6, 2), (6, 2)),
        ((7, 2), (10, 3)),
        ((11, 3), (11, 3)),
    ] {
        b.edge(p(x, 6, 2, v), p(tx, 8, 3, tv));
    }

    // Second middle block: three strips on rows 8 and 9.
    let labels = ["13,12", "13,22", "23,22"];
    for (v, x0) in [(1u32, 0i64), (2, 4), (3, 8)] {
        let xs: Vec<i64> = (x0..x0 + 4).collect();
        strip(&mut b, 3, v, &xs, 8);
        for (k, label) in labels.iter().enumerate() {
            b.corner(root(label), p(x0 + k as i64, 8, 3, v));
        }
    }
    for (a, c) in [(4, 5), (5, 6)] {
        b.edge(p(a, 9, 3, 2), p(c, 9, 3, 2));
    }
    for (a, c) in [(8, 9), (9, 10), (10, 11)] {
        b.edge(p(a, 9, 3, 3), p(c, 9, 3, 3));
    }
    for ((x, v), tx) in [
        ((0, 1), 0),
        ((1, 1), 1),
        ((2, 1), 2),
        ((3, 1), 3),
        ((6, 2), 2),
        ((7, 2), 3),
        ((11, 3), 3),
    ] {
        b.edge(p(x, 9, 3, v), p(tx, 11, 4, 0));
    }

    // Top block.
    let t = |x, y| p(x, y, 4, 0);
    for (x, hi) in [(0, 17), (1, 17), (2, 14), (3, 13)] {
        for y in 11..hi {
            b.edge(t(x, y), t(x, y + 1));
        }
    }
    for y in 11..=17 {
        b.edge(t(0, y), t(1, y));
    }
    for y in 11..=13 {
        b.edge(t(1, y), t(2, y));
    }
    b.edge(t(2, 14), t(1, 14));
    b.edge(t(2, 11), t(3, 11));
    b.edge(t(2, 12), t(3, 12));
    b.edge(t(3, 13), t(2, 13));
    let top_boxes = [
        ("14,12", 0, 11),
        ("14,13", 0, 12),
        ("14,13,22", 0, 13),
        ("14,13,22,22", 0, 14),
        ("14,13,23,22", 0, 15),
        ("14,14,23,22", 0, 16),
        ("14,22", 1, 11),
        ("14,23", 1, 12),
        ("14,23,22", 1, 13),
        ("24,22", 2, 11),
        ("24,23", 2, 12),
    ];
    for (label, x, y) in top_boxes {
        b.corner(root(label), t(x, y));
    }

    b.finish("F4", p(0, 0, 1, 0), t(1, 17))
}
