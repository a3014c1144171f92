//! Cartan data, positive roots and the root poset of a finite crystallographic root system.
//!
//! Roots are kept as coefficient vectors over the simple roots. Node numbering follows
//! Bourbaki: in `B_n` the last simple root is short, in `C_n` it is long, and in `D_n`
//! node `n` hangs off node `n - 2`.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }
}

/// An irreducible Weyl type such as `A5` or `F4`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct WeylType {
    pub family: Family,
    pub rank: usize,
}

impl WeylType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 3,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if ok {
            Ok(WeylType { family, rank })
        } else {
            Err(Error::InvalidType(format!("{}{}", family.letter(), rank)))
        }
    }

    pub fn is_classical(&self) -> bool {
        matches!(self.family, Family::A | Family::B | Family::C | Family::D)
    }
}

impl FromStr for WeylType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::InvalidType(s.to_string());
        let mut chars = s.chars();
        let family = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => Family::A,
            Some('B') => Family::B,
            Some('C') => Family::C,
            Some('D') => Family::D,
            Some('E') => Family::E,
            Some('F') => Family::F,
            Some('G') => Family::G,
            _ => return Err(bad()),
        };
        let rank: usize = chars.as_str().parse().map_err(|_| bad())?;
        WeylType::new(family, rank).map_err(|_| bad())
    }
}

impl fmt::Display for WeylType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.rank)
    }
}

/// Coefficients of a root in the basis of simple roots.
pub type Root = Vec<i64>;

pub fn height(root: &[i64]) -> i64 {
    root.iter().sum()
}

/// Symmetrised Gram matrix of the simple roots, scaled so every entry is an integer.
fn gram_matrix(t: WeylType) -> Vec<Vec<i64>> {
    let n = t.rank;
    let mut g = vec![vec![0i64; n]; n];
    let link = |g: &mut Vec<Vec<i64>>, i: usize, j: usize, v: i64| {
        g[i][j] = v;
        g[j][i] = v;
    };
    match t.family {
        Family::A | Family::B | Family::C | Family::D | Family::E => {
            // Lengths squared are 2 for long roots, 1 for the short root of B, 4 for the long root of C.
            for i in 0..n {
                g[i][i] = 2;
            }
            let chain_end = match t.family {
                Family::D => n - 1,
                Family::E => 0,
                _ => n,
            };
            for i in 1..chain_end {
                link(&mut g, i - 1, i, -1);
            }
            match t.family {
                Family::B => {
                    g[n - 1][n - 1] = 1;
                }
                Family::C => {
                    g[n - 1][n - 1] = 4;
                    link(&mut g, n - 2, n - 1, -2);
                }
                Family::D => link(&mut g, n - 3, n - 1, -1),
                Family::E => {
                    // Bourbaki: 1-3-4-5-6(-7-8), with 2 attached to 4.
                    link(&mut g, 0, 2, -1);
                    link(&mut g, 1, 3, -1);
                    for i in 3..n {
                        link(&mut g, i - 1, i, -1);
                    }
                }
                _ => {}
            }
        }
        Family::F => {
            g[0][0] = 4;
            g[1][1] = 4;
            g[2][2] = 2;
            g[3][3] = 2;
            link(&mut g, 0, 1, -2);
            link(&mut g, 1, 2, -2);
            link(&mut g, 2, 3, -1);
        }
        Family::G => {
            g[0][0] = 2;
            g[1][1] = 6;
            link(&mut g, 0, 1, -3);
        }
    }
    g
}

/// Cartan matrix with `a[i][j] = <alpha_j, alpha_i^vee>`, so that
/// `s_i(alpha_j) = alpha_j - a[i][j] alpha_i`.
pub fn cartan_matrix(t: WeylType) -> Vec<Vec<i64>> {
    let g = gram_matrix(t);
    let n = t.rank;
    let mut a = vec![vec![0i64; n]; n];
    for i in 0..n {
        for j in 0..n {
            debug_assert_eq!((2 * g[i][j]) % g[i][i], 0);
            a[i][j] = 2 * g[i][j] / g[i][i];
        }
    }
    a
}

#[derive(Debug, Clone)]
pub struct RootSystem {
    pub weyl_type: WeylType,
    pub cartan: Vec<Vec<i64>>,
    gram: Vec<Vec<i64>>,
    /// Positive roots sorted by height; simple roots come first, in node order.
    pub positive: Vec<Root>,
    index: HashMap<Root, usize>,
}

pub fn build_root_system(t: WeylType) -> RootSystem {
    let n = t.rank;
    let cartan = cartan_matrix(t);
    let gram = gram_matrix(t);
    let simple: Vec<Root> = (0..n)
        .map(|i| {
            let mut r = vec![0; n];
            r[i] = 1;
            r
        })
        .collect();

    let mut seen: HashMap<Root, ()> = simple.iter().map(|r| (r.clone(), ())).collect();
    let mut frontier = simple.clone();
    while let Some(r) = frontier.pop() {
        for i in 0..n {
            let img = reflect_vec(&cartan, &r, i);
            if img.iter().all(|&c| c >= 0) && !seen.contains_key(&img) {
                seen.insert(img.clone(), ());
                frontier.push(img);
            }
        }
    }
    let mut positive: Vec<Root> = seen.into_keys().collect();
    positive.sort_by(|a, b| height(a).cmp(&height(b)).then_with(|| b.cmp(a)));
    let index = positive
        .iter()
        .enumerate()
        .map(|(k, r)| (r.clone(), k))
        .collect();
    RootSystem {
        weyl_type: t,
        cartan,
        gram,
        positive,
        index,
    }
}

fn reflect_vec(cartan: &[Vec<i64>], root: &[i64], i: usize) -> Root {
    let pairing: i64 = root.iter().zip(&cartan[i]).map(|(c, a)| c * a).sum();
    let mut out = root.to_vec();
    out[i] -= pairing;
    out
}

impl RootSystem {
    pub fn rank(&self) -> usize {
        self.weyl_type.rank
    }

    pub fn num_positive(&self) -> usize {
        self.positive.len()
    }

    pub fn index_of(&self, root: &[i64]) -> Option<usize> {
        self.index.get(root).copied()
    }

    /// Applies the simple reflection `s_i` (zero-based) to an arbitrary root vector.
    pub fn simple_reflection(&self, i: usize, root: &[i64]) -> Root {
        reflect_vec(&self.cartan, root, i)
    }

    /// Squared length in the scaled Gram form.
    pub fn norm(&self, root: &[i64]) -> i64 {
        let n = self.rank();
        let mut s = 0;
        for i in 0..n {
            for j in 0..n {
                s += root[i] * self.gram[i][j] * root[j];
            }
        }
        s
    }

    pub fn highest_root(&self) -> &Root {
        self.positive.last().expect("root systems are nonempty")
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.positive[a]
            .iter()
            .zip(&self.positive[b])
            .all(|(x, y)| x <= y)
    }

    pub fn root_poset(&self) -> RootPoset {
        let m = self.num_positive();
        let mut less = vec![vec![false; m]; m];
        for a in 0..m {
            for b in 0..m {
                less[a][b] = a != b && self.leq(a, b);
            }
        }
        RootPoset { less }
    }

    pub fn invariants(&self) -> Result<Invariants> {
        let max_h = height(self.highest_root()) as usize;
        let mut per_height = vec![0usize; max_h + 2];
        for r in &self.positive {
            per_height[height(r) as usize] += 1;
        }
        // The height distribution is a partition; its conjugate is the multiset of exponents.
        let mut exponents = Vec::new();
        for k in 1..=max_h {
            for _ in 0..per_height[k] - per_height[k + 1] {
                exponents.push(k as u64);
            }
        }
        exponents.sort_unstable();
        let rank = self.rank() as u64;
        let coxeter_number = 2 * self.num_positive() as u64 / rank;
        let weyl_order = exponents
            .iter()
            .fold(BigUint::one(), |acc, e| acc * BigUint::from(e + 1));
        let num = exponents
            .iter()
            .fold(BigUint::one(), |acc, e| acc * BigUint::from(e + coxeter_number + 1));
        if &num % &weyl_order != BigUint::default() {
            return Err(Error::Internal(format!(
                "Catalan number of {} is not integral",
                self.weyl_type
            )));
        }
        let catalan = num / &weyl_order;
        let shi_regions = BigUint::from(coxeter_number + 1).pow(rank as u32);
        Ok(Invariants {
            exponents,
            coxeter_number,
            weyl_order,
            catalan,
            shi_regions,
        })
    }

    /// Pretty label for a positive root. Classical types use the `alpha_{ij}` shorthand
    /// (sums of intervals of simple roots); exceptional types print raw coefficients.
    pub fn label(&self, idx: usize) -> String {
        let r = &self.positive[idx];
        let n = self.rank();
        let pair = |i: usize, j: usize| -> String {
            if n < 10 {
                format!("{i}{j}")
            } else {
                format!("{i}.{j}")
            }
        };
        // 1-based interval bounds of coefficients >= level.
        let interval = |level: i64| -> Option<(usize, usize)> {
            let idxs: Vec<usize> = (0..n).filter(|&k| r[k] >= level).collect();
            let (&lo, &hi) = (idxs.first()?, idxs.last()?);
            Some((lo + 1, hi + 1))
        };
        let max = *r.iter().max().unwrap();
        match self.weyl_type.family {
            Family::A => {
                let (i, j) = interval(1).unwrap();
                format!("α{}", pair(i, j))
            }
            Family::B if max == 2 => {
                let (i, _) = interval(1).unwrap();
                let (k, _) = interval(2).unwrap();
                format!("α{},{}", pair(i, n), pair(k, n))
            }
            Family::B => {
                let (i, j) = interval(1).unwrap();
                format!("α{}", pair(i, j))
            }
            Family::D => {
                let (i, j) = interval(1).unwrap();
                if max == 2 {
                    let (k, _) = interval(2).unwrap();
                    format!("α{},{}", pair(i, n), pair(k, n - 2))
                } else if r[n - 1] == 1 && r[n - 2] == 0 {
                    if i == n {
                        format!("α{}", pair(n, n))
                    } else {
                        format!("α{},{}", pair(i, n - 2), pair(n, n))
                    }
                } else {
                    format!("α{}", pair(i, j))
                }
            }
            _ => {
                let parts: Vec<String> = r.iter().map(|c| c.to_string()).collect();
                format!("({})", parts.join(","))
            }
        }
    }
}

/// Strict order of the root poset as a dense table over positive-root indices.
#[derive(Debug, Clone)]
pub struct RootPoset {
    pub less: Vec<Vec<bool>>,
}

impl RootPoset {
    pub fn comparable(&self, a: usize, b: usize) -> bool {
        a == b || self.less[a][b] || self.less[b][a]
    }

    pub fn is_antichain(&self, set: &[usize]) -> bool {
        set.iter().enumerate().all(|(k, &a)| {
            set[k + 1..].iter().all(|&b| !self.comparable(a, b))
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Invariants {
    pub exponents: Vec<u64>,
    pub coxeter_number: u64,
    pub weyl_order: BigUint,
    pub catalan: BigUint,
    /// Total number of Shi regions, `(h + 1)^rank`.
    pub shi_regions: BigUint,
}
