//! Plain DAGs, weighted path sums and the non-overlapping forbidden-path count.

use std::collections::HashSet;
use std::fmt;

use num_bigint::BigInt;

use crate::det::{avoidance_matrix, determinant, Matrix};
use crate::error::{Error, Result};
use crate::ring::Ring;

#[derive(Debug, Clone)]
pub struct Dag {
    succ: Vec<Vec<usize>>,
    pred: Vec<Vec<usize>>,
    topo: Vec<usize>,
    edges: HashSet<(usize, usize)>,
}

impl Dag {
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut succ = vec![Vec::new(); n];
        let mut pred = vec![Vec::new(); n];
        let mut set = HashSet::new();
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::Contract(format!("edge ({u}, {v}) out of range")));
            }
            if set.insert((u, v)) {
                succ[u].push(v);
                pred[v].push(u);
            }
        }
        for s in succ.iter_mut() {
            s.sort_unstable();
        }
        let mut indeg: Vec<usize> = pred.iter().map(Vec::len).collect();
        let mut stack: Vec<usize> = (0..n).rev().filter(|&v| indeg[v] == 0).collect();
        let mut topo = Vec::with_capacity(n);
        while let Some(v) = stack.pop() {
            topo.push(v);
            for &w in succ[v].iter().rev() {
                indeg[w] -= 1;
                if indeg[w] == 0 {
                    stack.push(w);
                }
            }
        }
        if topo.len() != n {
            return Err(Error::Contract("graph has a directed cycle".into()));
        }
        Ok(Dag {
            succ,
            pred,
            topo,
            edges: set,
        })
    }

    pub fn len(&self) -> usize {
        self.succ.len()
    }

    pub fn is_empty(&self) -> bool {
        self.succ.is_empty()
    }

    pub fn succ(&self, v: usize) -> &[usize] {
        &self.succ[v]
    }

    pub fn pred(&self, v: usize) -> &[usize] {
        &self.pred[v]
    }

    pub fn topo(&self) -> &[usize] {
        &self.topo
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.contains(&(u, v))
    }

    pub fn edge_list(&self) -> Vec<(usize, usize)> {
        let mut e: Vec<_> = self.edges.iter().copied().collect();
        e.sort_unstable();
        e
    }

    /// Weighted path sums from `src` to every vertex.
    pub fn path_sums_from<R: Ring>(&self, src: usize, weight: &impl Fn(usize, usize) -> R) -> Vec<R> {
        let mut acc = vec![R::zero(); self.len()];
        acc[src] = R::one();
        for &v in &self.topo {
            if acc[v].is_zero() {
                continue;
            }
            for &w in &self.succ[v] {
                acc[w] = acc[w].plus(&acc[v].times(&weight(v, w)));
            }
        }
        acc
    }

    /// Number of paths from `src` to every vertex.
    pub fn counts_from(&self, src: usize) -> Vec<BigInt> {
        self.path_sums_from(src, &|_, _| BigInt::from(1))
    }

    /// Calls `visit` on every maximal path `from -> to`, stopping early past `cap` paths.
    pub fn for_each_path(
        &self,
        from: usize,
        to: usize,
        cap: u64,
        mut visit: impl FnMut(&[usize]),
    ) -> Result<u64> {
        let mut seen = 0u64;
        let mut stack = vec![from];
        let reach = self.reaches(to);
        if !reach[from] {
            return Ok(0);
        }
        fn go(
            dag: &Dag,
            to: usize,
            reach: &[bool],
            stack: &mut Vec<usize>,
            seen: &mut u64,
            cap: u64,
            visit: &mut dyn FnMut(&[usize]),
        ) -> Result<()> {
            let v = *stack.last().unwrap();
            if v == to {
                *seen += 1;
                if *seen > cap {
                    return Err(Error::SizeLimit(format!("more than {cap} paths")));
                }
                visit(stack);
                return Ok(());
            }
            for &w in dag.succ(v) {
                if reach[w] {
                    stack.push(w);
                    go(dag, to, reach, stack, seen, cap, visit)?;
                    stack.pop();
                }
            }
            Ok(())
        }
        go(self, to, &reach, &mut stack, &mut seen, cap, &mut visit)?;
        Ok(seen)
    }

    /// Vertices with a path to `to`.
    fn reaches(&self, to: usize) -> Vec<bool> {
        let mut r = vec![false; self.len()];
        r[to] = true;
        for &v in self.topo.iter().rev() {
            if !r[v] {
                r[v] = self.succ[v].iter().any(|&w| r[w]);
            }
        }
        r
    }
}

/// A directed path given by its vertices; it has at least one edge.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Path(pub Vec<usize>);

impl Path {
    pub fn start(&self) -> usize {
        self.0[0]
    }

    pub fn end(&self) -> usize {
        *self.0.last().unwrap()
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.0.windows(2).map(|w| (w[0], w[1])).collect()
    }

    /// True if `self` occurs as a contiguous run of `host`.
    pub fn is_subpath_of(&self, host: &[usize]) -> bool {
        host.windows(self.0.len()).any(|w| w == self.0.as_slice())
    }
}

impl fmt::Display for Path {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|v| v.to_string()).collect();
        f.write_str(&parts.join("->"))
    }
}

/// Which way two forbidden paths collide.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OverlapKind {
    /// The first path lies inside the second.
    Contained,
    /// The last `k` edges of the first path are the first `k` edges of the second.
    SuffixPrefix(usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OverlapWitness {
    pub first: usize,
    pub second: usize,
    pub kind: OverlapKind,
}

impl fmt::Display for OverlapWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            OverlapKind::Contained => {
                write!(f, "path {} is contained in path {}", self.first, self.second)
            }
            OverlapKind::SuffixPrefix(k) => write!(
                f,
                "the last {k} edge(s) of path {} start path {}",
                self.first, self.second
            ),
        }
    }
}

/// Checks every ordered pair of forbidden paths for overlap.
pub fn check_nonoverlapping(paths: &[Path]) -> std::result::Result<(), OverlapWitness> {
    for (a, p) in paths.iter().enumerate() {
        for (b, q) in paths.iter().enumerate() {
            if a == b {
                continue;
            }
            if p.is_subpath_of(&q.0) {
                return Err(OverlapWitness {
                    first: a,
                    second: b,
                    kind: OverlapKind::Contained,
                });
            }
            // Sharing k edges means sharing k + 1 vertices.
            let pe = p.0.len() - 1;
            let qe = q.0.len() - 1;
            for k in 1..=pe.min(qe) {
                if p.0[p.0.len() - k - 1..] == q.0[..k + 1] {
                    return Err(OverlapWitness {
                        first: a,
                        second: b,
                        kind: OverlapKind::SuffixPrefix(k),
                    });
                }
            }
        }
    }
    Ok(())
}

fn validate_paths(dag: &Dag, paths: &[Path]) -> Result<()> {
    for p in paths {
        if p.0.len() < 2 {
            return Err(Error::Contract(format!("forbidden path {p} has no edges")));
        }
        if let Some((u, v)) = p.edges().into_iter().find(|&(u, v)| !dag.has_edge(u, v)) {
            return Err(Error::Contract(format!("forbidden path {p} uses missing edge {u}->{v}")));
        }
    }
    Ok(())
}

/// Builds the avoidance matrix for edge-weighted path sums.
pub fn forbidden_matrix<R: Ring>(
    dag: &Dag,
    source: usize,
    sink: usize,
    paths: &[Path],
    weight: &impl Fn(usize, usize) -> R,
) -> Result<Matrix<R>> {
    validate_paths(dag, paths)?;
    let from_i = dag.path_sums_from(source, weight);
    let from_f: Vec<Vec<R>> = paths
        .iter()
        .map(|p| dag.path_sums_from(p.end(), weight))
        .collect();
    let wts: Vec<R> = paths
        .iter()
        .map(|p| {
            p.edges()
                .iter()
                .fold(R::one(), |acc, &(u, v)| acc.times(&weight(u, v)))
        })
        .collect();
    Ok(avoidance_matrix(
        &wts,
        |j, i| from_f[j][paths[i].start()].clone(),
        |i| from_i[paths[i].start()].clone(),
        |j| from_f[j][sink].clone(),
        from_i[sink].clone(),
    ))
}

/// Weighted sum over `source -> sink` paths containing no forbidden path, as a determinant.
///
/// Overlapping collections are rejected unless `allow_overlap` is set, in which case the
/// determinant is returned even though it need not equal the true sum.
pub fn forbidden_count<R: Ring>(
    dag: &Dag,
    source: usize,
    sink: usize,
    paths: &[Path],
    weight: &impl Fn(usize, usize) -> R,
    allow_overlap: bool,
) -> Result<R> {
    if !allow_overlap {
        check_nonoverlapping(paths).map_err(|w| Error::Overlap(w.to_string()))?;
    }
    determinant(&forbidden_matrix(dag, source, sink, paths, weight)?)
}

/// Unit-weight convenience wrapper around [`forbidden_count`].
pub fn forbidden_count_unweighted(
    dag: &Dag,
    source: usize,
    sink: usize,
    paths: &[Path],
    allow_overlap: bool,
) -> Result<BigInt> {
    forbidden_count(dag, source, sink, paths, &|_, _| BigInt::from(1), allow_overlap)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn overlap_detection() {
        let p = |v: &[usize]| Path(v.to_vec());
        assert!(check_nonoverlapping(&[p(&[0, 1]), p(&[1, 2])]).is_ok());
        assert!(check_nonoverlapping(&[p(&[0, 1, 2])]).is_ok());
        let w = check_nonoverlapping(&[p(&[0, 1, 2]), p(&[1, 2, 3])]).unwrap_err();
        assert_eq!(w.kind, OverlapKind::SuffixPrefix(1));
        let w = check_nonoverlapping(&[p(&[1, 2]), p(&[0, 1, 2, 3])]).unwrap_err();
        assert_eq!(w.kind, OverlapKind::Contained);
        // Sharing a vertex alone is fine.
        assert!(check_nonoverlapping(&[p(&[0, 1, 2]), p(&[2, 3])]).is_ok());
    }

    #[test]
    fn chain_with_one_forbidden_edge() {
        // Diamond 0 -> {1, 2} -> 3; forbid 0 -> 1.
        let dag = Dag::new(4, &[(0, 1), (0, 2), (1, 3), (2, 3)]).unwrap();
        let n = forbidden_count_unweighted(&dag, 0, 3, &[Path(vec![0, 1])], false).unwrap();
        assert_eq!(n, BigInt::from(1));
        let w = forbidden_count(&dag, 0, 3, &[], &|u, v| BigInt::from(u + v + 1), false).unwrap();
        // Paths 0-1-3 with weight 2*5 and 0-2-3 with weight 3*6.
        assert_eq!(w, BigInt::from(28));
    }

    #[test]
    fn cycles_and_bad_paths_rejected() {
        assert!(Dag::new(2, &[(0, 1), (1, 0)]).is_err());
        let dag = Dag::new(3, &[(0, 1), (1, 2)]).unwrap();
        assert!(forbidden_count_unweighted(&dag, 0, 2, &[Path(vec![0, 2])], false).is_err());
        assert!(forbidden_count_unweighted(&dag, 0, 2, &[Path(vec![0])], false).is_err());
    }
}
