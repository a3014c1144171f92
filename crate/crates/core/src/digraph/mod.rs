//! Shi digraphs: DAGs whose source-to-sink paths are in bijection with antichains of a root
//! poset, each root marked by one or more two-edge "corners".

mod classical;
mod exceptional;
mod io;

use std::collections::{BTreeMap, HashMap, HashSet};
use std::path::Path as FsPath;

use crate::dag::{check_nonoverlapping, Dag, Path};
use crate::error::{Error, Result};
use crate::oracle;
use crate::root_system::{Family, Root, RootSystem, WeylType};

pub use classical::{build_digraph_a, build_digraph_b, build_digraph_c, build_digraph_d};
pub use exceptional::{build_digraph_f4, build_digraph_g2};
pub use io::{export_dot, export_json, import_json};

/// Lattice coordinates plus a part tag `(u, v)`; classical A/B digraphs use `(1, 0)` throughout.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Vertex {
    pub x: i64,
    pub y: i64,
    pub u: u32,
    pub v: u32,
}

impl Vertex {
    pub const fn new(x: i64, y: i64) -> Self {
        Vertex { x, y, u: 1, v: 0 }
    }

    pub const fn part(x: i64, y: i64, u: u32, v: u32) -> Self {
        Vertex { x, y, u, v }
    }
}

/// A corner `bl -> br -> tr` marking one instance of a root.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Corner {
    pub root: Root,
    pub bl: usize,
    pub br: usize,
    pub tr: usize,
}

impl Corner {
    pub fn path(&self) -> Path {
        Path(vec![self.bl, self.br, self.tr])
    }
}

#[derive(Debug, Clone)]
pub struct ShiDigraph {
    pub weyl_type: String,
    pub vertices: Vec<Vertex>,
    pub dag: Dag,
    pub source: usize,
    pub sink: usize,
    pub corners: Vec<Corner>,
}

impl ShiDigraph {
    pub fn vertex_id(&self, v: Vertex) -> Option<usize> {
        self.vertices.iter().position(|&w| w == v)
    }

    pub fn corners_of<'a>(&'a self, root: &'a [i64]) -> impl Iterator<Item = &'a Corner> + 'a {
        self.corners.iter().filter(move |c| c.root == root)
    }

    /// Corner triples as a set, for corner-refined counting.
    pub fn corner_triples(&self) -> HashSet<(usize, usize, usize)> {
        self.corners.iter().map(|c| (c.bl, c.br, c.tr)).collect()
    }

    pub fn path_count(&self) -> num_bigint::BigInt {
        self.dag.counts_from(self.source)[self.sink].clone()
    }

    /// Renames every corner root; used to transport a digraph along a poset isomorphism.
    pub fn relabel(&self, weyl_type: &str, f: impl Fn(&Root) -> Root) -> ShiDigraph {
        let mut g = self.clone();
        g.weyl_type = weyl_type.to_string();
        for c in &mut g.corners {
            c.root = f(&c.root);
        }
        g
    }

    /// Roots whose corners occur along a path given by its vertices.
    pub fn roots_on_path(&self, path: &[usize]) -> Vec<Root> {
        let mut out: Vec<Root> = Vec::new();
        for w in path.windows(3) {
            for c in &self.corners {
                if (c.bl, c.br, c.tr) == (w[0], w[1], w[2]) && !out.contains(&c.root) {
                    out.push(c.root.clone());
                }
            }
        }
        out
    }
}

/// Incremental construction keyed by vertex coordinates.
#[derive(Default)]
struct Builder {
    ids: HashMap<Vertex, usize>,
    verts: Vec<Vertex>,
    edges: Vec<(usize, usize)>,
    corners: Vec<(Root, [Vertex; 3])>,
}

impl Builder {
    fn id(&mut self, v: Vertex) -> usize {
        if let Some(&k) = self.ids.get(&v) {
            return k;
        }
        self.verts.push(v);
        self.ids.insert(v, self.verts.len() - 1);
        self.verts.len() - 1
    }

    fn edge(&mut self, a: Vertex, b: Vertex) {
        let (a, b) = (self.id(a), self.id(b));
        self.edges.push((a, b));
    }

    /// Unit box corner with bottom-left vertex `bl`, going east then north.
    fn corner(&mut self, root: Root, bl: Vertex) {
        let br = Vertex { x: bl.x + 1, ..bl };
        let tr = Vertex { y: bl.y + 1, ..br };
        self.corners.push((root, [bl, br, tr]));
    }

    fn finish(self, weyl_type: &str, source: Vertex, sink: Vertex) -> Result<ShiDigraph> {
        let mut order: Vec<Vertex> = self.verts.clone();
        order.sort_by_key(|v| (v.u, v.v, v.x, v.y));
        let new_id: HashMap<Vertex, usize> =
            order.iter().enumerate().map(|(k, &v)| (v, k)).collect();
        let remap = |old: usize| new_id[&self.verts[old]];
        let edges: Vec<(usize, usize)> = self
            .edges
            .iter()
            .map(|&(a, b)| (remap(a), remap(b)))
            .collect();
        let dag = Dag::new(order.len(), &edges)?;
        let lookup = |v: &Vertex| {
            new_id
                .get(v)
                .copied()
                .ok_or_else(|| Error::Validation(format!("corner vertex {v:?} has no edges")))
        };
        let mut corners = Vec::with_capacity(self.corners.len());
        for (root, [bl, br, tr]) in &self.corners {
            corners.push(Corner {
                root: root.clone(),
                bl: lookup(bl)?,
                br: lookup(br)?,
                tr: lookup(tr)?,
            });
        }
        corners.sort_by_key(|c| (c.bl, c.br, c.tr));
        Ok(ShiDigraph {
            weyl_type: weyl_type.to_string(),
            source: lookup(&source)?,
            sink: lookup(&sink)?,
            vertices: order,
            dag,
            corners,
        })
    }
}

/// Builds the digraph for a type. E6 needs an external JSON file; E7 and E8 have none.
pub fn build_digraph(t: WeylType, data: Option<&FsPath>) -> Result<ShiDigraph> {
    let n = t.rank;
    match t.family {
        Family::A => Ok(build_digraph_a(n)),
        Family::B => Ok(build_digraph_b(n)),
        Family::C => Ok(build_digraph_c(n)),
        Family::D if n == 3 => {
            // D3 and A3 share a Dynkin diagram; the middle node of A3 is node 1 of D3.
            Ok(build_digraph_a(3).relabel("D3", |r| vec![r[1], r[0], r[2]]))
        }
        Family::D => build_digraph_d(n),
        Family::G => build_digraph_g2(),
        Family::F => build_digraph_f4(),
        Family::E => match data {
            Some(p) if n == 6 => {
                let text = std::fs::read_to_string(p).map_err(|source| Error::Io {
                    path: p.to_path_buf(),
                    source,
                })?;
                import_json(&text)
            }
            _ => Err(Error::DataUnavailable(t.to_string())),
        },
    }
}

/// Outcome of a successful bijection check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidationReport {
    pub paths: u64,
    pub antichains: u64,
    pub corners: usize,
}

/// Checks the structural invariants and the full path/antichain bijection.
pub fn validate_digraph(g: &ShiDigraph, sys: &RootSystem) -> Result<ValidationReport> {
    let mut problems = Vec::new();
    let dag = &g.dag;
    let sources: Vec<usize> = (0..dag.len()).filter(|&v| dag.pred(v).is_empty()).collect();
    let sinks: Vec<usize> = (0..dag.len()).filter(|&v| dag.succ(v).is_empty()).collect();
    if sources != [g.source] {
        problems.push(format!("in-degree-0 vertices {sources:?}, expected only {}", g.source));
    }
    if sinks != [g.sink] {
        problems.push(format!("out-degree-0 vertices {sinks:?}, expected only {}", g.sink));
    }
    for c in &g.corners {
        if sys.index_of(&c.root).is_none() {
            problems.push(format!("corner root {:?} is not a positive root", c.root));
        }
        if !dag.has_edge(c.bl, c.br) || !dag.has_edge(c.br, c.tr) {
            problems.push(format!("corner of {:?} uses a missing edge", c.root));
        }
    }
    for (k, r) in sys.positive.iter().enumerate() {
        if g.corners_of(r).next().is_none() {
            problems.push(format!("root {} has no corner", sys.label(k)));
        }
    }
    let paths: Vec<Path> = g.corners.iter().map(Corner::path).collect();
    if let Err(w) = check_nonoverlapping(&paths) {
        problems.push(format!("corners overlap: {w}"));
    }
    if !problems.is_empty() {
        return Err(Error::Validation(problems.join("; ")));
    }

    let poset = sys.root_poset();
    let mut seen: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
    let n_paths = dag.for_each_path(g.source, g.sink, 10_000_000, |p| {
        let mut set: Vec<usize> = g
            .roots_on_path(p)
            .iter()
            .filter_map(|r| sys.index_of(r))
            .collect();
        set.sort_unstable();
        *seen.entry(set).or_default() += 1;
    })?;
    let antichains = oracle::count_antichains(sys, &[])?;
    for (set, mult) in &seen {
        if !poset.is_antichain(set) {
            problems.push(format!("path hits the non-antichain {set:?}"));
        }
        if *mult > 1 {
            problems.push(format!("{mult} paths map to the antichain {set:?}"));
        }
    }
    if seen.len() as u64 != antichains.total {
        problems.push(format!(
            "{} distinct corner sets but {} antichains",
            seen.len(),
            antichains.total
        ));
    }
    if !problems.is_empty() {
        problems.truncate(8);
        return Err(Error::Validation(problems.join("; ")));
    }
    Ok(ValidationReport {
        paths: n_paths,
        antichains: antichains.total,
        corners: g.corners.len(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root_system::build_root_system;

    #[test]
    fn bijection_holds_for_supported_types() {
        for s in ["A1", "A2", "A3", "A5", "B2", "B3", "B4", "C2", "C3", "C4", "D3", "D4", "D5", "D6", "G2", "F4"] {
            let t: WeylType = s.parse().unwrap();
            let sys = build_root_system(t);
            let g = build_digraph(t, None).unwrap();
            let rep = validate_digraph(&g, &sys).unwrap_or_else(|e| panic!("{s}: {e}"));
            assert_eq!(rep.paths, rep.antichains, "{s}");
        }
    }
}
