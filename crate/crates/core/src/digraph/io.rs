use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use super::{Corner, ShiDigraph, Vertex};
use crate::dag::Dag;
use crate::error::{Error, Result};

#[derive(Serialize, Deserialize)]
struct JsonVertex {
    id: usize,
    x: i64,
    y: i64,
    u: u32,
    v: u32,
}

#[derive(Serialize, Deserialize)]
struct JsonDigraph {
    #[serde(rename = "type")]
    weyl_type: String,
    vertices: Vec<JsonVertex>,
    edges: Vec<[usize; 2]>,
    source: usize,
    sink: usize,
    corners: BTreeMap<String, Vec<[usize; 3]>>,
}

fn coeff_key(root: &[i64]) -> String {
    root.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(" ")
}

pub fn export_json(g: &ShiDigraph) -> String {
    let mut corners: BTreeMap<String, Vec<[usize; 3]>> = BTreeMap::new();
    for c in &g.corners {
        corners
            .entry(coeff_key(&c.root))
            .or_default()
            .push([c.bl, c.br, c.tr]);
    }
    let doc = JsonDigraph {
        weyl_type: g.weyl_type.clone(),
        vertices: g
            .vertices
            .iter()
            .enumerate()
            .map(|(id, v)| JsonVertex {
                id,
                x: v.x,
                y: v.y,
                u: v.u,
                v: v.v,
            })
            .collect(),
        edges: g.dag.edge_list().into_iter().map(|(a, b)| [a, b]).collect(),
        source: g.source,
        sink: g.sink,
        corners,
    };
    serde_json::to_string_pretty(&doc).expect("plain data always serialises")
}

pub fn export_dot(g: &ShiDigraph) -> String {
    let mut out = String::new();
    writeln!(out, "digraph \"{}\" {{", g.weyl_type).unwrap();
    for (id, v) in g.vertices.iter().enumerate() {
        let shape = if id == g.source || id == g.sink {
            ", shape=box"
        } else {
            ""
        };
        writeln!(out, "  n{id} [label=\"{},{}({},{})\"{shape}];", v.x, v.y, v.u, v.v).unwrap();
    }
    for (a, b) in g.dag.edge_list() {
        writeln!(out, "  n{a} -> n{b};").unwrap();
    }
    out.push_str("}\n");
    out
}

pub fn import_json(text: &str) -> Result<ShiDigraph> {
    let doc: JsonDigraph = serde_json::from_str(text)?;
    let n = doc.vertices.len();
    let mut vertices = vec![Vertex::new(0, 0); n];
    let mut seen = vec![false; n];
    for jv in &doc.vertices {
        if jv.id >= n || seen[jv.id] {
            return Err(Error::Validation(format!("bad or repeated vertex id {}", jv.id)));
        }
        seen[jv.id] = true;
        vertices[jv.id] = Vertex::part(jv.x, jv.y, jv.u, jv.v);
    }
    let edges: Vec<(usize, usize)> = doc.edges.iter().map(|e| (e[0], e[1])).collect();
    let dag = Dag::new(n, &edges).map_err(|e| Error::Validation(e.to_string()))?;
    if doc.source >= n || doc.sink >= n {
        return Err(Error::Validation("source or sink id out of range".into()));
    }
    let mut corners = Vec::new();
    for (key, list) in &doc.corners {
        let root: Vec<i64> = key
            .split_whitespace()
            .map(|c| c.parse::<i64>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|_| Error::Validation(format!("bad root key `{key}`")))?;
        for &[bl, br, tr] in list {
            if bl.max(br).max(tr) >= n {
                return Err(Error::Validation(format!("corner of `{key}` out of range")));
            }
            corners.push(Corner {
                root: root.clone(),
                bl,
                br,
                tr,
            });
        }
    }
    corners.sort_by_key(|c| (c.bl, c.br, c.tr));
    Ok(ShiDigraph {
        weyl_type: doc.weyl_type,
        vertices,
        dag,
        source: doc.source,
        sink: doc.sink,
        corners,
    })
}
