//! Region counts of Shi arrangements inside Weyl cones.
//!
//! The regions of the Shi arrangement lying in the cone of `w` correspond to antichains of
//! `Phi^+ \ N(w^{-1})`, hence to digraph paths avoiding every corner of every root in
//! `N(w^{-1})`. Those paths are counted by one determinant.

use std::path::Path as FsPath;
use std::sync::{Arc, OnceLock};

use num_bigint::BigInt;
use num_traits::One;
use rayon::prelude::*;

use crate::det::{avoidance_matrix, determinant, Matrix};
use crate::digraph::{build_digraph, Corner, ShiDigraph};
use crate::error::{Error, Result};
use crate::oracle;
use crate::path_count::{ballot_count, corner_poly_a, dp_corner_polys_from, gamma_b, gamma_d, pt};
use crate::ring::{Poly, Ring};
use crate::root_system::{build_root_system, Family, RootSystem, WeylType};
use crate::weyl::{WeylElement, WeylGroup};

/// How matrix entries are computed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Entries {
    Ballot,
    TypeB(i64),
    TypeD(i64),
    Dp,
}

/// Everything needed to count regions in the cones of one Weyl type.
pub struct ConeEngine {
    pub group: WeylGroup,
    pub digraph: ShiDigraph,
    entries: Entries,
    /// Path counts from the source and from every corner end, indexed by start vertex.
    counts: Vec<Option<Vec<BigInt>>>,
    polys: OnceLock<Vec<Option<Vec<Poly>>>>,
    /// Corner indices of each positive root.
    by_root: Vec<Vec<usize>>,
}

/// A determinant evaluation for one cone.
#[derive(Debug, Clone)]
pub struct ConeCount<R> {
    /// `N(w^{-1})` in the order used for the matrix.
    pub inversions: Vec<usize>,
    /// Forbidden corners, all instances of each root in turn.
    pub corners: Vec<Corner>,
    pub matrix: Matrix<R>,
    pub value: R,
}

#[derive(Debug, Clone, PartialEq)]
pub struct TableRow {
    pub word: Vec<usize>,
    pub length: usize,
    pub count: BigInt,
    pub poincare: Option<Poly>,
}

/// Determinant against both oracles for one element.
#[derive(Debug, Clone, PartialEq)]
pub struct Verification {
    pub word: Vec<usize>,
    pub determinant: BigInt,
    pub antichains: u64,
    pub avoiding_paths: BigInt,
    pub poincare: Poly,
    pub antichains_by_size: Vec<u64>,
}

impl Verification {
    pub fn passed(&self) -> bool {
        let by_size = Poly::new(self.antichains_by_size.iter().map(|&c| BigInt::from(c)).collect());
        self.determinant == BigInt::from(self.antichains)
            && self.determinant == self.avoiding_paths
            && self.poincare.eval(&BigInt::one()) == self.determinant
            && self.poincare == by_size
    }
}

impl ConeEngine {
    pub fn new(t: WeylType, data: Option<&FsPath>) -> Result<Self> {
        let system = Arc::new(build_root_system(t));
        let digraph = build_digraph(t, data)?;
        let entries = match (t.family, t.rank) {
            (Family::A, _) | (Family::D, 3) => Entries::Ballot,
            (Family::B | Family::C, n) => Entries::TypeB(n as i64),
            (Family::D, n) => Entries::TypeD(n as i64),
            _ => Entries::Dp,
        };
        Self::from_parts(system, digraph, entries)
    }

    /// An engine over an arbitrary digraph (for instance one loaded from JSON), using
    /// dynamic programming for every entry.
    pub fn with_digraph(t: WeylType, digraph: ShiDigraph) -> Result<Self> {
        Self::from_parts(Arc::new(build_root_system(t)), digraph, Entries::Dp)
    }

    fn from_parts(system: Arc<RootSystem>, digraph: ShiDigraph, entries: Entries) -> Result<Self> {
        let mut by_root = vec![Vec::new(); system.num_positive()];
        for (k, c) in digraph.corners.iter().enumerate() {
            let r = system
                .index_of(&c.root)
                .ok_or_else(|| Error::Validation(format!("corner root {:?} is not positive", c.root)))?;
            by_root[r].push(k);
        }
        if let Some(k) = by_root.iter().position(Vec::is_empty) {
            return Err(Error::Validation(format!("root {} has no corner", system.label(k))));
        }
        let mut counts = vec![None; digraph.dag.len()];
        for s in start_vertices(&digraph) {
            counts[s] = Some(digraph.dag.counts_from(s));
        }
        Ok(ConeEngine {
            group: WeylGroup::new(system),
            digraph,
            entries,
            counts,
            polys: OnceLock::new(),
            by_root,
        })
    }

    pub fn system(&self) -> &RootSystem {
        &self.group.system
    }

    /// Path count between a start vertex (source or corner end) and any vertex.
    pub fn gamma(&self, from: usize, to: usize) -> Result<BigInt> {
        let g = &self.digraph;
        let (a, b) = (g.vertices[from], g.vertices[to]);
        match self.entries {
            Entries::Ballot => Ok(ballot_count(pt(a.x, a.y), pt(b.x, b.y))),
            Entries::TypeB(n) => gamma_b(pt(a.x, a.y), pt(b.x, b.y), n),
            Entries::TypeD(n) => gamma_d(a, b, n),
            Entries::Dp => self.gamma_dp(from, to),
        }
    }

    /// Path count read from the dynamic-programming tables.
    pub fn gamma_dp(&self, from: usize, to: usize) -> Result<BigInt> {
        self.counts[from]
            .as_ref()
            .map(|c| c[to].clone())
            .ok_or_else(|| Error::Contract(format!("vertex {from} is neither the source nor a corner end")))
    }

    /// Corner-refined path count between a start vertex and any vertex.
    pub fn gamma_poly(&self, from: usize, to: usize) -> Result<Poly> {
        if self.entries == Entries::Ballot {
            let (a, b) = (self.digraph.vertices[from], self.digraph.vertices[to]);
            return Ok(corner_poly_a(pt(a.x, a.y), pt(b.x, b.y)));
        }
        let polys = self.polys.get_or_init(|| {
            let g = &self.digraph;
            let triples = g.corner_triples();
            let mut out = vec![None; g.dag.len()];
            for s in start_vertices(g) {
                out[s] = Some(dp_corner_polys_from(g, s, &triples));
            }
            out
        });
        polys[from]
            .as_ref()
            .map(|p| p[to].clone())
            .ok_or_else(|| Error::Contract(format!("vertex {from} is neither the source nor a corner end")))
    }

    /// Forbidden corners for `w`, with `N(w^{-1})` taken along the element's reduced word.
    /// `order`, if given, is a permutation (zero-based) of that sequence.
    pub fn forbidden(&self, w: &WeylElement, order: Option<&[usize]>) -> Result<(Vec<usize>, Vec<Corner>)> {
        let seq = w.inversion_sequence();
        let seq = match order {
            None => seq,
            Some(perm) => {
                let mut sorted = perm.to_vec();
                sorted.sort_unstable();
                if sorted != (0..seq.len()).collect::<Vec<_>>() {
                    return Err(Error::Contract(format!(
                        "order must be a permutation of 1..={}",
                        seq.len()
                    )));
                }
                perm.iter().map(|&k| seq[k]).collect()
            }
        };
        let corners = seq
            .iter()
            .flat_map(|&r| self.by_root[r].iter().map(|&k| self.digraph.corners[k].clone()))
            .collect();
        Ok((seq, corners))
    }

    fn assemble<R: Ring>(
        &self,
        corners: &[Corner],
        weight: R,
        gamma: impl Fn(usize, usize) -> Result<R>,
    ) -> Result<Matrix<R>> {
        let (src, sink) = (self.digraph.source, self.digraph.sink);
        let n = corners.len();
        let mut between = vec![vec![R::zero(); n]; n];
        for (j, cj) in corners.iter().enumerate() {
            for (i, ci) in corners.iter().enumerate() {
                if i != j {
                    between[j][i] = gamma(cj.tr, ci.bl)?;
                }
            }
        }
        let from_source: Vec<R> = corners.iter().map(|c| gamma(src, c.bl)).collect::<Result<_>>()?;
        let to_sink: Vec<R> = corners.iter().map(|c| gamma(c.tr, sink)).collect::<Result<_>>()?;
        let total = gamma(src, sink)?;
        let m = avoidance_matrix(
            &vec![weight; n],
            |j, i| between[j][i].clone(),
            |i| from_source[i].clone(),
            |j| to_sink[j].clone(),
            total,
        );
        for i in 0..n {
            for j in 0..i {
                if !m.rows[i][j].is_zero() && !m.rows[j][i].is_zero() {
                    return Err(Error::Internal(format!(
                        "corners {i} and {j} reach each other, so the digraph has a cycle"
                    )));
                }
            }
        }
        Ok(m)
    }

    pub fn count(&self, w: &WeylElement) -> Result<ConeCount<BigInt>> {
        self.count_ordered(w, None)
    }

    pub fn count_ordered(&self, w: &WeylElement, order: Option<&[usize]>) -> Result<ConeCount<BigInt>> {
        let (inversions, corners) = self.forbidden(w, order)?;
        let matrix = self.assemble(&corners, BigInt::one(), |a, b| self.gamma(a, b))?;
        let value = determinant(&matrix)?;
        Ok(ConeCount {
            inversions,
            corners,
            matrix,
            value,
        })
    }

    pub fn poincare(&self, w: &WeylElement) -> Result<ConeCount<Poly>> {
        self.poincare_ordered(w, None)
    }

    pub fn poincare_ordered(&self, w: &WeylElement, order: Option<&[usize]>) -> Result<ConeCount<Poly>> {
        let (inversions, corners) = self.forbidden(w, order)?;
        let matrix = self.assemble(&corners, Poly::t(), |a, b| self.gamma_poly(a, b))?;
        let value = determinant(&matrix)?;
        Ok(ConeCount {
            inversions,
            corners,
            matrix,
            value,
        })
    }

    /// One row per group element, sorted by length and then by word.
    pub fn table(&self, with_poincare: bool, cap: u64) -> Result<Vec<TableRow>> {
        let elements = self.group.elements(cap)?;
        let mut rows: Vec<TableRow> = elements
            .par_iter()
            .map(|w| {
                let count = self.count(w)?.value;
                let poincare = if with_poincare {
                    Some(self.poincare(w)?.value)
                } else {
                    None
                };
                Ok(TableRow {
                    word: w.word.clone(),
                    length: w.word.len(),
                    count,
                    poincare,
                })
            })
            .collect::<Result<_>>()?;
        rows.sort_by(|a, b| (a.length, &a.word).cmp(&(b.length, &b.word)));
        Ok(rows)
    }

    /// Determinant, both oracles and the refined count for one element.
    pub fn verify(&self, w: &WeylElement) -> Result<Verification> {
        let excluded = w.inverse_inversion_set();
        let anti = oracle::count_antichains(self.system(), &excluded)?;
        let paths = oracle::count_avoiding_paths(&self.digraph, self.system(), &excluded)?;
        Ok(Verification {
            word: w.word.clone(),
            determinant: self.count(w)?.value,
            antichains: anti.total,
            avoiding_paths: paths.total,
            poincare: self.poincare(w)?.value,
            antichains_by_size: anti.by_size,
        })
    }

    pub fn verify_all(&self, cap: u64) -> Result<Vec<Verification>> {
        let elements = self.group.elements(cap)?;
        elements.par_iter().map(|w| self.verify(w)).collect()
    }
}

/// The source and every corner end: the only vertices paths in a matrix entry start from.
fn start_vertices(g: &ShiDigraph) -> Vec<usize> {
    let mut v: Vec<usize> = g.corners.iter().map(|c| c.tr).collect();
    v.push(g.source);
    v.sort_unstable();
    v.dedup();
    v
}

/// One-shot helper: the number of Shi regions in the cone of the element spelled by `word`.
pub fn count_regions(t: WeylType, word: &[usize]) -> Result<BigInt> {
    let engine = ConeEngine::new(t, None)?;
    let w = engine.group.element_of(word)?;
    Ok(engine.count(&w)?.value)
}

/// One-shot helper: antichains of the cone's restricted poset counted by size.
pub fn poincare_polynomial(t: WeylType, word: &[usize]) -> Result<Poly> {
    let engine = ConeEngine::new(t, None)?;
    let w = engine.group.element_of(word)?;
    Ok(engine.poincare(&w)?.value)
}
