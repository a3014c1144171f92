//! Weyl group elements acting as signed permutations of the positive roots.

use std::collections::{HashSet, VecDeque};
use std::sync::Arc;

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::root_system::RootSystem;

/// Default cap on group enumeration.
pub const DEFAULT_MAX_GROUP_ORDER: u64 = 1_000_000;

/// Signed root index: `k < N` is positive root `k`, `k >= N` is `-(root k - N)`.
type Signed = u32;

/// Precomputed action of each simple reflection on signed roots.
#[derive(Debug)]
pub struct ReflectionTable {
    n_pos: usize,
    /// `table[i][s]` is the image of signed root `s` under `s_i`.
    table: Vec<Vec<Signed>>,
}

impl ReflectionTable {
    pub fn new(sys: &RootSystem) -> Self {
        let n_pos = sys.num_positive();
        let table = (0..sys.rank())
            .map(|i| {
                let mut row = vec![0; 2 * n_pos];
                for (k, root) in sys.positive.iter().enumerate() {
                    let img = sys.simple_reflection(i, root);
                    let s = if img.iter().all(|&c| c >= 0) {
                        sys.index_of(&img).expect("closed under reflections") as u32
                    } else {
                        let neg: Vec<i64> = img.iter().map(|c| -c).collect();
                        (sys.index_of(&neg).expect("closed under reflections") + n_pos) as u32
                    };
                    row[k] = s;
                    row[k + n_pos] = negate(s, n_pos);
                }
                row
            })
            .collect();
        ReflectionTable { n_pos, table }
    }
}

fn negate(s: Signed, n_pos: usize) -> Signed {
    let n = n_pos as u32;
    if s < n {
        s + n
    } else {
        s - n
    }
}

/// A Weyl group element, stored by its images of the positive roots, together with a word.
#[derive(Debug, Clone)]
pub struct WeylElement {
    refl: Arc<ReflectionTable>,
    images: Vec<Signed>,
    /// One-based letters; `w = s_{word[0]} s_{word[1]} ...`.
    pub word: Vec<usize>,
}

impl PartialEq for WeylElement {
    fn eq(&self, other: &Self) -> bool {
        self.images == other.images
    }
}

impl Eq for WeylElement {}

impl WeylElement {
    pub fn identity(refl: Arc<ReflectionTable>) -> Self {
        let images = (0..refl.n_pos as u32).collect();
        WeylElement {
            refl,
            images,
            word: Vec::new(),
        }
    }

    fn rank(&self) -> usize {
        self.refl.table.len()
    }

    fn apply_signed(&self, s: Signed) -> Signed {
        let n = self.refl.n_pos;
        let s = s as usize;
        if s < n {
            self.images[s]
        } else {
            negate(self.images[s - n], n)
        }
    }

    /// `self * s_i` for a zero-based generator.
    pub fn times_simple(&self, i: usize) -> Self {
        let images = (0..self.refl.n_pos)
            .map(|k| self.apply_signed(self.refl.table[i][k]))
            .collect();
        let mut word = self.word.clone();
        word.push(i + 1);
        WeylElement {
            refl: self.refl.clone(),
            images,
            word,
        }
    }

    /// Image of positive root `k` as `(index, is_positive)`.
    pub fn apply(&self, k: usize) -> (usize, bool) {
        let s = self.images[k] as usize;
        let n = self.refl.n_pos;
        if s < n {
            (s, true)
        } else {
            (s - n, false)
        }
    }

    /// Images of the simple roots, which determine the element.
    pub fn key(&self) -> Vec<Signed> {
        self.images[..self.rank()].to_vec()
    }

    pub fn length(&self) -> usize {
        self.images
            .iter()
            .filter(|&&s| s as usize >= self.refl.n_pos)
            .count()
    }

    /// `N(w^{-1}) = { beta > 0 : w(beta) < 0 }`, in positive-root index order.
    pub fn inverse_inversion_set(&self) -> Vec<usize> {
        (0..self.refl.n_pos).filter(|&k| !self.apply(k).1).collect()
    }

    /// `N(w) = { alpha > 0 : w^{-1}(alpha) < 0 }`, in positive-root index order.
    pub fn inversion_set(&self) -> Vec<usize> {
        let mut out: Vec<usize> = (0..self.refl.n_pos)
            .filter_map(|k| match self.apply(k) {
                (img, false) => Some(img),
                _ => None,
            })
            .collect();
        out.sort_unstable();
        out
    }

    pub fn inverse(&self) -> Self {
        let n = self.refl.n_pos;
        let mut images = vec![0; n];
        for k in 0..n {
            let (img, pos) = self.apply(k);
            images[img] = if pos { k as u32 } else { (k + n) as u32 };
        }
        WeylElement {
            refl: self.refl.clone(),
            images,
            word: self.word.iter().rev().copied().collect(),
        }
    }

    /// A reduced word for the element, read off from right descents.
    pub fn reduced_word(&self) -> Vec<usize> {
        if self.word.len() == self.length() {
            return self.word.clone();
        }
        let mut w = self.clone();
        let mut rev = Vec::new();
        while let Some(i) = (0..self.rank()).find(|&i| !w.apply(i).1) {
            w = w.times_simple(i);
            rev.push(i + 1);
        }
        rev.reverse();
        rev
    }

    /// `N(w^{-1})` listed along a reduced word `a_1 ... a_m` of `w` as
    /// `alpha_{a_m}, s_{a_m}(alpha_{a_{m-1}}), ...`.
    pub fn inversion_sequence(&self) -> Vec<usize> {
        let word = self.reduced_word();
        let mut out = Vec::with_capacity(word.len());
        let mut prefix = Self::identity(self.refl.clone());
        for &a in word.iter().rev() {
            let (k, pos) = prefix.apply(a - 1);
            debug_assert!(pos);
            out.push(k);
            prefix = prefix.times_simple(a - 1);
        }
        out
    }

    pub fn word_string(&self) -> String {
        self.word
            .iter()
            .map(|a| a.to_string())
            .collect::<Vec<_>>()
            .join(" ")
    }
}

/// Parses a one-based word separated by whitespace and/or commas.
pub fn parse_word(s: &str, rank: usize) -> Result<Vec<usize>> {
    s.split(|c: char| c.is_whitespace() || c == ',')
        .filter(|t| !t.is_empty())
        .map(|t| {
            let a: usize = t
                .parse()
                .map_err(|_| Error::InvalidWord(format!("`{t}` is not an integer")))?;
            if a == 0 || a > rank {
                return Err(Error::InvalidWord(format!(
                    "letter {a} outside 1..={rank}"
                )));
            }
            Ok(a)
        })
        .collect()
}

/// Holds a root system together with its reflection table.
#[derive(Debug, Clone)]
pub struct WeylGroup {
    pub system: Arc<RootSystem>,
    refl: Arc<ReflectionTable>,
}

impl WeylGroup {
    pub fn new(system: Arc<RootSystem>) -> Self {
        let refl = Arc::new(ReflectionTable::new(&system));
        WeylGroup { system, refl }
    }

    pub fn identity(&self) -> WeylElement {
        WeylElement::identity(self.refl.clone())
    }

    pub fn element_of(&self, word: &[usize]) -> Result<WeylElement> {
        let rank = self.system.rank();
        let mut w = self.identity();
        for &a in word {
            if a == 0 || a > rank {
                return Err(Error::InvalidWord(format!(
                    "letter {a} outside 1..={rank}"
                )));
            }
            w = w.times_simple(a - 1);
        }
        Ok(w)
    }

    pub fn parse_element(&self, s: &str) -> Result<WeylElement> {
        self.element_of(&parse_word(s, self.system.rank())?)
    }

    pub fn order(&self) -> Result<BigUint> {
        Ok(self.system.invariants()?.weyl_order)
    }

    /// Breadth-first enumeration; each element carries a shortest word.
    pub fn enumerate(&self, cap: u64) -> Result<GroupIter> {
        let order = self.order()?;
        if order > BigUint::from(cap) {
            return Err(Error::CapExceeded {
                order: order.to_string(),
                cap,
            });
        }
        let id = self.identity();
        let mut seen = HashSet::new();
        seen.insert(id.key());
        Ok(GroupIter {
            queue: VecDeque::from([id]),
            seen,
        })
    }

    pub fn elements(&self, cap: u64) -> Result<Vec<WeylElement>> {
        Ok(self.enumerate(cap)?.collect())
    }
}

pub struct GroupIter {
    queue: VecDeque<WeylElement>,
    seen: HashSet<Vec<Signed>>,
}

impl Iterator for GroupIter {
    type Item = WeylElement;

    fn next(&mut self) -> Option<WeylElement> {
        let w = self.queue.pop_front()?;
        for i in 0..w.rank() {
            // Only extend along ascents so each child is one longer than its parent.
            if w.apply(i).1 {
                let child = w.times_simple(i);
                if self.seen.insert(child.key()) {
                    self.queue.push_back(child);
                }
            }
        }
        Some(w)
    }
}
