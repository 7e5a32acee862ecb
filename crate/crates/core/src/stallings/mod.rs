//! Stallings graphs as tuples of partial injections.
//!
//! Vertices are numbered `0..n` with the base point at [`BASE`]. The text
//! document format numbers them from 1.

mod document;
mod fold;

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::words::{Alphabet, Letter, LetterSet, ReducedWord};

pub use fold::fold;

pub const BASE: usize = 0;

const UNDEFINED: u32 = u32::MAX;

/// An injective partial map on `0..n`, stored with its inverse.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PartialInjection {
    image: Vec<u32>,
    preimage: Vec<u32>,
}

impl PartialInjection {
    /// The nowhere-defined map on `0..n`.
    pub fn empty(n: usize) -> Self {
        Self {
            image: vec![UNDEFINED; n],
            preimage: vec![UNDEFINED; n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let ids: Vec<u32> = (0..n as u32).collect();
        Self {
            image: ids.clone(),
            preimage: ids,
        }
    }

    pub fn from_pairs(n: usize, pairs: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut f = Self::empty(n);
        for (i, j) in pairs {
            f.set(i, j)?;
        }
        Ok(f)
    }

    /// Defines `f(i) = j`, refusing anything that breaks injectivity.
    pub fn set(&mut self, i: usize, j: usize) -> Result<()> {
        let n = self.size();
        if i >= n || j >= n {
            return Err(Error::InvalidGraph(format!(
                "point {} or {} outside 1..={n}",
                i + 1,
                j + 1
            )));
        }
        if self.image[i] != UNDEFINED {
            return Err(Error::InvalidGraph(format!(
                "two edges with the same label leave vertex {}",
                i + 1
            )));
        }
        if self.preimage[j] != UNDEFINED {
            return Err(Error::InvalidGraph(format!(
                "two edges with the same label enter vertex {}",
                j + 1
            )));
        }
        self.image[i] = j as u32;
        self.preimage[j] = i as u32;
        Ok(())
    }

    /// Builds the map `i ↦ targets[i]`; the caller guarantees injectivity.
    pub(crate) fn from_image_unchecked(image: Vec<u32>) -> Self {
        let mut preimage = vec![UNDEFINED; image.len()];
        for (i, &j) in image.iter().enumerate() {
            if j != UNDEFINED {
                debug_assert_eq!(preimage[j as usize], UNDEFINED);
                preimage[j as usize] = i as u32;
            }
        }
        Self { image, preimage }
    }

    pub fn size(&self) -> usize {
        self.image.len()
    }

    pub fn apply(&self, i: usize) -> Option<usize> {
        match self.image[i] {
            UNDEFINED => None,
            j => Some(j as usize),
        }
    }

    pub fn preimage(&self, j: usize) -> Option<usize> {
        match self.preimage[j] {
            UNDEFINED => None,
            i => Some(i as usize),
        }
    }

    pub fn domain_size(&self) -> usize {
        self.image.iter().filter(|&&j| j != UNDEFINED).count()
    }

    pub fn image_size(&self) -> usize {
        self.preimage.iter().filter(|&&i| i != UNDEFINED).count()
    }

    /// `(i, f(i))` for every point of the domain, in increasing `i`.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.image
            .iter()
            .enumerate()
            .filter(|(_, &j)| j != UNDEFINED)
            .map(|(i, &j)| (i, j as usize))
    }

    pub fn inverse(&self) -> Self {
        Self {
            image: self.preimage.clone(),
            preimage: self.image.clone(),
        }
    }
}

/// The reduced rooted graph of a finitely generated subgroup.
///
/// Invariants: every map is injective, the underlying graph is connected and
/// every vertex other than the base has valency at least 2.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct StallingsGraph {
    alphabet: Alphabet,
    maps: Vec<PartialInjection>,
}

impl StallingsGraph {
    /// Validates and wraps one partial injection per generator.
    pub fn from_maps(alphabet: Alphabet, maps: Vec<PartialInjection>) -> Result<Self> {
        check_stallings(alphabet, &maps).map_err(Error::InvalidGraph)?;
        Ok(Self { alphabet, maps })
    }

    pub(crate) fn from_maps_unchecked(alphabet: Alphabet, maps: Vec<PartialInjection>) -> Self {
        debug_assert_eq!(check_stallings(alphabet, &maps), Ok(()));
        Self { alphabet, maps }
    }

    /// The graph of the trivial subgroup: one vertex, no edges.
    pub fn trivial(alphabet: Alphabet) -> Self {
        let maps = (0..alphabet.rank()).map(|_| PartialInjection::empty(1)).collect();
        Self { alphabet, maps }
    }

    /// Builds a graph from 0-based `(letter, source, target)` edges.
    pub fn from_edges(
        alphabet: Alphabet,
        size: usize,
        edges: impl IntoIterator<Item = (Letter, usize, usize)>,
    ) -> Result<Self> {
        let mut maps: Vec<_> = (0..alphabet.rank())
            .map(|_| PartialInjection::empty(size))
            .collect();
        for (x, p, q) in edges {
            if !alphabet.contains(x) || !x.is_positive() {
                return Err(Error::InvalidGraph(format!("edge label {x} is not a generator")));
            }
            maps[x.index()].set(p, q)?;
        }
        Self::from_maps(alphabet, maps)
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    /// Number of vertices, the size `|H|` of the subgroup.
    pub fn size(&self) -> usize {
        self.maps[0].size()
    }

    pub fn maps(&self) -> &[PartialInjection] {
        &self.maps
    }

    pub fn map(&self, generator: Letter) -> &PartialInjection {
        &self.maps[generator.index()]
    }

    pub fn edge_count(&self) -> usize {
        self.maps.iter().map(|f| f.domain_size()).sum()
    }

    /// Rank of the subgroup, `|E| − |V| + 1`.
    pub fn rank(&self) -> usize {
        self.edge_count() + 1 - self.size()
    }

    /// All positive edges sorted by `(letter, source)`.
    pub fn edges(&self) -> Vec<(Letter, usize, usize)> {
        self.alphabet
            .positive_letters()
            .flat_map(|x| self.maps[x.index()].pairs().map(move |(p, q)| (x, p, q)))
            .collect()
    }

    /// The end of the `x`-transition from `p`; negative letters read edges backwards.
    pub fn transition(&self, p: usize, x: Letter) -> Option<usize> {
        let f = &self.maps[x.index()];
        if x.is_positive() {
            f.apply(p)
        } else {
            f.preimage(p)
        }
    }

    /// Labels of the edges entering `p`. An `a`-edge leaving `p` enters it as `ā`.
    pub fn incoming_labels(&self, p: usize) -> LetterSet {
        self.alphabet
            .letters()
            .filter(|&x| self.transition(p, x.inverse()).is_some())
            .collect()
    }

    /// Number of letters of the symmetrized alphabet readable from `p`.
    pub fn valency(&self, p: usize) -> usize {
        self.alphabet
            .letters()
            .filter(|&x| self.transition(p, x).is_some())
            .count()
    }

    pub fn is_cyclically_reduced(&self) -> bool {
        (0..self.size()).all(|p| self.valency(p) >= 2)
    }

    /// The endpoint of the path labelled `letters` from `start`, if it exists.
    pub fn read(&self, start: usize, letters: &[Letter]) -> Option<usize> {
        letters.iter().try_fold(start, |p, &x| self.transition(p, x))
    }

    pub fn membership(&self, w: &ReducedWord) -> bool {
        self.read(BASE, w.letters()) == Some(BASE)
    }

    /// Strips the hanging path at the base.
    ///
    /// Returns the cyclically reduced core, based at the first vertex of
    /// valency at least 2 reached from the old base, and the label `g` of the
    /// path leading there, so that `w ∈ core` iff `g·w·g⁻¹ ∈ self`.
    pub fn cyclic_core(&self) -> Result<(StallingsGraph, ReducedWord)> {
        let mut removed = vec![false; self.size()];
        let mut conjugator = Vec::new();
        let mut p = BASE;
        loop {
            let live: Vec<Letter> = self
                .alphabet
                .letters()
                .filter(|&x| matches!(self.transition(p, x), Some(q) if !removed[q]))
                .collect();
            match live.len() {
                0 => return Err(Error::TrivialCore),
                1 => {
                    let x = live[0];
                    removed[p] = true;
                    conjugator.push(x);
                    p = self.transition(p, x).expect("live transition");
                }
                _ => break,
            }
        }
        let core = self.restrict(p, &removed);
        Ok((core, ReducedWord::from_reduced_unchecked(conjugator)))
    }

    fn restrict(&self, new_base: usize, removed: &[bool]) -> StallingsGraph {
        let keep = |p: usize| !removed[p];
        let order = self.discovery_order(new_base, keep);
        self.relabel(&order)
    }

    /// Breadth-first discovery order from `start` over letters `a < ā < b < …`,
    /// touching only vertices satisfying `keep`.
    fn discovery_order(&self, start: usize, keep: impl Fn(usize) -> bool) -> Vec<usize> {
        let mut seen = vec![false; self.size()];
        let mut order = Vec::with_capacity(self.size());
        let mut queue = VecDeque::new();
        seen[start] = true;
        queue.push_back(start);
        while let Some(p) = queue.pop_front() {
            order.push(p);
            for x in self.alphabet.letters() {
                if let Some(q) = self.transition(p, x) {
                    if !seen[q] && keep(q) {
                        seen[q] = true;
                        queue.push_back(q);
                    }
                }
            }
        }
        order
    }

    /// The subgraph on `order` with `order[i]` renamed to `i`.
    fn relabel(&self, order: &[usize]) -> StallingsGraph {
        let mut rename = vec![UNDEFINED; self.size()];
        for (new, &old) in order.iter().enumerate() {
            rename[old] = new as u32;
        }
        let maps = self
            .maps
            .iter()
            .map(|f| {
                let image = order
                    .iter()
                    .map(|&p| match f.apply(p) {
                        Some(q) => rename[q],
                        None => UNDEFINED,
                    })
                    .collect();
                PartialInjection::from_image_unchecked(image)
            })
            .collect();
        StallingsGraph::from_maps_unchecked(self.alphabet, maps)
    }

    /// Renumbers vertices by breadth-first discovery from the base.
    pub fn canonical(&self) -> StallingsGraph {
        let order = self.discovery_order(BASE, |_| true);
        self.relabel(&order)
    }

    /// Renames vertex `p` to `permutation[p]`; the base must stay fixed.
    pub fn permute_vertices(&self, permutation: &[usize]) -> Result<StallingsGraph> {
        if permutation.len() != self.size() || permutation.get(BASE) != Some(&BASE) {
            return Err(Error::Precondition(
                "vertex permutation must have the graph's size and fix the base".into(),
            ));
        }
        let edges = self
            .edges()
            .into_iter()
            .map(|(x, p, q)| (x, permutation[p], permutation[q]));
        StallingsGraph::from_edges(self.alphabet, self.size(), edges)
    }

    /// Spanning-tree access words: `paths[p]` labels the tree path from the base to `p`.
    fn tree_paths(&self) -> (Vec<ReducedWord>, Vec<Vec<bool>>) {
        let n = self.size();
        let mut paths: Vec<Option<Vec<Letter>>> = vec![None; n];
        let mut tree_edge = vec![vec![false; n]; self.alphabet.rank()];
        let mut queue = VecDeque::new();
        paths[BASE] = Some(Vec::new());
        queue.push_back(BASE);
        while let Some(p) = queue.pop_front() {
            for x in self.alphabet.letters() {
                let Some(q) = self.transition(p, x) else { continue };
                if paths[q].is_some() {
                    continue;
                }
                let mut path = paths[p].clone().expect("discovered");
                path.push(x);
                paths[q] = Some(path);
                // Record the positive edge underlying this transition.
                let source = if x.is_positive() { p } else { q };
                tree_edge[x.index()][source] = true;
                queue.push_back(q);
            }
        }
        let paths = paths
            .into_iter()
            .map(|p| ReducedWord::from_reduced_unchecked(p.expect("connected")))
            .collect();
        (paths, tree_edge)
    }

    /// A free basis read off a breadth-first spanning tree, one generator per
    /// non-tree edge in `(letter, source)` order.
    pub fn basis(&self) -> Vec<ReducedWord> {
        let (paths, tree_edge) = self.tree_paths();
        self.edges()
            .into_iter()
            .filter(|&(x, p, _)| !tree_edge[x.index()][p])
            .map(|(x, p, q)| {
                let edge = ReducedWord::from_reduced_unchecked(vec![x]);
                paths[p].mul(&edge).mul(&paths[q].inverse())
            })
            .collect()
    }

    /// Base-preserving, label-preserving isomorphism test by parallel traversal.
    pub fn is_isomorphic(&self, other: &StallingsGraph) -> bool {
        if self.alphabet != other.alphabet || self.size() != other.size() {
            return false;
        }
        let n = self.size();
        let mut forward = vec![UNDEFINED; n];
        let mut backward = vec![UNDEFINED; n];
        let mut queue = VecDeque::new();
        forward[BASE] = BASE as u32;
        backward[BASE] = BASE as u32;
        queue.push_back(BASE);
        while let Some(p) = queue.pop_front() {
            let q = forward[p] as usize;
            for x in self.alphabet.letters() {
                match (self.transition(p, x), other.transition(q, x)) {
                    (None, None) => {}
                    (Some(s), Some(t)) => {
                        if forward[s] == UNDEFINED && backward[t] == UNDEFINED {
                            forward[s] = t as u32;
                            backward[t] = s as u32;
                            queue.push_back(s);
                        } else if forward[s] != t as u32 || backward[t] != s as u32 {
                            return false;
                        }
                    }
                    _ => return false,
                }
            }
        }
        true
    }
}

/// Checks the Stallings-graph invariants on a tuple of partial injections.
///
/// Injectivity holds by construction of [`PartialInjection`]; this checks the
/// sizes, connectivity and the rooted valency condition.
pub fn check_stallings(alphabet: Alphabet, maps: &[PartialInjection]) -> std::result::Result<(), String> {
    if maps.len() != alphabet.rank() {
        return Err(format!("expected {} maps, found {}", alphabet.rank(), maps.len()));
    }
    let n = maps[0].size();
    if n == 0 {
        return Err("a Stallings graph has at least one vertex".into());
    }
    if maps.iter().any(|f| f.size() != n) {
        return Err("maps have different sizes".into());
    }
    let valency = |p: usize| {
        maps.iter()
            .map(|f| f.apply(p).is_some() as usize + f.preimage(p).is_some() as usize)
            .sum::<usize>()
    };
    if let Some(p) = (1..n).find(|&p| valency(p) < 2) {
        return Err(format!("vertex {} has valency {} < 2", p + 1, valency(p)));
    }
    if !is_connected(maps) {
        return Err("graph is not connected".into());
    }
    Ok(())
}

pub(crate) fn is_connected(maps: &[PartialInjection]) -> bool {
    let n = maps[0].size();
    let mut seen = vec![false; n];
    let mut stack = vec![BASE];
    seen[BASE] = true;
    let mut count = 1;
    while let Some(p) = stack.pop() {
        for f in maps {
            for q in [f.apply(p), f.preimage(p)].into_iter().flatten() {
                if !seen[q] {
                    seen[q] = true;
                    count += 1;
                    stack.push(q);
                }
            }
        }
    }
    count == n
}

#[cfg(test)]
mod tests;
