//! Stallings folding with a union-find over vertices.

use super::{PartialInjection, StallingsGraph, BASE, UNDEFINED};
use crate::words::{Alphabet, Letter, ReducedWord};

struct DisjointSet {
    parent: Vec<u32>,
    size: Vec<u32>,
}

impl DisjointSet {
    fn new(n: usize) -> Self {
        Self {
            parent: (0..n as u32).collect(),
            size: vec![1; n],
        }
    }

    fn find(&mut self, mut node: u32) -> u32 {
        let mut root = node;
        while self.parent[root as usize] != root {
            root = self.parent[root as usize];
        }
        while self.parent[node as usize] != root {
            let next = self.parent[node as usize];
            self.parent[node as usize] = root;
            node = next;
        }
        root
    }

    /// Returns `(kept, absorbed)` roots, or `None` if already merged.
    fn union(&mut self, a: u32, b: u32) -> Option<(u32, u32)> {
        let (a, b) = (self.find(a), self.find(b));
        if a == b {
            return None;
        }
        let (kept, absorbed) = if self.size[a as usize] >= self.size[b as usize] {
            (a, b)
        } else {
            (b, a)
        };
        self.parent[absorbed as usize] = kept;
        self.size[kept as usize] += self.size[absorbed as usize];
        Some((kept, absorbed))
    }
}

/// Mutable folding workspace: a transition table per vertex over the
/// symmetrized alphabet, whose targets may be stale (non-root) vertices.
struct Folder {
    width: usize,
    table: Vec<u32>,
    sets: DisjointSet,
    pending: Vec<(u32, u32)>,
}

impl Folder {
    fn new(alphabet: Alphabet, vertices: usize) -> Self {
        Self {
            width: alphabet.size(),
            table: vec![UNDEFINED; vertices * alphabet.size()],
            sets: DisjointSet::new(vertices),
            pending: Vec::new(),
        }
    }

    fn slot(&self, p: u32, x: Letter) -> usize {
        p as usize * self.width + x.code()
    }

    fn link(&mut self, p: u32, x: Letter, q: u32) {
        self.set_or_merge(p, x, q);
        self.set_or_merge(q, x.inverse(), p);
    }

    fn set_or_merge(&mut self, p: u32, x: Letter, q: u32) {
        let slot = self.slot(p, x);
        match self.table[slot] {
            UNDEFINED => self.table[slot] = q,
            existing => self.pending.push((existing, q)),
        }
    }

    fn run(&mut self) {
        while let Some((a, b)) = self.pending.pop() {
            let Some((kept, absorbed)) = self.sets.union(a, b) else {
                continue;
            };
            for code in 0..self.width {
                let from = absorbed as usize * self.width + code;
                let moved = self.table[from];
                if moved == UNDEFINED {
                    continue;
                }
                let to = kept as usize * self.width + code;
                match self.table[to] {
                    UNDEFINED => self.table[to] = moved,
                    existing => self.pending.push((existing, moved)),
                }
            }
        }
    }

    fn target(&mut self, p: u32, x: Letter) -> Option<u32> {
        match self.table[self.slot(p, x)] {
            UNDEFINED => None,
            q => Some(self.sets.find(q)),
        }
    }

    /// Publishes the folded graph, numbering root vertices by breadth-first
    /// discovery from the base.
    fn finish(mut self, alphabet: Alphabet) -> StallingsGraph {
        let base = self.sets.find(BASE as u32);
        let total = self.table.len() / self.width;
        let mut rename = vec![UNDEFINED; total];
        let mut order = vec![base];
        rename[base as usize] = 0;
        let mut head = 0;
        while head < order.len() {
            let p = order[head];
            head += 1;
            for x in alphabet.letters() {
                if let Some(q) = self.target(p, x) {
                    if rename[q as usize] == UNDEFINED {
                        rename[q as usize] = order.len() as u32;
                        order.push(q);
                    }
                }
            }
        }
        let mut maps = Vec::with_capacity(alphabet.rank());
        for x in alphabet.positive_letters() {
            let image = order
                .iter()
                .map(|&p| match self.target(p, x) {
                    Some(q) => rename[q as usize],
                    None => UNDEFINED,
                })
                .collect();
            maps.push(PartialInjection::from_image_unchecked(image));
        }
        StallingsGraph::from_maps_unchecked(alphabet, maps)
    }
}

/// The Stallings graph of the subgroup generated by `generators`.
///
/// Empty generators are ignored; with none left the result is the trivial
/// one-vertex graph. The output does not depend on generator order.
pub fn fold(generators: &[ReducedWord], alphabet: Alphabet) -> StallingsGraph {
    let inner: usize = generators
        .iter()
        .filter(|w| !w.is_empty())
        .map(|w| w.len() - 1)
        .sum();
    let mut folder = Folder::new(alphabet, inner + 1);
    let base = BASE as u32;
    let mut next = 1u32;
    for w in generators.iter().filter(|w| !w.is_empty()) {
        let mut p = base;
        for (i, &x) in w.letters().iter().enumerate() {
            let q = if i + 1 == w.len() {
                base
            } else {
                next += 1;
                next - 1
            };
            folder.link(p, x, q);
            p = q;
        }
    }
    folder.run();
    folder.finish(alphabet)
}
