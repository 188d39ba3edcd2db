//! Minimum parent sets for shortest-path trees.
//!
//! A shortest-path tree rooted at `x` picks one BFS predecessor for every
//! other vertex. Its internal vertices `P` (root included) must therefore
//! hit `dag_in(v)` for every `v != x`, and any such `P` yields a tree whose
//! leaves are exactly `V \ P` when `P` is inclusion-minimal. So the number
//! of leaves is maximised by a minimum hitting set, and because candidate
//! parents of a layer-`d` vertex all sit in layer `d - 1`, the problem splits
//! into one independent set-cover instance per pair of consecutive layers.

use crate::bitset::{Bits, VertexSet};
use crate::graph::RootView;
use crate::solvers::Deadline;
use crate::Result;

/// Per-vertex candidate parents for one root.
#[derive(Clone, Debug)]
pub struct CoverInstance {
    pub root: usize,
    /// `candidates[v]` is `dag_in(v)`; empty for the root.
    pub candidates: Vec<Vec<usize>>,
    pub universe: usize,
}

impl CoverInstance {
    pub fn from_view(view: &RootView) -> CoverInstance {
        let universe = view.distances().len();
        CoverInstance {
            root: view.root(),
            candidates: (0..universe).map(|v| view.dag_in(v).to_vec()).collect(),
            universe,
        }
    }

    /// Whether `p` contains the root and hits every candidate list.
    pub fn is_cover(&self, p: &VertexSet) -> bool {
        p.contains(self.root)
            && (0..self.universe)
                .filter(|&v| v != self.root)
                .all(|v| self.candidates[v].iter().any(|&u| p.contains(u)))
    }
}

/// One layer-to-layer instance: cover `elements` (the lower layer) with
/// `sets` (the neighbourhoods of upper-layer vertices).
pub(crate) struct LayerCover {
    pub sets: Vec<Bits>,
    pub element_sets: Vec<Vec<usize>>,
    pub elements: usize,
}

impl LayerCover {
    pub fn between(view: &RootView, depth: usize) -> LayerCover {
        let upper = &view.layers()[depth];
        let lower = &view.layers()[depth + 1];
        let mut index = vec![usize::MAX; view.distances().len()];
        for (i, &u) in upper.iter().enumerate() {
            index[u] = i;
        }
        let mut sets = vec![Bits::new(lower.len()); upper.len()];
        let mut element_sets = vec![Vec::new(); lower.len()];
        for (j, &v) in lower.iter().enumerate() {
            for &u in view.dag_in(v) {
                let i = index[u];
                sets[i].insert(j);
                element_sets[j].push(i);
            }
        }
        LayerCover {
            sets,
            element_sets,
            elements: lower.len(),
        }
    }

    /// Greedy cover: largest marginal gain, ties to the smaller index,
    /// followed by removal of redundant sets. Returns chosen set indices.
    pub fn greedy(&self) -> Vec<usize> {
        let mut covered = Bits::new(self.elements);
        let mut chosen = Vec::new();
        while covered.count() < self.elements {
            let (best, _) = self
                .sets
                .iter()
                .enumerate()
                .map(|(i, s)| (i, s.count_without(&covered)))
                .fold(
                    (usize::MAX, 0),
                    |acc, (i, gain)| if gain > acc.1 { (i, gain) } else { acc },
                );
            chosen.push(best);
            covered.union_with(&self.sets[best]);
        }
        self.prune_redundant(chosen)
    }

    /// Drops sets whose elements are all covered by the others, scanning the
    /// latest choices first.
    fn prune_redundant(&self, mut chosen: Vec<usize>) -> Vec<usize> {
        let mut i = chosen.len();
        while i > 0 {
            i -= 1;
            let mut rest = Bits::new(self.elements);
            for (j, &s) in chosen.iter().enumerate() {
                if j != i {
                    rest.union_with(&self.sets[s]);
                }
            }
            if rest.count() == self.elements {
                chosen.remove(i);
            }
        }
        chosen.sort_unstable();
        chosen
    }

    /// Exact minimum cover by branch and bound.
    pub fn exact(&self, deadline: &Deadline) -> Result<Vec<usize>> {
        let incumbent = self.greedy();
        if incumbent.len() <= 1 {
            return Ok(incumbent);
        }
        let mut search = Search {
            inst: self,
            best: incumbent,
            chosen: Vec::new(),
            excluded: vec![false; self.sets.len()],
            deadline,
            nodes: 0,
        };
        let covered = Bits::new(self.elements);
        search.branch(&covered)?;
        let mut best = search.best;
        best.sort_unstable();
        Ok(best)
    }
}

struct Search<'a> {
    inst: &'a LayerCover,
    best: Vec<usize>,
    chosen: Vec<usize>,
    excluded: Vec<bool>,
    deadline: &'a Deadline,
    nodes: u64,
}

impl Search<'_> {
    /// Lower bound on the sets still needed: greedily pack uncovered elements
    /// no two of which share a candidate set.
    fn packing_bound(&self, covered: &Bits) -> usize {
        let mut blocked = covered.clone();
        let mut count = 0;
        while let Some(e) = (0..self.inst.elements).find(|&e| !blocked.contains(e)) {
            count += 1;
            for &s in &self.inst.element_sets[e] {
                blocked.union_with(&self.inst.sets[s]);
            }
            blocked.insert(e);
        }
        count
    }

    fn branch(&mut self, covered: &Bits) -> Result<()> {
        self.nodes += 1;
        if self.nodes.is_multiple_of(4096) {
            self.deadline.check()?;
        }
        if covered.count() == self.inst.elements {
            if self.chosen.len() < self.best.len() {
                self.best = self.chosen.clone();
            }
            return Ok(());
        }
        if self.chosen.len() + self.packing_bound(covered) >= self.best.len() {
            return Ok(());
        }
        // uncovered element with the fewest usable sets, ties to smaller index
        let mut pick: Option<(usize, usize)> = None;
        for e in 0..self.inst.elements {
            if covered.contains(e) {
                continue;
            }
            let usable = self.inst.element_sets[e]
                .iter()
                .filter(|&&s| !self.excluded[s])
                .count();
            if usable == 0 {
                return Ok(());
            }
            if pick.is_none_or(|(_, c)| usable < c) {
                pick = Some((e, usable));
            }
        }
        let (e, _) = pick.expect("an uncovered element exists");
        let mut options: Vec<(usize, usize)> = self.inst.element_sets[e]
            .iter()
            .filter(|&&s| !self.excluded[s])
            .map(|&s| (s, self.inst.sets[s].count_without(covered)))
            .collect();
        options.sort_by(|a, b| b.1.cmp(&a.1).then(a.0.cmp(&b.0)));

        let mut newly_excluded = Vec::new();
        for (s, _) in options {
            let mut next = covered.clone();
            next.union_with(&self.inst.sets[s]);
            self.chosen.push(s);
            let r = self.branch(&next);
            self.chosen.pop();
            r?;
            // later siblings never use s: any cover with s was explored here
            self.excluded[s] = true;
            newly_excluded.push(s);
        }
        for s in newly_excluded {
            self.excluded[s] = false;
        }
        Ok(())
    }
}

/// Internal vertices of a shortest-path tree rooted at the view's root,
/// chosen layer by layer by `solve`.
pub(crate) fn internal_set<F>(view: &RootView, mut solve: F) -> Result<VertexSet>
where
    F: FnMut(&LayerCover) -> Result<Vec<usize>>,
{
    let n = view.distances().len();
    let mut p = VertexSet::new(n);
    let layers = view.layers();
    for (depth, layer) in layers
        .iter()
        .enumerate()
        .take(layers.len().saturating_sub(1))
    {
        let inst = LayerCover::between(view, depth);
        for i in solve(&inst)? {
            p.insert(layer[i]);
        }
    }
    if layers.len() == 1 {
        p.insert(view.root());
    }
    Ok(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{cycle, generate, FamilySpec};
    use crate::graph::spanning_view;

    fn brute_min(inst: &LayerCover) -> usize {
        let k = inst.sets.len();
        (0u32..1 << k)
            .filter(|mask| {
                let mut c = Bits::new(inst.elements);
                for i in 0..k {
                    if mask >> i & 1 == 1 {
                        c.union_with(&inst.sets[i]);
                    }
                }
                c.count() == inst.elements
            })
            .map(|m| m.count_ones() as usize)
            .min()
            .unwrap()
    }

    #[test]
    fn exact_matches_enumeration_on_grid_layers() {
        let g = generate(&FamilySpec::Torus { n: 6 }).unwrap();
        let view = spanning_view(&g, 7).unwrap();
        let deadline = Deadline::none();
        for depth in 0..view.ecc() {
            let inst = LayerCover::between(&view, depth);
            let exact = inst.exact(&deadline).unwrap();
            assert_eq!(exact.len(), brute_min(&inst), "depth {depth}");
            assert!(inst.greedy().len() >= exact.len());
        }
    }

    #[test]
    fn internal_set_is_a_cover() {
        let g = cycle(7).unwrap();
        let view = spanning_view(&g, 0).unwrap();
        let inst = CoverInstance::from_view(&view);
        let deadline = Deadline::none();
        let p = internal_set(&view, |l| l.exact(&deadline)).unwrap();
        assert!(inst.is_cover(&p));
        // root plus the two vertices at distance 1 and 2 on each side
        assert_eq!(p.len(), 5);
    }
}
