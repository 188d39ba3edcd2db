//! Maximum-leaf spanning trees through minimum connected dominating sets:
//! for n >= 3, l(G) = n - gamma_c(G).

use serde::Serialize;

use crate::bitset::VertexSet;
use crate::graph::{require_connected, Graph};
use crate::solvers::{check_cap, Deadline, ParentMap, Settings};
use crate::Result;

#[derive(Clone, Debug, Serialize)]
pub struct MaxLeafResult {
    pub value: usize,
    /// Minimum connected dominating set (the internal vertices of the tree).
    pub cds: VertexSet,
    pub tree: ParentMap,
}

/// l(G) with a spanning-tree certificate. Capped at 64 vertices regardless
/// of settings since the search works on machine words.
pub fn max_leaf_spanning_tree(g: &Graph, settings: &Settings) -> Result<MaxLeafResult> {
    check_cap(g.n(), settings.maxleaf_cap.min(64))?;
    require_connected(g)?;
    let n = g.n();
    match n {
        1 => {
            return Ok(MaxLeafResult {
                value: 0,
                cds: VertexSet::from_ids(1, [0])?,
                tree: ParentMap(vec![None]),
            })
        }
        2 => {
            return Ok(MaxLeafResult {
                value: 2,
                cds: VertexSet::from_ids(2, [0])?,
                tree: ParentMap(vec![None, Some(0)]),
            })
        }
        _ => {}
    }
    let nb: Vec<u64> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u64, |m, &u| m | 1 << u))
        .collect();
    let closed: Vec<u64> = (0..n).map(|v| nb[v] | 1 << v).collect();
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };

    let upper = bfs_tree_internal(&nb, all);
    let mut search = CdsSearch {
        nb: &nb,
        closed: &closed,
        all,
        max_deg: g.max_degree().max(1) as u32,
        best: upper,
        deadline: settings.deadline(),
        nodes: 0,
    };

    // every CDS meets N[v]; start from each of its vertices in turn and
    // forbid earlier starts to enumerate each connected set once
    let v = (0..n).min_by_key(|&v| (g.degree(v), v)).unwrap();
    let mut forbidden = 0u64;
    let mut starts = closed[v];
    while starts != 0 {
        let s = starts.trailing_zeros() as usize;
        starts &= starts - 1;
        let set = 1u64 << s;
        let frontier = nb[s] & !forbidden & !set;
        search.grow(set, closed[s], frontier, forbidden | set)?;
        forbidden |= set;
    }

    let cds = search.best;
    let tree = tree_over(&nb, cds, n);
    Ok(MaxLeafResult {
        value: n - cds.count_ones() as usize,
        cds: VertexSet::from_ids(n, bits(cds))?,
        tree,
    })
}

fn bits(mut m: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if m == 0 {
            return None;
        }
        let t = m.trailing_zeros() as usize;
        m &= m - 1;
        Some(t)
    })
}

/// Internal vertices of a BFS tree from a maximum-degree vertex; a
/// connected dominating set used as the initial incumbent.
fn bfs_tree_internal(nb: &[u64], all: u64) -> u64 {
    let root = (0..nb.len())
        .max_by_key(|&v| (nb[v].count_ones(), usize::MAX - v))
        .unwrap();
    let mut seen = 1u64 << root;
    let mut internal = 0u64;
    let mut frontier = vec![root];
    while seen != all {
        let mut next = Vec::new();
        for &u in &frontier {
            let fresh = nb[u] & !seen;
            if fresh != 0 {
                internal |= 1 << u;
                seen |= fresh;
                next.extend(bits(fresh));
            }
        }
        frontier = next;
    }
    internal
}

/// Spanning tree in which the connected dominating set `cds` carries every
/// internal vertex.
fn tree_over(nb: &[u64], cds: u64, n: usize) -> ParentMap {
    let root = cds.trailing_zeros() as usize;
    let mut parent = vec![None; n];
    let mut seen = 1u64 << root;
    let mut queue = std::collections::VecDeque::from([root]);
    while let Some(u) = queue.pop_front() {
        for w in bits(nb[u] & cds & !seen) {
            seen |= 1 << w;
            parent[w] = Some(u);
            queue.push_back(w);
        }
    }
    for (v, p) in parent.iter_mut().enumerate() {
        if cds >> v & 1 == 0 {
            *p = Some((nb[v] & cds).trailing_zeros() as usize);
        }
    }
    ParentMap(parent)
}

struct CdsSearch<'a> {
    nb: &'a [u64],
    closed: &'a [u64],
    all: u64,
    max_deg: u32,
    best: u64,
    deadline: Deadline,
    nodes: u64,
}

impl CdsSearch<'_> {
    /// Extends the connected set `set` (dominating `dom`) by frontier
    /// vertices; `excluded` marks vertices this branch may never add.
    fn grow(&mut self, set: u64, dom: u64, frontier: u64, excluded: u64) -> Result<()> {
        self.nodes += 1;
        if self.nodes.is_multiple_of(4096) {
            self.deadline.check()?;
        }
        let size = set.count_ones();
        if dom == self.all {
            if size < self.best.count_ones() {
                self.best = set;
            }
            return Ok(());
        }
        // each added vertex is already dominated, so it dominates at most
        // max_deg new vertices
        let missing = (self.all & !dom).count_ones();
        if size + missing.div_ceil(self.max_deg) >= self.best.count_ones() {
            return Ok(());
        }
        let mut excluded = excluded;
        let mut f = frontier;
        while f != 0 {
            let v = f.trailing_zeros() as usize;
            f &= f - 1;
            let next_set = set | 1 << v;
            let next_frontier = (f | (self.nb[v] & !excluded)) & !next_set;
            let next_excluded = excluded | 1 << v;
            self.grow(next_set, dom | self.closed[v], next_frontier, next_excluded)?;
            // later siblings may not add v
            excluded |= 1 << v;
        }
        Ok(())
    }
}
