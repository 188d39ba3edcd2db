//! Simple undirected graphs and the BFS machinery everything else is built on.

use std::collections::VecDeque;

use crate::bitset::VertexSet;
use crate::{Error, Result};

/// Immutable simple undirected graph on vertices `0..n`.
///
/// Neighbour lists are sorted ascending and symmetric; there are no loops or
/// parallel edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    m: usize,
}

impl Graph {
    /// Builds a graph from 0-based id pairs.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        if n == 0 {
            return Err(Error::InvalidParameter(
                "a graph needs at least one vertex".into(),
            ));
        }
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            for id in [u, v] {
                if id >= n {
                    return Err(Error::IdOutOfRange { id, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for (u, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                let (a, b) = (u.min(w[0]), u.max(w[0]));
                return Err(Error::DuplicateEdge(a, b));
            }
        }
        Ok(Graph {
            adj,
            m: edges.len(),
        })
    }

    /// The single-vertex graph K_1.
    pub fn singleton() -> Graph {
        Graph {
            adj: vec![Vec::new()],
            m: 0,
        }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.m
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n() {
            Ok(())
        } else {
            Err(Error::IdOutOfRange { id: v, n: self.n() })
        }
    }

    pub fn is_complete(&self) -> bool {
        let n = self.n();
        self.adj.iter().all(|l| l.len() == n - 1)
    }

    /// Whether the neighbourhood of every vertex in `set` is pairwise adjacent.
    pub fn is_clique(&self, set: &[usize]) -> bool {
        set.iter()
            .enumerate()
            .all(|(i, &u)| set[i + 1..].iter().all(|&v| self.has_edge(u, v)))
    }

    /// Subgraph induced by `keep`, relabelled to `0..keep.len()` in the given order.
    pub fn induced(&self, keep: &[usize]) -> Result<Graph> {
        let mut index = vec![usize::MAX; self.n()];
        for (i, &v) in keep.iter().enumerate() {
            self.check_vertex(v)?;
            index[v] = i;
        }
        let mut edges = Vec::new();
        for (i, &v) in keep.iter().enumerate() {
            for &w in self.neighbors(v) {
                let j = index[w];
                if j != usize::MAX && i < j {
                    edges.push((i, j));
                }
            }
        }
        Graph::new(keep.len(), &edges)
    }
}

/// Everything a BFS from one root knows: distances, layers and the
/// shortest-path DAG given as in-neighbour lists.
#[derive(Clone, Debug)]
pub struct RootView {
    root: usize,
    dist: Vec<Option<usize>>,
    layers: Vec<Vec<usize>>,
    dag_in: Vec<Vec<usize>>,
}

impl RootView {
    pub fn root(&self) -> usize {
        self.root
    }

    pub fn dist(&self, v: usize) -> Option<usize> {
        self.dist[v]
    }

    pub fn distances(&self) -> &[Option<usize>] {
        &self.dist
    }

    /// Largest finite distance from the root.
    pub fn ecc(&self) -> usize {
        self.layers.len() - 1
    }

    pub fn layers(&self) -> &[Vec<usize>] {
        &self.layers
    }

    /// Predecessors of `v` on shortest root-`v` paths.
    pub fn dag_in(&self, v: usize) -> &[usize] {
        &self.dag_in[v]
    }

    pub fn reached(&self) -> usize {
        self.layers.iter().map(Vec::len).sum()
    }

    pub fn spans(&self) -> bool {
        self.reached() == self.dist.len()
    }

    /// Vertices in non-decreasing distance order, root first.
    pub fn order(&self) -> impl Iterator<Item = usize> + '_ {
        self.layers.iter().flatten().copied()
    }

    /// Distance of `v`, assuming the root reaches every vertex.
    #[inline]
    pub(crate) fn d(&self, v: usize) -> usize {
        self.dist[v].expect("root view spans the graph")
    }
}

/// BFS from `x`, recording all shortest-path predecessors.
pub fn bfs_root_view(g: &Graph, x: usize) -> Result<RootView> {
    g.check_vertex(x)?;
    let n = g.n();
    let mut dist = vec![None; n];
    let mut dag_in = vec![Vec::new(); n];
    let mut layers: Vec<Vec<usize>> = vec![vec![x]];
    dist[x] = Some(0);
    let mut queue = VecDeque::from([x]);
    while let Some(u) = queue.pop_front() {
        let du = dist[u].unwrap();
        for &w in g.neighbors(u) {
            match dist[w] {
                None => {
                    dist[w] = Some(du + 1);
                    if layers.len() == du + 1 {
                        layers.push(Vec::new());
                    }
                    layers[du + 1].push(w);
                    dag_in[w].push(u);
                    queue.push_back(w);
                }
                Some(dw) if dw == du + 1 => dag_in[w].push(u),
                _ => {}
            }
        }
    }
    for layer in &mut layers {
        layer.sort_unstable();
    }
    for list in &mut dag_in {
        list.sort_unstable();
    }
    Ok(RootView {
        root: x,
        dist,
        layers,
        dag_in,
    })
}

/// BFS view that must reach every vertex.
pub fn spanning_view(g: &Graph, x: usize) -> Result<RootView> {
    let view = bfs_root_view(g, x)?;
    if view.spans() {
        Ok(view)
    } else {
        Err(Error::Disconnected)
    }
}

pub fn is_connected(g: &Graph) -> bool {
    bfs_root_view(g, 0).map(|v| v.spans()).unwrap_or(false)
}

pub fn require_connected(g: &Graph) -> Result<()> {
    if is_connected(g) {
        Ok(())
    } else {
        Err(Error::Disconnected)
    }
}

/// Open interval I(x, y): vertices strictly inside some shortest x,y-path.
pub fn interval(g: &Graph, x: usize, y: usize) -> Result<VertexSet> {
    g.check_vertex(y)?;
    if x == y {
        return Err(Error::InvalidParameter(
            "interval needs two distinct vertices".into(),
        ));
    }
    let from_x = bfs_root_view(g, x)?;
    let from_y = bfs_root_view(g, y)?;
    let dxy = from_x.dist(y).ok_or(Error::Disconnected)?;
    let mut out = VertexSet::new(g.n());
    for v in 0..g.n() {
        if v == x || v == y {
            continue;
        }
        if let (Some(a), Some(b)) = (from_x.dist(v), from_y.dist(v)) {
            if a + b == dxy {
                out.insert(v);
            }
        }
    }
    Ok(out)
}

/// Shortest-path counts from the view's root, saturated at 2.
pub fn path_counts(view: &RootView) -> Vec<u8> {
    let mut count = vec![0u8; view.distances().len()];
    count[view.root()] = 1;
    for v in view.order().skip(1) {
        let c: u32 = view.dag_in(v).iter().map(|&u| count[u] as u32).sum();
        count[v] = c.min(2) as u8;
    }
    count
}

/// True iff every pair of vertices is joined by exactly one shortest path.
pub fn is_geodetic(g: &Graph) -> Result<bool> {
    require_connected(g)?;
    for x in 0..g.n() {
        let view = bfs_root_view(g, x)?;
        if path_counts(&view).iter().any(|&c| c > 1) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Biconnected components as vertex lists (Hopcroft-Tarjan, iterative).
/// Isolated vertices form no block.
pub fn blocks(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.n();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut time = 0;
    let mut edge_stack: Vec<(usize, usize)> = Vec::new();
    let mut out = Vec::new();

    for start in 0..n {
        if disc[start] != usize::MAX {
            continue;
        }
        disc[start] = time;
        low[start] = time;
        time += 1;
        // (vertex, parent, next neighbour index)
        let mut stack = vec![(start, usize::MAX, 0usize)];
        while let Some(&mut (u, parent, ref mut idx)) = stack.last_mut() {
            if *idx < g.degree(u) {
                let w = g.neighbors(u)[*idx];
                *idx += 1;
                if w == parent {
                    continue;
                }
                if disc[w] == usize::MAX {
                    edge_stack.push((u, w));
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    stack.push((w, u, 0));
                } else if disc[w] < disc[u] {
                    edge_stack.push((u, w));
                    low[u] = low[u].min(disc[w]);
                }
            } else {
                stack.pop();
                if parent != usize::MAX {
                    low[parent] = low[parent].min(low[u]);
                    if low[u] >= disc[parent] {
                        let mut comp = Vec::new();
                        while let Some((a, b)) = edge_stack.pop() {
                            comp.push(a);
                            comp.push(b);
                            if (a, b) == (parent, u) {
                                break;
                            }
                        }
                        comp.sort_unstable();
                        comp.dedup();
                        out.push(comp);
                    }
                }
            }
        }
    }
    out
}

/// True iff every biconnected component induces a clique.
pub fn is_block_graph(g: &Graph) -> Result<bool> {
    require_connected(g)?;
    Ok(blocks(g).iter().all(|b| g.is_clique(b)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        let e: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::new(n, &e).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        let e: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::new(n, &e).unwrap()
    }

    fn complete(n: usize) -> Graph {
        let mut e = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                e.push((u, v));
            }
        }
        Graph::new(n, &e).unwrap()
    }

    #[test]
    fn build_examples() {
        let k1 = Graph::new(1, &[]).unwrap();
        assert_eq!((k1.n(), k1.m()), (1, 0));
        let p4 = path(4);
        assert_eq!(p4.max_degree(), 2);
        // complete tripartite with parts {0,1},{2,3},{4,5}
        let mut e = Vec::new();
        for u in 0..6 {
            for v in u + 1..6 {
                if u / 2 != v / 2 {
                    e.push((u, v));
                }
            }
        }
        let k32 = Graph::new(6, &e).unwrap();
        assert_eq!((k32.max_degree(), k32.m()), (4, 12));
    }

    #[test]
    fn build_errors() {
        assert_eq!(
            Graph::new(3, &[(0, 1), (1, 0)]),
            Err(Error::DuplicateEdge(0, 1))
        );
        assert_eq!(Graph::new(3, &[(2, 2)]), Err(Error::SelfLoop(2)));
        assert_eq!(
            Graph::new(3, &[(0, 3)]),
            Err(Error::IdOutOfRange { id: 3, n: 3 })
        );
        assert!(Graph::new(0, &[]).is_err());
    }

    #[test]
    fn bfs_examples() {
        let v = bfs_root_view(&path(4), 0).unwrap();
        let d: Vec<_> = (0..4).map(|i| v.dist(i).unwrap()).collect();
        assert_eq!(d, vec![0, 1, 2, 3]);
        assert_eq!(v.ecc(), 3);

        let c6 = bfs_root_view(&cycle(6), 2).unwrap();
        assert_eq!(c6.ecc(), 3);
        assert_eq!(c6.layers()[3], vec![5]);
        assert_eq!(c6.dag_in(5), &[0, 4]);
        assert!(bfs_root_view(&cycle(6), 6).is_err());
    }

    #[test]
    fn interval_examples() {
        assert_eq!(interval(&path(4), 0, 3).unwrap().to_vec(), vec![1, 2]);
        assert_eq!(interval(&cycle(4), 0, 2).unwrap().to_vec(), vec![1, 3]);
        assert!(interval(&complete(4), 1, 3).unwrap().is_empty());
        let split = Graph::new(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(interval(&split, 0, 3), Err(Error::Disconnected));
    }

    #[test]
    fn geodetic_examples() {
        assert!(is_geodetic(&path(5)).unwrap());
        assert!(!is_geodetic(&cycle(4)).unwrap());
        assert!(is_geodetic(&cycle(5)).unwrap());
    }

    #[test]
    fn block_graph_examples() {
        let bowtie = Graph::new(5, &[(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)]).unwrap();
        assert!(is_block_graph(&bowtie).unwrap());
        assert_eq!(blocks(&bowtie).len(), 2);
        assert!(!is_block_graph(&cycle(4)).unwrap());
        assert!(is_block_graph(&path(6)).unwrap());
        assert!(is_block_graph(&Graph::singleton()).unwrap());
    }

    #[test]
    fn connectivity_examples() {
        assert!(is_connected(&Graph::singleton()));
        assert!(!is_connected(&Graph::new(4, &[(0, 1), (2, 3)]).unwrap()));
        assert!(is_connected(&cycle(5)));
    }

    #[test]
    fn saturated_counts() {
        let view = bfs_root_view(&cycle(4), 0).unwrap();
        assert_eq!(path_counts(&view), vec![1, 1, 2, 1]);
    }
}
