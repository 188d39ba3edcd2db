//! Exact and heuristic solvers. Every result carries a certificate that the
//! visibility module can re-check independently.

mod brute;
pub mod cover;
mod maxleaf;

use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::bitset::VertexSet;
use crate::graph::{require_connected, spanning_view, Graph, RootView};
use crate::{Error, Result};

pub use brute::{alpha_brute, mu_brute, vx_brute};
pub use maxleaf::{max_leaf_spanning_tree, MaxLeafResult};

/// Caps, time limit and parallelism shared by all solvers.
#[derive(Clone, Debug)]
pub struct Settings {
    pub brute_cap: usize,
    pub mu_cap: usize,
    pub alpha_cap: usize,
    pub maxleaf_cap: usize,
    pub timeout: Option<Duration>,
    /// Worker threads for `vv_exact`; 1 runs sequentially.
    pub jobs: usize,
}

impl Default for Settings {
    fn default() -> Self {
        Settings {
            brute_cap: 22,
            mu_cap: 16,
            alpha_cap: 30,
            maxleaf_cap: 32,
            timeout: None,
            jobs: 1,
        }
    }
}

impl Settings {
    pub(crate) fn deadline(&self) -> Deadline {
        Deadline(self.timeout.map(|t| Instant::now() + t))
    }
}

#[derive(Clone, Copy, Debug)]
pub struct Deadline(Option<Instant>);

impl Deadline {
    pub fn none() -> Self {
        Deadline(None)
    }

    pub fn check(&self) -> Result<()> {
        match self.0 {
            Some(t) if Instant::now() >= t => Err(Error::Timeout),
            _ => Ok(()),
        }
    }
}

pub(crate) fn check_cap(n: usize, cap: usize) -> Result<()> {
    if n > cap {
        Err(Error::TooLarge { n, cap })
    } else {
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    CoverBnb,
    Brute,
    Greedy,
}

/// Parent of every vertex in a rooted spanning tree; `None` at the root.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParentMap(pub Vec<Option<usize>>);

impl ParentMap {
    pub fn root(&self) -> Option<usize> {
        self.0.iter().position(Option::is_none)
    }

    pub fn leaves(&self) -> VertexSet {
        let n = self.0.len();
        let mut has_child = vec![false; n];
        for p in self.0.iter().flatten() {
            has_child[*p] = true;
        }
        let root = self.root();
        let mut out = VertexSet::new(n);
        for (v, &child) in has_child.iter().enumerate() {
            if !child && Some(v) != root {
                out.insert(v);
            }
        }
        out
    }

    /// Depth of every vertex, or `None` if the map is not a tree on all vertices.
    pub fn depths(&self) -> Option<Vec<usize>> {
        let n = self.0.len();
        let mut depth = vec![usize::MAX; n];
        let root = self.root()?;
        if self.0.iter().filter(|p| p.is_none()).count() != 1 {
            return None;
        }
        depth[root] = 0;
        for start in 0..n {
            let mut chain = Vec::new();
            let mut v = start;
            while depth[v] == usize::MAX {
                chain.push(v);
                if chain.len() > n {
                    return None;
                }
                v = self.0[v]?;
            }
            let mut d = depth[v];
            for &u in chain.iter().rev() {
                d += 1;
                depth[u] = d;
            }
        }
        Some(depth)
    }

    /// True iff every parent edge is an edge of `g` and the map is a tree.
    pub fn is_spanning_tree_of(&self, g: &Graph) -> bool {
        self.0.len() == g.n()
            && self
                .0
                .iter()
                .enumerate()
                .all(|(v, p)| p.is_none_or(|p| g.has_edge(v, p)))
            && self.depths().is_some()
    }

    /// Spanning tree that preserves every distance from its root.
    pub fn is_shortest_path_tree_of(&self, g: &Graph) -> bool {
        if !self.is_spanning_tree_of(g) {
            return false;
        }
        let (Some(root), Some(depth)) = (self.root(), self.depths()) else {
            return false;
        };
        match spanning_view(g, root) {
            Ok(view) => (0..g.n()).all(|v| view.dist(v) == Some(depth[v])),
            Err(_) => false,
        }
    }
}

impl Serialize for ParentMap {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.0.iter().map(|p| p.map(|p| p + 1)))
    }
}

/// An x-visibility value with its witness set and, where available, the
/// shortest-path tree whose leaves form the witness.
#[derive(Clone, Debug, Serialize)]
pub struct SolveResult {
    pub value: usize,
    #[serde(serialize_with = "one_based")]
    pub root: usize,
    pub method: Method,
    #[serde(rename = "witness")]
    pub witness_set: VertexSet,
    pub tree: Option<ParentMap>,
}

fn one_based<S: Serializer>(v: &usize, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_u64(*v as u64 + 1)
}

/// Shortest-path tree whose internal vertices are `p`: every non-root vertex
/// takes its smallest-id predecessor in `p`.
fn tree_from_internal(view: &RootView, p: &VertexSet) -> ParentMap {
    let n = view.distances().len();
    let mut parent = vec![None; n];
    for v in view.order().skip(1) {
        parent[v] = view.dag_in(v).iter().copied().find(|&u| p.contains(u));
        debug_assert!(parent[v].is_some());
    }
    ParentMap(parent)
}

fn result_from_internal(view: &RootView, p: &VertexSet, method: Method) -> SolveResult {
    let tree = tree_from_internal(view, p);
    let leaves = tree.leaves();
    SolveResult {
        value: leaves.len(),
        root: view.root(),
        method,
        witness_set: leaves,
        tree: Some(tree),
    }
}

fn single_vertex(x: usize) -> SolveResult {
    SolveResult {
        value: 0,
        root: x,
        method: Method::CoverBnb,
        witness_set: VertexSet::new(1),
        tree: Some(ParentMap(vec![None])),
    }
}

pub(crate) fn vx_exact_in(view: &RootView, deadline: &Deadline) -> Result<SolveResult> {
    if view.distances().len() == 1 {
        return Ok(single_vertex(view.root()));
    }
    let p = cover::internal_set(view, |layer| layer.exact(deadline))?;
    Ok(result_from_internal(view, &p, Method::CoverBnb))
}

/// Exact v_x(G): the maximum number of leaves over shortest-path trees
/// rooted at `x`, found as a minimum internal-vertex set.
pub fn vx_exact(g: &Graph, x: usize, settings: &Settings) -> Result<SolveResult> {
    let view = spanning_view(g, x)?;
    vx_exact_in(&view, &settings.deadline())
}

/// Greedy lower bound: per layer, repeatedly take the parent covering the
/// most uncovered vertices.
pub fn vx_greedy(g: &Graph, x: usize) -> Result<SolveResult> {
    let view = spanning_view(g, x)?;
    if g.n() == 1 {
        let mut r = single_vertex(x);
        r.method = Method::Greedy;
        return Ok(r);
    }
    let p = cover::internal_set(&view, |layer| Ok(layer.greedy()))?;
    Ok(result_from_internal(&view, &p, Method::Greedy))
}

/// vv(G) with the smallest root attaining it.
#[derive(Clone, Debug, Serialize)]
pub struct VvResult {
    pub value: usize,
    #[serde(serialize_with = "one_based")]
    pub argmax: usize,
    pub best: SolveResult,
    /// `(root, v_x)` for every root that was solved; leaf roots are skipped
    /// when n >= 3.
    #[serde(serialize_with = "per_root_one_based")]
    pub per_root: Vec<(usize, usize)>,
}

fn per_root_one_based<S: Serializer>(
    v: &[(usize, usize)],
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    #[derive(Serialize)]
    struct Entry {
        root: usize,
        value: usize,
    }
    s.collect_seq(v.iter().map(|&(root, value)| Entry {
        root: root + 1,
        value,
    }))
}

pub fn vv_exact(g: &Graph, settings: &Settings) -> Result<VvResult> {
    require_connected(g)?;
    let n = g.n();
    if n < 2 {
        return Err(Error::InvalidParameter(
            "vv needs at least two vertices".into(),
        ));
    }
    // a leaf root is never optimal once n >= 3
    let roots: Vec<usize> = (0..n).filter(|&v| n < 3 || g.degree(v) != 1).collect();
    let deadline = settings.deadline();
    let solve = |x: usize| -> Result<SolveResult> {
        deadline.check()?;
        let view = spanning_view(g, x)?;
        vx_exact_in(&view, &deadline)
    };
    let results: Vec<SolveResult> = if settings.jobs > 1 {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(settings.jobs)
            .build()
            .map_err(|e| Error::InvalidParameter(format!("thread pool: {e}")))?;
        pool.install(|| {
            roots
                .par_iter()
                .map(|&x| solve(x))
                .collect::<Result<Vec<_>>>()
        })?
    } else {
        roots
            .iter()
            .map(|&x| solve(x))
            .collect::<Result<Vec<_>>>()?
    };
    let per_root: Vec<(usize, usize)> = results.iter().map(|r| (r.root, r.value)).collect();
    // first maximum in root order, so ties go to the smallest id
    let best = results
        .into_iter()
        .reduce(|a, b| if b.value > a.value { b } else { a })
        .expect("at least one non-leaf root");
    Ok(VvResult {
        value: best.value,
        argmax: best.root,
        best,
        per_root,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, cycle, figure1, generate, path, star, FamilySpec};
    use crate::visibility::is_x_visibility_set;

    fn check(g: &Graph, r: &SolveResult) {
        assert_eq!(r.witness_set.len(), r.value);
        assert!(is_x_visibility_set(g, r.root, &r.witness_set).unwrap());
        if let Some(t) = &r.tree {
            assert!(t.is_shortest_path_tree_of(g));
            assert!(t.leaves().len() >= r.value);
        }
    }

    fn vx(g: &Graph, x: usize) -> usize {
        let r = vx_exact(g, x, &Settings::default()).unwrap();
        check(g, &r);
        r.value
    }

    #[test]
    fn cycles_and_paths() {
        let c5 = cycle(5).unwrap();
        assert!((0..5).all(|x| vx(&c5, x) == 2));
        let p6 = path(6).unwrap();
        assert_eq!(vx(&p6, 2), 2);
        assert_eq!(vx(&p6, 0), 1);
    }

    #[test]
    fn figure1_roots() {
        let f = figure1(1).unwrap();
        let c = f.copies[0];
        assert_eq!(vx(&f.graph, f.x), 10);
        assert_eq!(vx(&f.graph, c.a), 9);
        assert_eq!(vx(&f.graph, c.b), 8);
    }

    #[test]
    fn grid_root() {
        let g = generate(&FamilySpec::Grid { n: 4 }).unwrap();
        assert_eq!(vx(&g, 5), 9);
    }

    #[test]
    fn vv_examples() {
        let s = Settings::default();
        assert_eq!(
            vv_exact(&generate(&FamilySpec::Grid { n: 4 }).unwrap(), &s)
                .unwrap()
                .value,
            9
        );
        let st = vv_exact(&star(5).unwrap(), &s).unwrap();
        assert_eq!((st.value, st.argmax), (5, 0));
        let prism = generate(&FamilySpec::CompleteProduct { m: 3, n: 2 }).unwrap();
        assert_eq!(vv_exact(&prism, &s).unwrap().value, 4);
    }

    #[test]
    fn parallel_matches_sequential() {
        let g = generate(&FamilySpec::Prism { n: 5 }).unwrap();
        let seq = vv_exact(&g, &Settings::default()).unwrap();
        let par = vv_exact(
            &g,
            &Settings {
                jobs: 4,
                ..Settings::default()
            },
        )
        .unwrap();
        assert_eq!(seq.per_root, par.per_root);
        assert_eq!((seq.value, seq.argmax), (par.value, par.argmax));
        assert_eq!(seq.best.witness_set, par.best.witness_set);
    }

    #[test]
    fn greedy_examples() {
        let st = star(6).unwrap();
        assert_eq!(vx_greedy(&st, 0).unwrap().value, 6);
        let c6 = cycle(6).unwrap();
        let r = vx_greedy(&c6, 0).unwrap();
        check(&c6, &r);
        assert_eq!(r.value, 2);
        let g10 = generate(&FamilySpec::Grid { n: 10 }).unwrap();
        let r = vx_greedy(&g10, 11).unwrap();
        check(&g10, &r);
        assert!(r.value <= 54);
    }

    #[test]
    fn tiny_graphs() {
        let k1 = Graph::singleton();
        assert_eq!(vx(&k1, 0), 0);
        assert_eq!(vx(&complete(2).unwrap(), 1), 1);
        assert!(vv_exact(&k1, &Settings::default()).is_err());
    }

    #[test]
    fn disconnected_rejected() {
        let g = Graph::new(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(
            vx_exact(&g, 0, &Settings::default()).unwrap_err(),
            Error::Disconnected
        );
        assert_eq!(
            vv_exact(&g, &Settings::default()).unwrap_err(),
            Error::Disconnected
        );
        assert_eq!(vx_greedy(&g, 0).unwrap_err(), Error::Disconnected);
    }

    #[test]
    fn zero_timeout_is_a_hard_error() {
        let g = generate(&FamilySpec::Torus { n: 9 }).unwrap();
        let s = Settings {
            timeout: Some(Duration::ZERO),
            ..Settings::default()
        };
        std::thread::sleep(Duration::from_millis(1));
        assert_eq!(vv_exact(&g, &s).unwrap_err(), Error::Timeout);
    }

    #[test]
    fn parent_map_rejects_cycles() {
        let c4 = cycle(4).unwrap();
        assert!(!ParentMap(vec![None, Some(2), Some(1), Some(0)]).is_spanning_tree_of(&c4));
        assert!(ParentMap(vec![None, Some(0), Some(1), Some(0)]).is_shortest_path_tree_of(&c4));
        assert!(!ParentMap(vec![None, Some(0), Some(1), Some(2)]).is_shortest_path_tree_of(&c4));
    }
}
