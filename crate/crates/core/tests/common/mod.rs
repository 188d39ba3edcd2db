#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use vertex_visibility::generators::{connected_labeled_graphs, random_connected};
use vertex_visibility::Graph;

pub const CORPUS_SEED: u64 = 20_240_917;
pub const RANDOM_GRAPHS: usize = 200;

/// Every connected labelled graph on at most five vertices.
pub fn exhaustive_small() -> Vec<Graph> {
    (1..=5).flat_map(connected_labeled_graphs).collect()
}

/// Seeded random connected graphs on 6 to 10 vertices.
pub fn random_medium(count: usize, seed: u64) -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(6..=10);
            let p = rng.gen_range(0.2..0.7);
            random_connected(n, p, &mut rng).unwrap()
        })
        .collect()
}

pub fn corpus() -> Vec<Graph> {
    let mut all = exhaustive_small();
    all.extend(random_medium(RANDOM_GRAPHS, CORPUS_SEED));
    all
}

/// All-pairs distances by BFS from every vertex, written without the
/// library's layered views.
pub fn distance_matrix(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.n();
    (0..n)
        .map(|s| {
            let mut d = vec![usize::MAX; n];
            d[s] = 0;
            let mut queue = std::collections::VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &w in g.neighbors(u) {
                    if d[w] == usize::MAX {
                        d[w] = d[u] + 1;
                        queue.push_back(w);
                    }
                }
            }
            d
        })
        .collect()
}

/// Every shortest path from `x` to `y`, listed vertex by vertex.
pub fn geodesics(g: &Graph, dist: &[Vec<usize>], x: usize, y: usize) -> Vec<Vec<usize>> {
    fn walk(
        g: &Graph,
        dist: &[Vec<usize>],
        y: usize,
        path: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        let u = *path.last().unwrap();
        if u == y {
            out.push(path.clone());
            return;
        }
        for &w in g.neighbors(u) {
            if dist[w][y] + 1 == dist[u][y] {
                path.push(w);
                walk(g, dist, y, path, out);
                path.pop();
            }
        }
    }
    let mut out = Vec::new();
    walk(g, dist, y, &mut vec![x], &mut out);
    out
}

/// `y` is seen from `x` past `s` if some geodesic has no member of `s`
/// strictly between its ends.
pub fn sees(g: &Graph, dist: &[Vec<usize>], x: usize, y: usize, s: &[usize]) -> bool {
    geodesics(g, dist, x, y)
        .iter()
        .any(|p| p[1..p.len() - 1].iter().all(|v| !s.contains(v)))
}

pub fn is_x_visible_oracle(g: &Graph, dist: &[Vec<usize>], x: usize, s: &[usize]) -> bool {
    !s.contains(&x) && s.iter().all(|&y| sees(g, dist, x, y, s))
}

/// Largest x-visibility set by trying every subset against the path oracle.
pub fn vx_oracle(g: &Graph, x: usize) -> usize {
    let dist = distance_matrix(g);
    let others: Vec<usize> = (0..g.n()).filter(|&v| v != x).collect();
    let mut best = 0;
    for mask in 0u32..1 << others.len() {
        let s: Vec<usize> = (0..others.len())
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| others[i])
            .collect();
        if s.len() > best && is_x_visible_oracle(g, &dist, x, &s) {
            best = s.len();
        }
    }
    best
}

pub fn leaves(g: &Graph) -> Vec<usize> {
    (0..g.n()).filter(|&v| g.degree(v) == 1).collect()
}
