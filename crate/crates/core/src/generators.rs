//! Graph families, the Cartesian product, the independent-set gadget and a
//! few seeded random constructions used by the test corpora.

use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::Rng;
use serde::Serialize;

use crate::graph::{is_connected, Graph};
use crate::{Error, Result};

/// A named graph family with its parameters.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum FamilySpec {
    Path {
        n: usize,
    },
    Cycle {
        n: usize,
    },
    Complete {
        n: usize,
    },
    /// K_{1,k}: a centre joined to `k` leaves.
    Star {
        k: usize,
    },
    DoubleStar {
        a: usize,
        b: usize,
    },
    /// K_{k x 2}: complete k-partite graph with parts of size two.
    Cocktail {
        k: usize,
    },
    /// P_n □ P_n
    Grid {
        n: usize,
    },
    /// P_n □ C_n
    Prism {
        n: usize,
    },
    /// C_n □ C_n
    Torus {
        n: usize,
    },
    /// K_m □ K_n
    CompleteProduct {
        m: usize,
        n: usize,
    },
    Figure1 {
        copies: usize,
    },
}

impl FamilySpec {
    pub fn validate(&self) -> Result<()> {
        use FamilySpec::*;
        let bad = |msg: &str| Err(Error::InvalidParameter(format!("{self}: {msg}")));
        match *self {
            Path { n } | Complete { n } | Grid { n } if n == 0 => bad("need n >= 1"),
            Cycle { n } if n < 3 => bad("a cycle needs n >= 3"),
            Prism { n } | Torus { n } if n < 3 => bad("the cycle factor needs n >= 3"),
            Star { k: 0 } => bad("need k >= 1"),
            DoubleStar { a, b } if a == 0 || b == 0 => bad("need a, b >= 1"),
            Cocktail { k } if k < 2 => bad("need k >= 2"),
            CompleteProduct { m, n } if m == 0 || n == 0 => bad("need m, n >= 1"),
            Figure1 { copies: 0 } => bad("need copies >= 1"),
            _ => Ok(()),
        }
    }

    pub fn name(&self) -> &'static str {
        use FamilySpec::*;
        match self {
            Path { .. } => "path",
            Cycle { .. } => "cycle",
            Complete { .. } => "complete",
            Star { .. } => "star",
            DoubleStar { .. } => "double_star",
            Cocktail { .. } => "cocktail",
            Grid { .. } => "grid",
            Prism { .. } => "prism",
            Torus { .. } => "torus",
            CompleteProduct { .. } => "kxk",
            Figure1 { .. } => "figure1",
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use FamilySpec::*;
        let name = self.name();
        match *self {
            Path { n } | Cycle { n } | Complete { n } | Grid { n } | Prism { n } | Torus { n } => {
                write!(f, "{name}:{n}")
            }
            Star { k } | Cocktail { k } => write!(f, "{name}:{k}"),
            DoubleStar { a, b } => write!(f, "{name}:{a},{b}"),
            CompleteProduct { m, n } => write!(f, "{name}:{m},{n}"),
            Figure1 { copies } => write!(f, "{name}:{copies}"),
        }
    }
}

impl FromStr for FamilySpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidParameter(format!("cannot parse family spec {s:?}"));
        let (name, args) = s.split_once(':').ok_or_else(bad)?;
        let nums: Vec<usize> = args
            .split(',')
            .map(|a| a.trim().parse::<usize>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|_| bad())?;
        let one = || match nums[..] {
            [a] => Ok(a),
            _ => Err(bad()),
        };
        let two = || match nums[..] {
            [a, b] => Ok((a, b)),
            _ => Err(bad()),
        };
        let spec = match name.trim() {
            "path" => FamilySpec::Path { n: one()? },
            "cycle" => FamilySpec::Cycle { n: one()? },
            "complete" => FamilySpec::Complete { n: one()? },
            "star" => FamilySpec::Star { k: one()? },
            "double_star" => {
                let (a, b) = two()?;
                FamilySpec::DoubleStar { a, b }
            }
            "cocktail" => FamilySpec::Cocktail { k: one()? },
            "grid" => FamilySpec::Grid { n: one()? },
            "prism" => FamilySpec::Prism { n: one()? },
            "torus" => FamilySpec::Torus { n: one()? },
            "kxk" => {
                let (m, n) = two()?;
                FamilySpec::CompleteProduct { m, n }
            }
            "figure1" => FamilySpec::Figure1 { copies: one()? },
            _ => return Err(bad()),
        };
        spec.validate()?;
        Ok(spec)
    }
}

pub fn path(n: usize) -> Result<Graph> {
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::new(n, &edges)
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!(
            "cycle needs n >= 3, got {n}"
        )));
    }
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::new(n, &edges)
}

pub fn complete(n: usize) -> Result<Graph> {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            edges.push((u, v));
        }
    }
    Graph::new(n, &edges)
}

/// Star with centre 0.
pub fn star(k: usize) -> Result<Graph> {
    let edges: Vec<_> = (1..=k).map(|v| (0, v)).collect();
    Graph::new(k + 1, &edges)
}

/// Centres 0 and 1; leaves `2..2+a` hang on 0, the next `b` on 1.
pub fn double_star(a: usize, b: usize) -> Result<Graph> {
    let mut edges = vec![(0, 1)];
    edges.extend((0..a).map(|i| (0, 2 + i)));
    edges.extend((0..b).map(|i| (1, 2 + a + i)));
    Graph::new(a + b + 2, &edges)
}

/// Parts are `{2i, 2i+1}`.
pub fn cocktail(k: usize) -> Result<Graph> {
    let n = 2 * k;
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if u / 2 != v / 2 {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, &edges)
}

pub fn generate(spec: &FamilySpec) -> Result<Graph> {
    spec.validate()?;
    use FamilySpec::*;
    match *spec {
        Path { n } => path(n),
        Cycle { n } => cycle(n),
        Complete { n } => complete(n),
        Star { k } => star(k),
        DoubleStar { a, b } => double_star(a, b),
        Cocktail { k } => cocktail(k),
        Grid { n } => Ok(cartesian_product(&path(n)?, &path(n)?)),
        Prism { n } => Ok(cartesian_product(&path(n)?, &cycle(n)?)),
        Torus { n } => Ok(cartesian_product(&cycle(n)?, &cycle(n)?)),
        CompleteProduct { m, n } => Ok(cartesian_product(&complete(m)?, &complete(n)?)),
        Figure1 { copies } => Ok(figure1(copies)?.graph),
    }
}

/// Index arithmetic for `G □ H`: vertex `(g, h)` has id `g * n(H) + h`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ProductLayout {
    pub n_first: usize,
    pub n_second: usize,
}

impl ProductLayout {
    #[inline]
    pub fn id(&self, g: usize, h: usize) -> usize {
        g * self.n_second + h
    }

    #[inline]
    pub fn coords(&self, id: usize) -> (usize, usize) {
        (id / self.n_second, id % self.n_second)
    }

    /// Vertices of the G-layer G^h.
    pub fn first_layer(&self, h: usize) -> Vec<usize> {
        (0..self.n_first).map(|g| self.id(g, h)).collect()
    }

    /// Vertices of the H-layer ^gH.
    pub fn second_layer(&self, g: usize) -> Vec<usize> {
        (0..self.n_second).map(|h| self.id(g, h)).collect()
    }
}

pub fn cartesian_product(g: &Graph, h: &Graph) -> Graph {
    let layout = ProductLayout {
        n_first: g.n(),
        n_second: h.n(),
    };
    let mut edges = Vec::with_capacity(g.m() * h.n() + h.m() * g.n());
    for a in 0..g.n() {
        for b in 0..h.n() {
            let id = layout.id(a, b);
            for &a2 in g.neighbors(a) {
                if a2 > a {
                    edges.push((id, layout.id(a2, b)));
                }
            }
            for &b2 in h.neighbors(b) {
                if b2 > b {
                    edges.push((id, layout.id(a, b2)));
                }
            }
        }
    }
    Graph::new(g.n() * h.n(), &edges).expect("product of simple graphs is simple")
}

/// The graph G' of the independent-set reduction together with its labelling.
#[derive(Clone, Debug)]
pub struct ReductionResult {
    pub gprime: Graph,
    /// The vertex universal over the original vertices.
    pub apex: usize,
    /// `original_map[v]` is the id of `v` inside G'.
    pub original_map: Vec<usize>,
    /// Edge `(u, v)` of G (with `u < v`) and the id of its edge vertex.
    pub edge_vertex_map: Vec<((usize, usize), usize)>,
    /// m(G); `v_apex(G') >= k_offset + t` iff `alpha(G) >= t`.
    pub k_offset: usize,
}

/// Builds G' from G: the original graph, an apex adjacent to every original
/// vertex, one vertex per edge adjacent to the edge's endpoints, and a clique
/// on the edge vertices.
///
/// Layout: original ids unchanged, apex `n`, edge vertices `n + 1 ..` in
/// lexicographic edge order.
pub fn np_gadget(g: &Graph) -> Result<ReductionResult> {
    if let Some(v) = (0..g.n()).find(|&v| g.degree(v) == 0) {
        return Err(Error::IsolatedVertex(v));
    }
    let n = g.n();
    let apex = n;
    let original: Vec<(usize, usize)> = g.edges().collect();
    let mut edges = original.clone();
    edges.extend((0..n).map(|v| (v, apex)));
    let mut edge_vertex_map = Vec::with_capacity(original.len());
    for (i, &(u, v)) in original.iter().enumerate() {
        let ev = n + 1 + i;
        edges.push((u, ev));
        edges.push((v, ev));
        edge_vertex_map.push(((u, v), ev));
    }
    for i in 0..original.len() {
        for j in i + 1..original.len() {
            edges.push((n + 1 + i, n + 1 + j));
        }
    }
    let gprime = Graph::new(n + 1 + original.len(), &edges)?;
    Ok(ReductionResult {
        gprime,
        apex,
        original_map: (0..n).collect(),
        edge_vertex_map,
        k_offset: original.len(),
    })
}

/// 1-based edge list of the 16-vertex base graph; vertex 16 is the shared
/// vertex `x`.
const FIGURE1_EDGES: [(usize, usize); 17] = [
    (5, 1),
    (5, 2),
    (5, 3),
    (7, 4),
    (7, 5),
    (7, 6),
    (13, 9),
    (13, 10),
    (13, 11),
    (15, 12),
    (15, 13),
    (15, 14),
    (16, 7),
    (16, 8),
    (16, 15),
    (8, 2),
    (8, 10),
];

/// Labelled vertices of one copy of the base graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Figure1Copy {
    pub y: usize,
    pub z: usize,
    pub a: usize,
    pub b: usize,
    pub c: usize,
}

#[derive(Clone, Debug)]
pub struct Figure1 {
    pub graph: Graph,
    pub x: usize,
    pub copies: Vec<Figure1Copy>,
}

/// `copies` disjoint copies of the base graph glued at `x`.
///
/// Copy `j` maps base vertex `i` (1-based, `i <= 15`) to `15 j + i - 1`;
/// the shared vertex is `15 * copies`, so one copy reproduces the base
/// labelling exactly.
pub fn figure1(copies: usize) -> Result<Figure1> {
    if copies == 0 {
        return Err(Error::InvalidParameter(
            "figure1 needs at least one copy".into(),
        ));
    }
    let x = 15 * copies;
    let map = |j: usize, i: usize| if i == 16 { x } else { 15 * j + i - 1 };
    let mut edges = Vec::with_capacity(17 * copies);
    let mut labels = Vec::with_capacity(copies);
    for j in 0..copies {
        edges.extend(FIGURE1_EDGES.iter().map(|&(u, v)| (map(j, u), map(j, v))));
        labels.push(Figure1Copy {
            y: map(j, 7),
            z: map(j, 15),
            a: map(j, 5),
            b: map(j, 2),
            c: map(j, 8),
        });
    }
    Ok(Figure1 {
        graph: Graph::new(x + 1, &edges)?,
        x,
        copies: labels,
    })
}

/// G(n, p), resampled until connected.
pub fn random_connected<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> Result<Graph> {
    if !(0.0..=1.0).contains(&p) || n == 0 {
        return Err(Error::InvalidParameter(format!(
            "random_connected({n}, {p})"
        )));
    }
    if n > 1 && p == 0.0 {
        return Err(Error::InvalidParameter(
            "p = 0 never yields a connected graph".into(),
        ));
    }
    loop {
        let g = gnp(n, p, rng);
        if is_connected(&g) {
            return Ok(g);
        }
    }
}

/// G(n, p) resampled until no vertex is isolated.
pub fn random_without_isolated<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> Result<Graph> {
    if n < 2 || !(0.0..=1.0).contains(&p) || p == 0.0 {
        return Err(Error::InvalidParameter(format!(
            "random_without_isolated({n}, {p})"
        )));
    }
    loop {
        let g = gnp(n, p, rng);
        if (0..n).all(|v| g.degree(v) > 0) {
            return Ok(g);
        }
    }
}

fn gnp<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, &edges).expect("gnp edges are simple")
}

/// Uniform random recursive tree: vertex `i` attaches to a uniform earlier vertex.
pub fn random_tree<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Result<Graph> {
    let edges: Vec<_> = (1..n).map(|i| (rng.gen_range(0..i), i)).collect();
    Graph::new(n, &edges)
}

/// Block graph built by repeatedly gluing a clique of size `2..=max_clique`
/// onto a random existing vertex, until at least `min_n` vertices exist.
pub fn random_block_graph<R: Rng + ?Sized>(
    min_n: usize,
    max_clique: usize,
    rng: &mut R,
) -> Result<Graph> {
    if min_n < 1 || max_clique < 2 {
        return Err(Error::InvalidParameter(
            "random_block_graph needs min_n >= 1, max_clique >= 2".into(),
        ));
    }
    let mut n = 1;
    let mut edges = Vec::new();
    while n < min_n {
        let size = rng.gen_range(2..=max_clique);
        let cut = rng.gen_range(0..n);
        let mut members = vec![cut];
        members.extend(n..n + size - 1);
        n += size - 1;
        for (i, &u) in members.iter().enumerate() {
            for &v in &members[i + 1..] {
                edges.push((u, v));
            }
        }
    }
    // shuffle labels so cut vertices are not always low ids
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    let edges: Vec<_> = edges.into_iter().map(|(u, v)| (perm[u], perm[v])).collect();
    Graph::new(n, &edges)
}

/// Every connected labelled graph on `n` vertices, by edge-subset mask over
/// the pairs of K_n in lexicographic order.
pub fn connected_labeled_graphs(n: usize) -> Vec<Graph> {
    assert!((1..=6).contains(&n), "exhaustive enumeration is for n <= 6");
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    let mut out = Vec::new();
    for mask in 0u32..(1 << pairs.len()) {
        let edges: Vec<_> = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        let g = Graph::new(n, &edges).expect("subset of K_n");
        if is_connected(&g) {
            out.push(g);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{bfs_root_view, is_block_graph};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn family_examples() {
        let c = generate(&FamilySpec::Cocktail { k: 3 }).unwrap();
        assert_eq!(c.n(), 6);
        assert!((0..6).all(|v| c.degree(v) == 4));
        let g = generate(&FamilySpec::Grid { n: 4 }).unwrap();
        assert_eq!((g.n(), g.m()), (16, 24));
        let t = generate(&FamilySpec::Torus { n: 5 }).unwrap();
        assert_eq!((t.n(), t.m()), (25, 50));
        assert!((0..25).all(|v| t.degree(v) == 4));
    }

    #[test]
    fn spec_strings_round_trip() {
        for s in [
            "path:7",
            "cycle:6",
            "grid:5",
            "prism:6",
            "torus:8",
            "cocktail:4",
            "kxk:3,2",
            "double_star:3,4",
            "figure1:2",
            "complete:5",
            "star:4",
        ] {
            let spec: FamilySpec = s.parse().unwrap();
            assert_eq!(spec.to_string(), s);
        }
        for bad in [
            "cycle:2",
            "cocktail:1",
            "path",
            "grid:x",
            "double_star:0,2",
            "kxk:3",
            "blob:3",
        ] {
            assert!(bad.parse::<FamilySpec>().is_err(), "{bad}");
        }
    }

    #[test]
    fn small_products() {
        let k2 = complete(2).unwrap();
        let c4 = cartesian_product(&k2, &k2);
        assert_eq!((c4.n(), c4.m()), (4, 4));
        assert!((0..4).all(|v| c4.degree(v) == 2));
        let p23 = cartesian_product(&path(2).unwrap(), &path(3).unwrap());
        assert_eq!((p23.n(), p23.m()), (6, 7));
        let prism = cartesian_product(&complete(3).unwrap(), &k2);
        assert_eq!((prism.n(), prism.m()), (6, 9));
    }

    #[test]
    fn product_layers() {
        let layout = ProductLayout {
            n_first: 3,
            n_second: 4,
        };
        assert_eq!(layout.first_layer(1), vec![1, 5, 9]);
        assert_eq!(layout.second_layer(2), vec![8, 9, 10, 11]);
        assert_eq!(layout.coords(layout.id(2, 3)), (2, 3));
    }

    #[test]
    fn product_commutes_under_index_swap() {
        let g = cycle(5).unwrap();
        let h = star(3).unwrap();
        let gh = cartesian_product(&g, &h);
        let hg = cartesian_product(&h, &g);
        let swap = |id: usize| (id % h.n()) * g.n() + id / h.n();
        for (u, v) in gh.edges() {
            assert!(hg.has_edge(swap(u), swap(v)));
        }
        assert_eq!(gh.m(), hg.m());
    }

    #[test]
    fn grid_is_path_product() {
        let p = path(5).unwrap();
        assert_eq!(
            generate(&FamilySpec::Grid { n: 5 }).unwrap(),
            cartesian_product(&p, &p)
        );
    }

    #[test]
    fn gadget_examples() {
        let r = np_gadget(&path(5).unwrap()).unwrap();
        assert_eq!((r.gprime.n(), r.gprime.m()), (10, 23));
        assert_eq!(r.k_offset, 4);
        assert_eq!(r.gprime.neighbors(r.apex), &[0, 1, 2, 3, 4]);

        let r = np_gadget(&complete(2).unwrap()).unwrap();
        assert_eq!((r.gprime.n(), r.gprime.m()), (4, 5));

        let r = np_gadget(&cycle(3).unwrap()).unwrap();
        assert_eq!(r.gprime.n(), 7);
        let ev: Vec<usize> = r.edge_vertex_map.iter().map(|&(_, v)| v).collect();
        assert!(r.gprime.is_clique(&ev));
        for &((u, v), e) in &r.edge_vertex_map {
            let mut expect: Vec<usize> = ev.iter().copied().filter(|&w| w != e).collect();
            expect.extend([u, v]);
            expect.sort_unstable();
            assert_eq!(r.gprime.neighbors(e), &expect[..]);
        }

        let isolated = Graph::new(3, &[(0, 1)]).unwrap();
        assert_eq!(np_gadget(&isolated).unwrap_err(), Error::IsolatedVertex(2));
    }

    #[test]
    fn figure1_shape() {
        let f = figure1(1).unwrap();
        assert_eq!((f.graph.n(), f.graph.m()), (16, 17));
        assert_eq!(f.x, 15);
        assert_eq!(f.graph.degree(f.x), 3);
        assert_eq!(
            f.copies[0],
            Figure1Copy {
                y: 6,
                z: 14,
                a: 4,
                b: 1,
                c: 7
            }
        );
        let f2 = figure1(2).unwrap();
        assert_eq!((f2.graph.n(), f2.graph.m()), (31, 34));
        for k in 2..5 {
            let f = figure1(k).unwrap();
            let hubs: Vec<_> = (0..f.graph.n())
                .filter(|&v| f.graph.degree(v) == 3 * k)
                .collect();
            assert_eq!(hubs, vec![f.x]);
        }
        assert!(figure1(0).is_err());
    }

    #[test]
    fn gadget_diameter_two() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..20 {
            let n = rng.gen_range(2..8);
            let g = random_without_isolated(n, 0.4, &mut rng).unwrap();
            let r = np_gadget(&g).unwrap();
            let diam = (0..r.gprime.n())
                .map(|v| bfs_root_view(&r.gprime, v).unwrap().ecc())
                .max()
                .unwrap();
            assert_eq!(diam, 2);
        }
    }

    #[test]
    fn random_block_graphs_are_block_graphs() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..30 {
            let g = random_block_graph(10, 4, &mut rng).unwrap();
            assert!(g.n() >= 10);
            assert!(is_block_graph(&g).unwrap());
        }
        let t = random_tree(12, &mut rng).unwrap();
        assert_eq!(t.m(), 11);
        assert!(is_connected(&t));
    }

    #[test]
    fn enumeration_counts() {
        // connected labelled graphs: 1, 1, 4, 38, 728
        let counts: Vec<_> = (1..=5).map(|n| connected_labeled_graphs(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 4, 38, 728]);
    }
}
