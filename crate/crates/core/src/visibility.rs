//! Visibility predicates and the vertex classes the bounds are phrased in.
//!
//! Every predicate reduces to one sweep over the BFS layers of a root: a
//! vertex is *clear* when some shortest path from the root reaches it without
//! touching a blocked vertex. Nothing here enumerates paths.

use crate::bitset::VertexSet;
use crate::graph::{require_connected, spanning_view, Graph, RootView};
use crate::{Error, Result};

/// Vertices outside `blocked` reachable from the root along a shortest path
/// whose vertices all avoid `blocked`. The root itself is always clear.
pub fn clear_reachable_in(view: &RootView, blocked: &VertexSet) -> VertexSet {
    let mut clear = VertexSet::new(blocked.universe());
    clear.insert(view.root());
    for v in view.order().skip(1) {
        if !blocked.contains(v) && view.dag_in(v).iter().any(|&u| clear.contains(u)) {
            clear.insert(v);
        }
    }
    clear
}

/// True iff some predecessor of `y` on a shortest root-`y` path is clear.
#[inline]
pub(crate) fn seen(view: &RootView, clear: &VertexSet, y: usize) -> bool {
    view.dag_in(y).iter().any(|&u| clear.contains(u))
}

fn check_set(g: &Graph, s: &VertexSet) -> Result<()> {
    if s.universe() != g.n() {
        return Err(Error::InvalidParameter(format!(
            "set universe {} does not match graph order {}",
            s.universe(),
            g.n()
        )));
    }
    Ok(())
}

pub fn clear_reachable(g: &Graph, x: usize, s: &VertexSet) -> Result<VertexSet> {
    check_set(g, s)?;
    if s.contains(x) {
        return Err(Error::RootInSet(x));
    }
    let view = spanning_view(g, x)?;
    Ok(clear_reachable_in(&view, s))
}

/// Whether `y` is S-visible from `x`: some shortest x,y-path meets `s` in
/// at most its end vertices.
pub fn is_visible_from(g: &Graph, x: usize, s: &VertexSet, y: usize) -> Result<bool> {
    check_set(g, s)?;
    g.check_vertex(y)?;
    if x == y {
        return Err(Error::InvalidParameter(
            "visibility needs two distinct vertices".into(),
        ));
    }
    let view = spanning_view(g, x)?;
    let mut blocked = s.clone();
    blocked.remove(x);
    let clear = clear_reachable_in(&view, &blocked);
    Ok(seen(&view, &clear, y))
}

/// Checks an x-visibility set against a prepared view of its root.
pub fn is_x_visibility_set_in(view: &RootView, s: &VertexSet) -> bool {
    if s.contains(view.root()) {
        return false;
    }
    let clear = clear_reachable_in(view, s);
    s.iter().all(|y| seen(view, &clear, y))
}

pub fn is_x_visibility_set(g: &Graph, x: usize, s: &VertexSet) -> Result<bool> {
    check_set(g, s)?;
    if s.contains(x) {
        return Err(Error::RootInSet(x));
    }
    let view = spanning_view(g, x)?;
    Ok(is_x_visibility_set_in(&view, s))
}

/// Checks mutual visibility using precomputed views, one per vertex.
pub(crate) fn is_mutual_visibility_set_with(views: &[RootView], s: &VertexSet) -> bool {
    let members = s.to_vec();
    for (i, &u) in members.iter().enumerate() {
        let view = &views[u];
        let mut blocked = s.clone();
        blocked.remove(u);
        let clear = clear_reachable_in(view, &blocked);
        if members[i + 1..].iter().any(|&v| !seen(view, &clear, v)) {
            return false;
        }
    }
    true
}

pub fn is_mutual_visibility_set(g: &Graph, s: &VertexSet) -> Result<bool> {
    check_set(g, s)?;
    require_connected(g)?;
    let views = s
        .iter()
        .map(|u| spanning_view(g, u))
        .collect::<Result<Vec<_>>>()?;
    let members = s.to_vec();
    for (i, &u) in members.iter().enumerate() {
        let view = &views[i];
        let mut blocked = s.clone();
        blocked.remove(u);
        let clear = clear_reachable_in(view, &blocked);
        if members[i + 1..].iter().any(|&v| !seen(view, &clear, v)) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// MD(x): vertices other than the root with no neighbour farther from the
/// root than themselves.
pub fn maximally_distant_in(g: &Graph, view: &RootView) -> VertexSet {
    let mut out = VertexSet::new(g.n());
    for y in (0..g.n()).filter(|&y| y != view.root()) {
        let dy = view.d(y);
        if g.neighbors(y).iter().all(|&z| view.d(z) <= dy) {
            out.insert(y);
        }
    }
    out
}

pub fn maximally_distant(g: &Graph, x: usize) -> Result<VertexSet> {
    let view = spanning_view(g, x)?;
    Ok(maximally_distant_in(g, &view))
}

/// Stress vertices of the root: `y != x` lying on every shortest x,z-path
/// for some maximally distant `z != y`.
pub fn stress_vertices_in(g: &Graph, view: &RootView) -> VertexSet {
    let md = maximally_distant_in(g, view);
    let x = view.root();
    let mut out = VertexSet::new(g.n());
    let mut blocked = VertexSet::new(g.n());
    for y in 0..g.n() {
        if y == x {
            continue;
        }
        blocked.insert(y);
        let clear = clear_reachable_in(view, &blocked);
        // z is cut off exactly when it is neither clear nor y itself
        if md.iter().any(|z| z != y && !clear.contains(z)) {
            out.insert(y);
        }
        blocked.remove(y);
    }
    out
}

pub fn stress_vertices(g: &Graph, x: usize) -> Result<VertexSet> {
    let view = spanning_view(g, x)?;
    Ok(stress_vertices_in(g, &view))
}

pub fn simplicial_vertices(g: &Graph) -> VertexSet {
    let mut out = VertexSet::new(g.n());
    for v in 0..g.n() {
        if g.is_clique(g.neighbors(v)) {
            out.insert(v);
        }
    }
    out
}

pub fn has_universal_vertex(g: &Graph) -> Result<Option<usize>> {
    require_connected(g)?;
    Ok((0..g.n()).find(|&v| g.degree(v) + 1 == g.n()))
}

/// Some edge `uv` whose closed neighbourhoods together cover the graph.
pub fn spanning_double_star(g: &Graph) -> Result<Option<(usize, usize)>> {
    require_connected(g)?;
    let n = g.n();
    let mut cover = VertexSet::new(n);
    for (u, v) in g.edges() {
        cover.insert(u);
        cover.insert(v);
        for &w in g.neighbors(u).iter().chain(g.neighbors(v)) {
            cover.insert(w);
        }
        if cover.len() == n {
            return Ok(Some((u, v)));
        }
        for w in 0..n {
            cover.remove(w);
        }
    }
    Ok(None)
}

pub fn has_spanning_double_star(g: &Graph) -> Result<bool> {
    Ok(spanning_double_star(g)?.is_some())
}
