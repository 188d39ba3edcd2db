use crate::bitset::VertexSet;
use crate::graph::{require_connected, spanning_view, Graph};
use crate::solvers::{check_cap, Deadline, Method, Settings, SolveResult};
use crate::visibility::{is_mutual_visibility_set_with, is_x_visibility_set_in};
use crate::Result;

/// v_x(G) by checking every subset of `V \ {x}`. Independent of the
/// shortest-path-tree route; meant as an oracle on small graphs.
pub fn vx_brute(g: &Graph, x: usize, settings: &Settings) -> Result<SolveResult> {
    check_cap(g.n(), settings.brute_cap)?;
    let view = spanning_view(g, x)?;
    let deadline = settings.deadline();
    let others: Vec<usize> = (0..g.n()).filter(|&v| v != x).collect();
    let mut best = VertexSet::new(g.n());
    for mask in 0u64..(1u64 << others.len()) {
        if mask % 65536 == 0 {
            deadline.check()?;
        }
        if mask.count_ones() as usize <= best.len() {
            continue;
        }
        let mut s = VertexSet::new(g.n());
        for (i, &v) in others.iter().enumerate() {
            if mask >> i & 1 == 1 {
                s.insert(v);
            }
        }
        if is_x_visibility_set_in(&view, &s) {
            best = s;
        }
    }
    Ok(SolveResult {
        value: best.len(),
        root: x,
        method: Method::Brute,
        witness_set: best,
        tree: None,
    })
}

/// A maximum mutual-visibility set. Mutual visibility is closed under
/// taking subsets, so infeasible partial sets are cut immediately.
pub fn mu_brute(g: &Graph, settings: &Settings) -> Result<VertexSet> {
    check_cap(g.n(), settings.mu_cap)?;
    require_connected(g)?;
    let views = (0..g.n())
        .map(|v| spanning_view(g, v))
        .collect::<Result<Vec<_>>>()?;
    let deadline = settings.deadline();
    let mut best = VertexSet::new(g.n());
    let mut current = VertexSet::new(g.n());
    let mut nodes = 0u64;

    fn grow(
        next: usize,
        n: usize,
        current: &mut VertexSet,
        best: &mut VertexSet,
        views: &[crate::graph::RootView],
        deadline: &Deadline,
        nodes: &mut u64,
    ) -> Result<()> {
        *nodes += 1;
        if (*nodes).is_multiple_of(1024) {
            deadline.check()?;
        }
        if current.len() > best.len() {
            *best = current.clone();
        }
        for v in next..n {
            if current.len() + (n - v) <= best.len() {
                break;
            }
            current.insert(v);
            if is_mutual_visibility_set_with(views, current) {
                grow(v + 1, n, current, best, views, deadline, nodes)?;
            }
            current.remove(v);
        }
        Ok(())
    }

    grow(
        0,
        g.n(),
        &mut current,
        &mut best,
        &views,
        &deadline,
        &mut nodes,
    )?;
    Ok(best)
}

/// A maximum independent set, by branching on the closed neighbourhood of a
/// minimum-degree vertex.
pub fn alpha_brute(g: &Graph, settings: &Settings) -> Result<VertexSet> {
    check_cap(g.n(), settings.alpha_cap.min(64))?;
    let n = g.n();
    let nb: Vec<u64> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u64, |m, &u| m | 1 << u))
        .collect();
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let deadline = settings.deadline();

    struct Ctx<'a> {
        nb: &'a [u64],
        best: u64,
        deadline: &'a Deadline,
        nodes: u64,
    }

    fn go(ctx: &mut Ctx, remaining: u64, chosen: u64) -> Result<()> {
        ctx.nodes += 1;
        if ctx.nodes.is_multiple_of(4096) {
            ctx.deadline.check()?;
        }
        if remaining == 0 {
            if chosen.count_ones() > ctx.best.count_ones() {
                ctx.best = chosen;
            }
            return Ok(());
        }
        if chosen.count_ones() + remaining.count_ones() <= ctx.best.count_ones() {
            return Ok(());
        }
        // some maximum independent set contains v or one of its neighbours
        let mut v = remaining.trailing_zeros() as usize;
        let mut r = remaining;
        while r != 0 {
            let u = r.trailing_zeros() as usize;
            r &= r - 1;
            if (ctx.nb[u] & remaining).count_ones() < (ctx.nb[v] & remaining).count_ones() {
                v = u;
            }
        }
        let mut branch = (ctx.nb[v] & remaining) | 1 << v;
        while branch != 0 {
            let w = branch.trailing_zeros() as usize;
            branch &= branch - 1;
            go(ctx, remaining & !(ctx.nb[w] | 1 << w), chosen | 1 << w)?;
        }
        Ok(())
    }

    let mut ctx = Ctx {
        nb: &nb,
        best: 0,
        deadline: &deadline,
        nodes: 0,
    };
    go(&mut ctx, all, 0)?;
    VertexSet::from_ids(n, (0..n).filter(|&v| ctx.best >> v & 1 == 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{cartesian_product, complete, cycle, path};
    use crate::Error;

    #[test]
    fn vx_brute_examples() {
        let s = Settings::default();
        assert_eq!(vx_brute(&complete(4).unwrap(), 0, &s).unwrap().value, 3);
        assert_eq!(vx_brute(&cycle(6).unwrap(), 0, &s).unwrap().value, 2);
        let r = crate::generators::np_gadget(&path(5).unwrap()).unwrap();
        assert_eq!(vx_brute(&r.gprime, r.apex, &s).unwrap().value, 7);
        let big = cycle(23).unwrap();
        assert_eq!(
            vx_brute(&big, 0, &s).unwrap_err(),
            Error::TooLarge { n: 23, cap: 22 }
        );
    }

    #[test]
    fn mu_examples() {
        let s = Settings::default();
        assert_eq!(mu_brute(&complete(5).unwrap(), &s).unwrap().len(), 5);
        assert_eq!(mu_brute(&path(4).unwrap(), &s).unwrap().len(), 2);
        let k2c6 = cartesian_product(&complete(2).unwrap(), &cycle(6).unwrap());
        assert_eq!(mu_brute(&k2c6, &s).unwrap().len(), 6);
    }

    #[test]
    fn alpha_examples() {
        let s = Settings::default();
        assert_eq!(alpha_brute(&path(5).unwrap(), &s).unwrap().len(), 3);
        assert_eq!(alpha_brute(&complete(4).unwrap(), &s).unwrap().len(), 1);
        assert_eq!(alpha_brute(&cycle(5).unwrap(), &s).unwrap().len(), 2);
        let i = alpha_brute(&cycle(30).unwrap(), &s).unwrap();
        assert_eq!(i.len(), 15);
        assert!(alpha_brute(&cycle(31).unwrap(), &s).is_err());
    }
}
