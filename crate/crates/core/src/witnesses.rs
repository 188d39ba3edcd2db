//! Explicit large x-visibility sets in square grids, prisms and toruses.
//!
//! Coordinates are 0-based `(row, col)` with id `row * n + col`; the first
//! factor indexes rows. Each construction picks a root, takes whole axis
//! segments where the geometry allows it, and inside every quadrant around
//! the root takes every other vertex of each diagonal (a class of equal
//! distance from the root), starting from one end of the diagonal.

use std::ops::Range;

use serde::Serialize;

use crate::bitset::VertexSet;
use crate::bounds::square_family_value;
use crate::generators::{cartesian_product, cycle, path, ProductLayout};
use crate::graph::{spanning_view, Graph};
use crate::visibility::is_x_visibility_set_in;
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SquareFamily {
    /// P_n □ P_n
    Grid,
    /// P_n □ C_n
    Prism,
    /// C_n □ C_n
    Torus,
}

impl SquareFamily {
    pub const ALL: [SquareFamily; 3] =
        [SquareFamily::Grid, SquareFamily::Prism, SquareFamily::Torus];

    pub fn name(&self) -> &'static str {
        match self {
            SquareFamily::Grid => "grid",
            SquareFamily::Prism => "prism",
            SquareFamily::Torus => "torus",
        }
    }

    pub fn parse(s: &str) -> Result<SquareFamily> {
        match s {
            "grid" => Ok(SquareFamily::Grid),
            "prism" => Ok(SquareFamily::Prism),
            "torus" => Ok(SquareFamily::Torus),
            _ => Err(Error::InvalidParameter(format!(
                "unknown square family {s:?}"
            ))),
        }
    }

    fn cyclic(&self) -> (bool, bool) {
        match self {
            SquareFamily::Grid => (false, false),
            SquareFamily::Prism => (false, true),
            SquareFamily::Torus => (true, true),
        }
    }
}

/// A square product together with its coordinate system.
#[derive(Clone, Debug)]
pub struct SquareProduct {
    pub family: SquareFamily,
    pub n: usize,
    pub graph: Graph,
    pub layout: ProductLayout,
}

impl SquareProduct {
    pub fn new(family: SquareFamily, n: usize) -> Result<SquareProduct> {
        let (rows_cyclic, cols_cyclic) = family.cyclic();
        let factor = |c: bool| if c { cycle(n) } else { path(n) };
        let graph = cartesian_product(&factor(rows_cyclic)?, &factor(cols_cyclic)?);
        Ok(SquareProduct {
            family,
            n,
            graph,
            layout: ProductLayout {
                n_first: n,
                n_second: n,
            },
        })
    }

    pub fn id(&self, row: usize, col: usize) -> usize {
        self.layout.id(row, col)
    }

    pub fn coords(&self, id: usize) -> (usize, usize) {
        self.layout.coords(id)
    }
}

/// Rectangular coordinate region `rows x cols`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quadrant {
    pub rows: Range<usize>,
    pub cols: Range<usize>,
}

/// Partition of a quadrant into classes of equal distance from `x`, in
/// increasing distance; each class is sorted by row.
pub fn quadrant_diagonals(p: &SquareProduct, x: usize, q: &Quadrant) -> Result<Vec<Vec<usize>>> {
    p.graph.check_vertex(x)?;
    if q.rows.is_empty() || q.cols.is_empty() || q.rows.end > p.n || q.cols.end > p.n {
        return Err(Error::InvalidRegion(format!(
            "{:?} x {:?} is empty or outside a {}x{} product",
            q.rows, q.cols, p.n, p.n
        )));
    }
    let (xr, xc) = p.coords(x);
    if q.rows.contains(&xr) && q.cols.contains(&xc) {
        return Err(Error::InvalidRegion(
            "the quadrant contains the root".into(),
        ));
    }
    let view = spanning_view(&p.graph, x)?;
    let mut classes: Vec<Vec<usize>> = Vec::new();
    let mut by_dist: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
    for r in q.rows.clone() {
        for c in q.cols.clone() {
            let id = p.id(r, c);
            by_dist.entry(view.d(id)).or_default().push(id);
        }
    }
    for (_, ids) in by_dist {
        // ids were pushed row-major, so each class is already sorted by row
        classes.push(ids);
    }
    Ok(classes)
}

/// Which end of each row-sorted diagonal the alternation starts from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Start {
    LowRow,
    HighRow,
}

fn alternate(diagonals: &[Vec<usize>], start: Start, into: &mut VertexSet) {
    for d in diagonals {
        let picks: Box<dyn Iterator<Item = &usize>> = match start {
            Start::LowRow => Box::new(d.iter().step_by(2)),
            Start::HighRow => Box::new(d.iter().rev().step_by(2)),
        };
        for &v in picks {
            into.insert(v);
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct WitnessResult {
    pub family: SquareFamily,
    pub n: usize,
    #[serde(skip)]
    pub graph: Graph,
    /// 0-based id of the root.
    #[serde(skip)]
    pub root: usize,
    /// 1-based `(row, col)` of the root.
    pub root_coords: (usize, usize),
    #[serde(rename = "set")]
    pub set: VertexSet,
    pub claimed_size: usize,
    pub verified: bool,
}

fn finish(p: SquareProduct, root: usize, set: VertexSet) -> Result<WitnessResult> {
    let claimed = square_family_value(p.family, p.n)?;
    let view = spanning_view(&p.graph, root)?;
    let reject = |reason: String| Error::WitnessRejected {
        family: p.family.name().into(),
        n: p.n,
        reason,
    };
    if !is_x_visibility_set_in(&view, &set) {
        return Err(reject("not an x-visibility set".into()));
    }
    if set.len() != claimed {
        return Err(reject(format!(
            "size {} but formula gives {claimed}",
            set.len()
        )));
    }
    let (r, c) = p.coords(root);
    Ok(WitnessResult {
        family: p.family,
        n: p.n,
        root,
        root_coords: (r + 1, c + 1),
        set,
        claimed_size: claimed,
        verified: true,
        graph: p.graph,
    })
}

fn check_n(n: usize) -> Result<()> {
    if n < 4 {
        return Err(Error::InvalidParameter(format!(
            "witnesses need n >= 4, got {n}"
        )));
    }
    Ok(())
}

/// Root at (2, 2) in 1-based coordinates: the whole first column, the first
/// row except the root's column, and alternate diagonal vertices of the
/// quadrant beyond the root.
pub fn grid_witness(n: usize) -> Result<WitnessResult> {
    check_n(n)?;
    let p = SquareProduct::new(SquareFamily::Grid, n)?;
    let root = p.id(1, 1);
    let mut set = VertexSet::new(p.graph.n());
    for r in 0..n {
        set.insert(p.id(r, 0));
    }
    for c in (0..n).filter(|&c| c != 1) {
        set.insert(p.id(0, c));
    }
    let far = Quadrant {
        rows: 2..n,
        cols: 2..n,
    };
    alternate(
        &quadrant_diagonals(&p, root, &far)?,
        Start::LowRow,
        &mut set,
    );
    finish(p, root, set)
}

/// Root at row 2, middle column `ceil(n/2)` (1-based). The first row minus
/// the root's column, alternate diagonal vertices of both quadrants below the
/// root, plus axis vertices depending on `n mod 4`.
pub fn prism_witness(n: usize) -> Result<WitnessResult> {
    check_n(n)?;
    let p = SquareProduct::new(SquareFamily::Prism, n)?;
    let mid = n.div_ceil(2) - 1;
    let root = p.id(1, mid);
    let mut set = VertexSet::new(p.graph.n());
    for c in (0..n).filter(|&c| c != mid) {
        set.insert(p.id(0, c));
    }
    for cols in [mid + 1..n, 0..mid] {
        let q = Quadrant { rows: 2..n, cols };
        alternate(&quadrant_diagonals(&p, root, &q)?, Start::LowRow, &mut set);
    }
    // the root's own column in the first row; for n = 1 mod 4 also the far end
    set.insert(p.id(0, mid));
    if n % 4 == 1 {
        set.insert(p.id(n - 1, mid));
    }
    finish(p, root, set)
}

/// Root at the centre `(ceil(n/2), ceil(n/2))` (1-based). Alternate diagonal
/// vertices of all four quadrants plus residue-dependent axis vertices. The
/// end each diagonal starts from is fixed per quadrant so the axis vertices
/// never shadow a chosen quadrant vertex.
pub fn torus_witness(n: usize) -> Result<WitnessResult> {
    check_n(n)?;
    let p = SquareProduct::new(SquareFamily::Torus, n)?;
    let c = n.div_ceil(2) - 1;
    let root = p.id(c, c);
    let quadrants = [
        Quadrant {
            rows: 0..c,
            cols: 0..c,
        },
        Quadrant {
            rows: 0..c,
            cols: c + 1..n,
        },
        Quadrant {
            rows: c + 1..n,
            cols: c + 1..n,
        },
        Quadrant {
            rows: c + 1..n,
            cols: 0..c,
        },
    ];
    use Start::*;
    let starts = if n % 4 == 2 {
        [LowRow, HighRow, HighRow, LowRow]
    } else {
        [LowRow, LowRow, HighRow, HighRow]
    };
    let mut set = VertexSet::new(p.graph.n());
    for (q, start) in quadrants.iter().zip(starts) {
        alternate(&quadrant_diagonals(&p, root, q)?, start, &mut set);
    }
    let extras: Vec<(usize, usize)> = match n % 4 {
        1 => vec![],
        3 => vec![(c, 0), (c, n - 1)],
        0 => vec![(c, 0)],
        _ => vec![(c, n - 1), (n - 1, c)],
    };
    for (r, col) in extras {
        set.insert(p.id(r, col));
    }
    finish(p, root, set)
}

pub fn witness(family: SquareFamily, n: usize) -> Result<WitnessResult> {
    match family {
        SquareFamily::Grid => grid_witness(n),
        SquareFamily::Prism => prism_witness(n),
        SquareFamily::Torus => torus_witness(n),
    }
}
