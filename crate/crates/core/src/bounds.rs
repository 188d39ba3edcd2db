//! Closed forms and bounds for v_x and vv, gathered into a report.

use serde::{Serialize, Serializer};

use crate::generators::FamilySpec;
use crate::graph::{is_block_graph, require_connected, spanning_view, Graph};
use crate::solvers::{mu_brute, vv_exact, vx_exact, Settings};
use crate::visibility::{
    has_universal_vertex, maximally_distant_in, simplicial_vertices, spanning_double_star,
    stress_vertices_in,
};
use crate::witnesses::SquareFamily;
use crate::{Error, Result};

/// Where vv sits relative to its two largest possible values.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Extremal {
    /// vv = n - 1
    Top,
    /// vv = n - 2
    Second,
    Other,
}

/// vv = n - 1 exactly when some vertex is universal, and vv = n - 2 exactly
/// when there is none but some double star spans the graph.
pub fn characterize_extremal(g: &Graph) -> Result<Extremal> {
    if g.n() < 2 {
        return Err(Error::InvalidParameter("need at least two vertices".into()));
    }
    if has_universal_vertex(g)?.is_some() {
        Ok(Extremal::Top)
    } else if spanning_double_star(g)?.is_some() {
        Ok(Extremal::Second)
    } else {
        Ok(Extremal::Other)
    }
}

/// Formula value of vv for the square grid, prism and torus, `n >= 4`.
pub fn square_family_value(family: SquareFamily, n: usize) -> Result<usize> {
    if n < 4 {
        return Err(Error::InvalidParameter(format!(
            "{} formula needs n >= 4, got {n}",
            family.name()
        )));
    }
    let sq = n * n;
    Ok(match family {
        SquareFamily::Grid => (sq + n - 2) / 2,
        SquareFamily::Prism => match n % 4 {
            1 => (sq + 3) / 2,
            3 => (sq + n - 2) / 2,
            0 => (2 * sq + n) / 4,
            _ => (2 * sq + n - 2) / 4,
        },
        SquareFamily::Torus => match n % 4 {
            1 => (sq - 1) / 2,
            3 => (sq + 3) / 2,
            _ => (sq + 2) / 2,
        },
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClosedForm {
    pub value: usize,
    /// False when the formula is only known to be attained by a
    /// construction, not to be the maximum.
    pub exact: bool,
    pub note: Option<String>,
}

const CART_NOTE: &str = "K_m □ K_n (m >= n) is also quoted as mn - m; the product bounds meet at \
     mn - n and exact solves agree, so mn - n is reported";

const EVEN_TORUS_NOTE: &str = "for even n >= 6 the torus formula (n^2 + 2) / 2 is attained by the \
     construction but is not the maximum: exact solves give (n^2 + n - 2) / 2 for n = 6..16";

/// vv of a named family from its formula.
pub fn closed_form(spec: &FamilySpec) -> Result<ClosedForm> {
    spec.validate()?;
    let plain = |value| {
        Ok(ClosedForm {
            value,
            exact: true,
            note: None,
        })
    };
    let too_small = || Err(Error::InvalidParameter(format!("{spec}: vv needs n >= 2")));
    match *spec {
        FamilySpec::Path { n } | FamilySpec::Complete { n } if n < 2 => too_small(),
        FamilySpec::Path { n } => plain(if n == 2 { 1 } else { 2 }),
        FamilySpec::Cycle { .. } => plain(2),
        FamilySpec::Complete { n } => plain(n - 1),
        FamilySpec::Star { k } => plain(k),
        FamilySpec::DoubleStar { a, b } => plain(a + b),
        FamilySpec::Cocktail { k } => plain(2 * k - 2),
        FamilySpec::Grid { n } => plain(square_family_value(SquareFamily::Grid, n)?),
        FamilySpec::Prism { n } => plain(square_family_value(SquareFamily::Prism, n)?),
        FamilySpec::Torus { n } if n % 2 == 0 && n >= 6 => Ok(ClosedForm {
            value: square_family_value(SquareFamily::Torus, n)?,
            exact: false,
            note: Some(EVEN_TORUS_NOTE.to_string()),
        }),
        FamilySpec::Torus { n } => plain(square_family_value(SquareFamily::Torus, n)?),
        FamilySpec::CompleteProduct { m, n } => {
            let (big, small) = (m.max(n), m.min(n));
            if big * small < 2 {
                return too_small();
            }
            Ok(ClosedForm {
                value: big * small - small,
                exact: true,
                note: (small >= 2).then(|| CART_NOTE.to_string()),
            })
        }
        FamilySpec::Figure1 { .. } => Err(Error::UnsupportedFamily(spec.to_string())),
    }
}

/// `(lower, upper)` for vv(G □ H) from degrees and orders, with the factors
/// ordered so that the first is the larger.
pub fn cartesian_bounds(g: &Graph, h: &Graph) -> Result<(usize, usize)> {
    require_connected(g)?;
    require_connected(h)?;
    let (g, h) = if g.n() >= h.n() { (g, h) } else { (h, g) };
    let lower = (g.max_degree() * h.n()).max(h.max_degree() * g.n());
    let upper = (g.n() - 1) * h.n();
    Ok((lower, upper))
}

/// vv of a non-complete block graph: its number of simplicial vertices.
pub fn block_graph_value(g: &Graph) -> Result<usize> {
    if !is_block_graph(g)? {
        return Err(Error::NotBlockGraph);
    }
    if g.is_complete() {
        return Err(Error::CompleteGraph);
    }
    Ok(simplicial_vertices(g).len())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundKind {
    Lower,
    Upper,
    Exact,
}

/// One report line. Names starting with `vv.` bound vv(G); names starting
/// with `vx.` bound v_x(G) at the requested root.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundEntry {
    pub name: &'static str,
    pub kind: BoundKind,
    pub value: usize,
    pub applicable: bool,
    pub provenance: &'static str,
}

impl BoundEntry {
    pub fn target(&self) -> &'static str {
        if self.name.starts_with("vx.") {
            "vx"
        } else {
            "vv"
        }
    }

    /// Whether `value` is compatible with this entry (always true when not applicable).
    pub fn admits(&self, value: usize) -> bool {
        !self.applicable
            || match self.kind {
                BoundKind::Lower => self.value <= value,
                BoundKind::Upper => value <= self.value,
                BoundKind::Exact => value == self.value,
            }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct GraphSummary {
    pub n: usize,
    pub m: usize,
    pub delta: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ExactValue {
    pub value: usize,
    /// 0-based; written 1-based.
    pub root: usize,
}

impl Serialize for ExactValue {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("ExactValue", 2)?;
        st.serialize_field("value", &self.value)?;
        st.serialize_field("root", &(self.root + 1))?;
        st.end()
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct BoundsReport {
    pub graph: GraphSummary,
    pub bounds: Vec<BoundEntry>,
    /// vv(G) and the smallest root attaining it, when solved.
    pub exact: Option<ExactValue>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mu: Option<usize>,
    pub notes: Vec<String>,
}

impl BoundsReport {
    pub fn entry(&self, name: &str) -> Option<&BoundEntry> {
        self.bounds.iter().find(|b| b.name == name)
    }

    /// Entries that contradict each other or the exact value, if any.
    pub fn violations(&self) -> Vec<String> {
        let mut out = Vec::new();
        for target in ["vv", "vx"] {
            let live: Vec<&BoundEntry> = self
                .bounds
                .iter()
                .filter(|b| b.applicable && b.target() == target)
                .collect();
            for a in &live {
                for b in &live {
                    let clash = match (a.kind, b.kind) {
                        (BoundKind::Lower, BoundKind::Upper) => a.value > b.value,
                        (BoundKind::Exact, _) => !b.admits(a.value),
                        _ => false,
                    };
                    if clash {
                        out.push(format!(
                            "{} = {} conflicts with {} = {}",
                            a.name, a.value, b.name, b.value
                        ));
                    }
                }
            }
        }
        if let Some(e) = self.exact {
            for b in self.bounds.iter().filter(|b| b.target() == "vv") {
                if !b.admits(e.value) {
                    out.push(format!(
                        "{} = {} excludes vv = {}",
                        b.name, b.value, e.value
                    ));
                }
            }
        }
        out
    }
}

#[derive(Clone, Debug, Default)]
pub struct BoundsOptions {
    /// 0-based root for the per-root entries.
    pub root: Option<usize>,
    pub compute_mu: bool,
    /// Solve vv (and v_x at `root`) exactly.
    pub compute_exact: bool,
}

/// All bounds that apply to `g`, in a fixed order.
pub fn bounds_report(g: &Graph, opts: &BoundsOptions, settings: &Settings) -> Result<BoundsReport> {
    require_connected(g)?;
    let n = g.n();
    if n < 2 {
        return Err(Error::InvalidParameter(
            "bounds need at least two vertices".into(),
        ));
    }
    if let Some(x) = opts.root {
        g.check_vertex(x)?;
    }
    let delta = g.max_degree();
    let universal = has_universal_vertex(g)?.is_some();
    let mut bounds = Vec::new();
    let mut notes = Vec::new();
    let mut push = |name, kind, value, applicable, provenance| {
        bounds.push(BoundEntry {
            name,
            kind,
            value,
            applicable,
            provenance,
        })
    };

    push(
        "vv.max_degree",
        BoundKind::Lower,
        delta,
        true,
        "the neighbours of a maximum-degree vertex are visible from it",
    );
    let mu = if opts.compute_mu {
        Some(mu_brute(g, settings)?.len())
    } else {
        None
    };
    push(
        "vv.mu_minus_one",
        BoundKind::Lower,
        mu.map_or(0, |m| m.saturating_sub(1)),
        mu.is_some(),
        "a mutual-visibility set minus one member is visible from that member",
    );
    push(
        "vv.order",
        BoundKind::Upper,
        n - 1,
        true,
        "the root itself is never counted",
    );
    push(
        "vv.order_degree",
        BoundKind::Upper,
        (n * delta - 1) / (delta + 1),
        !universal,
        "no universal vertex: every root has a non-neighbour, bounded through the maximum degree",
    );
    match characterize_extremal(g)? {
        Extremal::Top => push(
            "vv.extremal",
            BoundKind::Exact,
            n - 1,
            true,
            "a universal vertex sees every other vertex",
        ),
        Extremal::Second => push(
            "vv.extremal",
            BoundKind::Exact,
            n - 2,
            true,
            "no universal vertex, and a double star spans the graph",
        ),
        Extremal::Other => push(
            "vv.extremal",
            BoundKind::Upper,
            n - 3,
            true,
            "no universal vertex and no spanning double star",
        ),
    }
    let block = is_block_graph(g)? && !g.is_complete();
    push(
        "vv.simplicial",
        BoundKind::Exact,
        if block {
            simplicial_vertices(g).len()
        } else {
            0
        },
        block,
        "non-complete block graph: vv counts simplicial vertices",
    );

    if let Some(x) = opts.root {
        let view = spanning_view(g, x)?;
        let ecc = view.ecc();
        push(
            "vx.maximally_distant",
            BoundKind::Lower,
            maximally_distant_in(g, &view).len(),
            true,
            "maximally distant vertices from the root form a root-visibility set",
        );
        push(
            "vx.stress",
            BoundKind::Upper,
            n - stress_vertices_in(g, &view).len() - 1,
            true,
            "stress vertices shadow a maximally distant vertex and never join a maximum set",
        );
        push(
            "vx.ecc_lower",
            BoundKind::Lower,
            (n - 1).div_ceil(ecc),
            true,
            "some distance layer holds at least (n - 1) / ecc vertices",
        );
        push(
            "vx.ecc_upper",
            BoundKind::Upper,
            n - ecc,
            true,
            "a geodesic to a farthest vertex keeps ecc - 1 inner vertices out",
        );
    }

    let mut exact = None;
    if opts.compute_exact {
        let vv = vv_exact(g, settings)?;
        exact = Some(ExactValue {
            value: vv.value,
            root: vv.argmax,
        });
        if let Some(x) = opts.root {
            push(
                "vx.exact",
                BoundKind::Exact,
                vx_exact(g, x, settings)?.value,
                true,
                "minimum internal-vertex set of a shortest-path tree",
            );
        }
    }

    let lower = bounds
        .iter()
        .filter(|b| b.applicable && b.target() == "vv" && b.kind != BoundKind::Upper)
        .map(|b| b.value)
        .max();
    let upper = bounds
        .iter()
        .filter(|b| b.applicable && b.target() == "vv" && b.kind != BoundKind::Lower)
        .map(|b| b.value)
        .min();
    if let (Some(l), Some(u)) = (lower, upper) {
        if l == u {
            notes.push(format!("bounds meet: vv = {l}"));
        }
    }
    if let Some(m) = mu {
        notes.push(format!("mu = {m}"));
    }
    Ok(BoundsReport {
        graph: GraphSummary { n, m: g.m(), delta },
        bounds,
        exact,
        mu,
        notes,
    })
}

/// The report for a named family, with its closed form as an extra entry.
pub fn family_bounds_report(
    spec: &FamilySpec,
    g: &Graph,
    opts: &BoundsOptions,
    settings: &Settings,
) -> Result<BoundsReport> {
    let mut report = bounds_report(g, opts, settings)?;
    match closed_form(spec) {
        Ok(cf) => {
            report.bounds.push(BoundEntry {
                name: "vv.closed_form",
                kind: if cf.exact {
                    BoundKind::Exact
                } else {
                    BoundKind::Lower
                },
                value: cf.value,
                applicable: true,
                provenance: "family formula",
            });
            report.notes.extend(cf.note);
        }
        Err(Error::UnsupportedFamily(_)) => {}
        Err(e) => return Err(e),
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{cocktail, complete, cycle, generate, path, star};

    fn opts(root: Option<usize>) -> BoundsOptions {
        BoundsOptions {
            root,
            ..Default::default()
        }
    }

    #[test]
    fn cocktail_bounds_meet() {
        for k in 2..6 {
            let r =
                bounds_report(&cocktail(k).unwrap(), &opts(None), &Settings::default()).unwrap();
            assert_eq!(r.entry("vv.max_degree").unwrap().value, 2 * k - 2);
            let od = r.entry("vv.order_degree").unwrap();
            assert!(od.applicable);
            assert_eq!(od.value, 2 * k - 2);
            assert!(r
                .notes
                .contains(&format!("bounds meet: vv = {}", 2 * k - 2)));
        }
    }

    #[test]
    fn star_centre_ecc() {
        let r = bounds_report(&star(5).unwrap(), &opts(Some(0)), &Settings::default()).unwrap();
        assert_eq!(r.entry("vx.ecc_lower").unwrap().value, 5);
        assert_eq!(r.entry("vx.ecc_upper").unwrap().value, 5);
        assert!(!r.entry("vv.order_degree").unwrap().applicable);
    }

    #[test]
    fn path_root_md_and_stress() {
        let r = bounds_report(&path(4).unwrap(), &opts(Some(1)), &Settings::default()).unwrap();
        assert_eq!(r.entry("vx.maximally_distant").unwrap().value, 2);
        assert_eq!(r.entry("vx.stress").unwrap().value, 2);
    }

    #[test]
    fn exact_and_mu_fill_in() {
        let o = BoundsOptions {
            root: Some(1),
            compute_mu: true,
            compute_exact: true,
        };
        let r = bounds_report(&path(4).unwrap(), &o, &Settings::default()).unwrap();
        assert_eq!(r.exact, Some(ExactValue { value: 2, root: 1 }));
        assert_eq!(r.entry("vx.exact").unwrap().value, 2);
        assert!(r.entry("vv.mu_minus_one").unwrap().applicable);
        assert!(r.violations().is_empty());
    }

    #[test]
    fn extremal_examples() {
        assert_eq!(
            characterize_extremal(&complete(5).unwrap()).unwrap(),
            Extremal::Top
        );
        assert_eq!(
            characterize_extremal(&path(4).unwrap()).unwrap(),
            Extremal::Second
        );
        assert_eq!(
            characterize_extremal(&cycle(6).unwrap()).unwrap(),
            Extremal::Other
        );
    }

    #[test]
    fn closed_forms() {
        let v = |s: &str| closed_form(&s.parse().unwrap()).unwrap().value;
        assert_eq!(v("grid:5"), 14);
        assert_eq!(v("prism:5"), 14);
        assert_eq!(v("torus:5"), 12);
        assert_eq!(v("prism:6"), 19);
        assert_eq!(v("torus:6"), 19);
        assert!(!closed_form(&"torus:6".parse().unwrap()).unwrap().exact);
        assert!(closed_form(&"torus:7".parse().unwrap()).unwrap().exact);
        assert_eq!(v("cycle:9"), 2);
        assert_eq!(v("complete:6"), 5);
        let cart = closed_form(&"kxk:3,2".parse().unwrap()).unwrap();
        assert_eq!(cart.value, 4);
        assert!(cart.note.is_some());
        assert!(matches!(
            closed_form(&"figure1:1".parse().unwrap()),
            Err(Error::UnsupportedFamily(_))
        ));
        assert!(matches!(
            closed_form(&"grid:3".parse().unwrap()),
            Err(Error::InvalidParameter(_))
        ));
    }

    #[test]
    fn cartesian_pairs() {
        let k3 = complete(3).unwrap();
        let k2 = complete(2).unwrap();
        assert_eq!(cartesian_bounds(&k3, &k2).unwrap(), (4, 4));
        assert_eq!(cartesian_bounds(&k2, &k3).unwrap(), (4, 4));
        let p4 = path(4).unwrap();
        assert_eq!(cartesian_bounds(&p4, &p4).unwrap(), (8, 12));
        let c6 = cycle(6).unwrap();
        assert_eq!(cartesian_bounds(&c6, &c6).unwrap(), (12, 30));
    }

    #[test]
    fn block_values() {
        let bowtie = Graph::new(5, &[(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)]).unwrap();
        assert_eq!(block_graph_value(&bowtie).unwrap(), 4);
        assert_eq!(block_graph_value(&path(5).unwrap()).unwrap(), 2);
        assert_eq!(
            block_graph_value(&complete(4).unwrap()),
            Err(Error::CompleteGraph)
        );
        assert_eq!(
            block_graph_value(&cycle(5).unwrap()),
            Err(Error::NotBlockGraph)
        );
    }

    #[test]
    fn family_report_carries_note() {
        let spec: FamilySpec = "kxk:3,2".parse().unwrap();
        let g = generate(&spec).unwrap();
        let r = family_bounds_report(&spec, &g, &BoundsOptions::default(), &Settings::default())
            .unwrap();
        assert_eq!(r.entry("vv.closed_form").unwrap().value, 4);
        assert!(r.notes.iter().any(|n| n.contains("mn - m")));
    }

    #[test]
    fn disconnected_rejected() {
        let g = Graph::new(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(
            bounds_report(&g, &BoundsOptions::default(), &Settings::default()).unwrap_err(),
            Error::Disconnected
        );
    }
}
