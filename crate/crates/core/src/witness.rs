//! Nested families of node-expansion witnesses between two distant nodes.
//!
//! The extraction mirrors the constructive argument: a ball sweep around the
//! anchor endpoint, then a sweep of cylinder-removal radii, collecting every
//! candidate set whose expansion (always measured in the original graph)
//! stays under the closed-form bound, and finally the longest strictly
//! nested chain among the collected candidates.

use alloc::vec::Vec;

use crate::bounds::{alpha_sweep_radius, guaranteed_family_size, nested_family_bound};
use crate::error::Error;
use crate::graph::{exact_distance_shell, CanonicalPath, Graph, NodeSet};
use crate::hyperbolicity;
use crate::num::{ratio_to_f64, HalfInt, Ratio};
use crate::Result;

/// Nodes at an exact distance from the middle third of a geodesic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cylinder {
    /// The p′–q′ subpath of the canonical p–q path.
    pub segment: CanonicalPath,
    pub radius: u32,
    pub nodes: NodeSet,
}

/// Construct the cylinder at the given radius around the middle third of the
/// canonical p–q geodesic. Both outer thirds have length ⌊Δ/3⌋; the 0–2 edge
/// remainder is absorbed into the q side.
pub fn cylinder(g: &Graph, p: u32, q: u32, radius: u32) -> Result<Cylinder> {
    if p == q {
        return Err(Error::BadParameter(alloc::format!("p = q = {p}")));
    }
    let path = g.canonical_shortest_path(p, q);
    let delta_cap = path.len() as u32;
    if delta_cap <= 6 {
        return Err(Error::BadParameter(alloc::format!(
            "dist(p,q) = {delta_cap} <= 6, too short for a cylinder"
        )));
    }
    if radius < 1 || 4 * radius >= delta_cap {
        return Err(Error::BadParameter(alloc::format!(
            "cylinder radius {radius} outside [1, Delta/4) with Delta = {delta_cap}"
        )));
    }
    let third = (delta_cap / 3) as usize;
    let segment = CanonicalPath { nodes: path.nodes[third..=2 * third].to_vec() };
    // nodes of the p-q geodesic itself never belong to the cylinder: the
    // construction removes material *around* the geodesic, and on a path
    // graph the cylinder must come out empty
    let shell = exact_distance_shell(g, &segment.nodes, radius);
    let on_path: NodeSet = path.nodes.iter().copied().collect();
    let nodes =
        NodeSet::from_sorted(shell.iter().filter(|&u| !on_path.contains(u)).collect());
    Ok(Cylinder { segment, radius, nodes })
}

/// Parameters a family was extracted with, echoed in reports.
#[derive(Debug, Clone, PartialEq)]
pub struct WitnessParams {
    pub delta_cap: u32,
    pub n: usize,
    pub d: u32,
    pub delta: HalfInt,
    pub delta_is_exact: bool,
    pub mu: Ratio,
    /// Starting radius ⌊αΔ⌋ of the cylinder sweep (0 disables the sweep).
    pub alpha_radius: u32,
}

/// A strictly nested family of expansion witnesses, all containing `anchor`.
#[derive(Debug, Clone, PartialEq)]
pub struct WitnessFamily {
    pub anchor: u32,
    pub subsets: Vec<NodeSet>,
    pub expansions: Vec<Ratio>,
    pub bound: Ratio,
    pub params: WitnessParams,
    /// Guaranteed family size t; `shortfall` is set when fewer qualified.
    pub guaranteed: u32,
    pub shortfall: bool,
}

/// Pick the anchor endpoint: the side whose half-ball at radius ⌊Δ/2⌋ is
/// smaller, ties toward p.
pub fn choose_anchor(g: &Graph, p: u32, q: u32, delta_cap: u32) -> u32 {
    let r = delta_cap / 2;
    if g.ball(q, r).len() < g.ball(p, r).len() {
        q
    } else {
        p
    }
}

/// Extract a nested witness family between p and q.
pub fn nested_witness_family(
    g: &Graph,
    p: u32,
    q: u32,
    mu: &Ratio,
    delta_override: Option<HalfInt>,
    d_override: Option<u32>,
) -> Result<WitnessFamily> {
    if p == q {
        return Err(Error::BadParameter(alloc::format!("p = q = {p}")));
    }
    let n = g.node_count();
    let delta_cap = g.dist(p, q);
    let d = d_override.unwrap_or_else(|| g.max_degree());
    let (delta, delta_is_exact) = match delta_override {
        Some(dl) => (dl.effective(), true),
        None => {
            let r = hyperbolicity::default_delta(g)?;
            (r.effective_delta, r.is_exact)
        }
    };
    let bound = nested_family_bound(delta_cap, n, d, delta, mu)?;
    let muf = ratio_to_f64(mu);
    let (anchor, alpha_radius, chain) = collect_nested(g, p, q, muf, d, &bound);
    let expansions: Vec<Ratio> =
        chain.iter().map(|s| g.node_expansion(s).expect("domain-checked")).collect();
    let guaranteed = guaranteed_family_size(delta_cap, d, mu);
    let shortfall = (chain.len() as u32) < guaranteed;
    Ok(WitnessFamily {
        anchor,
        subsets: chain,
        expansions,
        bound,
        params: WitnessParams {
            delta_cap,
            n,
            d,
            delta,
            delta_is_exact,
            mu: mu.clone(),
            alpha_radius,
        },
        guaranteed,
        shortfall,
    })
}

/// The two candidate sweeps plus chain selection, shared by the plain and
/// the segmented extraction (which differ only in the bound they pass in).
/// Returns (anchor, starting cylinder radius, longest nested chain).
pub(crate) fn collect_nested(
    g: &Graph,
    p: u32,
    q: u32,
    muf: f64,
    d: u32,
    bound: &Ratio,
) -> (u32, u32, Vec<NodeSet>) {
    let n = g.node_count();
    let delta_cap = g.dist(p, q);
    let anchor = choose_anchor(g, p, q, delta_cap);

    let mut candidates: Vec<NodeSet> = Vec::new();
    let mut push_candidate = |s: NodeSet| {
        if s.is_empty() || s.len() > n / 2 || !s.contains(anchor) {
            return;
        }
        if !candidates.contains(&s) {
            candidates.push(s);
        }
    };

    // part I: plain ball sweep around the anchor
    for r in 0..=delta_cap / 2 {
        let s = g.ball(anchor, r);
        if qualifies(g, &s, n, bound) {
            push_candidate(s);
        }
    }

    // part II: cylinder-removal sweep, radius from ⌊αΔ⌋ down to ⌈⌊αΔ⌋/2⌉
    let alpha_radius = alpha_sweep_radius(delta_cap, d, muf);
    if alpha_radius >= 1 && delta_cap > 6 {
        let hi = alpha_radius.min((delta_cap - 1) / 4);
        let lo = alpha_radius.div_ceil(2);
        let mut radius = hi;
        while radius >= lo && radius >= 1 {
            if let Ok(cyl) = cylinder(g, p, q, radius) {
                if !cyl.nodes.is_empty() {
                    if let Ok(sub) = g.remove_nodes(&cyl.nodes) {
                        let other = if anchor == p { q } else { p };
                        let dist = sub.bfs_distances(anchor);
                        let r_max = match dist[other as usize] {
                            Some(t) => t / 2,
                            // disconnected: grow until the ball saturates
                            None => dist.iter().flatten().copied().max().unwrap_or(0),
                        };
                        for r in 0..=r_max {
                            let s = sub.ball(anchor, r);
                            if qualifies(g, &s, n, bound) {
                                push_candidate(s);
                            }
                        }
                    }
                }
            }
            radius -= 1;
        }
    }

    (anchor, alpha_radius, longest_nested_chain(candidates))
}

fn qualifies(g: &Graph, s: &NodeSet, n: usize, bound: &Ratio) -> bool {
    if s.is_empty() || s.len() > n / 2 {
        return false;
    }
    g.node_expansion(s).map(|h| h <= *bound).unwrap_or(false)
}

/// Longest strictly nested chain among the candidate sets, deterministic:
/// candidates are ordered by (size, node list) and the DP prefers the
/// earliest predecessor.
fn longest_nested_chain(mut candidates: Vec<NodeSet>) -> Vec<NodeSet> {
    candidates.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.as_slice().cmp(b.as_slice())));
    candidates.dedup();
    let k = candidates.len();
    if k == 0 {
        return Vec::new();
    }
    let mut best_len = alloc::vec![1usize; k];
    let mut prev = alloc::vec![usize::MAX; k];
    for i in 0..k {
        for j in 0..i {
            if candidates[j].len() < candidates[i].len()
                && candidates[j].is_strict_subset_of(&candidates[i])
                && best_len[j] + 1 > best_len[i]
            {
                best_len[i] = best_len[j] + 1;
                prev[i] = j;
            }
        }
    }
    let mut end = 0;
    for i in 1..k {
        if best_len[i] > best_len[end] {
            end = i;
        }
    }
    let mut chain = Vec::with_capacity(best_len[end]);
    let mut cur = end;
    loop {
        chain.push(candidates[cur].clone());
        if prev[cur] == usize::MAX {
            break;
        }
        cur = prev[cur];
    }
    chain.reverse();
    chain
}

/// Check every structural invariant of a family from scratch; used by tests
/// and the CLI report.
pub fn verify_family(g: &Graph, fam: &WitnessFamily) -> Result<()> {
    let n = g.node_count();
    for (i, s) in fam.subsets.iter().enumerate() {
        if !s.contains(fam.anchor) {
            return Err(Error::InternalInvariant(alloc::format!(
                "subset {i} does not contain the anchor"
            )));
        }
        if s.len() > n / 2 {
            return Err(Error::InternalInvariant(alloc::format!("subset {i} larger than n/2")));
        }
        let h = g.node_expansion(s)?;
        if h != fam.expansions[i] {
            return Err(Error::InternalInvariant(alloc::format!(
                "stored expansion of subset {i} does not recompute"
            )));
        }
        if h > fam.bound {
            return Err(Error::InternalInvariant(alloc::format!(
                "subset {i} exceeds the bound"
            )));
        }
        if i + 1 < fam.subsets.len() && !s.is_strict_subset_of(&fam.subsets[i + 1]) {
            return Err(Error::InternalInvariant(alloc::format!(
                "subsets {i} and {} are not strictly nested",
                i + 1
            )));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{generate, Family};
    use crate::num::ratio;

    fn half() -> Ratio {
        ratio(1, 2)
    }

    #[test]
    fn cylinder_on_path_is_empty() {
        let g = generate(&Family::Path(10)).unwrap();
        let c = cylinder(&g, 0, 9, 1).unwrap();
        assert!(c.nodes.is_empty());
        assert_eq!(c.segment.nodes, vec![3, 4, 5, 6]);
    }

    #[test]
    fn cylinder_radius_beyond_reach_is_empty() {
        // all off-geodesic nodes of C₁₄ sit at distance ≥ 3 from the middle
        // third, so radius 1 reaches nothing
        let g = generate(&Family::Cycle(14)).unwrap();
        let c = cylinder(&g, 0, 7, 1).unwrap();
        assert!(c.nodes.is_empty());
    }

    #[test]
    fn cylinder_domain_errors() {
        let g = generate(&Family::Path(10)).unwrap();
        assert!(cylinder(&g, 0, 5, 1).is_err()); // Δ = 5 ≤ 6
        assert!(cylinder(&g, 0, 9, 3).is_err()); // 4·3 ≥ 9
        assert!(cylinder(&g, 0, 9, 0).is_err());
    }

    #[test]
    fn cylinder_on_grid_is_exact_shell() {
        let g = generate(&Family::Grid { rows: 6, cols: 6 }).unwrap();
        let c = cylinder(&g, 0, 35, 2).unwrap();
        assert!(!c.nodes.is_empty());
        // exact distance 2: disjoint from the radius-1 shell and the segment
        let inner = exact_distance_shell(&g, &c.segment.nodes, 1);
        assert!(c.nodes.is_disjoint_from(&inner));
        for u in c.nodes.iter() {
            let d = c
                .segment
                .nodes
                .iter()
                .map(|&v| g.dist(u, v))
                .min()
                .unwrap();
            assert_eq!(d, 2);
        }
    }

    #[test]
    fn path100_family_contains_quarter_witness() {
        let g = generate(&Family::Path(100)).unwrap();
        let fam =
            nested_witness_family(&g, 0, 99, &half(), Some(HalfInt::HALF), Some(2)).unwrap();
        verify_family(&g, &fam).unwrap();
        assert_eq!(fam.guaranteed, 1);
        assert!(!fam.shortfall);
        // some member has h = 1/4 or better
        assert!(fam.expansions.iter().any(|h| *h <= ratio(1, 4)));
        assert!(fam.subsets.iter().all(|s| s.contains(fam.anchor)));
    }

    #[test]
    fn cycle64_family_is_nested_arcs() {
        let g = generate(&Family::Cycle(64)).unwrap();
        let fam = nested_witness_family(&g, 0, 32, &half(), Some(HalfInt::from_int(16)), Some(2))
            .unwrap();
        verify_family(&g, &fam).unwrap();
        assert!(fam.subsets.len() >= 2);
        // arcs: boundary is always 2 nodes
        for (s, h) in fam.subsets.iter().zip(&fam.expansions) {
            assert_eq!(*h, ratio(2, s.len() as i64));
        }
    }

    #[test]
    fn ball_equality_under_cylinder_removal() {
        // for r ≤ ⌊Δ/3⌋ − radius the anchor ball ignores the cylinder
        let g = generate(&Family::Grid { rows: 6, cols: 6 }).unwrap();
        let c = cylinder(&g, 0, 35, 2).unwrap();
        let sub = g.remove_nodes(&c.nodes).unwrap();
        let limit = 10 / 3 - 2; // ⌊Δ/3⌋ − radius with Δ = 10
        for r in 0..=limit {
            assert_eq!(sub.ball(0, r), g.ball(0, r), "r = {r}");
        }
    }

    #[test]
    fn removal_never_shrinks_distance() {
        let g = generate(&Family::Grid { rows: 5, cols: 5 }).unwrap();
        let c = cylinder(&g, 0, 24, 1).unwrap();
        if !c.nodes.is_empty() {
            let sub = g.remove_nodes(&c.nodes).unwrap();
            if let Some(d) = sub.dist(0, 24) {
                assert!(d >= g.dist(0, 24));
            }
        }
    }

    #[test]
    fn rejects_equal_endpoints() {
        let g = generate(&Family::Path(10)).unwrap();
        assert!(nested_witness_family(&g, 3, 3, &half(), None, None).is_err());
    }
}
