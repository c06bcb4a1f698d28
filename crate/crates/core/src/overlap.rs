//! Limited-overlap witness families along a segmented geodesic.
//!
//! The p–q geodesic is split into τ segments; each segment gets its own
//! nested family (with Δ/τ standing in for Δ in the bound and count
//! formulas); families are grouped by segment-index parity and by which end
//! of their segment they anchored, and the largest of the four groups is
//! returned. Within that group any two subsets from different families are
//! disjoint or each keeps ≥ ⌊Δ/(2τ)⌋ private nodes.

use alloc::vec::Vec;

use crate::bounds::{guaranteed_family_size, segment_family_bound, validate_tau, TauCheck};
use crate::error::Error;
use crate::graph::{Graph, NodeSet};
use crate::hyperbolicity;
use crate::num::{ratio_to_f64, HalfInt, Ratio};
use crate::witness::{collect_nested, WitnessFamily, WitnessParams};
use crate::Result;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Handedness {
    /// The family anchored at the left segment endpoint p_i.
    Left,
    /// The family anchored at the right segment endpoint p_{i+1}.
    Right,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
}

/// One segment's family plus its position metadata.
#[derive(Debug, Clone, PartialEq)]
pub struct SegmentFamily {
    /// 1-based segment index i (segment from p_i to p_{i+1}).
    pub index: u32,
    pub handedness: Handedness,
    pub family: WitnessFamily,
}

#[derive(Debug, Clone, PartialEq)]
pub struct OverlapFamilySet {
    pub families: Vec<SegmentFamily>,
    pub delta_cap: u32,
    pub tau: u32,
    pub mu: Ratio,
    pub delta: HalfInt,
    pub d: u32,
    /// p_1 … p_{τ+1} on the canonical p–q path.
    pub segment_anchors: Vec<u32>,
    pub group: (Parity, Handedness),
    pub tau_check: TauCheck,
    /// Set when some per-segment extraction fell short of its guaranteed
    /// count or when τ was forced past its validity checks.
    pub shortfall: bool,
}

/// The pairwise acceptance test: disjoint, or both sides keep ≥ ⌊Δ/(2τ)⌋
/// private nodes.
pub fn verify_limited_overlap(a: &NodeSet, b: &NodeSet, delta_cap: u32, tau: u32) -> bool {
    if a.is_disjoint_from(b) {
        return true;
    }
    let need = (delta_cap / (2 * tau)) as usize;
    a.difference_len(b) >= need && b.difference_len(a) >= need
}

/// Check the limited-overlap property across every pair of subsets drawn
/// from different families of the set.
pub fn verify_all_pairs(set: &OverlapFamilySet) -> bool {
    for (i, fi) in set.families.iter().enumerate() {
        for fj in &set.families[i + 1..] {
            for a in &fi.family.subsets {
                for b in &fj.family.subsets {
                    if !verify_limited_overlap(a, b, set.delta_cap, set.tau) {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// Build the limited-overlap family set. `force` skips τ-validity rejection
/// (the result is then shortfall-flagged).
#[allow(clippy::too_many_arguments)]
pub fn overlap_families(
    g: &Graph,
    p: u32,
    q: u32,
    tau: u32,
    mu: &Ratio,
    delta_override: Option<HalfInt>,
    d_override: Option<u32>,
    force: bool,
) -> Result<OverlapFamilySet> {
    if p == q {
        return Err(Error::BadParameter(alloc::format!("p = q = {p}")));
    }
    let n = g.node_count();
    let delta_cap = g.dist(p, q);
    if delta_cap <= 8 {
        return Err(Error::BadParameter(alloc::format!(
            "dist(p,q) = {delta_cap} <= 8"
        )));
    }
    if tau < 1 || tau > delta_cap {
        return Err(Error::BadParameter(alloc::format!(
            "tau = {tau} outside [1, dist(p,q)]"
        )));
    }
    let d = d_override.unwrap_or_else(|| g.max_degree());
    let (delta, delta_is_exact) = match delta_override {
        Some(dl) => (dl.effective(), true),
        None => {
            let r = hyperbolicity::default_delta(g)?;
            (r.effective_delta, r.is_exact)
        }
    };
    let tau_check = validate_tau(delta_cap, tau, delta, d, mu)?;
    if !tau_check.is_valid() && !force {
        return Err(Error::BadParameter(alloc::format!(
            "tau = {tau} fails validity: {}",
            tau_check.failure().unwrap_or("unknown")
        )));
    }

    let path = g.canonical_shortest_path(p, q);
    let stride = delta_cap / tau;
    let mut anchors: Vec<u32> = (0..tau).map(|i| path.nodes[(i * stride) as usize]).collect();
    anchors.push(q);

    let bound = segment_family_bound(delta_cap, tau, n, d, delta, mu)?;
    let guaranteed = guaranteed_family_size(stride.max(1), d, mu);
    let muf = ratio_to_f64(mu);

    let mut all: Vec<SegmentFamily> = Vec::with_capacity(tau as usize);
    let mut shortfall = !tau_check.is_valid();
    for i in 0..tau as usize {
        let (a, b) = (anchors[i], anchors[i + 1]);
        let (anchor, alpha_radius, chain) = collect_nested(g, a, b, muf, d, &bound);
        let expansions: Vec<Ratio> =
            chain.iter().map(|s| g.node_expansion(s).expect("domain-checked")).collect();
        let fam_shortfall = (chain.len() as u32) < guaranteed;
        shortfall |= fam_shortfall;
        let family = WitnessFamily {
            anchor,
            subsets: chain,
            expansions,
            bound: bound.clone(),
            params: WitnessParams {
                delta_cap: g.dist(a, b),
                n,
                d,
                delta,
                delta_is_exact,
                mu: mu.clone(),
                alpha_radius,
            },
            guaranteed,
            shortfall: fam_shortfall,
        };
        all.push(SegmentFamily {
            index: (i + 1) as u32,
            handedness: if anchor == a { Handedness::Left } else { Handedness::Right },
            family,
        });
    }

    // four groups by (index parity, handedness); largest wins, ties in the
    // fixed preference order below
    let group_order = [
        (Parity::Even, Handedness::Left),
        (Parity::Even, Handedness::Right),
        (Parity::Odd, Handedness::Left),
        (Parity::Odd, Handedness::Right),
    ];
    let parity_of =
        |idx: u32| if idx.is_multiple_of(2) { Parity::Even } else { Parity::Odd };
    let mut best = group_order[0];
    let mut best_count = 0usize;
    for &gk in &group_order {
        let count = all
            .iter()
            .filter(|f| parity_of(f.index) == gk.0 && f.handedness == gk.1)
            .count();
        if count > best_count {
            best = gk;
            best_count = count;
        }
    }
    let families: Vec<SegmentFamily> = all
        .into_iter()
        .filter(|f| parity_of(f.index) == best.0 && f.handedness == best.1)
        .collect();

    Ok(OverlapFamilySet {
        families,
        delta_cap,
        tau,
        mu: mu.clone(),
        delta,
        d,
        segment_anchors: anchors,
        group: best,
        tau_check,
        shortfall,
    })
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
    fn limited_overlap_predicate() {
        let a = NodeSet::new(alloc::vec![0, 1, 2, 3]);
        let b = NodeSet::new(alloc::vec![10, 11]);
        assert!(verify_limited_overlap(&a, &b, 100, 4)); // disjoint
        let c = NodeSet::new(alloc::vec![0, 1]);
        // c ⊂ a: no private nodes on c's side
        assert!(!verify_limited_overlap(&c, &a, 100, 4));
        // exactly ⌊Δ/(2τ)⌋ = 2 private nodes each
        let d = NodeSet::new(alloc::vec![2, 3, 20, 21]);
        assert!(verify_limited_overlap(&a, &d, 16, 4));
        assert!(!verify_limited_overlap(&a, &d, 24, 4)); // needs 3 each
    }

    #[test]
    fn tau_one_single_family() {
        let g = generate(&Family::Path(40)).unwrap();
        let set =
            overlap_families(&g, 0, 39, 1, &half(), Some(HalfInt::HALF), Some(2), true).unwrap();
        assert_eq!(set.families.len(), 1);
        assert!(verify_all_pairs(&set));
    }

    #[test]
    fn path200_tau4_groups() {
        let g = generate(&Family::Path(200)).unwrap();
        let set =
            overlap_families(&g, 0, 199, 4, &half(), Some(HalfInt::HALF), Some(2), true).unwrap();
        assert!(!set.families.is_empty()); // ⌊4/4⌋
        assert!(verify_all_pairs(&set));
        // anchors every ⌊199/4⌋ = 49 steps
        assert_eq!(set.segment_anchors, alloc::vec![0, 49, 98, 147, 199]);
    }

    #[test]
    fn path200_tau8_cross_pairs() {
        let g = generate(&Family::Path(200)).unwrap();
        let set =
            overlap_families(&g, 0, 199, 8, &half(), Some(HalfInt::HALF), Some(2), true).unwrap();
        assert!(set.families.len() >= 2);
        assert!(verify_all_pairs(&set));
    }

    #[test]
    fn tree_segments() {
        let g = generate(&Family::BalancedTree { arity: 2, depth: 7 }).unwrap();
        let (p, q, dd) = g.diameter_pair();
        assert!(dd > 8);
        let set =
            overlap_families(&g, p, q, 2, &half(), Some(HalfInt::HALF), Some(3), true).unwrap();
        assert!(verify_all_pairs(&set));
    }

    #[test]
    fn invalid_tau_rejected_without_force() {
        let g = generate(&Family::Path(40)).unwrap();
        let err =
            overlap_families(&g, 0, 39, 16, &half(), Some(HalfInt::HALF), Some(2), false);
        assert!(matches!(err, Err(Error::BadParameter(_))));
    }

    #[test]
    fn short_distance_rejected() {
        let g = generate(&Family::Path(8)).unwrap();
        assert!(
            overlap_families(&g, 0, 7, 1, &half(), Some(HalfInt::HALF), Some(2), true).is_err()
        );
    }
}
