//! Brute-force ground truth for toy instances.
//!
//! Everything here is implemented directly from definitions — subset
//! enumeration, raw BFS, exhaustive hitting-set search — and deliberately
//! shares no logic with the approximation modules beyond the graph
//! primitives. Hard size guards keep accidental big runs from hiding bugs
//! behind slowness.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::Error;
use crate::flow::{Cap, CapacityMap};
use crate::graph::{Edge, Graph, NodeSet};
use crate::num::{HalfInt, Ratio};
use crate::Result;

fn guard(n: usize, cap: usize, what: &str) -> Result<()> {
    if n > cap {
        Err(Error::OracleGuard(alloc::format!("{what}: n = {n} > {cap}")))
    } else {
        Ok(())
    }
}

/// Exact δ(G) by re-enumerating quadruples from a distance matrix built here.
pub fn brute_delta(g: &Graph) -> Result<HalfInt> {
    let n = g.node_count();
    guard(n, 30, "delta oracle")?;
    let dist: Vec<Vec<u32>> = (0..n as u32).map(|u| g.bfs_distances(u)).collect();
    let mut best = HalfInt::ZERO;
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                for e in c + 1..n {
                    let s1 = dist[a][b] + dist[c][e];
                    let s2 = dist[a][c] + dist[b][e];
                    let s3 = dist[a][e] + dist[b][c];
                    let mut sums = [s1, s2, s3];
                    sums.sort_unstable();
                    let rho = HalfInt::from_halves((sums[2] - sums[1]) as i64);
                    if rho > best {
                        best = rho;
                    }
                }
            }
        }
    }
    Ok(best)
}

/// Exact minimum node expansion over all S with 1 ≤ |S| ≤ ⌊n/2⌋;
/// lexicographically smallest minimizer.
pub fn brute_min_node_expansion(g: &Graph) -> Result<(NodeSet, Ratio)> {
    let n = g.node_count();
    guard(n, 20, "expansion oracle")?;
    let mut best: Option<(NodeSet, Ratio)> = None;
    for mask in 1u32..(1 << n) {
        let size = mask.count_ones() as usize;
        if size > n / 2 {
            continue;
        }
        let s = NodeSet::from_sorted(
            (0..n as u32).filter(|&v| mask & (1 << v) != 0).collect(),
        );
        let h = g.node_expansion(&s)?;
        match &best {
            Some((bs, bh)) if *bh < h || (*bh == h && bs <= &s) => {}
            _ => best = Some((s, h)),
        }
    }
    best.ok_or_else(|| Error::OracleGuard(alloc::string::String::from("no candidate subsets")))
}

/// All distinct cut-edge sets of s-t cuts with at most k cut edges.
pub fn enumerate_size_constrained_cuts(
    g: &Graph,
    s: u32,
    t: u32,
    k: u64,
) -> Result<Vec<Vec<Edge>>> {
    let n = g.node_count();
    guard(n, 16, "cut enumeration oracle")?;
    if s == t {
        return Err(Error::BadParameter(alloc::format!("s = t = {s}")));
    }
    let mut seen: BTreeSet<Vec<Edge>> = BTreeSet::new();
    let others: Vec<u32> = (0..n as u32).filter(|&v| v != s && v != t).collect();
    for mask in 0u32..(1 << others.len()) {
        let mut side = vec![false; n];
        side[s as usize] = true;
        for (bit, &v) in others.iter().enumerate() {
            if mask & (1 << bit) != 0 {
                side[v as usize] = true;
            }
        }
        let cut: Vec<Edge> = g
            .edges()
            .iter()
            .copied()
            .filter(|e| side[e.0 as usize] != side[e.1 as usize])
            .collect();
        if cut.len() as u64 <= k {
            seen.insert(cut);
        }
    }
    Ok(seen.into_iter().collect())
}

/// Exact minimum hitting set over the enumerated size-constrained cuts,
/// by branch and bound on an uncovered cut's edges.
pub fn brute_ehssc(g: &Graph, s: u32, t: u32, k: u64) -> Result<(Vec<Edge>, usize)> {
    guard(g.node_count(), 12, "hitting set oracle")?;
    let cuts = enumerate_size_constrained_cuts(g, s, t, k)?;
    if cuts.len() > 10_000 {
        return Err(Error::OracleGuard(alloc::format!("{} cuts enumerated", cuts.len())));
    }
    let mut best: Option<Vec<Edge>> = None;
    let mut chosen: Vec<Edge> = Vec::new();
    fn search(
        cuts: &[Vec<Edge>],
        chosen: &mut Vec<Edge>,
        best: &mut Option<Vec<Edge>>,
    ) {
        if let Some(b) = best {
            if chosen.len() >= b.len() {
                return;
            }
        }
        let uncovered = cuts.iter().find(|c| !c.iter().any(|e| chosen.contains(e)));
        match uncovered {
            None => {
                let mut sol = chosen.clone();
                sol.sort();
                let replace = match best {
                    None => true,
                    Some(b) => sol.len() < b.len() || (sol.len() == b.len() && sol < *b),
                };
                if replace {
                    *best = Some(sol);
                }
            }
            Some(cut) => {
                for &e in cut {
                    chosen.push(e);
                    search(cuts, chosen, best);
                    chosen.pop();
                }
            }
        }
    }
    search(&cuts, &mut chosen, &mut best);
    let sol = best.expect("empty chosen covers zero cuts");
    let size = sol.len();
    Ok((sol, size))
}

/// Exact min s-t cut value over all node bipartitions, respecting INF
/// capacities (`None` means every cut crosses an INF edge).
pub fn brute_min_cut(g: &Graph, cap: &CapacityMap, s: u32, t: u32) -> Result<Option<u64>> {
    let n = g.node_count();
    guard(n, 12, "min cut oracle")?;
    if s == t {
        return Err(Error::BadParameter(alloc::format!("s = t = {s}")));
    }
    let others: Vec<u32> = (0..n as u32).filter(|&v| v != s && v != t).collect();
    let mut best: Option<u64> = None;
    for mask in 0u32..(1 << others.len()) {
        let mut side = vec![false; n];
        side[s as usize] = true;
        for (bit, &v) in others.iter().enumerate() {
            if mask & (1 << bit) != 0 {
                side[v as usize] = true;
            }
        }
        let mut total: u64 = 0;
        let mut has_inf = false;
        for (idx, e) in g.edges().iter().enumerate() {
            if side[e.0 as usize] != side[e.1 as usize] {
                match cap.get(idx) {
                    Cap::Inf => {
                        has_inf = true;
                        break;
                    }
                    Cap::Finite(c) => total += c,
                }
            }
        }
        if !has_inf {
            best = Some(best.map_or(total, |b| b.min(total)));
        }
    }
    Ok(best)
}

/// All simple s-t paths (guarded), for the direct routing search.
fn all_simple_paths(g: &Graph, s: u32, t: u32, cap: usize) -> Result<Vec<Vec<u32>>> {
    let mut paths = Vec::new();
    let mut stack = vec![s];
    let mut visited = vec![false; g.node_count()];
    visited[s as usize] = true;
    fn dfs(
        g: &Graph,
        t: u32,
        stack: &mut Vec<u32>,
        visited: &mut Vec<bool>,
        paths: &mut Vec<Vec<u32>>,
        cap: usize,
    ) -> Result<()> {
        let u = *stack.last().unwrap();
        if u == t {
            paths.push(stack.clone());
            if paths.len() > cap {
                return Err(Error::OracleGuard(alloc::format!(
                    "more than {cap} simple paths"
                )));
            }
            return Ok(());
        }
        for &v in g.neighbors(u) {
            if !visited[v as usize] {
                visited[v as usize] = true;
                stack.push(v);
                dfs(g, t, stack, visited, paths, cap)?;
                stack.pop();
                visited[v as usize] = false;
            }
        }
        Ok(())
    }
    dfs(g, t, &mut stack, &mut visited, &mut paths, cap)?;
    Ok(paths)
}

/// Exact optimum shared-edge count over every multiset of κ simple s-t
/// paths. Exponential; κ ≤ 3 and tiny graphs only.
pub fn brute_uumv_direct(g: &Graph, s: u32, t: u32, r: u64, kappa: u64) -> Result<usize> {
    guard(g.node_count(), 10, "direct routing oracle")?;
    if kappa > 3 || r < 1 || r >= kappa {
        return Err(Error::BadParameter(alloc::string::String::from(
            "direct oracle needs kappa <= 3 and 0 < r < kappa",
        )));
    }
    let paths = all_simple_paths(g, s, t, 200)?;
    let idx: Vec<usize> = (0..paths.len()).collect();
    let mut best = usize::MAX;
    // multisets of size κ: non-decreasing index tuples
    fn tuples(
        k: u64,
        start: usize,
        idx: &[usize],
        current: &mut Vec<usize>,
        visit: &mut dyn FnMut(&[usize]),
    ) {
        if k == 0 {
            visit(current);
            return;
        }
        for &i in &idx[start..] {
            current.push(i);
            tuples(k - 1, i, idx, current, visit);
            current.pop();
        }
    }
    let mut current = Vec::new();
    tuples(kappa, 0, &idx, &mut current, &mut |combo: &[usize]| {
        let chosen: Vec<Vec<u32>> = combo.iter().map(|&i| paths[i].clone()).collect();
        let (shared, _) = crate::vulnerability::count_shared_edges(&chosen, r);
        best = best.min(shared.len());
    });
    if best == usize::MAX {
        return Err(Error::OracleGuard(alloc::string::String::from("no s-t paths found")));
    }
    Ok(best)
}

/// Routing optimum via the hitting-set reduction: OPT(r, κ) with
/// k = ⌈κ/r⌉ − 1.
pub fn brute_uumv(g: &Graph, s: u32, t: u32, r: u64, kappa: u64) -> Result<usize> {
    if r < 1 || r >= kappa {
        return Err(Error::BadParameter(alloc::format!(
            "need 0 < r < kappa, got r = {r}, kappa = {kappa}"
        )));
    }
    let k = kappa.div_ceil(r) - 1;
    Ok(brute_ehssc(g, s, t, k)?.1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{generate, Family};
    use crate::num::ratio;

    #[test]
    fn min_expansion_examples() {
        let k4 = generate(&Family::Complete(4)).unwrap();
        let (s, h) = brute_min_node_expansion(&k4).unwrap();
        assert_eq!((s, h), (NodeSet::new(vec![0, 1]), ratio(1, 1)));

        let p6 = generate(&Family::Path(6)).unwrap();
        let (s, h) = brute_min_node_expansion(&p6).unwrap();
        assert_eq!((s, h), (NodeSet::new(vec![0, 1, 2]), ratio(1, 3)));

        let c8 = generate(&Family::Cycle(8)).unwrap();
        let (s, h) = brute_min_node_expansion(&c8).unwrap();
        assert_eq!(h, ratio(1, 2));
        assert_eq!(s.len(), 4);
    }

    #[test]
    fn cut_enumeration_examples() {
        let p4 = generate(&Family::Path(4)).unwrap();
        let cuts = enumerate_size_constrained_cuts(&p4, 0, 3, 1).unwrap();
        assert_eq!(
            cuts,
            vec![vec![Edge(0, 1)], vec![Edge(1, 2)], vec![Edge(2, 3)]]
        );

        let c8 = generate(&Family::Cycle(8)).unwrap();
        assert!(enumerate_size_constrained_cuts(&c8, 0, 4, 1).unwrap().is_empty());
        assert!(enumerate_size_constrained_cuts(&p4, 0, 3, 0).unwrap().is_empty());
    }

    #[test]
    fn hitting_set_examples() {
        let p4 = generate(&Family::Path(4)).unwrap();
        assert_eq!(brute_ehssc(&p4, 0, 3, 1).unwrap().1, 3);

        let c8 = generate(&Family::Cycle(8)).unwrap();
        assert_eq!(brute_ehssc(&c8, 0, 4, 2).unwrap().1, 4);
        assert_eq!(brute_ehssc(&c8, 0, 4, 1).unwrap(), (vec![], 0));
    }

    #[test]
    fn routing_examples() {
        let p4 = generate(&Family::Path(4)).unwrap();
        assert_eq!(brute_uumv(&p4, 0, 3, 1, 2).unwrap(), 3);
        assert_eq!(brute_uumv_direct(&p4, 0, 3, 1, 2).unwrap(), 3);

        let c8 = generate(&Family::Cycle(8)).unwrap();
        assert_eq!(brute_uumv(&c8, 0, 4, 1, 2).unwrap(), 0);
        assert_eq!(brute_uumv_direct(&c8, 0, 4, 1, 2).unwrap(), 0);
        assert_eq!(brute_uumv(&c8, 0, 4, 1, 3).unwrap(), 4);
        assert_eq!(brute_uumv_direct(&c8, 0, 4, 1, 3).unwrap(), 4);
    }

    #[test]
    fn min_cut_patterns() {
        let c8 = generate(&Family::Cycle(8)).unwrap();
        let unit = CapacityMap::unit(&c8);
        assert_eq!(brute_min_cut(&c8, &unit, 0, 4).unwrap(), Some(2));
        let mut all_inf = CapacityMap::unit(&c8);
        for i in 0..c8.edge_count() {
            all_inf.set(i, Cap::Inf);
        }
        assert_eq!(brute_min_cut(&c8, &all_inf, 0, 4).unwrap(), None);
    }

    #[test]
    fn guards_fire() {
        let g = generate(&Family::Path(25)).unwrap();
        assert!(matches!(brute_min_node_expansion(&g), Err(Error::OracleGuard(_))));
    }

    #[test]
    fn delta_oracle_matches_examples() {
        for (f, halves) in [
            (Family::Path(6), 0i64),
            (Family::Complete(5), 0),
            (Family::Cycle(6), 2),
            (Family::Cycle(8), 4),
        ] {
            let g = generate(&f).unwrap();
            assert_eq!(brute_delta(&g).unwrap(), HalfInt::from_halves(halves), "{f:?}");
        }
    }
}
