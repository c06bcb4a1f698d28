//! Gromov hyperbolicity via the four-point condition.
//!
//! δ(G) is the maximum over node quadruples of ρ = (L − M)/2, where S ≤ M ≤ L
//! are the three pairing sums of the six pairwise distances. A tree has δ = 0;
//! downstream algorithms always work with the effective δ = max(δ, 1/2).

use alloc::vec::Vec;

use crate::error::Error;
use crate::graph::Graph;
use crate::num::HalfInt;
use crate::Result;

/// Default node-count cap for the exact O(n⁴) scan.
pub const DEFAULT_EXACT_CAP: usize = 400;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HyperbolicityResult {
    /// δ as an exact half-integer.
    pub delta: HalfInt,
    /// Lexicographically smallest quadruple realizing δ; `None` when n < 4.
    pub witness_quadruple: Option<[u32; 4]>,
    /// max(δ, 1/2).
    pub effective_delta: HalfInt,
    /// True for the exact scan, false for the fixed-base 2-approximation.
    pub is_exact: bool,
}

/// ρ of a quadruple given its six pairwise distances, grouped as the three
/// pairing sums' summands: (d12, d34), (d13, d24), (d14, d23).
pub fn rho_of_quadruple(d12: u32, d34: u32, d13: u32, d24: u32, d14: u32, d23: u32) -> HalfInt {
    let mut sums = [d12 + d34, d13 + d24, d14 + d23];
    sums.sort_unstable();
    // (L − M)/2 in halves is exactly L − M
    HalfInt::from_halves((sums[2] - sums[1]) as i64)
}

fn distance_matrix(g: &Graph) -> Vec<Vec<u32>> {
    (0..g.node_count() as u32).map(|u| g.bfs_distances(u)).collect()
}

fn rho_from_matrix(dist: &[Vec<u32>], q: [u32; 4]) -> HalfInt {
    let d = |a: u32, b: u32| dist[a as usize][b as usize];
    let [a, b, c, e] = q;
    rho_of_quadruple(d(a, b), d(c, e), d(a, c), d(b, e), d(a, e), d(b, c))
}

/// Fold a candidate quadruple into the running best, preferring larger ρ and
/// breaking ties toward the lexicographically smaller quadruple. The fold is
/// order-independent, so any partition of the quadruple space reduces to the
/// same answer.
fn reduce_best(best: &mut Option<(HalfInt, [u32; 4])>, rho: HalfInt, q: [u32; 4]) {
    match best {
        None => *best = Some((rho, q)),
        Some((br, bq)) => {
            if rho > *br || (rho == *br && q < *bq) {
                *best = Some((rho, q));
            }
        }
    }
}

/// Exact δ(G) by scanning all quadruples whose smallest node `a` satisfies
/// `a % stride == residue`. The full scan is `(1, 0)`.
fn scan_block(dist: &[Vec<u32>], n: u32, stride: u32, residue: u32) -> Option<(HalfInt, [u32; 4])> {
    let mut best = None;
    let mut a = residue;
    while a < n {
        for b in a + 1..n {
            for c in b + 1..n {
                for e in c + 1..n {
                    let q = [a, b, c, e];
                    reduce_best(&mut best, rho_from_matrix(dist, q), q);
                }
            }
        }
        a += stride;
    }
    best
}

/// Exact δ(G) over all unordered quadruples of distinct nodes.
pub fn delta_exact(g: &Graph) -> Result<HyperbolicityResult> {
    delta_exact_capped(g, DEFAULT_EXACT_CAP)
}

/// Exact scan with an explicit node-count cap override.
pub fn delta_exact_capped(g: &Graph, cap: usize) -> Result<HyperbolicityResult> {
    let n = g.node_count();
    if n > cap {
        return Err(Error::DeltaCapExceeded { n, cap });
    }
    if n < 4 {
        return Ok(HyperbolicityResult {
            delta: HalfInt::ZERO,
            witness_quadruple: None,
            effective_delta: HalfInt::HALF,
            is_exact: true,
        });
    }
    let dist = distance_matrix(g);
    let best = scan_block(&dist, n as u32, 1, 0).expect("n >= 4");
    Ok(HyperbolicityResult {
        delta: best.0,
        witness_quadruple: Some(best.1),
        effective_delta: best.0.effective(),
        is_exact: true,
    })
}

/// Exact scan split into `blocks` independent partitions, reduced
/// deterministically; exists to demonstrate schedule independence.
pub fn delta_exact_blocked(g: &Graph, blocks: u32) -> Result<HyperbolicityResult> {
    let n = g.node_count();
    if n < 4 || blocks <= 1 {
        return delta_exact(g);
    }
    let dist = distance_matrix(g);
    let mut best = None;
    for residue in 0..blocks {
        if let Some((rho, q)) = scan_block(&dist, n as u32, blocks, residue) {
            reduce_best(&mut best, rho, q);
        }
    }
    let best = best.expect("n >= 4");
    Ok(HyperbolicityResult {
        delta: best.0,
        witness_quadruple: Some(best.1),
        effective_delta: best.0.effective(),
        is_exact: true,
    })
}

/// Default δ policy for callers without an explicit override: the exact scan
/// for small graphs, the 2-approximation otherwise.
pub fn default_delta(g: &Graph) -> Result<HyperbolicityResult> {
    if g.node_count() <= 60 {
        delta_exact(g)
    } else {
        Ok(delta_two_approx(g))
    }
}

/// 2-approximation: fix the smaller endpoint of the diameter pair as a base
/// node and maximize ρ over quadruples containing it. The returned value v
/// satisfies v ≤ δ(G) ≤ 2v.
pub fn delta_two_approx(g: &Graph) -> HyperbolicityResult {
    let n = g.node_count() as u32;
    if n < 4 {
        return HyperbolicityResult {
            delta: HalfInt::ZERO,
            witness_quadruple: None,
            effective_delta: HalfInt::HALF,
            is_exact: false,
        };
    }
    let base = g.diameter_pair().0;
    let dist = distance_matrix(g);
    let mut best: Option<(HalfInt, [u32; 4])> = None;
    for b in 0..n {
        if b == base {
            continue;
        }
        for c in b + 1..n {
            if c == base {
                continue;
            }
            for e in c + 1..n {
                if e == base {
                    continue;
                }
                let mut q = [base, b, c, e];
                q.sort_unstable();
                reduce_best(&mut best, rho_from_matrix(&dist, q), q);
            }
        }
    }
    let best = best.expect("n >= 4");
    HyperbolicityResult {
        delta: best.0,
        witness_quadruple: Some(best.1),
        effective_delta: best.0.effective(),
        is_exact: false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{generate, Family};

    #[test]
    fn rho_examples() {
        // K4 quadruple: all distances 1, pairing sums 2,2,2
        assert_eq!(rho_of_quadruple(1, 1, 1, 1, 1, 1), HalfInt::ZERO);
        // C4 quadruple 0,1,2,3: sums 2,2,4
        assert_eq!(rho_of_quadruple(1, 1, 2, 2, 1, 1), HalfInt::ONE);
        // C6 quadruple 0,1,3,4: d01=1,d34=1,d03=3,d14=3,d04=2,d13=2 → sums 2,6,4
        assert_eq!(rho_of_quadruple(1, 1, 3, 3, 2, 2), HalfInt::ONE);
    }

    #[test]
    fn trees_and_complete_graphs_are_zero() {
        for f in [
            Family::Path(6),
            Family::Star(5),
            Family::BalancedTree { arity: 2, depth: 3 },
            Family::Complete(4),
            Family::Complete(7),
        ] {
            let g = generate(&f).unwrap();
            let r = delta_exact(&g).unwrap();
            assert_eq!(r.delta, HalfInt::ZERO, "{f:?}");
            assert_eq!(r.effective_delta, HalfInt::HALF);
        }
    }

    #[test]
    fn cycles() {
        let c4 = generate(&Family::Cycle(4)).unwrap();
        assert_eq!(delta_exact(&c4).unwrap().delta, HalfInt::ONE);
        let c6 = generate(&Family::Cycle(6)).unwrap();
        assert_eq!(delta_exact(&c6).unwrap().delta, HalfInt::ONE);
        // C_{4k} has δ = k for small k
        let c8 = generate(&Family::Cycle(8)).unwrap();
        assert_eq!(delta_exact(&c8).unwrap().delta, HalfInt::from_int(2));
        let c12 = generate(&Family::Cycle(12)).unwrap();
        assert_eq!(delta_exact(&c12).unwrap().delta, HalfInt::from_int(3));
    }

    #[test]
    fn witness_reproduces_delta_and_is_lex_smallest() {
        let c6 = generate(&Family::Cycle(6)).unwrap();
        let r = delta_exact(&c6).unwrap();
        let q = r.witness_quadruple.unwrap();
        let dist: Vec<Vec<u32>> = (0..6).map(|u| c6.bfs_distances(u)).collect();
        assert_eq!(rho_from_matrix(&dist, q), r.delta);
        assert_eq!(q, [0, 1, 2, 4]);
    }

    #[test]
    fn blocked_scan_matches_serial() {
        for f in [Family::Cycle(9), Family::Grid { rows: 3, cols: 4 }, Family::Hypercube(3)] {
            let g = generate(&f).unwrap();
            let serial = delta_exact(&g).unwrap();
            for blocks in [2, 3, 5] {
                assert_eq!(delta_exact_blocked(&g, blocks).unwrap(), serial, "{f:?}");
            }
        }
    }

    #[test]
    fn two_approx_sandwich_on_examples() {
        for f in [
            Family::Path(6),
            Family::Cycle(6),
            Family::Cycle(8),
            Family::Complete(4),
            Family::Grid { rows: 3, cols: 3 },
        ] {
            let g = generate(&f).unwrap();
            let exact = delta_exact(&g).unwrap().delta;
            let approx = delta_two_approx(&g).delta;
            assert!(approx <= exact, "{f:?}");
            assert!(exact.halves() <= 2 * approx.halves() || exact == HalfInt::ZERO, "{f:?}");
        }
    }

    #[test]
    fn cap_is_enforced() {
        let g = generate(&Family::Path(10)).unwrap();
        assert!(matches!(
            delta_exact_capped(&g, 5),
            Err(Error::DeltaCapExceeded { n: 10, cap: 5 })
        ));
    }
}
