//! Deterministic graph families for tests and demos.

use alloc::string::String;
use alloc::vec::Vec;

use crate::error::Error;
use crate::graph::Graph;
use crate::Result;

/// SplitMix64: a tiny, portable, well-specified 64-bit PRNG. Fixed here so
/// seeded instances are bit-identical across platforms and implementations.
#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    /// Bernoulli draw with exact rational probability `num/den`.
    pub fn bernoulli(&mut self, num: u64, den: u64) -> bool {
        let threshold = ((u64::MAX as u128) + 1) * (num as u128) / (den as u128);
        (self.next_u64() as u128) < threshold
    }
}

/// Graph family selector. Node ids are part of each construction and are
/// preserved verbatim (no relabeling).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Family {
    /// Path on `n` nodes 0-1-...-(n-1).
    Path(u32),
    /// Cycle on `n` nodes.
    Cycle(u32),
    /// Complete graph on `n` nodes.
    Complete(u32),
    /// Star with a center (node 0) and `leaves` leaves.
    Star(u32),
    /// Balanced `arity`-ary tree of the given depth (root = node 0).
    BalancedTree { arity: u32, depth: u32 },
    /// rows × cols grid.
    Grid { rows: u32, cols: u32 },
    /// `dim`-dimensional hypercube (ids are bit vectors, edges flip one bit).
    Hypercube(u32),
    /// Theta graph: nodes s=0, t=1 joined by three internally disjoint paths
    /// of the given edge lengths.
    Theta(u32, u32, u32),
    /// (size−1)-regular ring of cliques: `cliques` copies of K_size arranged
    /// in a cycle; each clique drops the edge between its two port nodes and
    /// the ports pick up one bridge edge each, so regularity is preserved.
    RingOfCliques { cliques: u32, size: u32 },
    /// Erdős–Rényi G(n, num/den), largest connected component (nodes
    /// renumbered in ascending original order), seeded.
    ErdosRenyi { n: u32, p_num: u64, p_den: u64, seed: u64 },
    /// Adversarial routing family: `gadgets` parallel 3-hop detours between
    /// s=0 and t=1, each with a diagonal chord that makes the lexicographic
    /// shortest path cross between the two detour lanes.
    CrossedFan { gadgets: u32 },
}

/// Build the requested family deterministically.
pub fn generate(family: &Family) -> Result<Graph> {
    let pairs = edge_list(family)?;
    let n = pairs.iter().map(|&(a, b)| a.max(b)).max().unwrap_or(0) as usize + 1;
    Graph::from_numbered_edges(n, &pairs)
}

fn bad(msg: &str) -> Error {
    Error::BadParameter(String::from(msg))
}

fn edge_list(family: &Family) -> Result<Vec<(u32, u32)>> {
    let mut e: Vec<(u32, u32)> = Vec::new();
    match *family {
        Family::Path(n) => {
            if n < 2 {
                return Err(bad("path requires n >= 2"));
            }
            for i in 0..n - 1 {
                e.push((i, i + 1));
            }
        }
        Family::Cycle(n) => {
            if n < 3 {
                return Err(bad("cycle requires n >= 3"));
            }
            for i in 0..n {
                e.push((i, (i + 1) % n));
            }
        }
        Family::Complete(n) => {
            if n < 2 {
                return Err(bad("complete graph requires n >= 2"));
            }
            for i in 0..n {
                for j in i + 1..n {
                    e.push((i, j));
                }
            }
        }
        Family::Star(leaves) => {
            if leaves < 1 {
                return Err(bad("star requires >= 1 leaf"));
            }
            for i in 1..=leaves {
                e.push((0, i));
            }
        }
        Family::BalancedTree { arity, depth } => {
            if arity < 2 || depth < 1 {
                return Err(bad("balanced tree requires arity >= 2, depth >= 1"));
            }
            // n = (arity^(depth+1) - 1) / (arity - 1)
            let a = arity as u64;
            let mut n: u64 = 0;
            let mut pow: u64 = 1;
            for _ in 0..=depth {
                n += pow;
                pow = pow.checked_mul(a).ok_or_else(|| bad("tree too large"))?;
                if n > 1 << 24 {
                    return Err(bad("tree too large"));
                }
            }
            for v in 1..n as u32 {
                e.push(((v - 1) / arity, v));
            }
        }
        Family::Grid { rows, cols } => {
            if rows < 1 || cols < 1 || (rows as u64) * (cols as u64) < 2 {
                return Err(bad("grid requires at least 2 nodes"));
            }
            let id = |r: u32, c: u32| r * cols + c;
            for r in 0..rows {
                for c in 0..cols {
                    if c + 1 < cols {
                        e.push((id(r, c), id(r, c + 1)));
                    }
                    if r + 1 < rows {
                        e.push((id(r, c), id(r + 1, c)));
                    }
                }
            }
        }
        Family::Hypercube(dim) => {
            if !(1..=20).contains(&dim) {
                return Err(bad("hypercube requires 1 <= dim <= 20"));
            }
            let n = 1u32 << dim;
            for v in 0..n {
                for b in 0..dim {
                    let w = v ^ (1 << b);
                    if v < w {
                        e.push((v, w));
                    }
                }
            }
        }
        Family::Theta(l1, l2, l3) => {
            let lens = [l1, l2, l3];
            if lens.iter().any(|&l| l < 1) {
                return Err(bad("theta path lengths must be >= 1"));
            }
            let mut next: u32 = 2;
            for &len in &lens {
                let mut prev: u32 = 0;
                for step in 1..=len {
                    let node = if step == len {
                        1
                    } else {
                        let v = next;
                        next += 1;
                        v
                    };
                    e.push((prev, node));
                    prev = node;
                }
            }
        }
        Family::RingOfCliques { cliques, size } => {
            if cliques < 3 || size < 4 {
                return Err(bad("ring of cliques requires >= 3 cliques of size >= 4"));
            }
            for c in 0..cliques {
                let base = c * size;
                // ports: base+0 (left, receives the previous bridge) and
                // base+1 (right, sends the next bridge)
                for i in 0..size {
                    for j in i + 1..size {
                        if i == 0 && j == 1 {
                            continue; // port edge replaced by the two bridges
                        }
                        e.push((base + i, base + j));
                    }
                }
                let next_base = ((c + 1) % cliques) * size;
                e.push((base + 1, next_base));
            }
        }
        Family::ErdosRenyi { n, p_num, p_den, seed } => {
            if n < 2 || p_den == 0 || p_num == 0 || p_num > p_den {
                return Err(bad("erdos-renyi requires n >= 2 and 0 < p <= 1"));
            }
            let mut rng = SplitMix64::new(seed);
            let mut all: Vec<(u32, u32)> = Vec::new();
            for i in 0..n {
                for j in i + 1..n {
                    if rng.bernoulli(p_num, p_den) {
                        all.push((i, j));
                    }
                }
            }
            // largest connected component via union-find
            let mut parent: Vec<u32> = (0..n).collect();
            fn find(parent: &mut [u32], mut x: u32) -> u32 {
                while parent[x as usize] != x {
                    parent[x as usize] = parent[parent[x as usize] as usize];
                    x = parent[x as usize];
                }
                x
            }
            for &(a, b) in &all {
                let ra = find(&mut parent, a);
                let rb = find(&mut parent, b);
                if ra != rb {
                    parent[ra as usize] = rb;
                }
            }
            let mut count = alloc::vec![0u32; n as usize];
            for v in 0..n {
                count[find(&mut parent, v) as usize] += 1;
            }
            let best_root = (0..n).max_by_key(|&v| count[v as usize]).unwrap();
            let best_root = find(&mut parent, best_root);
            // renumber component nodes in ascending original order
            let mut new_id = alloc::vec![u32::MAX; n as usize];
            let mut next = 0u32;
            for v in 0..n {
                if find(&mut parent, v) == best_root {
                    new_id[v as usize] = next;
                    next += 1;
                }
            }
            for &(a, b) in &all {
                if find(&mut parent, a) == best_root {
                    e.push((new_id[a as usize], new_id[b as usize]));
                }
            }
            if e.is_empty() {
                return Err(Error::EmptyInput);
            }
        }
        Family::CrossedFan { gadgets } => {
            if gadgets < 1 {
                return Err(bad("crossed fan requires >= 1 gadget"));
            }
            // ids chosen so that, per gadget, the diagonal lane s-a-d-t is the
            // lexicographically first shortest path the canonical-path rule
            // discovers.
            for i in 0..gadgets {
                let a = 2 + 4 * i;
                let d = 3 + 4 * i;
                let b = 4 + 4 * i;
                let c = 5 + 4 * i;
                e.push((0, a));
                e.push((a, b));
                e.push((b, 1));
                e.push((0, c));
                e.push((c, d));
                e.push((d, 1));
                e.push((a, d));
            }
        }
    }
    Ok(e)
}
