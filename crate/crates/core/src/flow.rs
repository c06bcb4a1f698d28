//! Integral max-flow / min-cut with symbolic infinite capacities.
//!
//! Undirected edges carry a single signed flow value oriented from the
//! smaller to the larger endpoint; the two directions share the capacity.
//! INF is a symbolic marker, never a large number: an INF edge has infinite
//! residual in both directions and can never appear in a reported min cut.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::Error;
use crate::graph::{Edge, Graph, NodeSet};
use crate::Result;

/// Capacity of one undirected edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Cap {
    Finite(u64),
    Inf,
}

/// Per-edge capacities, indexed in the graph's sorted edge order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CapacityMap {
    caps: Vec<Cap>,
}

impl CapacityMap {
    pub fn unit(g: &Graph) -> Self {
        Self::uniform(g, 1)
    }

    pub fn uniform(g: &Graph, r: u64) -> Self {
        CapacityMap { caps: vec![Cap::Finite(r); g.edge_count()] }
    }

    pub fn get(&self, edge_idx: usize) -> Cap {
        self.caps[edge_idx]
    }

    pub fn set(&mut self, edge_idx: usize, cap: Cap) {
        self.caps[edge_idx] = cap;
    }

    pub fn len(&self) -> usize {
        self.caps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.caps.is_empty()
    }
}

/// Flow value, possibly unbounded (an s-t path of INF edges).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FlowValue {
    Finite(u64),
    Infinite,
}

impl FlowValue {
    pub fn at_least(&self, v: u64) -> bool {
        match self {
            FlowValue::Finite(f) => *f >= v,
            FlowValue::Infinite => true,
        }
    }

    pub fn finite(&self) -> Option<u64> {
        match self {
            FlowValue::Finite(f) => Some(*f),
            FlowValue::Infinite => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlowResult {
    pub value: FlowValue,
    /// Signed flow per edge, oriented from the smaller to the larger endpoint.
    pub flows: Vec<i64>,
    /// Residual-reachable side of s at termination.
    pub source_side: NodeSet,
    /// Finite edges crossing the source side; a minimum cut when `limited`
    /// is false and the value is finite.
    pub cut_edges: Vec<Edge>,
    /// True if the value reached the caller's limit; the reported cut is then
    /// not necessarily minimal.
    pub limited: bool,
}

enum Residual {
    Fin(u64),
    Inf,
}

fn residual(cap: Cap, flow: i64, tail: u32, e: Edge) -> Residual {
    match cap {
        Cap::Inf => Residual::Inf,
        Cap::Finite(c) => {
            let r = if tail == e.0 { c as i64 - flow } else { c as i64 + flow };
            Residual::Fin(r as u64)
        }
    }
}

/// Edmonds-Karp with deterministic tie-breaks: shortest augmenting path,
/// neighbors scanned in ascending id order. `limit` stops augmentation once
/// the value reaches it (used by callers that only need to compare the max
/// flow against a threshold, and by the path-decomposition caller that wants
/// a flow of exactly κ).
pub fn max_flow(
    g: &Graph,
    cap: &CapacityMap,
    s: u32,
    t: u32,
    limit: Option<u64>,
) -> Result<FlowResult> {
    if s == t {
        return Err(Error::BadParameter(alloc::format!("s = t = {s}")));
    }
    let n = g.node_count();
    // incidence lists sorted by neighbor id for BFS determinism
    let mut inc: Vec<Vec<(usize, u32)>> = vec![Vec::new(); n];
    for (idx, &e) in g.edges().iter().enumerate() {
        inc[e.0 as usize].push((idx, e.1));
        inc[e.1 as usize].push((idx, e.0));
    }
    for list in &mut inc {
        list.sort_unstable_by_key(|&(_, other)| other);
    }

    let mut flows: Vec<i64> = vec![0; g.edge_count()];
    let mut value: u64 = 0;
    let mut infinite = false;
    let mut limited = false;

    loop {
        if let Some(l) = limit {
            if value >= l {
                limited = true;
                break;
            }
        }
        // BFS in the residual graph
        let mut parent: Vec<Option<(u32, usize)>> = vec![None; n];
        let mut seen = vec![false; n];
        seen[s as usize] = true;
        let mut queue = VecDeque::new();
        queue.push_back(s);
        'bfs: while let Some(u) = queue.pop_front() {
            for &(idx, v) in &inc[u as usize] {
                if seen[v as usize] {
                    continue;
                }
                let has_residual = match residual(cap.get(idx), flows[idx], u, g.edges()[idx]) {
                    Residual::Inf => true,
                    Residual::Fin(r) => r > 0,
                };
                if has_residual {
                    seen[v as usize] = true;
                    parent[v as usize] = Some((u, idx));
                    if v == t {
                        break 'bfs;
                    }
                    queue.push_back(v);
                }
            }
        }
        if parent[t as usize].is_none() {
            break;
        }
        // bottleneck over finite residuals on the path
        let mut bottleneck: Option<u64> = None;
        let mut cur = t;
        while cur != s {
            let (prev, idx) = parent[cur as usize].unwrap();
            if let Residual::Fin(r) = residual(cap.get(idx), flows[idx], prev, g.edges()[idx]) {
                bottleneck = Some(bottleneck.map_or(r, |b| b.min(r)));
            }
            cur = prev;
        }
        let amount = match (bottleneck, limit) {
            (Some(b), Some(l)) => b.min(l - value),
            (Some(b), None) => b,
            // all-INF path: with a limit, fill up to it; otherwise the max
            // flow is unbounded
            (None, Some(l)) => l - value,
            (None, None) => {
                infinite = true;
                break;
            }
        };
        debug_assert!(amount >= 1);
        let mut cur = t;
        while cur != s {
            let (prev, idx) = parent[cur as usize].unwrap();
            if prev == g.edges()[idx].0 {
                flows[idx] += amount as i64;
            } else {
                flows[idx] -= amount as i64;
            }
            cur = prev;
        }
        value += amount;
    }

    // residual-reachable source side
    let mut seen = vec![false; n];
    seen[s as usize] = true;
    let mut queue = VecDeque::new();
    queue.push_back(s);
    while let Some(u) = queue.pop_front() {
        for &(idx, v) in &inc[u as usize] {
            if seen[v as usize] {
                continue;
            }
            let has_residual = match residual(cap.get(idx), flows[idx], u, g.edges()[idx]) {
                Residual::Inf => true,
                Residual::Fin(r) => r > 0,
            };
            if has_residual {
                seen[v as usize] = true;
                queue.push_back(v);
            }
        }
    }
    let source_side =
        NodeSet::from_sorted((0..n as u32).filter(|&v| seen[v as usize]).collect());
    let cut_edges: Vec<Edge> = if infinite {
        Vec::new()
    } else {
        g.edges()
            .iter()
            .copied()
            .filter(|e| source_side.contains(e.0) != source_side.contains(e.1))
            .collect()
    };

    Ok(FlowResult {
        value: if infinite { FlowValue::Infinite } else { FlowValue::Finite(value) },
        flows,
        source_side,
        cut_edges,
        limited,
    })
}

/// Decompose an integral flow of value ≥ κ into κ s-t paths by repeated
/// walk-and-subtract on positive-flow arcs. Any flow cycles are simply never
/// visited (the walk keeps a visited set), so they need no explicit
/// cancellation. Paths are deterministic: lowest-id next arc first.
pub fn decompose_paths(
    g: &Graph,
    flow: &FlowResult,
    s: u32,
    t: u32,
    kappa: u64,
) -> Result<Vec<Vec<u32>>> {
    match flow.value {
        FlowValue::Finite(v) if v < kappa => {
            return Err(Error::FlowTooSmall { value: v, kappa });
        }
        _ => {}
    }
    // arc flows: arc[u][k] = (edge idx, head); positive units remaining
    let mut remaining: Vec<i64> = flow.flows.clone();
    let mut paths = Vec::with_capacity(kappa as usize);
    for _ in 0..kappa {
        let path = extract_one_path(g, &mut remaining, s, t)?;
        paths.push(path);
    }
    Ok(paths)
}

fn extract_one_path(g: &Graph, remaining: &mut [i64], s: u32, t: u32) -> Result<Vec<u32>> {
    let n = g.node_count();
    // iterative DFS over positive-flow arcs, lowest head id first
    let mut visited = vec![false; n];
    let mut stack: Vec<(u32, usize)> = vec![(s, 0)];
    let mut path: Vec<u32> = vec![s];
    visited[s as usize] = true;
    loop {
        let (u, start) = *stack.last().unwrap();
        if u == t {
            break;
        }
        let nbrs = g.neighbors(u);
        let mut i = start;
        let mut chosen = None;
        while i < nbrs.len() {
            let v = nbrs[i];
            i += 1;
            if visited[v as usize] {
                continue;
            }
            let idx = g.edge_id(Edge::new(u, v)).unwrap();
            let units = if u == g.edges()[idx].0 { remaining[idx] } else { -remaining[idx] };
            if units > 0 {
                chosen = Some(v);
                break;
            }
        }
        stack.last_mut().unwrap().1 = i;
        match chosen {
            Some(v) => {
                visited[v as usize] = true;
                stack.push((v, 0));
                path.push(v);
            }
            None => {
                stack.pop();
                path.pop();
                if stack.is_empty() {
                    return Err(Error::InternalInvariant(alloc::format!(
                        "flow decomposition found no s-t path from {s} to {t}"
                    )));
                }
            }
        }
    }
    // subtract one unit along the path
    for w in path.windows(2) {
        let idx = g.edge_id(Edge::new(w[0], w[1])).unwrap();
        if w[0] == g.edges()[idx].0 {
            remaining[idx] -= 1;
        } else {
            remaining[idx] += 1;
        }
    }
    Ok(path)
}
