//! Immutable simple connected graph and the distance/ball/boundary/expansion
//! primitives everything else builds on.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::Error;
use crate::num::{ratio, Ratio};
use crate::Result;

/// An undirected edge, stored with the smaller endpoint first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge(pub u32, pub u32);

impl Edge {
    pub fn new(u: u32, v: u32) -> Self {
        if u <= v {
            Edge(u, v)
        } else {
            Edge(v, u)
        }
    }

    pub fn other(self, u: u32) -> u32 {
        if self.0 == u {
            self.1
        } else {
            self.0
        }
    }

    pub fn touches(self, u: u32) -> bool {
        self.0 == u || self.1 == u
    }
}

/// Immutable simple undirected unweighted connected graph.
///
/// Node ids are dense integers in `[0, n)`; `labels` maps them back to the
/// input labels. Adjacency lists are sorted ascending, which makes every
/// BFS-based tie-break deterministic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<u32>>,
    edges: Vec<Edge>,
    labels: Vec<u64>,
}

impl Graph {
    /// Build a graph from labelled edges. Labels are compacted to dense ids
    /// in order of first appearance. Duplicate edges are dropped; self-loops
    /// and disconnected inputs are rejected.
    pub fn from_labelled_edges(pairs: &[(u64, u64)]) -> Result<Graph> {
        if pairs.is_empty() {
            return Err(Error::EmptyInput);
        }
        let mut id_of: BTreeMap<u64, u32> = BTreeMap::new();
        let mut labels: Vec<u64> = Vec::new();
        let mut intern = |label: u64, labels: &mut Vec<u64>| -> u32 {
            *id_of.entry(label).or_insert_with(|| {
                labels.push(label);
                (labels.len() - 1) as u32
            })
        };
        let mut edges: Vec<Edge> = Vec::with_capacity(pairs.len());
        for &(a, b) in pairs {
            if a == b {
                return Err(Error::SelfLoop { label: a });
            }
            let u = intern(a, &mut labels);
            let v = intern(b, &mut labels);
            edges.push(Edge::new(u, v));
        }
        edges.sort();
        edges.dedup();
        let n = labels.len();
        let mut adj = vec![Vec::new(); n];
        for &Edge(u, v) in &edges {
            adj[u as usize].push(v);
            adj[v as usize].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        let g = Graph { adj, edges, labels };
        // connectivity check with component representatives on failure
        let dist = g.bfs_distances_raw(0);
        if let Some(v) = dist.iter().position(|d| d.is_none()) {
            return Err(Error::Disconnected { a: g.labels[0], b: g.labels[v] });
        }
        Ok(g)
    }

    /// Build a graph whose node ids are already dense `0..n`; labels equal
    /// ids. Used by the generators, where ids are part of the construction.
    pub fn from_numbered_edges(n: usize, pairs: &[(u32, u32)]) -> Result<Graph> {
        if pairs.is_empty() {
            return Err(Error::EmptyInput);
        }
        let mut edges: Vec<Edge> = Vec::with_capacity(pairs.len());
        for &(u, v) in pairs {
            if u == v {
                return Err(Error::SelfLoop { label: u as u64 });
            }
            if u as usize >= n || v as usize >= n {
                return Err(Error::NodeOutOfRange { node: u.max(v), n });
            }
            edges.push(Edge::new(u, v));
        }
        edges.sort();
        edges.dedup();
        let mut adj = vec![Vec::new(); n];
        for &Edge(u, v) in &edges {
            adj[u as usize].push(v);
            adj[v as usize].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        let labels = (0..n as u64).collect();
        let g = Graph { adj, edges, labels };
        let dist = g.bfs_distances_raw(0);
        if let Some(v) = dist.iter().position(|d| d.is_none()) {
            return Err(Error::Disconnected { a: 0, b: v as u64 });
        }
        Ok(g)
    }

    /// Parse the standard edge-list text format: one edge per line, two
    /// whitespace-separated non-negative integers; `#`-lines and blank lines
    /// ignored.
    pub fn parse(text: &str) -> Result<Graph> {
        let mut pairs = Vec::new();
        for (i, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let mut toks = line.split_whitespace();
            let a = toks.next();
            let b = toks.next();
            let extra = toks.next();
            match (a, b, extra) {
                (Some(a), Some(b), None) => {
                    let a: u64 = a.parse().map_err(|_| Error::Parse {
                        line: i + 1,
                        msg: format!("bad token {a:?}"),
                    })?;
                    let b: u64 = b.parse().map_err(|_| Error::Parse {
                        line: i + 1,
                        msg: format!("bad token {b:?}"),
                    })?;
                    pairs.push((a, b));
                }
                _ => {
                    return Err(Error::Parse {
                        line: i + 1,
                        msg: format!("expected two integer tokens, got {line:?}"),
                    })
                }
            }
        }
        Graph::from_labelled_edges(&pairs)
    }

    /// Serialize back to the edge-list format using the dense ids.
    pub fn to_edge_list(&self) -> alloc::string::String {
        use core::fmt::Write;
        let mut out = alloc::string::String::new();
        for &Edge(u, v) in &self.edges {
            let _ = writeln!(out, "{u} {v}");
        }
        out
    }

    pub fn node_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn degree(&self, u: u32) -> u32 {
        self.adj[u as usize].len() as u32
    }

    pub fn max_degree(&self) -> u32 {
        self.adj.iter().map(|l| l.len() as u32).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> u32 {
        self.adj.iter().map(|l| l.len() as u32).min().unwrap_or(0)
    }

    pub fn neighbors(&self, u: u32) -> &[u32] {
        &self.adj[u as usize]
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn has_edge(&self, u: u32, v: u32) -> bool {
        self.edge_id(Edge::new(u, v)).is_some()
    }

    /// Index of an edge in the sorted edge list.
    pub fn edge_id(&self, e: Edge) -> Option<usize> {
        self.edges.binary_search(&e).ok()
    }

    pub fn label(&self, u: u32) -> u64 {
        self.labels[u as usize]
    }

    pub fn labels(&self) -> &[u64] {
        &self.labels
    }

    fn check_node(&self, u: u32) -> Result<()> {
        if (u as usize) < self.node_count() {
            Ok(())
        } else {
            Err(Error::NodeOutOfRange { node: u, n: self.node_count() })
        }
    }

    fn bfs_distances_raw(&self, source: u32) -> Vec<Option<u32>> {
        let n = self.node_count();
        let mut dist = vec![None; n];
        dist[source as usize] = Some(0);
        let mut queue = alloc::collections::VecDeque::new();
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            let du = dist[u as usize].unwrap();
            for &v in self.neighbors(u) {
                if dist[v as usize].is_none() {
                    dist[v as usize] = Some(du + 1);
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    /// BFS distances from `source`; all finite since the graph is connected.
    pub fn bfs_distances(&self, source: u32) -> Vec<u32> {
        self.check_node(source).expect("source in range");
        self.bfs_distances_raw(source)
            .into_iter()
            .map(|d| d.expect("connected graph"))
            .collect()
    }

    pub fn dist(&self, u: u32, v: u32) -> u32 {
        self.bfs_distances(u)[v as usize]
    }

    /// The canonical shortest u-v path: walk back from `v`, at each step
    /// taking the smallest-id neighbor one BFS level closer to `u`. Repeated
    /// calls return identical paths.
    pub fn canonical_shortest_path(&self, u: u32, v: u32) -> CanonicalPath {
        assert_ne!(u, v, "canonical path endpoints must differ");
        let dist = self.bfs_distances(u);
        let mut rev = vec![v];
        let mut cur = v;
        while cur != u {
            let d = dist[cur as usize];
            let prev = self
                .neighbors(cur)
                .iter()
                .copied()
                .find(|&w| dist[w as usize] + 1 == d)
                .expect("BFS predecessor exists");
            rev.push(prev);
            cur = prev;
        }
        rev.reverse();
        CanonicalPath { nodes: rev }
    }

    /// Ball of radius `r` around `u`: all nodes at distance <= r.
    pub fn ball(&self, u: u32, r: u32) -> NodeSet {
        let dist = self.bfs_distances(u);
        NodeSet::from_sorted(
            (0..self.node_count() as u32).filter(|&v| dist[v as usize] <= r).collect(),
        )
    }

    /// Boundary ∂(S): nodes outside S adjacent to at least one node of S.
    /// Note this is a node set, not an edge set.
    pub fn boundary(&self, s: &NodeSet) -> NodeSet {
        let mut out = Vec::new();
        for v in 0..self.node_count() as u32 {
            if !s.contains(v) && self.neighbors(v).iter().any(|&w| s.contains(w)) {
                out.push(v);
            }
        }
        NodeSet::from_sorted(out)
    }

    /// cut(S): edges with exactly one endpoint in S.
    pub fn cut_edge_set(&self, s: &NodeSet) -> Vec<Edge> {
        self.edges
            .iter()
            .copied()
            .filter(|e| s.contains(e.0) != s.contains(e.1))
            .collect()
    }

    fn check_expansion_domain(&self, s: &NodeSet) -> Result<()> {
        let n = self.node_count();
        if s.is_empty() || s.len() > n / 2 {
            return Err(Error::ExpansionDomain { size: s.len(), n });
        }
        Ok(())
    }

    /// Node expansion h_G(S) = |∂(S)| / |S|.
    pub fn node_expansion(&self, s: &NodeSet) -> Result<Ratio> {
        self.check_expansion_domain(s)?;
        Ok(ratio(self.boundary(s).len() as i64, s.len() as i64))
    }

    /// Edge expansion g_G(S) = |cut(S)| / |S|.
    pub fn edge_expansion(&self, s: &NodeSet) -> Result<Ratio> {
        self.check_expansion_domain(s)?;
        Ok(ratio(self.cut_edge_set(s).len() as i64, s.len() as i64))
    }

    /// Normalized edge expansion Φ_G(S) = |cut(S)| / vol(S), with
    /// vol(S) = sum of degrees of the nodes of S.
    pub fn normalized_expansion(&self, s: &NodeSet) -> Result<Ratio> {
        self.check_expansion_domain(s)?;
        let vol: i64 = s.iter().map(|u| self.degree(u) as i64).sum();
        Ok(ratio(self.cut_edge_set(s).len() as i64, vol))
    }

    /// Diameter realizing pair: lexicographically smallest `(p, q)` with
    /// `dist(p, q)` maximal, plus the diameter itself.
    pub fn diameter_pair(&self) -> (u32, u32, u32) {
        let n = self.node_count() as u32;
        let mut best = (0u32, 0u32, 0u32);
        for p in 0..n {
            let dist = self.bfs_distances(p);
            for q in (p + 1)..n {
                if dist[q as usize] > best.2 {
                    best = (p, q, dist[q as usize]);
                }
            }
        }
        best
    }

    /// Induced subgraph on `V \ c`; may be disconnected, with distances
    /// reported as `None` across components.
    pub fn remove_nodes<'a>(&'a self, c: &NodeSet) -> Result<Subgraph<'a>> {
        if c.len() >= self.node_count() {
            return Err(Error::RemoveAll);
        }
        let mut removed = vec![false; self.node_count()];
        for u in c.iter() {
            self.check_node(u)?;
            removed[u as usize] = true;
        }
        Ok(Subgraph { g: self, removed })
    }

    /// Maximum degree over `V \ excluded`; 0 if every node is excluded.
    pub fn max_degree_excluding(&self, excluded: &NodeSet) -> u32 {
        (0..self.node_count() as u32)
            .filter(|&u| !excluded.contains(u))
            .map(|u| self.degree(u))
            .max()
            .unwrap_or(0)
    }
}

/// A set of node ids, kept sorted and deduplicated.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct NodeSet {
    ids: Vec<u32>,
}

impl NodeSet {
    pub fn new(mut ids: Vec<u32>) -> Self {
        ids.sort_unstable();
        ids.dedup();
        NodeSet { ids }
    }

    /// Wrap an already sorted, deduplicated vector.
    pub fn from_sorted(ids: Vec<u32>) -> Self {
        debug_assert!(ids.windows(2).all(|w| w[0] < w[1]));
        NodeSet { ids }
    }

    pub fn singleton(u: u32) -> Self {
        NodeSet { ids: vec![u] }
    }

    pub fn empty() -> Self {
        NodeSet { ids: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.ids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ids.is_empty()
    }

    pub fn contains(&self, u: u32) -> bool {
        self.ids.binary_search(&u).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = u32> + '_ {
        self.ids.iter().copied()
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.ids
    }

    pub fn union(&self, other: &NodeSet) -> NodeSet {
        let mut ids = self.ids.clone();
        ids.extend_from_slice(&other.ids);
        NodeSet::new(ids)
    }

    pub fn is_subset_of(&self, other: &NodeSet) -> bool {
        self.ids.iter().all(|&u| other.contains(u))
    }

    pub fn is_strict_subset_of(&self, other: &NodeSet) -> bool {
        self.len() < other.len() && self.is_subset_of(other)
    }

    /// |self \ other|
    pub fn difference_len(&self, other: &NodeSet) -> usize {
        self.ids.iter().filter(|&&u| !other.contains(u)).count()
    }

    pub fn is_disjoint_from(&self, other: &NodeSet) -> bool {
        self.ids.iter().all(|&u| !other.contains(u))
    }
}

impl FromIterator<u32> for NodeSet {
    fn from_iter<T: IntoIterator<Item = u32>>(iter: T) -> Self {
        NodeSet::new(iter.into_iter().collect())
    }
}

/// An ordered node path; when produced by `canonical_shortest_path` its
/// length equals the graph distance between its endpoints.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonicalPath {
    pub nodes: Vec<u32>,
}

impl CanonicalPath {
    /// Number of edges.
    pub fn len(&self) -> usize {
        self.nodes.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn first(&self) -> u32 {
        self.nodes[0]
    }

    pub fn last(&self) -> u32 {
        *self.nodes.last().unwrap()
    }

    pub fn edges(&self) -> Vec<Edge> {
        self.nodes.windows(2).map(|w| Edge::new(w[0], w[1])).collect()
    }
}

/// Induced subgraph view `G - C`; distances across components are `None`.
#[derive(Debug, Clone)]
pub struct Subgraph<'a> {
    g: &'a Graph,
    removed: Vec<bool>,
}

impl<'a> Subgraph<'a> {
    pub fn graph(&self) -> &Graph {
        self.g
    }

    pub fn is_removed(&self, u: u32) -> bool {
        self.removed[u as usize]
    }

    /// BFS distances from `source` inside the subgraph; `None` marks nodes
    /// that are removed or unreachable.
    pub fn bfs_distances(&self, source: u32) -> Vec<Option<u32>> {
        let n = self.g.node_count();
        let mut dist = vec![None; n];
        if self.removed[source as usize] {
            return dist;
        }
        dist[source as usize] = Some(0);
        let mut queue = alloc::collections::VecDeque::new();
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            let du = dist[u as usize].unwrap();
            for &v in self.g.neighbors(u) {
                if !self.removed[v as usize] && dist[v as usize].is_none() {
                    dist[v as usize] = Some(du + 1);
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    pub fn dist(&self, u: u32, v: u32) -> Option<u32> {
        self.bfs_distances(u)[v as usize]
    }

    /// Ball of radius `r` around `u` inside the subgraph.
    pub fn ball(&self, u: u32, r: u32) -> NodeSet {
        let dist = self.bfs_distances(u);
        NodeSet::from_sorted(
            (0..self.g.node_count() as u32)
                .filter(|&v| matches!(dist[v as usize], Some(d) if d <= r))
                .collect(),
        )
    }
}

/// Multi-source exact-distance set: nodes whose minimum distance in `g` to
/// `sources` is exactly `radius`.
pub fn exact_distance_shell(g: &Graph, sources: &[u32], radius: u32) -> NodeSet {
    let n = g.node_count();
    let mut dist: Vec<Option<u32>> = vec![None; n];
    let mut queue = alloc::collections::VecDeque::new();
    for &s in sources {
        if dist[s as usize].is_none() {
            dist[s as usize] = Some(0);
            queue.push_back(s);
        }
    }
    while let Some(u) = queue.pop_front() {
        let du = dist[u as usize].unwrap();
        if du >= radius {
            continue;
        }
        for &v in g.neighbors(u) {
            if dist[v as usize].is_none() {
                dist[v as usize] = Some(du + 1);
                queue.push_back(v);
            }
        }
    }
    NodeSet::from_sorted(
        (0..n as u32).filter(|&v| dist[v as usize] == Some(radius)).collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{generate, Family};
    use crate::num::ratio;

    fn path6() -> Graph {
        generate(&Family::Path(6)).unwrap()
    }

    fn cycle8() -> Graph {
        generate(&Family::Cycle(8)).unwrap()
    }

    fn complete4() -> Graph {
        generate(&Family::Complete(4)).unwrap()
    }

    #[test]
    fn parse_smallest_path() {
        let g = Graph::parse("0 1\n1 2").unwrap();
        assert_eq!(g.node_count(), 3);
        assert_eq!(g.edge_count(), 2);
    }

    #[test]
    fn parse_dedups_duplicate_edges() {
        let g = Graph::parse("0 1\n1 2\n2 0\n0 1").unwrap();
        assert_eq!(g.node_count(), 3);
        assert_eq!(g.edge_count(), 3);
    }

    #[test]
    fn parse_rejects_disconnected_with_representatives() {
        match Graph::parse("0 1\n2 3") {
            Err(Error::Disconnected { a, b }) => {
                assert_eq!(a, 0);
                assert!(b == 2 || b == 3);
            }
            other => panic!("expected Disconnected, got {other:?}"),
        }
    }

    #[test]
    fn parse_rejects_self_loop_and_empty() {
        assert!(matches!(Graph::parse("3 3"), Err(Error::SelfLoop { label: 3 })));
        assert!(matches!(Graph::parse("# nothing\n\n"), Err(Error::EmptyInput)));
    }

    #[test]
    fn parse_compacts_ids_in_first_appearance_order() {
        let g = Graph::parse("10 7\n7 42").unwrap();
        assert_eq!(g.labels(), &[10, 7, 42]);
        assert_eq!(g.dist(0, 2), 2);
    }

    #[test]
    fn bfs_distances_examples() {
        assert_eq!(path6().bfs_distances(0), vec![0, 1, 2, 3, 4, 5]);
        assert_eq!(cycle8().bfs_distances(0), vec![0, 1, 2, 3, 4, 3, 2, 1]);
        assert_eq!(complete4().bfs_distances(2), vec![1, 1, 0, 1]);
    }

    #[test]
    fn canonical_path_examples() {
        assert_eq!(path6().canonical_shortest_path(0, 5).nodes, vec![0, 1, 2, 3, 4, 5]);
        let c4 = generate(&Family::Cycle(4)).unwrap();
        assert_eq!(c4.canonical_shortest_path(0, 2).nodes, vec![0, 1, 2]);
        assert_eq!(complete4().canonical_shortest_path(1, 3).nodes, vec![1, 3]);
    }

    #[test]
    fn canonical_path_is_idempotent_and_shortest() {
        let g = cycle8();
        let p1 = g.canonical_shortest_path(1, 6);
        let p2 = g.canonical_shortest_path(1, 6);
        assert_eq!(p1, p2);
        assert_eq!(p1.len() as u32, g.dist(1, 6));
    }

    #[test]
    fn ball_examples() {
        assert_eq!(path6().ball(0, 0), NodeSet::singleton(0));
        assert_eq!(path6().ball(0, 2), NodeSet::new(vec![0, 1, 2]));
        assert_eq!(cycle8().ball(0, 3), NodeSet::new(vec![0, 1, 2, 3, 5, 6, 7]));
    }

    #[test]
    fn boundary_examples() {
        assert_eq!(complete4().boundary(&NodeSet::singleton(0)), NodeSet::new(vec![1, 2, 3]));
        assert_eq!(path6().boundary(&NodeSet::new(vec![0, 1, 2])), NodeSet::singleton(3));
        let g = path6();
        let all: NodeSet = (0..6).collect();
        assert!(g.boundary(&all).is_empty());
    }

    #[test]
    fn cut_edge_set_examples() {
        assert_eq!(complete4().cut_edge_set(&NodeSet::singleton(0)).len(), 3);
        let cut = cycle8().cut_edge_set(&NodeSet::new(vec![0, 1, 2, 3]));
        assert_eq!(cut, vec![Edge(0, 7), Edge(3, 4)]);
        assert!(path6().cut_edge_set(&NodeSet::empty()).is_empty());
    }

    #[test]
    fn expansion_examples() {
        assert_eq!(complete4().node_expansion(&NodeSet::singleton(0)).unwrap(), ratio(3, 1));
        assert_eq!(path6().node_expansion(&NodeSet::new(vec![0, 1, 2])).unwrap(), ratio(1, 3));
        assert_eq!(
            cycle8().node_expansion(&NodeSet::new(vec![0, 1, 2, 3])).unwrap(),
            ratio(1, 2)
        );
        assert_eq!(complete4().edge_expansion(&NodeSet::singleton(0)).unwrap(), ratio(3, 1));
        assert_eq!(path6().edge_expansion(&NodeSet::new(vec![0, 1, 2])).unwrap(), ratio(1, 3));
        assert_eq!(
            cycle8().edge_expansion(&NodeSet::new(vec![0, 1, 2, 3])).unwrap(),
            ratio(1, 2)
        );
        assert_eq!(
            complete4().normalized_expansion(&NodeSet::singleton(0)).unwrap(),
            ratio(1, 1)
        );
        assert_eq!(
            cycle8().normalized_expansion(&NodeSet::new(vec![0, 1, 2, 3])).unwrap(),
            ratio(1, 4)
        );
        assert_eq!(path6().normalized_expansion(&NodeSet::singleton(0)).unwrap(), ratio(1, 1));
    }

    #[test]
    fn expansion_domain_errors() {
        let g = path6();
        assert!(g.node_expansion(&NodeSet::empty()).is_err());
        assert!(g.node_expansion(&NodeSet::new(vec![0, 1, 2, 3])).is_err());
    }

    #[test]
    fn diameter_examples() {
        assert_eq!(path6().diameter_pair(), (0, 5, 5));
        assert_eq!(cycle8().diameter_pair(), (0, 4, 4));
        assert_eq!(complete4().diameter_pair(), (0, 1, 1));
    }

    #[test]
    fn remove_nodes_examples() {
        let g = path6();
        let sub = g.remove_nodes(&NodeSet::singleton(3)).unwrap();
        assert_eq!(sub.dist(0, 5), None);
        assert_eq!(sub.dist(0, 2), Some(2));

        let c8 = cycle8();
        let sub = c8.remove_nodes(&NodeSet::singleton(2)).unwrap();
        assert_eq!(sub.dist(0, 4), Some(4));

        let sub = g.remove_nodes(&NodeSet::empty()).unwrap();
        assert_eq!(sub.dist(0, 5), Some(5));

        let all: NodeSet = (0..6).collect();
        assert!(matches!(g.remove_nodes(&all), Err(Error::RemoveAll)));
    }

    #[test]
    fn max_degree_excluding_examples() {
        let star = generate(&Family::Star(5)).unwrap();
        assert_eq!(star.max_degree_excluding(&NodeSet::singleton(0)), 1);
        assert_eq!(cycle8().max_degree_excluding(&NodeSet::empty()), 2);
        assert_eq!(path6().max_degree_excluding(&NodeSet::new(vec![0, 5])), 2);
    }
}
