//! The core graph type: simple undirected graphs on at most 64 vertices,
//! stored as one adjacency bitmask per vertex, together with the metric
//! operations (distance, powers, girth) everything else builds on.

use std::cmp::Ordering;
use std::collections::VecDeque;
use std::fmt;

use crate::vertex_map::VertexMap;

/// Hard cap on the vertex count; adjacency rows are single 64-bit masks.
pub const MAX_VERTICES: usize = 64;

fn low_bits(k: usize) -> u64 {
    if k >= 64 {
        u64::MAX
    } else {
        (1u64 << k) - 1
    }
}

/// A set of vertex indices backed by a 64-bit mask.
///
/// Iteration is always in ascending index order, so a `VertexSet` doubles as
/// a sorted neighbor set. Single-word intersection, union and difference are
/// what keep the neighborhood formulas in the reconstruction engine cheap.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn singleton(v: usize) -> Self {
        assert!(v < MAX_VERTICES);
        VertexSet(1 << v)
    }

    /// All vertices `0..n`.
    pub fn full(n: usize) -> Self {
        assert!(n <= MAX_VERTICES);
        VertexSet(low_bits(n))
    }

    pub fn from_mask(mask: u64) -> Self {
        VertexSet(mask)
    }

    pub fn mask(self) -> u64 {
        self.0
    }

    pub fn contains(self, v: usize) -> bool {
        v < MAX_VERTICES && self.0 & (1 << v) != 0
    }

    #[must_use]
    pub fn with(self, v: usize) -> Self {
        assert!(v < MAX_VERTICES);
        VertexSet(self.0 | (1 << v))
    }

    #[must_use]
    pub fn without(self, v: usize) -> Self {
        assert!(v < MAX_VERTICES);
        VertexSet(self.0 & !(1 << v))
    }

    pub fn insert(&mut self, v: usize) {
        *self = self.with(v);
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset_of(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    /// Smallest element, if any.
    pub fn smallest(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    pub fn iter(self) -> VertexSetIter {
        VertexSetIter(self.0)
    }
}

impl std::ops::BitOr for VertexSet {
    type Output = VertexSet;
    fn bitor(self, rhs: Self) -> Self {
        VertexSet(self.0 | rhs.0)
    }
}

impl std::ops::BitAnd for VertexSet {
    type Output = VertexSet;
    fn bitand(self, rhs: Self) -> Self {
        VertexSet(self.0 & rhs.0)
    }
}

impl std::ops::Sub for VertexSet {
    type Output = VertexSet;
    fn sub(self, rhs: Self) -> Self {
        VertexSet(self.0 & !rhs.0)
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = VertexSetIter;
    fn into_iter(self) -> VertexSetIter {
        self.iter()
    }
}

pub struct VertexSetIter(u64);

impl Iterator for VertexSetIter {
    type Item = usize;
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// Length of the shortest cycle, or `Infinite` for forests.
///
/// The derived ordering places `Infinite` above every finite value, so
/// "girth at least k" is a plain comparison even for trees.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Girth {
    Finite(u32),
    Infinite,
}

impl Girth {
    pub fn at_least(self, k: u32) -> bool {
        match self {
            Girth::Finite(g) => g >= k,
            Girth::Infinite => true,
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self, Girth::Finite(_))
    }
}

impl fmt::Display for Girth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Girth::Finite(g) => write!(f, "{g}"),
            Girth::Infinite => write!(f, "inf"),
        }
    }
}

impl std::str::FromStr for Girth {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        if s.eq_ignore_ascii_case("inf") || s == "∞" {
            return Ok(Girth::Infinite);
        }
        match s.parse::<u32>() {
            Ok(g) if g >= 3 => Ok(Girth::Finite(g)),
            Ok(g) => Err(format!("girth {g} below 3, the shortest possible cycle")),
            Err(e) => Err(format!("not a girth value: {e}")),
        }
    }
}

/// Simple undirected graph on vertices `0..n`, `n <= 64`.
///
/// Adjacency is open (a vertex is never its own neighbor); the closed
/// neighborhood used by the root-finding formulas is exposed through
/// [`Graph::closed_neighborhood`]. Values are cheap to clone and never
/// mutated by the algorithms here, so they can be shared freely across
/// worker threads.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Self {
        assert!(n <= MAX_VERTICES, "at most {MAX_VERTICES} vertices supported");
        Graph { n, adj: vec![0; n] }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = Graph::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    /// Path 0-1-...-(n-1).
    pub fn path(n: usize) -> Self {
        let mut g = Graph::new(n);
        for v in 1..n {
            g.add_edge(v - 1, v);
        }
        g
    }

    /// Cycle 0-1-...-(n-1)-0.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a cycle needs at least 3 vertices");
        let mut g = Graph::path(n);
        g.add_edge(n - 1, 0);
        g
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Graph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v);
            }
        }
        g
    }

    /// Star with center 0 and leaves 1..n-1.
    pub fn star(n: usize) -> Self {
        assert!(n >= 1);
        let mut g = Graph::new(n);
        for v in 1..n {
            g.add_edge(0, v);
        }
        g
    }

    /// The Petersen graph: outer 5-cycle 0..4, inner pentagram 5..9.
    pub fn petersen() -> Self {
        let mut g = Graph::new(10);
        for i in 0..5 {
            g.add_edge(i, (i + 1) % 5);
            g.add_edge(i, i + 5);
            g.add_edge(5 + i, 5 + (i + 2) % 5);
        }
        g
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|m| m.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        assert!(u < self.n && v < self.n, "vertex out of range");
        self.adj[u] & (1 << v) != 0
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u < self.n && v < self.n, "vertex out of range");
        assert_ne!(u, v, "self-loops are not allowed");
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        assert!(u < self.n && v < self.n, "vertex out of range");
        self.adj[u] &= !(1 << v);
        self.adj[v] &= !(1 << u);
    }

    pub fn degree(&self, v: usize) -> usize {
        assert!(v < self.n, "vertex out of range");
        self.adj[v].count_ones() as usize
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(|m| m.count_ones() as usize).min().unwrap_or(0)
    }

    /// Open neighborhood: the vertices adjacent to `v`, excluding `v`.
    pub fn neighbors(&self, v: usize) -> VertexSet {
        assert!(v < self.n, "vertex out of range");
        VertexSet(self.adj[v])
    }

    /// Closed neighborhood: `v` together with its adjacent vertices.
    pub fn closed_neighborhood(&self, v: usize) -> VertexSet {
        assert!(v < self.n, "vertex out of range");
        VertexSet(self.adj[v] | (1 << v))
    }

    /// Edges as `(u, v)` pairs with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            VertexSet(self.adj[u] & !low_bits(u + 1))
                .iter()
                .map(move |v| (u, v))
        })
    }

    /// Shortest-path length between `u` and `v`, `None` if unreachable.
    pub fn distance(&self, u: usize, v: usize) -> Option<u32> {
        assert!(u < self.n && v < self.n, "vertex out of range");
        if u == v {
            return Some(0);
        }
        let mut visited = 1u64 << u;
        let mut frontier = visited;
        let mut d = 0;
        while frontier != 0 {
            d += 1;
            let mut next = 0u64;
            for w in VertexSet(frontier).iter() {
                next |= self.adj[w];
            }
            next &= !visited;
            if next & (1 << v) != 0 {
                return Some(d);
            }
            visited |= next;
            frontier = next;
        }
        None
    }

    /// The r-th power: same vertices, an edge wherever the distance here is
    /// between 1 and `r`.
    ///
    /// Panics if `r` is 0 (the 0-th power is not defined).
    pub fn power(&self, r: u32) -> Graph {
        assert!(r >= 1, "graph powers start at r = 1");
        let mut result = Graph::new(self.n);
        for u in 0..self.n {
            let mut reach = 1u64 << u;
            for _ in 0..r {
                let mut next = reach;
                for w in VertexSet(reach).iter() {
                    next |= self.adj[w];
                }
                if next == reach {
                    break;
                }
                reach = next;
            }
            result.adj[u] = reach & !(1 << u);
        }
        result
    }

    /// Length of the shortest cycle, `Infinite` for forests.
    ///
    /// BFS from every vertex; a non-tree edge seen at depths d1, d2 closes a
    /// cycle of length at most d1 + d2 + 1, and starting from a vertex on a
    /// shortest cycle attains it exactly.
    pub fn girth(&self) -> Girth {
        let mut best: Option<u32> = None;
        let mut dist = vec![u32::MAX; self.n];
        let mut parent = vec![usize::MAX; self.n];
        let mut queue = VecDeque::new();
        for s in 0..self.n {
            dist.iter_mut().for_each(|d| *d = u32::MAX);
            queue.clear();
            dist[s] = 0;
            parent[s] = usize::MAX;
            queue.push_back(s);
            while let Some(u) = queue.pop_front() {
                if let Some(b) = best {
                    if 2 * dist[u] >= b {
                        break;
                    }
                }
                for v in self.neighbors(u).iter() {
                    if dist[v] == u32::MAX {
                        dist[v] = dist[u] + 1;
                        parent[v] = u;
                        queue.push_back(v);
                    } else if parent[u] != v {
                        let c = dist[u] + dist[v] + 1;
                        if best.map_or(true, |b| c < b) {
                            best = Some(c);
                        }
                    }
                }
            }
        }
        match best {
            Some(g) => Girth::Finite(g),
            None => Girth::Infinite,
        }
    }

    /// One BFS from vertex 0 reaches everything. The empty graph counts as
    /// connected, which keeps enumeration pipelines free of special cases.
    pub fn is_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        let mut reach = 1u64;
        loop {
            let mut next = reach;
            for w in VertexSet(reach).iter() {
                next |= self.adj[w];
            }
            if next == reach {
                break;
            }
            reach = next;
        }
        reach == low_bits(self.n)
    }

    /// True iff `s` is pairwise adjacent and no outside vertex is adjacent
    /// to all of `s`.
    pub fn is_maximal_clique(&self, s: VertexSet) -> bool {
        assert!(
            s.is_subset_of(VertexSet::full(self.n)),
            "clique candidate has out-of-range vertices"
        );
        for v in s.iter() {
            if !(s.without(v)).is_subset_of(self.neighbors(v)) {
                return false;
            }
        }
        for u in 0..self.n {
            if !s.contains(u) && s.is_subset_of(self.neighbors(u)) {
                return false;
            }
        }
        true
    }

    /// The image of this graph under a vertex permutation: edge `(u, v)`
    /// becomes `(m(u), m(v))`.
    pub fn relabeled(&self, m: &VertexMap) -> Graph {
        assert_eq!(m.len(), self.n, "permutation size must match vertex count");
        let mut g = Graph::new(self.n);
        for (u, v) in self.edges() {
            g.add_edge(m.apply(u), m.apply(v));
        }
        g
    }

    /// Witness isomorphism onto `other`, if one exists.
    pub fn isomorphism_to(&self, other: &Graph) -> Option<VertexMap> {
        crate::isomorphism::isomorphism(self, other)
    }
}

impl PartialOrd for Graph {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Graphs are ordered by vertex count, then lexicographically by sorted
/// edge list, which is the deterministic output order used throughout.
impl Ord for Graph {
    fn cmp(&self, other: &Self) -> Ordering {
        self.n
            .cmp(&other.n)
            .then_with(|| self.edges().cmp(other.edges()))
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={};", self.n)?;
        for (u, v) in self.edges() {
            write!(f, " {u}-{v}")?;
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Independent girth oracle: for each edge, the shortest cycle through
    /// it is 1 + the u-v distance with the edge removed.
    fn girth_by_edge_removal(g: &Graph) -> Girth {
        let mut best: Option<u32> = None;
        for (u, v) in g.edges().collect::<Vec<_>>() {
            let mut h = g.clone();
            h.remove_edge(u, v);
            if let Some(d) = h.distance(u, v) {
                let c = d + 1;
                if best.map_or(true, |b| c < b) {
                    best = Some(c);
                }
            }
        }
        best.map_or(Girth::Infinite, Girth::Finite)
    }

    #[test]
    fn closed_neighborhood_isolated_vertex() {
        let g = Graph::new(1);
        assert_eq!(g.closed_neighborhood(0), VertexSet::singleton(0));
    }

    #[test]
    fn closed_neighborhood_on_cycle() {
        let c6 = Graph::cycle(6);
        assert_eq!(
            c6.closed_neighborhood(0),
            [5, 0, 1].into_iter().collect::<VertexSet>()
        );
    }

    #[test]
    fn closed_neighborhood_on_cycle_square() {
        let sq = Graph::cycle(6).power(2);
        assert_eq!(
            sq.closed_neighborhood(0),
            [4, 5, 0, 1, 2].into_iter().collect::<VertexSet>()
        );
    }

    #[test]
    #[should_panic(expected = "out of range")]
    fn closed_neighborhood_rejects_bad_vertex() {
        Graph::new(3).closed_neighborhood(3);
    }

    #[test]
    fn distance_antipodal_on_c6() {
        let c6 = Graph::cycle(6);
        assert_eq!(c6.distance(0, 3), Some(3));
        assert_eq!(c6.distance(2, 2), Some(0));
    }

    #[test]
    fn distance_unreachable_across_components() {
        let g = Graph::from_edges(3, &[(0, 1)]);
        assert_eq!(g.distance(0, 2), None);
        assert_eq!(g.distance(0, 1), Some(1));
    }

    #[test]
    fn square_of_c5_and_star_is_k5() {
        assert_eq!(Graph::cycle(5).power(2), Graph::complete(5));
        assert_eq!(Graph::star(5).power(2), Graph::complete(5));
    }

    #[test]
    fn first_power_is_identity() {
        for g in [Graph::cycle(6), Graph::petersen(), Graph::new(4)] {
            assert_eq!(g.power(1), g);
        }
    }

    #[test]
    fn square_of_c6_misses_exactly_the_antipodal_pairs() {
        let sq = Graph::cycle(6).power(2);
        assert_eq!(sq.edge_count(), 12);
        for u in 0..6 {
            for v in u + 1..6 {
                let antipodal = v - u == 3;
                assert_eq!(sq.has_edge(u, v), !antipodal, "pair ({u},{v})");
            }
        }
    }

    #[test]
    #[should_panic(expected = "powers start at r = 1")]
    fn zeroth_power_rejected() {
        Graph::cycle(4).power(0);
    }

    #[test]
    fn girth_of_cycles_and_trees() {
        assert_eq!(Graph::cycle(6).girth(), Girth::Finite(6));
        assert_eq!(Graph::cycle(3).girth(), Girth::Finite(3));
        assert_eq!(Graph::path(7).girth(), Girth::Infinite);
        assert_eq!(Graph::star(9).girth(), Girth::Infinite);
        assert_eq!(Graph::new(0).girth(), Girth::Infinite);
    }

    #[test]
    fn girth_of_petersen_is_five() {
        let p = Graph::petersen();
        assert_eq!(girth_by_edge_removal(&p), Girth::Finite(5));
        assert_eq!(p.girth(), Girth::Finite(5));
    }

    #[test]
    fn girth_agrees_with_edge_removal_oracle() {
        let mut cases = vec![
            Graph::complete(5),
            Graph::cycle(4),
            Graph::cycle(6).power(2),
            Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 0), (3, 4), (4, 5)]),
            Graph::petersen(),
        ];
        // C6 with one chord: girth 4 (cycle 0-1-2-3-0).
        let mut chorded = Graph::cycle(6);
        chorded.add_edge(0, 3);
        cases.push(chorded);
        for g in &cases {
            assert_eq!(g.girth(), girth_by_edge_removal(g), "{g:?}");
        }
    }

    #[test]
    fn connectivity() {
        assert!(Graph::cycle(6).is_connected());
        assert!(!Graph::from_edges(3, &[(0, 1)]).is_connected());
        assert!(Graph::new(0).is_connected());
        assert!(Graph::new(1).is_connected());
        assert!(!Graph::new(2).is_connected());
    }

    #[test]
    fn odd_cycle_vertices_form_maximal_clique_in_c6_square() {
        let sq = Graph::cycle(6).power(2);
        let s: VertexSet = [1, 3, 5].into_iter().collect();
        assert!(sq.is_maximal_clique(s));
        // ... yet no vertex of {1,3,5} is adjacent in C6 to the other two,
        // so the clique does not come from a closed neighborhood.
        let c6 = Graph::cycle(6);
        for v in s.iter() {
            assert!(!(s.without(v)).is_subset_of(c6.neighbors(v)));
        }
    }

    #[test]
    fn extendable_set_is_not_maximal() {
        let sq = Graph::cycle(6).power(2);
        let s: VertexSet = [0, 1].into_iter().collect();
        assert!(!sq.is_maximal_clique(s));
        assert!(Graph::complete(5).is_maximal_clique(VertexSet::full(5)));
    }

    #[test]
    fn power_is_monotone_in_r() {
        for g in [Graph::path(8), Graph::petersen(), Graph::cycle(7)] {
            for r in 1..5 {
                let a = g.power(r);
                let b = g.power(r + 1);
                for (u, v) in a.edges() {
                    assert!(b.has_edge(u, v));
                }
            }
        }
    }

    #[test]
    fn edges_are_sorted_lexicographically() {
        let g = Graph::from_edges(5, &[(3, 4), (0, 2), (1, 2), (0, 4)]);
        let e: Vec<_> = g.edges().collect();
        assert_eq!(e, vec![(0, 2), (0, 4), (1, 2), (3, 4)]);
    }

    #[test]
    fn vertex_set_ops() {
        let a: VertexSet = [0, 2, 5].into_iter().collect();
        let b: VertexSet = [2, 3].into_iter().collect();
        assert_eq!(a & b, VertexSet::singleton(2));
        assert_eq!((a | b).len(), 4);
        assert_eq!(a - b, [0, 5].into_iter().collect());
        assert_eq!(a.smallest(), Some(0));
        assert!(VertexSet::EMPTY.is_subset_of(a));
        assert_eq!(format!("{a:?}"), "{0, 2, 5}");
    }
}
