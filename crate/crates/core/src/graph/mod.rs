//! Labeled simple undirected graphs on at most 63 vertices, stored as
//! per-vertex neighbor bitsets, plus the parsers, generators and local
//! statistics the coefficient formulas consume.

mod graph6;
mod text;

pub use graph6::{parse_graph6, to_graph6};
pub use text::{parse_edge_list, to_edge_list};

use num_bigint::BigUint;
use num_traits::{One, Zero};
use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use crate::combinatorics::Rational;
use crate::error::{Error, Result};

/// Hard cap imposed by the 64-bit adjacency bitsets (one bit spare keeps
/// `1 << n` well-defined everywhere).
pub const MAX_VERTICES: usize = 63;

/// Simple undirected graph with closed-neighborhood bitsets.
///
/// Vertices are 0-indexed. `closed[v]` always equals `adj[v] | 1<<v`.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
    closed: Vec<u64>,
}

impl Graph {
    /// Edgeless graph on `n` vertices, 1 <= n <= 63.
    pub fn new(n: usize) -> Result<Graph> {
        if n == 0 {
            return Err(Error::Parameter("graphs must have at least one vertex".into()));
        }
        if n > MAX_VERTICES {
            return Err(Error::Parameter(format!(
                "n = {n} exceeds the {MAX_VERTICES}-vertex bitset representation"
            )));
        }
        let closed = (0..n).map(|v| 1u64 << v).collect();
        Ok(Graph { n, adj: vec![0; n], closed })
    }

    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Graph> {
        let mut g = Graph::new(n)?;
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Inserts an edge; duplicates are idempotent, self-loops rejected.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        if u >= self.n {
            return Err(Error::VertexRange { vertex: u, n: self.n });
        }
        if v >= self.n {
            return Err(Error::VertexRange { vertex: v, n: self.n });
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
        self.closed[u] |= 1 << v;
        self.closed[v] |= 1 << u;
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    /// Bitset with one bit per vertex.
    pub fn full_mask(&self) -> u64 {
        (1u64 << self.n) - 1
    }

    /// Neighbor bitset of `v`.
    pub fn adjacency(&self, v: usize) -> u64 {
        self.adj[v]
    }

    /// Closed neighborhood N[v] = {v} ∪ neighbors, as a bitset.
    pub fn closed_neighborhood(&self, v: usize) -> u64 {
        self.closed[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            ((u + 1)..self.n).filter_map(move |v| self.has_edge(u, v).then_some((u, v)))
        })
    }

    /// Maximum degree Δ(G).
    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Minimum degree δ(G).
    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    /// Connected components as vertex bitsets, ordered by smallest member.
    pub fn components(&self) -> Vec<u64> {
        let mut seen = 0u64;
        let mut comps = Vec::new();
        for v in 0..self.n {
            if seen >> v & 1 == 1 {
                continue;
            }
            let mut comp = 1u64 << v;
            loop {
                let mut grown = comp;
                let mut rest = comp;
                while rest != 0 {
                    let u = rest.trailing_zeros() as usize;
                    rest &= rest - 1;
                    grown |= self.adj[u];
                }
                if grown == comp {
                    break;
                }
                comp = grown;
            }
            seen |= comp;
            comps.push(comp);
        }
        comps
    }

    /// Induced subgraph on the vertices of `mask`, relabeled to 0..popcount.
    pub fn induced(&self, mask: u64) -> Result<Graph> {
        let verts: Vec<usize> =
            (0..self.n).filter(|v| mask >> v & 1 == 1).collect();
        let mut g = Graph::new(verts.len())?;
        for (i, &u) in verts.iter().enumerate() {
            for (j, &v) in verts.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(i, j)?;
                }
            }
        }
        Ok(g)
    }

    /// Relabels vertices: new vertex i is old vertex `perm[i]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.n {
            return Err(Error::Parameter("permutation length mismatch".into()));
        }
        let mut g = Graph::new(self.n)?;
        for i in 0..self.n {
            for j in (i + 1)..self.n {
                if self.has_edge(perm[i], perm[j]) {
                    g.add_edge(i, j)?;
                }
            }
        }
        Ok(g)
    }

    pub fn degree_sequence_sorted(&self) -> Vec<usize> {
        let mut ds: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        ds.sort_unstable();
        ds
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges().collect::<Vec<_>>())
    }
}

/// Access to closed-neighborhood sizes only.
///
/// The σ/τ machinery needs |N[v]| and |N[u] ∪ N[v]|, nothing else, so it is
/// written against this trait. `Graph` implements it by popcount; structured
/// families too large for 64-bit bitsets implement it symbolically.
pub trait ClosedNeighborhoods {
    fn vertex_count(&self) -> usize;
    /// |N[v]| = deg(v) + 1.
    fn closed_size(&self, v: usize) -> usize;
    /// |N[u] ∪ N[v]| for u != v.
    fn union_size(&self, u: usize, v: usize) -> usize;
}

impl ClosedNeighborhoods for Graph {
    fn vertex_count(&self) -> usize {
        self.n
    }

    fn closed_size(&self, v: usize) -> usize {
        self.closed[v].count_ones() as usize
    }

    fn union_size(&self, u: usize, v: usize) -> usize {
        (self.closed[u] | self.closed[v]).count_ones() as usize
    }
}

/// Two cliques C (on `n_clique` vertices, distinguished vertex c0) and Q
/// (on `s` vertices, distinguished vertex q0), plus the edges c0–q for
/// every q in Q other than q0.
///
/// Same layout as [`generate_gns`]: C occupies vertices 0..n_clique with
/// c0 = 0, Q occupies the rest with q0 = n_clique. This symbolic form has
/// no size cap, so the certification machinery can run on family members
/// beyond the 63-vertex bitset representation.
#[derive(Clone, Copy, Debug)]
pub struct GnsFamily {
    pub n_clique: usize,
    pub s: usize,
}

impl GnsFamily {
    pub fn new(n_clique: usize, s: usize) -> Result<GnsFamily> {
        if n_clique < 1 || s < 2 {
            return Err(Error::Parameter(format!(
                "family requires N >= 1 and s >= 2, got N = {n_clique}, s = {s}"
            )));
        }
        Ok(GnsFamily { n_clique, s })
    }

    fn is_q(&self, v: usize) -> bool {
        v >= self.n_clique
    }
}

impl ClosedNeighborhoods for GnsFamily {
    fn vertex_count(&self) -> usize {
        self.n_clique + self.s
    }

    fn closed_size(&self, v: usize) -> usize {
        let n = self.vertex_count();
        if v == 0 {
            n - 1 // c0: everything but q0
        } else if !self.is_q(v) {
            self.n_clique // interior of C
        } else if v == self.n_clique {
            self.s // q0
        } else {
            self.s + 1 // Q \ {q0}: the clique Q plus c0
        }
    }

    fn union_size(&self, u: usize, v: usize) -> usize {
        debug_assert_ne!(u, v);
        let n = self.vertex_count();
        let (a, b) = (u.min(v), u.max(v));
        if a == 0 {
            // N[c0] = V \ {q0}; adding any other vertex's neighborhood
            // either stays there (inside C) or covers q0.
            if self.is_q(b) { n } else { n - 1 }
        } else if !self.is_q(a) {
            if self.is_q(b) { n } else { self.n_clique }
        } else {
            // Both in Q: N[q] ⊆ Q ∪ {c0} and q0's neighborhood is nested.
            self.s + 1
        }
    }
}

/// Per-vertex and per-component counts used by the closed-form top
/// coefficients: isolated vertices, leaves, degree-2 vertices, leaf edges,
/// K2/P3/K3 components, leaf pairs with a common neighbor, leaf-to-degree-2
/// edges, and twin degree-2 pairs.
#[derive(Clone, Debug, Default, PartialEq, Eq, serde::Serialize)]
pub struct LocalStatistics {
    /// Isolated vertices i(G).
    pub i: usize,
    /// Leaves (degree-1 vertices) ℓ(G).
    pub leaves: usize,
    /// Degree-2 vertices n2(G).
    pub n2: usize,
    /// Edges incident to at least one leaf, e1(G).
    pub e1: usize,
    /// Connected components isomorphic to K2.
    pub e2: usize,
    /// Unordered pairs of leaves sharing a common neighbor, s(G).
    pub s: usize,
    /// Edges joining a leaf to a degree-2 vertex, m(G).
    /// (Named `m_stat` to avoid clashing with dominating-side counts.)
    pub m_stat: usize,
    /// Unordered pairs of degree-2 vertices with equal closed neighborhood.
    pub t22: usize,
    /// Connected components isomorphic to P3.
    pub p3: usize,
    /// Connected components isomorphic to K3.
    pub c3: usize,
}

/// Extracts every local statistic in one pass over vertices, pairs and
/// components.
pub fn local_statistics(g: &Graph) -> LocalStatistics {
    let mut st = LocalStatistics::default();
    let deg: Vec<usize> = (0..g.n()).map(|v| g.degree(v)).collect();

    for v in 0..g.n() {
        match deg[v] {
            0 => st.i += 1,
            1 => st.leaves += 1,
            2 => st.n2 += 1,
            _ => {}
        }
    }

    for (u, v) in g.edges() {
        if deg[u] == 1 || deg[v] == 1 {
            st.e1 += 1;
        }
        if (deg[u] == 1 && deg[v] == 2) || (deg[u] == 2 && deg[v] == 1) {
            st.m_stat += 1;
        }
    }

    for u in 0..g.n() {
        for v in (u + 1)..g.n() {
            if deg[u] == 1 && deg[v] == 1 && !g.has_edge(u, v) && g.adjacency(u) == g.adjacency(v)
            {
                // Two leaves with the same unique neighbor.
                st.s += 1;
            }
            if deg[u] == 2 && deg[v] == 2 && g.closed_neighborhood(u) == g.closed_neighborhood(v) {
                st.t22 += 1;
            }
        }
    }

    for comp in g.components() {
        let size = comp.count_ones();
        let comp_edges: usize = (0..g.n())
            .filter(|&v| comp >> v & 1 == 1)
            .map(|v| (g.adjacency(v) & comp).count_ones() as usize)
            .sum::<usize>()
            / 2;
        match (size, comp_edges) {
            (2, 1) => st.e2 += 1,
            (3, 2) => st.p3 += 1,
            (3, 3) => st.c3 += 1,
            _ => {}
        }
    }

    st
}

/// Builds G_{N,s}: cliques C (vertices 0..N, c0 = 0) and Q (vertices
/// N..N+s, q0 = N), plus edges {0, q} for q in N+1..N+s.
pub fn generate_gns(n_clique: usize, s: usize) -> Result<Graph> {
    let fam = GnsFamily::new(n_clique, s)?;
    let n = fam.vertex_count();
    if n > MAX_VERTICES {
        return Err(Error::Parameter(format!(
            "N + s = {n} exceeds the {MAX_VERTICES}-vertex bitset representation"
        )));
    }
    let mut g = Graph::new(n)?;
    for u in 0..n_clique {
        for v in (u + 1)..n_clique {
            g.add_edge(u, v)?;
        }
    }
    for u in n_clique..n {
        for v in (u + 1)..n {
            g.add_edge(u, v)?;
        }
    }
    for q in (n_clique + 1)..n {
        g.add_edge(0, q)?;
    }
    Ok(g)
}

/// One step of a threshold construction sequence.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub enum CreationLabel {
    /// Added with no edges.
    Isolated,
    /// Added adjacent to every earlier vertex.
    Dominating,
}

/// A threshold-graph creation sequence; the first label is always
/// `Isolated` (a lone vertex is vacuously both, and fixing the convention
/// keeps decompositions deterministic).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CreationSequence(Vec<CreationLabel>);

impl CreationSequence {
    pub fn new(labels: Vec<CreationLabel>) -> Result<CreationSequence> {
        if labels.is_empty() {
            return Err(Error::Parameter("creation sequence must be nonempty".into()));
        }
        if labels[0] == CreationLabel::Dominating {
            return Err(Error::Parameter(
                "first vertex of a creation sequence must be isolated by convention".into(),
            ));
        }
        Ok(CreationSequence(labels))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn labels(&self) -> &[CreationLabel] {
        &self.0
    }

    /// 1-indexed positions of dominating-side vertices, in order.
    pub fn dominating_positions(&self) -> Vec<usize> {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, l)| **l == CreationLabel::Dominating)
            .map(|(j, _)| j + 1)
            .collect()
    }
}

impl std::str::FromStr for CreationSequence {
    type Err = Error;

    /// Parses strings over {i, d}, e.g. "iididiiididiii".
    fn from_str(s: &str) -> Result<CreationSequence> {
        let labels = s
            .trim()
            .chars()
            .map(|c| match c {
                'i' | 'I' => Ok(CreationLabel::Isolated),
                'd' | 'D' => Ok(CreationLabel::Dominating),
                other => Err(Error::Parameter(format!(
                    "creation sequences use only 'i' and 'd', found {other:?}"
                ))),
            })
            .collect::<Result<Vec<_>>>()?;
        CreationSequence::new(labels)
    }
}

impl std::fmt::Display for CreationSequence {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for l in &self.0 {
            f.write_str(match l {
                CreationLabel::Isolated => "i",
                CreationLabel::Dominating => "d",
            })?;
        }
        Ok(())
    }
}

/// Materializes the threshold graph of a creation sequence: vertex j is
/// added isolated or joined to all of v1..v_{j-1}.
pub fn generate_threshold(seq: &CreationSequence) -> Result<Graph> {
    let n = seq.len();
    let mut g = Graph::new(n)?;
    for (j, label) in seq.labels().iter().enumerate() {
        if *label == CreationLabel::Dominating {
            for v in 0..j {
                g.add_edge(v, j)?;
            }
        }
    }
    Ok(g)
}

/// Recognizes threshold graphs by reverse elimination: repeatedly strip an
/// isolated vertex, else a universal vertex (isolated first, lowest index
/// first, for determinism). Returns the creation sequence, or `None` when
/// the graph is not threshold.
pub fn recognize_threshold(g: &Graph) -> Option<CreationSequence> {
    let mut alive = g.full_mask();
    let mut stripped = Vec::with_capacity(g.n());
    while alive != 0 {
        let count = alive.count_ones() as u64;
        let mut pick = None;
        let mut rest = alive;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if g.adjacency(v) & alive == 0 {
                pick = Some((v, CreationLabel::Isolated));
                break;
            }
        }
        if pick.is_none() {
            let mut rest = alive;
            while rest != 0 {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                if ((g.adjacency(v) & alive).count_ones() as u64) == count - 1 {
                    pick = Some((v, CreationLabel::Dominating));
                    break;
                }
            }
        }
        let (v, label) = pick?;
        alive &= !(1u64 << v);
        stripped.push(label);
    }
    stripped.reverse();
    // The last stripped vertex was alone, hence recorded Isolated.
    Some(CreationSequence::new(stripped).expect("elimination ends on an isolated vertex"))
}

/// Erdős–Rényi sample, deterministic for a fixed (n, p, seed).
///
/// The generator is pinned for reproducibility: a ChaCha8 stream seeded via
/// `seed_from_u64(seed)`; pairs (u,v) with u < v are visited in
/// lexicographic order, one `next_u64` draw per pair, and the edge is
/// included iff draw * denom(p) < numer(p) * 2^64 (exact comparison).
pub fn random_graph(n: usize, p: &Rational, seed: u64) -> Result<Graph> {
    let mut g = Graph::new(n)?;
    if *p < Rational::zero() || *p > Rational::one() {
        return Err(Error::Parameter(format!("edge probability {p} outside [0, 1]")));
    }
    let num = p.numer().to_biguint().expect("p >= 0");
    let den = p.denom().to_biguint().expect("reduced denominators are positive");
    let scaled_num: BigUint = num << 64u32;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for u in 0..n {
        for v in (u + 1)..n {
            let draw = rng.next_u64();
            if BigUint::from(draw) * &den < scaled_num {
                g.add_edge(u, v)?;
            }
        }
    }
    Ok(g)
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use crate::combinatorics::{binom_us, ratio};

    pub(crate) fn path(n: usize) -> Graph {
        Graph::from_edges(n, (0..n - 1).map(|v| (v, v + 1))).unwrap()
    }

    pub(crate) fn complete(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))).unwrap()
    }

    pub(crate) fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|v| (v, (v + 1) % n))).unwrap()
    }

    pub(crate) fn star(leaves: usize) -> Graph {
        Graph::from_edges(leaves + 1, (1..=leaves).map(|v| (0, v))).unwrap()
    }

    #[test]
    fn closed_neighborhood_invariant() {
        for g in [path(4), complete(5), cycle(6), star(3)] {
            for v in g.vertices() {
                assert_eq!(g.closed_neighborhood(v), g.adjacency(v) | 1 << v);
                assert_eq!(g.closed_neighborhood(v).count_ones() as usize, g.degree(v) + 1);
            }
        }
    }

    #[test]
    fn rejects_degenerate_sizes() {
        assert!(Graph::new(0).is_err());
        assert!(Graph::new(64).is_err());
        assert!(Graph::new(63).is_ok());
    }

    #[test]
    fn components_of_disjoint_union() {
        let mut g = Graph::new(6).unwrap();
        g.add_edge(0, 1).unwrap();
        g.add_edge(3, 4).unwrap();
        g.add_edge(4, 5).unwrap();
        assert_eq!(g.components(), vec![0b000011, 0b000100, 0b111000]);
        let sub = g.induced(0b111000).unwrap();
        assert_eq!(sub.n(), 3);
        assert_eq!(sub.edge_count(), 2);
    }

    #[test]
    fn local_statistics_p4() {
        let st = local_statistics(&path(4));
        assert_eq!(
            st,
            LocalStatistics {
                i: 0,
                leaves: 2,
                n2: 2,
                e1: 2,
                e2: 0,
                s: 0,
                m_stat: 2,
                t22: 0,
                p3: 0,
                c3: 0
            }
        );
    }

    #[test]
    fn local_statistics_k1_and_star() {
        let st = local_statistics(&Graph::new(1).unwrap());
        assert_eq!(st.i, 1);
        assert_eq!(st, LocalStatistics { i: 1, ..Default::default() });

        let st = local_statistics(&star(3));
        assert_eq!(st.leaves, 3);
        assert_eq!(st.s, 3);
        assert_eq!(st.m_stat, 0);
        assert_eq!(st.t22, 0);
        assert_eq!(st.i, 0);
    }

    #[test]
    fn local_statistics_small_components() {
        // K1 ∪ K2 ∪ P3 ∪ K3.
        let mut g = Graph::new(9).unwrap();
        g.add_edge(1, 2).unwrap();
        g.add_edge(3, 4).unwrap();
        g.add_edge(4, 5).unwrap();
        g.add_edge(6, 7).unwrap();
        g.add_edge(7, 8).unwrap();
        g.add_edge(6, 8).unwrap();
        let st = local_statistics(&g);
        assert_eq!(st.i, 1);
        assert_eq!(st.e2, 1);
        assert_eq!(st.p3, 1);
        assert_eq!(st.c3, 1);
        assert_eq!(st.t22, 3); // the three K3 pairs
        assert_eq!(st.s, 1); // the P3 leaf pair
        assert_eq!(st.m_stat, 2); // both P3 edges
    }

    /// Brute-force predicate scans over all vertices, pairs and triples;
    /// kept independent of `local_statistics` as its oracle.
    fn naive_statistics(g: &Graph) -> LocalStatistics {
        let n = g.n();
        let deg = |v: usize| g.degree(v);
        let mut st = LocalStatistics::default();
        st.i = (0..n).filter(|&v| deg(v) == 0).count();
        st.leaves = (0..n).filter(|&v| deg(v) == 1).count();
        st.n2 = (0..n).filter(|&v| deg(v) == 2).count();
        for u in 0..n {
            for v in (u + 1)..n {
                if g.has_edge(u, v) && (deg(u) == 1 || deg(v) == 1) {
                    st.e1 += 1;
                }
                if g.has_edge(u, v)
                    && ((deg(u) == 1 && deg(v) == 2) || (deg(u) == 2 && deg(v) == 1))
                {
                    st.m_stat += 1;
                }
                if deg(u) == 1
                    && deg(v) == 1
                    && (0..n).any(|w| w != u && w != v && g.has_edge(u, w) && g.has_edge(v, w))
                {
                    st.s += 1;
                }
                if deg(u) == 2 && deg(v) == 2 {
                    let nu: Vec<bool> = (0..n).map(|w| w == u || g.has_edge(u, w)).collect();
                    let nv: Vec<bool> = (0..n).map(|w| w == v || g.has_edge(v, w)).collect();
                    if nu == nv {
                        st.t22 += 1;
                    }
                }
                // K2 component: adjacent, both degree 1.
                if g.has_edge(u, v) && deg(u) == 1 && deg(v) == 1 {
                    st.e2 += 1;
                }
            }
        }
        for a in 0..n {
            for b in (a + 1)..n {
                for c in (b + 1)..n {
                    let inside = [(a, b), (a, c), (b, c)];
                    let edges = inside.iter().filter(|&&(x, y)| g.has_edge(x, y)).count();
                    let degs: Vec<usize> = [a, b, c].iter().map(|&v| deg(v)).collect();
                    // A triple is a P3 component iff it induces a path and
                    // none of its vertices sees anything outside.
                    if edges == 2 && degs.iter().sum::<usize>() == 4 {
                        st.p3 += 1;
                    }
                    if edges == 3 && degs.iter().all(|&d| d == 2) {
                        st.c3 += 1;
                    }
                }
            }
        }
        st
    }

    #[test]
    fn statistics_match_naive_scan_on_all_small_graphs() {
        // Exhaustive over all labeled graphs with n <= 5, plus seeded n <= 8.
        for n in 1..=5usize {
            let pairs = n * (n - 1) / 2;
            for mask in 0u64..(1 << pairs) {
                let g = graph_from_edge_mask(n, mask);
                assert_eq!(local_statistics(&g), naive_statistics(&g), "n={n} mask={mask}");
            }
        }
        for seed in 0..60u64 {
            let n = 6 + (seed % 3) as usize;
            let g = random_graph(n, &ratio(1, 3), seed).unwrap();
            assert_eq!(local_statistics(&g), naive_statistics(&g), "seed={seed}");
        }
    }

    pub(crate) fn graph_from_edge_mask(n: usize, mask: u64) -> Graph {
        let mut g = Graph::new(n).unwrap();
        let mut bit = 0;
        for u in 0..n {
            for v in (u + 1)..n {
                if mask >> bit & 1 == 1 {
                    g.add_edge(u, v).unwrap();
                }
                bit += 1;
            }
        }
        g
    }

    #[test]
    fn gns_construction() {
        let g = generate_gns(3, 2).unwrap();
        assert_eq!(g.n(), 5);
        assert_eq!(g.degree(0), 3); // c0
        assert_eq!(g.closed_neighborhood(3), 0b11000); // N[q0] = {q0, q1}
        assert_eq!(g.closed_neighborhood(4), 0b11001); // N[q1] = {q0, q1, c0}

        let g = generate_gns(1, 2).unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 2), (1, 2)]);

        assert!(generate_gns(0, 2).is_err());
        assert!(generate_gns(1, 1).is_err());
        assert!(generate_gns(60, 4).is_err());
    }

    #[test]
    fn gns_edge_count_formula() {
        for (n_c, s) in [(1, 2), (3, 2), (10, 4), (5, 5), (25, 5)] {
            let g = generate_gns(n_c, s).unwrap();
            let expected = binom_us(n_c, 2) + binom_us(s, 2) + BigUint::from(s - 1);
            assert_eq!(BigUint::from(g.edge_count()), expected, "N={n_c} s={s}");
        }
    }

    #[test]
    fn gns_family_matches_bitset_graph() {
        for (n_c, s) in [(1, 2), (3, 2), (10, 4), (25, 5), (56, 6)] {
            let g = generate_gns(n_c, s).unwrap();
            let fam = GnsFamily::new(n_c, s).unwrap();
            assert_eq!(fam.vertex_count(), g.n());
            for v in g.vertices() {
                assert_eq!(fam.closed_size(v), g.closed_size(v), "N={n_c} s={s} v={v}");
            }
            for u in g.vertices() {
                for v in (u + 1)..g.n() {
                    assert_eq!(fam.union_size(u, v), g.union_size(u, v), "N={n_c} s={s} ({u},{v})");
                }
            }
        }
    }

    #[test]
    fn threshold_generation() {
        let k3: CreationSequence = "idd".parse().unwrap();
        let g = generate_threshold(&k3).unwrap();
        assert_eq!(g.edge_count(), 3);

        let k1: CreationSequence = "i".parse().unwrap();
        assert_eq!(generate_threshold(&k1).unwrap().n(), 1);

        assert!("d".parse::<CreationSequence>().is_err());
        assert!("".parse::<CreationSequence>().is_err());
        assert!("ixd".parse::<CreationSequence>().is_err());
    }

    #[test]
    fn figure_graph_creation() {
        let seq: CreationSequence = "iididiiididiii".parse().unwrap();
        assert_eq!(seq.len(), 14);
        assert_eq!(seq.dominating_positions(), vec![3, 5, 9, 11]);
        let g = generate_threshold(&seq).unwrap();
        // v3 joined to v1, v2; the later dominating vertices v5, v9, v11 join to it.
        assert_eq!(g.degree(2), 5);
    }

    #[test]
    fn recognize_threshold_basics() {
        assert_eq!(recognize_threshold(&path(4)), None);

        let k3 = recognize_threshold(&complete(3)).unwrap();
        assert_eq!(k3.to_string(), "idd");

        let two_k1 = recognize_threshold(&Graph::new(2).unwrap()).unwrap();
        assert_eq!(two_k1.to_string(), "ii");
    }

    #[test]
    fn recognize_round_trips_on_random_sequences() {
        for seed in 0..200u64 {
            let mut state = seed.wrapping_mul(0x9e3779b97f4a7c15).wrapping_add(1);
            let mut next = || {
                state ^= state << 13;
                state ^= state >> 7;
                state ^= state << 17;
                state
            };
            let n = 1 + (next() % 14) as usize;
            let labels: Vec<CreationLabel> = (0..n)
                .map(|j| {
                    if j == 0 || next() % 2 == 0 {
                        CreationLabel::Isolated
                    } else {
                        CreationLabel::Dominating
                    }
                })
                .collect();
            let seq = CreationSequence::new(labels).unwrap();
            let g = generate_threshold(&seq).unwrap();
            let back = recognize_threshold(&g).expect("generated graphs are threshold");
            let g2 = generate_threshold(&back).unwrap();
            assert_eq!(g2.degree_sequence_sorted(), g.degree_sequence_sorted());
            assert_eq!(g2.edge_count(), g.edge_count());
            assert!(recognize_threshold(&g2).is_some());
        }
    }

    #[test]
    fn random_graph_extremes_and_determinism() {
        let full = random_graph(5, &ratio(1, 1), 7).unwrap();
        assert_eq!(full.edge_count(), 10);
        let empty = random_graph(5, &ratio(0, 1), 7).unwrap();
        assert_eq!(empty.edge_count(), 0);
        assert!(random_graph(0, &ratio(1, 2), 7).is_err());
        assert!(random_graph(5, &ratio(3, 2), 7).is_err());

        let a = random_graph(20, &ratio(1, 2), 123).unwrap();
        let b = random_graph(20, &ratio(1, 2), 123).unwrap();
        let c = random_graph(20, &ratio(1, 2), 124).unwrap();
        assert_eq!(a, b);
        assert_ne!(a, c);
    }
}
