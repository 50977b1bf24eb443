//! Lower bounds on the domination ratio r_k and the unimodality criteria
//! built from them: the union bound over neighborhood-avoidance events
//! (σ_k), its degree-sequence proxy (σ), the spanning-tree overlap
//! correction (τ_k), and exact rational certificates for each criterion.
//!
//! Certificates never consult the enumeration oracle, so certification
//! scales past the subset-scan capacity; oracle confirmation of certified
//! verdicts is a separate test-harness step.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::combinatorics::{binom, half_pow, ratio_from_biguints, Rational};
use crate::enumeration::{domination_polynomial, r_k};
use crate::error::{Error, Result};
use crate::graph::{ClosedNeighborhoods, Graph};

/// Which sufficient condition a certificate speaks about.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Criterion {
    /// r_k >= (n-k)/(k+1) at some k >= n/2 (oracle-side tail check).
    BbTail,
    /// r_k >= 1 - σ_k (union bound; diagnostic, not a certifier by itself).
    SigmaUnion,
    /// σ(G) <= 1/(n+2) on n >= 6 vertices.
    SigmaSmall,
    /// (n-m)·2^{-δ'-1} <= 1/(n+2) with m universal vertices.
    UniversalVertex,
    /// 2^{δ+2} >= n(n+2), the integer form of the log-degree condition.
    MindegLog,
    /// σ_k - τ_k <= (2k+1-n)/(k+1) at k = ⌈n/2⌉.
    SigmaTau,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    CertifiedUnimodal,
    Inconclusive,
}

/// Machine-checkable record of a fired (or failed) criterion, with the two
/// exact rational sides of the inequality as stored evidence.
#[derive(Clone, Debug)]
pub struct Certificate {
    pub graph_id: String,
    pub criterion: Criterion,
    pub k: usize,
    pub lhs: Rational,
    pub rhs: Rational,
    /// The achieving spanning tree for the σ-τ criterion.
    pub spanning_tree: Option<Vec<(usize, usize)>>,
    pub verdict: Verdict,
}

impl Certificate {
    pub fn fired(&self) -> bool {
        self.verdict == Verdict::CertifiedUnimodal
    }
}

/// σ_k(G) = Σ_v C(n - |N[v]|, k) / C(n,k): the expected number of closed
/// neighborhoods avoided by a uniform random k-subset.
pub fn sigma_k<S: ClosedNeighborhoods + ?Sized>(sys: &S, k: usize) -> Rational {
    let n = sys.vertex_count();
    debug_assert!(k <= n);
    let mut num = BigInt::zero();
    for v in 0..n {
        num += BigInt::from(binom((n - sys.closed_size(v)) as u64, k as i64));
    }
    Rational::new(num, BigInt::from(binom(n as u64, k as i64)))
}

/// σ(G) = Σ_v 2^{-deg(v)-1}, the degree-sequence proxy for σ_k.
pub fn sigma_small<S: ClosedNeighborhoods + ?Sized>(sys: &S) -> Rational {
    (0..sys.vertex_count()).map(|v| half_pow(sys.closed_size(v) as u32)).sum()
}

/// w_k(u,v) = C(n - |N[u] ∪ N[v]|, k) / C(n,k) = |A_u ∩ A_v| / C(n,k),
/// the probability that a random k-subset avoids both closed neighborhoods.
pub fn pair_weight<S: ClosedNeighborhoods + ?Sized>(
    sys: &S,
    u: usize,
    v: usize,
    k: usize,
) -> Result<Rational> {
    if u == v {
        return Err(Error::Parameter("pair_weight requires two distinct vertices".into()));
    }
    let n = sys.vertex_count();
    Ok(ratio_from_biguints(
        &binom((n - sys.union_size(u, v)) as u64, k as i64),
        &binom(n as u64, k as i64),
    ))
}

/// τ_k(G): the maximum total pair weight over spanning trees of the
/// *complete* graph on the vertex set (tree edges need not be graph
/// edges). Returns the optimum and an achieving tree.
///
/// Greedy maximum spanning tree: only pairs with |N[u] ∪ N[v]| <= n-k can
/// carry positive weight, so those are enumerated, sorted by exact weight
/// (ties broken lexicographically), and merged Kruskal-style; the forest
/// is then completed with zero-weight edges in lexicographic order.
pub fn tau_k<S: ClosedNeighborhoods + ?Sized>(sys: &S, k: usize) -> (Rational, Vec<(usize, usize)>) {
    let n = sys.vertex_count();
    debug_assert!(k <= n);

    let mut positive: Vec<(BigInt, usize, usize)> = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            let avoid = n - sys.union_size(u, v);
            if avoid >= k {
                positive.push((BigInt::from(binom(avoid as u64, k as i64)), u, v));
            }
        }
    }
    positive.sort_by(|a, b| b.0.cmp(&a.0).then_with(|| (a.1, a.2).cmp(&(b.1, b.2))));

    let mut dsu = DisjointSets::new(n);
    let mut tree = Vec::with_capacity(n.saturating_sub(1));
    let mut total = BigInt::zero();
    for (w, u, v) in positive {
        if dsu.union(u, v) {
            total += w;
            tree.push((u, v));
            if tree.len() == n - 1 {
                break;
            }
        }
    }
    // Zero-weight connectors keep the tree spanning without changing τ.
    if tree.len() < n.saturating_sub(1) {
        'outer: for u in 0..n {
            for v in (u + 1)..n {
                if dsu.union(u, v) {
                    tree.push((u, v));
                    if tree.len() == n - 1 {
                        break 'outer;
                    }
                }
            }
        }
    }
    debug_assert_eq!(tree.len(), n.saturating_sub(1));

    (Rational::new(total, BigInt::from(binom(n as u64, k as i64))), tree)
}

struct DisjointSets {
    parent: Vec<usize>,
}

impl DisjointSets {
    fn new(n: usize) -> Self {
        DisjointSets { parent: (0..n).collect() }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra] = rb;
        true
    }
}

/// Outcome of comparing the oracle ratio r_k against a formula-side lower
/// bound.
#[derive(Clone, Debug)]
pub struct BoundCheck {
    pub holds: bool,
    pub r_k: Rational,
    pub bound: Rational,
}

/// Union bound (must always hold): r_k >= 1 - σ_k.
pub fn union_bound_check(g: &Graph, k: usize) -> Result<BoundCheck> {
    let r = r_k(g, k)?;
    let bound = Rational::one() - sigma_k(g, k);
    Ok(BoundCheck { holds: r >= bound, r_k: r, bound })
}

/// Overlap-corrected bound (must always hold): r_k >= 1 - σ_k + τ_k.
pub fn overlap_bound_check(g: &Graph, k: usize) -> Result<BoundCheck> {
    let r = r_k(g, k)?;
    let bound = Rational::one() - sigma_k(g, k) + tau_k(g, k).0;
    Ok(BoundCheck { holds: r >= bound, r_k: r, bound })
}

/// Tail criterion: for k >= n/2, r_k >= (n-k)/(k+1) forces the coefficient
/// tail d_k >= d_{k+1} >= ... >= d_n. Oracle-side: verifies the tail too.
pub fn bb_tail_check(g: &Graph, k: usize) -> Result<bool> {
    let n = g.n();
    if 2 * k < n {
        return Err(Error::Hypothesis(format!("tail criterion requires k >= n/2, got k = {k}")));
    }
    if k > n {
        return Err(Error::Parameter(format!("k = {k} exceeds n = {n}")));
    }
    let r = r_k(g, k)?;
    let threshold = Rational::new(BigInt::from(n - k), BigInt::from(k + 1));
    if r < threshold {
        return Ok(false);
    }
    // The guaranteed consequence, asserted against the oracle.
    let poly = domination_polynomial(g)?;
    for j in k..n {
        assert!(
            poly.coeff(j) >= poly.coeff(j + 1),
            "tail not nonincreasing at {j} despite r_{k} >= (n-k)/(k+1)"
        );
    }
    Ok(true)
}

fn mode_k(n: usize) -> usize {
    n.div_ceil(2)
}

/// σ-τ criterion at k = ⌈n/2⌉: fires iff σ_k - τ_k <= (2k+1-n)/(k+1).
pub fn certify_sigma_tau<S: ClosedNeighborhoods + ?Sized>(
    sys: &S,
    graph_id: impl Into<String>,
) -> Certificate {
    let n = sys.vertex_count();
    let k = mode_k(n);
    let (tau, tree) = tau_k(sys, k);
    let lhs = sigma_k(sys, k) - tau;
    let rhs = Rational::new(BigInt::from(2 * k + 1 - n), BigInt::from(k + 1));
    let verdict = if lhs <= rhs { Verdict::CertifiedUnimodal } else { Verdict::Inconclusive };
    Certificate {
        graph_id: graph_id.into(),
        criterion: Criterion::SigmaTau,
        k,
        lhs,
        rhs,
        spanning_tree: Some(tree),
        verdict,
    }
}

/// σ criterion: on n >= 6 vertices, σ(G) <= 1/(n+2) certifies unimodality.
pub fn certify_sigma_small<S: ClosedNeighborhoods + ?Sized>(
    sys: &S,
    graph_id: impl Into<String>,
) -> Certificate {
    let n = sys.vertex_count();
    let k = mode_k(n);
    let lhs = sigma_small(sys);
    let rhs = Rational::new(BigInt::one(), BigInt::from(n + 2));
    let verdict = if n >= 6 && lhs <= rhs { Verdict::CertifiedUnimodal } else { Verdict::Inconclusive };
    Certificate {
        graph_id: graph_id.into(),
        criterion: Criterion::SigmaSmall,
        k,
        lhs,
        rhs,
        spanning_tree: None,
        verdict,
    }
}

/// Universal-vertex criterion: with m universal vertices and all others of
/// degree at least δ', fires iff (n-m)·2^{-δ'-1} <= 1/(n+2). Vacuous with
/// lhs 0 on complete graphs.
pub fn certify_universal<S: ClosedNeighborhoods + ?Sized>(
    sys: &S,
    graph_id: impl Into<String>,
) -> Certificate {
    let n = sys.vertex_count();
    let k = mode_k(n);
    let universal = (0..n).filter(|&v| sys.closed_size(v) == n).count();
    let lhs = match (0..n).filter(|&v| sys.closed_size(v) < n).map(|v| sys.closed_size(v)).min() {
        Some(min_closed) => Rational::from(BigInt::from(n - universal)) * half_pow(min_closed as u32),
        None => Rational::zero(), // complete graph
    };
    let rhs = Rational::new(BigInt::one(), BigInt::from(n + 2));
    let verdict = if n >= 6 && lhs <= rhs { Verdict::CertifiedUnimodal } else { Verdict::Inconclusive };
    Certificate {
        graph_id: graph_id.into(),
        criterion: Criterion::UniversalVertex,
        k,
        lhs,
        rhs,
        spanning_tree: None,
        verdict,
    }
}

/// Minimum-degree criterion, in exact integer form: on n >= 4 vertices,
/// 2^{δ+2} >= n(n+2) certifies unimodality (no floating-point logarithms).
pub fn certify_mindeg_log<S: ClosedNeighborhoods + ?Sized>(
    sys: &S,
    graph_id: impl Into<String>,
) -> Certificate {
    let n = sys.vertex_count();
    let k = mode_k(n);
    let delta = (0..n).map(|v| sys.closed_size(v) - 1).min().expect("nonempty");
    let lhs = Rational::from(BigInt::one() << (delta + 2));
    let rhs = Rational::from(BigInt::from(n) * BigInt::from(n + 2));
    let verdict = if n >= 4 && lhs >= rhs { Verdict::CertifiedUnimodal } else { Verdict::Inconclusive };
    Certificate {
        graph_id: graph_id.into(),
        criterion: Criterion::MindegLog,
        k,
        lhs,
        rhs,
        spanning_tree: None,
        verdict,
    }
}

/// Runs every formula-side certifier on one graph.
pub fn certify_all<S: ClosedNeighborhoods + ?Sized>(
    sys: &S,
    graph_id: &str,
) -> Vec<Certificate> {
    vec![
        certify_sigma_tau(sys, graph_id),
        certify_sigma_small(sys, graph_id),
        certify_universal(sys, graph_id),
        certify_mindeg_log(sys, graph_id),
    ]
}
