//! Ground-truth enumeration: the domination polynomial by bit-parallel
//! subset scan, the closed-neighborhood hypergraph and its independence
//! polynomial, and the reciprocity check tying the two together. Every
//! closed-form module is tested against this one.

use crate::combinatorics::{binom_us, ratio_from_biguints, Rational};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::polynomial::Polynomial;

/// Default cutoff for the 2^n subset scans: chosen so a full sweep stays
/// around a desk-scale minute. Callers may override at their own risk via
/// the `_capped` variants.
pub const ENUMERATION_CAP: usize = 26;

/// True iff the closed neighborhoods of `subset` cover every vertex.
pub fn is_dominating(g: &Graph, subset: u64) -> bool {
    let mut cover = 0u64;
    let mut rest = subset;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        cover |= g.closed_neighborhood(v);
    }
    cover == g.full_mask()
}

fn check_cap(n: usize, cap: usize) -> Result<()> {
    if n > cap {
        return Err(Error::Capacity { n, max: cap });
    }
    Ok(())
}

/// Precomputed unions of closed neighborhoods over all subsets of a block
/// of consecutive vertices.
fn union_table(g: &Graph, first: usize, bits: usize) -> Vec<u64> {
    let mut table = vec![0u64; 1 << bits];
    for mask in 1usize..(1 << bits) {
        let low = mask.trailing_zeros() as usize;
        table[mask] = table[mask & (mask - 1)] | g.closed_neighborhood(first + low);
    }
    table
}

/// Dominating-set counts by size, restricted to subsets whose high half
/// (vertices n/2..n) equals a mask in `hi_range`. Partial counts from
/// disjoint ranges combine by addition, so the scan can be partitioned
/// across workers.
pub fn domination_counts_in_range(
    g: &Graph,
    hi_range: std::ops::Range<u64>,
) -> Result<Vec<u64>> {
    let n = g.n();
    let lo_bits = n / 2;
    let hi_bits = n - lo_bits;
    if hi_range.end > (1 << hi_bits) {
        return Err(Error::Parameter(format!(
            "high-mask range end {} exceeds 2^{hi_bits}",
            hi_range.end
        )));
    }
    let lo_table = union_table(g, 0, lo_bits);
    let hi_table = union_table(g, lo_bits, hi_bits);
    let full = g.full_mask();
    let mut counts = vec![0u64; n + 1];
    for hi in hi_range {
        let hi_union = hi_table[hi as usize];
        let hi_pop = hi.count_ones() as usize;
        for (lo, lo_union) in lo_table.iter().enumerate() {
            if hi_union | lo_union == full {
                counts[hi_pop + lo.count_ones() as usize] += 1;
            }
        }
    }
    Ok(counts)
}

/// D(G,x): coefficient k counts the dominating k-subsets, exactly.
pub fn domination_polynomial(g: &Graph) -> Result<Polynomial> {
    domination_polynomial_capped(g, ENUMERATION_CAP)
}

/// `domination_polynomial` with an explicit subset-scan cutoff.
pub fn domination_polynomial_capped(g: &Graph, cap: usize) -> Result<Polynomial> {
    check_cap(g.n(), cap)?;
    let hi_bits = g.n() - g.n() / 2;
    let counts = domination_counts_in_range(g, 0..(1 << hi_bits))?;
    Ok(Polynomial::from_u64_coeffs(&counts))
}

/// D(G,x) as the product of per-component polynomials.
pub fn domination_polynomial_by_components(g: &Graph) -> Result<Polynomial> {
    domination_polynomial_by_components_capped(g, ENUMERATION_CAP)
}

pub fn domination_polynomial_by_components_capped(g: &Graph, cap: usize) -> Result<Polynomial> {
    let mut product = Polynomial::one();
    for comp in g.components() {
        let sub = g.induced(comp)?;
        product = product.mul(&domination_polynomial_capped(&sub, cap)?);
    }
    Ok(product)
}

/// Smallest dominating-set size γ(G).
pub fn domination_number(g: &Graph) -> Result<usize> {
    let poly = domination_polynomial_by_components(g)?;
    Ok(poly.low_degree().expect("the full vertex set dominates"))
}

/// One hyperedge N[v] with its originating vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HyperEdge {
    pub vertex: usize,
    pub members: u64,
}

/// The closed-neighborhood hypergraph: one hyperedge per vertex, duplicates
/// retained (twin vertices contribute identical hyperedges, and the degree
/// count relies on the multiplicity).
#[derive(Clone, Debug)]
pub struct NeighborhoodHypergraph {
    pub n: usize,
    pub hyperedges: Vec<HyperEdge>,
    /// Maximum number of hyperedges containing a single vertex; always
    /// Δ(G) + 1.
    pub max_degree: usize,
}

pub fn build_neighborhood_hypergraph(g: &Graph) -> NeighborhoodHypergraph {
    let hyperedges: Vec<HyperEdge> = g
        .vertices()
        .map(|v| HyperEdge { vertex: v, members: g.closed_neighborhood(v) })
        .collect();
    let max_degree = g
        .vertices()
        .map(|u| hyperedges.iter().filter(|e| e.members >> u & 1 == 1).count())
        .max()
        .expect("graphs are nonempty");
    assert_eq!(max_degree, g.max_degree() + 1);
    NeighborhoodHypergraph { n: g.n(), hyperedges, max_degree }
}

/// I(H,x): coefficient k counts the k-subsets containing no hyperedge.
pub fn independence_polynomial(h: &NeighborhoodHypergraph) -> Result<Polynomial> {
    independence_polynomial_capped(h, ENUMERATION_CAP)
}

pub fn independence_polynomial_capped(h: &NeighborhoodHypergraph, cap: usize) -> Result<Polynomial> {
    check_cap(h.n, cap)?;
    // Only inclusion-minimal hyperedges matter for the containment test.
    let mut minimal: Vec<u64> = Vec::new();
    for e in &h.hyperedges {
        if h.hyperedges.iter().any(|f| f.members != e.members && f.members & e.members == f.members)
        {
            continue;
        }
        if !minimal.contains(&e.members) {
            minimal.push(e.members);
        }
    }
    let mut counts = vec![0u64; h.n + 1];
    for subset in 0u64..(1 << h.n) {
        if minimal.iter().all(|&e| subset & e != e) {
            counts[subset.count_ones() as usize] += 1;
        }
    }
    Ok(Polynomial::from_u64_coeffs(&counts))
}

/// Checks D(G,x) = x^n I(H_G, 1/x) coefficientwise: d_k must equal the
/// number of (n-k)-element independent sets of the closed-neighborhood
/// hypergraph.
pub fn check_reciprocity(g: &Graph) -> Result<bool> {
    check_reciprocity_capped(g, ENUMERATION_CAP)
}

pub fn check_reciprocity_capped(g: &Graph, cap: usize) -> Result<bool> {
    let dom = domination_polynomial_capped(g, cap)?;
    let ind = independence_polynomial_capped(&build_neighborhood_hypergraph(g), cap)?;
    let n = g.n();
    Ok((0..=n).all(|k| dom.coeff(k) == ind.coeff(n - k)))
}

/// r_k(G) = d_k(G) / C(n,k), the probability that a uniformly random
/// k-subset dominates.
pub fn r_k(g: &Graph, k: usize) -> Result<Rational> {
    if k > g.n() {
        return Err(Error::Parameter(format!("k = {k} exceeds n = {}", g.n())));
    }
    let poly = domination_polynomial(g)?;
    Ok(ratio_from_biguints(&poly.coeff(k), &binom_us(g.n(), k)))
}

/// All of r_0..r_n from a single enumeration pass.
pub fn ratio_sequence(g: &Graph) -> Result<Vec<Rational>> {
    let poly = domination_polynomial(g)?;
    Ok(ratio_sequence_of(g.n(), &poly))
}

/// Ratio sequence of an already-computed domination polynomial.
pub fn ratio_sequence_of(n: usize, poly: &Polynomial) -> Vec<Rational> {
    (0..=n).map(|k| ratio_from_biguints(&poly.coeff(k), &binom_us(n, k))).collect()
}
