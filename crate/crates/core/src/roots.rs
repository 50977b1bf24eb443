//! Numerical root computation for domination polynomials and empirical
//! verification of the zero-location bounds: the linear modulus bound
//! e(Δ+1), the positive-ray threshold T_Δ, and angular margins around the
//! positive real axis.
//!
//! Floating point lives here and nowhere else; the thresholds themselves
//! stay exact rationals until the final comparison.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::ToPrimitive;

use crate::combinatorics::Rational;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::polynomial::Polynomial;

/// Residual tolerance relative to the largest coefficient.
pub const RESIDUAL_TOL: f64 = 1e-8;
/// Iteration budget for the simultaneous iteration.
pub const MAX_ITERATIONS: usize = 500;

/// Roots of a polynomial with the zero root factored out symbolically.
#[derive(Clone, Debug)]
pub struct RootSet {
    /// Nonzero roots with multiplicity (approximated by clusters).
    pub roots: Vec<Complex64>,
    /// Multiplicity of the root 0, i.e. the lowest nonzero coefficient
    /// index (the domination number for domination polynomials).
    pub zero_multiplicity: usize,
    /// Largest |p(z)| / max-coefficient over the returned roots.
    pub max_residual: f64,
}

impl RootSet {
    pub fn max_modulus(&self) -> f64 {
        self.roots.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }
}

/// Region verdicts for one polynomial against the degree-based bounds.
#[derive(Clone, Debug)]
pub struct RegionReport {
    pub delta: usize,
    /// e(Δ+1), the linear modulus bound.
    pub linear_bound: f64,
    pub max_modulus: f64,
    /// T_Δ (only defined for Δ >= 2).
    pub t_delta: Option<Rational>,
    /// Minimum distance from any root to the open ray (T_Δ, ∞).
    pub min_ray_distance: Option<f64>,
    /// Radius used for the angular margin, when one was requested.
    pub margin_radius: Option<f64>,
    /// min |arg z| over roots with |z| >= margin_radius (+∞ when vacuous).
    pub angular_margin: Option<f64>,
}

fn poly_to_f64(p: &Polynomial) -> Vec<f64> {
    let max = p.coeffs().iter().max().expect("nonzero");
    let max = max.to_f64().expect("coefficient fits f64 range");
    p.coeffs().iter().map(|c| c.to_f64().expect("coefficient fits f64 range") / max).collect()
}

/// Horner evaluation of p and p' at z.
fn eval(coeffs: &[f64], z: Complex64) -> (Complex64, Complex64) {
    let mut p = Complex64::new(0.0, 0.0);
    let mut dp = Complex64::new(0.0, 0.0);
    for &c in coeffs.iter().rev() {
        dp = dp * z + p;
        p = p * z + c;
    }
    (p, dp)
}

/// Finds all roots of `p`.
///
/// The zero root is removed exactly (integer coefficient shift) before any
/// numerics, then the remaining roots are found by Aberth–Ehrlich
/// simultaneous iteration with a deterministic start: points on the circle
/// of the Cauchy bound radius at angles 2π(j+1/2)/d, a conjugate-symmetric
/// configuration. Each returned root is validated by the relative residual
/// |p(z)| / max coefficient <= `tol`.
pub fn find_roots(p: &Polynomial, tol: f64) -> Result<RootSet> {
    if tol <= 0.0 {
        return Err(Error::Parameter("tolerance must be positive".into()));
    }
    let zero_multiplicity = p
        .low_degree()
        .ok_or_else(|| Error::Parameter("cannot root-find the zero polynomial".into()))?;
    if p.degree() == Some(0) {
        return Err(Error::Parameter("root finding requires degree >= 1".into()));
    }

    let reduced: Vec<f64> = poly_to_f64(p)[zero_multiplicity..].to_vec();
    let degree = reduced.len() - 1;
    if degree == 0 {
        return Ok(RootSet { roots: Vec::new(), zero_multiplicity, max_residual: 0.0 });
    }

    // Cauchy bound: every root has |z| < 1 + max |a_i / a_d|.
    let lead = reduced[degree];
    let radius =
        1.0 + reduced[..degree].iter().map(|a| (a / lead).abs()).fold(0.0, f64::max);

    let mut z: Vec<Complex64> = (0..degree)
        .map(|j| {
            let angle = 2.0 * std::f64::consts::PI * (j as f64 + 0.5) / degree as f64;
            Complex64::from_polar(radius, angle)
        })
        .collect();

    let mut best_residual = f64::INFINITY;
    for _ in 0..MAX_ITERATIONS {
        let mut max_step = 0.0f64;
        let mut max_residual = 0.0f64;
        for j in 0..degree {
            let (pv, dv) = eval(&reduced, z[j]);
            max_residual = max_residual.max(pv.norm());
            if pv.norm() == 0.0 {
                continue;
            }
            let newton = if dv.norm() == 0.0 {
                // Stationary point: nudge off it deterministically.
                Complex64::new(1e-12, 1e-12)
            } else {
                pv / dv
            };
            let mut repulsion = Complex64::new(0.0, 0.0);
            for (i, zi) in z.iter().enumerate() {
                if i != j {
                    repulsion += (z[j] - zi).inv();
                }
            }
            let denom = Complex64::new(1.0, 0.0) - newton * repulsion;
            let step = if denom.norm() < 1e-300 { newton } else { newton / denom };
            z[j] -= step;
            max_step = max_step.max(step.norm());
        }
        best_residual = best_residual.min(max_residual);
        if max_residual <= tol * 1e-3 || max_step < 1e-15 * radius.max(1.0) {
            break;
        }
    }

    // The coefficients are real, so the root multiset must equal its own
    // conjugate. Iteration noise (worst on multiple-root clusters) breaks
    // that at the 1e-16..1e-5 level; project back onto the symmetric
    // manifold and let the final residual check vouch for the adjustment.
    let z = symmetrize_conjugates(z);

    let max_residual =
        z.iter().map(|&zj| eval(&reduced, zj).0.norm()).fold(0.0, f64::max);
    if max_residual > tol {
        return Err(Error::Convergence { iterations: MAX_ITERATIONS, residual: max_residual });
    }
    Ok(RootSet { roots: z, zero_multiplicity, max_residual })
}

/// Pairs every root with a mirror partner (possibly itself) by greedily
/// matching the smallest |z_i - conj(z_j)| distances into an involution,
/// then averages each pair to (z_i + conj(z_j))/2. The result is exactly
/// conjugate-symmetric: matched pairs become exact conjugates and
/// self-matched roots land exactly on the real axis.
fn symmetrize_conjugates(z: Vec<Complex64>) -> Vec<Complex64> {
    let d = z.len();
    let mut candidates: Vec<(f64, usize, usize)> = Vec::with_capacity(d * (d + 1) / 2);
    for i in 0..d {
        for j in i..d {
            candidates.push(((z[i] - z[j].conj()).norm(), i, j));
        }
    }
    candidates.sort_by(|a, b| a.0.total_cmp(&b.0).then_with(|| (a.1, a.2).cmp(&(b.1, b.2))));

    let mut partner = vec![usize::MAX; d];
    for &(_, i, j) in &candidates {
        if partner[i] == usize::MAX && partner[j] == usize::MAX {
            partner[i] = j;
            partner[j] = i;
        }
    }

    let mut out = z.clone();
    for i in 0..d {
        let j = partner[i];
        out[i] = (z[i] + z[j].conj()) / 2.0;
    }
    out
}

/// T_Δ = (Δ-1)^{Δ+1} / Δ^Δ, the threshold of the root-free positive ray.
pub fn t_delta(delta: usize) -> Result<Rational> {
    if delta < 2 {
        return Err(Error::Parameter(format!("T_Δ requires Δ >= 2, got {delta}")));
    }
    let num = BigInt::from(delta as u64 - 1).pow(delta as u32 + 1);
    let den = BigInt::from(delta as u64).pow(delta as u32);
    Ok(Rational::new(num, den))
}

/// λ_s(M) = (M-1)^{M-1} / M^M, the disk radius of the zero-free region of
/// degree-M hypergraph independence polynomials.
pub fn shearer_radius(m: usize) -> Result<Rational> {
    if m < 2 {
        return Err(Error::Parameter(format!("λ_s requires M >= 2, got {m}")));
    }
    let num = BigInt::from(m as u64 - 1).pow(m as u32 - 1);
    let den = BigInt::from(m as u64).pow(m as u32);
    Ok(Rational::new(num, den))
}

/// λ_c(M) = (M-1)^{M-1} / (M-2)^M, the interval endpoint of the zero-free
/// ray region; satisfies λ_c(Δ+1) = 1/T_Δ.
pub fn critical_radius(m: usize) -> Result<Rational> {
    if m < 3 {
        return Err(Error::Parameter(format!("λ_c requires M >= 3, got {m}")));
    }
    let num = BigInt::from(m as u64 - 1).pow(m as u32 - 1);
    let den = BigInt::from(m as u64 - 2).pow(m as u32);
    Ok(Rational::new(num, den))
}

/// Rational → f64 rounded one ulp toward -∞, so that ray membership and
/// distances are judged conservatively.
fn to_f64_safe_low(r: &Rational) -> f64 {
    let v = r.to_f64().expect("thresholds are moderate rationals");
    if v > 0.0 {
        f64::from_bits(v.to_bits() - 1)
    } else {
        v
    }
}

/// Checks |z| < e(Δ+1) for every root (with a relative slack of 1e-9 on
/// the bound) and reports max modulus. Requires Δ >= 1.
pub fn check_linear_bound(g: &Graph, rs: &RootSet) -> Result<(bool, RegionReport)> {
    let delta = g.max_degree();
    if delta < 1 {
        return Err(Error::Hypothesis("linear root bound requires Δ >= 1".into()));
    }
    let linear_bound = std::f64::consts::E * (delta as f64 + 1.0);
    let max_modulus = rs.max_modulus();
    let ok = max_modulus < linear_bound * (1.0 - 1e-9);
    let report = RegionReport {
        delta,
        linear_bound,
        max_modulus,
        t_delta: t_delta(delta).ok(),
        min_ray_distance: None,
        margin_radius: None,
        angular_margin: None,
    };
    Ok((ok, report))
}

/// Distance of each root to the open ray (T_Δ, ∞) on the real axis, plus
/// the empirical angular margin min{|arg z| : |z| >= r}. Requires Δ >= 2
/// and r > T_Δ.
pub fn ray_and_angle_report(g: &Graph, rs: &RootSet, r: f64) -> Result<RegionReport> {
    let delta = g.max_degree();
    if delta < 2 {
        return Err(Error::Hypothesis("ray report requires Δ >= 2".into()));
    }
    let t = t_delta(delta)?;
    let t_low = to_f64_safe_low(&t);
    if r <= t_low {
        return Err(Error::Hypothesis(format!("margin radius r = {r} must exceed T_Δ = {t}")));
    }

    let ray_distance = |z: &Complex64| -> f64 {
        if z.re > t_low {
            z.im.abs()
        } else {
            (z - Complex64::new(t_low, 0.0)).norm()
        }
    };
    let min_ray_distance =
        rs.roots.iter().map(ray_distance).fold(f64::INFINITY, f64::min);
    let angular_margin = rs
        .roots
        .iter()
        .filter(|z| z.norm() >= r)
        .map(|z| z.arg().abs())
        .fold(f64::INFINITY, f64::min);

    let linear_bound = std::f64::consts::E * (delta as f64 + 1.0);
    Ok(RegionReport {
        delta,
        linear_bound,
        max_modulus: rs.max_modulus(),
        t_delta: Some(t),
        min_ray_distance: Some(min_ray_distance),
        margin_radius: Some(r),
        angular_margin: Some(angular_margin),
    })
}

/// Convenience wrapper: D(G,x) roots at the default tolerance.
pub fn domination_roots(g: &Graph) -> Result<RootSet> {
    let poly = crate::enumeration::domination_polynomial_by_components(g)?;
    find_roots(&poly, RESIDUAL_TOL)
}

/// T_Δ + 1, the default margin radius.
pub fn default_margin_radius(delta: usize) -> Result<f64> {
    Ok(t_delta(delta)?.to_f64().expect("moderate rational") + 1.0)
}
