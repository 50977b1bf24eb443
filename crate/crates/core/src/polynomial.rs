//! Dense polynomials with nonnegative arbitrary-precision coefficients,
//! and shape analysis (unimodality / log-concavity) of coefficient vectors.
//!
//! Domination and independence polynomials are coefficient-nonnegative, so
//! coefficients are stored as `BigUint` and negativity is ruled out by type.

use num_bigint::BigUint;
use num_traits::Zero;
use serde::ser::{Serialize, SerializeStruct, Serializer};

use crate::error::{Error, Result};

/// Dense coefficient vector indexed by degree, trailing zeros trimmed.
///
/// The zero polynomial is the empty vector and has `degree() == None`;
/// no integer sentinel is used.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    coeffs: Vec<BigUint>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Polynomial::monomial(0)
    }

    /// x^k.
    pub fn monomial(k: usize) -> Self {
        let mut coeffs = vec![BigUint::zero(); k + 1];
        coeffs[k] = BigUint::from(1u8);
        Polynomial { coeffs }
    }

    /// Builds a polynomial, trimming trailing zero coefficients.
    pub fn from_coeffs(mut coeffs: Vec<BigUint>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn from_u64_coeffs(coeffs: &[u64]) -> Self {
        Polynomial::from_coeffs(coeffs.iter().map(|&c| BigUint::from(c)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Highest index with a nonzero entry; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of x^k (zero beyond the stored length).
    pub fn coeff(&self, k: usize) -> BigUint {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    /// Dense coefficients, low to high, trailing zeros trimmed.
    pub fn coeffs(&self) -> &[BigUint] {
        &self.coeffs
    }

    /// Lowest index with a nonzero entry; `None` for the zero polynomial.
    pub fn low_degree(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// Exact convolution product.
    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![BigUint::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Polynomial::from_coeffs(out)
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            out.push(self.coeff(k) + other.coeff(k));
        }
        Polynomial::from_coeffs(out)
    }

    /// Multiplies by x^k.
    pub fn shift(&self, k: usize) -> Polynomial {
        if self.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = vec![BigUint::zero(); k];
        coeffs.extend_from_slice(&self.coeffs);
        Polynomial { coeffs }
    }

    /// Repeated-squaring power (used to expand (1+x)^b without binomials).
    pub fn pow(&self, mut e: usize) -> Polynomial {
        let mut base = self.clone();
        let mut acc = Polynomial::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Shape analysis of the full dense coefficient vector (including the
    /// leading zeros below the lowest nonzero degree).
    pub fn shape(&self) -> Result<ShapeReport> {
        shape_report(&self.coeffs)
    }
}

impl std::fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Polynomial{:?}", self.coeffs.iter().map(|c| c.to_string()).collect::<Vec<_>>())
    }
}

impl std::fmt::Display for Polynomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{c}")?,
                _ => {
                    if !c.is_zero() && c != &BigUint::from(1u8) {
                        write!(f, "{c}")?;
                    }
                    if k == 1 {
                        write!(f, "x")?;
                    } else {
                        write!(f, "x^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

/// Serializes as {"coeffs": ["d0", "d1", ...]} with decimal strings low-to-high.
impl Serialize for Polynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("Polynomial", 1)?;
        let strings: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        s.serialize_field("coeffs", &strings)?;
        s.end()
    }
}

/// Shape of a coefficient sequence.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct ShapeReport {
    /// Nondecreasing up to some index, nonincreasing after it.
    pub is_unimodal: bool,
    /// All indices attaining the maximum value.
    pub modes: Vec<usize>,
    /// c_k^2 >= c_{k-1} c_{k+1} for every interior k.
    pub is_log_concave: bool,
    /// First interior index violating log-concavity, if any.
    pub first_lc_failure: Option<usize>,
    /// A zero entry strictly between two nonzero entries.
    pub has_internal_zeros: bool,
}

/// Analyzes a nonempty sequence of nonnegative integers.
pub fn shape_report(coeffs: &[BigUint]) -> Result<ShapeReport> {
    if coeffs.is_empty() {
        return Err(Error::Parameter("shape_report requires a nonempty sequence".into()));
    }

    // Unimodal iff no strict increase occurs after the first strict decrease.
    let mut seen_decrease = false;
    let mut is_unimodal = true;
    for w in coeffs.windows(2) {
        if w[1] < w[0] {
            seen_decrease = true;
        } else if w[1] > w[0] && seen_decrease {
            is_unimodal = false;
            break;
        }
    }

    let max = coeffs.iter().max().expect("nonempty");
    let modes: Vec<usize> =
        coeffs.iter().enumerate().filter(|(_, c)| *c == max).map(|(i, _)| i).collect();

    let mut first_lc_failure = None;
    for k in 1..coeffs.len().saturating_sub(1) {
        if &coeffs[k] * &coeffs[k] < &coeffs[k - 1] * &coeffs[k + 1] {
            first_lc_failure = Some(k);
            break;
        }
    }
    let is_log_concave = first_lc_failure.is_none();

    let first_nonzero = coeffs.iter().position(|c| !c.is_zero());
    let last_nonzero = coeffs.iter().rposition(|c| !c.is_zero());
    let has_internal_zeros = match (first_nonzero, last_nonzero) {
        (Some(a), Some(b)) => coeffs[a..=b].iter().any(|c| c.is_zero()),
        _ => false,
    };

    // Classical implication, kept as a structural cross-check.
    debug_assert!(!(is_log_concave && !has_internal_zeros) || is_unimodal);

    Ok(ShapeReport { is_unimodal, modes, is_log_concave, first_lc_failure, has_internal_zeros })
}
