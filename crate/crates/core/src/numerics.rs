//! Numerical policy and an adaptive evaluator for infinite products.
//!
//! Every special function in this crate that is defined by an infinite
//! product (the prime function omega(z,zeta), the Caratheodory-Fridman
//! product, the Simha product Q) funnels through [`eval_product`]. All of
//! those products have factors of the form 1 + O(r^(2n)) with 0 < r < 1, so
//! they converge geometrically and a simple "stop when the factor is close
//! enough to 1" rule is both cheap and safe. The kernel works over the
//! complex field even for real inputs so one implementation serves all.

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Numerical policy knobs shared across the crate.
///
/// The defaults are good for double precision: products truncated at
/// `eps_product = 1e-14` carry tails far below the `eps_compare = 1e-8`
/// used by the verification suites, and `orbit_depth = 12` is deep enough
/// that every cyclic-group minimum (always at exponent ±1) and the
/// small Schottky-style groups we target are found exactly.
#[derive(Debug, Clone, PartialEq)]
pub struct Tolerance {
    /// Truncation threshold for infinite products: stop at the first term
    /// with |term - 1| below this. Must lie in (0, 1).
    pub eps_product: f64,
    /// Comparison tolerance for cross-checks and verification suites.
    /// Must lie in (0, 1).
    pub eps_compare: f64,
    /// Hard cap on product terms before reporting non-convergence. ≥ 1.
    pub max_terms: usize,
    /// Word-length cap for group orbit searches. ≥ 1.
    pub orbit_depth: usize,
}

impl Default for Tolerance {
    fn default() -> Self {
        Tolerance {
            eps_product: 1e-14,
            eps_compare: 1e-8,
            max_terms: 10_000,
            orbit_depth: 12,
        }
    }
}

impl Tolerance {
    /// Checks the field invariants, returning `InvalidArgument` on the
    /// first violation. Call this after building a non-default policy
    /// (e.g. from CLI flags).
    pub fn validate(&self) -> Result<()> {
        for (name, v) in [
            ("eps_product", self.eps_product),
            ("eps_compare", self.eps_compare),
        ] {
            if !(v > 0.0 && v < 1.0) {
                return Err(Error::InvalidArgument(format!(
                    "{name} must lie strictly inside (0, 1), got {v:e}"
                )));
            }
        }
        if self.max_terms == 0 {
            return Err(Error::InvalidArgument("max_terms must be ≥ 1".into()));
        }
        if self.orbit_depth == 0 {
            return Err(Error::InvalidArgument("orbit_depth must be ≥ 1".into()));
        }
        Ok(())
    }
}

/// Outcome of an adaptive product evaluation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ProductResult {
    /// The truncated product Π_{n=1..terms_used} term(n).
    pub value: Complex64,
    /// Number of factors actually multiplied.
    pub terms_used: usize,
    /// Geometric estimate of the dropped tail: |term(N) - 1| / (1 - q̂),
    /// where q̂ is the last observed deviation ratio clamped to [0, 0.99].
    /// The dropped factors *multiply* the value, so this is a fractional
    /// (relative) bound: |true/value - 1| ≲ tail_bound for geometrically
    /// decaying factors. Zero when the product short-circuited at an exact
    /// zero factor.
    pub tail_bound: f64,
}

/// Evaluates Π_{n≥1} term(n) adaptively.
///
/// Multiplication stops at the first index N with |term(N) - 1| <
/// `tol.eps_product` (that factor is still included), or fails with
/// `NonConvergent` once `tol.max_terms` factors have been consumed without
/// reaching the threshold. A factor exactly equal to 0 is legal — the prime
/// function vanishes on an orbit — and short-circuits the whole product to
/// zero. Non-finite factors are rejected as `InvalidFactor`.
///
/// The closure must be a pure function of the index; it is invoked once per
/// index in increasing order starting from 1.
pub fn eval_product<F>(term: F, tol: &Tolerance) -> Result<ProductResult>
where
    F: Fn(usize) -> Complex64,
{
    tol.validate()?;

    let one = Complex64::new(1.0, 0.0);
    let mut value = one;
    // |term(n-1) - 1|, used for the observed geometric ratio q̂.
    let mut prev_dev: Option<f64> = None;
    let mut last_dev = f64::NAN;

    for n in 1..=tol.max_terms {
        let f = term(n);
        if !f.re.is_finite() || !f.im.is_finite() {
            return Err(Error::InvalidFactor { index: n });
        }
        if f.re == 0.0 && f.im == 0.0 {
            // A genuine zero of the product (e.g. omega(z, r^{2n} z)): the
            // remaining factors cannot change the value.
            return Ok(ProductResult {
                value: Complex64::new(0.0, 0.0),
                terms_used: n,
                tail_bound: 0.0,
            });
        }
        value *= f;
        let dev = (f - one).norm();
        if dev < tol.eps_product {
            // q̂ falls back to 0 when there is no previous deviation to
            // form a ratio with (N = 1, or an exactly-1 previous factor).
            let qhat = match prev_dev {
                Some(p) if p > 0.0 => (dev / p).clamp(0.0, 0.99),
                _ => 0.0,
            };
            return Ok(ProductResult {
                value,
                terms_used: n,
                tail_bound: dev / (1.0 - qhat),
            });
        }
        prev_dev = Some(dev);
        last_dev = dev;
    }

    Err(Error::NonConvergent {
        terms: tol.max_terms,
        last_deviation: last_dev,
    })
}

// ============================================================================
// tests
// ============================================================================
