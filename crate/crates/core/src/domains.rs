//! Closed-form invariants for round annuli and punctured disks.
//!
//! For the annulus A_r = { r < |z| < 1 } with λ = exp(π²/ln r):
//!
//! ```text
//! S(z)   = max(|z|, r/|z|)
//! h^k(z) = (sqrt((1-λ²)² + 4λ² sin²θ) - 2λ sinθ) / (1-λ²),   θ = π ln|z| / ln r
//! ι      = (1-λ)/(1+λ)                                        (min of h^k, at |z| = √r)
//! ```
//!
//! The Carathéodory function h^c comes in two independent representations
//! that this module exposes side by side — an explicit infinite product,
//! and a ratio of Schottky–Klein prime functions
//!
//! ```text
//! ω(z, ζ) = (z - ζ) · Π_{n≥1} [(r^{2n}z - ζ)(r^{2n}ζ - z)] / [(r^{2n}z - z)(r^{2n}ζ - ζ)]
//! ```
//!
//! together with the Simha formula for the Carathéodory distance between a
//! positive and a negative real point, whose minimizer over the negative
//! axis sits at -√r. All infinite products run through
//! [`crate::numerics::eval_product`] and inherit its truncation and tail
//! reporting.
//!
//! For the punctured disk D* = D \ {0}:
//!
//! ```text
//! S(z) = h^c(z) = |z|,      h^k(z) = π / (t + sqrt(t² + π²)),   t = -ln|z|
//! ```
//!
//! (the h^k form is the rationalized, cancellation-free version of
//! (ln|z| + sqrt(ln²|z| + π²))/π), and with finitely many punctures p_i the
//! Carathéodory side generalizes to min_i |(z - p_i)/(1 - z·conj(p_i))|,
//! which still equals the squeezing function exactly; no closed h^k is
//! available there and the API says so rather than guessing.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::numerics::{eval_product, Tolerance};

const PI: f64 = std::f64::consts::PI;

/// Absolute slack for near-boundary rejection: evaluation within 1e-12 of a
/// domain boundary is refused instead of extrapolated.
const EDGE: f64 = 1e-12;

/// Selector between the two distances an invariant can be built from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MetricKind {
    Kobayashi,
    Caratheodory,
}

/// All invariants of one domain at one point. `hk`/`mk` are `None` exactly
/// when the domain has no computable Kobayashi side (a disk with punctures
/// away from the origin).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InvariantSample {
    pub z: Complex64,
    /// squeezing function S
    pub s: f64,
    /// Carathéodory Fridman function h^c
    pub hc: f64,
    /// Kobayashi Fridman function h^k
    pub hk: Option<f64>,
    /// quotient invariant S / h^c
    pub mc: f64,
    /// quotient invariant S / h^k
    pub mk: Option<f64>,
}

impl InvariantSample {
    /// Checks the defining inequalities with 1e-10 slack: 0 < S ≤ h^c ≤ h^k < 1
    /// (where defined) and the quotients in (0, 1].
    pub fn validate(&self) -> Result<()> {
        const SLACK: f64 = 1e-10;
        let fail = |msg: String| Err(Error::NumericalInconsistency(msg));
        if !(self.s > 0.0 && self.s < 1.0) {
            return fail(format!("S = {} outside (0,1) at z = {}", self.s, self.z));
        }
        if !(self.hc > 0.0 && self.hc < 1.0) {
            return fail(format!("h^c = {} outside (0,1) at z = {}", self.hc, self.z));
        }
        if self.hc < self.s - SLACK {
            return fail(format!(
                "chain violated at z = {}: S = {} > h^c = {}",
                self.z, self.s, self.hc
            ));
        }
        if let Some(hk) = self.hk {
            if !(hk > 0.0 && hk < 1.0) {
                return fail(format!("h^k = {hk} outside (0,1) at z = {}", self.z));
            }
            if hk < self.hc - SLACK {
                return fail(format!(
                    "chain violated at z = {}: h^c = {} > h^k = {hk}",
                    self.z, self.hc
                ));
            }
        }
        for (name, q) in [("S/h^c", Some(self.mc)), ("S/h^k", self.mk)] {
            if let Some(q) = q {
                if !(q > 0.0 && q <= 1.0 + SLACK) {
                    return fail(format!("{name} = {q} outside (0,1] at z = {}", self.z));
                }
            }
        }
        Ok(())
    }
}

/// Extracts the real part of a nominally real product value, refusing to
/// silently truncate a genuinely complex result.
fn real_part_checked(v: Complex64, what: &str) -> Result<f64> {
    if v.im.abs() >= 1e-10 {
        return Err(Error::NumericalInconsistency(format!(
            "{what} should be real but has imaginary residue {:e}",
            v.im
        )));
    }
    Ok(v.re)
}

// ============================================================================
// Annulus
// ============================================================================

/// The round annulus A_r = { z : r < |z| < 1 }, carrying its modulus
/// parameter λ = exp(π²/ln r) ∈ (0, 1).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Annulus {
    r: f64,
    lambda: f64,
}

impl Annulus {
    /// Requires 1e-12 < r < 1 - 1e-12.
    pub fn new(r: f64) -> Result<Self> {
        if !(r > 1e-12 && r < 1.0 - 1e-12) {
            return Err(Error::InvalidArgument(format!(
                "annulus inner radius must satisfy 1e-12 < r < 1 - 1e-12, got {r}"
            )));
        }
        Ok(Annulus {
            r,
            lambda: (PI * PI / r.ln()).exp(),
        })
    }

    pub fn r(&self) -> f64 {
        self.r
    }

    /// The multiplier λ = exp(π²/ln r) of the covering dilation w ↦ λ²w.
    pub fn lambda(&self) -> f64 {
        self.lambda
    }

    /// Validates interior membership (with the usual 1e-12 edge slack) and
    /// hands back |z|, which every formula here starts from.
    fn interior_modulus(&self, z: Complex64) -> Result<f64> {
        let x = z.norm();
        if !(x > self.r + EDGE && x < 1.0 - EDGE) {
            return Err(Error::OutOfDomain(format!(
                "|z| = {x} is not inside the annulus {} < |z| < 1",
                self.r
            )));
        }
        Ok(x)
    }

    /// Squeezing function max(|z|, r/|z|).
    pub fn squeezing(&self, z: Complex64) -> Result<f64> {
        let x = self.interior_modulus(z)?;
        Ok((x).max(self.r / x))
    }

    /// Kobayashi Fridman function
    ///
    /// ```text
    /// h^k(z) = (sqrt((1-λ²)² + 4λ² sin²θ) - 2λ sinθ) / (1-λ²),  θ = π ln|z|/ln r,
    /// ```
    ///
    /// evaluated in the rationalized form a / (hypot(a, b) + b) with
    /// a = 1-λ², b = 2λ sinθ, which is the same number without the
    /// subtraction.
    pub fn fridman_k(&self, z: Complex64) -> Result<f64> {
        let x = self.interior_modulus(z)?;
        let theta = PI * x.ln() / self.r.ln();
        let a = 1.0 - self.lambda * self.lambda;
        let b = 2.0 * self.lambda * theta.sin();
        Ok(a / (a.hypot(b) + b))
    }

    /// Global minimum of the Kobayashi Fridman function, (1-λ)/(1+λ),
    /// attained on the core circle |z| = √r.
    pub fn injectivity_radius(&self) -> f64 {
        (1.0 - self.lambda) / (1.0 + self.lambda)
    }

    /// Schottky–Klein prime function of the annulus,
    ///
    /// ```text
    /// ω(z, ζ) = (z - ζ) Π_{n≥1} [(r^{2n}z - ζ)(r^{2n}ζ - z)] / [(r^{2n}z - z)(r^{2n}ζ - ζ)].
    /// ```
    ///
    /// The arguments may lie outside the closed annulus (several formulas
    /// evaluate ω at -r^{-1/2}); only exact zeros are refused, since the
    /// denominators r^{2n}z - z = z(r^{2n} - 1) vanish there.
    pub fn sk_prime(&self, z: Complex64, zeta: Complex64, tol: &Tolerance) -> Result<Complex64> {
        if z.norm_sqr() == 0.0 || zeta.norm_sqr() == 0.0 {
            return Err(Error::InvalidArgument(
                "the prime function is singular at z = 0 and ζ = 0".into(),
            ));
        }
        let r = self.r;
        let product = eval_product(
            |n| {
                let q = r.powi(2 * n as i32);
                let num = (q * z - zeta) * (q * zeta - z);
                let den = (z * (q - 1.0)) * (zeta * (q - 1.0));
                num / den
            },
            tol,
        )?;
        Ok((z - zeta) * product.value)
    }

    /// Carathéodory Fridman function by the explicit product
    ///
    /// ```text
    /// h^c(z) = √r (1 + √r/x)(1 + x/√r) ( Π_{n≥1} [(1 + x r^{2n-1/2})(x + r^{2n+1/2})]
    ///                                          / [(1 + x r^{2n-3/2})(x + r^{2n-1/2})] )²
    /// ```
    ///
    /// with x = |z|. The product is truncated adaptively first and squared
    /// afterwards.
    pub fn fridman_c(&self, z: Complex64, tol: &Tolerance) -> Result<f64> {
        let x = self.interior_modulus(z)?;
        let r = self.r;
        let rh = r.sqrt();
        let product = eval_product(
            |n| {
                let q = r.powi(2 * n as i32);
                let num = (1.0 + x * q / rh) * (x + q * rh);
                let den = (1.0 + x * q / (r * rh)) * (x + q / rh);
                Complex64::new(num / den, 0.0)
            },
            tol,
        )?;
        let p = product.value.re;
        Ok(rh * (1.0 + rh / x) * (1.0 + x / rh) * p * p)
    }

    /// The same function through the prime-function representation
    ///
    /// ```text
    /// h^c(z) = 1/(r|z|) · ( ω(|z|, -√r) / ω(|z|, -1/√r) )².
    /// ```
    ///
    /// Kept as an independent code path so the two representations can be
    /// cross-checked; agreement to 1e-8 is part of the verification suite.
    pub fn fridman_c_prime_form(&self, z: Complex64, tol: &Tolerance) -> Result<f64> {
        let x = self.interior_modulus(z)?;
        let rh = self.r.sqrt();
        let xx = Complex64::new(x, 0.0);
        let w_in = self.sk_prime(xx, Complex64::new(-rh, 0.0), tol)?;
        let w_out = self.sk_prime(xx, Complex64::new(-1.0 / rh, 0.0), tol)?;
        let ratio = w_in / w_out;
        real_part_checked(ratio * ratio / (self.r * x), "prime-form h^c")
    }

    fn check_simha_pair(&self, z1: f64, z2: f64) -> Result<()> {
        if !(z1 > self.r + EDGE && z1 < 1.0 - EDGE) {
            return Err(Error::OutOfDomain(format!(
                "z1 = {z1} must lie on the positive real axis in ({}, 1)",
                self.r
            )));
        }
        if !(z2 > -1.0 + EDGE && z2 < -self.r - EDGE) {
            return Err(Error::OutOfDomain(format!(
                "z2 = {z2} must lie on the negative real axis in (-1, -{})",
                self.r
            )));
        }
        Ok(())
    }

    /// Simha's distance kernel between z1 ∈ (r, 1) and z2 ∈ (-1, -r):
    ///
    /// ```text
    /// F_{z1}(z2) = (-r/z2)(1 - z2/z1)(1 - z1 z2/r) · Q,
    /// Q = Π_{n≥1} [(1 - (z2/z1) r^{2n})(1 - (z1/z2) r^{2n})(1 - z1 z2 r^{2n-1})(1 - r^{2n+1}/(z1 z2))]
    ///           / [(1 - (z2/z1) r^{2n-1})(1 - (z1/z2) r^{2n-1})(1 - z1 z2 r^{2n-2})(1 - r^{2n}/(z1 z2))]
    /// ```
    ///
    /// which equals tanh(½ c(z1, z2)) for the Carathéodory distance c.
    pub fn simha_f(&self, z1: f64, z2: f64, tol: &Tolerance) -> Result<f64> {
        self.check_simha_pair(z1, z2)?;
        let r = self.r;
        let (a, b, p) = (z2 / z1, z1 / z2, z1 * z2);
        let product = eval_product(
            |n| {
                let q = r.powi(2 * n as i32); // r^{2n}
                let num = (1.0 - a * q) * (1.0 - b * q) * (1.0 - p * q / r) * (1.0 - q * r / p);
                let den =
                    (1.0 - a * q / r) * (1.0 - b * q / r) * (1.0 - p * q / (r * r)) * (1.0 - q / p);
                Complex64::new(num / den, 0.0)
            },
            tol,
        )?;
        let pre = (-r / z2) * (1.0 - a) * (1.0 - p / r);
        Ok(pre * product.value.re)
    }

    /// The prime-function representation of the same kernel,
    ///
    /// ```text
    /// F_{z1}(z2) = 1/(r z1) · [ω(z1, z2) ω(z1, r/z2)] / [ω(z1, 1/z2) ω(z1, z2/r)],
    /// ```
    ///
    /// kept independent for cross-representation checks.
    pub fn simha_f_prime_form(&self, z1: f64, z2: f64, tol: &Tolerance) -> Result<f64> {
        self.check_simha_pair(z1, z2)?;
        let r = self.r;
        let zz1 = Complex64::new(z1, 0.0);
        let at = |t: f64| self.sk_prime(zz1, Complex64::new(t, 0.0), tol);
        let num = at(z2)? * at(r / z2)?;
        let den = at(1.0 / z2)? * at(z2 / r)?;
        real_part_checked(num / den / (r * z1), "prime-form Simha kernel")
    }

    /// Carathéodory distance c(z1, z2) = 2 atanh F for the sign
    /// configuration the kernel is defined on (z1 > 0 > z2). Unbounded as
    /// z2 approaches -r.
    pub fn cara_distance(&self, z1: f64, z2: f64, tol: &Tolerance) -> Result<f64> {
        let f = self.simha_f(z1, z2, tol)?;
        if !(f > 0.0 && f < 1.0) {
            return Err(Error::NumericalInconsistency(format!(
                "distance kernel F = {f} left (0, 1); the points are too close to the boundary"
            )));
        }
        Ok(2.0 * f.atanh())
    }

    /// The conformal map of the annulus onto a circularly slit disk,
    ///
    /// ```text
    /// g(z) = ω(z, -√r) / (√r · ω(z, -1/√r)),
    /// ```
    ///
    /// normalized so g(-√r) = 0, |g| = 1 on |z| = 1, and g commutes with
    /// conjugation. Defined on the closed annulus minus the origin.
    pub fn slit_disk_map(&self, z: Complex64, tol: &Tolerance) -> Result<Complex64> {
        let x = z.norm();
        if x == 0.0 || x < self.r - EDGE || x > 1.0 + EDGE {
            return Err(Error::OutOfDomain(format!(
                "|z| = {x} is outside the closed annulus {} ≤ |z| ≤ 1 (minus 0)",
                self.r
            )));
        }
        let rh = self.r.sqrt();
        let w_in = self.sk_prime(z, Complex64::new(-rh, 0.0), tol)?;
        let w_out = self.sk_prime(z, Complex64::new(-1.0 / rh, 0.0), tol)?;
        Ok(w_in / (rh * w_out))
    }

    /// Quotient invariant m^d = S/h^d for the chosen distance. Strictly
    /// below 1 everywhere on the annulus, approaching 1 at both boundary
    /// circles.
    pub fn quotient_invariant(&self, kind: MetricKind, z: Complex64, tol: &Tolerance) -> Result<f64> {
        let s = self.squeezing(z)?;
        let h = match kind {
            MetricKind::Kobayashi => self.fridman_k(z)?,
            MetricKind::Caratheodory => self.fridman_c(z, tol)?,
        };
        Ok(s / h)
    }

    /// Every invariant at once; cheaper than separate calls when a grid
    /// needs all of them, and the natural unit for tabulated output.
    pub fn sample(&self, z: Complex64, tol: &Tolerance) -> Result<InvariantSample> {
        let s = self.squeezing(z)?;
        let hc = self.fridman_c(z, tol)?;
        let hk = self.fridman_k(z)?;
        Ok(InvariantSample {
            z,
            s,
            hc,
            hk: Some(hk),
            mc: s / hc,
            mk: Some(s / hk),
        })
    }
}

// ============================================================================
// Punctured disks
// ============================================================================

/// The unit disk with finitely many punctures. The origin-only instance is
/// the classical D*, the one case with a closed Kobayashi form.
#[derive(Debug, Clone, PartialEq)]
pub struct PuncturedDisk {
    punctures: Vec<Complex64>,
}

impl PuncturedDisk {
    /// Punctures must be nonempty, each well inside the disk
    /// (|p| < 1 - 1e-12), and pairwise farther apart than 1e-12.
    pub fn new(punctures: Vec<Complex64>) -> Result<Self> {
        if punctures.is_empty() {
            return Err(Error::InvalidArgument(
                "a punctured disk needs at least one puncture".into(),
            ));
        }
        for (i, p) in punctures.iter().enumerate() {
            if !(p.norm() < 1.0 - EDGE) {
                return Err(Error::InvalidArgument(format!(
                    "puncture {i} has modulus {} ≥ 1 - 1e-12",
                    p.norm()
                )));
            }
            for (j, q) in punctures.iter().enumerate().take(i) {
                if (p - q).norm() <= EDGE {
                    return Err(Error::InvalidArgument(format!(
                        "punctures {j} and {i} coincide to within 1e-12"
                    )));
                }
            }
        }
        Ok(PuncturedDisk { punctures })
    }

    /// D* itself: the single puncture at the origin.
    pub fn origin() -> Self {
        PuncturedDisk {
            punctures: vec![Complex64::new(0.0, 0.0)],
        }
    }

    pub fn punctures(&self) -> &[Complex64] {
        &self.punctures
    }

    /// True for the classical D*, the only shape with a Kobayashi closed form.
    pub fn is_origin_only(&self) -> bool {
        self.punctures.len() == 1 && self.punctures[0].norm_sqr() == 0.0
    }

    fn check_point(&self, z: Complex64) -> Result<()> {
        if !(z.norm() < 1.0 - EDGE) {
            return Err(Error::OutOfDomain(format!(
                "|z| = {} is not inside the unit disk",
                z.norm()
            )));
        }
        for p in &self.punctures {
            if (z - p).norm() <= EDGE {
                return Err(Error::OutOfDomain(format!(
                    "z = {z} sits on the puncture at {p}"
                )));
            }
        }
        Ok(())
    }

    /// min_i |(z - p_i)/(1 - z conj(p_i))| — the smallest Blaschke modulus
    /// over the punctures.
    fn blaschke_min(&self, z: Complex64) -> f64 {
        self.punctures
            .iter()
            .map(|p| ((z - p) / (Complex64::new(1.0, 0.0) - z * p.conj())).norm())
            .fold(f64::INFINITY, f64::min)
    }

    /// Squeezing function: min_i |(z - p_i)/(1 - z·conj(p_i))|. For the
    /// origin-only disk this is just |z|.
    pub fn squeezing(&self, z: Complex64) -> Result<f64> {
        self.check_point(z)?;
        Ok(self.blaschke_min(z))
    }

    /// Carathéodory Fridman function; identical to the squeezing function
    /// on every punctured disk (shared code path, so the quotient below is
    /// exactly 1).
    pub fn fridman_c(&self, z: Complex64) -> Result<f64> {
        self.check_point(z)?;
        Ok(self.blaschke_min(z))
    }

    /// Kobayashi Fridman function of D*:
    ///
    /// ```text
    /// h^k(z) = π / (t + sqrt(t² + π²)),   t = -ln|z|,
    /// ```
    ///
    /// the rationalized form of (ln|z| + sqrt(ln²|z| + π²))/π. Only the
    /// origin-only disk has this closed form; other puncture sets are
    /// refused.
    pub fn fridman_k(&self, z: Complex64) -> Result<f64> {
        if !self.is_origin_only() {
            return Err(Error::InvalidArgument(
                "the Kobayashi closed form exists only for the single puncture at 0".into(),
            ));
        }
        self.check_point(z)?;
        if z.norm_sqr() == 0.0 {
            return Err(Error::OutOfDomain("z = 0 is the puncture itself".into()));
        }
        let t = -z.norm().ln();
        Ok(PI / (t + t.hypot(PI)))
    }

    /// Quotient invariant m^d = S/h^d. The Carathéodory quotient is exactly
    /// 1 on every punctured disk; the Kobayashi quotient exists for the
    /// origin-only disk and tends to 0 at the puncture.
    pub fn quotient_invariant(&self, kind: MetricKind, z: Complex64) -> Result<f64> {
        let s = self.squeezing(z)?;
        match kind {
            MetricKind::Caratheodory => Ok(s / self.fridman_c(z)?),
            MetricKind::Kobayashi => Ok(s / self.fridman_k(z)?),
        }
    }

    /// Every invariant at once; `hk`/`mk` are present only for the
    /// origin-only disk.
    pub fn sample(&self, z: Complex64) -> Result<InvariantSample> {
        let s = self.squeezing(z)?;
        let hc = self.fridman_c(z)?;
        let hk = if self.is_origin_only() {
            Some(self.fridman_k(z)?)
        } else {
            None
        };
        Ok(InvariantSample {
            z,
            s,
            hc,
            hk,
            mc: s / hc,
            mk: hk.map(|h| s / h),
        })
    }
}

// ============================================================================
// unified dispatch
// ============================================================================

/// A domain with computable invariants, for callers that switch at runtime.
#[derive(Debug, Clone, PartialEq)]
pub enum Domain {
    Annulus(Annulus),
    Punctured(PuncturedDisk),
}

impl Domain {
    pub fn sample(&self, z: Complex64, tol: &Tolerance) -> Result<InvariantSample> {
        match self {
            Domain::Annulus(a) => a.sample(z, tol),
            Domain::Punctured(p) => p.sample(z),
        }
    }
}

// ============================================================================
// tests
// ============================================================================
