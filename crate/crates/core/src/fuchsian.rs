//! Finitely generated torsion-free Fuchsian groups and the orbit
//! minimization behind the Kobayashi Fridman function.
//!
//! For a surface uniformized as a quotient of the disk or half-plane by a
//! discrete group Γ, the invariant at a point z = π(w) is
//!
//! ```text
//! h^k(z) = tanh( min_{γ ∈ Γ, γ ≠ id} rho(w, γ w) / 4 )
//! ```
//!
//! The engine enumerates reduced words in the generators breadth-first up
//! to `Tolerance::orbit_depth`, deduplicates group elements by their
//! normalized coefficient quadruple, and minimizes the displacement in the
//! sinh(rho/2) scale (monotone in rho, so no transcendental round-trips
//! inside the loop).
//!
//! The depth cutoff makes the raw minimum an upper bound in general. The
//! result therefore carries an `exact` flag, set only under conditions
//! where the bound is provably (cyclic groups: the displacement of γ^n is
//! strictly increasing in |n| for hyperbolic and parabolic γ, so the
//! minimum sits at n = ±1) or very defensibly (depth-stable value with a
//! frontier already displaced three times farther) the true minimum.
//! Discreteness itself is never verified — it is undecidable from floating
//! generators — but a displacement below 1e-8 flags the group as suspect.

use std::collections::HashSet;
use std::fmt;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::hyperbolic::{check_model_point, tanh_quarter_from_sinh_half, MapClass, MobiusMap, Model};
use crate::numerics::Tolerance;

/// Hard cap on the generator count; keeps packed letters in one byte and
/// the frontier fan-out sane.
pub const MAX_GENERATORS: usize = 64;

/// One letter of a word: a generator index with an optional inversion.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Letter {
    pub generator: usize,
    pub inverse: bool,
}

/// A reduced word in the group generators. Displays as e.g. `g0 g1^-1 g0`;
/// the empty word displays as `id`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    fn from_packed(packed: &[u8]) -> Self {
        Word(
            packed
                .iter()
                .map(|&b| Letter {
                    generator: (b >> 1) as usize,
                    inverse: b & 1 == 1,
                })
                .collect(),
        )
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "id");
        }
        for (k, l) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            write!(f, "g{}", l.generator)?;
            if l.inverse {
                write!(f, "^-1")?;
            }
        }
        Ok(())
    }
}

/// Outcome of the orbit minimization.
#[derive(Debug, Clone, PartialEq)]
pub struct OrbitSearchResult {
    /// The minimized rho(w, γw) over all visited non-identity elements.
    pub min_displacement: f64,
    /// A reduced word realizing the minimum (shortest, earliest found on ties).
    pub witness: Word,
    /// Whether the search certifies this as the true group minimum rather
    /// than a depth-limited upper bound. See the module docs for the rule.
    pub exact: bool,
    /// Number of distinct non-identity group elements measured.
    pub explored: usize,
}

impl OrbitSearchResult {
    /// True when the minimal displacement is small enough (< 1e-8) that the
    /// input generators likely fail to generate a discrete torsion-free
    /// group, which the constructor cannot check.
    pub fn discreteness_suspect(&self) -> bool {
        self.min_displacement < 1e-8
    }
}

/// A Fridman-function value together with the search that produced it.
#[derive(Debug, Clone, PartialEq)]
pub struct FridmanValue {
    /// tanh of a quarter of the minimal displacement; lies in (0, 1).
    pub value: f64,
    pub search: OrbitSearchResult,
}

/// A finitely generated torsion-free Fuchsian group, given by generators
/// that all act on one model. Discreteness is asserted by the caller.
#[derive(Debug, Clone)]
pub struct FuchsianGroup {
    generators: Vec<MobiusMap>,
    model: Model,
    label: Option<String>,
}

impl FuchsianGroup {
    /// Validates and stores generators: the list must be nonempty, at most
    /// [`MAX_GENERATORS`] long, single-model, and free of identity and
    /// elliptic elements (the torsion candidates — only torsion-free groups
    /// are supported).
    pub fn new(generators: Vec<MobiusMap>) -> Result<Self> {
        if generators.is_empty() {
            return Err(Error::InvalidArgument(
                "a Fuchsian group needs at least one generator".into(),
            ));
        }
        if generators.len() > MAX_GENERATORS {
            return Err(Error::InvalidArgument(format!(
                "at most {MAX_GENERATORS} generators are supported, got {}",
                generators.len()
            )));
        }
        let model = generators[0].model();
        for (i, g) in generators.iter().enumerate() {
            if g.model() != model {
                return Err(Error::ModelMismatch);
            }
            match g.classify() {
                MapClass::Identity => {
                    return Err(Error::InvalidArgument(format!(
                        "generator {i} is the identity"
                    )));
                }
                MapClass::Elliptic => {
                    return Err(Error::InvalidArgument(format!(
                        "generator {i} is elliptic; only torsion-free groups \
                         (no elliptic elements) are supported"
                    )));
                }
                _ => {}
            }
        }
        Ok(FuchsianGroup {
            generators,
            model,
            label: None,
        })
    }

    /// Convenience constructor for the cyclic group generated by one map.
    pub fn cyclic(g: MobiusMap) -> Result<Self> {
        Self::new(vec![g])
    }

    /// Attaches a free-form name (used by reports and file formats).
    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = Some(label.into());
        self
    }

    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    pub fn generators(&self) -> &[MobiusMap] {
        &self.generators
    }

    pub fn model(&self) -> Model {
        self.model
    }

    /// Minimizes rho(w, γw) over non-identity elements reachable as reduced
    /// words of length at most `tol.orbit_depth`.
    pub fn orbit_min_displacement(&self, w: Complex64, tol: &Tolerance) -> Result<OrbitSearchResult> {
        let (best_s, witness, exact, explored) = self.search(w, tol)?;
        Ok(OrbitSearchResult {
            min_displacement: 2.0 * best_s.asinh(),
            witness,
            exact,
            explored,
        })
    }

    /// The Kobayashi Fridman function of the quotient surface at the point
    /// covered by w: tanh of a quarter of the minimal displacement.
    pub fn fridman_k(&self, w: Complex64, tol: &Tolerance) -> Result<FridmanValue> {
        let (best_s, witness, exact, explored) = self.search(w, tol)?;
        Ok(FridmanValue {
            // tanh(rho/4) computed straight from sinh(rho/2), skipping the
            // asinh/sinh round-trip through the displacement itself
            value: tanh_quarter_from_sinh_half(best_s),
            search: OrbitSearchResult {
                min_displacement: 2.0 * best_s.asinh(),
                witness,
                exact,
                explored,
            },
        })
    }

    /// The injectivity-radius function of the quotient in its tanh-quarter
    /// normalization. For these quotients it coincides with [`fridman_k`];
    /// the separate name keeps call sites readable.
    pub fn injectivity_radius(&self, w: Complex64, tol: &Tolerance) -> Result<FridmanValue> {
        self.fridman_k(w, tol)
    }

    /// Evaluates [`fridman_k`] along a path of points, in order. Intended
    /// for probing boundary behavior (radial/non-tangential approaches).
    pub fn boundary_probe(
        &self,
        path: &[Complex64],
        tol: &Tolerance,
    ) -> Result<Vec<(Complex64, FridmanValue)>> {
        path.iter()
            .map(|&w| self.fridman_k(w, tol).map(|v| (w, v)))
            .collect()
    }

    // ------------------------------------------------------------------
    // the BFS core
    // ------------------------------------------------------------------

    /// Returns (best sinh(rho/2), witness, exact, explored).
    fn search(&self, w: Complex64, tol: &Tolerance) -> Result<(f64, Word, bool, usize)> {
        tol.validate()?;
        check_model_point(self.model, w, "base point")?;

        // Generator alphabet: each generator and its inverse, packed as
        // index << 1 | is_inverse. A letter cancels the previous one iff
        // their packed bytes differ exactly in the low bit.
        let mut alphabet: Vec<(MobiusMap, u8)> = Vec::with_capacity(2 * self.generators.len());
        for (i, g) in self.generators.iter().enumerate() {
            alphabet.push((*g, (i as u8) << 1));
            alphabet.push((g.inverse(), ((i as u8) << 1) | 1));
        }

        let mut visited: HashSet<u128> = HashSet::new();
        visited.insert(canonical_key(&MobiusMap::identity(self.model)));

        struct Node {
            map: MobiusMap,
            word: Vec<u8>,
            s: f64,
        }

        let mut best_s = f64::INFINITY;
        let mut best_word: Vec<u8> = Vec::new();
        let mut frontier: Vec<Node> = Vec::new();

        for &(map, byte) in &alphabet {
            if !visited.insert(canonical_key(&map)) {
                continue; // duplicate generator, or an involution's inverse
            }
            let s = map.sinh_half_at(w)?;
            if s < best_s {
                best_s = s;
                best_word = vec![byte];
            }
            frontier.push(Node {
                map,
                word: vec![byte],
                s,
            });
        }

        // best value after each completed depth, for the stability test
        let mut best_by_depth: Vec<f64> = vec![best_s];
        let mut enumeration_complete = false;

        for _depth in 2..=tol.orbit_depth {
            let mut next: Vec<Node> = Vec::new();
            for node in &frontier {
                let last = *node.word.last().expect("frontier words are nonempty");
                for &(gmap, byte) in &alphabet {
                    if byte == (last ^ 1) {
                        continue; // would cancel: not a reduced word
                    }
                    let map = node.map.compose(&gmap)?;
                    if !visited.insert(canonical_key(&map)) {
                        continue;
                    }
                    let s = map.sinh_half_at(w)?;
                    let mut word = node.word.clone();
                    word.push(byte);
                    if s < best_s {
                        best_s = s;
                        best_word = word.clone();
                    }
                    next.push(Node { map, word, s });
                }
            }
            if next.is_empty() {
                // Every longer reduced word collapsed onto an element we
                // already measured: the whole group has been enumerated.
                enumeration_complete = true;
                break;
            }
            frontier = next;
            best_by_depth.push(best_s);
        }

        let explored = visited.len() - 1; // identity was seeded, not measured
        if explored == 0 {
            // Cannot happen for a validated group (generators are not the
            // identity), but keep the invariant explicit.
            return Err(Error::NumericalInconsistency(
                "orbit search measured no non-identity element".into(),
            ));
        }

        let exact = if self.generators.len() == 1 {
            // Cyclic case: for a hyperbolic or parabolic generator the
            // displacement of γ^n grows strictly with |n|, so the minimum
            // over the whole group is already attained at n = ±1.
            true
        } else if enumeration_complete {
            true
        } else {
            // Depth-stability certificate: the best value has not moved for
            // three consecutive depths AND every frontier element is already
            // displaced more than three times the current best (in rho).
            let n = best_by_depth.len();
            let stable = n >= 3
                && (best_by_depth[n - 2] - best_by_depth[n - 1]).abs() <= tol.eps_compare
                && (best_by_depth[n - 3] - best_by_depth[n - 2]).abs() <= tol.eps_compare;
            let best_rho = 2.0 * best_s.asinh();
            let frontier_far = frontier
                .iter()
                .all(|node| 2.0 * node.s.asinh() > 3.0 * best_rho);
            stable && frontier_far
        };

        Ok((best_s, Word::from_packed(&best_word), exact, explored))
    }
}

// ----------------------------------------------------------------------
// element deduplication
// ----------------------------------------------------------------------

fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Quantizes one coefficient component for hashing: a 1e-12 grid while the
/// scaled value fits an i64, falling back to 12 significant digits for the
/// huge coefficients that long hyperbolic words produce (where absolute
/// 1e-12 rounding would overflow and where relative precision is what the
/// arithmetic preserves anyway).
fn quantize(x: f64) -> u64 {
    let scaled = x * 1e12;
    if scaled.abs() < 9.0e18 {
        (scaled.round() as i64) as u64
    } else {
        let e = x.abs().log10().floor();
        let mant = (x / 10f64.powf(e) * 1e11).round() as i64;
        (mant as u64) ^ ((e as i64 as u64).rotate_left(52)) ^ (1u64 << 63)
    }
}

/// Collapses a map to a dedup key: sign-canonicalize the ±(a,b,c,d)
/// ambiguity of the det-1 normalization, quantize each real component, and
/// mix through two independent splitmix64 chains into a u128.
fn canonical_key(m: &MobiusMap) -> u128 {
    let [a, b, c, d] = m.coeffs();
    let mut v = [a.re, a.im, b.re, b.im, c.re, c.im, d.re, d.im];
    for i in 0..8 {
        if v[i].abs() > 1e-9 {
            if v[i] < 0.0 {
                for x in v.iter_mut() {
                    *x = -*x;
                }
            }
            break;
        }
    }
    let mut h1: u64 = 0x243F_6A88_85A3_08D3;
    let mut h2: u64 = 0x1319_8A2E_0370_7344;
    for &x in &v {
        let q = quantize(x);
        h1 = splitmix64(h1 ^ q);
        h2 = splitmix64(h2 ^ q.rotate_left(32));
    }
    ((h1 as u128) << 64) | (h2 as u128)
}

// ============================================================================
// tests
// ============================================================================

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hyperbolic::{cayley_to_disk, rho_halfplane};

    const PI: f64 = std::f64::consts::PI;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn translation(t: f64) -> MobiusMap {
        MobiusMap::new(c(1.0, 0.0), c(t, 0.0), c(0.0, 0.0), c(1.0, 0.0), Model::HalfPlane).unwrap()
    }

    /// w ↦ mu·w with mu = lambda^2, i.e. diag(lambda, 1/lambda).
    fn dilation_sqrt(lambda: f64) -> MobiusMap {
        MobiusMap::new(
            c(lambda, 0.0),
            c(0.0, 0.0),
            c(0.0, 0.0),
            c(1.0 / lambda, 0.0),
            Model::HalfPlane,
        )
        .unwrap()
    }

    /// Two hyperbolic maps with orthogonal axes through distinct points —
    /// a free, discrete Schottky-type pair on the disk.
    fn schottky_pair() -> FuchsianGroup {
        let t = 2.0f64;
        // axis along the real diameter: SU(1,1) matrix [[cosh t, sinh t], [sinh t, cosh t]]
        let g1 = MobiusMap::new(
            c(t.cosh(), 0.0),
            c(t.sinh(), 0.0),
            c(t.sinh(), 0.0),
            c(t.cosh(), 0.0),
            Model::Disk,
        )
        .unwrap();
        // the same translation length along the imaginary diameter:
        // conjugate by the rotation z ↦ iz, giving off-diagonal factors ∓i
        let g2 = MobiusMap::new(
            c(t.cosh(), 0.0),
            c(0.0, -t.sinh()),
            c(0.0, t.sinh()),
            c(t.cosh(), 0.0),
            Model::Disk,
        )
        .unwrap();
        FuchsianGroup::new(vec![g1, g2]).unwrap()
    }

    // ---- construction ----

    #[test]
    fn constructor_rejects_bad_input() {
        assert!(FuchsianGroup::new(vec![]).is_err());

        let rot = {
            let half = Complex64::from_polar(1.0, 0.4);
            MobiusMap::new(half, c(0.0, 0.0), c(0.0, 0.0), half.conj(), Model::Disk).unwrap()
        };
        let err = FuchsianGroup::cyclic(rot).unwrap_err();
        assert!(err.to_string().contains("torsion-free"), "{err}");

        assert!(FuchsianGroup::cyclic(MobiusMap::identity(Model::Disk)).is_err());

        let mixed = FuchsianGroup::new(vec![
            translation(1.0),
            MobiusMap::new(c(1.0, 0.0), c(-0.3, 0.0), c(-0.3, 0.0), c(1.0, 0.0), Model::Disk)
                .unwrap(),
        ]);
        assert!(matches!(mixed, Err(Error::ModelMismatch)));

        let too_many = vec![translation(1.0); MAX_GENERATORS + 1];
        assert!(FuchsianGroup::new(too_many).is_err());
    }

    #[test]
    fn label_round_trips() {
        let g = FuchsianGroup::cyclic(translation(1.0))
            .unwrap()
            .with_label("strip");
        assert_eq!(g.label(), Some("strip"));
    }

    // ---- cyclic closed forms ----

    #[test]
    fn cyclic_translation_matches_closed_form() {
        // For ⟨w ↦ w + 2π⟩ at w = iy the n-th power displaces by
        // 2 asinh(nπ/y); the minimum sits at n = 1.
        let g = FuchsianGroup::cyclic(translation(2.0 * PI)).unwrap();
        let tol = Tolerance::default();
        for &y in &[0.5, 1.0, PI, 50.0] {
            let r = g.orbit_min_displacement(c(0.0, y), &tol).unwrap();
            let expected = 2.0 * (PI / y).asinh();
            assert!(
                (r.min_displacement - expected).abs() <= 1e-12 * expected,
                "y={y}: {} vs {expected}",
                r.min_displacement
            );
            assert!(r.exact);
            assert_eq!(r.witness.len(), 1);
        }
    }

    #[test]
    fn cyclic_dilation_matches_closed_form() {
        // ⟨w ↦ λ²w⟩ at ρe^{iθ}: minimal sinh(rho/2) is (1/λ - λ)/(2 sin θ).
        let lambda = 0.3;
        let g = FuchsianGroup::cyclic(dilation_sqrt(lambda)).unwrap();
        let tol = Tolerance::default();
        for &(radius, theta) in &[(1.0, 0.7), (4.0, 2.2), (0.05, PI / 2.0)] {
            let w = Complex64::from_polar(radius, theta);
            let r = g.orbit_min_displacement(w, &tol).unwrap();
            let expected = 2.0 * ((1.0 / lambda - lambda) / (2.0 * theta.sin())).asinh();
            assert!(
                (r.min_displacement - expected).abs() <= 1e-12 * expected,
                "w={w}: {} vs {expected}",
                r.min_displacement
            );
            assert!(r.exact);
        }
    }

    #[test]
    fn cyclic_explored_count_is_two_per_depth() {
        // γ^{±1}, ..., γ^{±depth} are pairwise distinct: 2·depth elements.
        let g = FuchsianGroup::cyclic(translation(2.0 * PI)).unwrap();
        let tol = Tolerance {
            orbit_depth: 12,
            ..Tolerance::default()
        };
        let r = g.orbit_min_displacement(c(0.0, 1.0), &tol).unwrap();
        assert_eq!(r.explored, 24);
    }

    // ---- engine values feeding the named invariants ----

    #[test]
    fn punctured_disk_value_at_e_minus_pi() {
        // z = e^{-π} lifts to w = -i ln z = iπ; sinh(rho/2) = π/π = 1 and
        // the invariant is tanh(asinh(1)/2) = √2 - 1.
        let g = FuchsianGroup::cyclic(translation(2.0 * PI)).unwrap();
        let v = g.fridman_k(c(0.0, PI), &Tolerance::default()).unwrap();
        assert!((v.value - (std::f64::consts::SQRT_2 - 1.0)).abs() < 1e-14);
        assert!(v.search.exact);
    }

    #[test]
    fn annulus_waist_value_is_injectivity_radius() {
        // λ for the annulus of inner radius 0.01; at θ = π/2 the invariant
        // equals (1-λ)/(1+λ).
        let lambda = (PI * PI / 0.01f64.ln()).exp();
        let g = FuchsianGroup::cyclic(dilation_sqrt(lambda)).unwrap();
        let v = g.fridman_k(c(0.0, 1.0), &Tolerance::default()).unwrap();
        let expected = (1.0 - lambda) / (1.0 + lambda);
        assert!(
            (v.value - expected).abs() < 1e-14,
            "{} vs {expected}",
            v.value
        );
        // frozen value, cross-checked at 40-digit precision
        assert!((v.value - 0.790055250293901).abs() < 1e-14);
        let alias = g.injectivity_radius(c(0.0, 1.0), &Tolerance::default()).unwrap();
        assert_eq!(alias.value, v.value);
    }

    #[test]
    fn base_point_independence_under_deck_transformations() {
        let g = schottky_pair();
        // depth 6 already holds the minimizing words with a wide margin and
        // keeps the 3^depth fan-out cheap
        let tol = Tolerance {
            orbit_depth: 6,
            ..Tolerance::default()
        };
        let w = cayley_to_disk(c(0.3, 1.7)).unwrap();
        let reference = g.fridman_k(w, &tol).unwrap().value;
        // move the base point by deck transformations γ1, γ2, γ1γ2⁻¹
        let gens = g.generators();
        let moved = [
            gens[0].apply(w).unwrap(),
            gens[1].apply(w).unwrap(),
            gens[0].compose(&gens[1].inverse()).unwrap().apply(w).unwrap(),
        ];
        for &m in &moved {
            let v = g.fridman_k(m, &tol).unwrap().value;
            assert!(
                (v - reference).abs() < 1e-10,
                "moved value {v} vs reference {reference}"
            );
        }
    }

    // ---- search behavior ----

    #[test]
    fn schottky_minimum_is_depth_stable() {
        let g = schottky_pair();
        let at = |depth| {
            let tol = Tolerance {
                orbit_depth: depth,
                ..Tolerance::default()
            };
            g.orbit_min_displacement(c(0.1, 0.2), &tol).unwrap()
        };
        let shallow = at(6);
        let deep = at(9);
        assert_eq!(shallow.min_displacement, deep.min_displacement);
        assert!(deep.exact, "deep search should certify via depth stability");
    }

    #[test]
    fn schottky_explored_counts_free_reduced_words() {
        // In a free group of rank 2 the number of nonempty reduced words of
        // length ≤ L is 4·(3^L - 1)/2; dedup must not collapse any of them.
        let g = schottky_pair();
        let tol = Tolerance {
            orbit_depth: 3,
            ..Tolerance::default()
        };
        let r = g.orbit_min_displacement(c(0.0, 0.0), &tol).unwrap();
        assert_eq!(r.explored, 4 + 12 + 36);
    }

    #[test]
    fn deeper_search_never_increases_the_minimum() {
        let g = schottky_pair();
        let mut last = f64::INFINITY;
        for depth in [1usize, 2, 4, 8] {
            let tol = Tolerance {
                orbit_depth: depth,
                ..Tolerance::default()
            };
            let r = g.orbit_min_displacement(c(0.35, -0.1), &tol).unwrap();
            assert!(r.min_displacement <= last + 1e-15);
            last = r.min_displacement;
        }
    }

    #[test]
    fn shallow_noncyclic_search_declines_to_certify() {
        let g = schottky_pair();
        let tol = Tolerance {
            orbit_depth: 2,
            ..Tolerance::default()
        };
        // depth 2 cannot have three stable depths
        let r = g.orbit_min_displacement(c(0.1, 0.2), &tol).unwrap();
        assert!(!r.exact);
    }

    #[test]
    fn conjugated_group_reports_the_same_minimum() {
        let g = schottky_pair();
        let tol = Tolerance {
            orbit_depth: 6,
            ..Tolerance::default()
        };
        let w = c(0.22, -0.35);
        // conjugate everything by a fixed disk automorphism σ
        let sigma = MobiusMap::new(
            c(1.0, 0.0),
            c(-0.4, 0.1),
            c(-0.4, -0.1),
            c(1.0, 0.0),
            Model::Disk,
        )
        .unwrap();
        let conj_gens: Vec<MobiusMap> = g
            .generators()
            .iter()
            .map(|h| sigma.compose(h).unwrap().compose(&sigma.inverse()).unwrap())
            .collect();
        let gc = FuchsianGroup::new(conj_gens).unwrap();
        let a = g.orbit_min_displacement(w, &tol).unwrap();
        let b = gc
            .orbit_min_displacement(sigma.apply(w).unwrap(), &tol)
            .unwrap();
        assert!(
            (a.min_displacement - b.min_displacement).abs() < 1e-10,
            "{} vs {}",
            a.min_displacement,
            b.min_displacement
        );
    }

    #[test]
    fn near_identity_generator_flags_discreteness() {
        // ⟨w ↦ w + 1e-9⟩ is formally parabolic but displaces i by ~1e-9:
        // any honest consumer should be warned.
        let g = FuchsianGroup::cyclic(translation(1e-9)).unwrap();
        let r = g
            .orbit_min_displacement(c(0.0, 1.0), &Tolerance::default())
            .unwrap();
        assert!(r.min_displacement > 0.0);
        assert!(r.discreteness_suspect());
    }

    #[test]
    fn witness_word_displays_readably() {
        let g = schottky_pair();
        let tol = Tolerance {
            orbit_depth: 2,
            ..Tolerance::default()
        };
        let r = g.orbit_min_displacement(c(0.1, 0.2), &tol).unwrap();
        let text = r.witness.to_string();
        assert!(text.starts_with('g'), "unexpected witness display: {text}");
        assert!(!r.witness.is_empty());

        // and the displacement the witness claims is reproducible by hand
        let mut m = MobiusMap::identity(g.model());
        for l in r.witness.letters() {
            let gen = g.generators()[l.generator];
            let gen = if l.inverse { gen.inverse() } else { gen };
            m = m.compose(&gen).unwrap();
        }
        let w = c(0.1, 0.2);
        let img = m.apply(w).unwrap();
        let d = crate::hyperbolic::rho_disk(w, img).unwrap();
        assert!((d - r.min_displacement).abs() < 1e-12);
    }

    // ---- boundary probes ----

    #[test]
    fn probe_toward_puncture_decreases() {
        let g = FuchsianGroup::cyclic(translation(2.0 * PI)).unwrap();
        let path = [c(0.0, 10.0), c(0.0, 100.0), c(0.0, 1000.0)];
        let vals = g.boundary_probe(&path, &Tolerance::default()).unwrap();
        assert!(vals[0].1.value > vals[1].1.value);
        assert!(vals[1].1.value > vals[2].1.value);
        assert!(vals[2].1.value < 0.01);
    }

    #[test]
    fn probe_toward_circle_boundary_increases() {
        let lambda = (PI * PI / 0.01f64.ln()).exp();
        let g = FuchsianGroup::cyclic(dilation_sqrt(lambda)).unwrap();
        let path: Vec<Complex64> = [1.0, 0.3, 0.01]
            .iter()
            .map(|&theta| Complex64::from_polar(1.0, theta))
            .collect();
        let vals = g.boundary_probe(&path, &Tolerance::default()).unwrap();
        assert!(vals[0].1.value < vals[1].1.value);
        assert!(vals[1].1.value < vals[2].1.value);
        assert!(vals[2].1.value > 0.99);
    }

    #[test]
    fn constant_path_gives_constant_values() {
        let g = FuchsianGroup::cyclic(translation(2.0 * PI)).unwrap();
        let p = c(0.0, 2.0);
        let vals = g.boundary_probe(&[p, p, p], &Tolerance::default()).unwrap();
        assert_eq!(vals[0].1.value, vals[1].1.value);
        assert_eq!(vals[1].1.value, vals[2].1.value);
    }

    // ---- displacement consistency with the metric module ----

    #[test]
    fn min_displacement_agrees_with_direct_metric() {
        let g = FuchsianGroup::cyclic(translation(2.0 * PI)).unwrap();
        let w = c(0.7, 3.0);
        let r = g.orbit_min_displacement(w, &Tolerance::default()).unwrap();
        let direct = rho_halfplane(w, w + c(2.0 * PI, 0.0)).unwrap();
        assert!((r.min_displacement - direct).abs() < 1e-13);
    }
}
