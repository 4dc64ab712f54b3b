//! Von Neumann entropy of the Gibbs state exp(-tau H) / Z built from a graph
//! matrix spectrum, together with closed-form class oracles, spectral bounds,
//! threshold classifiers and tau-sweep curves.
//!
//! Conventions applied in exactly one place ([`shifted_exponents`]): the
//! adjacency kind is evaluated on the negated spectrum (H = -A), and every
//! spectrum is shifted by its minimum before exponentiation. The shift is
//! entropy-preserving and keeps exp(-tau mu) in [0, 1], so large tau never
//! overflows. Reported `log_partition` / `trace_term` values are post-shift.
//! Terms with tau * mu > 745 underflow below the double-precision range and
//! contribute exactly 0 to both sums.

use crate::error::{Error, Result};
use crate::generators::{generate, GeneratorSpec, RngSeed};
use crate::graph::Graph;
use crate::matrices::{build_matrix, MatrixKind};
use crate::spectral::{
    bessel_i0_scaled, bessel_i1_scaled, eigenvalues_sym, lambert_w0, lambert_w_minus1, Spectrum,
    DEFAULT_EIG_TOL,
};

/// Exponent beyond which exp(-t) underflows to zero in f64.
const UNDERFLOW_EXPONENT: f64 = 745.0;

/// Relative tolerance for treating an eigenvalue as zero when counting
/// components spectrally.
const ZERO_EIGENVALUE_TOL: f64 = 1e-8;

/// Entropy of one Gibbs state, split into its two terms:
/// `entropy = trace_term + log_partition` holds exactly by construction.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GibbsEntropyResult {
    pub tau: f64,
    /// Von Neumann entropy in nats; lies in [0, log n].
    pub entropy: f64,
    /// log Z' after the spectral shift.
    pub log_partition: f64,
    /// tau * Tr(H rho) after the spectral shift.
    pub trace_term: f64,
}

/// Strictly increasing tau values. A leading 0 is allowed and evaluated as
/// the exact uniform-state special case.
#[derive(Debug, Clone, PartialEq)]
pub struct TauGrid {
    points: Vec<f64>,
}

impl TauGrid {
    pub fn from_points(points: Vec<f64>) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::domain("tau grid must contain at least one point"));
        }
        if points.iter().any(|t| !t.is_finite() || *t < 0.0) {
            return Err(Error::domain("tau grid points must be finite and >= 0"));
        }
        if points.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::domain("tau grid must be strictly increasing"));
        }
        Ok(TauGrid { points })
    }

    pub fn linear(min: f64, max: f64, count: usize) -> Result<Self> {
        if count == 0 {
            return Err(Error::domain("tau grid needs count >= 1"));
        }
        if count == 1 {
            return TauGrid::from_points(vec![min]);
        }
        let step = (max - min) / (count - 1) as f64;
        let points = (0..count).map(|i| min + step * i as f64).collect();
        TauGrid::from_points(points)
    }

    pub fn log_spaced(min: f64, max: f64, count: usize) -> Result<Self> {
        if !(min > 0.0) {
            return Err(Error::domain("log-spaced tau grid needs min > 0"));
        }
        if count == 0 {
            return Err(Error::domain("tau grid needs count >= 1"));
        }
        if count == 1 {
            return TauGrid::from_points(vec![min]);
        }
        let (lo, hi) = (min.ln(), max.ln());
        let step = (hi - lo) / (count - 1) as f64;
        let points = (0..count).map(|i| (lo + step * i as f64).exp()).collect();
        TauGrid::from_points(points)
    }

    /// 200 log-spaced points over [1e-3, 1e3], the default sweep range.
    pub fn default_sweep() -> Self {
        TauGrid::log_spaced(1e-3, 1e3, 200).expect("valid default grid")
    }

    pub fn points(&self) -> &[f64] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
}

/// One sweep sample.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CurvePoint {
    pub tau: f64,
    pub entropy: f64,
    /// entropy / log n for n >= 2; for n <= 1 the entropy itself is stored.
    pub normalized_entropy: f64,
}

/// Sampled (tau, S, S / log n) triples for one graph (or ensemble) and
/// matrix kind.
#[derive(Debug, Clone, PartialEq)]
pub struct EntropyCurve {
    pub kind: MatrixKind,
    pub n: usize,
    pub samples: Vec<CurvePoint>,
    pub ensemble_size: usize,
}

/// The (negated for adjacency, then min-shifted) exponents mu_i >= 0, in
/// spectrum index order. At least one entry is exactly zero.
fn shifted_exponents<'a>(
    spec: &'a Spectrum,
    kind: MatrixKind,
) -> impl Iterator<Item = f64> + 'a {
    let (sign, reference) = match kind {
        // H = -A: the paper's S(rho_A) := S(rho_{-A}) convention
        MatrixKind::Adjacency => (-1.0, spec.largest()),
        MatrixKind::Laplacian | MatrixKind::NormalizedLaplacian => (1.0, spec.smallest()),
    };
    spec.values().iter().map(move |&v| sign * (v - reference))
}

fn validate_gibbs_args(spec: &Spectrum, tau: f64) -> Result<()> {
    if spec.is_empty() {
        return Err(Error::domain("entropy of an empty spectrum"));
    }
    if !tau.is_finite() || tau < 0.0 {
        return Err(Error::domain(format!("tau = {tau} must be finite and >= 0")));
    }
    Ok(())
}

/// Gibbs-state entropy S = tau Tr(H rho) + log Z evaluated over the shifted
/// spectrum. tau = 0 short-circuits to exactly log n (uniform state).
pub fn gibbs_entropy(spec: &Spectrum, tau: f64, kind: MatrixKind) -> Result<GibbsEntropyResult> {
    validate_gibbs_args(spec, tau)?;
    if tau == 0.0 {
        let log_n = (spec.len() as f64).ln();
        return Ok(GibbsEntropyResult {
            tau,
            entropy: log_n,
            log_partition: log_n,
            trace_term: 0.0,
        });
    }
    let mut z = 0.0f64;
    let mut weighted = 0.0f64;
    for mu in shifted_exponents(spec, kind) {
        let t = tau * mu;
        if t > UNDERFLOW_EXPONENT {
            continue;
        }
        let w = (-t).exp();
        z += w;
        weighted += mu * w;
    }
    let trace_term = tau * weighted / z;
    let log_partition = z.ln();
    Ok(GibbsEntropyResult { tau, entropy: trace_term + log_partition, log_partition, trace_term })
}

/// Independent evaluation route: Shannon entropy -sum p_i log p_i of the
/// Boltzmann weights p_i = exp(-tau mu_i) / Z', with 0 log 0 := 0. Shares
/// the sign/shift conventions with [`gibbs_entropy`] but not the algebra.
pub fn shannon_entropy_of_gibbs_weights(
    spec: &Spectrum,
    tau: f64,
    kind: MatrixKind,
) -> Result<f64> {
    validate_gibbs_args(spec, tau)?;
    let weights: Vec<f64> = shifted_exponents(spec, kind)
        .map(|mu| {
            let t = tau * mu;
            if t > UNDERFLOW_EXPONENT {
                0.0
            } else {
                (-t).exp()
            }
        })
        .collect();
    let z: f64 = weights.iter().sum();
    let mut s = 0.0f64;
    for w in weights {
        if w > 0.0 {
            let p = w / z;
            s -= p * p.ln();
        }
    }
    Ok(s)
}

fn normalized(entropy: f64, n: usize) -> f64 {
    if n >= 2 {
        entropy / (n as f64).ln()
    } else {
        entropy
    }
}

/// Evaluates a curve from an already computed spectrum.
pub fn curve_from_spectrum(
    spec: &Spectrum,
    kind: MatrixKind,
    grid: &TauGrid,
) -> Result<EntropyCurve> {
    let n = spec.len();
    let samples = grid
        .points()
        .iter()
        .map(|&tau| {
            let s = gibbs_entropy(spec, tau, kind)?.entropy;
            Ok(CurvePoint { tau, entropy: s, normalized_entropy: normalized(s, n) })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(EntropyCurve { kind, n, samples, ensemble_size: 1 })
}

/// One eigendecomposition followed by per-tau evaluation.
pub fn entropy_curve(g: &Graph, kind: MatrixKind, grid: &TauGrid) -> Result<EntropyCurve> {
    let m = build_matrix(g, kind)?;
    let spec = eigenvalues_sym(&m, DEFAULT_EIG_TOL)?;
    curve_from_spectrum(&spec, kind, grid)
}

/// Arithmetic mean of per-graph entropy curves over `samples` draws seeded
/// `seed, seed+1, ...`. Draws violating the kind's preconditions (isolated
/// vertices under the normalized Laplacian) are rejected and redrawn, with a
/// hard cap of `10 * samples` total draws.
pub fn ensemble_average_curve(
    spec: &GeneratorSpec,
    kind: MatrixKind,
    grid: &TauGrid,
    samples: usize,
    seed: RngSeed,
) -> Result<EntropyCurve> {
    ensemble_average_curve_with(spec, kind, grid, samples, seed, Ok)
}

/// [`ensemble_average_curve`] with a preprocessing step (largest component,
/// BFS-nearest subgraph) applied to every draw before the kind check.
/// For ensembles whose preprocessing changes the order, the stored `n` and
/// the normalization baseline come from the first accepted sample.
pub fn ensemble_average_curve_with(
    spec: &GeneratorSpec,
    kind: MatrixKind,
    grid: &TauGrid,
    samples: usize,
    seed: RngSeed,
    preprocess: impl Fn(Graph) -> Result<Graph>,
) -> Result<EntropyCurve> {
    if samples == 0 {
        return Err(Error::domain("ensemble needs samples >= 1"));
    }
    let mut accepted = 0usize;
    let mut draws = 0usize;
    let mut cursor = seed.0;
    let mut sums = vec![0.0f64; grid.len()];
    let mut first_n: Option<usize> = None;
    while accepted < samples {
        if draws >= 10 * samples {
            return Err(Error::Generation(format!(
                "{draws} draws produced only {accepted}/{samples} graphs satisfying the \
                 {kind} preconditions"
            )));
        }
        let g = generate(spec, RngSeed(cursor))?;
        cursor = cursor.wrapping_add(1);
        draws += 1;
        let g = preprocess(g)?;
        if kind == MatrixKind::NormalizedLaplacian && g.degrees().iter().any(|&d| d == 0) {
            continue; // rejected draw
        }
        let curve = entropy_curve(&g, kind, grid)?;
        for (acc, point) in sums.iter_mut().zip(&curve.samples) {
            *acc += point.entropy;
        }
        first_n.get_or_insert(g.order());
        accepted += 1;
    }
    let n = first_n.expect("samples >= 1 accepted");
    let samples_vec = grid
        .points()
        .iter()
        .zip(&sums)
        .map(|(&tau, &total)| {
            let mean = total / samples as f64;
            CurvePoint { tau, entropy: mean, normalized_entropy: normalized(mean, n) }
        })
        .collect();
    Ok(EntropyCurve { kind, n, samples: samples_vec, ensemble_size: samples })
}

/// Graph classes with a closed-form finite-n entropy expression.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClosedFormClass {
    /// Laplacian of K_n.
    CompleteLaplacian { n: usize },
    /// Normalized Laplacian of K_n (needs n >= 2).
    CompleteNormalized { n: usize },
    /// Adjacency of K_{n1,n2}.
    BipartiteAdjacency { n1: usize, n2: usize },
    /// Laplacian of K_{n1,n1}.
    EqualBipartiteLaplacian { n1: usize },
    /// Normalized Laplacian of K_{n1,n1}.
    EqualBipartiteNormalized { n1: usize },
    /// Laplacian of the star K_{n1,1}.
    StarLaplacian { n1: usize },
    /// Normalized Laplacian of the star K_{n1,1}.
    StarNormalized { n1: usize },
}

impl ClosedFormClass {
    /// Order of the underlying graph.
    pub fn order(self) -> usize {
        match self {
            ClosedFormClass::CompleteLaplacian { n } | ClosedFormClass::CompleteNormalized { n } => n,
            ClosedFormClass::BipartiteAdjacency { n1, n2 } => n1 + n2,
            ClosedFormClass::EqualBipartiteLaplacian { n1 }
            | ClosedFormClass::EqualBipartiteNormalized { n1 } => 2 * n1,
            ClosedFormClass::StarLaplacian { n1 } | ClosedFormClass::StarNormalized { n1 } => n1 + 1,
        }
    }
}

/// Exact finite-n entropy of the special classes, evaluated from the known
/// analytic spectra in product form (no eigensolver, no generic summation).
/// tau = 0 returns exactly log n.
pub fn closed_form_entropy(class: ClosedFormClass, tau: f64) -> Result<f64> {
    if !tau.is_finite() || tau < 0.0 {
        return Err(Error::domain(format!("tau = {tau} must be finite and >= 0")));
    }
    let order = class.order();
    match class {
        ClosedFormClass::CompleteLaplacian { n } if n < 1 => {
            return Err(Error::domain("complete graph needs n >= 1"))
        }
        ClosedFormClass::CompleteNormalized { n } if n < 2 => {
            return Err(Error::domain(
                "normalized Laplacian of K_n needs n >= 2 (K_1 has an isolated vertex)",
            ))
        }
        ClosedFormClass::BipartiteAdjacency { n1, n2 } if n1 < 1 || n2 < 1 => {
            return Err(Error::domain("bipartite parts must be non-empty"))
        }
        ClosedFormClass::EqualBipartiteLaplacian { n1 }
        | ClosedFormClass::EqualBipartiteNormalized { n1 }
        | ClosedFormClass::StarLaplacian { n1 }
        | ClosedFormClass::StarNormalized { n1 }
            if n1 < 1 =>
        {
            return Err(Error::domain("class parameter n1 must be >= 1"))
        }
        _ => {}
    }
    if tau == 0.0 {
        return Ok((order as f64).ln());
    }
    // Each class has spectrum {0} + {a with multiplicity k} + optionally
    // {b, single}; S = tau (k a e^{-tau a} + b e^{-tau b}) / (1 + x) +
    // log(1 + x) with x = k e^{-tau a} + e^{-tau b}.
    let two_level = |k: f64, a: f64, b: Option<f64>| -> f64 {
        let ea = if tau * a > UNDERFLOW_EXPONENT { 0.0 } else { (-tau * a).exp() };
        let (eb, bval) = match b {
            Some(b) => {
                (if tau * b > UNDERFLOW_EXPONENT { 0.0 } else { (-tau * b).exp() }, b)
            }
            None => (0.0, 0.0),
        };
        let x = k * ea + eb;
        tau * (k * a * ea + bval * eb) / (1.0 + x) + x.ln_1p()
    };
    let n1f = |v: usize| v as f64;
    let s = match class {
        ClosedFormClass::CompleteLaplacian { n } => {
            // {0} + {n x (n-1)}
            two_level(n1f(n - 1), n1f(n), None)
        }
        ClosedFormClass::CompleteNormalized { n } => {
            // {0} + {n/(n-1) x (n-1)}
            two_level(n1f(n - 1), n1f(n) / n1f(n - 1), None)
        }
        ClosedFormClass::BipartiteAdjacency { n1, n2 } => {
            // shifted -A spectrum: {0} + {s x (n-2)} + {2s}
            let sqrt = (n1f(n1) * n1f(n2)).sqrt();
            two_level(n1f(n1 + n2 - 2), sqrt, Some(2.0 * sqrt))
        }
        ClosedFormClass::EqualBipartiteLaplacian { n1 } => {
            // {0} + {n1 x (2 n1 - 2)} + {2 n1}
            two_level(n1f(2 * n1 - 2), n1f(n1), Some(2.0 * n1f(n1)))
        }
        ClosedFormClass::EqualBipartiteNormalized { n1 } => {
            // {0} + {1 x (2 n1 - 2)} + {2}
            two_level(n1f(2 * n1 - 2), 1.0, Some(2.0))
        }
        ClosedFormClass::StarLaplacian { n1 } => {
            // {0} + {1 x (n1 - 1)} + {n1 + 1}
            two_level(n1f(n1 - 1), 1.0, Some(n1f(n1 + 1)))
        }
        ClosedFormClass::StarNormalized { n1 } => {
            // {0} + {1 x (n1 - 1)} + {2}
            two_level(n1f(n1 - 1), 1.0, Some(2.0))
        }
    };
    Ok(s)
}

/// Analytic spectrum of a deterministic class graph under `kind`, for
/// cross-checking the eigensolver path. Random models and the normalized
/// Laplacian of an empty graph are domain errors.
pub fn analytic_spectrum(spec: &GeneratorSpec, kind: MatrixKind) -> Result<Spectrum> {
    use GeneratorSpec::*;
    let values: Vec<f64> = match (spec, kind) {
        (Empty { n }, MatrixKind::Adjacency | MatrixKind::Laplacian) => vec![0.0; *n],
        (Empty { .. }, MatrixKind::NormalizedLaplacian) => {
            return Err(Error::domain("normalized Laplacian of the empty graph is undefined"))
        }
        (Complete { n }, MatrixKind::Adjacency) => {
            let mut v = vec![-1.0; n.saturating_sub(1)];
            v.push((*n as f64) - 1.0);
            v
        }
        (Complete { n }, MatrixKind::Laplacian) => {
            let mut v = vec![*n as f64; n.saturating_sub(1)];
            v.push(0.0);
            v
        }
        (Complete { n }, MatrixKind::NormalizedLaplacian) => {
            if *n < 2 {
                return Err(Error::domain("normalized Laplacian of K_1 is undefined"));
            }
            let mut v = vec![(*n as f64) / ((*n as f64) - 1.0); n - 1];
            v.push(0.0);
            v
        }
        (CompleteBipartite { n1, n2 }, k) => bipartite_spectrum(*n1, *n2, k)?,
        (Star { n1 }, k) => bipartite_spectrum(*n1, 1, k)?,
        (Cycle { n }, k) => {
            if *n < 3 {
                return Err(Error::domain("cycle needs n >= 3"));
            }
            (0..*n)
                .map(|j| {
                    let c = (2.0 * std::f64::consts::PI * j as f64 / *n as f64).cos();
                    match k {
                        MatrixKind::Adjacency => 2.0 * c,
                        MatrixKind::Laplacian => 2.0 - 2.0 * c,
                        MatrixKind::NormalizedLaplacian => 1.0 - c,
                    }
                })
                .collect()
        }
        (other, _) => {
            return Err(Error::domain(format!(
                "no analytic spectrum for generator {other:?}"
            )))
        }
    };
    Spectrum::new(values)
}

fn bipartite_spectrum(n1: usize, n2: usize, kind: MatrixKind) -> Result<Vec<f64>> {
    if n1 < 1 || n2 < 1 {
        return Err(Error::domain("bipartite parts must be non-empty"));
    }
    let n = n1 + n2;
    Ok(match kind {
        MatrixKind::Adjacency => {
            let s = ((n1 * n2) as f64).sqrt();
            let mut v = vec![0.0; n - 2];
            v.push(s);
            v.push(-s);
            v
        }
        MatrixKind::Laplacian => {
            let mut v = Vec::with_capacity(n);
            v.push(0.0);
            v.extend(std::iter::repeat(n2 as f64).take(n1 - 1));
            v.extend(std::iter::repeat(n1 as f64).take(n2 - 1));
            v.push(n as f64);
            v
        }
        MatrixKind::NormalizedLaplacian => {
            let mut v = vec![1.0; n - 2];
            v.push(0.0);
            v.push(2.0);
            v
        }
    })
}

/// The constant c(tau) with S(C_n) = log n + c(tau) + o(1):
/// c = -2 tau I1(2 tau) / I0(2 tau) + log I0(2 tau) for the adjacency and
/// Laplacian kinds, and the same expression with argument tau for the
/// normalized Laplacian. Evaluated through scaled Bessel functions so large
/// tau stays finite.
pub fn cycle_asymptotic_offset(kind: MatrixKind, tau: f64) -> f64 {
    assert!(tau >= 0.0, "cycle_asymptotic_offset needs tau >= 0");
    let arg = match kind {
        MatrixKind::Adjacency | MatrixKind::Laplacian => 2.0 * tau,
        MatrixKind::NormalizedLaplacian => tau,
    };
    let i0e = bessel_i0_scaled(arg).expect("non-negative argument");
    let i1e = bessel_i1_scaled(arg).expect("non-negative argument");
    // -arg * I1/I0 + log I0 = arg (1 - I1/I0) + log(e^-arg I0)
    arg * (1.0 - i1e / i0e) + i0e.ln()
}

/// Lower bound on S for a spectrum confined to [c2, c1]: log n minus the
/// case-split deficit in tau relative to the 1/tau turning point.
pub fn finite_spectrum_entropy_lower_bound(c1: f64, c2: f64, tau: f64, n: usize) -> Result<f64> {
    if !c1.is_finite() || !c2.is_finite() {
        return Err(Error::domain("spectrum bounds must be finite"));
    }
    if c1 < c2 {
        return Err(Error::domain(format!("c1 = {c1} must be >= c2 = {c2}")));
    }
    if !(tau > 0.0) || !tau.is_finite() {
        return Err(Error::domain(format!("tau = {tau} must be positive")));
    }
    if n < 1 {
        return Err(Error::domain("n must be >= 1"));
    }
    let inv_tau = 1.0 / tau;
    let deficit = if c1 <= inv_tau {
        tau * (c1 - c2)
    } else if c2 <= inv_tau {
        tau * (c1 - (c1 * (tau * (c2 - c1)).exp()).min(c2))
    } else {
        tau * c1 * (1.0 - (tau * (c2 - c1)).exp())
    };
    Ok((n as f64).ln() - deficit)
}

/// Asymptotic regime of a spectrum with lambda_{n-1} = a log n and
/// lambda_1 = b log n.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SpectrumClassification {
    /// tau < 1/b: S grows like at least `coefficient * log n`.
    HighEntropy { coefficient: f64 },
    /// tau = 1/b: S is at least log 2 asymptotically.
    Boundary,
    /// tau > 1/a: S vanishes.
    VanishingEntropy,
    /// tau in (1/b, 1/a]: only partial bounds exist.
    Indeterminate,
}

/// Classifies the entropy regime for log-scaled spectra.
pub fn log_spectrum_classification(a: f64, b: f64, tau: f64) -> Result<SpectrumClassification> {
    if !(a > 0.0) || !(b > 0.0) || !a.is_finite() || !b.is_finite() {
        return Err(Error::domain("a and b must be positive and finite"));
    }
    if a > b {
        return Err(Error::domain(format!("a = {a} must not exceed b = {b}")));
    }
    if !(tau > 0.0) || !tau.is_finite() {
        return Err(Error::domain(format!("tau = {tau} must be positive")));
    }
    let inv_b = 1.0 / b;
    let inv_a = 1.0 / a;
    Ok(if tau < inv_b {
        SpectrumClassification::HighEntropy { coefficient: 1.0 - tau * b }
    } else if tau == inv_b {
        SpectrumClassification::Boundary
    } else if tau > inv_a {
        SpectrumClassification::VanishingEntropy
    } else {
        SpectrumClassification::Indeterminate
    })
}

/// The (tau_low, tau_high) window bracketing the Erdos-Renyi entropy phase
/// transition at p = p0 log(n)/n: tau_low = W0(x)/(1-p0) and
/// tau_high = W_{-1}(x)/(1-p0) with x = (1-p0)/(e p0).
pub fn er_phase_transition_thresholds(p0: f64) -> Result<(f64, f64)> {
    if !(p0 > 1.0) || !p0.is_finite() {
        return Err(Error::domain(format!("thresholds need p0 > 1, got {p0}")));
    }
    let x = (1.0 - p0) / (std::f64::consts::E * p0);
    let tau_low = lambert_w0(x)? / (1.0 - p0);
    let tau_high = lambert_w_minus1(x)? / (1.0 - p0);
    Ok((tau_low, tau_high))
}

/// Number of (near-)zero eigenvalues, which for Laplacian-kind spectra of a
/// graph equals the number of connected components. Not defined for the
/// adjacency kind.
pub fn spectral_component_count(spec: &Spectrum, kind: MatrixKind) -> Result<usize> {
    if kind == MatrixKind::Adjacency {
        return Err(Error::domain(
            "component counting needs a Laplacian-kind spectrum; the adjacency null space \
             carries no such meaning",
        ));
    }
    if spec.is_empty() {
        return Err(Error::domain("empty spectrum"));
    }
    let tol = ZERO_EIGENVALUE_TOL * spec.largest().max(1.0);
    Ok(spec.values().iter().filter(|v| v.abs() <= tol).count())
}
