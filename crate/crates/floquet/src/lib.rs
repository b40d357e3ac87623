//! Numerical study of a perturbed Floquet operator K + βV with dense point
//! spectrum.
//!
//! The model acts on ℓ²(ℤ²) in the eigenbasis of K: the unperturbed
//! eigenvalues are F(n) = ω·n₁ + n₂² and the potential V = 4 cos t cos x
//! couples n to n ± (1,1) and n ± (1,−1) with unit matrix elements. Since
//! σ(K) = ωℤ + {k²} is dense for irrational ω, the eigenvalue F(0̄) = 0 is
//! not isolated and regular perturbation theory does not apply. This crate
//! builds the machinery that still produces a perturbed eigenvalue branch
//! λ(β) at desk scale:
//!
//! * [`lattice`] — the index set, eigenvalues, critical indices with small
//!   denominators, and gap-condition diagnostics;
//! * [`combinatorics`] — rooted-tree compositions, lattice paths, and
//!   short-loop equivalence classes;
//! * [`rs_series`] — Rayleigh–Schrödinger coefficients ξ_M by two distinct
//!   combinatorial routes (tree formula and trace formula);
//! * [`diophantine`] — the non-resonance sets Ω(γ) and Λ, their measure
//!   estimates, and the small-denominator constants C₁, C₂;
//! * [`resolvent`] — the vector series g(β,λ), the scalar series G(β,λ),
//!   and the compensated norm bounds behind its convergence;
//! * [`solver`] — the fixed-point solutions β±(λ) and λ(β), density of the
//!   coupling domain at 0, and asymptotic-series order checks;
//! * [`oracle`] — an independent truncated-matrix eigenvalue solver used to
//!   cross-validate everything above;
//! * [`checks`] — the consolidated verification suite run by the CLI and by
//!   the acceptance tests.
//!
//! All computations are pure functions of [`ModelParams`] and enumerate in
//! fixed deterministic order, so identical inputs give identical outputs.

pub mod checks;
pub mod combinatorics;
pub mod diophantine;
pub mod lattice;
pub mod oracle;
pub mod params;
pub mod resolvent;
pub mod rs_series;
pub mod solver;
pub mod util;

pub use lattice::LatticeIndex;
pub use params::ModelParams;

/// Errors shared across the computation modules.
#[derive(Debug, Clone, thiserror::Error)]
pub enum Error {
    /// F(n) = 0 exactly for some n ≠ 0̄; ω behaves like a rational frequency
    /// within the scanned range.
    #[error("degenerate frequency: F({n1},{n2}) = 0 exactly")]
    DegenerateFrequency { n1: i64, n2: i64 },

    /// A computation needed lattice data beyond the configured n₂ cutoff.
    #[error("n2 cutoff too small: {0}")]
    CutoffTooSmall(String),

    /// A resolvent factor 1/(F(n) − λ) was evaluated at an exact zero.
    #[error("zero denominator: F({n1},{n2}) - lambda = 0 exactly")]
    ZeroDenominator { n1: i64, n2: i64 },

    /// A composition handed to the tree-rotation search does not satisfy
    /// |σ| = N − 1.
    #[error("invalid composition: |sigma| = {sum} but N - 1 = {expected}")]
    InvalidComposition { sum: u64, expected: u64 },

    /// A vertex sequence violates the lattice-path step invariant.
    #[error("not a path: {0}")]
    NotAPath(String),

    /// An operation was called outside its stated hypotheses.
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),

    /// No λ★ > 0 satisfies the four admissibility bullets; the measured Ĉ
    /// is too large for the configured model.
    #[error("no admissible lambda_star (C_hat = {c_hat})")]
    NoAdmissibleLambdaStar { c_hat: f64 },

    /// λ = G(β,λ) has no solution for this sign of λ.
    #[error("no solution: sgn(lambda) is opposite to sgn(G2(0))")]
    NoSolution,

    /// The bisection bracket shows no sign change; the truncated series
    /// broke the expected monotone behaviour.
    #[error("no sign change in bracket [{lo}, {hi}]")]
    NoSignChange { lo: f64, hi: f64 },

    /// Requested series order exceeds the configured enumeration cutoff.
    #[error("order {order} exceeds cutoff {max}")]
    OrderTooLarge { order: u32, max: u32 },

    /// |β| lies outside the convergence domain for the measured Ĉ.
    #[error("divergence warning: |beta| = {beta} exceeds domain radius {radius}")]
    DivergenceWarning { beta: f64, radius: f64 },

    /// The usable β grid spans less than one decade.
    #[error("insufficient range: usable beta grid spans {decades:.2} decades")]
    InsufficientRange { decades: f64 },

    /// The polynomial fit system is numerically rank-deficient.
    #[error("ill-conditioned fit: condition estimate {cond:.3e}")]
    IllConditionedFit { cond: f64 },

    /// The shifted matrix could not be factored.
    #[error("singular shift: zero pivot at column {col}")]
    SingularShift { col: usize },

    /// Inverse iteration did not reach the residual tolerance.
    #[error("no convergence after {iterations} iterations (residual {residual:.3e})")]
    NoConvergence { iterations: usize, residual: f64 },

    /// Invalid model parameters.
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
}

pub type Result<T> = std::result::Result<T, Error>;
