//! Error type shared by all modules of the crate.

use num_complex::Complex64;
use thiserror::Error;

/// Errors raised by evaluation, construction and certification routines.
#[derive(Debug, Clone, Error)]
pub enum Error {
    /// The theta series requires Im(tau) > 0 to converge.
    #[error("theta series does not converge: Im(tau) = {0} <= 0")]
    NonconvergentModulus(f64),

    /// Argument reduction succeeded but the periodicity factor overflows f64.
    #[error("theta evaluation overflows: |Im z| = {0} too large for Im tau = {1}")]
    Overflow(f64, f64),

    /// Branch-point evaluation of w or the quartic root.
    #[error("evaluation at branch point {0}")]
    BranchPointEval(Complex64),

    /// Adaptive quadrature could not meet the requested tolerance.
    #[error("quadrature failure: estimated error {err:.3e} exceeds tolerance {tol:.3e}")]
    QuadratureFailure { err: f64, tol: f64 },

    /// The requested Abel-map evaluation cannot avoid the segment [ic, -ic].
    #[error("path violation: point {0} on the forbidden segment needs a side tag")]
    PathViolation(Complex64),

    /// Divisor zero and pole counts differ.
    #[error("divisor mismatch: {zeros} zeros vs {poles} poles (with multiplicity)")]
    DivisorMismatch { zeros: usize, poles: usize },

    /// Divisor representatives do not satisfy the integer sum condition.
    #[error("Abel condition violated: sum(zeros) - sum(poles) - lambda = {0} is not an integer")]
    AbelConditionViolated(Complex64),

    /// Half-period ratio samples disagree while a constant was expected.
    #[error("inconsistent half-period ratio: samples spread {0:.3e}")]
    InconsistentRatio(f64),

    /// Decomposition against the canonical pair left a large residual.
    #[error("pole mismatch: reconstruction residual {0:.3e}")]
    PoleMismatch(f64),

    /// Evaluation requested inside the guard radius of a singular point.
    #[error("evaluation within guard radius of singular point near {0}")]
    SingularSetEval(Complex64),

    /// M3 is not defined for integer phase.
    #[error("M3 undefined for \u{39b}\u{303} \u{2208} \u{2124} (lambda = {0})")]
    UndefinedPhase(f64),

    /// Point does not lie on the jump contour.
    #[error("point {0} is off the jump contour")]
    OffContour(Complex64),

    /// A sampling plan placed points inside the guard radius of a band edge.
    #[error("sampling too close to singular set near {0}")]
    SamplingTooClose(Complex64),

    /// Singularity fit attempted where the solution is regular.
    #[error("degenerate fit: no singular growth at {0} (slope {1:.3})")]
    DegenerateFit(Complex64, f64),

    /// Evaluation within the pole-proximity guard of a quasiperiodic function.
    #[error("evaluation within {dist:.3e} of pole {pole}")]
    PoleProximity { pole: Complex64, dist: f64 },
}

pub type Result<T> = std::result::Result<T, Error>;
