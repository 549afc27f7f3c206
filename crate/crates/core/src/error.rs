use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,

    #[error("division by the zero function")]
    DivisionByZero,

    #[error("seed function is identically zero")]
    DegenerateSeed,

    #[error("Wronskian of the seed pair vanishes identically")]
    DegenerateWronskian,

    #[error("identity `{check}` violated; residual: {residual}")]
    IdentityViolation { check: String, residual: String },

    #[error("constraint violated: {0}")]
    ConstraintViolation(String),

    #[error("denominator polynomial {g} has {roots} zero(s) on the positive half-line")]
    InadmissibleDenominator { g: String, roots: usize },

    #[error("incompatible quasi-rational operands: {0}")]
    Structural(String),

    #[error("no polynomial solution of degree {n}")]
    NoPolynomialSolution { n: usize },

    #[error("polynomial solution of degree {n} is not unique (kernel dimension {dim})")]
    AmbiguousSolution { n: usize, dim: usize },

    #[error("pole encountered at x = {x}")]
    PoleEncountered { x: f64 },

    #[error("eigenvalue {index} not converged: grid estimates {coarse} and {fine} differ by more than {tol}")]
    ConvergenceFailure {
        index: usize,
        coarse: f64,
        fine: f64,
        tol: f64,
    },

    #[error("quadrature not converged: {nodes}-node value {value} vs doubled-node value {doubled}")]
    QuadratureNonConvergence {
        nodes: usize,
        value: f64,
        doubled: f64,
    },

    #[error("invalid solver configuration: {0}")]
    InvalidConfig(String),

    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    pub(crate) fn identity(check: impl Into<String>, residual: impl ToString) -> Self {
        Error::IdentityViolation {
            check: check.into(),
            residual: residual.to_string(),
        }
    }
}
