use alloc::string::String;
use core::fmt;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// Two operands (or an operand and its algebra) disagree in dimension.
    DimensionMismatch {
        expected: usize,
        found: usize,
    },
    /// An operation needs a matrix representation the algebra does not carry.
    MissingRepresentation(String),
    /// A matrix could not be re-expressed in the basis of the representation.
    RepresentationClosure {
        residual: f64,
    },
    /// Structure constants or a representation violate a Lie algebra invariant.
    InvalidAlgebra(String),
    /// A size/rank argument is outside what the builder supports.
    InvalidParameter(String),
    UnsupportedRank {
        family: char,
        rank: usize,
    },
    IndexOutOfRange {
        index: usize,
        len: usize,
    },
    /// The operation is only defined for a specific algebra.
    WrongAlgebra {
        expected: String,
        found: String,
    },
    Unsupported(String),
    Singular,
    NonCommutingCartan {
        residual: f64,
    },
    NotDiagonalizable,
    /// A group element fails its membership test.
    GroupMembership {
        defect: f64,
    },
    NotCritical,
    DegenerateInertia,
    ZeroState,
    StepUnderflow {
        step: f64,
    },
    NewtonDivergence {
        step: usize,
    },
    NonFinite {
        step: usize,
    },
    LevelSetDrift {
        sample: usize,
        residual: f64,
    },
    LiftResidual {
        sample: usize,
        residual: f64,
    },
    GimbalLock {
        time: f64,
    },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DimensionMismatch { expected, found } => {
                write!(f, "dimension mismatch: expected {expected}, found {found}")
            }
            Error::MissingRepresentation(name) => {
                write!(f, "algebra {name} has no matrix representation")
            }
            Error::RepresentationClosure { residual } => {
                write!(f, "matrix is not in the span of the representation (residual {residual:e})")
            }
            Error::InvalidAlgebra(msg) => write!(f, "invalid Lie algebra: {msg}"),
            Error::InvalidParameter(msg) => write!(f, "invalid parameter: {msg}"),
            Error::UnsupportedRank { family, rank } => {
                write!(f, "unsupported rank {rank} for family {family}")
            }
            Error::IndexOutOfRange { index, len } => {
                write!(f, "index {index} out of range (len {len})")
            }
            Error::WrongAlgebra { expected, found } => {
                write!(f, "expected algebra {expected}, found {found}")
            }
            Error::Unsupported(msg) => write!(f, "not implemented: {msg}"),
            Error::Singular => write!(f, "singular matrix"),
            Error::NonCommutingCartan { residual } => {
                write!(f, "Cartan elements do not commute (residual {residual:e})")
            }
            Error::NotDiagonalizable => write!(f, "Cartan elements are not simultaneously diagonalisable"),
            Error::GroupMembership { defect } => {
                write!(f, "group membership check failed (defect {defect:e})")
            }
            Error::NotCritical => write!(f, "point is not a critical point"),
            Error::DegenerateInertia => write!(f, "degenerate inertia: principal moments must be distinct"),
            Error::ZeroState => write!(f, "state must be nonzero"),
            Error::StepUnderflow { step } => write!(f, "finite-difference step underflow ({step:e})"),
            Error::NewtonDivergence { step } => {
                write!(f, "implicit solve did not converge at step {step}")
            }
            Error::NonFinite { step } => write!(f, "non-finite state at step {step}"),
            Error::LevelSetDrift { sample, residual } => {
                write!(f, "curve leaves the momentum level set at sample {sample} (residual {residual:e})")
            }
            Error::LiftResidual { sample, residual } => {
                write!(f, "no isotropy velocity reproduces the curve at sample {sample} (residual {residual:e})")
            }
            Error::GimbalLock { time } => write!(f, "Euler-angle chart degenerates at t = {time}"),
        }
    }
}

impl core::error::Error for Error {}

impl Error {
    /// Stable kebab-case identifier of the variant.
    pub fn code(&self) -> &'static str {
        match self {
            Error::DimensionMismatch { .. } => "dimension-mismatch",
            Error::MissingRepresentation(_) => "missing-representation",
            Error::RepresentationClosure { .. } => "representation-closure",
            Error::InvalidAlgebra(_) => "invalid-algebra",
            Error::InvalidParameter(_) => "invalid-parameter",
            Error::UnsupportedRank { .. } => "unsupported-rank",
            Error::IndexOutOfRange { .. } => "index-out-of-range",
            Error::WrongAlgebra { .. } => "wrong-algebra",
            Error::Unsupported(_) => "unsupported",
            Error::Singular => "singular",
            Error::NonCommutingCartan { .. } => "non-commuting-cartan",
            Error::NotDiagonalizable => "not-diagonalizable",
            Error::GroupMembership { .. } => "group-membership",
            Error::NotCritical => "not-critical",
            Error::DegenerateInertia => "degenerate-inertia",
            Error::ZeroState => "zero-state",
            Error::StepUnderflow { .. } => "step-underflow",
            Error::NewtonDivergence { .. } => "newton-divergence",
            Error::NonFinite { .. } => "non-finite",
            Error::LevelSetDrift { .. } => "level-set-drift",
            Error::LiftResidual { .. } => "lift-residual",
            Error::GimbalLock { .. } => "gimbal-lock",
        }
    }
}
