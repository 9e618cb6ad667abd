use thiserror::Error;

/// Errors produced by the algebra routines.
///
/// Domain failures (a polynomial outside the ring an operation is defined on,
/// a failed exact division) are distinguished from malformed input so the CLI
/// can map them onto different exit codes.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("variable spec mismatch: {0} vs {1}")]
    SpecMismatch(String, String),
    #[error("polynomial is not divisible by the given divisor")]
    NotDivisible,
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("variable index out of range: {0}")]
    IndexOutOfRange(String),
    #[error("negative exponent not allowed in a non-Laurent spec")]
    NegativeExponent,
    #[error("cannot bind an inverted variable to a non-unit: {0}")]
    NonUnitBinding(String),
    #[error("zero coordinate at a variable that appears with a negative exponent")]
    ZeroCoordinate,
    #[error("group element size mismatch: expected ({0}, {1})")]
    GroupSize(usize, usize),
    #[error("symmetric group on {0} letters exceeds the alternation cap of {1}")]
    GroupTooLarge(usize, usize),
    #[error("partition {0} is not contained in the ({1},{2})-hook")]
    NotInHook(String, usize, usize),
    #[error("partition {0} is not in H0 for ({1},{2})")]
    NotInH0(String, usize, usize),
    #[error("partition {0} has more than {1} parts")]
    PartitionTooLong(String, usize),
    #[error("polynomial is not supersymmetric")]
    NotSupersymmetric,
    #[error("polynomial is not Laurent supersymmetric")]
    NotLaurentSupersymmetric,
    #[error("polynomial is not W-invariant")]
    NotWInvariant,
    #[error("polynomial is not in R + Sz")]
    NotMember,
    #[error("polynomial has degree {0} above the cap {1}")]
    DegreeCap(i64, i64),
    #[error("inconsistent linear system")]
    Inconsistent,
    #[error("evaluation map left a dependence on the substituted variable")]
    ResidualDependence,
    #[error("operation requires m >= 1 and n >= 1")]
    EmptyBlock,
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("point is not on the hyperplane of the root")]
    NotOnHyperplane,
    #[error("point shape does not match ({0},{1})")]
    ShapeMismatch(usize, usize),
    #[error("point set is not invariant under the Weyl groupoid")]
    NotInvariant,
    #[error("point lies in the groupoid saturation of the set")]
    NoSeparator,
    #[error("retry budget of {0} exhausted")]
    RetryBudget(usize),
    #[error("malformed input: {0}")]
    Parse(String),
}

impl Error {
    /// Short machine-readable code.
    pub fn code(&self) -> &'static str {
        match self {
            Error::SpecMismatch(..) => "spec_mismatch",
            Error::NotDivisible => "not_divisible",
            Error::DivisionByZero => "division_by_zero",
            Error::IndexOutOfRange(_) => "index_out_of_range",
            Error::NegativeExponent => "negative_exponent",
            Error::NonUnitBinding(_) => "non_unit_binding",
            Error::ZeroCoordinate => "zero_coordinate",
            Error::GroupSize(..) => "group_size",
            Error::GroupTooLarge(..) => "group_too_large",
            Error::NotInHook(..) => "not_in_hook",
            Error::NotInH0(..) => "not_in_h0",
            Error::PartitionTooLong(..) => "partition_too_long",
            Error::NotSupersymmetric => "not_supersymmetric",
            Error::NotLaurentSupersymmetric => "not_laurent_supersymmetric",
            Error::NotWInvariant => "not_w_invariant",
            Error::NotMember => "not_member",
            Error::DegreeCap(..) => "degree_cap",
            Error::Inconsistent => "inconsistent",
            Error::ResidualDependence => "residual_dependence",
            Error::EmptyBlock => "empty_block",
            Error::InvalidArgument(_) => "invalid_argument",
            Error::NotOnHyperplane => "not_on_hyperplane",
            Error::ShapeMismatch(..) => "shape_mismatch",
            Error::NotInvariant => "not_invariant",
            Error::NoSeparator => "no_separator",
            Error::RetryBudget(_) => "retry_budget",
            Error::Parse(_) => "parse",
        }
    }

    /// True for malformed-input errors (as opposed to domain failures).
    pub fn is_usage(&self) -> bool {
        matches!(self, Error::Parse(_))
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
