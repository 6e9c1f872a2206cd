use thiserror::Error;

/// Failures raised by the constructions in this crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("non-finite value in {0}")]
    NonFinite(&'static str),
    #[error("invalid tolerance policy: {0}")]
    InvalidTolerance(&'static str),
    #[error("polynomial has degree zero")]
    DegreeZero,
    #[error("iteration did not converge: {0}")]
    NonConvergence(String),
    #[error("reversal degree {n} is below polynomial degree {degree}")]
    ReversalDegree { n: usize, degree: usize },
    #[error("bracket [{lo}, {hi}] does not enclose a sign change")]
    BracketInvalid { lo: f64, hi: f64 },
    #[error("prefactor modulus {0} is not 1")]
    PrefactorNotUnimodular(f64),
    #[error("point {what} has modulus {modulus}, expected < 1")]
    OutsideDisc { what: &'static str, modulus: f64 },
    #[error("evaluation point is within {distance:e} of a pole")]
    PoleProximity { distance: f64 },
    #[error("point has modulus {0}, expected 1")]
    NotUnimodular(f64),
    #[error("two circle preimages coincide")]
    CoincidentPreimages,
    #[error("tuple sizes differ or are below 2 ({0} vs {1})")]
    SizeMismatch(usize, usize),
    #[error("point tuples are not interspersed")]
    NotInterspersed,
    #[error("the zero of a degree-2 product must be nonzero")]
    ZeroCenter,
    #[error("point is not strictly inside the segment")]
    NotOnSegment,
    #[error("foci are zero or coincide")]
    ZeroOrCoincidentFoci,
    #[error("ellipse degenerates: string length {dist_sum} vs focal distance {focal}")]
    DegenerateEllipse { dist_sum: f64, focal: f64 },
    #[error("chord endpoints coincide")]
    DegenerateChord,
    #[error("triangle vertices are collinear or coincide")]
    DegenerateTriangle,
    #[error("quadrilateral vertices must be distinct and in counterclockwise order")]
    QuadOrder,
    #[error("foci leave the unit disc: |a| = {0}, |b| = {1}")]
    FociOutsideDisc(f64, f64),
    #[error("string-length radicand {0} is not positive")]
    DegenerateRadicand(f64),
    #[error("composition factor has a zero of modulus {0}")]
    FactorZeroOutsideDisc(f64),
    #[error("product is not canonical")]
    NotCanonical,
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("coordinate ({0}, {1}) falls outside the viewport")]
    ViewportOverflow(f64, f64),
}

impl Error {
    /// Stable machine-readable identifier.
    pub fn code(&self) -> &'static str {
        match self {
            Error::NonFinite(_) => "NON_FINITE",
            Error::InvalidTolerance(_) => "INVALID_TOLERANCE",
            Error::DegreeZero => "DEGREE_ZERO",
            Error::NonConvergence(_) => "NON_CONVERGENCE",
            Error::ReversalDegree { .. } => "REVERSAL_DEGREE",
            Error::BracketInvalid { .. } => "BRACKET_INVALID",
            Error::PrefactorNotUnimodular(_) => "PREFACTOR_NOT_UNIMODULAR",
            Error::OutsideDisc { .. } => "OUTSIDE_DISC",
            Error::PoleProximity { .. } => "POLE_PROXIMITY",
            Error::NotUnimodular(_) => "NOT_UNIMODULAR",
            Error::CoincidentPreimages => "COINCIDENT_PREIMAGES",
            Error::SizeMismatch(..) => "SIZE_MISMATCH",
            Error::NotInterspersed => "NOT_INTERSPERSED",
            Error::ZeroCenter => "ZERO_CENTER",
            Error::NotOnSegment => "NOT_ON_SEGMENT",
            Error::ZeroOrCoincidentFoci => "ZERO_OR_COINCIDENT_FOCI",
            Error::DegenerateEllipse { .. } => "DEGENERATE_ELLIPSE",
            Error::DegenerateChord => "DEGENERATE_CHORD",
            Error::DegenerateTriangle => "DEGENERATE_TRIANGLE",
            Error::QuadOrder => "QUAD_ORDER",
            Error::FociOutsideDisc(..) => "FOCI_OUTSIDE_DISC",
            Error::DegenerateRadicand(_) => "DEGENERATE_RADICAND",
            Error::FactorZeroOutsideDisc(_) => "FACTOR_ZERO_OUTSIDE_DISC",
            Error::NotCanonical => "NOT_CANONICAL",
            Error::InvalidArgument(_) => "INVALID_ARGUMENT",
            Error::ViewportOverflow(..) => "VIEWPORT_OVERFLOW",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
