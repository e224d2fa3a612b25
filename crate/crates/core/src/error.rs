use thiserror::Error;

pub type Result<T> = core::result::Result<T, Error>;

/// Every way a construction can be refused.
///
/// The variants are the precondition failures of the individual operations.
/// They are plain data so callers (the script evaluator in particular) can
/// report them with a source position.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("the zero vector is not a projective element")]
    ZeroVector,
    #[error("malformed scalar literal")]
    InvalidScalar,

    #[error("the two points coincide")]
    CoincidentPoints,
    #[error("the two lines coincide")]
    CoincidentLines,
    #[error("the point lies on both lines")]
    PointOnBothLines,
    #[error("the line passes through both points")]
    LineThroughBothPoints,
    #[error("the three vertices do not form a triangle")]
    DegenerateTriangle,
    #[error("the triangles are not perspective from the given center")]
    NotPerspectiveFromCenter,
    #[error("the triangles are not perspective from the given axis")]
    NotPerspectiveFromAxis,
    #[error("the four points do not form a quadrangle")]
    DegenerateQuadrangle,

    #[error("the auxiliary line and point violate the harmonic construction constraints")]
    InvalidAuxiliary,
    #[error("the point is not on the base line")]
    CNotOnBaseLine,
    #[error("the points are not collinear")]
    NotCollinear,
    #[error("the first three points are not pairwise apart")]
    DegenerateBasis,
    #[error("the point is not the harmonic conjugate of a non-base point")]
    HarmonicMismatch,

    #[error("the element is not on the carrier")]
    ElementNotOnCarrier,
    #[error("the carriers of consecutive maps do not match")]
    CarrierMismatch,
    #[error("the perspectivity is degenerate")]
    DegeneratePerspectivity,
    #[error("the triple is not pairwise apart")]
    DegenerateTriple,
    #[error("the projectivity is a perspectivity and has no axis of homology")]
    PerspectivityHasNoAxis,
    #[error("the quadruple has three collinear points")]
    DegenerateQuad,
    #[error("the projectivity fixes the common element")]
    PerspectiveProjectivity,
    #[error("the fitted conic is singular")]
    DegenerateConic,

    #[error("three of the points are collinear")]
    ThreeCollinear,
    #[error("the points are not pairwise distinct")]
    DuplicatePoints,
    #[error("the point is not on the conic")]
    NotOnConic,
    #[error("the hexagon is degenerate")]
    DegenerateHexagon,
    #[error("the line passes through a point it has to avoid")]
    LineAvoidanceViolated,
    #[error("the line is tangent to the conic")]
    TangentLine,
    #[error("the intersection is not known to be rational")]
    OutOfRationalScope,

    #[error("the pencils are identical")]
    IdenticalPencils,
    #[error("the virtual line has an undecided status")]
    UnresolvedStatus,
    #[error("the virtual line holds two different lines")]
    NotAVirtualLine,
    #[error("the arguments are identical")]
    IdenticalArguments,
    #[error("the element does not belong to the plane")]
    NotInPlane,
}
