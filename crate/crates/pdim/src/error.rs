use alloc::string::String;
use core::fmt;

/// Errors shared by all modules of the crate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A field operation was requested with a non-prime modulus.
    NonPrimeModulus(u8),
    /// Two values that must live over the same field do not.
    FieldMismatch { left: u8, right: u8 },
    /// Two subspaces or vectors that must share an ambient dimension do not.
    AmbientMismatch { left: usize, right: usize },
    /// A matrix or vector had an unexpected shape.
    ShapeMismatch(String),
    /// `q^d` exceeds the enumeration guard for subspace enumeration.
    EnumerationGuard { d: usize, q: u8 },
    /// A dense truth table or adjacency matrix would exceed the size guard.
    DenseGuard { n: usize, limit: usize },
    /// A vector was expected to lie in a span but does not.
    NotInSpan,
    /// A projection was requested along subspaces that intersect nontrivially.
    SubspacesIntersect,
    /// A parameter failed validation (named functions, restrictions, ...).
    InvalidParameter(String),
    /// A branching program failed validation.
    MalformedProgram(String),
    /// Rectangles passed to the rectangle construction overlap.
    RectanglesOverlap,
    /// Rectangles passed to the rectangle construction do not cover `f^{-1}(1)`
    /// exactly.
    RectanglesIncomplete,
    /// A restriction leaves a right-side variable free.
    RightVariableFree,
    /// The restricted function is constant, so no assignment is defined.
    RestrictionConstant,
    /// Vertex sets of an assignment and a graph do not match.
    VertexMismatch { expected: usize, got: usize },
    /// A bitwise assignment violates the independence precondition of the
    /// cycle evaluator; the payload names the offending literal.
    DependentLiteral { side: crate::Side, index: usize, value: bool },
    /// A search guard (class count, edge count) was exceeded.
    SearchGuard(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NonPrimeModulus(q) => write!(f, "modulus {q} is not prime"),
            Error::FieldMismatch { left, right } => {
                write!(f, "field mismatch: F_{left} vs F_{right}")
            }
            Error::AmbientMismatch { left, right } => {
                write!(f, "ambient dimension mismatch: {left} vs {right}")
            }
            Error::ShapeMismatch(msg) => write!(f, "shape mismatch: {msg}"),
            Error::EnumerationGuard { d, q } => {
                write!(f, "enumeration guard exceeded: q^d too large (d={d}, q={q})")
            }
            Error::DenseGuard { n, limit } => {
                write!(f, "dense representation guard exceeded: n={n} > {limit}")
            }
            Error::NotInSpan => write!(f, "vector does not lie in the required span"),
            Error::SubspacesIntersect => {
                write!(f, "projection requested along subspaces with nontrivial intersection")
            }
            Error::InvalidParameter(msg) => write!(f, "invalid parameter: {msg}"),
            Error::MalformedProgram(msg) => write!(f, "malformed branching program: {msg}"),
            Error::RectanglesOverlap => write!(f, "rectangles overlap"),
            Error::RectanglesIncomplete => {
                write!(f, "rectangles do not cover the 1-inputs exactly")
            }
            Error::RightVariableFree => {
                write!(f, "restriction leaves a right-side variable free")
            }
            Error::RestrictionConstant => write!(f, "restricted function is constant"),
            Error::VertexMismatch { expected, got } => {
                write!(f, "vertex set mismatch: expected {expected}, got {got}")
            }
            Error::DependentLiteral { side, index, value } => {
                let s = match side {
                    crate::Side::Left => "x",
                    crate::Side::Right => "y",
                };
                write!(
                    f,
                    "literal {s}{}={} has a dependent or non-matching generating set",
                    index + 1,
                    u8::from(*value)
                )
            }
            Error::SearchGuard(msg) => write!(f, "search guard exceeded: {msg}"),
        }
    }
}

#[cfg(test)]
impl std::error::Error for Error {}
