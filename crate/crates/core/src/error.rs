use thiserror::Error;

/// Errors raised while building digraphs or evaluating invariants on them.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("line {line}: {source}")]
    Parse {
        line: usize,
        #[source]
        source: Box<Error>,
    },
    #[error("malformed token `{0}`")]
    MalformedToken(String),
    #[error("expected exactly two vertex ids, found {0}")]
    WrongArity(usize),
    #[error("loop arc {0} -> {0}")]
    LoopArc(usize),
    #[error("duplicate arc {0} -> {1}")]
    DuplicateArc(usize, usize),
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),
    #[error("vertex {id} out of range for n = {n}")]
    VertexOutOfRange { id: usize, n: usize },
    #[error("edge list contains no vertices")]
    EmptyInput,
    #[error("dense arc mask {mask:#x} has bits beyond the {slots} slots of n = {n}")]
    MaskOutOfRange { mask: u64, n: usize, slots: usize },
    #[error("dense storage supports n <= {max}, got n = {n}")]
    DenseOrder { n: usize, max: usize },

    #[error("vertex {0} is isolated")]
    IsolatedVertex(usize),
    #[error("need at least 2 vertices, got n = {0}")]
    TooFewVertices(usize),
    #[error("family `{kind}` requires {requirement}, got n = {n}")]
    FamilyOrder {
        kind: &'static str,
        requirement: &'static str,
        n: usize,
    },
    #[error("exhaustive enumeration supports {min} <= n <= {max}, got n = {n}")]
    EnumerationRange { n: usize, min: usize, max: usize },
    #[error("statement {id} (n = {stated}) is not applicable at n = {n}")]
    NotApplicable { id: String, stated: usize, n: usize },

    #[error("unknown index name `{0}`")]
    UnknownIndex(String),
    #[error("invalid exponent `{0}`")]
    InvalidExponent(String),
    #[error("unknown family `{0}`")]
    UnknownFamily(String),
    #[error("unknown theorem variant `{0}`")]
    UnknownTheorem(String),
}

impl Error {
    pub(crate) fn at_line(self, line: usize) -> Self {
        Error::Parse {
            line,
            source: Box::new(self),
        }
    }

    /// True for errors caused by malformed input rather than by a well-formed
    /// object falling outside an operation's domain.
    pub fn is_input_error(&self) -> bool {
        match self {
            Error::Parse { .. }
            | Error::MalformedToken(_)
            | Error::WrongArity(_)
            | Error::LoopArc(_)
            | Error::DuplicateArc(..)
            | Error::DuplicateEdge(..)
            | Error::VertexOutOfRange { .. }
            | Error::EmptyInput
            | Error::MaskOutOfRange { .. }
            | Error::UnknownIndex(_)
            | Error::InvalidExponent(_)
            | Error::UnknownFamily(_)
            | Error::UnknownTheorem(_) => true,
            Error::DenseOrder { .. }
            | Error::IsolatedVertex(_)
            | Error::TooFewVertices(_)
            | Error::FamilyOrder { .. }
            | Error::EnumerationRange { .. }
            | Error::NotApplicable { .. } => false,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
