use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    // surfaces
    #[error("unknown mark `{0}`")]
    UnknownMark(String),
    #[error("unknown face `{0}`")]
    UnknownFace(String),
    #[error("slot {0} is not a boundary slot")]
    NotBoundary(String),
    #[error("band gluing would make the surface non-orientable")]
    NonOrientableResult,
    #[error("band feet overlap")]
    OverlappingIntervals,
    #[error("curves {0} and {1} are not disjoint")]
    CurvesNotDisjoint(String, String),
    #[error("curve {0} is not simple")]
    CurveNotSimple(String),
    #[error("malformed surface: {0}")]
    MalformedSurface(String),

    // curves
    #[error("curves live on different surfaces")]
    DifferentSurfaces,
    #[error("arc endpoints are not boundary holes")]
    EndpointsNotHoles,
    #[error("band is not incident to the arc endpoints")]
    BandNotIncident,
    #[error("handle slide guide is obstructed: {0}")]
    GuideObstructed(String),
    #[error("malformed curve {0}: {1}")]
    MalformedCurve(String, String),

    // diagrams
    #[error("diagram has not been validated")]
    NotValidated,
    #[error("families yield different pages: {0}")]
    InconsistentPages(String),
    #[error("validation failed: {0}")]
    ValidationFailed(String),

    // complement
    #[error("shadow diagram has c = {0}, expected 1")]
    CNotOne(u32),
    #[error("no valid arc selection; tried:\n{0}")]
    NoValidSelection(String),
    #[error("invalid arc selection: {0}")]
    SelectionInvalid(String),
    #[error("parameters are not integral: {0}")]
    ParityError(String),
    #[error("page constraint 2p+b = 4-chi violated: {0}")]
    PageConstraintViolated(String),

    // open books
    #[error("monodromy is only supported for planar pages (p = {0})")]
    UnsupportedPage(u32),
    #[error("arc transport failed: {0}")]
    TransportFailed(String),

    // gluing
    #[error("pages do not match: {0}")]
    PagesMismatch(String),
    #[error("monodromy mismatch: {0:?} vs {1:?}")]
    MonodromyMismatch(Vec<i64>, Vec<i64>),
    #[error("automatic completion failed: {0}")]
    CompletionFailed(String),
    #[error("ambiguous Price-twist labeling: {0}")]
    AmbiguousLabeling(String),
    #[error("precondition violated: {0}")]
    Precondition(String),

    // invariants
    #[error("negative handle count: {0}")]
    NegativeHandleCount(String),
    #[error("computation cancelled")]
    Cancelled,

    // kirby
    #[error("alpha/beta pair is not standard: {0}")]
    NotStandardized(String),
    #[error("input diagram is not standardized")]
    NotStandardizedInput,

    // catalog / io
    #[error("unknown catalog entry `{0}`")]
    UnknownEntry(String),
    #[error("syntax error at line {line}, column {col}: {msg}")]
    SyntaxError { line: usize, col: usize, msg: String },
    #[error("unknown section `{0}`")]
    UnknownSection(String),
    #[error("dangling pairing: {0}")]
    DanglingPairing(String),
    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
