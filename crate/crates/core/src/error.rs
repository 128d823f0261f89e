use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GoldenError {
    #[error("division by zero in Q(phi)")]
    DivisionByZero,
    #[error("golden number denominators must be positive")]
    BadDenominator,
    #[error("cannot parse exact rational from {0:?}")]
    Parse(String),
}

#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Golden(#[from] GoldenError),
    #[error("invalid tile: {0}")]
    InvalidTile(String),
    #[error("tile cannot be mapped onto a canonical rhombohedron by the icosahedral group")]
    NotCanonicalizable,
    #[error("no unit vector of Q is normal to facet {facet}")]
    NotQuasirational { facet: usize },
    #[error("malformed half-space representation: {0}")]
    MalformedRep(String),
    #[error("level set is empty: radius squared {0} is not positive")]
    EmptyInterior(String),
    #[error("lattice point {point:?} projects onto the window boundary; choose a different shift")]
    NonGenericShift { point: [i64; 6] },
    #[error("star constants are corrupt: {0}")]
    CorruptStar(String),
    #[error("patch format: {0}")]
    Format(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
