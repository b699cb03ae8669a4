use poschart_core::error::Assumption;
use poschart_core::Error as CoreError;

#[derive(Debug, thiserror::Error)]
pub enum AppError {
    #[error(transparent)]
    Core(#[from] CoreError),
    #[error("unknown catalog entry {name:?}; available: {available}")]
    UnknownEntry { name: String, available: String },
    #[error("{0}")]
    Input(String),
    #[error("io error on {path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("invalid JSON in {path}: {source}")]
    Json { path: String, source: serde_json::Error },
    #[error("scattering solver did not stabilize: {0}")]
    NoConvergence(String),
    #[error("{0}")]
    Internal(String),
}

impl AppError {
    pub fn kind(&self) -> &'static str {
        match self {
            AppError::Core(e) => e.kind(),
            AppError::UnknownEntry { .. } => "UnknownEntry",
            AppError::Input(_) => "InvalidInput",
            AppError::Io { .. } => "Io",
            AppError::Json { .. } => "Schema",
            AppError::NoConvergence(_) => "NoConvergence",
            AppError::Internal(_) => "Internal",
        }
    }

    /// The violated hypothesis, for assumption errors.
    pub fn clause(&self) -> Option<&'static str> {
        match self {
            AppError::Core(CoreError::Assumption(a)) => Some(match a {
                Assumption::FacetCount { .. } => "facet count: the Minkowski sum must be full-dimensional with d + k facets",
                Assumption::Unimodular { .. } => "unimodularity: det M must be +1 or -1",
                Assumption::Positivity { .. } => "positivity: sections need nonnegative coefficients, positive on vertices",
            }),
            AppError::Core(CoreError::NotSmoothFan { .. }) => Some("smoothness: every maximal cone must be a lattice basis"),
            AppError::Core(CoreError::NotSimplicial { .. }) => Some("simpliciality of the fan"),
            AppError::Core(CoreError::Torsion { .. }) => Some("torsion-free class group"),
            AppError::Core(CoreError::NotCartier { .. }) => Some("sections must be Cartier"),
            AppError::Core(CoreError::NotNef { .. }) => Some("classes must be nef"),
            AppError::Core(CoreError::NotUnimodular { .. }) => Some("unimodularity"),
            AppError::Core(CoreError::NegativeExponent { .. }) => Some("homogenization exponents must be nonnegative"),
            AppError::Core(CoreError::NotLattice { .. }) => Some("lattice polytope"),
            AppError::Core(CoreError::NotFullDimensional { .. }) => Some("full-dimensional polytope"),
            _ => None,
        }
    }

    /// 2: input or schema error, 3: assumption violated, 4: resource limit, 1: other.
    pub fn exit_code(&self) -> i32 {
        match self {
            AppError::Core(e) => match e {
                CoreError::ResourceLimit { .. } => 4,
                CoreError::IdentityFailed { .. } | CoreError::NotPointed => 1,
                CoreError::DimensionMismatch { .. }
                | CoreError::RankDeficient { .. }
                | CoreError::Empty
                | CoreError::Unbounded
                | CoreError::RayMismatch
                | CoreError::PoleAt { .. }
                | CoreError::OffTorus { .. }
                | CoreError::NonGeneric { .. }
                | CoreError::Parse { .. } => 2,
                _ => 3,
            },
            AppError::UnknownEntry { .. } | AppError::Input(_) | AppError::Io { .. } | AppError::Json { .. } => 2,
            AppError::NoConvergence(_) | AppError::Internal(_) => 1,
        }
    }
}
