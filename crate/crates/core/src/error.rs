use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Every failure the library can report.
///
/// Variant names are part of the CLI contract: [`Error::name`] is echoed
/// verbatim in the `"error"` field of failed invocations.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("operands mix floating and exact scalars")]
    MixedMode,
    #[error("exact scalars from different fields Q(sqrt({0})) and Q(sqrt({1}))")]
    MixedField(i64, i64),
    #[error("division by zero")]
    DivisionByZero,
    #[error("operation leaves the exact field: {0}")]
    ExactModeUnsupported(String),
    #[error("non-finite floating value")]
    NonFinite,
    #[error("discriminant {0} is not a square-free integer other than 0 and 1")]
    InvalidDiscriminant(i64),
    #[error("tolerance must be positive and finite, got {0}")]
    InvalidTolerance(f64),
    #[error("matrix does not have determinant 1")]
    NotUnimodular,
    #[error("the identity fixes every point of the sphere")]
    IdentityHasAllPoints,
    #[error("parameter must be nonzero")]
    ZeroParameter,
    #[error("element is not in the requested component: {0}")]
    NotInComponent(String),
    #[error("trace is +-2; use the parabolic chart")]
    ParabolicTrace,
    #[error("+-I is central and has no conjugator to a base point")]
    CentralElement,
    #[error("the transvection with parameter 0 is the identity")]
    ZeroTransvection,
    #[error("sigma does not intertwine the homomorphism: {0}")]
    IntertwiningFailure(String),
    #[error("homomorphism maps an element of H' outside H: {0}")]
    ImageEscapesH(String),
    #[error("element budget of {0} exceeded")]
    BudgetExceeded(usize),
    #[error("words {0} and {1} share a rounded key but are not equal within tolerance")]
    NumericalCollision(String, String),
    #[error("gamma evaluates to the identity")]
    TrivialGamma,
    #[error("coset operation and avatar conjugation disagree for x = {0}, y = {1}")]
    HomomorphismFailure(String, String),
    #[error("no image lies inside the requested window")]
    EmptyWindow,
    #[error("invalid word: {0}")]
    InvalidWord(String),
    #[error("malformed JSON input: {0}")]
    MalformedJson(String),
}

impl Error {
    /// Stable identifier of the error kind.
    pub fn name(&self) -> &'static str {
        match self {
            Error::MixedMode => "MixedMode",
            Error::MixedField(..) => "MixedField",
            Error::DivisionByZero => "DivisionByZero",
            Error::ExactModeUnsupported(_) => "ExactModeUnsupported",
            Error::NonFinite => "NonFinite",
            Error::InvalidDiscriminant(_) => "InvalidDiscriminant",
            Error::InvalidTolerance(_) => "InvalidTolerance",
            Error::NotUnimodular => "NotUnimodular",
            Error::IdentityHasAllPoints => "IdentityHasAllPoints",
            Error::ZeroParameter => "ZeroParameter",
            Error::NotInComponent(_) => "NotInComponent",
            Error::ParabolicTrace => "ParabolicTrace",
            Error::CentralElement => "CentralElement",
            Error::ZeroTransvection => "ZeroTransvection",
            Error::IntertwiningFailure(_) => "IntertwiningFailure",
            Error::ImageEscapesH(_) => "ImageEscapesH",
            Error::BudgetExceeded(_) => "BudgetExceeded",
            Error::NumericalCollision(..) => "NumericalCollision",
            Error::TrivialGamma => "TrivialGamma",
            Error::HomomorphismFailure(..) => "HomomorphismFailure",
            Error::EmptyWindow => "EmptyWindow",
            Error::InvalidWord(_) => "InvalidWord",
            Error::MalformedJson(_) => "MalformedJSON",
        }
    }

    /// True for errors caused by unparseable input rather than by the mathematics.
    pub fn is_malformed_input(&self) -> bool {
        matches!(self, Error::MalformedJson(_) | Error::InvalidWord(_))
    }
}
