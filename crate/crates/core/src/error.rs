use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("probability {name} = {value} outside [0, 1]")]
    InvalidProbability { name: &'static str, value: f64 },

    #[error("{what} not on simplex: ({a}, {b}, {c})", a = .components.0, b = .components.1, c = .components.2)]
    InvalidSimplex {
        what: &'static str,
        components: (f64, f64, f64),
    },

    #[error("point ({x}, {y}, {z}) is not on the unit sphere", x = .0 .0, y = .0 .1, z = .0 .2)]
    OffSphere((f64, f64, f64)),

    #[error("determinant {0} is singular")]
    SingularDeterminant(f64),

    #[error("elimination distribution is infeasible")]
    Infeasible,

    #[error("invalid parameter: {0}")]
    InvalidParameter(&'static str),

    #[error("relevant area never drops below {threshold} in the tested range")]
    NoVanishingFound { threshold: f64 },
}
