use std::fmt;

/// Everything that ends a run early, with its exit code.
#[derive(Debug)]
pub enum Failure {
    /// Malformed arguments or JSON, unreadable files.
    Input(String),
    Lib(bidisc::Error),
    /// Some pair missed by more than the tolerance.
    Verify(f64),
    Internal(String),
}

impl Failure {
    pub fn code(&self) -> u8 {
        use bidisc::Error as E;
        match self {
            Self::Input(_) | Self::Internal(_) => 1,
            Self::Verify(_) => 3,
            Self::Lib(e) => match e {
                E::Domain(_)
                | E::Degenerate(_)
                | E::Infeasible(_)
                | E::Unbalanced { .. }
                | E::Ambiguous { .. }
                | E::RoyalCrossing { .. }
                | E::Classification(_) => 2,
                E::Certification { .. } | E::NoWitness { .. } => 3,
                E::Internal(_) => 1,
            },
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Input(m) => write!(f, "{m}"),
            Self::Lib(e) => write!(f, "{e}"),
            Self::Verify(d) => write!(f, "verification failed: worst deviation {d:e}"),
            Self::Internal(m) => write!(f, "internal error: {m}"),
        }
    }
}

impl From<bidisc::Error> for Failure {
    fn from(e: bidisc::Error) -> Self {
        Self::Lib(e)
    }
}

impl From<csv::Error> for Failure {
    fn from(e: csv::Error) -> Self {
        Self::Internal(e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Self::Internal(e.to_string())
    }
}
