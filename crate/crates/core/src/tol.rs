/// Numerical tolerances and search sizes. Values are `f64` and are floored per
/// scalar type at the point of use.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerances {
    /// Allowed mismatch of pseudo-hyperbolic distances in two-point interpolation.
    pub interp: f64,
    /// Unimodularity of rotation factors.
    pub unimodular: f64,
    /// `|s^2 - 4p|` threshold for the royal variety.
    pub royal: f64,
    /// Gap below which a distance report counts as tight.
    pub gap: f64,
    /// Upper edge of the ambiguous band for flat pairings.
    pub ambiguous: f64,
    /// Certificate acceptance: ratio at least `1 - certificate`.
    pub certificate: f64,
    /// Certificate search gives up below `1 - certificate_floor`.
    pub certificate_floor: f64,
    /// Residual at which an analytic disc counts as hitting both points.
    pub witness: f64,
    /// Points with `1 - |z|` below this are rejected by distance operations.
    pub boundary: f64,
    /// Angle grid for the extremal-function sweep.
    pub omega_grid: usize,
    /// Golden-section stopping width in angle.
    pub angle: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Self {
            interp: 1e-9,
            unimodular: 1e-12,
            royal: 1e-10,
            gap: 1e-6,
            ambiguous: 1e-6,
            certificate: 1e-8,
            certificate_floor: 1e-6,
            witness: 1e-8,
            boundary: 1e-12,
            omega_grid: 1024,
            angle: 1e-12,
        }
    }
}
