use crate::integrate;

/// `∫₀^∞ e^{−a(r+b)²} dr` and its large-`ab²` estimate
/// `e^{−ab²}/(2ab) [1 − 1/(2ab²)]`, both stored without the common factor
/// `e^{−ab²}`, which underflows for the stiffnesses of interest.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TailShift {
    /// `−ab²`.
    pub log_prefactor: f64,
    pub exact_scaled: f64,
    pub estimate_scaled: f64,
}

impl TailShift {
    pub fn exact(&self) -> f64 {
        self.log_prefactor.exp() * self.exact_scaled
    }

    pub fn estimate(&self) -> f64 {
        self.log_prefactor.exp() * self.estimate_scaled
    }

    pub fn ratio(&self) -> f64 {
        self.estimate_scaled / self.exact_scaled
    }
}

/// Requires `a > 0`, `b > 0`; other inputs give NaN fields.
pub fn tail_shift_bound(a: f64, b: f64) -> TailShift {
    if !(a > 0.0 && b > 0.0) {
        return TailShift { log_prefactor: f64::NAN, exact_scaled: f64::NAN, estimate_scaled: f64::NAN };
    }
    // e^{−a(s+b)²} = e^{−ab²} e^{−a s (2b + s)}; cut where the exponent reaches 80
    let end = -b + (b * b + 80.0 / a).sqrt();
    let exact_scaled = integrate(|s| (-a * s * (2.0 * b + s)).exp(), 0.0, end, 1e-14);
    let estimate_scaled = (1.0 - 1.0 / (2.0 * a * b * b)) / (2.0 * a * b);
    TailShift { log_prefactor: -a * b * b, exact_scaled, estimate_scaled }
}
