use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use crate::LabError;

/// `2Λ(Λ+1)(2Λ+1)²`, the smallest k covered by the circle bound.
pub fn prop_circle_k(lambda: usize) -> f64 {
    let l = lambda as f64;
    2.0 * l * (l + 1.0) * (2.0 * l + 1.0).powi(2)
}

/// `2^{3Λ+3} Λ^{Λ+5} (Λ+1)`, the smallest k covered by the sphere bound.
pub fn prop_sphere_k(lambda: usize) -> f64 {
    let l = lambda as f64;
    2f64.powi(3 * lambda as i32 + 3) * l.powi(lambda as i32 + 5) * (l + 1.0)
}

/// How k grows with Λ in a sweep.
#[derive(Clone)]
pub enum KSchedule {
    /// `Λ²(Λ+1)²`.
    Default,
    PropCircle,
    PropSphere,
    /// `Λ⁶`: far below the proven schedules, for exploration only.
    Practical,
    Fixed(f64),
    Custom(Arc<dyn Fn(usize) -> f64 + Send + Sync>),
}

impl KSchedule {
    pub fn k(&self, lambda: usize) -> f64 {
        let l = lambda as f64;
        match self {
            Self::Default => l * l * (l + 1.0) * (l + 1.0),
            Self::PropCircle => prop_circle_k(lambda),
            Self::PropSphere => prop_sphere_k(lambda),
            Self::Practical => l.powi(6),
            Self::Fixed(k) => *k,
            Self::Custom(f) => f(lambda),
        }
    }

    pub fn name(&self) -> String {
        match self {
            Self::Default => "default".into(),
            Self::PropCircle => "prop-circle".into(),
            Self::PropSphere => "prop-sphere".into(),
            Self::Practical => "practical".into(),
            Self::Fixed(k) => format!("fixed({k})"),
            Self::Custom(_) => "custom".into(),
        }
    }
}

impl fmt::Debug for KSchedule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "KSchedule({})", self.name())
    }
}

impl FromStr for KSchedule {
    type Err = LabError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "default" => Ok(Self::Default),
            "prop-circle" => Ok(Self::PropCircle),
            "prop-sphere" => Ok(Self::PropSphere),
            "practical" => Ok(Self::Practical),
            _ => Err(LabError::UnknownSchedule(s.to_string())),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn schedule_values() {
        assert_eq!(KSchedule::PropCircle.k(1), 36.0);
        assert_eq!(KSchedule::PropCircle.k(2), 300.0);
        // 2^6 · 1 · 2
        assert_eq!(KSchedule::PropSphere.k(1), 128.0);
        // 2^9 · 2^7 · 3
        assert_eq!(KSchedule::PropSphere.k(2), 196608.0);
        assert_eq!(KSchedule::Default.k(3), 144.0);
        assert_eq!(KSchedule::Practical.k(2), 64.0);
        assert_eq!(KSchedule::Custom(Arc::new(|l| l as f64 + 0.5)).k(3), 3.5);
    }

    #[test]
    fn parse_names() {
        for name in ["default", "prop-circle", "prop-sphere", "practical"] {
            assert_eq!(name.parse::<KSchedule>().unwrap().name(), name);
        }
        assert!("quadratic".parse::<KSchedule>().is_err());
    }
}
