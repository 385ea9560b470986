//! The harmonic-plus-inverse-square partner potentials whose bound
//! states reproduce the algebraic ladder spectra.

use crate::error::{Error, Result};

/// Which member of the partner pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PotentialFamily {
    /// V₀(x) = κ²x²/4 + (1−κ²)/(4κ²) x⁻² − (κ − 1/2)
    V0,
    /// V₁(x) = κ²x²/4 − (1−κ)(3κ−1)/(4κ²) x⁻² + 1/2
    V1,
}

impl PotentialFamily {
    pub fn as_str(&self) -> &'static str {
        match self {
            PotentialFamily::V0 => "v0",
            PotentialFamily::V1 => "v1",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "v0" => Ok(PotentialFamily::V0),
            "v1" => Ok(PotentialFamily::V1),
            other => Err(Error::Parse(format!("unknown potential '{other}'"))),
        }
    }
}

/// A potential family pinned to a deformation value.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PotentialSpec {
    pub family: PotentialFamily,
    pub kappa: f64,
}

impl PotentialSpec {
    pub fn new(family: PotentialFamily, kappa: f64) -> Result<Self> {
        if !kappa.is_finite() || kappa <= 0.0 {
            return Err(Error::NonPositiveKappa(kappa.to_string()));
        }
        Ok(PotentialSpec { family, kappa })
    }

    /// Coefficient of the x⁻² term.
    pub fn singular_coefficient(&self) -> f64 {
        let k = self.kappa;
        match self.family {
            PotentialFamily::V0 => (1.0 - k * k) / (4.0 * k * k),
            PotentialFamily::V1 => -(1.0 - k) * (3.0 * k - 1.0) / (4.0 * k * k),
        }
    }

    /// Constant offset.
    pub fn offset(&self) -> f64 {
        match self.family {
            PotentialFamily::V0 => -(self.kappa - 0.5),
            PotentialFamily::V1 => 0.5,
        }
    }
}

/// Potential value on the open half line.
pub fn potential_value(spec: &PotentialSpec, x: f64) -> Result<f64> {
    if x.is_nan() || x <= 0.0 {
        return Err(Error::NonPositivePosition(x));
    }
    let k = spec.kappa;
    Ok(k * k * x * x / 4.0 + spec.singular_coefficient() / (x * x) + spec.offset())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn v1_at_one_third_is_pure_harmonic() {
        // 3κ − 1 = 0 kills the singular term, leaving x²/36 + 1/2
        let spec = PotentialSpec::new(PotentialFamily::V1, 1.0 / 3.0).unwrap();
        assert_eq!(spec.singular_coefficient(), 0.0);
        for x in [0.3, 1.0, 2.5] {
            let v = potential_value(&spec, x).unwrap();
            assert!((v - (x * x / 36.0 + 0.5)).abs() < 1e-15);
        }
    }

    #[test]
    fn v0_at_kappa_one_is_pure_harmonic() {
        let spec = PotentialSpec::new(PotentialFamily::V0, 1.0).unwrap();
        assert_eq!(spec.singular_coefficient(), 0.0);
        let v = potential_value(&spec, 2.0).unwrap();
        assert!((v - (1.0 - 0.5)).abs() < 1e-15);
    }

    #[test]
    fn v0_frozen_value() {
        // V₀(1, κ=1/2) = 1/16 + 3/4 + 0
        let spec = PotentialSpec::new(PotentialFamily::V0, 0.5).unwrap();
        let v = potential_value(&spec, 1.0).unwrap();
        assert!((v - (1.0 / 16.0 + 3.0 / 4.0)).abs() < 1e-15);
    }

    #[test]
    fn rejects_bad_domain() {
        assert!(PotentialSpec::new(PotentialFamily::V0, 0.0).is_err());
        let spec = PotentialSpec::new(PotentialFamily::V0, 0.5).unwrap();
        assert!(potential_value(&spec, 0.0).is_err());
        assert!(potential_value(&spec, -1.0).is_err());
    }
}
