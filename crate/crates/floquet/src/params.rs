//! Model configuration: the single source of truth for a computation run.

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// Parameters of the model and of all cutoff-qualified scans.
///
/// The weight exponents are tied together: ψ(k) = k^(−σ)/2 governs the
/// frequency set Ω(γ), ψ̃(k) = k^(−τ)/4 governs the spectral set Λ, and the
/// λ-scaling exponent is ρ = 1/σ. The admissible window is 1 < σ < 2 with
/// τ = 2 fixed by the quadratic growth of E(k) = k².
///
/// Serializes to a flat JSON object with exactly these keys.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct ModelParams {
    /// Driving frequency ω > 0; irrational values avoid exact resonances.
    pub omega: f64,
    /// Diophantine constant γ ∈ (0, 1] in |F(n)| ≥ ωγψ(n₂).
    pub gamma: f64,
    /// Exponent σ of ψ(k) = k^(−σ)/2, with 1 < σ < 2.
    pub sigma: f64,
    /// Exponent τ of ψ̃(k) = k^(−τ)/4; fixed to 2 for E(k) = k².
    pub tau: f64,
    /// λ-scaling exponent ρ = 1/σ ∈ (1/2, 1).
    pub rho: f64,
    /// Largest |n₂| scanned when testing set membership.
    pub n2_cutoff: u32,
    /// Largest path length / series order enumerated.
    pub path_cutoff: u32,
}

impl Default for ModelParams {
    fn default() -> Self {
        ModelParams::for_omega(std::f64::consts::SQRT_2)
    }
}

impl ModelParams {
    /// Default configuration at a given frequency.
    ///
    /// γ = 0.05 is verified against the scan for ω = √2 up to n₂ = 1000
    /// (the binding constraint is n₂ = 1 where |F| = √2 − 1); callers using
    /// other frequencies should confirm with `diophantine::in_omega_set`.
    pub fn for_omega(omega: f64) -> Self {
        let sigma = 1.5;
        ModelParams {
            omega,
            gamma: 0.05,
            sigma,
            tau: 2.0,
            rho: 1.0 / sigma,
            n2_cutoff: 200,
            path_cutoff: 12,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.omega > 0.0) || !self.omega.is_finite() {
            return Err(Error::InvalidParams(format!("omega = {} must be > 0", self.omega)));
        }
        if !(self.gamma > 0.0 && self.gamma <= 1.0) {
            return Err(Error::InvalidParams(format!(
                "gamma = {} must lie in (0, 1]",
                self.gamma
            )));
        }
        if !(self.sigma > 1.0 && self.sigma < 2.0) {
            return Err(Error::InvalidParams(format!(
                "sigma = {} must lie in (1, 2)",
                self.sigma
            )));
        }
        if self.tau != 2.0 {
            return Err(Error::InvalidParams(format!("tau = {} must equal 2", self.tau)));
        }
        if (self.rho - 1.0 / self.sigma).abs() > 1e-12 {
            return Err(Error::InvalidParams(format!(
                "rho = {} must equal 1/sigma = {}",
                self.rho,
                1.0 / self.sigma
            )));
        }
        // Density of Λ at 0 needs tau > 1 + sigma(1 - rho); with rho = 1/sigma
        // this reduces to sigma < 2, but check the general form so that a
        // hand-edited config cannot silently break the hypothesis.
        if self.tau <= 1.0 + self.sigma * (1.0 - self.rho) {
            return Err(Error::InvalidParams(format!(
                "tau = {} must exceed 1 + sigma(1 - rho) = {}",
                self.tau,
                1.0 + self.sigma * (1.0 - self.rho)
            )));
        }
        if self.n2_cutoff == 0 || self.path_cutoff == 0 {
            return Err(Error::InvalidParams("cutoffs must be >= 1".into()));
        }
        Ok(())
    }

    /// ψ(k) = k^(−σ)/2 for k ≥ 1, extended by ψ(0) = 1.
    pub fn psi(&self, k: u32) -> f64 {
        if k == 0 {
            1.0
        } else {
            0.5 * (k as f64).powf(-self.sigma)
        }
    }

    /// ψ̃(k) = k^(−τ)/4 for k ≥ 1.
    pub fn psi_tilde(&self, k: u32) -> f64 {
        debug_assert!(k >= 1, "psi_tilde is only used at k >= 1");
        0.25 * (k as f64).powf(-self.tau)
    }

    /// The λ-dependent scale (2|λ|/ω)^ρ appearing in the Λ condition and in
    /// every resolvent bound.
    pub fn lambda_scale(&self, lambda: f64) -> f64 {
        (2.0 * lambda.abs() / self.omega).powf(self.rho)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults_validate() {
        ModelParams::default().validate().unwrap();
    }

    #[test]
    fn rejects_bad_sigma() {
        let mut p = ModelParams::default();
        p.sigma = 2.5;
        assert!(p.validate().is_err());
        p.sigma = 1.0;
        assert!(p.validate().is_err());
    }

    #[test]
    fn rejects_rho_mismatch() {
        let mut p = ModelParams::default();
        p.rho = 0.9;
        assert!(p.validate().is_err());
    }

    #[test]
    fn json_round_trip_is_flat() {
        let p = ModelParams::default();
        let json = serde_json::to_value(&p).unwrap();
        let obj = json.as_object().unwrap();
        for key in ["omega", "gamma", "sigma", "tau", "rho", "n2_cutoff", "path_cutoff"] {
            assert!(obj.contains_key(key), "missing key {key}");
        }
        assert_eq!(obj.len(), 7);
        let back: ModelParams = serde_json::from_value(json).unwrap();
        assert_eq!(back, p);
    }

    #[test]
    fn psi_edge_values() {
        let p = ModelParams::default();
        assert_eq!(p.psi(0), 1.0);
        assert_eq!(p.psi(1), 0.5);
        assert_eq!(p.psi_tilde(1), 0.25);
        // psi_tilde(k) <= psi(k)/2 for all k >= 1 requires sigma <= tau
        for k in 1..100 {
            assert!(p.psi_tilde(k) <= p.psi(k) / 2.0 + 1e-18);
        }
    }
}
