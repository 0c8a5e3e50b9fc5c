//! # Analog gradient channel
//!
//! Encoder, additive-noise channel, and decoder for transmitting gradients
//! under a per-iteration power `sigma_t^2`:
//!
//! ```text
//!     enc(g) = sigma_t * g / G,      received = enc(g) + n_t,
//!     dec(r) = (G / sigma_t) * r  =  g + (G / sigma_t) * n_t .
//! ```
//!
//! The noise `n_t` is zero-mean with `E ||n||^2 = sigma_N^2` exactly and
//! `||n|| <= Delta` almost surely. Two generators satisfy both conditions
//! behind the same interface:
//!
//! * [`NoiseModel::TwoPointRadius`] (default) — direction uniform on the unit
//!   sphere, radius on `{sqrt(sigma_N^2/2), Delta}` with the mixing
//!   probability solved in closed form from `E r^2 = sigma_N^2`;
//! * [`NoiseModel::TruncatedGaussian`] — an isotropic Gaussian rejected at
//!   norm `Delta`, with its scale re-calibrated after truncation so the
//!   second moment still equals `sigma_N^2`.
//!
//! One root seed drives a whole run; per-iteration seeds come from
//! [`iteration_seed`], a splittable counter, so runs are reproducible and
//! iterations are independent.

use nalgebra::DVector;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use statrs::distribution::{ChiSquared, ContinuousCDF};

use crate::error::{Error, Result};

/// Noise distribution used by [`transmit`].
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub enum NoiseModel {
    #[default]
    TwoPointRadius,
    /// Carries the calibrated pre-truncation scale.
    TruncatedGaussian { scale: f64 },
}

/// Static description of the channel and encoder.
#[derive(Debug, Clone, PartialEq)]
pub struct ChannelSpec {
    /// Second moment of the noise norm, `sigma_N^2`.
    pub noise_power: f64,
    /// Almost-sure bound `Delta` on the noise norm.
    pub noise_bound: f64,
    /// Encoder normalization constant `G` (a gradient-norm bound).
    pub grad_bound: f64,
    /// Ambient dimension of the transmitted vectors.
    pub dim: usize,
    pub model: NoiseModel,
}

impl ChannelSpec {
    /// Validates `Delta > 0`, `sigma_N^2 in [0, Delta^2]`, `G > 0`, `dim >= 1`
    /// and selects the default two-point noise model.
    pub fn new(noise_power: f64, noise_bound: f64, grad_bound: f64, dim: usize) -> Result<Self> {
        if !noise_power.is_finite() || noise_power < 0.0 {
            return Err(Error::InvalidInput(format!(
                "noise power must be nonnegative, got {noise_power}"
            )));
        }
        if !noise_bound.is_finite() || noise_bound < 0.0 {
            return Err(Error::InvalidInput(format!(
                "noise bound must be nonnegative, got {noise_bound}"
            )));
        }
        if noise_bound * noise_bound < noise_power {
            return Err(Error::InvalidInput(format!(
                "a norm bounded by {noise_bound} cannot have second moment {noise_power}"
            )));
        }
        if !grad_bound.is_finite() || grad_bound <= 0.0 {
            return Err(Error::InvalidInput(format!(
                "gradient bound must be positive, got {grad_bound}"
            )));
        }
        if dim == 0 {
            return Err(Error::InvalidInput("channel dimension must be at least 1".into()));
        }
        Ok(Self {
            noise_power,
            noise_bound,
            grad_bound,
            dim,
            model: NoiseModel::TwoPointRadius,
        })
    }

    /// Switches to the truncated-Gaussian generator, calibrating its scale.
    ///
    /// Truncation caps the achievable second moment at
    /// `Delta^2 * d / (d + 2)`; requesting more than that is rejected.
    pub fn with_truncated_gaussian(mut self) -> Result<Self> {
        let scale = calibrate_truncated_gaussian(self.noise_power, self.noise_bound, self.dim)?;
        self.model = NoiseModel::TruncatedGaussian { scale };
        Ok(self)
    }
}

/// Solves for the Gaussian scale `s` such that `s^2 E[X | X <= (Delta/s)^2] =
/// sigma_N^2` with `X ~ chi^2_d`, by bisection on the monotone map `s ->
/// E||n||^2`.
fn calibrate_truncated_gaussian(noise_power: f64, noise_bound: f64, dim: usize) -> Result<f64> {
    if noise_power == 0.0 {
        return Ok(0.0);
    }
    let d = dim as f64;
    let sup = noise_bound * noise_bound * d / (d + 2.0);
    if noise_power >= sup {
        return Err(Error::InvalidInput(format!(
            "truncated-Gaussian noise cannot reach second moment {noise_power} under bound \
             {noise_bound} in dimension {dim} (supremum {sup})"
        )));
    }
    let chi_d = ChiSquared::new(d)
        .map_err(|e| Error::NumericalFailure(format!("chi-squared({d}): {e}")))?;
    let chi_d2 = ChiSquared::new(d + 2.0)
        .map_err(|e| Error::NumericalFailure(format!("chi-squared({}): {e}", d + 2.0)))?;
    // E[X | X <= c] = d * F_{d+2}(c) / F_d(c).
    let second_moment = |s: f64| -> f64 {
        let c = (noise_bound / s).powi(2);
        s * s * d * chi_d2.cdf(c) / chi_d.cdf(c)
    };
    let (mut lo, mut hi) = (0.0, noise_bound * 10.0);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if second_moment(mid) < noise_power {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// Deterministic per-iteration seed derived from a run's root seed
/// (splitmix64 over a golden-ratio stride).
pub fn iteration_seed(root_seed: u64, t: u64) -> u64 {
    let mut z = root_seed ^ (t.wrapping_add(1)).wrapping_mul(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Encodes a gradient for transmission at power `sigma_t^2`:
/// `sigma_t * gradient / G`.
pub fn encode(gradient: &DVector<f64>, power: f64, spec: &ChannelSpec) -> Result<DVector<f64>> {
    if !power.is_finite() || power <= 0.0 {
        return Err(Error::InvalidInput(format!(
            "transmit power must be positive, got {power}"
        )));
    }
    if gradient.len() != spec.dim {
        return Err(Error::InvalidInput(format!(
            "gradient dimension {} does not match channel dimension {}",
            gradient.len(),
            spec.dim
        )));
    }
    Ok(gradient * (power.sqrt() / spec.grad_bound))
}

/// Draws one noise vector from the spec's model: zero mean,
/// `E ||n||^2 = sigma_N^2`, and `||n|| <= Delta` (asserted).
pub fn draw_noise(spec: &ChannelSpec, rng: &mut impl Rng) -> DVector<f64> {
    if spec.noise_power == 0.0 {
        return DVector::zeros(spec.dim);
    }
    let mut n = match spec.model {
        NoiseModel::TwoPointRadius => {
            // P(r = r_lo) chosen so E r^2 = sigma_N^2 with r_lo^2 = sigma_N^2/2.
            let delta_sq = spec.noise_bound * spec.noise_bound;
            let r_lo_sq = 0.5 * spec.noise_power;
            let p_lo = (delta_sq - spec.noise_power) / (delta_sq - r_lo_sq);
            let radius = if rng.gen::<f64>() < p_lo { r_lo_sq.sqrt() } else { spec.noise_bound };
            let dir = random_unit_vector(spec.dim, rng);
            dir * radius
        }
        NoiseModel::TruncatedGaussian { scale } => {
            let mut attempts = 0;
            loop {
                let raw = DVector::from_fn(spec.dim, |_, _| {
                    scale * rng.sample::<f64, _>(StandardNormal)
                });
                if raw.norm() <= spec.noise_bound {
                    break raw;
                }
                attempts += 1;
                assert!(attempts < 100_000, "truncated-Gaussian rejection loop stalled");
            }
        }
    };
    // Rounding in the direction normalization can overshoot the bound by a
    // few ulps; clamp so the almost-sure bound holds exactly.
    let mut norm = n.norm();
    assert!(
        norm <= spec.noise_bound * (1.0 + 1e-12),
        "noise draw violated the almost-sure bound: {} > {}",
        norm,
        spec.noise_bound
    );
    let mut shrink = spec.noise_bound / norm;
    while norm > spec.noise_bound {
        n *= shrink;
        norm = n.norm();
        shrink = 1.0 - f64::EPSILON;
    }
    n
}

fn random_unit_vector(dim: usize, rng: &mut impl Rng) -> DVector<f64> {
    loop {
        let v = DVector::from_fn(dim, |_, _| rng.sample::<f64, _>(StandardNormal));
        let norm = v.norm();
        if norm > 1e-12 {
            return v / norm;
        }
    }
}

/// Sends an encoded vector through the noisy channel with a fresh noise draw
/// seeded by `seed`; draws with distinct seeds are independent.
pub fn transmit(encoded: &DVector<f64>, spec: &ChannelSpec, seed: u64) -> Result<DVector<f64>> {
    if encoded.len() != spec.dim {
        return Err(Error::InvalidInput(format!(
            "encoded dimension {} does not match channel dimension {}",
            encoded.len(),
            spec.dim
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok(encoded + draw_noise(spec, &mut rng))
}

/// Decodes a received vector: `(G / sigma_t) * received`, so that
/// `dec(transmit(enc(g))) = g + (G / sigma_t) * n`.
pub fn decode(received: &DVector<f64>, power: f64, spec: &ChannelSpec) -> Result<DVector<f64>> {
    if !power.is_finite() || power <= 0.0 {
        return Err(Error::InvalidInput(format!(
            "transmit power must be positive, got {power}"
        )));
    }
    if received.len() != spec.dim {
        return Err(Error::InvalidInput(format!(
            "received dimension {} does not match channel dimension {}",
            received.len(),
            spec.dim
        )));
    }
    Ok(received * (spec.grad_bound / power.sqrt()))
}
