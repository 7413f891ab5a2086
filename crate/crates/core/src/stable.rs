//! One-sided strictly stable laws and subordinator increments.
//!
//! `nu` denotes throughout the law on `(0, inf)` with Laplace transform
//! `E exp(-lambda Y) = exp(-lambda^alpha)` for `alpha` in `(0,1)`. Sampling
//! is exact via the Kanter transformation of one uniform and one unit
//! exponential draw; no rejection and no truncation, so the exact
//! self-similarity `Y_1 + ... + Y_n ~ n^(1/alpha) Y_1` carries over to the
//! sampled values in distribution.

use std::f64::consts::PI;

use rand::Rng;
use rayon::prelude::*;
use statrs::function::gamma::gamma;

use crate::error::Error;
use crate::rng::{lane, RngStream};
use crate::Result;

/// Clamp guard for the uniform inputs of the Kanter formula. Keeps the
/// sine ratios and the exponential draw away from the singular endpoints
/// without measurable distributional bias.
const UNIFORM_GUARD: f64 = 1.0 / (1u64 << 40) as f64;

/// Chunk width for parallel batch sampling. Chunk boundaries are fixed, so
/// batch output does not depend on the worker count.
const BATCH_CHUNK: usize = 4096;

/// Stability index `alpha` in (0,1) and moment order `q` in (0, alpha).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StableParams {
    alpha: f64,
    q: f64,
}

impl StableParams {
    pub fn new(alpha: f64, q: f64) -> Result<Self> {
        if !(alpha > 0.0 && alpha < 1.0) || !alpha.is_finite() {
            return Err(Error::InvalidParameter(format!(
                "alpha must lie in (0,1), got {alpha}"
            )));
        }
        if !(q > 0.0 && q < alpha) || !q.is_finite() {
            return Err(Error::InvalidParameter(format!(
                "requires q < alpha with q > 0, got q = {q}, alpha = {alpha}"
            )));
        }
        Ok(Self { alpha, q })
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn q(&self) -> f64 {
        self.q
    }

    /// `1/alpha`, the scaling exponent of collateral sums.
    pub fn inv_alpha(&self) -> f64 {
        1.0 / self.alpha
    }

    /// Laplace transform of `nu` at `lambda >= 0`.
    pub fn laplace(&self, lambda: f64) -> f64 {
        (-lambda.powf(self.alpha)).exp()
    }
}

fn clamped_unit(rng: &mut impl Rng) -> f64 {
    rng.random::<f64>().clamp(UNIFORM_GUARD, 1.0 - UNIFORM_GUARD)
}

fn kanter_draw(alpha: f64, rng: &mut impl Rng) -> f64 {
    let u = PI * clamped_unit(rng);
    let w = -clamped_unit(rng).ln();
    // log-space form of Kanter's representation
    let ln_y = (alpha * u).sin().ln() - u.sin().ln() / alpha
        + ((1.0 - alpha) / alpha) * (((1.0 - alpha) * u).sin().ln() - w.ln());
    ln_y.exp()
}

/// One exact draw from `nu`.
pub fn sample_stable(params: StableParams, stream: &RngStream) -> f64 {
    kanter_draw(params.alpha, &mut stream.rng())
}

/// Several draws from one stream, consumed sequentially.
pub fn sample_stable_seq(params: StableParams, count: usize, rng: &mut impl Rng) -> Vec<f64> {
    (0..count).map(|_| kanter_draw(params.alpha, rng)).collect()
}

/// Parallel batch of draws. Substreams are keyed per fixed-width chunk, so
/// the output is identical for any degree of parallelism.
pub fn sample_stable_batch(params: StableParams, count: usize, stream: &RngStream) -> Vec<f64> {
    let mut out = vec![0.0; count];
    out.par_chunks_mut(BATCH_CHUNK)
        .enumerate()
        .for_each(|(chunk, slot)| {
            let mut rng = stream.lane(lane::BATCH, chunk as u64).rng();
            for y in slot.iter_mut() {
                *y = kanter_draw(params.alpha, &mut rng);
            }
        });
    out
}

/// A subordinator path sampled on a grid: increments per interval plus the
/// grid itself. Increments are nonnegative, so the cumulative path is
/// non-decreasing from `S(0) = 0`.
#[derive(Debug, Clone)]
pub struct IncrementPath {
    grid: Vec<f64>,
    increments: Vec<f64>,
}

impl IncrementPath {
    pub fn new(grid: Vec<f64>, increments: Vec<f64>) -> Result<Self> {
        if grid.len() < 2 || grid[0] != 0.0 {
            return Err(Error::DegenerateGrid);
        }
        if grid.windows(2).any(|w| w[1] <= w[0]) {
            return Err(Error::DegenerateGrid);
        }
        if increments.len() != grid.len() - 1 {
            return Err(Error::LengthMismatch {
                left: grid.len() - 1,
                right: increments.len(),
            });
        }
        if increments.iter().any(|&x| !(x >= 0.0)) {
            return Err(Error::InvalidParameter(
                "subordinator increments must be nonnegative".into(),
            ));
        }
        Ok(Self { grid, increments })
    }

    pub fn grid(&self) -> &[f64] {
        &self.grid
    }

    pub fn increments(&self) -> &[f64] {
        &self.increments
    }

    /// Cumulative values at the grid points, starting at 0.
    pub fn cumulative(&self) -> Vec<f64> {
        let mut acc = 0.0;
        let mut out = Vec::with_capacity(self.grid.len());
        out.push(0.0);
        for &dx in &self.increments {
            acc += dx;
            out.push(acc);
        }
        out
    }

    pub fn terminal(&self) -> f64 {
        *self.cumulative().last().expect("non-empty path")
    }
}

/// Sample `S^alpha` on `grid`: independent increments, the one over an
/// interval of length `h` distributed as `h^(1/alpha) * nu`.
pub fn sample_subordinator(
    params: StableParams,
    grid: &[f64],
    stream: &RngStream,
) -> Result<IncrementPath> {
    if grid.len() < 2 || grid[0] != 0.0 || grid.windows(2).any(|w| w[1] <= w[0]) {
        return Err(Error::DegenerateGrid);
    }
    let mut rng = stream.rng();
    let increments: Vec<f64> = grid
        .windows(2)
        .map(|w| (w[1] - w[0]).powf(params.inv_alpha()) * kanter_draw(params.alpha, &mut rng))
        .collect();
    IncrementPath::new(grid.to_vec(), increments)
}

/// Count law for the random-sum representation.
#[derive(Debug, Clone, Copy)]
pub enum CountLaw {
    Fixed(u64),
    Poisson(f64),
}

/// Output of [`random_sum_scaled`]: the count `P`, the random sum
/// `Z_P = Y_1 + ... + Y_P` and the rescaled variable
/// `Y_tilde = P^(-1/alpha) Z_P` (a fresh `nu` draw when `P = 0`).
#[derive(Debug, Clone, Copy)]
pub struct RandomSum {
    pub count: u64,
    pub sum: f64,
    pub scaled: f64,
}

/// Random-sum representation: `Z_P = P^(1/alpha) * Y_tilde` exactly when
/// `P != 0`, with `Y_tilde ~ nu` independent of `P`.
pub fn random_sum_scaled(
    params: StableParams,
    count_law: CountLaw,
    stream: &RngStream,
) -> RandomSum {
    let mut rng = stream.rng();
    let count = match count_law {
        CountLaw::Fixed(n) => n,
        CountLaw::Poisson(mean) => {
            let law = rand_distr::Poisson::new(mean).expect("positive Poisson mean");
            rand_distr::Distribution::sample(&law, &mut rng) as u64
        }
    };
    let mut sum = 0.0;
    for _ in 0..count {
        sum += kanter_draw(params.alpha, &mut rng);
    }
    let scaled = if count == 0 {
        kanter_draw(params.alpha, &mut rng)
    } else {
        (count as f64).powf(-params.inv_alpha()) * sum
    };
    RandomSum { count, sum, scaled }
}

/// Tail mass `m([x0, inf)) = x0^(-alpha) / Gamma(1 - alpha)` of the jump
/// intensity of `S^alpha`.
pub fn jump_measure_tail(params: StableParams, x0: f64) -> Result<f64> {
    if !(x0 > 0.0) {
        return Err(Error::InvalidParameter(
            "tail mass diverges at 0".into(),
        ));
    }
    Ok(x0.powf(-params.alpha) / gamma(1.0 - params.alpha))
}
