//! Rotational surfaces in R³ whose principal curvatures differ by a constant.
//!
//! The meridian `(r(s), z(s))` is parametrized by arclength with tangent angle
//! `φ`: `r′ = cos φ`, `z′ = sin φ`. The normal points toward increasing `r`
//! when `φ = π/2`. Meridian curvature `κ_m = φ′`, parallel curvature
//! `κ_p = sin φ / r`, and the constraint `κ_m − κ_p = c` gives
//! `φ′ = c + sin φ / r`.

use std::io::Write;

use serde::Serialize;

use crate::error::{Error, Result};

pub const R_MIN: f64 = 1e-6;
pub const MAX_STEP: f64 = 1e-3;

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct ProfileSample {
    pub s: f64,
    pub r: f64,
    pub z: f64,
    pub phi: f64,
    pub kappa_m: f64,
    pub kappa_p: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ProfileCurve {
    pub c: f64,
    pub step: f64,
    pub samples: Vec<ProfileSample>,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct WeingartenSeed {
    pub c: f64,
    pub r0: f64,
    pub phi0: f64,
    pub s_max: f64,
    pub step: f64,
}

impl WeingartenSeed {
    pub fn new(c: f64, r0: f64, phi0: f64, s_max: f64) -> Self {
        WeingartenSeed { c, r0, phi0, s_max, step: MAX_STEP }
    }
}

type State = [f64; 3];

fn rhs(c: f64, y: &State) -> State {
    let [r, _, phi] = *y;
    [phi.cos(), phi.sin(), c + phi.sin() / r]
}

fn sample(c: f64, s: f64, y: &State) -> ProfileSample {
    let [r, z, phi] = *y;
    let kappa_p = phi.sin() / r;
    ProfileSample { s, r, z, phi, kappa_m: c + kappa_p, kappa_p }
}

fn axpy(y: &State, h: f64, k: &State) -> State {
    [y[0] + h * k[0], y[1] + h * k[1], y[2] + h * k[2]]
}

/// Fixed-step RK4 from `(r0, 0, φ0)` up to arclength `s_max`. Reaching
/// `r ≤ R_MIN` is an `AxisCollision` carrying the arclength reached.
pub fn integrate_weingarten(seed: &WeingartenSeed) -> Result<ProfileCurve> {
    let WeingartenSeed { c, r0, phi0, s_max, step } = *seed;
    if !r0.is_finite() || r0 <= 0.0 {
        return Err(Error::Precondition(format!("r0 = {r0} must be positive")));
    }
    if !(step > 0.0 && step <= MAX_STEP) {
        return Err(Error::Precondition(format!("step {step} must lie in (0, {MAX_STEP}]")));
    }
    if !s_max.is_finite() || s_max < 0.0 {
        return Err(Error::Precondition(format!("s_max = {s_max} must be nonnegative")));
    }
    let n = (s_max / step).ceil() as usize;
    let h = if n == 0 { 0.0 } else { s_max / n as f64 };
    let mut y: State = [r0, 0.0, phi0];
    let mut samples = Vec::with_capacity(n + 1);
    samples.push(sample(c, 0.0, &y));
    for i in 0..n {
        let k1 = rhs(c, &y);
        let k2 = rhs(c, &axpy(&y, h / 2.0, &k1));
        let k3 = rhs(c, &axpy(&y, h / 2.0, &k2));
        let k4 = rhs(c, &axpy(&y, h, &k3));
        let next = [
            y[0] + h / 6.0 * (k1[0] + 2.0 * k2[0] + 2.0 * k3[0] + k4[0]),
            y[1] + h / 6.0 * (k1[1] + 2.0 * k2[1] + 2.0 * k3[1] + k4[1]),
            y[2] + h / 6.0 * (k1[2] + 2.0 * k2[2] + 2.0 * k3[2] + k4[2]),
        ];
        let s = (i + 1) as f64 * h;
        if !next.iter().all(|x| x.is_finite()) || next[0] <= R_MIN {
            return Err(Error::AxisCollision(s));
        }
        y = next;
        samples.push(sample(c, s, &y));
    }
    Ok(ProfileCurve { c, step: h, samples })
}

impl ProfileCurve {
    /// `max |κ_m − κ_p − c|`.
    pub fn constraint_residual(&self) -> f64 {
        self.samples.iter().map(|p| (p.kappa_m - p.kappa_p - self.c).abs()).fold(0.0, f64::max)
    }

    /// `max κ_m − min κ_m`.
    pub fn meridian_range(&self) -> f64 {
        let (lo, hi) = self
            .samples
            .iter()
            .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), p| (lo.min(p.kappa_m), hi.max(p.kappa_m)));
        if self.samples.is_empty() {
            0.0
        } else {
            hi - lo
        }
    }

    /// `max |r′² + z′² − 1|` from the tangent angle.
    pub fn arclength_residual(&self) -> f64 {
        self.samples.iter().map(|p| (p.phi.cos().powi(2) + p.phi.sin().powi(2) - 1.0).abs()).fold(0.0, f64::max)
    }

    /// Largest deviation of `r² + (z − z₀)²` from its initial value.
    pub fn circle_residual(&self, z0: f64) -> f64 {
        let Some(first) = self.samples.first() else {
            return 0.0;
        };
        let rho = first.r.powi(2) + (first.z - z0).powi(2);
        self.samples.iter().map(|p| (p.r.powi(2) + (p.z - z0).powi(2) - rho).abs()).fold(0.0, f64::max)
    }

    pub fn write_csv<W: Write>(&self, mut out: W) -> std::io::Result<()> {
        writeln!(out, "s,r,z,phi,kappa_m,kappa_p")?;
        for p in &self.samples {
            writeln!(out, "{:.12e},{:.12e},{:.12e},{:.12e},{:.12e},{:.12e}", p.s, p.r, p.z, p.phi, p.kappa_m, p.kappa_p)?;
        }
        Ok(())
    }
}
