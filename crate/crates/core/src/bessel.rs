//! Modified Bessel functions of the first kind for complex arguments with
//! `Re z >= 0`, of the second kind for positive real arguments, and finite
//! continued fractions evaluated through the convergent recurrence.
//!
//! Everything here is evaluated in exponentially scaled form
//! `I_nu(z) * exp(-Re z)` internally; unscaled values are exposed only when
//! they are representable in f64.

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Rescaling threshold for the backward recurrence. Trial values are divided
/// by this once they exceed it, keeping the recurrence inside f64 range.
const RESCALE_LIMIT: f64 = 1e250;

/// Argument bundle for an `I`-family evaluation: the (complex) argument and
/// the highest order needed.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BesselArg {
    pub z: Complex64,
    pub nu_max: u32,
}

impl BesselArg {
    /// Validates the argument: finite, `Re z >= 0`.
    pub fn new(z: Complex64, nu_max: u32) -> Result<Self> {
        if !z.re.is_finite() || !z.im.is_finite() {
            return Err(Error::InvalidArgument(format!(
                "bessel argument must be finite, got {z}"
            )));
        }
        if z.re < 0.0 {
            return Err(Error::InvalidArgument(format!(
                "bessel argument must have Re z >= 0, got {z}"
            )));
        }
        Ok(Self { z, nu_max })
    }
}

/// Starting order for the backward (Miller) recurrence.
///
/// The seed error contaminates the result by roughly
/// `exp(-(L^2 - nu^2)/|z|)` once `L` is past the turning point, so for large
/// arguments the start must grow like `sqrt(nu^2 + C |z|)`; for small
/// arguments the classical `nu + 10 + 2 sqrt(|z|)` margin is enough.
fn start_order(abs_z: f64, nu_max: u32) -> u32 {
    let nu = nu_max as f64;
    let classical = nu + (10.0 + 2.0 * abs_z.sqrt()).ceil();
    let large_arg = (nu * nu + 40.0 * abs_z).sqrt().ceil() + 10.0;
    classical.max(large_arg) as u32
}

/// Backward recurrence with the generating-function normalization
/// `I_0 + 2 sum_{n>=1} I_n = e^z`. Returns `I_n(z) * exp(-Re z)` for
/// `n = 0..=nu_max`. Caller guarantees `z != 0`, finite, `Re z >= 0`.
fn miller_scaled(z: Complex64, nu_max: u32) -> Vec<Complex64> {
    let start = start_order(z.norm(), nu_max);
    let mut vals = vec![Complex64::ZERO; nu_max as usize + 1];

    let mut above = Complex64::ZERO; // trial I_{n+1}
    let mut here = Complex64::new(1.0, 0.0); // trial I_n, n = start
    let mut norm = Complex64::ZERO; // accumulates 2 * sum_{n>=1} I_n
    if start <= nu_max {
        vals[start as usize] = here;
    }
    norm += 2.0 * here;

    let two_over_z = 2.0 / z;
    for n in (1..=start).rev() {
        let below = above + two_over_z * (n as f64) * here;
        above = here;
        here = below;
        let m = n - 1;
        if m <= nu_max {
            vals[m as usize] = here;
        }
        if m >= 1 {
            norm += 2.0 * here;
        } else {
            norm += here;
        }
        if here.norm_sqr() > RESCALE_LIMIT * RESCALE_LIMIT {
            let s = 1.0 / RESCALE_LIMIT;
            above *= s;
            here *= s;
            norm *= s;
            for v in vals.iter_mut() {
                *v *= s;
            }
        }
    }

    // True scaled values are trial * e^{i Im z} / norm.
    let phase = Complex64::new(0.0, z.im).exp();
    let scale = phase / norm;
    for v in vals.iter_mut() {
        *v *= scale;
    }
    vals
}

/// Exponentially scaled family `I_0(z) e^{-Re z} ... I_{nu_max}(z) e^{-Re z}`.
///
/// Stays finite for arbitrarily large `Re z`; this is the form every other
/// module consumes.
pub fn bessel_i_family_scaled(arg: &BesselArg) -> Result<Vec<Complex64>> {
    let arg = BesselArg::new(arg.z, arg.nu_max)?;
    if arg.z == Complex64::ZERO {
        let mut vals = vec![Complex64::ZERO; arg.nu_max as usize + 1];
        vals[0] = Complex64::new(1.0, 0.0);
        return Ok(vals);
    }
    Ok(miller_scaled(arg.z, arg.nu_max))
}

/// Unscaled family `I_0(z) ... I_{nu_max}(z)`.
///
/// Fails with [`Error::Overflow`] when `e^{Re z}` (and with it the result)
/// leaves f64 range; callers that only need ratios should use
/// [`bessel_i_family_scaled`] or [`bessel_i_ratio`].
pub fn bessel_i_family(arg: &BesselArg) -> Result<Vec<Complex64>> {
    let scaled = bessel_i_family_scaled(arg)?;
    if arg.z == Complex64::ZERO {
        return Ok(scaled);
    }
    let growth = arg.z.re.exp();
    if !growth.is_finite() {
        return Err(Error::Overflow(format!(
            "e^(Re z) with Re z = {} exceeds f64",
            arg.z.re
        )));
    }
    let vals: Vec<Complex64> = scaled.into_iter().map(|v| v * growth).collect();
    if vals.iter().any(|v| !v.re.is_finite() || !v.im.is_finite()) {
        return Err(Error::Overflow(format!(
            "unscaled I_nu({}) exceeds f64",
            arg.z
        )));
    }
    Ok(vals)
}

/// Ratio `I_nu(z) / I_0(z)` with the `z = 0` limit convention.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IRatio {
    pub value: Complex64,
    /// Set when `z = 0` and `nu > 0`: the returned 0 is the limit value
    /// of the otherwise degenerate quotient.
    pub origin_limit: bool,
}

/// `I_nu(z) / I_0(z)`, computed from the scaled backward recurrence so it
/// stays finite where `I_0` alone would overflow.
///
/// At `z = 0` the quotient degenerates for `nu > 0`; by convention the limit
/// value 0 is returned with `origin_limit` set.
pub fn bessel_i_ratio(nu: u32, z: Complex64) -> Result<IRatio> {
    if z == Complex64::ZERO {
        return Ok(IRatio {
            value: if nu == 0 {
                Complex64::new(1.0, 0.0)
            } else {
                Complex64::ZERO
            },
            origin_limit: nu > 0,
        });
    }
    let scaled = bessel_i_family_scaled(&BesselArg::new(z, nu)?)?;
    Ok(IRatio {
        value: scaled[nu as usize] / scaled[0],
        origin_limit: false,
    })
}

/// Real-argument ratio family `I_k(x)/I_0(x)` for `k = 0..=nu_max`, `x > 0`.
///
/// One backward recurrence per call; the workhorse behind the lattice
/// minimizers where `x = 1/(alpha h^2)` can reach 6e4 and beyond.
pub fn i_ratio_family(nu_max: u32, x: f64) -> Result<Vec<f64>> {
    if !(x > 0.0) {
        return Err(Error::InvalidArgument(format!(
            "ratio family needs x > 0, got {x}"
        )));
    }
    let scaled = bessel_i_family_scaled(&BesselArg::new(Complex64::new(x, 0.0), nu_max)?)?;
    let i0 = scaled[0].re;
    Ok(scaled.iter().map(|v| v.re / i0).collect())
}

/// Bessel functions of the first kind `J_0(y) ... J_{nu_max}(y)` for real
/// `y`, by backward recurrence with the `J_0 + 2 sum J_{2m} = 1`
/// normalization. Used as the cross-check for purely imaginary arguments
/// through `I_k(iy) = i^k J_k(y)`.
pub fn bessel_j_family(nu_max: u32, y: f64) -> Result<Vec<f64>> {
    if !y.is_finite() {
        return Err(Error::InvalidArgument(format!("J argument not finite: {y}")));
    }
    if y == 0.0 {
        let mut vals = vec![0.0; nu_max as usize + 1];
        vals[0] = 1.0;
        return Ok(vals);
    }
    let (y_abs, flip) = (y.abs(), y < 0.0);
    let start = start_order(y_abs, nu_max);
    let start = start + (start % 2); // even start so the parity bookkeeping below stays simple
    let mut vals = vec![0.0; nu_max as usize + 1];
    let mut above = 0.0_f64;
    let mut here = 1.0_f64;
    let mut norm = if start % 2 == 0 { 2.0 * here } else { 0.0 };
    if start <= nu_max {
        vals[start as usize] = here;
    }
    for n in (1..=start).rev() {
        let below = 2.0 * (n as f64) / y_abs * here - above;
        above = here;
        here = below;
        let m = n - 1;
        if m <= nu_max {
            vals[m as usize] = here;
        }
        if m == 0 {
            norm += here;
        } else if m % 2 == 0 {
            norm += 2.0 * here;
        }
        if here.abs() > RESCALE_LIMIT {
            let s = 1.0 / RESCALE_LIMIT;
            above *= s;
            here *= s;
            norm *= s;
            for v in vals.iter_mut() {
                *v *= s;
            }
        }
    }
    for v in vals.iter_mut() {
        *v /= norm;
    }
    if flip {
        // J_k(-y) = (-1)^k J_k(y)
        for (k, v) in vals.iter_mut().enumerate() {
            if k % 2 == 1 {
                *v = -*v;
            }
        }
    }
    Ok(vals)
}

/// Modified Bessel functions of the second kind `K_0(x) ... K_{nu_max}(x)`
/// for `x > 0`: `K_0`, `K_1` seeded by quadrature of the integral
/// representation, the rest by the (upward-stable) recurrence
/// `K_{n+1} = K_{n-1} + (2n/x) K_n`.
pub fn bessel_k_family(nu_max: u32, x: f64) -> Result<Vec<f64>> {
    if !(x > 0.0) || !x.is_finite() {
        return Err(Error::InvalidArgument(format!(
            "K family needs finite x > 0, got {x}"
        )));
    }
    // K_nu(x) = int_0^inf e^{-x cosh t} cosh(nu t) dt; truncate where the
    // integrand underflows.
    let t_max = (709.0 / x).max(2.0).acosh();
    let k0 = simpson(0.0, t_max, 8192, |t| (-x * t.cosh()).exp());
    let k1 = simpson(0.0, t_max, 8192, |t| (-x * t.cosh()).exp() * t.cosh());
    let mut vals = Vec::with_capacity(nu_max as usize + 1);
    vals.push(k0);
    if nu_max >= 1 {
        vals.push(k1);
    }
    for n in 1..nu_max as usize {
        let next = vals[n - 1] + 2.0 * (n as f64) / x * vals[n];
        if !next.is_finite() {
            return Err(Error::Overflow(format!("K_{}({x}) exceeds f64", n + 1)));
        }
        vals.push(next);
    }
    Ok(vals)
}

/// Gap `| sqrt(2 pi t) I_0(t) / e^t - 1 |` of the large-argument form of
/// `I_0`, evaluated in scaled arithmetic so it works far past the point
/// where `e^t` overflows.
pub fn i0_asymptotic_gap(t: f64) -> Result<f64> {
    if !(t > 0.0) || !t.is_finite() {
        return Err(Error::InvalidArgument(format!(
            "asymptotic gap needs finite t > 0, got {t}"
        )));
    }
    let scaled = bessel_i_family_scaled(&BesselArg::new(Complex64::new(t, 0.0), 0)?)?;
    Ok(((2.0 * std::f64::consts::PI * t).sqrt() * scaled[0].re - 1.0).abs())
}

/// A finite continued fraction `a_0 + 1/(a_1 + 1/(... + 1/a_n))` given by its
/// partial quotients.
#[derive(Debug, Clone, PartialEq)]
pub struct ContinuedFraction {
    pub partial_quotients: Vec<f64>,
}

impl ContinuedFraction {
    pub fn new(partial_quotients: Vec<f64>) -> Result<Self> {
        if partial_quotients.is_empty() {
            return Err(Error::InvalidArgument(
                "continued fraction needs at least one partial quotient".into(),
            ));
        }
        if partial_quotients.iter().any(|a| !a.is_finite()) {
            return Err(Error::InvalidArgument(
                "continued fraction quotients must be finite".into(),
            ));
        }
        Ok(Self { partial_quotients })
    }
}

/// Value of a continued fraction together with its final convergent pair.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Convergent {
    pub value: f64,
    pub p: f64,
    pub q: f64,
}

/// Evaluates a finite continued fraction through the convergent recurrence
/// `p_n = a_n p_{n-1} + p_{n-2}`, `q_n = a_n q_{n-1} + q_{n-2}`, tracking
/// numerators and denominators side by side.
pub fn cf_eval(cf: &ContinuedFraction) -> Result<Convergent> {
    let a = &cf.partial_quotients;
    // p_{-1} = 1, p_{-2} = 0; q_{-1} = 0, q_{-2} = 1.
    let (mut p_prev, mut p) = (1.0_f64, a[0]);
    let (mut q_prev, mut q) = (0.0_f64, 1.0_f64);
    if q == 0.0 {
        return Err(Error::DegenerateFraction { index: 0 });
    }
    for (j, &aj) in a.iter().enumerate().skip(1) {
        let p_next = aj * p + p_prev;
        let q_next = aj * q + q_prev;
        p_prev = p;
        p = p_next;
        q_prev = q;
        q = q_next;
        if q == 0.0 {
            return Err(Error::DegenerateFraction { index: j });
        }
    }
    Ok(Convergent { value: p / q, p, q })
}

/// Composite Simpson rule with `panels` panels (must be even).
fn simpson(a: f64, b: f64, panels: usize, f: impl Fn(f64) -> f64) -> f64 {
    debug_assert!(panels % 2 == 0);
    let h = (b - a) / panels as f64;
    let mut sum = f(a) + f(b);
    for i in 1..panels {
        let w = if i % 2 == 1 { 4.0 } else { 2.0 };
        sum += w * f(a + i as f64 * h);
    }
    sum * h / 3.0
}
