//! Wright functions W_{λ,μ}(z) of the first (λ ≥ 0) and second (-1 < λ < 0)
//! kind, and the auxiliary functions F_ν(z) = W_{-ν,0}(-z) and
//! M_ν(z) = W_{-ν,1-ν}(-z) for 0 < ν < 1.
//!
//! The auxiliary-series path uses the reflection-formula forms
//!
//! ```text
//! F_ν(z) = -(1/π) Σ_{n≥1} (-z)^n     Γ(νn+1) sin(πνn) / n!
//! M_ν(z) =  (1/π) Σ_{n≥1} (-z)^{n-1} Γ(νn)   sin(πνn) / (n-1)!
//! ```
//!
//! which never touch Γ at negative arguments. Terms are assembled in log
//! space, and a cancellation guard terminates series use once the largest
//! term exceeds 1e12 times the partial sum; positive arguments then route to
//! the single-integral representation over (0, π) and, deep in the tail, to
//! the saddle-point form
//! `M_ν(r/ν) ~ a(ν) r^{(ν-1/2)/(1-ν)} exp(-b(ν) r^{1/(1-ν)})`
//! with a(ν) = 1/sqrt(2π(1-ν)) and b(ν) = (1-ν)/ν. The asymptotic is exposed
//! in the caller's own variable; the internal rescaling y = νr is applied
//! here so no silent factor of ν leaks out.

use crate::quadrature;
use crate::special::{airy_both, ln_gamma, rgamma_real, sin_pi};
use crate::{Error, EvalResult, Method, Result};
use num_complex::Complex64;
use std::f64::consts::PI;

const TERM_BUDGET: usize = 20_000;
/// Series terminates once max|term| exceeds this multiple of the partial sum.
const CANCEL_GUARD: f64 = 1e12;
/// Hard failure threshold for the general Wright series.
const CANCEL_FAIL: f64 = 1e15;
/// Saddle-point expansion accepted when (νr)^{1/(1-ν)} reaches this value.
const ASYMPTOTIC_MIN_POW: f64 = 4.0;
/// Evaluations with ν above this carry a limit warning (delta limit ν → 1).
const NU_LIMIT_FLAG: f64 = 0.95;

/// Kind of a Wright function, decided by the sign of λ.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WrightKind {
    First,
    Second,
}

/// Validated Wright parameter pair (λ, μ) with its kind.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WrightParams {
    lambda: f64,
    mu: f64,
    kind: WrightKind,
}

impl WrightParams {
    /// Requires λ > -1 (entire series); kind follows from the sign of λ.
    pub fn new(lambda: f64, mu: f64) -> Result<Self> {
        if !lambda.is_finite() || !mu.is_finite() {
            return Err(Error::Domain(format!(
                "non-finite Wright parameters ({lambda}, {mu})"
            )));
        }
        if lambda <= -1.0 {
            return Err(Error::Domain(format!("lambda must exceed -1, got {lambda}")));
        }
        let kind = if lambda >= 0.0 { WrightKind::First } else { WrightKind::Second };
        Ok(WrightParams { lambda, mu, kind })
    }

    pub fn lambda(&self) -> f64 {
        self.lambda
    }

    pub fn mu(&self) -> f64 {
        self.mu
    }

    pub fn kind(&self) -> WrightKind {
        self.kind
    }
}

/// Series W_{λ,μ}(z) = Σ z^n / (n! Γ(λn + μ)).
///
/// Fails with `Cancellation` once intermediate terms exceed 1e15 times the
/// result magnitude (second kind at large |z|).
pub fn wright_series(p: &WrightParams, z: Complex64, tol: f64) -> Result<EvalResult> {
    let mut sum = Complex64::new(0.0, 0.0);
    let mut zp_over_fact = Complex64::new(1.0, 0.0);
    let mut max_term = 0.0f64;
    let mut last_nonzero = f64::INFINITY;
    let mut small_streak = 0;
    let tol = tol.max(1e-16);
    for n in 0..TERM_BUDGET {
        let term = zp_over_fact * rgamma_real(p.lambda * n as f64 + p.mu);
        if !term.re.is_finite() || !term.im.is_finite() {
            return Err(Error::Cancellation);
        }
        sum += term;
        if !sum.re.is_finite() || !sum.im.is_finite() {
            return Err(Error::Cancellation);
        }
        let mag = term.norm();
        max_term = max_term.max(mag);
        let threshold = 0.25 * tol * sum.norm().max(1e-3 * max_term).max(1e-300);
        if mag > 0.0 {
            if n > 2 && mag < threshold && mag <= last_nonzero {
                small_streak += 1;
                if small_streak >= 3 {
                    // judge cancellation against the converged sum, not the
                    // transient zero crossings of an alternating partial sum
                    if max_term > CANCEL_FAIL * sum.norm().max(1e-300) {
                        return Err(Error::Cancellation);
                    }
                    let round = max_term * f64::EPSILON * (n as f64 + 10.0) * 2.0;
                    return Ok(EvalResult::complex(sum, 2.0 * mag + round, Method::Series));
                }
            } else {
                small_streak = 0;
            }
            last_nonzero = mag;
        }
        zp_over_fact *= z / (n as f64 + 1.0);
        if zp_over_fact.norm() == 0.0 {
            let round = max_term * f64::EPSILON * (n as f64 + 1.0).sqrt();
            return Ok(EvalResult::complex(sum, round, Method::Series));
        }
    }
    Err(Error::SeriesDivergence)
}

fn check_nu(nu: f64) -> Result<()> {
    if !(nu > 0.0 && nu < 1.0) {
        return Err(Error::Domain(format!("auxiliary functions need 0 < nu < 1, got {nu}")));
    }
    Ok(())
}

struct AuxOutcome {
    value: f64,
    abs_err: f64,
    max_term: f64,
}

/// Reflected M series in log space: (1/π) Σ (-z)^{n-1} Γ(νn) sin(πνn)/(n-1)!.
fn m_series_core(nu: f64, z: f64) -> Result<AuxOutcome> {
    if z == 0.0 {
        return Ok(AuxOutcome { value: rgamma_real(1.0 - nu), abs_err: 1e-16, max_term: 1.0 });
    }
    let ln_abs_z = z.abs().ln();
    let mut sum = 0.0f64;
    let mut max_term = 0.0f64;
    let mut noise = 0.0f64; // log-space terms err by ~eps * |ln pieces|
    let mut last_nonzero = f64::INFINITY;
    let mut small_streak = 0;
    for n in 1..TERM_BUDGET {
        let nf = n as f64;
        let s = sin_pi(nu * nf);
        let term = if s == 0.0 {
            0.0
        } else {
            let lg_num = ln_gamma(nu * nf).unwrap_or(f64::NEG_INFINITY);
            let lg_den = ln_gamma(nf).unwrap_or(f64::INFINITY);
            let ln_mag = (nf - 1.0) * ln_abs_z + lg_num - lg_den + s.abs().ln() - PI.ln();
            // sign of (-z)^{n-1}: alternates for z > 0, constant for z < 0
            let sign = if z <= 0.0 || (n - 1) % 2 == 0 { 1.0 } else { -1.0 };
            let mag = ln_mag.exp();
            let ln_scale = ((nf - 1.0) * ln_abs_z).abs() + lg_num.abs() + lg_den.abs() + 8.0;
            noise = noise.max(mag * f64::EPSILON * ln_scale);
            sign * s.signum() * mag
        };
        if !term.is_finite() {
            return Err(Error::Cancellation);
        }
        sum += term;
        if !sum.is_finite() {
            return Err(Error::Cancellation);
        }
        let mag = term.abs();
        max_term = max_term.max(mag);
        let threshold = 2.5e-17 * sum.abs().max(1e-3 * max_term).max(1e-300);
        if mag > 0.0 {
            if n > 3 && mag < threshold && mag <= last_nonzero {
                small_streak += 1;
                if small_streak >= 3 {
                    // judge cancellation against the converged sum, not the
                    // transient zero crossings of an alternating partial sum
                    if max_term > CANCEL_GUARD * sum.abs().max(1e-300) {
                        return Err(Error::Cancellation);
                    }
                    let round = noise * (n as f64).sqrt() * 2.0;
                    return Ok(AuxOutcome { value: sum, abs_err: 2.0 * mag + round, max_term });
                }
            } else {
                small_streak = 0;
            }
            last_nonzero = mag;
        }
    }
    Err(Error::SeriesDivergence)
}

/// Reflected F series: -(1/π) Σ (-z)^n Γ(νn+1) sin(πνn)/n!.
fn f_series_core(nu: f64, z: f64) -> Result<AuxOutcome> {
    if z == 0.0 {
        return Ok(AuxOutcome { value: 0.0, abs_err: 0.0, max_term: 0.0 });
    }
    let ln_abs_z = z.abs().ln();
    let mut sum = 0.0f64;
    let mut max_term = 0.0f64;
    let mut noise = 0.0f64;
    let mut last_nonzero = f64::INFINITY;
    let mut small_streak = 0;
    for n in 1..TERM_BUDGET {
        let nf = n as f64;
        let s = sin_pi(nu * nf);
        let term = if s == 0.0 {
            0.0
        } else {
            let lg_num = ln_gamma(nu * nf + 1.0).unwrap_or(f64::NEG_INFINITY);
            let lg_den = ln_gamma(nf + 1.0).unwrap_or(f64::INFINITY);
            let ln_mag = nf * ln_abs_z + lg_num - lg_den + s.abs().ln() - PI.ln();
            // sign of (-z)^n: alternates for z > 0, constant for z < 0
            let sign = if z <= 0.0 || n % 2 == 0 { 1.0 } else { -1.0 };
            let mag = ln_mag.exp();
            let ln_scale = (nf * ln_abs_z).abs() + lg_num.abs() + lg_den.abs() + 8.0;
            noise = noise.max(mag * f64::EPSILON * ln_scale);
            -sign * s.signum() * mag
        };
        if !term.is_finite() {
            return Err(Error::Cancellation);
        }
        sum += term;
        if !sum.is_finite() {
            return Err(Error::Cancellation);
        }
        let mag = term.abs();
        max_term = max_term.max(mag);
        let threshold = 2.5e-17 * sum.abs().max(1e-3 * max_term).max(1e-300);
        if mag > 0.0 {
            if n > 3 && mag < threshold && mag <= last_nonzero {
                small_streak += 1;
                if small_streak >= 3 {
                    // judge cancellation against the converged sum, not the
                    // transient zero crossings of an alternating partial sum
                    if max_term > CANCEL_GUARD * sum.abs().max(1e-300) {
                        return Err(Error::Cancellation);
                    }
                    let round = noise * (n as f64).sqrt() * 2.0;
                    return Ok(AuxOutcome { value: sum, abs_err: 2.0 * mag + round, max_term });
                }
            } else {
                small_streak = 0;
            }
            last_nonzero = mag;
        }
    }
    Err(Error::SeriesDivergence)
}

/// F_ν(z) = W_{-ν,0}(-z) by the reflected series; beyond the cancellation
/// guard, positive arguments fall back to ν z M_ν(z).
pub fn f_nu(nu: f64, z: f64, tol: f64) -> Result<EvalResult> {
    check_nu(nu)?;
    let _ = tol;
    match f_series_core(nu, z) {
        Ok(o) if o.abs_err <= 1e-11 * (1.0 + o.value.abs()) || z <= 0.0 => {
            Ok(EvalResult::real(o.value, o.abs_err, Method::Series))
        }
        Ok(_) | Err(Error::Cancellation) if z > 0.0 => {
            let m = m_eval(nu, z)?;
            Ok(EvalResult {
                value: m.value * nu * z,
                abs_err: m.abs_err * nu * z,
                ..m
            })
        }
        Ok(o) => Ok(EvalResult::real(o.value, o.abs_err, Method::Series)),
        Err(e) => Err(e),
    }
}

/// M_ν(z) = W_{-ν,1-ν}(-z) by the reflected series; beyond the cancellation
/// guard, positive arguments route to the integral representation and deep
/// arguments to the saddle-point form.
pub fn m_nu(nu: f64, z: f64, tol: f64) -> Result<EvalResult> {
    check_nu(nu)?;
    let _ = tol;
    match m_series_core(nu, z) {
        Ok(o) if o.abs_err <= 1e-11 * (1.0 + o.value.abs()) || z <= 0.0 => {
            Ok(EvalResult::real(o.value, o.abs_err, Method::Series))
        }
        Ok(_) | Err(Error::Cancellation) if z > 0.0 => {
            if let Ok(asym) = m_nu_asymptotic(nu, z) {
                if asym.re() == 0.0 {
                    return Ok(asym); // underflow: every representation is 0
                }
            }
            m_nu_integral(nu, z, 1e-10)
        }
        Ok(o) => Ok(EvalResult::real(o.value, o.abs_err, Method::Series)),
        Err(e) => Err(e),
    }
}

/// Closed forms of M_ν for ν in {1/2, 1/3, 2/3}: Gaussian, Airy, and the
/// Airy combination.
pub fn m_nu_closed(nu: f64, x: f64) -> Result<EvalResult> {
    const THIRD: f64 = 1.0 / 3.0;
    const TWO_THIRDS: f64 = 2.0 / 3.0;
    if (nu - 0.5).abs() < 1e-12 {
        let v = (-x * x / 4.0).exp() / PI.sqrt();
        Ok(EvalResult::real(v, v * 1e-15 + 1e-300, Method::ClosedForm))
    } else if (nu - THIRD).abs() < 1e-12 {
        let c = 3.0f64.powf(TWO_THIRDS);
        let (ai, _) = airy_both(x / 3.0f64.powf(THIRD))?;
        let v = c * ai;
        Ok(EvalResult::real(v, v.abs() * 1e-12 + 1e-13, Method::ClosedForm))
    } else if (nu - TWO_THIRDS).abs() < 1e-12 {
        let p = 3.0f64.powf(-TWO_THIRDS);
        let arg = x * x / 3.0f64.powf(4.0 * THIRD);
        let (ai, aip) = airy_both(arg)?;
        let e = (-2.0 * x * x * x / 27.0).exp();
        let v = p * e * (3.0f64.powf(THIRD) * x * ai - 3.0 * aip);
        // the exponential prefactor amplifies roundoff for x < 0
        let err = v.abs() * 1e-12 + e.max(1.0) * 1e-14 + 1e-13;
        Ok(EvalResult::real(v, err, Method::ClosedForm))
    } else {
        Err(Error::UnsupportedNu(nu))
    }
}

/// C_ν(φ) of the single-integral representation, in log space.
fn ln_c_nu(nu: f64, phi: f64) -> f64 {
    let sp = phi.sin();
    ((1.0 - nu) * phi).sin().ln() - sp.ln() + nu / (1.0 - nu) * ((nu * phi).sin().ln() - sp.ln())
}

/// Single integral over (0, π) for M_ν(x), x > 0:
/// `x^{ν/(1-ν)}/(π(1-ν)) ∫_0^π C_ν(φ) exp(-C_ν(φ) x^{1/(1-ν)}) dφ`.
pub fn m_nu_integral(nu: f64, x: f64, tol: f64) -> Result<EvalResult> {
    check_nu(nu)?;
    if !(x > 0.0) {
        return Err(Error::Domain(format!("integral representation needs x > 0, got {x}")));
    }
    let xpow = x.powf(1.0 / (1.0 - nu));
    let c0 = (1.0 - nu) * nu.powf(nu / (1.0 - nu)); // inf of C_nu over (0, pi)
    if !xpow.is_finite() || c0 * xpow > 708.0 {
        // below the smallest positive double
        return Ok(EvalResult::real(0.0, 1e-300, Method::Quadrature));
    }
    let prefactor = x.powf(nu / (1.0 - nu)) / (PI * (1.0 - nu));
    let integrand = |phi: f64| {
        if phi <= 0.0 || phi >= PI {
            return 0.0;
        }
        let lnc = ln_c_nu(nu, phi);
        let c = lnc.exp();
        let e = lnc - c * xpow;
        if e < -745.0 {
            0.0
        } else {
            e.exp()
        }
    };
    // two passes: the first sets the scale for the tolerance of the second
    let rough = quadrature::integrate_finite(&integrand, 0.0, PI, 1e-8)?;
    let scale = (rough.value.abs() * prefactor).max(1e-290);
    let want = (tol.max(1e-13) * scale / prefactor).clamp(1e-305, 1e-8);
    let q = quadrature::integrate_finite(&integrand, 0.0, PI, want)?;
    let mut out = EvalResult::real(prefactor * q.value, prefactor * q.abs_err, Method::Quadrature);
    if nu > NU_LIMIT_FLAG {
        out = out.with_limit_warning();
    }
    Ok(out)
}

/// Saddle-point form of M_ν at large argument, in the caller's variable r:
/// with y = νr, `a(ν) y^{(ν-1/2)/(1-ν)} exp(-b(ν) y^{1/(1-ν)})`.
pub fn m_nu_asymptotic(nu: f64, r: f64) -> Result<EvalResult> {
    check_nu(nu)?;
    if !(r > 0.0) {
        return Err(Error::Domain(format!("asymptotic form needs r > 0, got {r}")));
    }
    let y = nu * r;
    let ypow = y.powf(1.0 / (1.0 - nu));
    if !(ypow >= ASYMPTOTIC_MIN_POW) {
        return Err(Error::OutOfAsymptoticRange { threshold: ASYMPTOTIC_MIN_POW });
    }
    let a = 1.0 / (2.0 * PI * (1.0 - nu)).sqrt();
    let b = (1.0 - nu) / nu;
    let exponent = -b * ypow;
    let v = if exponent < -745.0 {
        0.0
    } else {
        a * y.powf((nu - 0.5) / (1.0 - nu)) * exponent.exp()
    };
    // leading-order saddle point: relative error ~ 1/(b ypow), exact at nu=1/2
    let rel = if (nu - 0.5).abs() < 1e-12 { 1e-15 } else { (1.0 / (b * ypow)).min(0.5) };
    let mut out = EvalResult::real(v, v.abs() * rel + 1e-300, Method::Asymptotic);
    if nu > NU_LIMIT_FLAG {
        out = out.with_limit_warning();
    }
    Ok(out)
}

/// M_ν evaluated at |x| (the symmetric M-function usage): closed form when
/// ν is one of the three special rationals, otherwise series, then integral,
/// then saddle point.
pub fn m_eval(nu: f64, x: f64) -> Result<EvalResult> {
    check_nu(nu)?;
    if !x.is_finite() {
        return Err(Error::Domain(format!("non-finite argument {x}")));
    }
    let x = x.abs();
    let mut out = m_eval_positive(nu, x)?;
    if nu > NU_LIMIT_FLAG {
        out = out.with_limit_warning();
    }
    Ok(out)
}

fn m_eval_positive(nu: f64, x: f64) -> Result<EvalResult> {
    if x == 0.0 {
        return Ok(EvalResult::real(rgamma_real(1.0 - nu), 1e-16, Method::ClosedForm));
    }
    if let Ok(c) = m_nu_closed(nu, x) {
        return Ok(c);
    }
    if let Ok(o) = m_series_core(nu, x) {
        if o.abs_err <= 1e-11 * (1.0 + o.value.abs()) {
            return Ok(EvalResult::real(o.value, o.abs_err, Method::Series));
        }
    }
    if let Ok(asym) = m_nu_asymptotic(nu, x) {
        if asym.re() == 0.0 {
            return Ok(asym);
        }
        // keep the saddle point only when the integral cannot resolve better
        let integral = m_nu_integral(nu, x, 1e-11)?;
        if integral.re() > 0.0 {
            return Ok(integral);
        }
        return Ok(asym);
    }
    m_nu_integral(nu, x, 1e-11)
}

/// Self-similar spreading density t^{-ν} M_ν(x t^{-ν}).
pub fn m_self_similar(nu: f64, x: f64, t: f64) -> Result<f64> {
    if !(t > 0.0) {
        return Err(Error::Domain(format!("self-similar form needs t > 0, got {t}")));
    }
    if !(x >= 0.0) {
        return Err(Error::Domain(format!("self-similar form needs x >= 0, got {x}")));
    }
    let scale = t.powf(-nu);
    Ok(scale * m_eval(nu, x * scale)?.re())
}

/// Residual of the order-(q-1) ODE satisfied by M_{1/q}:
/// `d^{q-1}M/dz^{q-1} + ((-1)^q / q) z M(z)`, by term-wise series
/// differentiation. Supported q: 2, 3.
pub fn m_ode_residual(q: u32, z: f64) -> Result<f64> {
    if q != 2 && q != 3 {
        return Err(Error::Domain(format!("ODE residual supports q in {{2,3}}, got {q}")));
    }
    let nu = 1.0 / q as f64;
    let d = (q - 1) as usize;
    // coefficients of z^m: c_m = (-1)^m Gamma(nu(m+1)) sin(pi nu (m+1)) / (pi m!)
    let mut m_val = 0.0;
    let mut deriv = 0.0;
    for m in 0..600usize {
        let mf = m as f64;
        let s = sin_pi(nu * (mf + 1.0));
        if s == 0.0 {
            continue;
        }
        let ln_c = ln_gamma(nu * (mf + 1.0)).unwrap() + s.abs().ln()
            - PI.ln()
            - ln_gamma(mf + 1.0).unwrap();
        let c = if m % 2 == 0 { 1.0 } else { -1.0 } * s.signum() * ln_c.exp();
        m_val += c * z.powi(m as i32);
        if m >= d {
            // c_m * m!/(m-d)! * z^{m-d}
            let mut fall = 1.0;
            for j in 0..d {
                fall *= (m - j) as f64;
            }
            deriv += c * fall * z.powi((m - d) as i32);
        }
        if m > 40 && (c * z.powi(m as i32)).abs() < 1e-20 {
            break;
        }
    }
    let sign = if q % 2 == 0 { 1.0 } else { -1.0 };
    Ok(deriv + sign / q as f64 * z * m_val)
}

/// M_ν at a signed real argument (entire function; the negative side carries
/// the algebraic tail of the bilateral extremal density).
pub(crate) fn m_signed(nu: f64, x: f64) -> Result<EvalResult> {
    check_nu(nu)?;
    if x >= 0.0 {
        return m_eval_positive(nu, x);
    }
    if let Ok(c) = m_nu_closed(nu, x) {
        if c.abs_err <= 1e-9 * (1.0 + c.re().abs()) {
            return Ok(c);
        }
    }
    match m_series_core(nu, x) {
        Ok(o) if o.abs_err <= 1e-9 * (1.0 + o.value.abs()) => {
            Ok(EvalResult::real(o.value, o.abs_err, Method::Series))
        }
        Ok(_) | Err(Error::Cancellation) => Err(Error::OutOfRange(format!(
            "M_{nu} at {x}: negative-axis series beyond reliability"
        ))),
        Err(e) => Err(e),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mittag_leffler::{ml_eval, MLParams};
    use crate::special::{erfc, gamma_real};

    fn assert_tol(got: f64, want: f64, tol: f64, what: &str) {
        assert!(
            (got - want).abs() <= tol,
            "{what}: got {got:.17e}, want {want:.17e}, diff {:.3e}",
            (got - want).abs()
        );
    }

    fn w(lambda: f64, mu: f64, z: f64) -> f64 {
        wright_series(
            &WrightParams::new(lambda, mu).unwrap(),
            Complex64::new(z, 0.0),
            1e-15,
        )
        .unwrap()
        .re()
    }

    /// Plain Bessel J_n series, independent of the Wright machinery.
    fn bessel_j(n: u32, z: f64) -> f64 {
        let mut sum = 0.0f64;
        let mut term = (z / 2.0).powi(n as i32) * rgamma_real(n as f64 + 1.0);
        let mut k = 0f64;
        while term.abs() > 1e-18 * sum.abs().max(1.0) && k < 200.0 {
            sum += term;
            term *= -(z / 2.0) * (z / 2.0) / ((k + 1.0) * (n as f64 + k + 1.0));
            k += 1.0;
        }
        sum
    }

    #[test]
    fn params_and_kinds() {
        assert_eq!(WrightParams::new(0.5, 1.0).unwrap().kind(), WrightKind::First);
        assert_eq!(WrightParams::new(0.0, 1.0).unwrap().kind(), WrightKind::First);
        assert_eq!(WrightParams::new(-0.5, 1.0).unwrap().kind(), WrightKind::Second);
        assert!(WrightParams::new(-1.0, 1.0).is_err());
        assert!(WrightParams::new(-1.7, 1.0).is_err());
    }

    #[test]
    fn wright_series_reference_values() {
        // independently computed with 120-digit arithmetic
        let cases = [
            (0.5, 1.2, 2.0, 6.3208928769614015),
            (0.5, 1.2, -2.0, 0.061145957465244302),
            (1.0, 2.0, -1.0, 0.57672480775687339),
            (-0.3, 0.8, -2.0, 0.16908990193601121),
            (-0.7, 0.1, 3.0, -0.049508354888978155),
            (2.0, 0.7, 1.5, 1.8157282387267751),
            (0.0, 1.0, 1.0, 2.7182818284590452),
            (-0.4, 1.1, -3.0, 0.044387284387571538),
        ];
        for (l, m, z, want) in cases {
            assert_tol(w(l, m, z), want, 2e-13 * want.abs().max(1.0), &format!("W({l},{m},{z})"));
        }
        // z = 0: only the n = 0 term
        assert_tol(w(-0.6, 0.7, 0.0), rgamma_real(0.7), 1e-15, "W(.,mu,0)");
    }

    #[test]
    fn wright_first_kind_exponential() {
        // W_{0,mu}(z) = e^z / Gamma(mu)
        for (mu, z) in [(1.0, 1.0), (2.5, -0.7), (0.4, 2.0)] {
            assert_tol(
                w(0.0, mu, z),
                z.exp() * rgamma_real(mu),
                1e-13,
                "W_{0,mu}",
            );
        }
    }

    #[test]
    fn bessel_reduction() {
        // J_nu(z) = (z/2)^nu W_{1,nu+1}(-z^2/4) against the plain series
        for n in [0u32, 1, 2] {
            for z in [0.5, 1.5, 2.0, 3.7, 5.0] {
                let lhs = bessel_j(n, z);
                let rhs = (z / 2.0).powi(n as i32) * w(1.0, n as f64 + 1.0, -z * z / 4.0);
                assert_tol(lhs, rhs, 1e-10, &format!("J_{n}({z})"));
            }
        }
        assert_tol(bessel_j(1, 2.0), 0.57672480775687339, 1e-14, "J_1(2) frozen");
    }

    #[test]
    fn wright_recurrences() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        let mut accepted = 0;
        while accepted < 80 {
            let lambda: f64 = rng.gen_range(-0.9..2.0);
            let mu: f64 = rng.gen_range(0.2..3.0);
            let z: f64 = rng.gen_range(-2.0..2.0);
            let p_shift = WrightParams::new(lambda, lambda + mu).unwrap();
            let p_down = WrightParams::new(lambda, mu - 1.0);
            let p = WrightParams::new(lambda, mu).unwrap();
            let zz = Complex64::new(z, 0.0);
            let (a, b, c) = match (
                wright_series(&p_shift, zz, 1e-15),
                p_down.and_then(|pd| wright_series(&pd, zz, 1e-15)),
                wright_series(&p, zz, 1e-15),
            ) {
                (Ok(a), Ok(b), Ok(c)) => (a, b, c),
                _ => continue, // outside the series' reliable region
            };
            if a.abs_err.max(b.abs_err).max(c.abs_err) > 1e-12 {
                continue;
            }
            let lhs = lambda * z * a.re();
            let rhs = b.re() + (1.0 - mu) * c.re();
            let scale = lhs.abs().max(rhs.abs()).max(1.0);
            assert_tol(lhs, rhs, 1e-10 * scale, &format!("recurrence l={lambda} m={mu} z={z}"));
            // derivative recurrence by central differences
            let h = 1e-5;
            let fp = w(lambda, mu, z + h);
            let fm = w(lambda, mu, z - h);
            let dw = (fp - fm) / (2.0 * h);
            assert_tol(dw, a.re(), 1e-6 * scale.max(a.re().abs()), "dW/dz = W_{l,l+m}");
            accepted += 1;
        }
    }

    #[test]
    fn derivative_coefficient_shift_exact() {
        // (n+1) a_{n+1} with a_n = rgamma(ln+mu)/n! equals rgamma(ln+l+mu)/n!
        for (lambda, mu) in [(-0.6, 0.9), (0.3, 1.7), (1.2, 0.4)] {
            for n in 0..25u32 {
                let nf = n as f64;
                let lhs = (nf + 1.0) * rgamma_real(lambda * (nf + 1.0) + mu)
                    / gamma_real(nf + 2.0).unwrap();
                let rhs = rgamma_real(lambda * nf + lambda + mu) / gamma_real(nf + 1.0).unwrap();
                assert_tol(lhs, rhs, 1e-14 * rhs.abs().max(1.0), "coefficient shift");
            }
        }
    }

    #[test]
    fn auxiliary_reference_values() {
        // independently computed with 200+ digit arithmetic
        let m_cases = [
            (0.05, 1.0, 0.36848152892664312),
            (0.05, 0.3, 0.72561754171326765),
            (0.25, 0.3, 0.65914041809667942),
            (0.25, 1.0, 0.38333541657068354),
            (0.25, 2.0, 0.16125108345458586),
            (0.25, 5.0, 0.0072892970725066663),
            (1.0 / 3.0, 1.0, 0.39623947970650259),
            (1.0 / 3.0, 4.0, 0.020505597311995399),
            (0.5, 0.3, 0.55163706332541192),
            (0.5, 1.0, 0.4393912894677224),
            (0.5, 2.0, 0.20755374871029735),
            (0.5, 5.0, 0.0010891421151763549),
            (2.0 / 3.0, 1.0, 0.52585211388016734),
            (2.0 / 3.0, 3.0, 0.01801067835921845),
            (0.75, 0.3, 0.37150100110118916),
            (0.75, 1.0, 0.60659854359027598),
            (0.75, 2.0, 0.2251400701489675),
            (0.9, 0.5, 0.28004174208736581),
            (0.9, 1.0, 1.0081467456212712),
            (0.95, 0.3, 0.096857010533419805),
            (0.95, 1.0, 1.5361137992205617),
        ];
        for (nu, x, want) in m_cases {
            let got = m_eval(nu, x).unwrap();
            assert_tol(got.re(), want, 1e-8, &format!("M({nu},{x})"));
        }
        // tiny tail values: relative agreement through integral/asymptotics
        let tiny = [
            (0.75, 4.0, 4.5046280751923517e-12),
            (0.9, 2.0, 7.8193669162217517e-17),
            (0.95, 1.5, 2.4460182261475143e-26),
        ];
        for (nu, x, want) in tiny {
            let got = m_eval(nu, x).unwrap().re();
            assert!(
                ((got - want) / want).abs() < 1e-5,
                "M({nu},{x}) rel: got {got:e} want {want:e}"
            );
        }
    }

    #[test]
    fn m_checked_against_wright_series_path() {
        // M_nu(z) = W_{-nu,1-nu}(-z) on the series-reliable region
        for (nu, z) in [(0.4, 1.3), (0.6, -0.8), (0.85, 0.5)] {
            let a = m_nu(nu, z, 1e-13).unwrap().re();
            let b = w(-nu, 1.0 - nu, -z);
            assert_tol(a, b, 1e-12, "M vs general W series");
        }
        // F_nu(z) = W_{-nu,0}(-z)
        for (nu, z) in [(0.4, 0.9), (0.5, 1.0), (0.25, 2.0)] {
            let a = f_nu(nu, z, 1e-13).unwrap().re();
            let b = w(-nu, 0.0, -z);
            assert_tol(a, b, 1e-12, "F vs general W series");
        }
        assert_tol(
            f_nu(0.5, 1.0, 1e-13).unwrap().re(),
            0.2196956447338612,
            1e-13,
            "F_{1/2}(1) frozen",
        );
    }

    #[test]
    fn f_m_interrelation() {
        // F_nu(z) = nu z M_nu(z)
        for (nu, z) in [(0.4, 0.9), (0.2, 1.7), (0.7, -1.1), (0.55, 2.3)] {
            let f = f_nu(nu, z, 1e-14).unwrap().re();
            let m = m_nu(nu, z, 1e-14).unwrap().re();
            assert_tol(f, nu * z * m, 1e-12 * (1.0 + f.abs()), &format!("interrelation {nu} {z}"));
        }
    }

    #[test]
    fn closed_forms() {
        assert_tol(
            m_nu_closed(0.5, 0.0).unwrap().re(),
            0.5641895835477563,
            1e-15,
            "M_{1/2}(0)",
        );
        assert_tol(
            m_nu_closed(0.5, 1.0).unwrap().re(),
            0.43939128946772243,
            1e-15,
            "M_{1/2}(1)",
        );
        // 3^{2/3} Ai(0) = 1/Gamma(2/3) = 0.73848811162164831 (30-digit check)
        assert_tol(
            m_nu_closed(1.0 / 3.0, 0.0).unwrap().re(),
            0.73848811162164831,
            1e-12,
            "M_{1/3}(0) = 3^{2/3} Ai(0) = 1/Gamma(2/3)",
        );
        // nu = 2/3 at 0 equals the series value 1/Gamma(1/3)
        assert_tol(
            m_nu_closed(2.0 / 3.0, 0.0).unwrap().re(),
            rgamma_real(1.0 / 3.0),
            1e-12,
            "M_{2/3}(0)",
        );
        assert!(matches!(m_nu_closed(0.4, 1.0), Err(Error::UnsupportedNu(_))));
    }

    #[test]
    fn closed_vs_series_sup() {
        for nu in [0.5, 1.0 / 3.0, 2.0 / 3.0] {
            let mut worst = 0.0f64;
            for i in 0..=80 {
                let x = 8.0 * i as f64 / 80.0;
                let closed = m_nu_closed(nu, x).unwrap().re();
                let series = m_nu(nu, x, 1e-14).unwrap().re();
                worst = worst.max((closed - series).abs());
            }
            assert!(worst <= 1e-9, "nu={nu}: sup diff {worst:e}");
        }
    }

    #[test]
    fn integral_representation() {
        assert_tol(
            m_nu_integral(0.5, 1.0, 1e-12).unwrap().re(),
            0.43939128946772243,
            1e-11,
            "integral at nu=1/2",
        );
        let airy_form = m_nu_closed(1.0 / 3.0, 2.0).unwrap().re();
        assert_tol(
            m_nu_integral(1.0 / 3.0, 2.0, 1e-12).unwrap().re(),
            airy_form,
            1e-10,
            "integral vs Airy form",
        );
        // agreement with the series on the overlap
        for (nu, x) in [(0.3, 1.5), (0.6, 2.0), (0.8, 1.0)] {
            let a = m_nu_integral(nu, x, 1e-12).unwrap().re();
            let b = m_nu(nu, x, 1e-14).unwrap().re();
            assert_tol(a, b, 1e-8, &format!("integral vs series {nu} {x}"));
        }
        assert!(m_nu_integral(0.5, -1.0, 1e-10).is_err());
    }

    #[test]
    fn asymptotic_form() {
        // exact at nu = 1/2
        let exact = m_nu_closed(0.5, 10.0).unwrap().re();
        let asym = m_nu_asymptotic(0.5, 10.0).unwrap().re();
        assert!(((asym - exact) / exact).abs() <= 1e-3);
        // nu = 1/3 against the Airy form
        let exact = m_nu_closed(1.0 / 3.0, 12.0).unwrap().re();
        let asym = m_nu_asymptotic(1.0 / 3.0, 12.0).unwrap().re();
        assert!(((asym - exact) / exact).abs() <= 1e-2, "rel {}", ((asym - exact) / exact).abs());
        // a(1/2) = 1/sqrt(pi)
        let a_half = 1.0 / (2.0 * PI * 0.5).sqrt();
        assert_tol(a_half, 0.5641895835477563, 1e-15, "a(1/2)");
        assert!(matches!(
            m_nu_asymptotic(0.5, 0.5),
            Err(Error::OutOfAsymptoticRange { .. })
        ));
    }

    #[test]
    fn m_eval_dispatch_and_symmetry() {
        // |x| symmetry
        let a = m_eval(0.5, -2.0).unwrap().re();
        assert_tol(a, 0.20755374871029736, 1e-12, "M_{1/2}(|-2|)");
        // nu -> 0 proxy: close to exp(-|x|)
        let v = m_eval(0.05, 1.0).unwrap().re();
        assert!((v - (-1.0f64).exp()).abs() < 5e-2, "{v}");
        // x = 0
        for nu in [0.2, 0.45, 0.8] {
            assert_tol(m_eval(nu, 0.0).unwrap().re(), rgamma_real(1.0 - nu), 1e-14, "M(0)");
        }
        // limit warning near the delta limit
        assert!(m_eval(0.97, 1.0).unwrap().limit_warning);
        assert!(!m_eval(0.5, 1.0).unwrap().limit_warning);
    }

    #[test]
    fn m_nonnegative_on_positive_axis() {
        for nu in [0.1, 0.25, 0.5, 0.75, 0.9] {
            for i in 0..=60 {
                let x = 6.0 * i as f64 / 60.0;
                let v = m_eval(nu, x).unwrap().re();
                assert!(v >= 0.0, "M_{nu}({x}) = {v}");
            }
        }
    }

    #[test]
    fn self_similar_scaling() {
        let nu = 0.6;
        let m = m_eval(nu, 1.3).unwrap().re();
        assert_tol(m_self_similar(nu, 1.3, 1.0).unwrap(), m, 1e-14, "t=1");
        // (1/2) * (1/sqrt(pi)) at x = 0, t = 4
        let v = m_self_similar(0.5, 0.0, 4.0).unwrap();
        assert_tol(v, 0.5 * 0.5641895835477563, 1e-12, "scale factor t^{-1/2}");
        assert!(m_self_similar(0.5, 1.0, 0.0).is_err());
        assert!(m_self_similar(0.5, -1.0, 1.0).is_err());
        // normalization: integral over (0, inf) is 1
        let q = quadrature::integrate_semi_infinite(
            |x| m_self_similar(0.6, x, 2.5).unwrap_or(0.0),
            quadrature::Decay::Exponential,
            1e-8,
        )
        .unwrap();
        assert_tol(q.value, 1.0, 1e-6, "normalization");
    }

    #[test]
    fn ode_residuals() {
        for z in [-4.0, -1.0, 0.0, 0.7, 2.0, 4.0] {
            let r2 = m_ode_residual(2, z).unwrap();
            assert!(r2.abs() <= 1e-8, "q=2 residual at {z}: {r2:e}");
            let r3 = m_ode_residual(3, z).unwrap();
            assert!(r3.abs() <= 1e-8, "q=3 residual at {z}: {r3:e}");
        }
        assert!(m_ode_residual(4, 1.0).is_err());
        // initial value M_{1/2}(0) = Gamma(1/2) sin(pi/2) / pi = 1/sqrt(pi)
        let want = gamma_real(0.5).unwrap() * 1.0 / PI;
        assert_tol(m_eval(0.5, 0.0).unwrap().re(), want, 1e-14, "series start");
    }

    #[test]
    fn laplace_pair_m_to_ml() {
        // L[M_nu](s) = E_nu(-s)
        for nu in [0.25, 0.5, 0.75] {
            for s in [0.5, 1.0, 2.0] {
                let lhs = quadrature::laplace_numeric(
                    |r| m_eval(nu, r).map(|e| e.re()).unwrap_or(0.0),
                    s,
                    1e-9,
                )
                .unwrap()
                .value;
                let rhs = ml_eval(
                    &MLParams::new(nu, 1.0).unwrap(),
                    Complex64::new(-s, 0.0),
                )
                .unwrap()
                .re();
                assert_tol(lhs, rhs, 1e-7, &format!("pair nu={nu} s={s}"));
            }
        }
    }

    #[test]
    fn laplace_pair_stretched_exponential() {
        // L[(nu/r^{nu+1}) M_nu(r^{-nu})](s) = exp(-s^nu)
        for nu in [0.25, 0.5] {
            let lhs = quadrature::laplace_numeric(
                |r| {
                    if r < 1e-290 {
                        return 0.0;
                    }
                    let arg = r.powf(-nu);
                    nu / r.powf(nu + 1.0) * m_eval(nu, arg).map(|e| e.re()).unwrap_or(0.0)
                },
                1.0,
                1e-8,
            )
            .unwrap()
            .value;
            assert_tol(lhs, (-1.0f64).exp(), 1e-6, &format!("stretched pair nu={nu}"));
        }
    }

    #[test]
    fn erfc_pair_consistency() {
        // E_{1/2}(-s) = exp(s^2) erfc(s) ties the M_{1/2} pair to erfc
        for s in [0.5, 1.0, 2.0] {
            let lhs = ml_eval(&MLParams::new(0.5, 1.0).unwrap(), Complex64::new(-s, 0.0))
                .unwrap()
                .re();
            let rhs = (s * s).exp() * erfc(s).unwrap();
            assert_tol(lhs, rhs, 1e-12, "E_{1/2}(-s) vs erfc");
        }
    }

    #[test]
    fn signed_evaluation() {
        // negative arguments through the entire series
        let v = m_signed(2.0 / 3.0, -1.0).unwrap().re();
        assert_tol(v, 0.16797406055790855, 1e-10, "M_{2/3}(-1)");
        let v = m_signed(2.0 / 3.0, -3.0).unwrap().re();
        assert_tol(v, 0.033787960611025746, 1e-9, "M_{2/3}(-3)");
        let v = m_signed(0.55, -2.0).unwrap().re();
        assert_tol(v, 0.14517968047862167, 1e-10, "M_{0.55}(-2)");
        let v = m_signed(0.8, -1.5).unwrap().re();
        assert_tol(v, 0.046014999070520361, 1e-10, "M_{0.8}(-1.5)");
    }
}
