//! Classical support functions: Gamma, reciprocal Gamma, complementary error
//! function and the Airy function Ai with its derivative.
//!
//! Gamma uses the Lanczos rational approximation (g = 7, n = 9) on
//! Re(z) >= 1/2 and the reflection formula elsewhere. Airy is evaluated from
//! its own Maclaurin series for |x| <= 7.5 and from the standard asymptotic
//! expansions beyond, so it never depends on the Wright module and can serve
//! as an independent oracle for the M-Wright closed forms.

use crate::{Error, EvalResult, Method, Result};
use num_complex::Complex64;
use std::f64::consts::PI;

/// Lanczos g parameter and coefficients (Godfrey / GSL set, n = 9).
const LANCZOS_G: f64 = 7.0;
const LANCZOS: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

const SQRT_TWO_PI: f64 = 2.506_628_274_631_000_5;
const LN_SQRT_TWO_PI: f64 = 0.918_938_533_204_672_74;
/// 2/sqrt(pi)
const TWO_OVER_SQRT_PI: f64 = 1.128_379_167_095_512_6;

fn lanczos_sum_real(x: f64) -> f64 {
    let mut sum = LANCZOS[0];
    for (i, &c) in LANCZOS[1..].iter().enumerate() {
        sum += c / (x + (i + 1) as f64);
    }
    sum
}

fn lanczos_sum_complex(z: Complex64) -> Complex64 {
    let mut sum = Complex64::new(LANCZOS[0], 0.0);
    for (i, &c) in LANCZOS[1..].iter().enumerate() {
        sum += c / (z + (i + 1) as f64);
    }
    sum
}

/// sin(pi x) with exact zeros at integer x.
pub(crate) fn sin_pi(x: f64) -> f64 {
    let r = x - x.round();
    let s = (PI * r).sin();
    // x.round() even => sign +1
    if (x.round() as i64) % 2 == 0 {
        s
    } else {
        -s
    }
}

fn is_nonpositive_integer(x: f64) -> bool {
    x <= 0.5 && (x - x.round()).abs() < 1e-13 * x.abs().max(1.0)
}

/// Gamma(x) for real x > 0 (Lanczos, no reflection).
fn gamma_positive_real(x: f64) -> f64 {
    if x > 140.0 {
        // step down by the recurrence so the Lanczos power stays finite;
        // each multiply costs ~0.5 ulp, well below the 1e-13 contract
        let k = (x - 140.0).ceil();
        let mut prod = 1.0;
        let mut j = 1.0;
        while j <= k {
            prod *= x - j;
            j += 1.0;
        }
        return prod * gamma_positive_real(x - k);
    }
    let xm = x - 1.0;
    let w = xm + LANCZOS_G + 0.5;
    SQRT_TWO_PI * w.powf(xm + 0.5) * (-w).exp() * lanczos_sum_real(xm)
}

/// Gamma for real argument. Poles at non-positive integers.
pub fn gamma_real(x: f64) -> Result<f64> {
    if !x.is_finite() {
        return Err(Error::Domain(format!("gamma of non-finite argument {x}")));
    }
    if is_nonpositive_integer(x) {
        return Err(Error::Pole { re: x, im: 0.0 });
    }
    if x >= 0.5 {
        Ok(gamma_positive_real(x))
    } else {
        // reflection: Gamma(x) Gamma(1-x) = pi / sin(pi x)
        Ok(PI / (sin_pi(x) * gamma_positive_real(1.0 - x)))
    }
}

/// ln Gamma(x) for real x > 0.
pub fn ln_gamma(x: f64) -> Result<f64> {
    if !(x > 0.0) || !x.is_finite() {
        return Err(Error::Domain(format!("ln_gamma requires x > 0, got {x}")));
    }
    let xm = x - 1.0;
    let w = xm + LANCZOS_G + 0.5;
    Ok(LN_SQRT_TWO_PI + (xm + 0.5) * w.ln() - w + lanczos_sum_real(xm).ln())
}

/// Gamma(z) for complex z.
///
/// Relative accuracy ~1e-14 on the principal domain; analytic continuation by
/// reflection for Re(z) < 1/2.
pub fn gamma(z: Complex64) -> Result<EvalResult> {
    if !z.re.is_finite() || !z.im.is_finite() {
        return Err(Error::Domain("gamma of non-finite argument".into()));
    }
    if z.im == 0.0 {
        let v = gamma_real(z.re)?;
        return Ok(EvalResult::real(v, 5e-15 * v.abs(), Method::ClosedForm));
    }
    let v = if z.re >= 0.5 {
        let zm = z - 1.0;
        let w = zm + LANCZOS_G + 0.5;
        SQRT_TWO_PI * w.powc(zm + 0.5) * (-w).exp() * lanczos_sum_complex(zm)
    } else {
        let zm = -z; // Gamma(1 - z) via principal Lanczos
        let w = zm + LANCZOS_G + 0.5;
        let g1mz = SQRT_TWO_PI * w.powc(zm + 0.5) * (-w).exp() * lanczos_sum_complex(zm);
        Complex64::new(PI, 0.0) / ((z * PI).sin() * g1mz)
    };
    Ok(EvalResult::complex(v, 1e-14 * v.norm(), Method::ClosedForm))
}

/// Reciprocal Gamma, entire: exactly 0 at non-positive integers.
pub fn reciprocal_gamma(z: Complex64) -> Complex64 {
    if z.im == 0.0 {
        Complex64::new(rgamma_real(z.re), 0.0)
    } else if z.re >= 0.5 {
        let zm = z - 1.0;
        let w = zm + LANCZOS_G + 0.5;
        (SQRT_TWO_PI * w.powc(zm + 0.5) * (-w).exp() * lanczos_sum_complex(zm)).inv()
    } else {
        let zm = -z;
        let w = zm + LANCZOS_G + 0.5;
        let g1mz = SQRT_TWO_PI * w.powc(zm + 0.5) * (-w).exp() * lanczos_sum_complex(zm);
        (z * PI).sin() * g1mz / PI
    }
}

/// Reciprocal Gamma on the real line: 1/Gamma(x), zero at x = 0, -1, -2, ...
pub fn rgamma_real(x: f64) -> f64 {
    if !x.is_finite() {
        return f64::NAN;
    }
    if x >= 0.5 {
        if x > 170.0 {
            // avoid overflow of Gamma itself; below ~1e-305 this flushes to 0
            let ln = LN_SQRT_TWO_PI + (x - 0.5) * (x - 1.0 + LANCZOS_G + 0.5).ln()
                - (x - 1.0 + LANCZOS_G + 0.5)
                + lanczos_sum_real(x - 1.0).ln();
            return (-ln).exp();
        }
        1.0 / gamma_positive_real(x)
    } else {
        // 1/Gamma(x) = sin(pi x) Gamma(1 - x) / pi, exact 0 at the poles
        let s = sin_pi(x);
        if s == 0.0 {
            return 0.0;
        }
        let y = 1.0 - x;
        if y > 170.0 {
            let ln = LN_SQRT_TWO_PI + (y - 0.5) * (y - 1.0 + LANCZOS_G + 0.5).ln()
                - (y - 1.0 + LANCZOS_G + 0.5)
                + lanczos_sum_real(y - 1.0).ln()
                + (s.abs() / PI).ln();
            return s.signum() * ln.exp();
        }
        s * gamma_positive_real(y) / PI
    }
}

/// Error function, |erf| < 1.
pub fn erf(x: f64) -> Result<f64> {
    Ok(1.0 - erfc(x)?)
}

/// Complementary error function: Maclaurin series for |x| <= 2.5, Lentz
/// continued fraction beyond.
pub fn erfc(x: f64) -> Result<f64> {
    if !x.is_finite() {
        return Err(Error::Domain(format!("erfc of non-finite argument {x}")));
    }
    if x < 0.0 {
        return Ok(2.0 - erfc(-x)?);
    }
    if x <= 1.5 {
        // erf(x) = 2/sqrt(pi) * sum (-1)^n x^(2n+1) / (n! (2n+1))
        let x2 = x * x;
        let mut term = x;
        let mut sum = 0.0;
        for n in 0..200 {
            sum += term / (2 * n + 1) as f64;
            term *= -x2 / (n + 1) as f64;
            if term.abs() < 1e-18 * sum.abs().max(1e-30) {
                break;
            }
        }
        Ok(1.0 - TWO_OVER_SQRT_PI * sum)
    } else if x > 27.0 {
        Ok(0.0) // below the smallest positive normal
    } else {
        // erfc(x) = e^{-x^2}/sqrt(pi) * 1/(x + 1/(2x + 2/(x + 3/(2x + ...))))
        // evaluated by the modified Lentz algorithm
        let tiny = 1e-300;
        let mut f = x;
        let mut c = f;
        let mut d = 0.0;
        for k in 1..200 {
            // K-fraction: x + (1/2)/(x + 1/(x + (3/2)/(x + 2/(x + ...))))
            let a = 0.5 * k as f64;
            d = x + a * d;
            if d.abs() < tiny {
                d = tiny;
            }
            c = x + a / c;
            if c.abs() < tiny {
                c = tiny;
            }
            d = 1.0 / d;
            let delta = c * d;
            f *= delta;
            if (delta - 1.0).abs() < 1e-16 {
                break;
            }
        }
        Ok((-x * x).exp() / (f * PI.sqrt()))
    }
}

const AI_0: f64 = 0.355_028_053_887_817_2; // Ai(0)
const AIP_0: f64 = -0.258_819_403_792_806_8; // Ai'(0)
const AIRY_SWITCH: f64 = 7.5;

/// Airy Ai and Ai' from the Maclaurin series (|x| <= 7.5).
fn airy_series(x: f64) -> (f64, f64) {
    let x3 = x * x * x;
    // f = sum a_k x^{3k},        a_0 = 1, ratio x^3 / ((3k-1)(3k))
    // g = sum b_k x^{3k+1},      b_0 = x, ratio x^3 / ((3k)(3k+1))
    let mut tf = 1.0;
    let mut tg = x;
    let mut f = tf;
    let mut g = tg;
    let mut fp = 0.0; // f' = sum 3k a_k x^{3k-1}
    let mut gp = 1.0; // g' = sum (3k+1) b_k x^{3k}
    for k in 1..80 {
        let kk = k as f64;
        tf *= x3 / ((3.0 * kk - 1.0) * (3.0 * kk));
        tg *= x3 / ((3.0 * kk) * (3.0 * kk + 1.0));
        f += tf;
        g += tg;
        if x != 0.0 {
            fp += 3.0 * kk * tf / x;
            gp += (3.0 * kk + 1.0) * tg / x;
        }
        if tf.abs() < 1e-18 * f.abs().max(1.0) && tg.abs() < 1e-18 * g.abs().max(1.0) {
            break;
        }
    }
    let ai = AI_0 * f + AIP_0 * g;
    let aip = AI_0 * fp + AIP_0 * gp;
    (ai, aip)
}

/// u_k, v_k coefficients of the Airy asymptotic expansions; truncated at the
/// smallest term.
fn airy_asymptotic_pos(x: f64) -> (f64, f64) {
    let zeta = 2.0 / 3.0 * x.powf(1.5);
    let mut u = 1.0;
    let mut su = 0.0;
    let mut sv = 0.0;
    let mut sign = 1.0;
    let mut best = f64::INFINITY;
    for k in 0..40 {
        let v = if k == 0 {
            1.0
        } else {
            (6.0 * k as f64 + 1.0) / (1.0 - 6.0 * k as f64) * u
        };
        let tu = sign * u / zeta.powi(k as i32);
        let tv = sign * v / zeta.powi(k as i32);
        if tu.abs() > best {
            break; // divergence onset
        }
        best = tu.abs();
        su += tu;
        sv += tv;
        sign = -sign;
        let kk = (k + 1) as f64;
        u *= (6.0 * kk - 5.0) * (6.0 * kk - 3.0) * (6.0 * kk - 1.0) / ((2.0 * kk - 1.0) * 216.0 * kk);
    }
    let pre = (-zeta).exp() / (2.0 * PI.sqrt() * x.powf(0.25));
    (pre * su, -x.powf(0.25) * (-zeta).exp() / (2.0 * PI.sqrt()) * sv)
}

fn airy_asymptotic_neg(xabs: f64) -> (f64, f64) {
    let zeta = 2.0 / 3.0 * xabs.powf(1.5);
    // u_k, v_k tables up to the optimal truncation
    let mut u = vec![1.0];
    for k in 1..40 {
        let kk = k as f64;
        let prev = u[k - 1];
        u.push(prev * (6.0 * kk - 5.0) * (6.0 * kk - 3.0) * (6.0 * kk - 1.0) / ((2.0 * kk - 1.0) * 216.0 * kk));
    }
    let v: Vec<f64> = u
        .iter()
        .enumerate()
        .map(|(k, &uk)| if k == 0 { 1.0 } else { (6.0 * k as f64 + 1.0) / (1.0 - 6.0 * k as f64) * uk })
        .collect();
    let mut s_even_u = 0.0;
    let mut s_odd_u = 0.0;
    let mut s_even_v = 0.0;
    let mut s_odd_v = 0.0;
    let mut sign = 1.0;
    let mut best = f64::INFINITY;
    for k in 0.. {
        let i_even = 2 * k;
        let i_odd = 2 * k + 1;
        if i_odd >= u.len() {
            break;
        }
        let te = u[i_even] / zeta.powi(i_even as i32);
        if te.abs() > best {
            break;
        }
        best = te.abs();
        s_even_u += sign * te;
        s_odd_u += sign * u[i_odd] / zeta.powi(i_odd as i32);
        s_even_v += sign * v[i_even] / zeta.powi(i_even as i32);
        s_odd_v += sign * v[i_odd] / zeta.powi(i_odd as i32);
        sign = -sign;
    }
    let phase = zeta - PI / 4.0;
    let ai = (phase.cos() * s_even_u + phase.sin() * s_odd_u) / (PI.sqrt() * xabs.powf(0.25));
    let aip = xabs.powf(0.25) / PI.sqrt() * (phase.sin() * s_even_v - phase.cos() * s_odd_v);
    (ai, aip)
}

/// Airy function Ai(x); absolute error <= 1e-10 on [-10, 10].
pub fn airy_ai(x: f64) -> Result<f64> {
    Ok(airy_both(x)?.0)
}

/// First derivative Ai'(x).
pub fn airy_ai_prime(x: f64) -> Result<f64> {
    Ok(airy_both(x)?.1)
}

/// (Ai, Ai') evaluated together.
pub fn airy_both(x: f64) -> Result<(f64, f64)> {
    if !x.is_finite() {
        return Err(Error::Domain(format!("airy of non-finite argument {x}")));
    }
    if x.abs() <= AIRY_SWITCH {
        Ok(airy_series(x))
    } else if x > 0.0 {
        Ok(airy_asymptotic_pos(x))
    } else {
        Ok(airy_asymptotic_neg(-x))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn assert_close(a: f64, b: f64, tol: f64, what: &str) {
        assert!(
            (a - b).abs() <= tol,
            "{what}: {a} vs {b} (diff {:e}, tol {tol:e})",
            (a - b).abs()
        );
    }

    #[test]
    fn gamma_reference_values() {
        // N[Gamma[x], 17]
        let cases = [
            (0.1, 9.5135076986687313),
            (0.5, 1.772453850905516),
            (1.0, 1.0),
            (1.5, 0.88622692545275801),
            (5.0, 24.0),
            (7.5, 1871.2543057977883),
            (20.5, 5.406242982335075e17),
            (171.0, 7.257415615307999e306),
            (-0.5, -3.5449077018110321),
            (-1.5, 2.3632718012073547),
            (-5.5, 0.010912654781909863),
        ];
        for (x, want) in cases {
            let got = gamma_real(x).unwrap();
            assert!(
                ((got - want) / want).abs() < 1e-13,
                "gamma({x}) = {got}, want {want}"
            );
        }
    }

    #[test]
    fn gamma_poles_reported() {
        for x in [0.0, -1.0, -2.0, -7.0] {
            assert!(matches!(gamma_real(x), Err(Error::Pole { .. })));
        }
        assert!(gamma(Complex64::new(-3.0, 0.0)).is_err());
    }

    #[test]
    fn gamma_complex_reference() {
        let g = gamma(Complex64::new(2.5, 1.5)).unwrap().value;
        assert_close(g.re, 0.30993622584074135, 1e-13, "re gamma(2.5+1.5i)");
        assert_close(g.im, 0.73408427362148134, 1e-13, "im gamma(2.5+1.5i)");
        let g = gamma(Complex64::new(-1.2, 0.7)).unwrap().value;
        assert_close(g.re, 0.17409591618176725, 1e-13, "re gamma(-1.2+0.7i)");
        assert_close(g.im, 0.70690945027145355, 1e-13, "im gamma(-1.2+0.7i)");
        let g = gamma(Complex64::new(0.5, -3.0)).unwrap().value;
        assert_close(g.re, 0.021445670552430646, 1e-15, "re gamma(0.5-3i)");
        assert_close(g.im, -0.0068653648372616779, 1e-15, "im gamma(0.5-3i)");
    }

    #[test]
    fn ln_gamma_matches() {
        assert_close(ln_gamma(171.0).unwrap(), 706.57306224578735, 1e-11, "lngamma(171)");
        for x in [0.2, 1.0, 3.7, 42.0] {
            assert_close(
                ln_gamma(x).unwrap(),
                gamma_real(x).unwrap().ln(),
                1e-12,
                "lngamma consistency",
            );
        }
    }

    #[test]
    fn rgamma_zero_at_poles_and_continuous() {
        assert_eq!(rgamma_real(0.0), 0.0);
        assert_eq!(rgamma_real(-1.0), 0.0);
        assert_eq!(rgamma_real(-42.0), 0.0);
        // 1/Gamma crosses zero at -n with slope (-1)^n n!, so the gap over
        // +-1e-8 is 2e-8 * n!; below 1e-6 for n <= 4
        for n in 0..5u32 {
            let x = -(n as f64);
            let a = rgamma_real(x - 1e-8);
            let b = rgamma_real(x + 1e-8);
            assert!((a - b).abs() < 1e-6, "rgamma jump at {x}: {a} vs {b}");
        }
        for n in 5..9u32 {
            let x = -(n as f64);
            let fact: f64 = (1..=n).map(|k| k as f64).product();
            let a = rgamma_real(x - 1e-8);
            let b = rgamma_real(x + 1e-8);
            assert!((a - b).abs() < 3e-8 * fact, "rgamma slope at {x}: {a} vs {b}");
        }
        assert_close(rgamma_real(1.0), 1.0, 1e-15, "rgamma(1)");
        assert_close(rgamma_real(0.5), 0.5641895835477563, 1e-14, "rgamma(0.5)");
        assert_close(rgamma_real(-0.5), 1.0 / -3.5449077018110321, 1e-14, "rgamma(-0.5)");
    }

    #[test]
    fn gamma_reflection_and_recurrence_random() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(42);
        let mut checked = 0;
        while checked < 200 {
            let z: f64 = rng.gen_range(-5.0..5.0);
            if (z - z.round()).abs() < 1e-3 {
                continue;
            }
            let g = gamma_real(z).unwrap();
            let g1mz = gamma_real(1.0 - z).unwrap();
            let lhs = g * g1mz * sin_pi(z) / PI;
            assert!(
                (lhs - 1.0).abs() < 1e-12,
                "reflection at z = {z}: {lhs}"
            );
            let gz1 = gamma_real(z + 1.0).unwrap();
            assert!(
                ((gz1 - z * g) / gz1).abs() < 1e-13,
                "recurrence at z = {z}"
            );
            checked += 1;
        }
    }

    #[test]
    fn erfc_reference_values() {
        let cases = [
            (0.0, 1.0),
            (0.3, 0.67137324054087258),
            (0.7, 0.32219880616258156),
            (1.0, 0.15729920705028513),
            (2.5, 0.00040695201744495894),
            (5.0, 1.5374597944280349e-12),
            (10.0, 2.0884875837625448e-45),
            (26.0, 5.6631924088561428e-296),
        ];
        for (x, want) in cases {
            let got = erfc(x).unwrap();
            let tol = if want > 1e-200 { 1e-13 * want } else { want };
            assert!(
                (got - want).abs() <= tol.max(1e-318),
                "erfc({x}) = {got:e}, want {want:e}"
            );
        }
    }

    #[test]
    fn erfc_symmetry_and_identity() {
        for x in [0.0, 0.2, 0.7, 1.3, 2.2, 3.0, 4.5] {
            let idu = erf(x).unwrap() + erfc(x).unwrap();
            assert_close(idu, 1.0, 1e-14, "erf + erfc");
            let sym = erfc(-x).unwrap();
            assert_close(sym, 2.0 - erfc(x).unwrap(), 1e-14, "erfc(-x) = 2 - erfc(x)");
        }
        for x in [0.1, 1.0, 3.0, 8.0] {
            assert!(erfc(x).unwrap() > 0.0 && erfc(x).unwrap() < 2.0);
        }
    }

    #[test]
    fn airy_reference_values() {
        // N[AiryAi[x], 17] and derivative
        let cases = [
            (-10.0, 0.040241238486443191, 0.99626504413279006),
            (-7.5, 0.32177571638064788, 0.3188095066985546),
            (-5.0, 0.35076100902411432, 0.32719281855444314),
            (-2.0, 0.22740742820168558, 0.61825902074169104),
            (-1.0, 0.53556088329235212, -0.010160567116645209),
            (0.0, 0.35502805388781724, -0.2588194037928068),
            (0.5, 0.23169360648083349, -0.22491053266468389),
            (1.0, 0.13529241631288142, -0.15914744129679321),
            (2.0, 0.034924130423274379, -0.053090384433653632),
            (5.0, 0.00010834442813607442, -0.00024741389086846248),
            (7.5, 1.9172560675134308e-7, -5.3127139597205447e-7),
            (10.0, 1.1047532552898686e-10, -3.5206336767389236e-10),
        ];
        for (x, ai, aip) in cases {
            let (gai, gaip) = airy_both(x).unwrap();
            assert!(
                (gai - ai).abs() <= 1e-10,
                "Ai({x}) = {gai:e}, want {ai:e}, diff {:e}",
                (gai - ai).abs()
            );
            assert!(
                (gaip - aip).abs() <= 1e-10,
                "Ai'({x}) = {gaip:e}, want {aip:e}, diff {:e}",
                (gaip - aip).abs()
            );
        }
    }

    #[test]
    fn airy_decays_monotone_for_large_x() {
        let mut prev = airy_ai(3.0).unwrap();
        for i in 1..30 {
            let x = 3.0 + 0.5 * i as f64;
            let cur = airy_ai(x).unwrap();
            assert!(cur > 0.0 && cur < prev, "Ai not decaying at {x}");
            prev = cur;
        }
    }
}
