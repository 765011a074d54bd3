use num_complex::Complex64;

/// Representation that produced an [`EvalResult`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    Series,
    Asymptotic,
    SpectralIntegral,
    ClosedForm,
    Quadrature,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::Series => "series",
            Method::Asymptotic => "asymptotic",
            Method::SpectralIntegral => "spectral_integral",
            Method::ClosedForm => "closed_form",
            Method::Quadrature => "quadrature",
        }
    }
}

/// Uniform return of every special-function evaluation: the value, an
/// estimate of the absolute error, and the representation used.
///
/// `limit_warning` flags evaluations close to a singular parameter limit
/// (e.g. the M-Wright delta limit nu -> 1) where the estimate is best-effort.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvalResult {
    pub value: Complex64,
    pub abs_err: f64,
    pub method: Method,
    pub limit_warning: bool,
}

impl EvalResult {
    pub fn real(value: f64, abs_err: f64, method: Method) -> Self {
        EvalResult {
            value: Complex64::new(value, 0.0),
            abs_err,
            method,
            limit_warning: false,
        }
    }

    pub fn complex(value: Complex64, abs_err: f64, method: Method) -> Self {
        EvalResult {
            value,
            abs_err,
            method,
            limit_warning: false,
        }
    }

    pub fn with_limit_warning(mut self) -> Self {
        self.limit_warning = true;
        self
    }

    /// Real part of the value; most evaluations in this crate are real.
    pub fn re(&self) -> f64 {
        self.value.re
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn abs_err_finite_with_finite_value() {
        let r = EvalResult::real(1.0, 1e-14, Method::Series);
        assert!(r.value.re.is_finite());
        assert!(r.abs_err >= 0.0 && r.abs_err.is_finite());
        assert!(!r.limit_warning);
    }
}
