//! Truncated Taylor series ("jets") of order four in one variable.
//!
//! Evaluating a parametrization with [`Jet::variable`] in place of the
//! parameter yields the value together with its first four derivatives,
//! exact to rounding. All analytic shapes derive their curvature data and
//! derivative fields this way, so no hand-differentiated formulas are
//! carried around.

use std::ops::{Add, Div, Mul, Neg, Sub};

/// Taylor coefficients `c[k] = f^(k)(t0) / k!` about an expansion point.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Jet {
    pub c: [f64; 5],
}

const FACT: [f64; 5] = [1.0, 1.0, 2.0, 6.0, 24.0];

impl Jet {
    pub fn constant(v: f64) -> Self {
        Jet { c: [v, 0.0, 0.0, 0.0, 0.0] }
    }

    /// The identity function `t` expanded about `t0 = v`.
    pub fn variable(v: f64) -> Self {
        Jet { c: [v, 1.0, 0.0, 0.0, 0.0] }
    }

    pub fn value(&self) -> f64 {
        self.c[0]
    }

    /// k-th derivative, `k <= 4`.
    pub fn derivative(&self, k: usize) -> f64 {
        self.c[k] * FACT[k]
    }

    /// Composition with an outer function given by its derivatives
    /// `outer[k] = g^(k)(f(t0))`. Returns the jet of `g(f(t))`.
    fn lift(self, outer: [f64; 5]) -> Self {
        // Horner evaluation of sum_k outer[k]/k! * h^k where h = self - c0
        // is nilpotent (h.c[0] == 0).
        let mut h = self;
        h.c[0] = 0.0;
        let mut out = Jet::constant(outer[4] / FACT[4]);
        for k in (0..4).rev() {
            out = out * h + Jet::constant(outer[k] / FACT[k]);
        }
        out
    }

    pub fn recip(self) -> Self {
        let v = self.c[0];
        let v2 = v * v;
        let v3 = v2 * v;
        let v4 = v3 * v;
        let v5 = v4 * v;
        self.lift([1.0 / v, -1.0 / v2, 2.0 / v3, -6.0 / v4, 24.0 / v5])
    }

    pub fn sqrt(self) -> Self {
        let v = self.c[0];
        let s = v.sqrt();
        self.lift([
            s,
            0.5 / s,
            -0.25 / (s * v),
            0.375 / (s * v * v),
            -0.9375 / (s * v * v * v),
        ])
    }

    pub fn sin(self) -> Self {
        let (s, c) = self.c[0].sin_cos();
        self.lift([s, c, -s, -c, s])
    }

    pub fn cos(self) -> Self {
        let (s, c) = self.c[0].sin_cos();
        self.lift([c, -s, -c, s, c])
    }

    /// Jet of the derivative `f'` (one order of accuracy is lost).
    pub fn d(self) -> Self {
        let mut c = [0.0; 5];
        for k in 0..4 {
            c[k] = (k as f64 + 1.0) * self.c[k + 1];
        }
        Jet { c }
    }

    /// Jet of `f(t)/(t - t0)` for a jet with vanishing constant term,
    /// expanded about `t0`. Used for removable singularities; the constant
    /// coefficient is discarded and one order is lost.
    pub fn shift_down(self) -> Self {
        let mut c = [0.0; 5];
        c[..4].copy_from_slice(&self.c[1..5]);
        Jet { c }
    }

    pub fn powi(self, n: i32) -> Self {
        match n {
            0 => Jet::constant(1.0),
            1 => self,
            _ if n < 0 => self.powi(-n).recip(),
            _ => {
                let half = self.powi(n / 2);
                if n % 2 == 0 {
                    half * half
                } else {
                    half * half * self
                }
            }
        }
    }
}

impl Add for Jet {
    type Output = Jet;
    fn add(self, rhs: Jet) -> Jet {
        let mut c = self.c;
        for k in 0..5 {
            c[k] += rhs.c[k];
        }
        Jet { c }
    }
}

impl Sub for Jet {
    type Output = Jet;
    fn sub(self, rhs: Jet) -> Jet {
        let mut c = self.c;
        for k in 0..5 {
            c[k] -= rhs.c[k];
        }
        Jet { c }
    }
}

impl Mul for Jet {
    type Output = Jet;
    fn mul(self, rhs: Jet) -> Jet {
        let mut c = [0.0; 5];
        for i in 0..5 {
            for j in 0..5 - i {
                c[i + j] += self.c[i] * rhs.c[j];
            }
        }
        Jet { c }
    }
}

impl Div for Jet {
    type Output = Jet;
    fn div(self, rhs: Jet) -> Jet {
        self * rhs.recip()
    }
}

impl Neg for Jet {
    type Output = Jet;
    fn neg(self) -> Jet {
        let mut c = self.c;
        for x in &mut c {
            *x = -*x;
        }
        Jet { c }
    }
}

impl Mul<f64> for Jet {
    type Output = Jet;
    fn mul(self, rhs: f64) -> Jet {
        let mut c = self.c;
        for x in &mut c {
            *x *= rhs;
        }
        Jet { c }
    }
}

impl Add<f64> for Jet {
    type Output = Jet;
    fn add(self, rhs: f64) -> Jet {
        let mut c = self.c;
        c[0] += rhs;
        Jet { c }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fd4(f: impl Fn(f64) -> f64, t: f64, k: usize, h: f64) -> f64 {
        // central stencils, order 2
        match k {
            1 => (f(t + h) - f(t - h)) / (2.0 * h),
            2 => (f(t + h) - 2.0 * f(t) + f(t - h)) / (h * h),
            3 => (f(t + 2.0 * h) - 2.0 * f(t + h) + 2.0 * f(t - h) - f(t - 2.0 * h))
                / (2.0 * h * h * h),
            4 => (f(t + 2.0 * h) - 4.0 * f(t + h) + 6.0 * f(t) - 4.0 * f(t - h)
                + f(t - 2.0 * h))
                / (h * h * h * h),
            _ => unreachable!(),
        }
    }

    #[test]
    fn composite_function_derivatives_match_finite_differences() {
        let f = |t: f64| (t.sin() * 2.0 + 0.3).sqrt() / (1.2 + t.cos() * t.cos());
        let jf = |t: Jet| {
            (t.sin() * 2.0 + 0.3).sqrt() / (t.cos() * t.cos() + Jet::constant(1.2))
        };
        let t0 = 0.731;
        let j = jf(Jet::variable(t0));
        assert!((j.value() - f(t0)).abs() < 1e-14);
        for k in 1..=4 {
            // larger steps for higher derivatives to stay above roundoff
            let h = if k <= 2 { 1e-4 } else { 2e-2 };
            let fd = fd4(f, t0, k, h);
            let tol = if k <= 2 { 1e-6 } else { 2e-2 };
            assert!(
                (j.derivative(k) - fd).abs() < tol * (1.0 + fd.abs()),
                "k={k}: jet {} vs fd {}",
                j.derivative(k),
                fd
            );
        }
    }

    #[test]
    fn powi_matches_repeated_multiplication() {
        let t = Jet::variable(1.3);
        let a = t.powi(5);
        let b = t * t * t * t * t;
        for k in 0..5 {
            assert!((a.c[k] - b.c[k]).abs() < 1e-12 * (1.0 + b.c[k].abs()));
        }
    }

    #[test]
    fn recip_roundtrip() {
        let t = Jet::variable(0.42).sin() + 1.5;
        let r = t.recip() * t;
        assert!((r.c[0] - 1.0).abs() < 1e-14);
        for k in 1..5 {
            assert!(r.c[k].abs() < 1e-13);
        }
    }
}
