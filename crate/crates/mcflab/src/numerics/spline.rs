//! Cubic spline interpolation over arbitrary knots.
//!
//! Used by the remesher to reconstruct the underlying smooth curve from a
//! polygon before resampling at uniform arclength, and to transport vertex
//! scalar fields through a remesh. Periodic boundaries serve closed curves
//! and torus-type profiles; clamped boundaries serve pole-to-pole profiles
//! where the meridian tangent at the axis is known exactly.

/// End conditions for [`CubicSpline::fit`].
#[derive(Clone, Copy, Debug)]
pub enum Boundary {
    /// `S''` vanishes at both ends.
    Natural,
    /// Prescribed first derivatives at the first and last knot.
    Clamped { start: f64, end: f64 },
    /// Closed data: `values[0]` is also the value at `knots[0] + period`.
    Periodic { period: f64 },
}

/// Interpolating cubic spline with second-derivative representation.
#[derive(Clone, Debug)]
pub struct CubicSpline {
    knots: Vec<f64>,
    values: Vec<f64>,
    second: Vec<f64>,
    periodic: Option<f64>,
}

fn solve_tridiagonal(sub: &[f64], diag: &mut [f64], sup: &[f64], rhs: &mut [f64]) {
    let n = diag.len();
    for i in 1..n {
        let w = sub[i] / diag[i - 1];
        diag[i] -= w * sup[i - 1];
        rhs[i] -= w * rhs[i - 1];
    }
    rhs[n - 1] /= diag[n - 1];
    for i in (0..n - 1).rev() {
        rhs[i] = (rhs[i] - sup[i] * rhs[i + 1]) / diag[i];
    }
}

/// Cyclic tridiagonal solve via the Sherman-Morrison correction.
/// `corner` is the coupling between the last and first unknowns.
fn solve_cyclic(sub: &[f64], diag: &[f64], sup: &[f64], corner: (f64, f64), rhs: &[f64]) -> Vec<f64> {
    let n = diag.len();
    assert!(n >= 3);
    let (last_first, first_last) = corner; // A[n-1][0], A[0][n-1]
    let gamma = -diag[0];
    let mut d1: Vec<f64> = diag.to_vec();
    d1[0] -= gamma;
    d1[n - 1] -= first_last * last_first / gamma;
    let mut x = rhs.to_vec();
    let mut d_work = d1.clone();
    solve_tridiagonal(sub, &mut d_work, sup, &mut x);
    let mut u = vec![0.0; n];
    u[0] = gamma;
    u[n - 1] = last_first;
    let mut d_work = d1;
    solve_tridiagonal(sub, &mut d_work, sup, &mut u);
    let vx = x[0] + first_last / gamma * x[n - 1];
    let vu = u[0] + first_last / gamma * u[n - 1];
    let factor = vx / (1.0 + vu);
    for i in 0..n {
        x[i] -= factor * u[i];
    }
    x
}

impl CubicSpline {
    /// Fit a spline through `(knots[i], values[i])`. Knots must be strictly
    /// increasing; for periodic boundaries the closing interval is
    /// `knots[n-1] .. knots[0] + period`.
    pub fn fit(knots: &[f64], values: &[f64], boundary: Boundary) -> CubicSpline {
        let n = knots.len();
        assert_eq!(values.len(), n);
        assert!(n >= 3, "spline needs at least 3 points");
        for i in 1..n {
            assert!(knots[i] > knots[i - 1], "knots must increase");
        }
        match boundary {
            Boundary::Natural | Boundary::Clamped { .. } => {
                let h: Vec<f64> = (0..n - 1).map(|i| knots[i + 1] - knots[i]).collect();
                let mut sub = vec![0.0; n];
                let mut diag = vec![0.0; n];
                let mut sup = vec![0.0; n];
                let mut rhs = vec![0.0; n];
                for i in 1..n - 1 {
                    sub[i] = h[i - 1] / 6.0;
                    diag[i] = (h[i - 1] + h[i]) / 3.0;
                    sup[i] = h[i] / 6.0;
                    rhs[i] = (values[i + 1] - values[i]) / h[i]
                        - (values[i] - values[i - 1]) / h[i - 1];
                }
                match boundary {
                    Boundary::Natural => {
                        diag[0] = 1.0;
                        diag[n - 1] = 1.0;
                    }
                    Boundary::Clamped { start, end } => {
                        diag[0] = h[0] / 3.0;
                        sup[0] = h[0] / 6.0;
                        rhs[0] = (values[1] - values[0]) / h[0] - start;
                        sub[n - 1] = h[n - 2] / 6.0;
                        diag[n - 1] = h[n - 2] / 3.0;
                        rhs[n - 1] = end - (values[n - 1] - values[n - 2]) / h[n - 2];
                    }
                    Boundary::Periodic { .. } => unreachable!(),
                }
                let mut second = rhs;
                solve_tridiagonal(&sub, &mut diag, &sup, &mut second);
                CubicSpline {
                    knots: knots.to_vec(),
                    values: values.to_vec(),
                    second,
                    periodic: None,
                }
            }
            Boundary::Periodic { period } => {
                assert!(period > knots[n - 1] - knots[0]);
                // unknowns M_0..M_{n-1}; interval i spans knots[i]..knots[i+1]
                // with the closing interval wrapping to knots[0]+period.
                let h: Vec<f64> = (0..n)
                    .map(|i| {
                        if i + 1 < n {
                            knots[i + 1] - knots[i]
                        } else {
                            knots[0] + period - knots[n - 1]
                        }
                    })
                    .collect();
                let val = |i: usize| values[i % n];
                let mut sub = vec![0.0; n];
                let mut diag = vec![0.0; n];
                let mut sup = vec![0.0; n];
                let mut rhs = vec![0.0; n];
                for i in 0..n {
                    let hm = h[(i + n - 1) % n];
                    let hp = h[i];
                    sub[i] = hm / 6.0;
                    diag[i] = (hm + hp) / 3.0;
                    sup[i] = hp / 6.0;
                    rhs[i] = (val(i + 1) - val(i)) / hp - (val(i) - val(i + n - 1)) / hm;
                }
                let corner = (sub[0], sup[n - 1]); // A[0][n-1] = h_{n-1}/6 = sub[0]
                let second = solve_cyclic(&sub, &diag, &sup, (corner.1, corner.0), &rhs);
                CubicSpline {
                    knots: knots.to_vec(),
                    values: values.to_vec(),
                    second,
                    periodic: Some(period),
                }
            }
        }
    }

    fn locate(&self, t: f64) -> (usize, usize, f64, f64) {
        // returns (i, i+1 index, x_i, h_i) with t in [x_i, x_i + h_i]
        let n = self.knots.len();
        match self.periodic {
            None => {
                let t = t.clamp(self.knots[0], self.knots[n - 1]);
                let i = match self
                    .knots
                    .binary_search_by(|k| k.partial_cmp(&t).unwrap())
                {
                    Ok(i) => i.min(n - 2),
                    Err(i) => i.saturating_sub(1).min(n - 2),
                };
                (i, i + 1, self.knots[i], self.knots[i + 1] - self.knots[i])
            }
            Some(period) => {
                let base = self.knots[0];
                let mut tt = (t - base).rem_euclid(period) + base;
                if tt >= base + period {
                    tt = base;
                }
                let i = match self
                    .knots
                    .binary_search_by(|k| k.partial_cmp(&tt).unwrap())
                {
                    Ok(i) => i,
                    Err(i) => i - 1,
                };
                if i == n - 1 {
                    (n - 1, 0, self.knots[n - 1], base + period - self.knots[n - 1])
                } else {
                    (i, i + 1, self.knots[i], self.knots[i + 1] - self.knots[i])
                }
            }
        }
    }

    pub fn eval(&self, t: f64) -> f64 {
        let (i, j, xi, h) = self.locate(t);
        let t = if self.periodic.is_some() {
            let period = self.periodic.unwrap();
            (t - self.knots[0]).rem_euclid(period) + self.knots[0]
        } else {
            t.clamp(self.knots[0], *self.knots.last().unwrap())
        };
        let a = (xi + h - t) / h;
        let b = (t - xi) / h;
        let (mi, mj) = (self.second[i], self.second[j]);
        let (yi, yj) = (self.values[i], self.values[j]);
        a * yi
            + b * yj
            + ((a * a * a - a) * mi + (b * b * b - b) * mj) * h * h / 6.0
    }
}
